#include "triangles.hpp"

#include <stdexcept>

namespace acutecube {

std::vector<TriangleShape> enumerate_triangles(int n, TriangleFilter filter) {
    if (n < 2) throw std::invalid_argument("enumerate_triangles: n must be >= 2");
    std::vector<TriangleShape> out;
    // Lattice points of the tetrahedron a <= b <= c, a+b+c <= n with a+b >= 1.
    for (int a = 0; 3 * a <= n; ++a) {
        if (filter == TriangleFilter::Right && a > 0) break;
        if (filter == TriangleFilter::Acute && a == 0) continue;
        for (int b = a; a + 2 * b <= n; ++b) {
            if (a + b < 1) continue;
            for (int c = b; a + b + c <= n; ++c)
                out.push_back(TriangleShape{a, b, c, n - a - b - c});
        }
    }
    return out;
}

BinaryMatrixRep shape_to_matrix(const TriangleShape& s, int n) {
    if (s.a < 0 || s.a > s.b || s.b > s.c || s.a + s.b < 1 || s.d < 0 ||
        s.a + s.b + s.c + s.d != n)
        throw std::invalid_argument("shape_to_matrix: invalid triangle shape");
    std::uint32_t col1 = 0, col2 = 0;
    for (int r = 0; r < s.a; ++r) {
        col1 |= 1u << r;
        col2 |= 1u << r;
    }
    for (int r = s.a; r < s.a + s.b; ++r) col1 |= 1u << r;
    for (int r = s.a + s.b; r < s.a + s.b + s.c; ++r) col2 |= 1u << r;
    return BinaryMatrixRep(n, {0, col1, col2});
}

long long count_right(int n) {
    if (n < 2) throw std::invalid_argument("count_right: n must be >= 2");
    return static_cast<long long>(n / 2) * ((n + 1) / 2);
}

long long count_acute(int n) {
    if (n < 2) throw std::invalid_argument("count_acute: n must be >= 2");
    long long nn = n;
    return (2 * nn * nn * nn + 3 * nn * nn - 6 * nn + 9) / 72;
}

}  // namespace acutecube
