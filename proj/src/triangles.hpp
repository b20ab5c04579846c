#pragma once

#include <vector>

#include "binmat.hpp"

namespace acutecube {

// Row-block multiplicities of a minimal 0/1-triangle representation:
// a rows (1,1), b rows (1,0), c rows (0,1), d rows (0,0) after the zero
// column, with a <= b <= c, 1 <= a+b and a+b+c+d = n.
// Right triangle iff a == 0, acute iff a > 0.
struct TriangleShape {
    int a = 0, b = 0, c = 0, d = 0;
    bool right() const { return a == 0; }
    bool acute() const { return a > 0; }
    bool operator==(const TriangleShape&) const = default;
};

enum class TriangleFilter { All, Right, Acute };

// Every shape in I^n satisfying the filter, in lexicographic (a,b,c) order.
std::vector<TriangleShape> enumerate_triangles(int n, TriangleFilter filter);

// The n x 3 minimal matrix representation of the shape.
BinaryMatrixRep shape_to_matrix(const TriangleShape& s, int n);

// Closed forms: floor(n/2)*ceil(n/2) right triangles and
// floor((2n^3+3n^2-6n+9)/72) acute ones.
long long count_right(int n);
long long count_acute(int n);

}  // namespace acutecube
