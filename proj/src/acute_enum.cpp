#include "acute_enum.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "triangles.hpp"

namespace acutecube {

namespace {

int ambient_of(const std::vector<std::uint32_t>& columns) {
    std::uint32_t all = 0;
    for (std::uint32_t c : columns) all |= c;
    return std::bit_width(all);
}

// C^k(S) over the node's own ambient cube: every vertex whose orthogonal
// projection lands in the interior of the simplex.
std::vector<std::uint32_t> candidate_set(const SimplexNode& node, const ExactGramian& gram) {
    std::vector<std::uint32_t> cands;
    const std::uint32_t limit = 1u << node.ambient;
    for (std::uint32_t v = 1; v < limit; ++v) {
        if (std::find(node.columns.begin(), node.columns.end(), v) != node.columns.end()) continue;
        std::vector<BigInt> y(gram.k);
        BigInt y_sum = 0;
        bool positive = true;
        for (int i = 0; positive && i < gram.k; ++i) {
            for (int j = 0; j < gram.k; ++j)
                y[i] += gram.adj.at(i, j) * std::popcount(node.columns[j] & v);
            if (y[i] <= 0) positive = false;
            y_sum += y[i];
        }
        if (positive && y_sum < gram.det) cands.push_back(v);
    }
    return cands;
}

// The One Neighbor Theorem: a node with as many vertices as its ambient
// dimension has at most two candidates, and two candidates are antipodal.
void check_one_neighbor(const SimplexNode& node, const ExactGramian& gram, CensusResult* stats) {
    if (stats == nullptr || node.vertex_count() != node.ambient) return;
    auto cands = candidate_set(node, gram);
    ++stats->one_neighbor_checks;
    bool ok = cands.size() <= 2;
    if (ok && cands.size() == 2) ok = (cands[0] ^ cands[1]) == (1u << node.ambient) - 1;
    if (!ok) ++stats->one_neighbor_violations;
}

bool row_numbers_non_increasing(const std::vector<std::uint32_t>& columns, int n) {
    const int k = static_cast<int>(columns.size());
    std::uint32_t prev = ~0u;
    for (int r = 0; r < n; ++r) {
        std::uint32_t num = 0;
        for (int c = 0; c < k; ++c) num |= ((columns[c] >> r) & 1u) << (k - 1 - c);
        if (num > prev) return false;
        prev = num;
    }
    return true;
}

std::vector<std::uint32_t> with_zero_column(const std::vector<std::uint32_t>& columns) {
    std::vector<std::uint32_t> full;
    full.reserve(columns.size() + 1);
    full.push_back(0);
    full.insert(full.end(), columns.begin(), columns.end());
    return full;
}

void grow(SimplexNode node, CensusResult& result, std::mutex& sink_mutex) {
    if (node.vertex_count() == node.n + 1) {
        CensusEntry entry{BinaryMatrixRep(node.n, with_zero_column(node.columns)),
                          abs(bareiss_det(columns_to_matrix(node.columns, node.n)))};
        std::lock_guard<std::mutex> lock(sink_mutex);
        result.entries.push_back(std::move(entry));
        return;
    }
    CensusResult stats;
    auto children = extend(node, &stats);
    {
        std::lock_guard<std::mutex> lock(sink_mutex);
        result.one_neighbor_checks += stats.one_neighbor_checks;
        result.one_neighbor_violations += stats.one_neighbor_violations;
    }
    for (auto& child : children) grow(std::move(child), result, sink_mutex);
}

}  // namespace

std::vector<SimplexNode> seed_triangles(int n) {
    std::vector<SimplexNode> seeds;
    if (n < 3) return seeds;
    for (const auto& shape : enumerate_triangles(n, TriangleFilter::Acute)) {
        SimplexNode node;
        node.n = n;
        auto rep = shape_to_matrix(shape, n);
        node.columns = {rep.columns[1], rep.columns[2]};
        std::sort(node.columns.begin(), node.columns.end());
        node.ambient = ambient_of(node.columns);

        ExactGramian gram = ExactGramian::from_columns(node.columns);
        const std::uint32_t limit = 1u << node.ambient;
        const int spare = n - node.ambient;
        std::vector<std::pair<std::uint32_t, int>> base;
        for (std::uint32_t v = 1; v < limit; ++v) {
            if (v == node.columns[0] || v == node.columns[1]) continue;
            auto verdict = classify_extension(gram, node.columns, v, spare);
            if (verdict.rejected()) continue;
            base.emplace_back(v, verdict.extra_ones);
            if (verdict.extra_ones > 0) node.pending[v] = verdict.extra_ones;
        }
        // Lifting: a candidate needing m extra ones is acute once the
        // appended tail carries at least m ones.
        for (auto [v, m] : base)
            for (std::uint32_t w = 0; w < (1u << spare); ++w)
                if (std::popcount(w) >= m) node.acute_ext.push_back(v | (w << node.ambient));
        std::sort(node.acute_ext.begin(), node.acute_ext.end());
        seeds.push_back(std::move(node));
    }
    return seeds;
}

std::vector<SimplexNode> extend(const SimplexNode& node, CensusResult* stats) {
    std::vector<SimplexNode> children;
    if (node.vertex_count() > node.n) return children;
    if (node.acute_ext.empty()) return children;
    const std::uint32_t last = node.columns.back();
    for (std::uint32_t t : node.acute_ext) {
        if (t <= last) continue;  // column numbers must stay increasing
        auto child_cols = node.columns;
        child_cols.push_back(t);
        if (!row_numbers_non_increasing(with_zero_column(child_cols), node.n)) continue;
        if (!is_canonical(BinaryMatrixRep(node.n, with_zero_column(child_cols)))) continue;

        SimplexNode child;
        child.n = node.n;
        child.columns = std::move(child_cols);
        child.ambient = ambient_of(child.columns);
        ExactGramian gram = ExactGramian::from_columns(child.columns);
        // Acute extensions of a facet contain those of the simplex, so only
        // the parent's set needs re-testing.
        for (std::uint32_t u : node.acute_ext) {
            if (u == t) continue;
            auto verdict = classify_extension(gram, child.columns, u, 0);
            if (verdict.acute()) child.acute_ext.push_back(u);
        }
        check_one_neighbor(child, gram, stats);
        children.push_back(std::move(child));
    }
    return children;
}

CensusResult enumerate_acute(int n, int jobs, int cap) {
    if (n < 3) throw std::invalid_argument("enumerate_acute: n must be >= 3");
    if (n > cap) throw std::out_of_range("enumerate_acute: census cap exceeded");
    if (jobs < 1) jobs = 1;

    CensusResult result;
    result.n = n;
    auto seeds = seed_triangles(n);
    {
        // Seed-level One Neighbor checks (triangles filling their ambient cube).
        for (const auto& seed : seeds) {
            CensusResult stats;
            check_one_neighbor(seed, ExactGramian::from_columns(seed.columns), &stats);
            result.one_neighbor_checks += stats.one_neighbor_checks;
            result.one_neighbor_violations += stats.one_neighbor_violations;
        }
    }

    std::mutex sink_mutex;
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= seeds.size()) break;
            grow(seeds[i], result, sink_mutex);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::sort(result.entries.begin(), result.entries.end(),
              [](const CensusEntry& a, const CensusEntry& b) { return a.rep.columns < b.rep.columns; });
    return result;
}

BigInt max_abs_det(int n, int jobs, int cap) {
    auto result = enumerate_acute(n, jobs, cap);
    BigInt best = 0;
    for (const auto& entry : result.entries) best = std::max(best, entry.abs_det);
    return best;
}

IntMatrix columns_to_matrix(const std::vector<std::uint32_t>& columns, int n) {
    IntMatrix M(n, static_cast<int>(columns.size()));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < M.cols; ++c) M.at(r, c) = (columns[c] >> r) & 1;
    return M;
}

}  // namespace acutecube
