#pragma once

#include <optional>
#include <string>

#include "acute_enum.hpp"
#include "hyperoct.hpp"

namespace acutecube {

// "table" mirrors the condensed layout (zero columns omitted, counts
// right-aligned); "json" uses decimal strings for counts; "csv" one row per
// induced type with blank cells for absent lengths.
std::string render_cycle_index(const CycleIndexTable& table, const std::string& format);

std::string cycle_index_to_json(const CycleIndexTable& table);
CycleIndexTable cycle_index_from_json(const std::string& text);

// Simplex-count row (k = 1..n+1) in "plain", "csv" or "json".
std::string render_simplex_counts(const CycleIndexTable& table, const std::string& format);

std::string render_triangle_counts(int n, const std::string& format);
std::string render_triangle_list(int n, const std::string& filter_name);

// "jsonl": one {"n","nu","det","hessenberg"} object per simplex;
// "matrix": text-format blocks separated by blank lines.
std::string render_census(const CensusResult& census, const std::string& format);

std::string render_hessenberg_level(int n, bool verify);

// JSON alternative to the matrix text format:
// {"n":int,"k":int,"columns":[label,...]} with columns as vertex labels.
std::string matrix_to_json(const BinaryMatrixRep& P);
BinaryMatrixRep matrix_from_json(const std::string& text);
std::string render_kepler(int depth);

// Disk cache for cycle-index tables: versioned JSON with a checksum over the
// payload; any mismatch triggers recompute.
class CycleIndexCache {
  public:
    explicit CycleIndexCache(std::string dir) : dir_(std::move(dir)) {}

    // Returns the cached table if present and intact.
    std::optional<CycleIndexTable> load(int n) const;
    void store(const CycleIndexTable& table) const;

    CycleIndexTable get_or_compute(int n, int cap) const;

    static std::string default_directory();

  private:
    std::string path_for(int n) const;
    std::string dir_;
};

}  // namespace acutecube
