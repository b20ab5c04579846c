#include "render.hpp"

#include <cstdlib>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hessenberg.hpp"
#include "polya.hpp"
#include "triangles.hpp"

namespace acutecube {

namespace {

constexpr int kCacheSchemaVersion = 1;

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char ch : data) {
        hash ^= ch;
        hash *= 1099511628211ull;
    }
    return hash;
}

std::string hex64(std::uint64_t value) {
    std::ostringstream out;
    out << std::hex << std::setfill('0') << std::setw(16) << value;
    return out.str();
}

std::vector<int> lengths_present(const CycleIndexTable& table) {
    std::vector<int> lengths;
    for (const auto& row : table.rows)
        for (const auto& [len, mult] : row.type)
            if (std::find(lengths.begin(), lengths.end(), len) == lengths.end())
                lengths.push_back(len);
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

long long mult_of(const InducedType& type, int len) {
    for (const auto& [l, m] : type)
        if (l == len) return m;
    return 0;
}

std::string cycle_index_table_text(const CycleIndexTable& table) {
    auto lengths = lengths_present(table);
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header{"B_" + std::to_string(table.n)};
    for (int len : lengths) header.push_back(std::to_string(len));
    cells.push_back(header);
    for (const auto& row : table.rows) {
        std::vector<std::string> line{to_decimal(row.count)};
        for (int len : lengths) {
            long long m = mult_of(row.type, len);
            line.push_back(m == 0 ? "" : std::to_string(m));
        }
        cells.push_back(line);
    }
    std::vector<std::size_t> widths(header.size(), 0);
    for (const auto& line : cells)
        for (std::size_t c = 0; c < line.size(); ++c) widths[c] = std::max(widths[c], line[c].size());
    std::ostringstream out;
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            if (c) out << "  ";
            out << std::setw(static_cast<int>(widths[c])) << line[c];
        }
        out << '\n';
    }
    return out.str();
}

std::string cycle_index_csv(const CycleIndexTable& table) {
    auto lengths = lengths_present(table);
    std::ostringstream out;
    out << "count";
    for (int len : lengths) out << ',' << len;
    out << '\n';
    for (const auto& row : table.rows) {
        out << to_decimal(row.count);
        for (int len : lengths) {
            long long m = mult_of(row.type, len);
            out << ',';
            if (m != 0) out << m;
        }
        out << '\n';
    }
    return out.str();
}

nlohmann::json census_entry_json(int n, const CensusEntry& entry) {
    nlohmann::json obj;
    obj["n"] = n;
    obj["nu"] = entry.rep.columns;
    obj["det"] = to_decimal(entry.abs_det);
    std::vector<std::uint32_t> nonzero(entry.rep.columns.begin() + 1, entry.rep.columns.end());
    obj["hessenberg"] = is_unreduced_upper_hessenberg(BinaryMatrixRep(n, nonzero));
    return obj;
}

}  // namespace

std::string render_cycle_index(const CycleIndexTable& table, const std::string& format) {
    if (format == "table") return cycle_index_table_text(table);
    if (format == "json") return cycle_index_to_json(table) + "\n";
    if (format == "csv") return cycle_index_csv(table);
    throw std::invalid_argument("unknown cycle-index format: " + format);
}

std::string cycle_index_to_json(const CycleIndexTable& table) {
    nlohmann::json obj;
    obj["n"] = table.n;
    obj["rows"] = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json jrow;
        jrow["count"] = to_decimal(row.count);
        jrow["type"] = nlohmann::json::array();
        for (const auto& [len, mult] : row.type) jrow["type"].push_back({len, mult});
        obj["rows"].push_back(std::move(jrow));
    }
    return obj.dump();
}

CycleIndexTable cycle_index_from_json(const std::string& text) {
    auto obj = nlohmann::json::parse(text);
    CycleIndexTable table;
    table.n = obj.at("n").get<int>();
    for (const auto& jrow : obj.at("rows")) {
        CycleIndexTable::Row row;
        row.count = BigInt(jrow.at("count").get<std::string>());
        for (const auto& pair : jrow.at("type"))
            row.type.emplace_back(pair.at(0).get<int>(), pair.at(1).get<long long>());
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string render_simplex_counts(const CycleIndexTable& table, const std::string& format) {
    const int n = table.n;
    std::vector<BigInt> counts;
    for (long long k = 1; k <= n + 1; ++k) counts.push_back(count_classes(table, k));
    std::ostringstream out;
    if (format == "plain") {
        for (std::size_t i = 0; i < counts.size(); ++i)
            out << 'k' << '=' << (i + 1) << ' ' << to_decimal(counts[i]) << '\n';
    } else if (format == "csv") {
        out << 'n';
        for (std::size_t i = 0; i < counts.size(); ++i) out << ",k=" << (i + 1);
        out << '\n' << n;
        for (const auto& c : counts) out << ',' << to_decimal(c);
        out << '\n';
    } else if (format == "json") {
        nlohmann::json obj;
        obj["n"] = n;
        obj["counts"] = nlohmann::json::array();
        for (const auto& c : counts) obj["counts"].push_back(to_decimal(c));
        out << obj.dump() << '\n';
    } else {
        throw std::invalid_argument("unknown count format: " + format);
    }
    return out.str();
}

std::string render_triangle_counts(int n, const std::string& format) {
    std::ostringstream out;
    if (format == "csv")
        out << n << ',' << count_right(n) << ',' << count_acute(n) << ','
            << (count_right(n) + count_acute(n)) << '\n';
    else
        out << "right " << count_right(n) << "\nacute " << count_acute(n) << "\nall "
            << (count_right(n) + count_acute(n)) << '\n';
    return out.str();
}

std::string render_triangle_list(int n, const std::string& filter_name) {
    TriangleFilter filter = TriangleFilter::All;
    if (filter_name == "right")
        filter = TriangleFilter::Right;
    else if (filter_name == "acute")
        filter = TriangleFilter::Acute;
    std::ostringstream out;
    for (const auto& shape : enumerate_triangles(n, filter)) {
        auto rep = shape_to_matrix(shape, n);
        out << shape.a << ' ' << shape.b << ' ' << shape.c << ' ' << shape.d << "  nu";
        for (auto c : rep.columns) out << ' ' << c;
        out << '\n';
    }
    return out.str();
}

std::string render_census(const CensusResult& census, const std::string& format) {
    std::ostringstream out;
    if (format == "jsonl") {
        for (const auto& entry : census.entries) out << census_entry_json(census.n, entry).dump() << '\n';
    } else if (format == "matrix") {
        for (std::size_t i = 0; i < census.entries.size(); ++i) {
            if (i) out << '\n';
            out << to_matrix_text(census.entries[i].rep);
        }
    } else {
        throw std::invalid_argument("unknown enumerate-acute format: " + format);
    }
    return out.str();
}

std::string matrix_to_json(const BinaryMatrixRep& P) {
    nlohmann::json obj;
    obj["n"] = P.n;
    obj["k"] = P.k();
    obj["columns"] = P.columns;
    return obj.dump();
}

BinaryMatrixRep matrix_from_json(const std::string& text) {
    nlohmann::json obj;
    try {
        obj = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("matrix json: ") + e.what());
    }
    auto columns = obj.at("columns").get<std::vector<std::uint32_t>>();
    if (obj.at("k").get<int>() != static_cast<int>(columns.size()))
        throw std::invalid_argument("matrix json: k does not match the column count");
    return BinaryMatrixRep(obj.at("n").get<int>(), std::move(columns));
}

std::string render_hessenberg_level(int n, bool verify) {
    std::ostringstream out;
    for (const auto& entry : enumerate_level(n)) {
        out << "lambda";
        for (int p : entry.matrix.lambda.parts) out << ' ' << p;
        out << "  det " << to_decimal(entry.abs_det);
        if (!entry.is_minimal_candidate) out << "  not-minimal";
        out << '\n';
        if (verify) {
            auto cf = cf_numerator(entry.matrix.lambda);
            if (cf.numerator != entry.abs_det)
                throw std::logic_error("hessenberg verify: continued fraction mismatch");
            if (n <= 12) {
                ExactGramian gram = ExactGramian::from_columns(entry.matrix.columns);
                if (!is_strictly_ultrametric(gram.entries))
                    throw std::logic_error("hessenberg verify: Gramian not strictly ultrametric");
                if (!is_acute(gram)) throw std::logic_error("hessenberg verify: not acute");
            }
        }
    }
    return out.str();
}

std::string render_kepler(int depth) {
    if (depth < 0) throw std::invalid_argument("kepler: depth must be >= 0");
    std::ostringstream out;
    std::vector<CompositionNode> level{kepler_root()};
    for (int d = 0; d <= depth; ++d) {
        std::vector<CompositionNode> next;
        for (const auto& node : level) {
            nlohmann::json obj;
            obj["level"] = node.level;
            obj["p"] = to_decimal(node.p);
            obj["q"] = to_decimal(node.q);
            obj["sum"] = to_decimal(node.p + node.q);
            obj["lambda"] = node.lambda.parts;
            out << obj.dump() << '\n';
            if (d < depth) {
                auto [left, right] = split(node);
                next.push_back(std::move(left));
                next.push_back(std::move(right));
            }
        }
        level = std::move(next);
    }
    return out.str();
}

std::optional<CycleIndexTable> CycleIndexCache::load(int n) const {
    std::ifstream in(path_for(n));
    if (!in) return std::nullopt;
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        auto obj = nlohmann::json::parse(buffer.str());
        if (obj.at("schema_version").get<int>() != kCacheSchemaVersion) return std::nullopt;
        if (obj.at("n").get<int>() != n) return std::nullopt;
        std::string payload = obj.at("payload").dump();
        if (obj.at("checksum").get<std::string>() != hex64(fnv1a64(payload))) return std::nullopt;
        auto table = cycle_index_from_json(payload);
        if (table.n != n) return std::nullopt;
        return table;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void CycleIndexCache::store(const CycleIndexTable& table) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) return;  // cache is best-effort
    std::string payload = cycle_index_to_json(table);
    // Re-dump through the parser so the checksum matches load()'s view.
    payload = nlohmann::json::parse(payload).dump();
    nlohmann::json obj;
    obj["schema_version"] = kCacheSchemaVersion;
    obj["n"] = table.n;
    obj["checksum"] = hex64(fnv1a64(payload));
    obj["payload"] = nlohmann::json::parse(payload);
    std::ofstream out(path_for(table.n));
    out << obj.dump() << '\n';
}

CycleIndexTable CycleIndexCache::get_or_compute(int n, int cap) const {
    if (auto cached = load(n)) return *cached;
    auto table = cycle_index(n, cap);
    store(table);
    return table;
}

std::string CycleIndexCache::default_directory() {
    if (const char* env = std::getenv("ACUTE_CUBE_CACHE"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::string(xdg) + "/acutecube";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::string(home) + "/.cache/acutecube";
    return ".acutecube-cache";
}

std::string CycleIndexCache::path_for(int n) const {
    return dir_ + "/cycle-index-v" + std::to_string(kCacheSchemaVersion) + "-n" +
           std::to_string(n) + ".json";
}

}  // namespace acutecube
