#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "acutecube.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

struct CtxDeleter {
    void operator()(acutecube_ctx *ctx) const { acutecube_ctx_free(ctx); }
};
using CtxPtr = std::unique_ptr<acutecube_ctx, CtxDeleter>;

struct StringDeleter {
    void operator()(char *s) const { acutecube_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

int report(acutecube_ctx *ctx, acutecube_status status) {
    std::cerr << "error: " << acutecube_last_error(ctx) << '\n';
    switch (status) {
        case ACUTECUBE_ERR_VERIFICATION:
            return kExitVerification;
        default:
            return kExitUsage;
    }
}

int write_output(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream out(out_file, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file " << out_file << '\n';
        return kExitUsage;
    }
    out << text;
    return kExitOk;
}

std::string read_input(const std::string& in_file) {
    std::stringstream buffer;
    if (in_file.empty() || in_file == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(in_file, std::ios::binary);
        if (!in) throw CLI::ValidationError("--in", "cannot open input file " + in_file);
        buffer << in.rdbuf();
    }
    return buffer.str();
}

}  // namespace

int main(int argc, char **argv) {
    CtxPtr ctx(acutecube_ctx_new());
    if (!ctx) {
        std::cerr << "error: out of memory\n";
        return kExitUsage;
    }

    CLI::App app{"Exact census of 0/1-polytopes and acute 0/1-simplices modulo cube symmetries"};
    app.require_subcommand(1);

    std::string cache_dir;
    app.add_option("--cache-dir", cache_dir,
                   "Cache directory (default: $ACUTE_CUBE_CACHE or the platform cache)");

    int n = 0;

    auto *cmd_cycle = app.add_subcommand("cycle-index", "Tabulated cycle index of the cube symmetries");
    std::string cycle_format = "table";
    cmd_cycle->add_option("n", n, "Cube dimension")->required();
    cmd_cycle->add_option("--format", cycle_format, "table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));

    auto *cmd_count = app.add_subcommand("count", "Equivalence classes of vertex subsets");
    long long vertices = -1;
    bool count_all = false, count_simplices = false;
    std::string count_format = "plain";
    cmd_count->add_option("n", n, "Cube dimension")->required();
    auto *opt_vertices = cmd_count->add_option("--vertices", vertices, "Subset size k");
    auto *opt_all = cmd_count->add_flag("--all", count_all, "Total over all k");
    auto *opt_simpl = cmd_count->add_flag("--simplices", count_simplices, "Row k = 1..n+1");
    cmd_count->add_option("--format", count_format, "plain, csv or json (with --simplices)")
        ->check(CLI::IsMember({"plain", "csv", "json"}));
    opt_vertices->excludes(opt_all)->excludes(opt_simpl);
    opt_all->excludes(opt_simpl);

    auto *cmd_tri = app.add_subcommand("triangles", "Triangle classes in the n-cube");
    bool tri_acute = false, tri_right = false, tri_all = false, tri_list = false;
    std::string tri_format = "plain";
    cmd_tri->add_option("n", n, "Cube dimension")->required();
    auto *opt_tacute = cmd_tri->add_flag("--acute", tri_acute, "Acute triangles only");
    auto *opt_tright = cmd_tri->add_flag("--right", tri_right, "Right triangles only");
    cmd_tri->add_flag("--all", tri_all, "All triangles (default)");
    cmd_tri->add_flag("--list", tri_list, "List one class per line instead of counting");
    cmd_tri->add_option("--format", tri_format, "plain or csv")
        ->check(CLI::IsMember({"plain", "csv"}));
    opt_tacute->excludes(opt_tright);

    auto *cmd_enum = app.add_subcommand("enumerate-acute", "Census of acute simplices with n+1 vertices");
    std::string enum_format = "jsonl", out_file;
    int jobs = 1;
    cmd_enum->add_option("n", n, "Cube dimension")->required();
    cmd_enum->add_option("--out", out_file, "Write to a file instead of stdout");
    cmd_enum->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    cmd_enum->add_option("--format", enum_format, "jsonl or matrix")
        ->check(CLI::IsMember({"jsonl", "matrix"}));

    auto *cmd_canon = app.add_subcommand("canon", "Minimal matrix representation of a 0/1 matrix");
    std::string in_file;
    cmd_canon->add_option("--in", in_file, "Input file in matrix text format (- for stdin)");

    auto *cmd_check = app.add_subcommand("check", "Acuteness / ultrametricity checks of a matrix");
    std::string check_file;
    bool check_acute = false, check_ultra = false;
    cmd_check->add_option("file", check_file, "Matrix in text format")->required();
    cmd_check->add_flag("--acute", check_acute, "Check the acuteness conditions");
    cmd_check->add_flag("--ultrametric", check_ultra, "Check strict ultrametricity of the Gramian");

    auto *cmd_hess = app.add_subcommand("hessenberg", "Hessenberg family at size n");
    bool verify = false;
    cmd_hess->add_option("n", n, "Matrix size")->required();
    cmd_hess->add_flag("--verify", verify, "Verify determinants, ultrametricity and acuteness");

    auto *cmd_kepler = app.add_subcommand("kepler", "Fraction tree levels as JSON lines");
    int depth = 0;
    cmd_kepler->add_option("--depth", depth, "Deepest level to emit")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    if (!cache_dir.empty()) acutecube_set_cache_dir(ctx.get(), cache_dir.c_str());

    acutecube_status status = ACUTECUBE_OK;
    char *raw = nullptr;

    if (cmd_cycle->parsed()) {
        status = acutecube_cycle_index(ctx.get(), n, cycle_format.c_str(), &raw);
    } else if (cmd_count->parsed()) {
        if (count_all)
            status = acutecube_count_all(ctx.get(), n, &raw);
        else if (count_simplices)
            status = acutecube_count_simplices(ctx.get(), n, count_format.c_str(), &raw);
        else if (opt_vertices->count() > 0)
            status = acutecube_count_vertices(ctx.get(), n, vertices, &raw);
        else {
            std::cerr << "error: count requires --vertices, --all or --simplices\n";
            return kExitUsage;
        }
    } else if (cmd_tri->parsed()) {
        const char *filter = tri_acute ? "acute" : (tri_right ? "right" : "all");
        status = acutecube_triangles(ctx.get(), n, filter, tri_list ? 1 : 0, tri_format.c_str(), &raw);
    } else if (cmd_enum->parsed()) {
        acutecube_set_jobs(ctx.get(), jobs);
        status = acutecube_enumerate_acute(ctx.get(), n, enum_format.c_str(), &raw);
        if (status == ACUTECUBE_OK) {
            StringPtr text(raw);
            return write_output(text.get(), out_file);
        }
    } else if (cmd_canon->parsed()) {
        std::string text = read_input(in_file);
        status = acutecube_canonicalize(ctx.get(), text.c_str(), &raw);
    } else if (cmd_check->parsed()) {
        if (!check_acute && !check_ultra) check_acute = check_ultra = true;
        std::string text = read_input(check_file);
        int acute = -1, ultra = -1;
        status = acutecube_check(ctx.get(), text.c_str(), check_acute ? &acute : nullptr,
                                 check_ultra ? &ultra : nullptr);
        if (status != ACUTECUBE_OK) return report(ctx.get(), status);
        bool ok = true;
        if (check_acute) {
            std::cout << "acute " << (acute ? "pass" : "fail") << '\n';
            ok = ok && acute;
        }
        if (check_ultra) {
            std::cout << "ultrametric " << (ultra ? "pass" : "fail") << '\n';
            ok = ok && ultra;
        }
        return ok ? kExitOk : kExitVerification;
    } else if (cmd_hess->parsed()) {
        status = acutecube_hessenberg(ctx.get(), n, verify ? 1 : 0, &raw);
    } else if (cmd_kepler->parsed()) {
        status = acutecube_kepler(ctx.get(), depth, &raw);
    }

    if (status != ACUTECUBE_OK) return report(ctx.get(), status);
    if (raw) {
        StringPtr text(raw);
        std::cout << text.get();
    }
    return kExitOk;
}
