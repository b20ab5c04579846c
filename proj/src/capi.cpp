#include "acutecube.h"

#include <cstring>
#include <stdexcept>
#include <new>
#include <string>

#include "acute_enum.hpp"
#include "exactgram.hpp"
#include "polya.hpp"
#include "render.hpp"
#include "triangles.hpp"

struct acutecube_ctx {
    std::string cache_dir;  // empty = resolve default lazily
    int jobs = 1;
    int dimension_cap = acutecube::kDefaultDimensionCap;
    int census_cap = acutecube::kDefaultCensusCap;
    std::string last_error;
};

namespace {

char *dup_string(const std::string& s) {
    char *out = new (std::nothrow) char[s.size() + 1];
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

acutecube_status fail(acutecube_ctx *ctx, acutecube_status code, const std::string& message) {
    if (ctx) ctx->last_error = message;
    return code;
}

// Runs fn, mapping exceptions onto status codes and storing the message.
template <typename Fn>
acutecube_status guarded(acutecube_ctx *ctx, Fn&& fn) {
    if (!ctx) return ACUTECUBE_ERR_INVALID_ARGUMENT;
    try {
        fn();
        ctx->last_error.clear();
        return ACUTECUBE_OK;
    } catch (const std::invalid_argument& e) {
        return fail(ctx, ACUTECUBE_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return fail(ctx, ACUTECUBE_ERR_LIMIT, e.what());
    } catch (const std::logic_error& e) {
        return fail(ctx, ACUTECUBE_ERR_VERIFICATION, e.what());
    } catch (const std::exception& e) {
        return fail(ctx, ACUTECUBE_ERR_INTERNAL, e.what());
    }
}

void emit(char **out, const std::string& text) {
    if (!out) throw std::invalid_argument("null output pointer");
    *out = dup_string(text);
    if (!*out) throw std::bad_alloc();
}

acutecube::CycleIndexCache cache_for(const acutecube_ctx *ctx) {
    std::string dir = ctx->cache_dir.empty() ? acutecube::CycleIndexCache::default_directory()
                                             : ctx->cache_dir;
    return acutecube::CycleIndexCache(dir);
}

}  // namespace

extern "C" {

acutecube_ctx *acutecube_ctx_new(void) { return new (std::nothrow) acutecube_ctx; }

void acutecube_ctx_free(acutecube_ctx *ctx) { delete ctx; }

const char *acutecube_last_error(const acutecube_ctx *ctx) {
    return ctx ? ctx->last_error.c_str() : "null context";
}

acutecube_status acutecube_set_cache_dir(acutecube_ctx *ctx, const char *dir) {
    if (!ctx) return ACUTECUBE_ERR_INVALID_ARGUMENT;
    ctx->cache_dir = dir ? dir : "";
    return ACUTECUBE_OK;
}

acutecube_status acutecube_set_jobs(acutecube_ctx *ctx, int jobs) {
    if (!ctx || jobs < 1) return fail(ctx, ACUTECUBE_ERR_INVALID_ARGUMENT, "jobs must be >= 1");
    ctx->jobs = jobs;
    return ACUTECUBE_OK;
}

acutecube_status acutecube_set_dimension_cap(acutecube_ctx *ctx, int cap) {
    if (!ctx || cap < 1) return fail(ctx, ACUTECUBE_ERR_INVALID_ARGUMENT, "cap must be >= 1");
    ctx->dimension_cap = cap;
    return ACUTECUBE_OK;
}

acutecube_status acutecube_set_census_cap(acutecube_ctx *ctx, int cap) {
    if (!ctx || cap < 3) return fail(ctx, ACUTECUBE_ERR_INVALID_ARGUMENT, "cap must be >= 3");
    ctx->census_cap = cap;
    return ACUTECUBE_OK;
}

void acutecube_string_free(char *s) { delete[] s; }

acutecube_status acutecube_cycle_index(acutecube_ctx *ctx, int n, const char *format, char **out) {
    return guarded(ctx, [&] {
        auto table = cache_for(ctx).get_or_compute(n, ctx->dimension_cap);
        std::string text = acutecube::render_cycle_index(table, format ? format : "table");
        emit(out, text);
    });
}

acutecube_status acutecube_count_vertices(acutecube_ctx *ctx, int n, long long k, char **out) {
    return guarded(ctx, [&] {
        auto table = cache_for(ctx).get_or_compute(n, ctx->dimension_cap);
        std::string text = acutecube::to_decimal(acutecube::count_classes(table, k)) + "\n";
        emit(out, text);
    });
}

acutecube_status acutecube_count_all(acutecube_ctx *ctx, int n, char **out) {
    return guarded(ctx, [&] {
        auto table = cache_for(ctx).get_or_compute(n, ctx->dimension_cap);
        std::string text = acutecube::to_decimal(acutecube::count_all(table)) + "\n";
        emit(out, text);
    });
}

acutecube_status acutecube_count_simplices(acutecube_ctx *ctx, int n, const char *format,
                                           char **out) {
    return guarded(ctx, [&] {
        auto table = cache_for(ctx).get_or_compute(n, ctx->dimension_cap);
        std::string text = acutecube::render_simplex_counts(table, format ? format : "plain");
        emit(out, text);
    });
}

acutecube_status acutecube_triangles(acutecube_ctx *ctx, int n, const char *filter, int list,
                                     const char *format, char **out) {
    return guarded(ctx, [&] {
        std::string name = filter ? filter : "all";
        std::string text;
        if (list) {
            text = acutecube::render_triangle_list(n, name);
        } else if (name == "right") {
            text = std::to_string(acutecube::count_right(n)) + "\n";
        } else if (name == "acute") {
            text = std::to_string(acutecube::count_acute(n)) + "\n";
        } else if (name == "all") {
            text = acutecube::render_triangle_counts(n, format ? format : "plain");
        } else {
            throw std::invalid_argument("unknown triangle filter: " + name);
        }
        emit(out, text);
    });
}

acutecube_status acutecube_enumerate_acute(acutecube_ctx *ctx, int n, const char *format,
                                           char **out) {
    return guarded(ctx, [&] {
        auto census = acutecube::enumerate_acute(n, ctx->jobs, ctx->census_cap);
        if (census.one_neighbor_violations != 0)
            throw std::logic_error("one neighbor assertion violated");
        std::string text = acutecube::render_census(census, format ? format : "jsonl");
        emit(out, text);
    });
}

acutecube_status acutecube_canonicalize(acutecube_ctx *ctx, const char *matrix_text, char **out) {
    return guarded(ctx, [&] {
        if (!matrix_text) throw std::invalid_argument("null matrix text");
        std::string input(matrix_text);
        bool json = input.find_first_not_of(" \t\r\n") != std::string::npos &&
                    input[input.find_first_not_of(" \t\r\n")] == '{';
        auto rep = json ? acutecube::matrix_from_json(input) : acutecube::from_matrix_text(input);
        auto canon = acutecube::canonical(rep);
        emit(out, json ? acutecube::matrix_to_json(canon) + "\n" : acutecube::to_matrix_text(canon));
    });
}

acutecube_status acutecube_check(acutecube_ctx *ctx, const char *matrix_text, int *acute,
                                 int *ultrametric) {
    return guarded(ctx, [&] {
        if (!matrix_text) throw std::invalid_argument("null matrix text");
        auto rep = acutecube::from_matrix_text(matrix_text);
        std::vector<std::uint32_t> nonzero;
        for (auto c : rep.columns)
            if (c != 0) nonzero.push_back(c);
        if (nonzero.empty()) throw std::invalid_argument("matrix has no nonzero columns");
        auto gram = acutecube::ExactGramian::from_columns(nonzero);
        if (acute) *acute = acutecube::is_acute(gram) ? 1 : 0;
        if (ultrametric) *ultrametric = acutecube::is_strictly_ultrametric(gram.entries) ? 1 : 0;
    });
}

acutecube_status acutecube_hessenberg(acutecube_ctx *ctx, int n, int verify, char **out) {
    return guarded(ctx, [&] {
        std::string text = acutecube::render_hessenberg_level(n, verify != 0);
        emit(out, text);
    });
}

acutecube_status acutecube_kepler(acutecube_ctx *ctx, int depth, char **out) {
    return guarded(ctx, [&] {
        std::string text = acutecube::render_kepler(depth);
        emit(out, text);
    });
}

}  // extern "C"
