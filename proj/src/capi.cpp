#include "conescale/conescale.h"

#include <cstring>
#include <new>
#include <string>

#include "conescale/cone_metric.hpp"
#include "conescale/cones.hpp"
#include "conescale/fixed_point.hpp"
#include "conescale/json_io.hpp"
#include "conescale/sampling.hpp"
#include "conescale/scalarization.hpp"
#include "conescale/selftest.hpp"

using namespace conescale;

struct cs_cone {
    SolidCone cone;
};

namespace {

thread_local std::string t_last_error;

cs_status code_of(const Error& e) {
    switch (e.code()) {
        case ErrorCode::Dimension: return CS_ERROR_DIMENSION;
        case ErrorCode::Domain: return CS_ERROR_DOMAIN;
        case ErrorCode::NotInterior: return CS_ERROR_NOT_INTERIOR;
        case ErrorCode::Numerical: return CS_ERROR_NUMERICAL;
        case ErrorCode::Parse: return CS_ERROR_PARSE;
        case ErrorCode::RangeInclusion: return CS_ERROR_RANGE_INCLUSION;
        case ErrorCode::Template: return CS_ERROR_TEMPLATE;
        case ErrorCode::Internal: return CS_ERROR_INTERNAL;
    }
    return CS_ERROR_INTERNAL;
}

cs_status fail(cs_status code, const char* message) {
    t_last_error = message;
    return code;
}

/// Runs the body, translating exceptions into status codes.
template <class Fn>
cs_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        t_last_error = e.what();
        return code_of(e);
    } catch (const std::bad_alloc&) {
        t_last_error = "out of memory";
        return CS_ERROR_INTERNAL;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return CS_ERROR_INTERNAL;
    } catch (...) {
        t_last_error = "unknown error";
        return CS_ERROR_INTERNAL;
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

Vec vec_of(const double* x, int n) {
    if (!x || n <= 0) throw DomainError("vector argument must be non-null with positive length");
    return Vec(x, x + n);
}

const SolidCone& cone_of(const cs_cone* cone) {
    if (!cone) throw DomainError("cone handle is null");
    return cone->cone;
}

}  // namespace

extern "C" {

const char* cs_status_name(cs_status status) {
    switch (status) {
        case CS_OK: return "ok";
        case CS_ERROR_DIMENSION: return "dimension_error";
        case CS_ERROR_DOMAIN: return "domain_error";
        case CS_ERROR_NOT_INTERIOR: return "not_interior_error";
        case CS_ERROR_NUMERICAL: return "numerical_error";
        case CS_ERROR_PARSE: return "parse_error";
        case CS_ERROR_RANGE_INCLUSION: return "range_inclusion_error";
        case CS_ERROR_TEMPLATE: return "template_error";
        case CS_ERROR_NONCONVERGENCE: return "nonconvergence";
        case CS_ERROR_INVALID_ARGUMENT: return "invalid_argument";
        case CS_ERROR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

const char* cs_last_error(void) { return t_last_error.c_str(); }

void cs_string_free(char* s) { delete[] s; }

cs_status cs_cone_from_json(const char* json, cs_cone** out) {
    if (!json || !out) return fail(CS_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new cs_cone{parse_cone(json)};
        return CS_OK;
    });
}

void cs_cone_free(cs_cone* cone) { delete cone; }

int cs_cone_dim(const cs_cone* cone) { return cone ? static_cast<int>(cone->cone.dim()) : 0; }

cs_status cs_cone_contains(const cs_cone* cone, const double* x, int n, int* result) {
    if (!result) return fail(CS_ERROR_INVALID_ARGUMENT, "null result pointer");
    return guarded([&] {
        *result = cone_of(cone).contains(vec_of(x, n)) ? 1 : 0;
        return CS_OK;
    });
}

cs_status cs_cone_interior_contains(const cs_cone* cone, const double* x, int n, int* result) {
    if (!result) return fail(CS_ERROR_INVALID_ARGUMENT, "null result pointer");
    return guarded([&] {
        *result = cone_of(cone).interior_contains(vec_of(x, n)) ? 1 : 0;
        return CS_OK;
    });
}

cs_status cs_cone_leq(const cs_cone* cone, const double* x, const double* y, int n, int* result) {
    if (!result) return fail(CS_ERROR_INVALID_ARGUMENT, "null result pointer");
    return guarded([&] {
        *result = cone_of(cone).leq(vec_of(x, n), vec_of(y, n)) ? 1 : 0;
        return CS_OK;
    });
}

cs_status cs_cone_strictly_less(const cs_cone* cone, const double* x, const double* y, int n,
                                int* result) {
    if (!result) return fail(CS_ERROR_INVALID_ARGUMENT, "null result pointer");
    return guarded([&] {
        *result = cone_of(cone).strictly_less(vec_of(x, n), vec_of(y, n)) ? 1 : 0;
        return CS_OK;
    });
}

cs_status cs_cone_find_scale(const cs_cone* cone, const double* c, const double* e, int n,
                             double* delta) {
    if (!delta) return fail(CS_ERROR_INVALID_ARGUMENT, "null result pointer");
    return guarded([&] {
        *delta = cone_of(cone).find_scale(vec_of(c, n), vec_of(e, n));
        return CS_OK;
    });
}

cs_status cs_cone_validate(const cs_cone* cone, uint64_t seed, char** report_json) {
    if (!report_json) return fail(CS_ERROR_INVALID_ARGUMENT, "null result pointer");
    return guarded([&] {
        ValidationReport rep = validate(cone_of(cone), seed);
        *report_json = copy_string(to_json(rep).dump());
        return CS_OK;
    });
}

cs_status cs_xi(const cs_cone* cone, const double* e, const double* y, int n,
                cs_scalarization_result* out) {
    if (!out) return fail(CS_ERROR_INVALID_ARGUMENT, "null result pointer");
    return guarded([&] {
        ScalarizationResult r = xi(cone_of(cone), vec_of(e, n), vec_of(y, n));
        out->value = r.value;
        out->bracket_lo = r.bracket_lo;
        out->bracket_hi = r.bracket_hi;
        out->iterations = r.iterations;
        return CS_OK;
    });
}

cs_status cs_norm(const cs_cone* cone, const double* e, const double* x, int n, double* out) {
    if (!out) return fail(CS_ERROR_INVALID_ARGUMENT, "null result pointer");
    return guarded([&] {
        *out = norm_e(cone_of(cone), vec_of(e, n), vec_of(x, n));
        return CS_OK;
    });
}

cs_status cs_equivalence_constants(const cs_cone* cone, const double* e, const double* e2, int n,
                                   double* lower, double* upper) {
    if (!lower || !upper) return fail(CS_ERROR_INVALID_ARGUMENT, "null result pointer");
    return guarded([&] {
        auto [lo, hi] = equivalence_constants(cone_of(cone), vec_of(e, n), vec_of(e2, n));
        *lower = lo;
        *upper = hi;
        return CS_OK;
    });
}

cs_status cs_order_check(const cs_cone* cone, const double* x, const double* y, int n,
                         int samples, uint64_t seed, int* leq_membership, int* leq_scalarized) {
    if (!leq_membership || !leq_scalarized)
        return fail(CS_ERROR_INVALID_ARGUMENT, "null result pointer");
    return guarded([&] {
        const SolidCone& c = cone_of(cone);
        if (samples < 1) throw DomainError("order_check: samples must be positive");
        auto deck = interior_deck(c, samples, seed);
        OrderCheckResult r = order_check(c, vec_of(x, n), vec_of(y, n), deck);
        *leq_membership = r.leq_membership ? 1 : 0;
        *leq_scalarized = r.leq_scalarized ? 1 : 0;
        return CS_OK;
    });
}

cs_status cs_metric_validate(const char* space_json, int sample_triples, uint64_t seed,
                             char** report_json) {
    if (!space_json || !report_json) return fail(CS_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        FiniteConeMetric space = parse_finite_metric(space_json);
        ValidationReport rep = validate_cone_metric(space, sample_triples, seed);
        *report_json = copy_string(to_json(rep).dump());
        return CS_OK;
    });
}

cs_status cs_solve(const char* problem_json, char** report_json) {
    if (!problem_json || !report_json) return fail(CS_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        SolveConfig cfg = parse_solve_config(problem_json);
        SolveReport rep = jungck_solve(build_problem(cfg));
        *report_json = copy_string(to_json(rep, false).dump());
        if (!rep.converged) return fail(CS_ERROR_NONCONVERGENCE, "max_iter reached");
        return CS_OK;
    });
}

cs_status cs_solve_tvs(const char* problem_json, char** report_json) {
    if (!problem_json || !report_json) return fail(CS_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        TvsProblem p = build_tvs_problem(parse_tvs_solve_config(problem_json));
        SolveReport rep = tvs_jungck_solve(p.space, p.f, p.g, p.g_preimage, p.cone_gauges, p.e,
                                           p.x0, p.tol_conv, p.max_iter, p.weakly_compatible);
        *report_json = copy_string(to_json(rep, true).dump());
        if (!rep.converged) return fail(CS_ERROR_NONCONVERGENCE, "max_iter reached");
        return CS_OK;
    });
}

cs_status cs_selftest(const char* suite, uint64_t seed, int* failures, char** report_json) {
    if (!report_json) return fail(CS_ERROR_INVALID_ARGUMENT, "null result pointer");
    return guarded([&] {
        std::optional<std::string> which;
        if (suite) which = std::string(suite);
        selftest::SelftestReport rep = selftest::run_selftest(which, seed);
        JsonValue suites = JsonValue::array();
        for (const auto& s : rep.suites) {
            JsonValue checks = JsonValue::array();
            for (const auto& c : s.checks) {
                JsonValue e = JsonValue::object();
                e.set("name", c.name);
                e.set("passed", c.passed);
                e.set("detail", c.detail);
                checks.push(std::move(e));
            }
            JsonValue o = JsonValue::object();
            o.set("name", s.name);
            o.set("checks", std::move(checks));
            o.set("failures", s.failures);
            suites.push(std::move(o));
        }
        JsonValue top = JsonValue::object();
        top.set("seed", static_cast<long long>(rep.seed));
        top.set("suites", std::move(suites));
        top.set("total_failures", rep.total_failures);
        *report_json = copy_string(top.dump());
        if (failures) *failures = rep.total_failures;
        return CS_OK;
    });
}

}  // extern "C"
