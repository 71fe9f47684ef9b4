// Command-line front end for the conescale shared library. All functionality
// goes through the C API in conescale/conescale.h; this file only handles
// argument parsing, file loading and JSON formatting of scalar results.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "conescale/conescale.h"

namespace {

struct CliError {
    int exit_code;
    std::string message;
};

std::string load_text_or_inline(const std::string& arg) {
    if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return arg;
    std::ifstream in(arg);
    if (!in) throw CliError{1, "cannot open file: " + arg};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<double> parse_vector_arg(const std::string& text, const std::string& flag) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_array() || j.empty())
        throw CliError{1, flag + ": expected a JSON array of numbers"};
    std::vector<double> v;
    for (const auto& x : j) {
        if (!x.is_number()) throw CliError{1, flag + ": expected a JSON array of numbers"};
        v.push_back(x.get<double>());
    }
    return v;
}

std::string format_double(double d) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", d);
    std::string s = buf;
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    return s;
}

[[noreturn]] void throw_status(cs_status status) {
    throw CliError{status == CS_ERROR_NONCONVERGENCE ? 2 : 1,
                   std::string(cs_status_name(status)) + ": " + cs_last_error()};
}

void require_ok(cs_status status) {
    if (status != CS_OK) throw_status(status);
}

struct ConeHandle {
    cs_cone* cone = nullptr;

    explicit ConeHandle(const std::string& arg) {
        require_ok(cs_cone_from_json(load_text_or_inline(arg).c_str(), &cone));
    }
    ~ConeHandle() { cs_cone_free(cone); }
    ConeHandle(const ConeHandle&) = delete;
    ConeHandle& operator=(const ConeHandle&) = delete;
};

struct OwnedString {
    char* s = nullptr;

    ~OwnedString() { cs_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

void emit(const std::string& json_line, bool verbose, const std::string& summary) {
    std::fputs(json_line.c_str(), stdout);
    std::fputc('\n', stdout);
    if (verbose) std::fprintf(stderr, "%s\n", summary.c_str());
}

std::uint64_t effective_seed(std::uint64_t cli_seed) {
    const char* env = std::getenv("CONESCALE_SEED");
    if (!env) return cli_seed;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (!end || *end != '\0' || end == env)
        throw CliError{1, "CONESCALE_SEED: expected an unsigned integer"};
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cone scalarization toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::uint64_t seed = 42;
    bool verbose = false;
    app.add_option("--seed", seed, "seed for sampled checks (CONESCALE_SEED overrides)")
        ->capture_default_str();
    app.add_flag("--verbose", verbose, "human-readable summary on standard error");

    std::string cone_arg, e_arg, e2_arg, x_arg, y_arg, space_arg, config_arg, suite_arg;
    int samples = 16;
    int triples = 200;

    CLI::App* validate_cone = app.add_subcommand("validate-cone", "check the cone axioms");
    validate_cone->add_option("--cone", cone_arg, "cone JSON (inline or file)")->required();

    CLI::App* scalarize = app.add_subcommand("scalarize", "evaluate the scalarization of y at e");
    scalarize->add_option("--cone", cone_arg)->required();
    scalarize->add_option("--e", e_arg, "interior direction, JSON array")->required();
    scalarize->add_option("--y", y_arg, "argument vector, JSON array")->required();

    CLI::App* norm = app.add_subcommand("norm", "evaluate the induced norm of x at e");
    norm->add_option("--cone", cone_arg)->required();
    norm->add_option("--e", e_arg)->required();
    norm->add_option("--x", x_arg)->required();

    CLI::App* equiv = app.add_subcommand("equiv", "norm equivalence constants for e, e2");
    equiv->add_option("--cone", cone_arg)->required();
    equiv->add_option("--e", e_arg)->required();
    equiv->add_option("--e2", e2_arg)->required();

    CLI::App* order = app.add_subcommand("order", "cone order versus scalarized order");
    order->add_option("--cone", cone_arg)->required();
    order->add_option("--x", x_arg)->required();
    order->add_option("--y", y_arg)->required();
    order->add_option("--samples", samples, "number of sampled directions")
        ->capture_default_str();

    CLI::App* metric_validate =
        app.add_subcommand("metric-validate", "check the cone metric axioms on a finite space");
    metric_validate->add_option("--space", space_arg, "finite cone metric JSON (inline or file)")
        ->required();
    metric_validate->add_option("--triples", triples, "sampled triples")->capture_default_str();

    CLI::App* solve = app.add_subcommand("solve", "run the common fixed point iteration");
    solve->add_option("--config", config_arg, "problem JSON (inline or file)")->required();

    CLI::App* solve_tvs =
        app.add_subcommand("solve-tvs", "run the iteration on a cone metric space");
    solve_tvs->add_option("--config", config_arg, "problem JSON (inline or file)")->required();

    CLI::App* selftest = app.add_subcommand("selftest", "run the property suites");
    selftest->add_option("--suite", suite_arg,
                         "one of cones, scalarization, cone_metric, gauges, fixed_point");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints the usage message
        return code == 0 ? 0 : 1;
    }

    try {
        seed = effective_seed(seed);

        if (validate_cone->parsed()) {
            ConeHandle cone(cone_arg);
            OwnedString report;
            require_ok(cs_cone_validate(cone.cone, seed, &report.s));
            emit(report.str(), verbose, "cone validation report written");
            return 0;
        }

        if (scalarize->parsed()) {
            ConeHandle cone(cone_arg);
            auto e = parse_vector_arg(e_arg, "--e");
            auto y = parse_vector_arg(y_arg, "--y");
            cs_scalarization_result r;
            require_ok(cs_xi(cone.cone, e.data(), y.data(), static_cast<int>(e.size()), &r));
            std::string out = "{\"value\":" + format_double(r.value) +
                              ",\"bracket_lo\":" + format_double(r.bracket_lo) +
                              ",\"bracket_hi\":" + format_double(r.bracket_hi) +
                              ",\"iterations\":" + std::to_string(r.iterations) + "}";
            emit(out, verbose, "scalarization value " + format_double(r.value));
            return 0;
        }

        if (norm->parsed()) {
            ConeHandle cone(cone_arg);
            auto e = parse_vector_arg(e_arg, "--e");
            auto x = parse_vector_arg(x_arg, "--x");
            double v = 0.0;
            require_ok(cs_norm(cone.cone, e.data(), x.data(), static_cast<int>(e.size()), &v));
            emit("{\"value\":" + format_double(v) + "}", verbose,
                 "induced norm " + format_double(v));
            return 0;
        }

        if (equiv->parsed()) {
            ConeHandle cone(cone_arg);
            auto e = parse_vector_arg(e_arg, "--e");
            auto e2 = parse_vector_arg(e2_arg, "--e2");
            double lower = 0.0, upper = 0.0;
            require_ok(cs_equivalence_constants(cone.cone, e.data(), e2.data(),
                                                static_cast<int>(e.size()), &lower, &upper));
            emit("{\"lower\":" + format_double(lower) + ",\"upper\":" + format_double(upper) + "}",
                 verbose, "equivalence constants written");
            return 0;
        }

        if (order->parsed()) {
            ConeHandle cone(cone_arg);
            auto x = parse_vector_arg(x_arg, "--x");
            auto y = parse_vector_arg(y_arg, "--y");
            int membership = 0, scalarized = 0;
            require_ok(cs_order_check(cone.cone, x.data(), y.data(), static_cast<int>(x.size()),
                                      samples, seed, &membership, &scalarized));
            std::string out = std::string("{\"leq_membership\":") +
                              (membership ? "true" : "false") +
                              ",\"leq_scalarized\":" + (scalarized ? "true" : "false") +
                              ",\"samples\":" + std::to_string(samples) + "}";
            emit(out, verbose, membership ? "x is below y in the cone order" : "x is not below y");
            return 0;
        }

        if (metric_validate->parsed()) {
            OwnedString report;
            require_ok(cs_metric_validate(load_text_or_inline(space_arg).c_str(), triples, seed,
                                          &report.s));
            emit(report.str(), verbose, "cone metric validation report written");
            return 0;
        }

        if (solve->parsed() || solve_tvs->parsed()) {
            OwnedString report;
            std::string cfg = load_text_or_inline(config_arg);
            cs_status status = solve->parsed() ? cs_solve(cfg.c_str(), &report.s)
                                               : cs_solve_tvs(cfg.c_str(), &report.s);
            if (status != CS_OK && status != CS_ERROR_NONCONVERGENCE) throw_status(status);
            emit(report.str(), verbose,
                 status == CS_OK ? "converged" : "did not converge within max_iter");
            return status == CS_OK ? 0 : 2;
        }

        if (selftest->parsed()) {
            OwnedString report;
            int failures = 0;
            require_ok(cs_selftest(suite_arg.empty() ? nullptr : suite_arg.c_str(), seed,
                                   &failures, &report.s));
            emit(report.str(), verbose,
                 failures == 0 ? "all checks passed"
                               : std::to_string(failures) + " checks failed");
            return failures == 0 ? 0 : 1;
        }
    } catch (const CliError& e) {
        std::fprintf(stderr, "error: %s\n", e.message.c_str());
        return e.exit_code;
    }
    return 1;
}
