#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conescale/report.hpp"

namespace conescale::selftest {

struct SuiteResult {
    std::string name;
    std::vector<CheckResult> checks;
    int failures = 0;
};

struct SelftestReport {
    std::uint64_t seed = 0;
    std::vector<SuiteResult> suites;
    int total_failures = 0;
};

/// Fixed suite order: cones, scalarization, cone_metric, gauges, fixed_point.
const std::vector<std::string>& suite_names();

/// Run one named suite; DomainError on an unknown name. Every check derives
/// its random stream from (seed, check name), so results do not depend on
/// which suites run together.
SuiteResult run_suite(const std::string& name, std::uint64_t seed);

SelftestReport run_selftest(const std::optional<std::string>& suite, std::uint64_t seed);

// Individual sampled checks, shared with the acceptance harness. Samples are
// per cone family (orthant, lorentz, polyhedral; dimensions 2 through 6)
// where a family deck applies.

/// Laws 1-5 of the scalarization function: zero, nonnegativity on the cone,
/// monotonicity, subadditivity, positive homogeneity.
CheckResult scalarization_law(int law, std::uint64_t seed, int samples_per_family);

/// Closed forms versus the generic bracketing + bisection route (orthant and
/// axis-aligned lorentz), tolerance 1e-8.
CheckResult closed_form_agreement(std::uint64_t seed, int samples_per_family);

/// Membership ray: the scalarization value is the left endpoint of the
/// closed membership ray.
CheckResult bracket_ray(std::uint64_t seed, int samples_per_family);

/// Strict interior bounds on xi between 0 and lambda.
CheckResult interior_bound(std::uint64_t seed, int samples_per_family);

/// Norm axioms of |.|_e.
CheckResult norm_axioms(std::uint64_t seed, int samples_per_family);

/// |x|_e = xi_e(x) on the cone.
CheckResult norm_equals_xi(std::uint64_t seed, int samples_per_family);

/// Scalarization is 1-Lipschitz with respect to its own norm.
CheckResult lipschitz_bound(std::uint64_t seed, int samples_per_family);

/// Two-sided norm equivalence with the computed constants.
CheckResult equivalence_sandwich(std::uint64_t seed, int samples_per_family);

/// The constants are attained at x = e2 and x = e.
CheckResult equivalence_tightness(std::uint64_t seed, int samples_per_family);

/// Real metric axioms of the induced metrics on three canonical cone metric
/// spaces.
CheckResult induced_metric_axioms(std::uint64_t seed, int triples);

/// Pairwise sandwich between two induced metrics.
CheckResult induced_metric_sandwich(std::uint64_t seed, int pairs);

/// Forward direction of the order characterization: membership implies the
/// scalarized inequality for every sampled direction.
CheckResult order_forward(std::uint64_t seed, int pairs, int e_count);

}  // namespace conescale::selftest
