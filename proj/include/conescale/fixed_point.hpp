#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "conescale/cone_metric.hpp"
#include "conescale/gauges.hpp"
#include "conescale/vec.hpp"

namespace conescale {

using PointMap = std::function<Vec(const Vec&)>;
using RealMetric = std::function<double(const Vec&, const Vec&)>;

/// The (X, Y, f, g, gauges, x0) bundle driving the iteration f(x_n) =
/// g(x_{n+1}). Range inclusion f(X) inside g(X) is the caller's obligation;
/// a failing preimage selector (throwing RangeInclusionError) is the
/// detection mechanism. The selector must be deterministic for reproducible
/// runs, since the iteration is not determined by x0 alone.
struct JungckProblem {
    RealMetric metric;
    PointMap f;
    PointMap g;
    PointMap g_preimage;
    std::array<GaugeFunction, 5> gauges;
    Vec x0;
    double tol_conv = 1e-10;
    int max_iter = 10000;
    /// Asserted by the caller; commutation is verified only at the recovered
    /// coincidence argument.
    bool weakly_compatible = false;
    /// Whether f and g map the point universe into itself, enabling the
    /// fixed-point residual d(z, f z).
    bool x_equals_y = true;
    /// All pairs among the first window_pairs orbit arguments are checked
    /// against the contraction bound (consecutive pairs are always checked
    /// along the whole orbit).
    int window_pairs = 64;
    int trajectory_cap = 4096;
};

struct ContractionViolation {
    long long i = 0;
    long long j = 0;
    double lhs = 0.0;
    double rhs = 0.0;
};

/// Iteration outcome with diagnostics. The solver is a checker, not a
/// prover: empty violation lists mean no counterexample was observed along
/// the orbit, nothing more.
struct SolveReport {
    bool converged = false;
    int iterations = 0;
    Vec limit;              // limit of the image sequence f(x_n)
    Vec coincidence_arg;    // z* with g(z*) = limit
    double coincidence_residual = 0.0;
    double d0 = 0.0;        // d(f x0, g x0)
    double r0_bound = 0.0;  // from the majorant gauge and d0
    double observed_orbit_diameter = 0.0;
    std::vector<double> trajectory_gaps;  // retained d(f x_n, f x_{n+1})
    std::vector<Vec> trajectory;          // retained f images (ring capped)
    long long trajectory_base_index = 0;  // global index of trajectory[0]
    std::vector<ContractionViolation> contraction_violations;  // capped list
    long long contraction_violation_count = 0;
    std::vector<ContractionViolation> tvs_violations;  // TVS solves only
    long long tvs_violation_count = 0;
    /// Orbit pairs flagged by exactly one of the scalarized and the direct
    /// cone-order contraction checks (TVS solves only).
    long long check_disagreements = 0;
    std::optional<double> fixed_point_residual;  // d(z, f z)
    std::optional<double> commutation_residual;  // d(f g z*, g f z*)
    std::vector<std::string> notes;

    /// Kept for diameter diagnostics on the retained trajectory.
    RealMetric metric;
};

/// Jungck iteration x_{n+1} = g_preimage(f(x_n)), stopping when the
/// consecutive image gap drops below tol_conv. Records contraction-bound
/// violations along the orbit, the a-priori r0 bound and coincidence /
/// fixed-point residuals. Reaching max_iter is reported (converged = false),
/// not thrown.
SolveReport jungck_solve(const JungckProblem& p);

/// Cone-metric wrapper: reduces the five cone self-maps to scalar gauges via
/// phi_k(t) = |psi_k(t e)|_e, runs jungck_solve under the induced metric
/// d_e, and additionally checks the cone-order contraction condition
/// d(fx, fy) <= some psi_k(d-term) directly along the orbit.
SolveReport tvs_jungck_solve(const ConeMetricSpace& space, const PointMap& f, const PointMap& g,
                             const PointMap& g_preimage,
                             const std::array<ConeGauge, 5>& cone_gauges, const Vec& e,
                             const Vec& x0, double tol_conv = 1e-10, int max_iter = 10000,
                             bool weakly_compatible = false);

/// True iff d(f z, g z) <= tol.
bool verify_point_of_coincidence(const JungckProblem& p, const Vec& z_arg, double tol);

/// Max pairwise distance among the first `window` retained orbit points.
double orbit_diameter(const SolveReport& report, std::size_t window);

/// Diameter of { f(x_j) : k <= j <= k+n } over retained indices.
double windowed_diameter(const SolveReport& report, std::size_t k, std::size_t n);

}  // namespace conescale
