#pragma once

#include <array>
#include <optional>
#include <string>

#include "conescale/cone_metric.hpp"
#include "conescale/cones.hpp"
#include "conescale/fixed_point.hpp"
#include "conescale/gauges.hpp"
#include "conescale/json_out.hpp"
#include "conescale/matrix.hpp"
#include "conescale/report.hpp"
#include "conescale/scalarization.hpp"

namespace conescale {

// ---- parsing (ParseError on malformed input; unknown keys are rejected) ----

Vec parse_vec(const std::string& text);
SolidCone parse_cone(const std::string& text);
GaugeFunction parse_gauge(const std::string& text);
ConeGauge parse_cone_gauge(const std::string& text);
FiniteConeMetric parse_finite_metric(const std::string& text);

/// Affine map x -> F x + b on R^n.
struct AffineMap {
    Matrix f;
    Vec b;

    Vec operator()(const Vec& x) const { return add(matvec(f, x), b); }
};

/// Plain solve configuration: a real metric on R^n, affine f and g, five
/// scalar gauges. g defaults to the identity; the preimage selector solves
/// the affine system, so G must be invertible.
struct SolveConfig {
    std::string metric_kind = "euclidean";  // euclidean | chebyshev | manhattan
    AffineMap f;
    AffineMap g;
    std::vector<GaugeFunction> gauges;  // exactly 5 after parsing
    Vec x0;
    double tol_conv = 1e-10;
    int max_iter = 10000;
    bool weakly_compatible = false;
};

SolveConfig parse_solve_config(const std::string& text);
JungckProblem build_problem(const SolveConfig& cfg);

/// Cone-metric solve configuration. The only built-in cone metric kind is
/// "coordinatewise": d(x, y)_i = |x_i - y_i|, which requires the point
/// dimension to equal the cone dimension and the cone to contain the
/// coordinatewise distances (the orthant family does).
struct TvsSolveConfig {
    explicit TvsSolveConfig(SolidCone c) : cone(std::move(c)) {}

    SolidCone cone;
    Vec e;
    std::string cone_metric_kind = "coordinatewise";
    AffineMap f;
    AffineMap g;
    std::vector<ConeGauge> cone_gauges;  // exactly 5 after parsing
    Vec x0;
    double tol_conv = 1e-10;
    int max_iter = 10000;
    bool weakly_compatible = false;
};

TvsSolveConfig parse_tvs_solve_config(const std::string& text);

struct TvsProblem {
    ConeMetricSpace space;
    PointMap f, g, g_preimage;
    std::array<ConeGauge, 5> cone_gauges;
    Vec e, x0;
    double tol_conv;
    int max_iter;
    bool weakly_compatible;
};

TvsProblem build_tvs_problem(const TvsSolveConfig& cfg);

// ---- serialization ----

JsonValue to_json(const Vec& v);
JsonValue to_json(const ScalarizationResult& r);
JsonValue to_json(const ValidationReport& r);
JsonValue to_json(const OrderCheckResult& r, int samples);
JsonValue to_json(const SolveReport& r, bool tvs);

}  // namespace conescale
