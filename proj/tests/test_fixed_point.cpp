#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "conescale/fixed_point.hpp"

using namespace conescale;

namespace {

JungckProblem line_problem(double slope, double offset, double gauge_k, double x0) {
    JungckProblem p;
    p.metric = [](const Vec& a, const Vec& b) { return std::fabs(a[0] - b[0]); };
    p.f = [slope, offset](const Vec& x) { return Vec{slope * x[0] + offset}; };
    p.g = [](const Vec& x) { return x; };
    p.g_preimage = [](const Vec& y) { return y; };
    for (auto& g : p.gauges) g = GaugeFunction::linear(gauge_k);
    p.x0 = {x0};
    p.weakly_compatible = true;
    return p;
}

double brute_force_diameter(const std::vector<Vec>& pts, const RealMetric& d) {
    double best = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, d(pts[i], pts[j]));
    return best;
}

}  // namespace

TEST_CASE("geometric convergence to the coincidence point") {
    // fixed point of x/2 + 1 is 2
    SolveReport r = jungck_solve(line_problem(0.5, 1.0, 0.6, 0.0));
    CHECK(r.converged);
    CHECK(r.iterations <= 60);
    CHECK(std::fabs(r.limit[0] - 2.0) < 1e-8);
    CHECK(r.coincidence_residual < 1e-8);
    CHECK(r.d0 == 1.0);
    CHECK(r.r0_bound == doctest::Approx(2.5).epsilon(1e-9));
    CHECK(r.contraction_violation_count == 0);
    CHECK(r.observed_orbit_diameter <= r.r0_bound + 1e-6);
    REQUIRE(r.fixed_point_residual.has_value());
    CHECK(*r.fixed_point_residual <= 10.0 * 1e-10);
    REQUIRE(r.commutation_residual.has_value());
    CHECK(*r.commutation_residual < 1e-10);
}

TEST_CASE("constant map needs at most two steps") {
    SolveReport r = jungck_solve(line_problem(0.0, 3.0, 0.6, 10.0));
    CHECK(r.converged);
    CHECK(r.iterations <= 2);
    CHECK(r.limit[0] == 3.0);
}

TEST_CASE("identical f and g stop at the start") {
    JungckProblem p = line_problem(1.0, 0.0, 0.6, 4.0);  // f = g = id
    SolveReport r = jungck_solve(p);
    CHECK(r.converged);
    CHECK(r.iterations == 0);
    CHECK(r.limit[0] == 4.0);
    CHECK(r.d0 == 0.0);
    CHECK(r.r0_bound == 0.0);
}

TEST_CASE("translation map cannot converge and is flagged") {
    SolveReport r = jungck_solve(line_problem(1.0, 1.0, 0.5, 0.0));
    CHECK_FALSE(r.converged);
    CHECK(r.contraction_violation_count > 0);
    CHECK(r.iterations == 10000);
    // the pair (x_0, x_2) already violates: lhs 2 > max gauge value 1.5
    REQUIRE(!r.contraction_violations.empty());
    ContractionViolation first = r.contraction_violations.front();
    CHECK(first.i == 0);
    CHECK(first.j == 2);
    CHECK(first.lhs == 2.0);
    CHECK(first.rhs == 1.5);
}

TEST_CASE("uniqueness across starting points") {
    SolveReport a = jungck_solve(line_problem(0.5, 1.0, 0.6, 0.0));
    SolveReport b = jungck_solve(line_problem(0.5, 1.0, 0.6, 10.0));
    CHECK(std::fabs(a.limit[0] - b.limit[0]) <= 10.0 * 1e-10);
}

TEST_CASE("point of coincidence verification") {
    JungckProblem p = line_problem(0.5, 1.0, 0.6, 0.0);
    CHECK(verify_point_of_coincidence(p, {2.0}, 1e-9));
    CHECK_FALSE(verify_point_of_coincidence(p, {0.0}, 1e-9));

    JungckProblem same = line_problem(1.0, 0.0, 0.6, 0.0);  // f = g
    CHECK(verify_point_of_coincidence(same, {123.0}, 1e-12));
}

TEST_CASE("orbit diameters against the brute-force oracle") {
    SolveReport r = jungck_solve(line_problem(0.5, 0.0, 0.6, 16.0));  // orbit 8 * 2^-n
    REQUIRE(r.trajectory.size() >= 8);

    double all = orbit_diameter(r, r.trajectory.size());
    CHECK(all == brute_force_diameter(r.trajectory, r.metric));
    CHECK(all <= 8.0);
    CHECK(all == doctest::Approx(8.0).epsilon(1e-6));  // |first - limit| for a monotone orbit

    CHECK(orbit_diameter(r, 1) == 0.0);
    CHECK(orbit_diameter(r, 2) == r.metric(r.trajectory[0], r.trajectory[1]));
    CHECK_THROWS_AS(orbit_diameter(r, r.trajectory.size() + 1), DomainError);

    // windowed diameters shrink as the start index advances
    for (std::size_t k = 1; k + 4 < std::min<std::size_t>(r.trajectory.size(), 12); ++k)
        CHECK(windowed_diameter(r, k, 3) <= windowed_diameter(r, k - 1, 3) + 1e-12);
    CHECK_THROWS_AS(windowed_diameter(r, 0, r.trajectory.size()), DomainError);
}

TEST_CASE("constant orbit has zero diameter") {
    SolveReport r = jungck_solve(line_problem(0.0, 5.0, 0.6, 5.0));
    CHECK(r.observed_orbit_diameter == 0.0);
}

TEST_CASE("range inclusion failures surface as errors") {
    JungckProblem p = line_problem(0.5, 1.0, 0.6, 0.0);
    p.g_preimage = [](const Vec&) -> Vec {
        throw RangeInclusionError("no preimage under g");
    };
    CHECK_THROWS_AS(jungck_solve(p), RangeInclusionError);
}

TEST_CASE("problem validation") {
    JungckProblem p = line_problem(0.5, 1.0, 0.6, 0.0);
    p.metric = nullptr;
    CHECK_THROWS_AS(jungck_solve(p), DomainError);
    p = line_problem(0.5, 1.0, 0.6, 0.0);
    p.tol_conv = 0.0;
    CHECK_THROWS_AS(jungck_solve(p), DomainError);
    p = line_problem(0.5, 1.0, 0.6, 0.0);
    p.x0 = {std::nan("")};
    CHECK_THROWS_AS(jungck_solve(p), DomainError);
}

namespace {

ConeMetricSpace plane_space() {
    return {SolidCone::orthant(2), 2, [](const Vec& a, const Vec& b) {
                return Vec{std::fabs(a[0] - b[0]), std::fabs(a[1] - b[1])};
            }};
}

std::array<ConeGauge, 5> five_scales(double k, double eps) {
    std::array<ConeGauge, 5> psis;
    for (auto& psi : psis) psi = ConeGauge::scaling(k, eps);
    return psis;
}

}  // namespace

TEST_CASE("tvs solve reduces to the scalar problem") {
    SolveReport r = tvs_jungck_solve(
        plane_space(), [](const Vec& x) { return scale(0.5, x); },
        [](const Vec& x) { return x; }, [](const Vec& y) { return y; }, five_scales(0.6, 0.2),
        {1.0, 1.0}, {8.0, 8.0}, 1e-10, 10000, true);
    CHECK(r.converged);
    CHECK(norm_inf(r.limit) < 1e-8);
    CHECK(r.coincidence_residual < 1e-8);
    CHECK(r.contraction_violation_count == 0);
    CHECK(r.tvs_violation_count == 0);
    CHECK(r.check_disagreements == 0);
}

TEST_CASE("tvs solve with identical maps stops immediately") {
    SolveReport r = tvs_jungck_solve(
        plane_space(), [](const Vec& x) { return x; }, [](const Vec& x) { return x; },
        [](const Vec& y) { return y; }, five_scales(0.6, 0.2), {1.0, 1.0}, {3.0, 4.0}, 1e-10,
        100, false);
    CHECK(r.converged);
    CHECK(r.iterations == 0);
    CHECK(r.limit == Vec{3.0, 4.0});
}

TEST_CASE("tvs solve with a diagonal operator gauge") {
    Matrix a(2, 2);
    a(0, 0) = 0.5;
    a(1, 1) = 0.25;
    std::array<ConeGauge, 5> psis;
    for (auto& psi : psis) psi = ConeGauge::linear_operator(a, 0.25);
    // f applies exactly the operator's action to the distances
    SolveReport r = tvs_jungck_solve(
        plane_space(), [](const Vec& x) { return Vec{0.5 * x[0], 0.25 * x[1]}; },
        [](const Vec& x) { return x; }, [](const Vec& y) { return y; }, psis, {1.0, 1.0},
        {4.0, 4.0}, 1e-10, 10000, true);
    CHECK(r.converged);
    CHECK(norm_inf(r.limit) < 1e-8);
    CHECK(r.tvs_violation_count == 0);  // u = psi_1(d(gx, gy)) matches with equality
    CHECK(r.check_disagreements == 0);

    CHECK_THROWS_AS(tvs_jungck_solve(plane_space(), [](const Vec& x) { return x; },
                                     [](const Vec& x) { return x; },
                                     [](const Vec& y) { return y; }, psis, {1.0, 0.0}, {1.0, 1.0},
                                     1e-10, 10, false),
                    NotInteriorError);
}
