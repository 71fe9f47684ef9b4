// Acceptance suite: one line per criterion, exit code = number of failures.
// Everything is property-based at desk scale; every tolerance is pinned here.

#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "conescale/cone_metric.hpp"
#include "conescale/cones.hpp"
#include "conescale/conescale.h"
#include "conescale/fixed_point.hpp"
#include "conescale/gauges.hpp"
#include "conescale/sampling.hpp"
#include "conescale/scalarization.hpp"
#include "conescale/selftest.hpp"

using namespace conescale;

namespace {

constexpr std::uint64_t kSeed = 42;
int g_failures = 0;

void report(int criterion, const char* what, bool passed, const std::string& detail = "") {
    std::printf("[%s] criterion %2d: %s%s%s\n", passed ? "PASS" : "FAIL", criterion, what,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!passed) ++g_failures;
}

bool check_passed(const CheckResult& c) { return c.passed; }

// criterion 1: laws 1-5 of the scalarization function, 1000 samples per cone
// family, tolerance 1e-9 (relative where scaled), zero failures.
void criterion_1() {
    bool ok = true;
    std::string detail;
    for (int law = 1; law <= 5; ++law) {
        CheckResult c = selftest::scalarization_law(law, kSeed, 1000);
        if (!check_passed(c)) {
            ok = false;
            detail += c.name + ": " + c.detail + "; ";
        }
    }
    report(1, "scalarization laws 1-5 hold within 1e-9", ok, detail);
}

// criterion 2: closed forms match the generic bracketing + bisection route
// within 1e-8 on 1000 samples.
void criterion_2() {
    CheckResult c = selftest::closed_form_agreement(kSeed, 1000);
    report(2, "closed forms agree with the bisection oracle within 1e-8", c.passed, c.detail);
}

// criterion 3: norm axioms and the norm/xi identity on the cone, 1e-9.
void criterion_3() {
    CheckResult axioms = selftest::norm_axioms(kSeed, 1000);
    CheckResult identity = selftest::norm_equals_xi(kSeed, 1000);
    report(3, "induced norm axioms and cone identity within 1e-9",
           axioms.passed && identity.passed, axioms.detail + " / " + identity.detail);
}

// criterion 4: two-sided equivalence sandwich and its tightness at x = e2
// and x = e, 1e-9.
void criterion_4() {
    CheckResult sandwich = selftest::equivalence_sandwich(kSeed, 1000);
    CheckResult tight = selftest::equivalence_tightness(kSeed, 1000);
    report(4, "equivalence sandwich with best-possible constants within 1e-9",
           sandwich.passed && tight.passed, sandwich.detail + " / " + tight.detail);
}

// criterion 5: real metric axioms of the induced metrics on three cone
// metrics, 200 triples each, plus the pairwise sandwich.
void criterion_5() {
    CheckResult axioms = selftest::induced_metric_axioms(kSeed, 200);
    CheckResult sandwich = selftest::induced_metric_sandwich(kSeed, 200);
    report(5, "induced metrics satisfy the axioms and the pairwise sandwich",
           axioms.passed && sandwich.passed, axioms.detail + " / " + sandwich.detail);
}

// criterion 6: forward direction of the order characterization, 1000 pairs
// with 16 sampled directions each, zero violations.
void criterion_6() {
    CheckResult c = selftest::order_forward(kSeed, 1000, 16);
    report(6, "order membership implies every scalarized inequality", c.passed, c.detail);
}

// criterion 7: r0 closed form for linear gauges within 1e-9 and the two
// defining inequalities at the returned value.
void criterion_7() {
    bool ok = true;
    double worst = 0.0;
    for (double k : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
        for (double d0 : {0.5, 1.0, 10.0}) {
            GaugeFunction g = GaugeFunction::linear(k);
            double r0 = compute_r0(g, d0);
            double expect = d0 / (1.0 - k);
            worst = std::max(worst, std::fabs(r0 - expect));
            if (std::fabs(r0 - expect) > 1e-9) ok = false;
            if (!(r0 - g(r0) <= d0 + 1e-6)) ok = false;
            if (!((r0 + 1e-6) - g(r0 + 1e-6) > d0)) ok = false;
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "worst |r0 - d0/(1-k)| = %.3g", worst);
    report(7, "r0 matches d0/(1-k) within 1e-9 and satisfies its inequalities", ok, buf);
}

// criterion 8: the affine problem converges to 2 with a small coincidence
// residual, few iterations, and an orbit diameter within the r0 bound.
void criterion_8() {
    JungckProblem p;
    p.metric = [](const Vec& a, const Vec& b) { return std::fabs(a[0] - b[0]); };
    p.f = [](const Vec& x) { return Vec{0.5 * x[0] + 1.0}; };
    p.g = [](const Vec& x) { return x; };
    p.g_preimage = [](const Vec& y) { return y; };
    for (auto& g : p.gauges) g = GaugeFunction::linear(0.6);
    p.x0 = {0.0};
    p.weakly_compatible = true;
    SolveReport r = jungck_solve(p);
    bool ok = r.converged && r.iterations <= 60;
    ok = ok && std::fabs(r.limit[0] - 2.0) <= 1e-8;
    ok = ok && r.coincidence_residual < 1e-8;
    ok = ok && r.contraction_violation_count == 0;
    ok = ok && r.observed_orbit_diameter <= r.r0_bound + 1e-6;
    char buf[96];
    std::snprintf(buf, sizeof buf, "limit %.12g in %d iterations, diameter %.6g <= r0 %.6g",
                  r.limit[0], r.iterations, r.observed_orbit_diameter, r.r0_bound);
    report(8, "affine solve reaches the coincidence point within bounds", ok, buf);
}

// criterion 9: the cone metric solve converges, both contraction checks
// agree on every orbit pair, and the scale reduction equals the linear
// gauge on the whole grid within 1e-9.
void criterion_9() {
    ConeMetricSpace space{SolidCone::orthant(2), 2, [](const Vec& a, const Vec& b) {
                              return Vec{std::fabs(a[0] - b[0]), std::fabs(a[1] - b[1])};
                          }};
    std::array<ConeGauge, 5> psis;
    for (auto& psi : psis) psi = ConeGauge::scaling(0.6, 0.2);
    SolveReport r = tvs_jungck_solve(
        space, [](const Vec& x) { return scale(0.5, x); }, [](const Vec& x) { return x; },
        [](const Vec& y) { return y; }, psis, {1.0, 1.0}, {8.0, 8.0}, 1e-10, 10000, true);
    bool ok = r.converged && norm_inf(r.limit) <= 1e-8;
    ok = ok && r.coincidence_residual < 1e-8;
    ok = ok && r.tvs_violation_count == 0 && r.contraction_violation_count == 0;
    ok = ok && r.check_disagreements == 0;

    double worst = 0.0;
    for (double k : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        GaugeFunction reduced =
            gauge_from_cone_map(space.cone, {1.0, 1.0}, ConeGauge::scaling(k, 0.05));
        for (double t : default_gauge_grid())
            worst = std::max(worst, std::fabs(reduced(t) - k * t) / std::max(1.0, k * t));
    }
    ok = ok && worst <= 1e-9;
    char buf[96];
    std::snprintf(buf, sizeof buf, "limit inf-norm %.3g, reduction error %.3g",
                  norm_inf(r.limit), worst);
    report(9, "cone metric solve agrees with its scalar reduction", ok, buf);
}

// criterion 10: a translation map yields nonconvergence with recorded
// contraction violations.
void criterion_10() {
    JungckProblem p;
    p.metric = [](const Vec& a, const Vec& b) { return std::fabs(a[0] - b[0]); };
    p.f = [](const Vec& x) { return Vec{x[0] + 1.0}; };
    p.g = [](const Vec& x) { return x; };
    p.g_preimage = [](const Vec& y) { return y; };
    for (auto& g : p.gauges) g = GaugeFunction::linear(0.5);
    p.x0 = {0.0};
    SolveReport r = jungck_solve(p);
    bool ok = !r.converged && r.contraction_violation_count > 0;
    report(10, "translation map is flagged as a nonconverging violation", ok,
           std::to_string(r.contraction_violation_count) + " violations recorded");
}

// criterion 11: selftest output is byte-identical across repeated runs, both
// through the C API and through the installed CLI.
void criterion_11() {
    bool ok = true;
    std::string detail;

    char* a = nullptr;
    char* b = nullptr;
    if (cs_selftest(nullptr, kSeed, nullptr, &a) != CS_OK ||
        cs_selftest(nullptr, kSeed, nullptr, &b) != CS_OK) {
        ok = false;
        detail = "selftest call failed";
    } else {
        std::string sa = a, sb = b;
        if (sa != sb) {
            ok = false;
            detail = "C API outputs differ";
        }
        if (sa.find("\"total_failures\":0") == std::string::npos) {
            ok = false;
            detail += " selftest reported failures";
        }
    }
    cs_string_free(a);
    cs_string_free(b);

#ifdef CONESCALE_CLI_PATH
    auto run_cli = [](const std::string& cmd) -> std::string {
        std::string out;
        FILE* pipe = popen(cmd.c_str(), "r");
        if (!pipe) return out;
        char buf[4096];
        size_t n = 0;
        while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
        pclose(pipe);
        return out;
    };
    const std::string cmd = std::string(CONESCALE_CLI_PATH) + " selftest --seed 42";
    std::string first = run_cli(cmd);
    std::string second = run_cli(cmd);
    if (first.empty() || first != second) {
        ok = false;
        detail += " CLI outputs differ or are empty";
    }
#endif
    report(11, "selftest with a fixed seed is byte-identical across runs", ok, detail);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    std::printf("%d of 11 criteria passed\n", 11 - g_failures);
    return g_failures;
}
