#include "conescale/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "conescale/cone_metric.hpp"
#include "conescale/cones.hpp"
#include "conescale/fixed_point.hpp"
#include "conescale/gauges.hpp"
#include "conescale/matrix.hpp"
#include "conescale/sampling.hpp"
#include "conescale/scalarization.hpp"

namespace conescale::selftest {

namespace {

constexpr double kTol = 1e-9;
const ConeKind kFamilies[] = {ConeKind::Orthant, ConeKind::Lorentz, ConeKind::Polyhedral};

double rel(double err, double scale) { return err / std::max(1.0, std::fabs(scale)); }

/// One cone per dimension 2..6 of the family; polyhedral cones are drawn
/// from a seed-determined stream.
std::vector<SolidCone> family_deck(ConeKind kind, std::uint64_t seed) {
    std::vector<SolidCone> cones;
    for (std::size_t dim = 2; dim <= 6; ++dim) {
        switch (kind) {
            case ConeKind::Orthant: cones.push_back(SolidCone::orthant(dim)); break;
            case ConeKind::Lorentz: cones.push_back(SolidCone::lorentz(dim)); break;
            case ConeKind::Polyhedral: {
                SplitMix64 rng(stream_seed(seed, "deck.polyhedral." + std::to_string(dim)));
                cones.push_back(sample_polyhedral_cone(dim, rng));
                break;
            }
        }
    }
    return cones;
}

struct Tally {
    int samples = 0;
    int failures = 0;
    double worst = 0.0;

    void observe(bool ok, double severity = 0.0) {
        ++samples;
        if (!ok) ++failures;
        worst = std::max(worst, severity);
    }

    CheckResult result(std::string name) const {
        return {std::move(name), failures == 0,
                std::to_string(failures) + " failures in " + std::to_string(samples) +
                    " samples, worst excess " + fmt3(worst)};
    }

    static std::string fmt3(double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3g", v);
        return buf;
    }
};

/// Runs `body(cone, rng)` samples_per_family times for each family deck.
template <class Body>
Tally per_family(std::uint64_t seed, const std::string& stream, int samples_per_family,
                 Body body) {
    Tally tally;
    for (ConeKind kind : kFamilies) {
        auto deck = family_deck(kind, seed);
        SplitMix64 rng(stream_seed(seed, stream + "." + to_string(kind)));
        for (int i = 0; i < samples_per_family; ++i)
            body(deck[static_cast<std::size_t>(i) % deck.size()], rng, tally);
    }
    return tally;
}

}  // namespace

CheckResult scalarization_law(int law, std::uint64_t seed, int samples_per_family) {
    const char* names[] = {"",
                           "xi_zero",
                           "xi_nonneg_on_cone",
                           "xi_monotone",
                           "xi_subadditive",
                           "xi_positively_homogeneous"};
    if (law < 1 || law > 5) throw DomainError("scalarization_law: law index must be 1..5");
    const std::string name = names[law];
    Tally t = per_family(
        seed, "scalarization." + name, samples_per_family,
        [law](const SolidCone& cone, SplitMix64& rng, Tally& tally) {
            Vec e = sample_interior(cone, rng);
            switch (law) {
                case 1: {
                    double v = xi(cone, e, zeros(cone.dim())).value;
                    tally.observe(v == 0.0, std::fabs(v));
                    break;
                }
                case 2: {
                    double v = xi(cone, e, sample_cone(cone, rng)).value;
                    tally.observe(v >= -kTol, -v);
                    break;
                }
                case 3: {
                    Vec y2 = sample_space(cone, rng);
                    Vec y1 = add(y2, sample_cone(cone, rng));
                    double a = xi(cone, e, y2).value, b = xi(cone, e, y1).value;
                    tally.observe(rel(a - b, b) <= kTol, rel(a - b, b));
                    break;
                }
                case 4: {
                    Vec x = sample_space(cone, rng), y = sample_space(cone, rng);
                    double s = xi(cone, e, add(x, y)).value;
                    double a = xi(cone, e, x).value, b = xi(cone, e, y).value;
                    tally.observe(rel(s - (a + b), a + b) <= kTol, rel(s - (a + b), a + b));
                    break;
                }
                case 5: {
                    Vec y = sample_space(cone, rng);
                    double lam = std::pow(10.0, rng.uniform(-2.0, 2.0));
                    double a = xi(cone, e, scale(lam, y)).value;
                    double b = lam * xi(cone, e, y).value;
                    tally.observe(rel(std::fabs(a - b), b) <= kTol, rel(std::fabs(a - b), b));
                    break;
                }
            }
        });
    return t.result(name);
}

CheckResult closed_form_agreement(std::uint64_t seed, int samples_per_family) {
    Tally tally;
    for (ConeKind kind : {ConeKind::Orthant, ConeKind::Lorentz}) {
        auto deck = family_deck(kind, seed);
        SplitMix64 rng(stream_seed(seed, std::string("scalarization.closed_form.") + to_string(kind)));
        for (int i = 0; i < samples_per_family; ++i) {
            const SolidCone& cone = deck[static_cast<std::size_t>(i) % deck.size()];
            Vec e;
            if (kind == ConeKind::Orthant) {
                e = sample_interior(cone, rng);
            } else {
                e = zeros(cone.dim());
                e.back() = rng.uniform(0.2, 3.0);
            }
            Vec y = sample_space(cone, rng);
            double a = xi(cone, e, y).value;
            double b = xi_bisection(cone, e, y).value;
            tally.observe(rel(std::fabs(a - b), a) <= 1e-8, rel(std::fabs(a - b), a));
        }
    }
    return tally.result("closed_form_matches_bisection");
}

CheckResult bracket_ray(std::uint64_t seed, int samples_per_family) {
    Tally t = per_family(seed, "scalarization.bracket_ray", samples_per_family,
                         [](const SolidCone& cone, SplitMix64& rng, Tally& tally) {
                             Vec e = sample_interior(cone, rng);
                             Vec y = sample_space(cone, rng);
                             double v = xi(cone, e, y).value;
                             bool inside = cone.contains(axpy(scale(-1.0, y), v + 1e-8, e));
                             bool outside = !cone.contains(axpy(scale(-1.0, y), v - 1e-6, e));
                             tally.observe(inside && outside);
                         });
    return t.result("xi_membership_ray");
}

CheckResult interior_bound(std::uint64_t seed, int samples_per_family) {
    Tally t = per_family(
        seed, "scalarization.interior_bound", samples_per_family,
        [](const SolidCone& cone, SplitMix64& rng, Tally& tally) {
            Vec e = sample_interior(cone, rng);
            Vec x = sample_interior(cone, rng);
            double v = xi(cone, e, x).value;
            double lam = 1.5 * v + 0.1;
            int guard = 0;
            while (!cone.strictly_less(x, scale(lam, e)) && guard++ < 8) lam *= 2.0;
            if (guard >= 8) return;  // no admissible lambda found, skip
            double neg = xi(cone, e, scale(-1.0, x)).value;
            bool ok = v >= -kTol && v < lam && -neg < lam + kTol;
            tally.observe(ok);
        });
    return t.result("xi_strict_interior_bounds");
}

CheckResult norm_axioms(std::uint64_t seed, int samples_per_family) {
    Tally t = per_family(
        seed, "scalarization.norm_axioms", samples_per_family,
        [](const SolidCone& cone, SplitMix64& rng, Tally& tally) {
            Vec e = sample_interior(cone, rng);
            Vec x = sample_space(cone, rng), y = sample_space(cone, rng);
            double nx = norm_e(cone, e, x), ny = norm_e(cone, e, y);
            bool ok = nx >= 0.0 && ny >= 0.0;
            ok = ok && norm_e(cone, e, zeros(cone.dim())) == 0.0;
            if (nx <= 1e-12) ok = ok && norm_inf(x) <= 1e-8;
            double nsum = norm_e(cone, e, add(x, y));
            ok = ok && rel(nsum - (nx + ny), nx + ny) <= kTol;
            double lam = rng.uniform(-50.0, 50.0);
            double nlam = norm_e(cone, e, scale(lam, x));
            ok = ok && rel(std::fabs(nlam - std::fabs(lam) * nx), std::fabs(lam) * nx) <= kTol;
            tally.observe(ok);
        });
    return t.result("norm_axioms");
}

CheckResult norm_equals_xi(std::uint64_t seed, int samples_per_family) {
    Tally t = per_family(seed, "scalarization.norm_equals_xi", samples_per_family,
                         [](const SolidCone& cone, SplitMix64& rng, Tally& tally) {
                             Vec e = sample_interior(cone, rng);
                             Vec x = sample_cone(cone, rng);
                             double n = norm_e(cone, e, x);
                             double v = xi(cone, e, x).value;
                             tally.observe(rel(std::fabs(n - v), v) <= kTol,
                                           rel(std::fabs(n - v), v));
                         });
    return t.result("norm_equals_xi_on_cone");
}

CheckResult lipschitz_bound(std::uint64_t seed, int samples_per_family) {
    Tally t = per_family(seed, "scalarization.lipschitz", samples_per_family,
                         [](const SolidCone& cone, SplitMix64& rng, Tally& tally) {
                             Vec e = sample_interior(cone, rng);
                             Vec x = sample_space(cone, rng), y = sample_space(cone, rng);
                             double gap = std::fabs(xi(cone, e, x).value - xi(cone, e, y).value);
                             double bound = norm_e(cone, e, sub(x, y));
                             tally.observe(rel(gap - bound, bound) <= kTol, rel(gap - bound, bound));
                         });
    return t.result("xi_lipschitz_in_norm");
}

CheckResult equivalence_sandwich(std::uint64_t seed, int samples_per_family) {
    Tally t = per_family(
        seed, "scalarization.equivalence_sandwich", samples_per_family,
        [](const SolidCone& cone, SplitMix64& rng, Tally& tally) {
            Vec e = sample_interior(cone, rng), e2 = sample_interior(cone, rng);
            Vec x = sample_space(cone, rng);
            auto [lower, upper] = equivalence_constants(cone, e, e2);
            double ne = norm_e(cone, e, x), ne2 = norm_e(cone, e2, x);
            double left = lower * ne - ne2;
            double right = ne2 - upper * ne;
            bool ok = rel(left, ne2) <= kTol && rel(right, upper * ne) <= kTol;
            tally.observe(ok, std::max(rel(left, ne2), rel(right, upper * ne)));
        });
    return t.result("equivalence_sandwich");
}

CheckResult equivalence_tightness(std::uint64_t seed, int samples_per_family) {
    Tally t = per_family(
        seed, "scalarization.equivalence_tightness", samples_per_family,
        [](const SolidCone& cone, SplitMix64& rng, Tally& tally) {
            Vec e = sample_interior(cone, rng), e2 = sample_interior(cone, rng);
            auto [lower, upper] = equivalence_constants(cone, e, e2);
            // Left constant is attained at x = e2, right one at x = e.
            double left_gap = std::fabs(lower * norm_e(cone, e, e2) - norm_e(cone, e2, e2));
            double right_gap = std::fabs(norm_e(cone, e2, e) - upper * norm_e(cone, e, e));
            bool ok = rel(left_gap, 1.0) <= kTol && rel(right_gap, upper) <= kTol;
            tally.observe(ok, std::max(left_gap, right_gap));
        });
    return t.result("equivalence_tightness");
}

// ---- canonical cone metric spaces ----

namespace {

ConeMetricSpace orthant_coordinatewise_space() {
    return {SolidCone::orthant(2), 2, [](const Vec& a, const Vec& b) {
                return Vec{std::fabs(a[0] - b[0]), std::fabs(a[1] - b[1])};
            }};
}

ConeMetricSpace lorentz_axis_space() {
    return {SolidCone::lorentz(2), 2, [](const Vec& a, const Vec& b) {
                return Vec{0.0, norm2(sub(a, b))};
            }};
}

ConeMetricSpace polyhedral_image_space(std::uint64_t seed) {
    SplitMix64 rng(stream_seed(seed, "deck.metric.polyhedral"));
    SolidCone cone = sample_polyhedral_cone(2, rng);
    Matrix b = Matrix::from_rows({cone.normals()[0], cone.normals()[1]});
    Matrix binv = *inverse(b);
    return {cone, 2, [binv](const Vec& x, const Vec& y) {
                return matvec(binv, Vec{std::fabs(x[0] - y[0]), std::fabs(x[1] - y[1])});
            }};
}

std::vector<ConeMetricSpace> canonical_spaces(std::uint64_t seed) {
    return {orthant_coordinatewise_space(), lorentz_axis_space(), polyhedral_image_space(seed)};
}

Vec sample_point(SplitMix64& rng) { return Vec{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)}; }

}  // namespace

CheckResult induced_metric_axioms(std::uint64_t seed, int triples) {
    Tally tally;
    for (const auto& space : canonical_spaces(seed)) {
        SplitMix64 rng(stream_seed(seed, "cone_metric.axioms." + std::string(to_string(space.cone.kind()))));
        std::vector<Vec> deck = interior_deck(space.cone, 3, stream_seed(seed, "cone_metric.axioms.e"));
        for (const auto& e : deck) {
            InducedMetric de(space, e);
            for (int i = 0; i < triples; ++i) {
                Vec x = sample_point(rng), y = sample_point(rng), z = sample_point(rng);
                bool ok = de(x, x) <= 1e-12;
                double dxy = de(x, y);
                ok = ok && dxy >= 0.0;
                if (norm_inf(sub(x, y)) > 1e-6) ok = ok && dxy > 1e-9;
                ok = ok && std::fabs(dxy - de(y, x)) <= kTol * std::max(1.0, dxy);
                double slack = de(x, z) - (dxy + de(y, z));
                ok = ok && rel(slack, dxy) <= kTol;
                tally.observe(ok, rel(slack, dxy));
            }
        }
    }
    return tally.result("induced_metric_axioms");
}

CheckResult induced_metric_sandwich(std::uint64_t seed, int pairs) {
    Tally tally;
    for (const auto& space : canonical_spaces(seed)) {
        SplitMix64 rng(stream_seed(seed, "cone_metric.sandwich." + std::string(to_string(space.cone.kind()))));
        for (int i = 0; i < pairs; ++i) {
            Vec e = sample_interior(space.cone, rng), e2 = sample_interior(space.cone, rng);
            auto [lower, upper] = equivalence_constants(space.cone, e, e2);
            InducedMetric de(space, e), de2(space, e2);
            Vec x = sample_point(rng), y = sample_point(rng);
            double a = de(x, y), b = de2(x, y);
            bool ok = rel(lower * a - b, b) <= kTol && rel(b - upper * a, upper * a) <= kTol;
            tally.observe(ok, std::max(rel(lower * a - b, b), rel(b - upper * a, upper * a)));
        }
    }
    return tally.result("induced_metric_sandwich");
}

CheckResult order_forward(std::uint64_t seed, int pairs_per_family, int e_count) {
    Tally tally;
    for (ConeKind kind : kFamilies) {
        auto deck = family_deck(kind, seed);
        SplitMix64 rng(stream_seed(seed, std::string("cone_metric.order.") + to_string(kind)));
        std::vector<std::vector<Vec>> e_decks;
        for (std::size_t c = 0; c < deck.size(); ++c)
            e_decks.push_back(interior_deck(deck[c], e_count,
                                            stream_seed(seed, "order.e." + std::to_string(c))));
        for (int i = 0; i < pairs_per_family; ++i) {
            const std::size_t c = static_cast<std::size_t>(i) % deck.size();
            const SolidCone& cone = deck[c];
            Vec x = sample_cone(cone, rng);
            Vec y = rng.chance(0.1) ? x : add(x, sample_cone(cone, rng));
            OrderCheckResult r = order_check(cone, x, y, e_decks[c]);
            // Forward direction is a theorem: membership must imply the
            // scalarized conjunction.
            tally.observe(!r.leq_membership || r.leq_scalarized);
        }
    }
    return tally.result("order_forward_direction");
}

// ---- suite assembly ----

namespace {

void push(SuiteResult& suite, CheckResult c) {
    if (!c.passed) ++suite.failures;
    suite.checks.push_back(std::move(c));
}

SuiteResult cones_suite(std::uint64_t seed) {
    SuiteResult s{"cones", {}, 0};

    {
        bool ok = true;
        std::string detail;
        for (ConeKind kind : kFamilies)
            for (const auto& cone : family_deck(kind, seed)) {
                ValidationReport r = validate(cone, seed);
                if (!r.all_passed()) {
                    ok = false;
                    detail = std::string("family ") + to_string(kind) + " failed validation";
                }
            }
        push(s, {"builtin_families_validate", ok, ok ? "all families, dims 2-6" : detail});
    }

    {
        Tally t = per_family(seed, "cones.sum_interior", 1000,
                             [](const SolidCone& cone, SplitMix64& rng, Tally& tally) {
                                 Vec x = sample_cone(cone, rng);
                                 Vec y = sample_interior(cone, rng);
                                 Vec sum = add(x, y);
                                 tally.observe(cone.contains(sum) && cone.interior_contains(sum));
                             });
        push(s, t.result("sum_with_interior_is_interior"));
    }

    {
        Tally t = per_family(seed, "cones.leq_reflexive", 1000,
                             [](const SolidCone& cone, SplitMix64& rng, Tally& tally) {
                                 Vec x = sample_space(cone, rng);
                                 tally.observe(cone.leq(x, x));
                             });
        push(s, t.result("leq_reflexive"));
    }

    {
        Tally t = per_family(seed, "cones.leq_transitive", 1000,
                             [](const SolidCone& cone, SplitMix64& rng, Tally& tally) {
                                 Vec x = sample_space(cone, rng);
                                 Vec y = add(x, sample_cone(cone, rng));
                                 Vec z = add(y, sample_cone(cone, rng));
                                 if (cone.leq(x, y) && cone.leq(y, z))
                                     tally.observe(cone.leq(x, z));
                             });
        push(s, t.result("leq_transitive"));
    }

    {
        Tally t = per_family(
            seed, "cones.leq_antisymmetry", 1000,
            [](const SolidCone& cone, SplitMix64& rng, Tally& tally) {
                Vec x = sample_space(cone, rng);
                Vec y = x;
                if (rng.chance(0.5)) {
                    // Perturb within the membership tolerance band.
                    for (auto& c : y) c += 0.5 * cone.tol_membership() * rng.uniform(-1.0, 1.0);
                }
                if (cone.leq(x, y) && cone.leq(y, x))
                    tally.observe(norm_inf(sub(x, y)) <= 10.0 * cone.tol_membership());
            });
        push(s, t.result("leq_antisymmetry_tolerance"));
    }

    {
        Tally t = per_family(seed, "cones.strict_implies_leq", 1000,
                             [](const SolidCone& cone, SplitMix64& rng, Tally& tally) {
                                 Vec x = sample_space(cone, rng);
                                 Vec y = add(x, sample_interior(cone, rng));
                                 if (cone.strictly_less(x, y)) tally.observe(cone.leq(x, y));
                             });
        push(s, t.result("strictly_less_implies_leq"));
    }

    {
        Tally t = per_family(seed, "cones.find_scale", 200,
                             [](const SolidCone& cone, SplitMix64& rng, Tally& tally) {
                                 Vec c = sample_interior(cone, rng);
                                 Vec e = sample_interior(cone, rng);
                                 double delta = cone.find_scale(c, e);
                                 tally.observe(cone.strictly_less(zeros(cone.dim()),
                                                                  sub(e, scale(delta, c))));
                             });
        push(s, t.result("find_scale_postcondition"));
    }

    return s;
}

SuiteResult scalarization_suite(std::uint64_t seed) {
    SuiteResult s{"scalarization", {}, 0};
    for (int law = 1; law <= 5; ++law) push(s, scalarization_law(law, seed, 1000));
    push(s, bracket_ray(seed, 1000));
    push(s, interior_bound(seed, 1000));
    push(s, norm_axioms(seed, 1000));
    push(s, norm_equals_xi(seed, 1000));
    push(s, lipschitz_bound(seed, 1000));
    push(s, equivalence_sandwich(seed, 1000));
    push(s, equivalence_tightness(seed, 1000));
    push(s, closed_form_agreement(seed, 1000));
    return s;
}

SuiteResult cone_metric_suite(std::uint64_t seed) {
    SuiteResult s{"cone_metric", {}, 0};
    push(s, induced_metric_axioms(seed, 200));
    push(s, induced_metric_sandwich(seed, 200));

    {
        // Geometric sequence with known tail indices under eps = 1e-3.
        ConeMetricSpace space = orthant_coordinatewise_space();
        std::vector<Vec> seq;
        for (int n = 0; n <= 14; ++n) {
            double v = std::ldexp(1.0, -n);
            seq.push_back(Vec{v, v});
        }
        std::vector<Vec> es = {Vec{1.0, 1.0}, Vec{1.0, 2.0}, Vec{2.0, 1.0}};
        SequenceReport r = sequence_analysis(space, seq, es, 1e-3, Vec{0.0, 0.0});
        bool ok = r.cross_e_consistent;
        for (const auto& entry : r.per_e) {
            ok = ok && entry.cauchy_tail == 10;
            ok = ok && entry.convergence_tail && *entry.convergence_tail == 10;
        }
        // Constant sequences need no tail at all.
        SequenceReport rc = sequence_analysis(space, {Vec{1, 1}, Vec{1, 1}, Vec{1, 1}}, es, 1e-3,
                                              Vec{1.0, 1.0});
        for (const auto& entry : rc.per_e)
            ok = ok && entry.cauchy_tail == 0 && entry.convergence_tail &&
                 *entry.convergence_tail == 0;
        push(s, {"sequence_tail_indices", ok, "geometric and constant prefixes, eps 1e-3"});
    }

    push(s, order_forward(seed, 1000, 16));

    {
        // Formal substitution templates on the coordinatewise space.
        ConeMetricSpace space = orthant_coordinatewise_space();
        std::vector<Vec> es = interior_deck(space.cone, 8, stream_seed(seed, "translation.e"));
        auto distinct_pair = [](SplitMix64& rng) {
            Vec x{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
            Vec y{x[0] + (rng.chance(0.5) ? 1 : -1) * rng.uniform(0.1, 2.0),
                  x[1] + (rng.chance(0.5) ? 1 : -1) * rng.uniform(0.1, 2.0)};
            return std::pair(x, y);
        };
        // d(fx, fy) <= 0.5 d(x, y) for f = x/2: tuple (x, y, fx, fy).
        TupleSampler halves = [distinct_pair](SplitMix64& rng) {
            auto [x, y] = distinct_pair(rng);
            return std::vector<Vec>{x, y, scale(0.5, x), scale(0.5, y)};
        };
        ConditionTemplate exact{4, {{1.0, 2, 3}}, {{0.5, 0, 1}}};
        TranslationReport r1 = check_condition_translation(space, exact, halves, 200, es, seed);
        bool ok = r1.membership_violations == 0 && r1.scalarized_violations == 0 &&
                  r1.forward_mismatches == 0 && r1.reverse_mismatches == 0;

        // d(x,y) <= d(x,y) is reflexively tight.
        TupleSampler pair2 = [distinct_pair](SplitMix64& rng) {
            auto [x, y] = distinct_pair(rng);
            return std::vector<Vec>{x, y};
        };
        ConditionTemplate reflexive{2, {{1.0, 0, 1}}, {{1.0, 0, 1}}};
        TranslationReport r2 = check_condition_translation(space, reflexive, pair2, 200, es, seed);
        ok = ok && r2.membership_violations == 0 && r2.scalarized_violations == 0;

        // d(x,y) <= 0.5 d(x,y) fails both readings on every separated pair.
        ConditionTemplate strict{2, {{1.0, 0, 1}}, {{0.5, 0, 1}}};
        TranslationReport r3 = check_condition_translation(space, strict, pair2, 200, es, seed);
        ok = ok && r3.membership_violations == 200 && r3.scalarized_violations == 200 &&
             r3.forward_mismatches == 0 && r3.reverse_mismatches == 0;
        push(s, {"translation_templates", ok,
                 "halving, reflexive and strict templates behave as predicted"});
    }

    return s;
}

SuiteResult gauges_suite(std::uint64_t seed) {
    SuiteResult s{"gauges", {}, 0};
    const auto grid = default_gauge_grid();

    {
        bool ok = true;
        for (double k : {0.0, 0.1, 0.3, 0.5, 0.7, 0.9})
            ok = ok && validate_gauge(GaugeFunction::linear(k), grid).all_passed();
        ok = ok && validate_gauge(GaugeFunction::saturating(), grid).all_passed();
        push(s, {"builtin_gauges_validate", ok, "linear family and saturating on default grid"});
    }

    {
        bool ok = true;
        double worst = 0.0;
        for (double k : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9})
            for (double d0 : {0.5, 1.0, 10.0}) {
                double r0 = compute_r0(GaugeFunction::linear(k), d0);
                double expect = d0 / (1.0 - k);
                worst = std::max(worst, std::fabs(r0 - expect));
                ok = ok && std::fabs(r0 - expect) <= 1e-9;
            }
        push(s, {"r0_linear_closed_form", ok, "worst absolute error " + Tally::fmt3(worst)});
    }

    {
        bool ok = true;
        std::vector<GaugeFunction> gs = {GaugeFunction::linear(0.5), GaugeFunction::linear(0.9),
                                         GaugeFunction::saturating()};
        for (const auto& g : gs)
            for (double d0 : {0.5, 1.0, 10.0}) {
                double r0 = compute_r0(g, d0);
                ok = ok && r0 - g(r0) <= d0 + 1e-6;
                double probe = r0 + 1e-6;
                ok = ok && probe - g(probe) > d0;
            }
        push(s, {"r0_defining_inequalities", ok, "both proof inequalities at the returned r0"});
    }

    {
        Tally tally;
        for (ConeKind kind : kFamilies) {
            auto deck = family_deck(kind, seed);
            SplitMix64 rng(stream_seed(seed, std::string("gauges.scale_reduction.") + to_string(kind)));
            for (const auto& cone : deck) {
                Vec e = sample_interior(cone, rng);
                for (double k : {0.1, 0.5, 0.9}) {
                    GaugeFunction g = gauge_from_cone_map(cone, e, ConeGauge::scaling(k, 0.05));
                    GaugeFunction lin = GaugeFunction::linear(k);
                    double worst = 0.0;
                    for (double t : grid) worst = std::max(worst, rel(std::fabs(g(t) - lin(t)), lin(t)));
                    tally.observe(worst <= kTol, worst);
                }
            }
        }
        push(s, tally.result("scale_reduction_matches_linear"));
    }

    {
        bool ok = validate_gauge(majorant({GaugeFunction::linear(0.3), GaugeFunction::linear(0.7)}),
                                 grid)
                      .all_passed();
        ok = ok && validate_gauge(majorant({GaugeFunction::linear(0.5),
                                            GaugeFunction::saturating()}),
                                  grid)
                       .all_passed();
        push(s, {"majorant_preserves_phi2", ok, "pointwise max of builtin gauges on default grid"});
    }

    {
        bool ok = true;
        for (ConeKind kind : kFamilies)
            for (const auto& cone : family_deck(kind, seed)) {
                ValidationReport r =
                    validate_cone_gauge(cone, ConeGauge::scaling(0.6, 0.2), 200, seed);
                ok = ok && r.all_passed();
            }
        // A diagonal operator: on the orthant the complement I - A must be
        // entrywise nonnegative, which rules out positive off-diagonals.
        Matrix a(2, 2);
        a(0, 0) = 0.5;
        a(1, 1) = 0.25;
        ValidationReport r =
            validate_cone_gauge(SolidCone::orthant(2), ConeGauge::linear_operator(a, 0.25), 200, seed);
        ok = ok && r.all_passed();
        push(s, {"cone_gauge_contract", ok,
                 "zero, interior preservation, ray growth and sequential margin"});
    }

    return s;
}

namespace {

JungckProblem affine_line_problem(double slope, double offset, double gauge_k, Vec x0) {
    JungckProblem p;
    p.metric = [](const Vec& a, const Vec& b) { return std::fabs(a[0] - b[0]); };
    p.f = [slope, offset](const Vec& x) { return Vec{slope * x[0] + offset}; };
    p.g = [](const Vec& x) { return x; };
    p.g_preimage = [](const Vec& y) { return y; };
    for (auto& g : p.gauges) g = GaugeFunction::linear(gauge_k);
    p.x0 = std::move(x0);
    p.weakly_compatible = true;
    return p;
}

}  // namespace

SuiteResult fixed_point_suite([[maybe_unused]] std::uint64_t seed) {
    // Every fixed-point check runs a deterministic problem; the seed is kept
    // for signature uniformity with the other suites.
    SuiteResult s{"fixed_point", {}, 0};

    SolveReport half = jungck_solve(affine_line_problem(0.5, 1.0, 0.6, Vec{0.0}));
    {
        bool ok = half.converged && half.iterations <= 60;
        ok = ok && std::fabs(half.limit[0] - 2.0) <= 1e-8;
        ok = ok && half.coincidence_residual < 1e-8;
        ok = ok && half.contraction_violation_count == 0;
        ok = ok && half.observed_orbit_diameter <= half.r0_bound + 1e-6;
        push(s, {"affine_convergence_orbit_bound", ok,
                 "limit 2 within 1e-8 in " + std::to_string(half.iterations) +
                     " iterations, diameter within r0"});
    }

    {
        // The problem's five gauges are all linear(0.6), so that is the
        // majorant. The nested-window bound is checked for every retained
        // start index and window length.
        GaugeFunction maj = majorant({GaugeFunction::linear(0.6)});
        bool ok = true;
        const std::size_t len = half.trajectory.size();
        for (std::size_t k = 1; k + 1 < len; ++k)
            for (std::size_t n = 1; k + n + 1 < len; ++n) {
                double inner = windowed_diameter(half, k, n);
                double outer = windowed_diameter(half, k - 1, n + 1);
                ok = ok && inner <= maj(outer) + kTol;
            }
        push(s, {"orbit_windowed_diameter_bound", ok,
                 "nested window diameters contract through the majorant gauge"});
    }

    {
        SolveReport other = jungck_solve(affine_line_problem(0.5, 1.0, 0.6, Vec{10.0}));
        bool ok = other.converged &&
                  std::fabs(other.limit[0] - half.limit[0]) <= 10.0 * 1e-10;
        push(s, {"uniqueness_two_starts", ok, "limits from x0 = 0 and x0 = 10 coincide"});
    }

    {
        bool ok = half.fixed_point_residual && *half.fixed_point_residual <= 10.0 * 1e-10;
        ok = ok && half.commutation_residual && *half.commutation_residual <= 1e-8;
        push(s, {"weak_compatibility_residual", ok,
                 "common fixed point residual within 10*tol_conv"});
    }

    {
        ConeMetricSpace space = orthant_coordinatewise_space();
        std::array<ConeGauge, 5> psis;
        for (auto& psi : psis) psi = ConeGauge::scaling(0.6, 0.2);
        SolveReport r = tvs_jungck_solve(
            space, [](const Vec& x) { return scale(0.5, x); }, [](const Vec& x) { return x; },
            [](const Vec& y) { return y; }, psis, Vec{1.0, 1.0}, Vec{8.0, 8.0}, 1e-10, 10000,
            true);
        bool ok = r.converged && norm_inf(r.limit) <= 1e-8;
        ok = ok && r.coincidence_residual < 1e-8;
        ok = ok && r.contraction_violation_count == 0 && r.tvs_violation_count == 0;
        ok = ok && r.check_disagreements == 0;
        push(s, {"tvs_reduction_agreement", ok,
                 "scalarized and cone-order contraction checks agree on every orbit pair"});
    }

    {
        SolveReport bad = jungck_solve(affine_line_problem(1.0, 1.0, 0.5, Vec{0.0}));
        bool ok = !bad.converged && bad.contraction_violation_count > 0;
        push(s, {"negative_control_flags_violations", ok,
                 std::to_string(bad.contraction_violation_count) +
                     " contraction violations, no convergence"});
    }

    return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"cones", "scalarization", "cone_metric",
                                                   "gauges", "fixed_point"};
    return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
    if (name == "cones") return cones_suite(seed);
    if (name == "scalarization") return scalarization_suite(seed);
    if (name == "cone_metric") return cone_metric_suite(seed);
    if (name == "gauges") return gauges_suite(seed);
    if (name == "fixed_point") return fixed_point_suite(seed);
    throw DomainError("selftest: unknown suite '" + name + "'");
}

SelftestReport run_selftest(const std::optional<std::string>& suite, std::uint64_t seed) {
    SelftestReport rep;
    rep.seed = seed;
    if (suite) {
        rep.suites.push_back(run_suite(*suite, seed));
    } else {
        for (const auto& name : suite_names()) rep.suites.push_back(run_suite(name, seed));
    }
    for (const auto& s : rep.suites) rep.total_failures += s.failures;
    return rep;
}

}  // namespace conescale::selftest
