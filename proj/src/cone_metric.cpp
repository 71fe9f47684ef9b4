#include "conescale/cone_metric.hpp"

#include <cmath>

namespace conescale {

namespace {
constexpr double kTol = 1e-9;
}

InducedMetric::InducedMetric(ConeMetricSpace space, Vec e) : space_(std::move(space)), e_(std::move(e)) {
    if (!space_.cone.interior_contains(e_))
        throw NotInteriorError("induced_metric: e is not interior");
}

double InducedMetric::operator()(const Vec& x, const Vec& y) const {
    return xi(space_.cone, e_, space_.d(x, y)).value;
}

InducedMetric induced_metric(const ConeMetricSpace& space, const Vec& e) {
    return InducedMetric(space, e);
}

std::vector<std::vector<double>> induced_matrix(const FiniteConeMetric& space, const Vec& e) {
    if (!space.cone.interior_contains(e))
        throw NotInteriorError("induced_matrix: e is not interior");
    const std::size_t n = space.size();
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = xi(space.cone, e, space.d[i][j]).value;
    return m;
}

namespace {

/// Shared axiom loop over triples supplied by a callback.
ValidationReport axiom_screen(const SolidCone& cone,
                              const std::function<Vec(SplitMix64&)>& point,
                              const ConeDistance& d, int sample_triples, std::uint64_t seed,
                              bool finite_universe) {
    ValidationReport rep;
    SplitMix64 rng(stream_seed(seed, "cone_metric.validate"));
    int in_cone_fail = 0, identity_fail = 0, separation_fail = 0, symmetry_fail = 0,
        triangle_fail = 0;
    for (int s = 0; s < sample_triples; ++s) {
        Vec x = point(rng), y = point(rng), z = point(rng);
        Vec dxy = d(x, y), dyx = d(y, x), dxz = d(x, z), dyz = d(y, z), dxx = d(x, x);
        if (!cone.contains(dxy) || !cone.contains(dxz) || !cone.contains(dyz)) ++in_cone_fail;
        if (norm_inf(dxx) > kTol) ++identity_fail;
        bool distinct = finite_universe ? !(x == y) : norm_inf(sub(x, y)) > 1e-6;
        if (distinct && norm_inf(dxy) <= cone.tol_membership()) ++separation_fail;
        if (norm_inf(sub(dxy, dyx)) > kTol * std::max(1.0, norm_inf(dxy))) ++symmetry_fail;
        if (!cone.leq(dxz, add(dxy, dyz))) ++triangle_fail;
    }
    auto tally = [&](const char* name, int fails) {
        rep.add(name, fails == 0,
                std::to_string(fails) + " failures in " + std::to_string(sample_triples) +
                    " triples");
    };
    tally("values_in_cone", in_cone_fail);
    tally("identity", identity_fail);
    tally("separation", separation_fail);
    tally("symmetry", symmetry_fail);
    tally("triangle_inequality", triangle_fail);
    return rep;
}

}  // namespace

ValidationReport validate_cone_metric(const ConeMetricSpace& space, const PointSampler& points,
                                      int sample_triples, std::uint64_t seed) {
    return axiom_screen(space.cone, points, space.d, sample_triples, seed, false);
}

ValidationReport validate_cone_metric(const FiniteConeMetric& space, int sample_triples,
                                      std::uint64_t seed) {
    const std::size_t n = space.size();
    if (n == 0) throw DomainError("validate_cone_metric: empty finite space");
    for (const auto& row : space.d)
        if (row.size() != n) throw DimensionError("validate_cone_metric: distance matrix not square");
    auto point = [n](SplitMix64& rng) { return Vec{static_cast<double>(rng.below(n))}; };
    ConeDistance d = [&space](const Vec& a, const Vec& b) {
        return space.d[static_cast<std::size_t>(a[0])][static_cast<std::size_t>(b[0])];
    };
    return axiom_screen(space.cone, point, d, sample_triples, seed, true);
}

namespace {

/// Smallest T with max over pairs T <= m < n < len of values[m][n] < eps.
/// Vacuous at T = len-1 (no pairs left).
int pair_tail_index(const std::vector<std::vector<double>>& values, double eps) {
    const int n = static_cast<int>(values.size());
    // suffix_max[t] = max over pairs with both indices >= t
    int tail = n - 1;
    double running = 0.0;
    for (int t = n - 2; t >= 0; --t) {
        for (int j = t + 1; j < n; ++j) running = std::max(running, values[t][j]);
        if (running < eps)
            tail = t;
        else
            break;
    }
    return tail;
}

}  // namespace

SequenceReport sequence_analysis(const ConeMetricSpace& space, const std::vector<Vec>& seq,
                                 const std::vector<Vec>& e_samples, double eps,
                                 const std::optional<Vec>& limit) {
    if (seq.size() < 2) throw DomainError("sequence_analysis: need at least two points");
    if (e_samples.empty()) throw DomainError("sequence_analysis: need at least one direction e");
    const int n = static_cast<int>(seq.size());

    SequenceReport rep;
    // Pairwise d_e tables per direction, reused for the consistency check.
    std::vector<std::vector<std::vector<double>>> tables;
    for (const auto& e : e_samples) {
        InducedMetric de(space, e);
        std::vector<std::vector<double>> table(seq.size(), std::vector<double>(seq.size(), 0.0));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) table[i][j] = de(seq[i], seq[j]);

        SequenceTail entry;
        entry.e = e;
        entry.cauchy_tail = pair_tail_index(table, eps);
        entry.cauchy_vacuous = entry.cauchy_tail == n - 1;
        if (limit) {
            int t = n;
            double running = 0.0;
            for (int i = n - 1; i >= 0; --i) {
                running = std::max(running, de(seq[i], *limit));
                if (running < eps)
                    t = i;
                else
                    break;
            }
            if (t < n) entry.convergence_tail = t;
        }
        rep.per_e.push_back(std::move(entry));
        tables.push_back(std::move(table));
    }

    // Sandwich consistency: d_{e_j} <= upper_ij * d_{e_i} pointwise, so the
    // tail of e_j at eps can be no later than the tail of e_i at eps/upper.
    for (std::size_t i = 0; i < e_samples.size(); ++i) {
        for (std::size_t j = 0; j < e_samples.size(); ++j) {
            if (i == j) continue;
            double upper = equivalence_constants(space.cone, e_samples[i], e_samples[j]).second;
            int bound = pair_tail_index(tables[i], eps / upper);
            if (rep.per_e[j].cauchy_tail > bound) {
                rep.cross_e_consistent = false;
                rep.notes.push_back("tail index for direction " + std::to_string(j) +
                                    " exceeds the sandwich bound from direction " +
                                    std::to_string(i));
            }
        }
    }
    return rep;
}

OrderCheckResult order_check(const SolidCone& cone, const Vec& x, const Vec& y,
                             const std::vector<Vec>& e_samples) {
    if (!cone.contains(x) || !cone.contains(y))
        throw DomainError("order_check: x and y must belong to the cone");
    if (e_samples.empty()) throw DomainError("order_check: need at least one direction e");
    OrderCheckResult r;
    r.leq_membership = cone.leq(x, y);
    r.leq_scalarized = true;
    for (const auto& e : e_samples) {
        double xx = xi(cone, e, x).value;
        double xy = xi(cone, e, y).value;
        if (!(xx <= xy + kTol)) {
            r.leq_scalarized = false;
            break;
        }
    }
    r.sampling_gap = r.leq_scalarized && !r.leq_membership;
    return r;
}

namespace {

Vec eval_terms(const ConeMetricSpace& space, const std::vector<DTerm>& terms,
               const std::vector<Vec>& pts) {
    Vec acc = zeros(space.cone.dim());
    for (const auto& t : terms) acc = axpy(acc, t.coeff, space.d(pts[t.p], pts[t.q]));
    return acc;
}

void check_template(const ConditionTemplate& tmpl) {
    if (tmpl.arity == 0) throw TemplateError("template: arity must be positive");
    if (tmpl.lhs.empty() || tmpl.rhs.empty())
        throw TemplateError("template: both sides need at least one term");
    for (const auto* side : {&tmpl.lhs, &tmpl.rhs})
        for (const auto& t : *side) {
            if (!(t.coeff >= 0.0)) throw TemplateError("template: coefficients must be nonnegative");
            if (t.p >= tmpl.arity || t.q >= tmpl.arity)
                throw TemplateError("template: point index out of range");
        }
}

}  // namespace

TranslationReport check_condition_translation(const ConeMetricSpace& space,
                                              const ConditionTemplate& tmpl,
                                              const TupleSampler& tuples, int sample_pairs,
                                              const std::vector<Vec>& e_samples,
                                              std::uint64_t seed) {
    check_template(tmpl);
    if (e_samples.empty())
        throw TemplateError("check_condition_translation: need at least one direction e");
    SplitMix64 rng(stream_seed(seed, "condition_translation"));
    TranslationReport rep;
    rep.samples = sample_pairs;
    for (int s = 0; s < sample_pairs; ++s) {
        std::vector<Vec> pts = tuples(rng);
        if (pts.size() != tmpl.arity)
            throw TemplateError("check_condition_translation: sampler arity mismatch");
        Vec lhs = eval_terms(space, tmpl.lhs, pts);
        Vec rhs = eval_terms(space, tmpl.rhs, pts);
        bool membership = space.cone.leq(lhs, rhs);
        bool scalarized = true;
        for (const auto& e : e_samples) {
            double a = xi(space.cone, e, lhs).value;
            double b = xi(space.cone, e, rhs).value;
            if (!(a <= b + kTol * std::max(1.0, std::fabs(b)))) {
                scalarized = false;
                break;
            }
        }
        if (!membership) ++rep.membership_violations;
        if (!scalarized) ++rep.scalarized_violations;
        if (membership && !scalarized) ++rep.forward_mismatches;
        if (!membership && scalarized) ++rep.reverse_mismatches;
    }
    return rep;
}

SumDiagnostic induced_sum_diagnostic(const ConeMetricSpace& space, const Vec& e1, const Vec& e2,
                                     const Vec& x, const Vec& y) {
    SumDiagnostic d;
    d.d_e1 = InducedMetric(space, e1)(x, y);
    d.d_e2 = InducedMetric(space, e2)(x, y);
    d.d_e_sum = InducedMetric(space, add(e1, e2))(x, y);
    return d;
}

}  // namespace conescale
