#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "conescale/cones.hpp"
#include "conescale/report.hpp"
#include "conescale/rng.hpp"
#include "conescale/scalarization.hpp"

namespace conescale {

/// P-valued distance oracle. Must be symmetric, vanish exactly on the
/// diagonal and satisfy the cone-order triangle inequality; use
/// validate_cone_metric to screen a candidate.
using ConeDistance = std::function<Vec(const Vec&, const Vec&)>;

/// A cone metric structure on points of R^point_dim with distances in the
/// cone living in R^cone.dim(). The two dimensions are independent.
struct ConeMetricSpace {
    SolidCone cone;
    std::size_t point_dim = 0;
    ConeDistance d;
};

/// The real metric d_e = xi_e . d induced by an interior direction e.
class InducedMetric {
public:
    InducedMetric(ConeMetricSpace space, Vec e);

    double operator()(const Vec& x, const Vec& y) const;

    const Vec& e() const { return e_; }
    const ConeMetricSpace& base() const { return space_; }

private:
    ConeMetricSpace space_;
    Vec e_;
};

InducedMetric induced_metric(const ConeMetricSpace& space, const Vec& e);

/// Finite cone metric: an n x n matrix of cone vectors, the form consumed by
/// the CLI. Index pairs are the point universe.
struct FiniteConeMetric {
    SolidCone cone;
    std::vector<std::vector<Vec>> d;

    std::size_t size() const { return d.size(); }
};

/// Full real distance matrix of the induced metric on a finite space.
std::vector<std::vector<double>> induced_matrix(const FiniteConeMetric& space, const Vec& e);

using PointSampler = std::function<Vec(SplitMix64&)>;

/// Sampled axiom screen for a cone metric oracle: identity, symmetry and the
/// cone-order triangle inequality over random triples, plus a check that
/// values land in P.
ValidationReport validate_cone_metric(const ConeMetricSpace& space, const PointSampler& points,
                                      int sample_triples, std::uint64_t seed);

/// Same screen for a finite space; triples are sampled from the index set.
ValidationReport validate_cone_metric(const FiniteConeMetric& space, int sample_triples,
                                      std::uint64_t seed);

struct SequenceTail {
    Vec e;
    /// Smallest index T such that every pair m, n >= T inside the prefix has
    /// d_e(x_m, x_n) < eps. T = len-1 means the bound held only vacuously.
    int cauchy_tail = 0;
    bool cauchy_vacuous = false;
    /// Same for d_e(x_n, limit) when a candidate limit was supplied; absent
    /// if no index worked within the prefix.
    std::optional<int> convergence_tail;
};

struct SequenceReport {
    std::vector<SequenceTail> per_e;
    /// Pairwise consistency of tails across directions: for each ordered
    /// pair (e_i, e_j), tail_j(eps) <= tail_i(eps / upper_ij) with upper_ij
    /// from equivalence_constants.
    bool cross_e_consistent = true;
    std::vector<std::string> notes;
};

/// Tail-index analysis of a finite sequence prefix under the induced metrics
/// of several interior directions. Convergence and the Cauchy property are
/// undecidable from a prefix, so tail indices against a user eps are
/// reported instead of verdicts.
SequenceReport sequence_analysis(const ConeMetricSpace& space, const std::vector<Vec>& seq,
                                 const std::vector<Vec>& e_samples, double eps,
                                 const std::optional<Vec>& limit = std::nullopt);

struct OrderCheckResult {
    bool leq_membership = false;
    bool leq_scalarized = false;
    /// Set when the scalarized conjunction held but membership failed: the
    /// sampled directions were too few to separate the pair.
    bool sampling_gap = false;
};

/// Cone order on P-members versus its scalarized characterization
/// xi_e(x) <= xi_e(y) over sampled interior e. Membership is the decision
/// procedure; the scalarized flags cross-validate it.
OrderCheckResult order_check(const SolidCone& cone, const Vec& x, const Vec& y,
                             const std::vector<Vec>& e_samples);

/// One summand coeff * d(points[p], points[q]) of an inequality template.
struct DTerm {
    double coeff = 1.0;
    std::size_t p = 0;
    std::size_t q = 0;
};

/// Inequality template lhs <= rhs where both sides are nonnegative-linear
/// combinations of distance terms over a tuple of `arity` points.
struct ConditionTemplate {
    std::size_t arity = 0;
    std::vector<DTerm> lhs;
    std::vector<DTerm> rhs;
};

using TupleSampler = std::function<std::vector<Vec>(SplitMix64&)>;

struct TranslationReport {
    int samples = 0;
    int membership_violations = 0;
    int scalarized_violations = 0;
    /// Membership held but some sampled e rejected the scalar inequality.
    /// The forward implication is a theorem, so this must stay zero.
    int forward_mismatches = 0;
    /// Every sampled e accepted but membership rejected: insufficient e
    /// sampling, not an error.
    int reverse_mismatches = 0;
};

/// Formal-substitution check: evaluates the template both as a cone-order
/// inequality and as the family of scalarized inequalities per sampled e,
/// and reports agreement statistics over sampled point tuples.
TranslationReport check_condition_translation(const ConeMetricSpace& space,
                                              const ConditionTemplate& tmpl,
                                              const TupleSampler& tuples, int sample_pairs,
                                              const std::vector<Vec>& e_samples,
                                              std::uint64_t seed);

struct SumDiagnostic {
    double d_e1 = 0.0;
    double d_e2 = 0.0;
    double d_e_sum = 0.0;
};

/// Diagnostic only: evaluates d_{e1}, d_{e2} and d_{e1+e2} on one pair. How
/// the third relates to the first two depends on the shape of the cone.
SumDiagnostic induced_sum_diagnostic(const ConeMetricSpace& space, const Vec& e1, const Vec& e2,
                                     const Vec& x, const Vec& y);

}  // namespace conescale
