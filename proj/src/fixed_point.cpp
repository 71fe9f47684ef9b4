#include "conescale/fixed_point.hpp"

#include <algorithm>
#include <cmath>

namespace conescale {

namespace {

constexpr std::size_t kViolationListCap = 64;

struct OrbitPoint {
    Vec x, fx, gx;
};

struct TvsContext {
    const ConeMetricSpace* space = nullptr;
    const std::array<ConeGauge, 5>* psis = nullptr;
};

/// Fixed-capacity ring over the newest entries.
template <class T>
class Ring {
public:
    explicit Ring(std::size_t cap) : cap_(cap) {}

    void push(T v) {
        if (data_.size() < cap_) {
            data_.push_back(std::move(v));
        } else {
            data_[head_] = std::move(v);
            head_ = (head_ + 1) % cap_;
            ++dropped_;
        }
    }

    std::vector<T> linearize() const {
        std::vector<T> out;
        out.reserve(data_.size());
        for (std::size_t i = 0; i < data_.size(); ++i)
            out.push_back(data_[(head_ + i) % data_.size()]);
        return out;
    }

    long long dropped() const { return dropped_; }

private:
    std::size_t cap_;
    std::size_t head_ = 0;
    long long dropped_ = 0;
    std::vector<T> data_;
};

class PairChecker {
public:
    PairChecker(const JungckProblem& p, const TvsContext* tvs, SolveReport& rep)
        : p_(p), tvs_(tvs), rep_(rep) {}

    void check(const OrbitPoint& a, const OrbitPoint& b, long long i, long long j) {
        const auto& d = p_.metric;
        double lhs = d(a.fx, b.fx);
        double rhs = std::max({p_.gauges[0](d(a.gx, b.gx)), p_.gauges[1](d(a.gx, a.fx)),
                               p_.gauges[2](d(b.gx, b.fx)), p_.gauges[3](d(a.gx, b.fx)),
                               p_.gauges[4](d(a.fx, b.gx))});
        bool scalar_viol = lhs > rhs + 1e-12 * std::max(1.0, rhs);
        if (scalar_viol) {
            ++rep_.contraction_violation_count;
            if (rep_.contraction_violations.size() < kViolationListCap)
                rep_.contraction_violations.push_back({i, j, lhs, rhs});
        }
        if (!tvs_) return;

        const auto& space = *tvs_->space;
        const auto& psi = *tvs_->psis;
        Vec big = space.d(a.fx, b.fx);
        bool tvs_ok = space.cone.leq(big, psi[0](space.d(a.gx, b.gx))) ||
                      space.cone.leq(big, psi[1](space.d(a.gx, a.fx))) ||
                      space.cone.leq(big, psi[2](space.d(b.gx, b.fx))) ||
                      space.cone.leq(big, psi[3](space.d(a.gx, b.fx))) ||
                      space.cone.leq(big, psi[4](space.d(a.fx, b.gx)));
        if (!tvs_ok) {
            ++rep_.tvs_violation_count;
            if (rep_.tvs_violations.size() < kViolationListCap)
                rep_.tvs_violations.push_back({i, j, lhs, rhs});
        }
        if (tvs_ok == scalar_viol) ++rep_.check_disagreements;
    }

private:
    const JungckProblem& p_;
    const TvsContext* tvs_;
    SolveReport& rep_;
};

double retained_diameter(const std::vector<Vec>& pts, const RealMetric& d) {
    const std::size_t n = pts.size();
    if (n < 2) return 0.0;
    // Exact for modest orbits; evenly strided subsample (a lower bound)
    // beyond that.
    std::size_t stride = n <= 1200 ? 1 : (n + 1023) / 1024;
    double best = 0.0;
    for (std::size_t i = 0; i < n; i += stride)
        for (std::size_t j = i + stride; j < n; j += stride) best = std::max(best, d(pts[i], pts[j]));
    // Always include the extremes of the retained window.
    for (std::size_t i = 0; i < n; i += stride) {
        best = std::max(best, d(pts[i], pts.back()));
        best = std::max(best, d(pts[0], pts[i]));
    }
    return best;
}

void validate_problem(const JungckProblem& p) {
    if (!p.metric || !p.f || !p.g || !p.g_preimage)
        throw DomainError("jungck_solve: metric, f, g and g_preimage must all be set");
    require_finite("jungck_solve x0", p.x0);
    if (!(p.tol_conv > 0.0)) throw DomainError("jungck_solve: tol_conv must be positive");
    if (p.max_iter < 1) throw DomainError("jungck_solve: max_iter must be at least 1");
    if (p.trajectory_cap < 2) throw DomainError("jungck_solve: trajectory_cap must be at least 2");
}

SolveReport solve_impl(const JungckProblem& p, const TvsContext* tvs) {
    validate_problem(p);
    SolveReport rep;
    rep.metric = p.metric;

    OrbitPoint cur{p.x0, p.f(p.x0), p.g(p.x0)};
    rep.d0 = p.metric(cur.fx, cur.gx);
    rep.r0_bound = compute_r0(majorant({p.gauges.begin(), p.gauges.end()}), rep.d0);

    Ring<Vec> trajectory(static_cast<std::size_t>(p.trajectory_cap));
    Ring<double> gaps(static_cast<std::size_t>(p.trajectory_cap));
    trajectory.push(cur.fx);

    std::vector<OrbitPoint> window;
    window.reserve(static_cast<std::size_t>(std::max(p.window_pairs, 0)));
    if (p.window_pairs > 0) window.push_back(cur);

    PairChecker checker(p, tvs, rep);

    if (rep.d0 < p.tol_conv) {
        rep.converged = true;
        rep.limit = cur.fx;
    } else {
        for (int n = 0; n < p.max_iter; ++n) {
            Vec x1 = p.g_preimage(cur.fx);
            OrbitPoint nxt{x1, p.f(x1), p.g(x1)};
            double gap = p.metric(cur.fx, nxt.fx);
            gaps.push(gap);
            trajectory.push(nxt.fx);
            rep.iterations = n + 1;

            checker.check(cur, nxt, n, n + 1);
            if (window.size() < static_cast<std::size_t>(p.window_pairs)) {
                // All pairs within the leading window; the consecutive pair
                // was just handled.
                for (std::size_t i = 0; i + 1 < window.size(); ++i)
                    checker.check(window[i], nxt, static_cast<long long>(i), n + 1);
                window.push_back(nxt);
            }

            cur = nxt;
            if (gap < p.tol_conv) {
                rep.converged = true;
                break;
            }
        }
        rep.limit = cur.fx;
    }

    rep.trajectory = trajectory.linearize();
    rep.trajectory_base_index = trajectory.dropped();
    rep.trajectory_gaps = gaps.linearize();
    rep.observed_orbit_diameter = retained_diameter(rep.trajectory, p.metric);

    rep.coincidence_arg = p.g_preimage(rep.limit);
    rep.coincidence_residual = p.metric(p.f(rep.coincidence_arg), p.g(rep.coincidence_arg));

    if (p.weakly_compatible && p.x_equals_y) {
        rep.fixed_point_residual = p.metric(rep.limit, p.f(rep.limit));
        rep.commutation_residual =
            p.metric(p.f(p.g(rep.coincidence_arg)), p.g(p.f(rep.coincidence_arg)));
    }

    if (!rep.converged)
        rep.notes.push_back("max_iter reached before the image gap dropped below tol_conv");
    if (rep.contraction_violation_count > 0)
        rep.notes.push_back(
            "contraction bound violated along the orbit; the hypothesis fails on this problem");
    rep.notes.push_back(
        "orbit checks are sampled along the trajectory only: a clean report means no "
        "counterexample observed");
    rep.notes.push_back(
        "r0 uses the pointwise-max gauge, a diagnostic bound; the proof-level majorant is "
        "nonconstructive");
    return rep;
}

}  // namespace

SolveReport jungck_solve(const JungckProblem& p) { return solve_impl(p, nullptr); }

SolveReport tvs_jungck_solve(const ConeMetricSpace& space, const PointMap& f, const PointMap& g,
                             const PointMap& g_preimage,
                             const std::array<ConeGauge, 5>& cone_gauges, const Vec& e,
                             const Vec& x0, double tol_conv, int max_iter,
                             bool weakly_compatible) {
    if (!space.cone.interior_contains(e))
        throw NotInteriorError("tvs_jungck_solve: e is not interior");
    InducedMetric de = induced_metric(space, e);

    JungckProblem p;
    p.metric = [de](const Vec& a, const Vec& b) { return de(a, b); };
    p.f = f;
    p.g = g;
    p.g_preimage = g_preimage;
    p.gauges = {gauge_from_cone_map(space.cone, e, cone_gauges[0]),
                gauge_from_cone_map(space.cone, e, cone_gauges[1]),
                gauge_from_cone_map(space.cone, e, cone_gauges[2]),
                gauge_from_cone_map(space.cone, e, cone_gauges[3]),
                gauge_from_cone_map(space.cone, e, cone_gauges[4])};
    p.x0 = x0;
    p.tol_conv = tol_conv;
    p.max_iter = max_iter;
    p.weakly_compatible = weakly_compatible;

    TvsContext ctx{&space, &cone_gauges};
    return solve_impl(p, &ctx);
}

bool verify_point_of_coincidence(const JungckProblem& p, const Vec& z_arg, double tol) {
    return p.metric(p.f(z_arg), p.g(z_arg)) <= tol;
}

double orbit_diameter(const SolveReport& report, std::size_t window) {
    if (window > report.trajectory.size())
        throw DomainError("orbit_diameter: window exceeds the retained trajectory");
    double best = 0.0;
    for (std::size_t i = 0; i < window; ++i)
        for (std::size_t j = i + 1; j < window; ++j)
            best = std::max(best, report.metric(report.trajectory[i], report.trajectory[j]));
    return best;
}

double windowed_diameter(const SolveReport& report, std::size_t k, std::size_t n) {
    if (k + n >= report.trajectory.size())
        throw DomainError("windowed_diameter: window exceeds the retained trajectory");
    double best = 0.0;
    for (std::size_t i = k; i <= k + n; ++i)
        for (std::size_t j = i + 1; j <= k + n; ++j)
            best = std::max(best, report.metric(report.trajectory[i], report.trajectory[j]));
    return best;
}

}  // namespace conescale
