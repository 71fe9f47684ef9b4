#include "conescale/scalarization.hpp"

#include <cmath>
#include <optional>

namespace conescale {

namespace {

void require_interior(const SolidCone& cone, const Vec& e, const char* who) {
    if (!cone.interior_contains(e))
        throw NotInteriorError(std::string(who) + ": reference direction e is not interior");
}

bool member_at(const SolidCone& cone, const Vec& e, const Vec& y, double t) {
    return cone.contains(axpy(scale(-1.0, y), t, e));
}

/// Closed form when one applies: Orthant max_i(y_i/e_i); Lorentz
/// (y_t + |ybar|_2)/s for e exactly on the last axis.
std::optional<double> closed_form(const SolidCone& cone, const Vec& e, const Vec& y) {
    if (cone.kind() == ConeKind::Orthant) {
        double best = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < y.size(); ++i) best = std::max(best, y[i] / e[i]);
        return best;
    }
    if (cone.kind() == ConeKind::Lorentz) {
        for (std::size_t i = 0; i + 1 < e.size(); ++i)
            if (e[i] != 0.0) return std::nullopt;
        double s = 0.0;
        for (std::size_t i = 0; i + 1 < y.size(); ++i) s += y[i] * y[i];
        return (y.back() + std::sqrt(s)) / e.back();
    }
    return std::nullopt;
}

}  // namespace

std::pair<double, double> bracket(const SolidCone& cone, const Vec& e, const Vec& y) {
    require_interior(cone, e, "bracket");
    require_dim("bracket", y, cone.dim());
    require_finite("bracket", y);
    if (is_zero(y)) return {0.0, 0.0};

    const double cap = std::ldexp(1.0, 60);
    if (member_at(cone, e, y, 1.0)) {
        // Walk down until membership first fails.
        double hi = 1.0;
        for (double t = -1.0;; t *= 2.0) {
            if (!member_at(cone, e, y, t)) return {t, hi};
            hi = t;
            if (-t >= cap) break;
        }
    } else {
        // Walk up until membership first holds.
        double lo = 1.0;
        for (double t = 2.0;; t *= 2.0) {
            if (member_at(cone, e, y, t)) return {lo, t};
            lo = t;
            if (t >= cap) break;
        }
    }
    throw NumericalError("bracket: doubling exhausted at |t| = 2^60");
}

ScalarizationResult xi_bisection(const SolidCone& cone, const Vec& e, const Vec& y,
                                 double tol_bisect) {
    auto [lo, hi] = bracket(cone, e, y);
    ScalarizationResult r;
    if (lo == hi) {  // y = 0
        r.value = r.bracket_lo = r.bracket_hi = lo;
        return r;
    }
    int iter = 0;
    const int max_iter = 200;
    while (iter < max_iter) {
        double mid = 0.5 * (lo + hi);
        if (hi - lo <= tol_bisect * std::max(1.0, std::fabs(mid))) break;
        if (member_at(cone, e, y, mid))
            hi = mid;
        else
            lo = mid;
        ++iter;
    }
    r.value = 0.5 * (lo + hi);
    r.bracket_lo = lo;
    r.bracket_hi = hi;
    r.iterations = iter;
    return r;
}

ScalarizationResult xi(const SolidCone& cone, const Vec& e, const Vec& y, double tol_bisect) {
    require_interior(cone, e, "xi");
    require_dim("xi", y, cone.dim());
    require_finite("xi", y);
    if (auto v = closed_form(cone, e, y)) {
        ScalarizationResult r;
        r.value = r.bracket_lo = r.bracket_hi = *v;
        return r;
    }
    return xi_bisection(cone, e, y, tol_bisect);
}

double norm_e(const SolidCone& cone, const Vec& e, const Vec& x) {
    double a = xi(cone, e, x).value;
    double b = xi(cone, e, scale(-1.0, x)).value;
    return std::max(std::fabs(a), std::fabs(b));
}

std::pair<double, double> equivalence_constants(const SolidCone& cone, const Vec& e,
                                                const Vec& e2) {
    require_interior(cone, e, "equivalence_constants");
    require_interior(cone, e2, "equivalence_constants");
    double xi_e_e2 = xi(cone, e, e2).value;
    double xi_e2_e = xi(cone, e2, e).value;
    return {1.0 / xi_e_e2, xi_e2_e};
}

}  // namespace conescale
