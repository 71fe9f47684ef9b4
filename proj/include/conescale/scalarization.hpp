#pragma once

#include <utility>

#include "conescale/cones.hpp"
#include "conescale/vec.hpp"

namespace conescale {

/// Outcome of evaluating xi_e(y) = inf{ t : t*e - y in P }. The final
/// bisection bracket is kept for auditability: membership holds at
/// bracket_hi and fails at bracket_lo. When a closed form was used both
/// bracket fields equal the value and iterations is zero.
struct ScalarizationResult {
    double value = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    int iterations = 0;
};

inline constexpr double kDefaultBisectTol = 1e-12;

/// Bracket the scalarization value: returns (lo, hi) with t*e - y in P at hi
/// and not in P at lo, found by doubling t through +-1, +-2, +-4, ...
/// Special case: y = 0 returns (0, 0). The walk gives up at |t| = 2^60.
std::pair<double, double> bracket(const SolidCone& cone, const Vec& e, const Vec& y);

/// xi_e(y) via closed form where available (Orthant always; Lorentz for
/// axis-aligned e = (0,...,0,s)), otherwise bracketing plus bisection on the
/// monotone membership predicate. Ties at the boundary resolve to the
/// bracket midpoint; the ambiguity band is tol_bisect relative.
ScalarizationResult xi(const SolidCone& cone, const Vec& e, const Vec& y,
                       double tol_bisect = kDefaultBisectTol);

/// The generic bracketing + bisection path, regardless of closed forms.
/// Kept public so the two routes can be compared against each other.
ScalarizationResult xi_bisection(const SolidCone& cone, const Vec& e, const Vec& y,
                                 double tol_bisect = kDefaultBisectTol);

/// The induced real norm |x|_e = max(|xi_e(x)|, |xi_e(-x)|).
double norm_e(const SolidCone& cone, const Vec& e, const Vec& x);

/// Best-possible constants (lower, upper) = (1/xi_e(e2), xi_e2(e)) with
/// lower * |x|_e <= |x|_e2 <= upper * |x|_e for every x.
std::pair<double, double> equivalence_constants(const SolidCone& cone, const Vec& e,
                                                const Vec& e2);

}  // namespace conescale
