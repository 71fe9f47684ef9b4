#pragma once

#include <cstdint>
#include <vector>

#include "conescale/report.hpp"
#include "conescale/vec.hpp"

namespace conescale {

enum class ConeKind { Orthant, Lorentz, Polyhedral };

const char* to_string(ConeKind k);

/// A pointed closed solid cone in R^m with tolerance-aware membership and
/// interior oracles. Three families are supported:
///
///   Orthant     {x : x_i >= 0}
///   Lorentz     {(xbar, t) : t >= |xbar|_2}   (t is the last coordinate)
///   Polyhedral  {x : <a_i, x> >= 0 for all i} with a user-supplied strictly
///               interior witness (the constructor verifies the witness, it
///               does not search for one)
///
/// Membership allows an absolute slack of tol_membership * max(1, |x|_inf)
/// per defining inequality; interior membership requires at least that much
/// strict margin. Polyhedral inequalities are normalized by |a_i|_2.
class SolidCone {
public:
    static constexpr double kDefaultTol = 1e-12;

    static SolidCone orthant(std::size_t dim, double tol_membership = kDefaultTol);
    static SolidCone lorentz(std::size_t dim, double tol_membership = kDefaultTol);
    static SolidCone polyhedral(std::vector<Vec> normals, Vec interior_witness,
                                double tol_membership = kDefaultTol);

    ConeKind kind() const { return kind_; }
    std::size_t dim() const { return dim_; }
    double tol_membership() const { return tol_; }
    const std::vector<Vec>& normals() const { return normals_; }

    /// Canonical strictly interior point: all-ones (Orthant), last axis
    /// (Lorentz), the user witness (Polyhedral).
    const Vec& interior_witness() const { return witness_; }

    /// Signed minimum slack over the defining inequalities of x. Nonnegative
    /// on P, strictly positive on the interior (up to tolerance).
    double margin(const Vec& x) const;

    bool contains(const Vec& x) const;
    bool interior_contains(const Vec& x) const;

    /// Cone order x <= y, i.e. y - x in P.
    bool leq(const Vec& x, const Vec& y) const;

    /// Strong order x << y, i.e. y - x in int P.
    bool strictly_less(const Vec& x, const Vec& y) const;

    /// Smallest delta = 1/n on the doubling schedule n = 1, 2, 4, ... with
    /// delta * c strongly below e. Both c and e must be interior. The
    /// schedule is deterministic so results are reproducible; it gives up at
    /// n = 2^60 with NumericalError.
    double find_scale(const Vec& c, const Vec& e) const;

private:
    SolidCone() = default;

    ConeKind kind_ = ConeKind::Orthant;
    std::size_t dim_ = 0;
    double tol_ = kDefaultTol;
    std::vector<Vec> normals_;       // Polyhedral only
    std::vector<double> normal_len_; // cached |a_i|_2
    Vec witness_;
};

/// Axiom report for a cone: pointedness (rank test for Polyhedral, sampled
/// sign test otherwise), solidity (witness strictly interior), and sampled
/// closure under addition and nonnegative scaling.
ValidationReport validate(const SolidCone& cone, std::uint64_t seed, int closure_samples = 1000);

}  // namespace conescale
