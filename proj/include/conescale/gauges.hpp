#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "conescale/cones.hpp"
#include "conescale/matrix.hpp"
#include "conescale/report.hpp"
#include "conescale/vec.hpp"

namespace conescale {

/// Gauge classes ordered by strength: Phi requires phi(0) = 0, phi(t) < t
/// for t > 0 and t - phi(t) -> infinity; Phi1 additionally monotone
/// nondecreasing with a one-sided limsup bound; Phi2 the two-sided limsup
/// bound (Phi1 is contained in Phi2). Class membership of an arbitrary
/// function is an analytic property; validate_gauge only certifies grid
/// surrogates of it.
enum class GaugeClass { Phi, Phi1, Phi2 };

const char* to_string(GaugeClass c);

/// Scalar comparison gauge phi: [0,inf) -> [0,inf) with a declared class.
class GaugeFunction {
public:
    /// The zero gauge phi = 0.
    GaugeFunction() : GaugeFunction([](double) { return 0.0; }, GaugeClass::Phi1, "zero") {}

    /// phi(t) = k*t with 0 <= k < 1.
    static GaugeFunction linear(double k);

    /// phi(t) = t/(1+t); the complement t - phi(t) = t^2/(1+t) grows without
    /// bound.
    static GaugeFunction saturating();

    static GaugeFunction custom(std::function<double(double)> eval, GaugeClass declared,
                                std::string name = "custom");

    /// Evaluate phi(t); t < 0 raises DomainError, negative outputs raise
    /// NumericalError (the range is [0, inf) by definition).
    double operator()(double t) const;

    GaugeClass declared_class() const { return class_; }
    const std::string& name() const { return name_; }

private:
    GaugeFunction(std::function<double(double)> eval, GaugeClass declared, std::string name)
        : eval_(std::move(eval)), class_(declared), name_(std::move(name)) {}

    std::function<double(double)> eval_;
    GaugeClass class_;
    std::string name_;
};

inline double eval_gauge(const GaugeFunction& g, double t) { return g(t); }

/// 64 log-spaced points spanning [1e-6, 1e6].
std::vector<double> default_gauge_grid();

/// Grid surrogate checks for the declared class: (a) phi(0) = 0 exactly,
/// (b) phi(t) < t at every grid point, (c) t - phi(t) clears each growth
/// target on a grid tail; monotonicity on consecutive points for Phi1;
/// local limsup probe for Phi1/Phi2. Passing is necessary, not sufficient,
/// for class membership; the report says so explicitly.
ValidationReport validate_gauge(const GaugeFunction& g, const std::vector<double>& grid);

/// r0 = inf{ r : s - phi(s) > d0 for every s > r }, the a-priori orbit
/// diameter bound. Located by a doubling horizon, a dense scan for the last
/// dip below d0 and bisection inside the final cell; resolution 1e-12
/// relative, certified on the scan grid. Requires the gauge to pass clauses
/// (a)-(c) on the default grid.
double compute_r0(const GaugeFunction& g, double d0);

/// Pointwise max of finitely many gauges. Preserves clauses (a)-(c) and the
/// local limsup surrogate; the result is declared Phi2 and is NOT claimed
/// monotone.
GaugeFunction majorant(const std::vector<GaugeFunction>& gs);

/// Cone self-map psi: P -> P. The epsilon field, when set, declares the
/// uniform margin of the stronger sequential class (psi(x_n) eventually
/// below (1-eps)x along any interior sequence x_n -> x); it cannot be
/// inferred from samples, so it is caller-asserted.
class ConeGauge {
public:
    /// The zero map psi = 0.
    ConeGauge() : ConeGauge([](const Vec& x) { return zeros(x.size()); }, std::nullopt, "zero") {}

    static ConeGauge scaling(double k, std::optional<double> epsilon);
    static ConeGauge linear_operator(Matrix a, std::optional<double> epsilon);
    static ConeGauge custom(std::function<Vec(const Vec&)> eval, std::optional<double> epsilon,
                            std::string name = "custom");

    Vec operator()(const Vec& x) const;

    std::optional<double> epsilon() const { return epsilon_; }
    const std::string& name() const { return name_; }
    const Matrix* matrix() const { return matrix_ ? &*matrix_ : nullptr; }

private:
    ConeGauge(std::function<Vec(const Vec&)> eval, std::optional<double> epsilon, std::string name)
        : eval_(std::move(eval)), epsilon_(epsilon), name_(std::move(name)) {}

    std::function<Vec(const Vec&)> eval_;
    std::optional<double> epsilon_;
    std::string name_;
    std::optional<Matrix> matrix_;
};

/// Scalar reduction of a cone self-map: phi(t) = |psi(t e)|_e. The result is
/// validated on the default grid (declared Phi2 when psi carries an epsilon,
/// Phi otherwise); a failure raises DomainError since it means psi violates
/// its own contract.
GaugeFunction gauge_from_cone_map(const SolidCone& cone, const Vec& e, const ConeGauge& psi);

/// Sampled screen of the cone self-map contract: psi(0) = 0, x - psi(x)
/// interior for interior x, growth of xi_e(tx - psi(tx)) along sampled rays,
/// and, when epsilon is declared, the sequential margin condition on
/// perturbation sequences.
ValidationReport validate_cone_gauge(const SolidCone& cone, const ConeGauge& psi, int samples,
                                     std::uint64_t seed);

/// Sampled screen of a linear operator in the role of a contractive map:
/// A(P) inside P, (I-A) mapping interior to interior, invertibility of A and
/// I-A. Surjectivity of A onto P is not verifiable by sampling and is
/// reported as such.
ValidationReport linear_operator_check(const SolidCone& cone, const Matrix& a, int samples,
                                       std::uint64_t seed);

}  // namespace conescale
