#include "conescale/cones.hpp"

#include <algorithm>
#include <cmath>

#include "conescale/matrix.hpp"
#include "conescale/rng.hpp"
#include "conescale/sampling.hpp"

namespace conescale {

const char* to_string(ConeKind k) {
    switch (k) {
        case ConeKind::Orthant: return "orthant";
        case ConeKind::Lorentz: return "lorentz";
        case ConeKind::Polyhedral: return "polyhedral";
    }
    return "unknown";
}

SolidCone SolidCone::orthant(std::size_t dim, double tol) {
    if (dim == 0) throw DomainError("orthant: dimension must be positive");
    if (!(tol >= 0.0)) throw DomainError("orthant: tolerance must be nonnegative");
    SolidCone c;
    c.kind_ = ConeKind::Orthant;
    c.dim_ = dim;
    c.tol_ = tol;
    c.witness_ = ones(dim);
    return c;
}

SolidCone SolidCone::lorentz(std::size_t dim, double tol) {
    if (dim < 2) throw DomainError("lorentz: dimension must be at least 2");
    if (!(tol >= 0.0)) throw DomainError("lorentz: tolerance must be nonnegative");
    SolidCone c;
    c.kind_ = ConeKind::Lorentz;
    c.dim_ = dim;
    c.tol_ = tol;
    c.witness_ = zeros(dim);
    c.witness_.back() = 1.0;
    return c;
}

SolidCone SolidCone::polyhedral(std::vector<Vec> normals, Vec witness, double tol) {
    if (normals.empty()) throw DomainError("polyhedral: need at least one normal");
    if (!(tol >= 0.0)) throw DomainError("polyhedral: tolerance must be nonnegative");
    const std::size_t dim = normals[0].size();
    if (dim == 0) throw DomainError("polyhedral: dimension must be positive");
    SolidCone c;
    c.kind_ = ConeKind::Polyhedral;
    c.dim_ = dim;
    c.tol_ = tol;
    for (const auto& a : normals) {
        require_dim("polyhedral normal", a, dim);
        require_finite("polyhedral normal", a);
        double len = norm2(a);
        if (len == 0.0) throw DomainError("polyhedral: zero normal");
        c.normal_len_.push_back(len);
    }
    c.normals_ = std::move(normals);
    require_dim("polyhedral witness", witness, dim);
    require_finite("polyhedral witness", witness);
    c.witness_ = std::move(witness);
    if (!c.interior_contains(c.witness_))
        throw NotInteriorError("polyhedral: supplied witness is not strictly interior");
    return c;
}

double SolidCone::margin(const Vec& x) const {
    switch (kind_) {
        case ConeKind::Orthant: {
            double m = x[0];
            for (double v : x) m = std::min(m, v);
            return m;
        }
        case ConeKind::Lorentz: {
            double s = 0.0;
            for (std::size_t i = 0; i + 1 < x.size(); ++i) s += x[i] * x[i];
            return x.back() - std::sqrt(s);
        }
        case ConeKind::Polyhedral: {
            double m = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < normals_.size(); ++i)
                m = std::min(m, dot(normals_[i], x) / normal_len_[i]);
            return m;
        }
    }
    return 0.0;
}

bool SolidCone::contains(const Vec& x) const {
    require_dim("contains", x, dim_);
    require_finite("contains", x);
    return margin(x) >= -tol_ * std::max(1.0, norm_inf(x));
}

bool SolidCone::interior_contains(const Vec& x) const {
    require_dim("interior_contains", x, dim_);
    require_finite("interior_contains", x);
    return margin(x) >= tol_ * std::max(1.0, norm_inf(x));
}

bool SolidCone::leq(const Vec& x, const Vec& y) const {
    if (x.size() != y.size()) throw DimensionError("leq: mismatched dimensions");
    return contains(sub(y, x));
}

bool SolidCone::strictly_less(const Vec& x, const Vec& y) const {
    if (x.size() != y.size()) throw DimensionError("strictly_less: mismatched dimensions");
    return interior_contains(sub(y, x));
}

double SolidCone::find_scale(const Vec& c, const Vec& e) const {
    if (!interior_contains(c)) throw NotInteriorError("find_scale: c is not interior");
    if (!interior_contains(e)) throw NotInteriorError("find_scale: e is not interior");
    const std::uint64_t cap = 1ull << 60;
    for (std::uint64_t n = 1;; n *= 2) {
        if (interior_contains(axpy(e, -1.0 / static_cast<double>(n), c)))
            return 1.0 / static_cast<double>(n);
        if (n >= cap) break;
    }
    throw NumericalError("find_scale: doubling schedule exhausted at n = 2^60");
}

ValidationReport validate(const SolidCone& cone, std::uint64_t seed, int closure_samples) {
    ValidationReport rep;
    SplitMix64 rng(stream_seed(seed, "cones.validate"));

    // Pointedness. For polyhedral cones P ∩ -P = {0} iff the normals span
    // R^m; for the built-in families we spot-check sign reversal on samples.
    if (cone.kind() == ConeKind::Polyhedral) {
        std::size_t r = rank(Matrix::from_rows(cone.normals()));
        rep.add("pointedness", r == cone.dim(),
                "normal rank " + std::to_string(r) + " of " + std::to_string(cone.dim()));
    } else {
        bool ok = true;
        for (int i = 0; i < 200 && ok; ++i) {
            Vec x = sample_cone(cone, rng);
            if (norm_inf(x) <= 10.0 * cone.tol_membership()) continue;
            if (cone.contains(scale(-1.0, x))) ok = false;
        }
        rep.add("pointedness", ok, "sampled sign reversal, structural for this family");
    }

    rep.add("solidity", cone.interior_contains(cone.interior_witness()),
            "canonical witness strictly interior");

    int add_fail = 0, scale_fail = 0;
    for (int i = 0; i < closure_samples; ++i) {
        Vec x = sample_cone(cone, rng);
        Vec y = sample_cone(cone, rng);
        if (!cone.contains(add(x, y))) ++add_fail;
        if (!cone.contains(scale(rng.uniform(0.0, 10.0), x))) ++scale_fail;
    }
    rep.add("closure_addition", add_fail == 0,
            std::to_string(add_fail) + " failures in " + std::to_string(closure_samples) +
                " samples");
    rep.add("closure_scaling", scale_fail == 0,
            std::to_string(scale_fail) + " failures in " + std::to_string(closure_samples) +
                " samples");
    return rep;
}

}  // namespace conescale
