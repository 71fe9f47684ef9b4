#include "conescale/sampling.hpp"

#include <cmath>

#include "conescale/matrix.hpp"

namespace conescale {

Vec sample_space(const SolidCone& cone, SplitMix64& rng, double scale) {
    Vec v(cone.dim());
    // Mix magnitudes over about three decades so relative tolerances get
    // exercised away from unit scale.
    double mag = scale * std::pow(10.0, rng.uniform(-1.0, 1.5));
    for (auto& x : v) x = mag * rng.uniform(-1.0, 1.0);
    return v;
}

Vec sample_cone(const SolidCone& cone, SplitMix64& rng) {
    const std::size_t m = cone.dim();
    switch (cone.kind()) {
        case ConeKind::Orthant: {
            Vec v(m);
            for (auto& x : v) x = rng.chance(0.15) ? 0.0 : rng.uniform(0.0, 2.5);
            return v;
        }
        case ConeKind::Lorentz: {
            Vec v(m, 0.0);
            for (std::size_t i = 0; i + 1 < m; ++i) v[i] = rng.uniform(-1.5, 1.5);
            double r = norm2(Vec(v.begin(), v.end() - 1));
            double slack = rng.chance(0.15) ? 0.0 : rng.uniform(0.0, 1.5);
            v.back() = r + slack;
            return v;
        }
        case ConeKind::Polyhedral: {
            // w*t + v with t just large enough that every inequality holds,
            // then a nonnegative push along the witness.
            const Vec& w = cone.interior_witness();
            Vec v(m);
            for (auto& x : v) x = rng.uniform(-1.0, 1.0);
            double t = 0.0;
            for (const auto& a : cone.normals()) {
                double aw = dot(a, w);
                t = std::max(t, -dot(a, v) / aw);
            }
            double push = rng.chance(0.15) ? 0.0 : rng.uniform(0.0, 2.0);
            return axpy(v, t + push, w);
        }
    }
    return zeros(m);
}

Vec sample_interior(const SolidCone& cone, SplitMix64& rng) {
    const std::size_t m = cone.dim();
    switch (cone.kind()) {
        case ConeKind::Orthant: {
            Vec v(m);
            for (auto& x : v) x = rng.uniform(0.1, 2.5);
            return v;
        }
        case ConeKind::Lorentz: {
            Vec v(m, 0.0);
            for (std::size_t i = 0; i + 1 < m; ++i) v[i] = rng.uniform(-1.5, 1.5);
            double r = norm2(Vec(v.begin(), v.end() - 1));
            v.back() = r * (1.0 + rng.uniform(0.1, 1.5)) + rng.uniform(0.05, 0.5);
            return v;
        }
        case ConeKind::Polyhedral: {
            const Vec& w = cone.interior_witness();
            Vec v(m);
            for (auto& x : v) x = rng.uniform(-1.0, 1.0);
            double t = 0.0;
            for (const auto& a : cone.normals()) {
                double aw = dot(a, w);
                t = std::max(t, -dot(a, v) / aw);
            }
            return axpy(v, t + rng.uniform(0.15, 2.0), w);
        }
    }
    return ones(m);
}

std::vector<Vec> interior_deck(const SolidCone& cone, int count, std::uint64_t seed) {
    SplitMix64 rng(stream_seed(seed, "interior_deck"));
    std::vector<Vec> deck;
    deck.reserve(static_cast<std::size_t>(count));
    if (count > 0) deck.push_back(cone.interior_witness());
    while (deck.size() < static_cast<std::size_t>(count)) deck.push_back(sample_interior(cone, rng));
    return deck;
}

SolidCone sample_polyhedral_cone(std::size_t dim, SplitMix64& rng) {
    const double c = 0.3 / static_cast<double>(dim);
    std::vector<Vec> normals;
    for (std::size_t i = 0; i < dim; ++i) {
        Vec row(dim);
        for (std::size_t j = 0; j < dim; ++j)
            row[j] = (i == j ? 1.0 : 0.0) + c * rng.uniform(-1.0, 1.0);
        normals.push_back(std::move(row));
    }
    if (dim >= 2 && rng.chance(0.5)) {
        std::size_t i = rng.below(dim);
        std::size_t j = (i + 1 + rng.below(dim - 1)) % dim;
        normals.push_back(add(normals[i], normals[j]));
    }
    Matrix b = Matrix::from_rows(std::vector<Vec>(normals.begin(), normals.begin() + dim));
    auto w = solve(b, ones(dim));
    if (!w) throw NumericalError("sample_polyhedral_cone: singular normal matrix");
    return SolidCone::polyhedral(std::move(normals), *w);
}

}  // namespace conescale
