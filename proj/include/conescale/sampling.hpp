#pragma once

#include <cstdint>
#include <vector>

#include "conescale/cones.hpp"
#include "conescale/rng.hpp"
#include "conescale/vec.hpp"

namespace conescale {

/// Random point of the ambient space, component scale around `scale`.
Vec sample_space(const SolidCone& cone, SplitMix64& rng, double scale = 1.0);

/// Random member of P (boundary points included with positive probability).
Vec sample_cone(const SolidCone& cone, SplitMix64& rng);

/// Random strictly interior point with a margin bounded away from zero.
Vec sample_interior(const SolidCone& cone, SplitMix64& rng);

/// Deck of interior reference directions: the canonical witness first, then
/// random interior draws. Used wherever a "for all e in int P" quantifier is
/// sampled.
std::vector<Vec> interior_deck(const SolidCone& cone, int count, std::uint64_t seed);

/// Random polyhedral cone in R^m that is pointed, solid and well conditioned:
/// P = {x : Bx >= 0} for B = I + (0.3/m)R, occasionally with one extra
/// redundant-style normal. The witness solves B w = 1.
SolidCone sample_polyhedral_cone(std::size_t dim, SplitMix64& rng);

}  // namespace conescale
