#pragma once

#include <cstddef>
#include <optional>
#include <random>

#include "recess/convex_set.hpp"
#include "recess/recession.hpp"

namespace recess::random {

using Rng = std::mt19937_64;

long integer(Rng& rng, long lo, long hi);
/// Uniform over {k / den : lo*den <= k <= hi*den}.
Rational rational(Rng& rng, long lo, long hi, long den);
Vector integer_vector(Rng& rng, std::size_t d, long lo, long hi, bool nonzero = true);
Vector rational_vector(Rng& rng, std::size_t d, long lo, long hi, long den);

/// A vector with norm exactly 1 and rational coordinates (inverse
/// stereographic projection under L2).
Vector unit_rational(Rng& rng, std::size_t d, NormKind kind);

/// Open polyhedron containing the origin whose recession cone contains
/// `ray` (random when omitted).
ConvexSet unbounded_polyhedron(Rng& rng, std::size_t d, NormKind kind, std::optional<Vector> ray = std::nullopt);

/// Open polyhedron containing the origin, intersected with a box.
ConvexSet bounded_polyhedron(Rng& rng, std::size_t d, NormKind kind);

/// Strip set from a random biorthogonal system truncated to k functionals.
ConvexSet strip(Rng& rng, std::size_t d, std::size_t k, NormKind kind);

/// Random point of the set on a random ray from `base`.
Vector interior_sample(Rng& rng, const ConvexSet& set, const Vector& base);

/// Random nonzero element of the cone; the sample ray when nothing better
/// is found. nullopt for trivial cones.
std::optional<Vector> cone_direction(Rng& rng, const RecessionCone& cone);

}  // namespace recess::random
