#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "recess/geometry.hpp"
#include "recess/lp.hpp"

namespace recess {

/// {x : <a_i, x> < b_i} (or <= for non-strict rows).
struct HPolyhedron
{
    std::vector<LinearInequality> rows;
};

/// |f(x)| < R with R stored as R^2 so irrational radii stay exact.
struct StripRow
{
    Functional functional;
    Rational radius_sq;

    Scalar radius() const { return Scalar::sqrt_of(radius_sq); }
};

/// {x : |f_n(x)| < R_n for all n}. `vectors` optionally carries the
/// biorthogonal partners x_n of the functionals.
struct StripSet
{
    std::vector<StripRow> rows;
    std::vector<Vector> vectors;
};

class ConvexSet;

/// inner + B(0, radius), inner living in Y = span{e_1..e_k} of R^d.
struct MinkowskiSum
{
    std::shared_ptr<const ConvexSet> inner;
    Rational radius;
    NormKind ball_norm = NormKind::L2;
};

struct MembershipVerdict
{
    bool inside = false;
    /// Constraint with the smallest slack (most violated when outside).
    std::optional<std::size_t> binding_index;
};

/// Nearest point of the closure of a set together with its exact distance.
struct Projection
{
    Vector point;
    NormValue distance;
};

/**
 * An open convex set in R^d: an H-polyhedron, a strip set, or the Minkowski
 * sum of a subspace-confined set with an open ball. Immutable.
 */
class ConvexSet
{
public:
    using Shape = std::variant<HPolyhedron, StripSet, MinkowskiSum>;

    static ConvexSet polyhedron(std::size_t dim, NormKind norm, std::vector<LinearInequality> rows);
    static ConvexSet strip(std::size_t dim, NormKind norm, std::vector<StripRow> rows, std::vector<Vector> vectors = {});
    /// Strip whose radii are R_n = eps_n * ||f_n||_* under `norm`.
    static ConvexSet strip_from_epsilon(std::size_t dim, NormKind norm, std::vector<Functional> functionals,
                                        const std::vector<Rational>& eps, std::vector<Vector> vectors = {});
    static ConvexSet minkowski(std::size_t dim, NormKind norm, ConvexSet inner, Rational radius,
                               std::optional<NormKind> ball_norm = std::nullopt);

    std::size_t dim() const { return dim_; }
    NormKind norm() const { return norm_; }
    const Shape& shape() const { return shape_; }

    const HPolyhedron* as_polyhedron() const { return std::get_if<HPolyhedron>(&shape_); }
    const StripSet* as_strip() const { return std::get_if<StripSet>(&shape_); }
    const MinkowskiSum* as_minkowski() const { return std::get_if<MinkowskiSum>(&shape_); }

    /// Closed polyhedral description of the closure (strips with rational
    /// radii become two rows each). Throws InvalidInput when unavailable.
    std::vector<LinearInequality> closure_rows() const;

private:
    ConvexSet(std::size_t dim, NormKind norm, Shape shape) : dim_(dim), norm_(norm), shape_(std::move(shape)) {}

    std::size_t dim_;
    NormKind norm_;
    Shape shape_;
};

MembershipVerdict contains(const ConvexSet& set, const Vector& x);
bool inside(const ConvexSet& set, const Vector& x);

/// Largest delta with B(x, delta) inside the set. Throws NotInSet when x is
/// not an interior point.
Scalar inner_radius(const ConvexSet& set, const Vector& x);

/// A rational 0 < r <= inner_radius(set, x), equal to it when exact.
Rational inner_radius_lower(const ConvexSet& set, const Vector& x);

/**
 * Nearest point of closure(set) to y under `kind`. Exact for box-shaped
 * polyhedra (any norm, any dimension), for general polyhedra under L1/Linf
 * (via LP), and for general polyhedra under L2 in dimension <= 3 (active-set
 * enumeration).
 */
Projection project_onto_closure(const ConvexSet& set, const Vector& y, NormKind kind);

/// Whether project_onto_closure supports this set under `kind`.
bool supports_projection(const ConvexSet& set, NormKind kind);

/// dist(x, closure(inner)) for a Minkowski sum, composed over Y and its
/// orthogonal complement; the nearest point is returned embedded in R^d.
Projection minkowski_distance(const ConvexSet& set, const Vector& x);

/// Some interior point, preferring the origin. nullopt when empty.
std::optional<Vector> interior_point(const ConvexSet& set);

}  // namespace recess
