#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "recess/convex_set.hpp"
#include "recess/recession.hpp"

namespace recess {

/// Vectors x_n and functionals x_n^* with x_i^*(x_j) = delta_ij.
struct BiorthogonalSystem
{
    std::size_t dim = 0;
    std::vector<Vector> vectors;
    std::vector<Functional> functionals;

    std::size_t count() const { return vectors.size(); }

    /// Exact check of x_i^*(x_j) = delta_ij over all pairs.
    bool verify() const;

    /// First k pairs; still biorthogonal, spans a k-dimensional subspace.
    BiorthogonalSystem truncated(std::size_t k) const;
};

enum class SystemKind { Orthonormal, Perturbed };

SystemKind parse_system_kind(std::string_view text);

/**
 * Orthonormal: standard basis with coordinate functionals.
 * Perturbed: columns of a random integer unimodular matrix X (product of
 * unit-triangular factors) with functionals the rows of X^{-1}.
 */
BiorthogonalSystem build_system(std::size_t d, SystemKind kind, std::uint64_t seed = 0);

enum class EpsilonRule { Linear, Quadratic, Constant };

EpsilonRule parse_epsilon_rule(std::string_view text);

/// eps_1..eps_k under the rule (n, n^2, or 1).
std::vector<Rational> epsilon_sequence(EpsilonRule rule, std::size_t k);

/// Strip set {x : |x_n^*(x)| < eps_n ||x_n^*||_*}.
ConvexSet build_strip(const BiorthogonalSystem& system, const std::vector<Rational>& eps, NormKind norm);

struct WitnessPoint
{
    std::size_t index = 0;  // 1-based n
    Vector point;           // a_n = R_n / (2 |x_n^*(x_n)|) x_n
    Scalar coefficient;
    bool exact = true;      // false when R_n is irrational and rounded up
    Rational eps_half_sq;   // (eps_n / 2)^2

    /// Diagonal/off-diagonal pattern, the norm bound, and membership of +-a_n.
    bool verify(const ConvexSet& strip) const;
};

std::vector<WitnessPoint> witness_points(const ConvexSet& strip);

struct EscapeRow
{
    std::size_t d = 0;
    std::optional<Scalar> max_ray;  // nullopt: infinite (kernel directions exist)
    Scalar diam_lb;
    std::size_t recc_dim = 0;
    /// sup of ||x|| over the closure; closed form for orthonormal systems.
    std::optional<Scalar> circumradius;
};

struct EscapeProfile
{
    std::vector<EscapeRow> rows;

    std::string to_csv() const;
};

struct EscapeOptions
{
    EpsilonRule eps = EpsilonRule::Linear;
    SystemKind system = SystemKind::Orthonormal;
    std::uint64_t seed = 0;
    NormKind norm = NormKind::L2;
    std::optional<std::size_t> truncate;  // keep only the first k functionals
};

/**
 * One row per dimension: the longest ray from the origin along the system's
 * vectors x_n (normalized), the diameter bound 2 ||a_k|| from the last
 * witness point, and the recession cone dimension.
 */
EscapeProfile escape_profile(std::span<const std::size_t> dims, const EscapeOptions& opts = {});

/// inner + B(0, r) with inner placed in the first inner.dim() coordinates.
ConvexSet minkowski_lift(const ConvexSet& inner, std::size_t ambient_dim, const Rational& r = Rational(1),
                         std::optional<NormKind> ball_norm = std::nullopt);

struct DecompositionStep
{
    Rational n;
    Vector w;  // nearest point of closure(inner) to n u0
    Vector b;  // n u0 - w
    bool b_in_ball = false;
    bool norm_bound_holds = false;          // ||w|| >= n ||u0|| - r
    std::optional<double> direction_error;  // ||w/||w|| - u0/||u0|||
};

struct RayDecompositionReport
{
    std::vector<DecompositionStep> steps;
    bool bounds_hold = true;
    bool errors_nonincreasing = true;
    double final_error = 0.0;
};

/// Splits n u0 = w_n + b_n along a ray of the lift and checks the norm
/// growth and direction convergence of w_n.
RayDecompositionReport ray_decomposition_check(const ConvexSet& lift, const Vector& u0,
                                               const std::vector<Rational>& t_grid);

struct DenseRestrictionWitness
{
    Rational bound;   // M
    Vector a;         // ||a|| > M + 1
    Rational delta;   // min(inner radius at a, 49/100)
    Vector b;         // rational point with denominators <= 10^6 when possible
    bool verified = false;
};

/// A rational point of the set beyond norm M. Throws CannotWitness for
/// bounded sets.
DenseRestrictionWitness dense_restriction_witness(const ConvexSet& set, const Rational& bound);

}  // namespace recess
