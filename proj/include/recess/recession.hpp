#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "recess/convex_set.hpp"

namespace recess {

// ---------------------------------------------------------------------------
// Ray length

enum class RayLengthKind { Finite, Infinite, ExceedsCap };

struct RayLength
{
    RayLengthKind kind = RayLengthKind::Finite;
    Scalar value;  // meaningful when Finite
    std::optional<std::size_t> binding;  // lowest-index constraint attaining the minimum
};

/// Doubling/bisection parameters for the membership oracle.
struct OracleOptions
{
    int cap_exponent = 40;   // T_max = 2^cap_exponent
    double rel_tol = 1e-9;
};

/**
 * sup{t : z + s u in set for all s in (0, t)}. Closed forms for polyhedra
 * and strip sets; Minkowski sums go through the bisection oracle.
 */
RayLength ray_length(const ConvexSet& set, const Vector& z, const Vector& u, const OracleOptions& opts = {});

/// The same quantity measured only through exact membership queries.
RayLength ray_length_oracle(const ConvexSet& set, const Vector& z, const Vector& u, const OracleOptions& opts = {});

// ---------------------------------------------------------------------------
// Half-lines

struct Ray
{
    Vector base;
    Vector direction;

    std::vector<double> normalized(NormKind kind) const;
};

enum class HalfLineVerdict { Contained, NotContained, NotProven };

struct HalfLineEvidence
{
    HalfLineVerdict verdict = HalfLineVerdict::NotProven;
    RayLength length;
    std::string method;  // "closed-form", "recession-cone", or "oracle"
};

struct HalfLineOptions
{
    bool oracle_only = false;
    OracleOptions oracle;
};

/// Whether {z + t u : t > 0} lies in the set. Oracle answers that hit the
/// cap are NotProven, never Contained.
HalfLineEvidence contains_half_line(const ConvexSet& set, const Vector& z, const Vector& u,
                                    const HalfLineOptions& opts = {});

// ---------------------------------------------------------------------------
// Recession cone

/**
 * Recession cone of the closure: {u : <g, u> <= 0 for g in inequalities,
 * <h, u> = 0 for h in equalities}. Strip sets additionally carry an exact
 * kernel basis.
 */
struct RecessionCone
{
    enum class Kind { Rows, Kernel, Embedded };

    Kind kind = Kind::Rows;
    std::size_t ambient_dim = 0;
    std::vector<Functional> inequalities;
    std::vector<Functional> equalities;
    std::vector<Vector> basis;
    std::size_t dimension = 0;
    std::optional<Vector> sample_ray;

    bool trivial() const { return !sample_ray.has_value(); }
    bool contains(const Vector& u) const;
};

RecessionCone recession_cone(const ConvexSet& set);

// ---------------------------------------------------------------------------
// Certificates

/**
 * Evidence that a0 = z0 + t0 u0 lies in the set given a ray
 * {anchor + t u0 : t > 0} inside it: xi = a0 + lambda (anchor + t1 u0 - a0)
 * falls in B(z0, delta), so a0 is a convex combination of xi and the ray
 * point anchor + t1 u0.
 */
struct ContradictionCertificate
{
    NormKind norm = NormKind::L2;
    Vector anchor;
    Vector z0;
    Vector u0;
    Rational t0;
    Vector a0;
    Rational delta;        // inner radius at z0 (a rational lower bound if irrational)
    bool delta_exact = true;
    Rational t1;
    Rational lambda;
    bool lambda_exact = true;
    Vector xi;
    Rational weight_xi;    // 1 / (1 - lambda)
    Rational weight_ray;   // -lambda / (1 - lambda)

    /// The three invariants plus membership of xi and a0, all exact.
    bool verify(const ConvexSet& set) const;
    bool direction_condition() const;
    bool xi_in_ball() const;
    bool combination_holds() const;
};

struct CertificateOptions
{
    int cap_exponent = 40;
    std::optional<Vector> anchor;  // base of the premise ray; origin by default
};

ContradictionCertificate translate_ray_certificate(const ConvexSet& set, const Vector& z0, const Vector& u0,
                                                   const Rational& t0, const CertificateOptions& opts = {});

struct CoveragePoint
{
    Vector sample;
    Vector base;       // sample - step * u0
    Rational step;     // delta / (2 ||u0||), rounded down to a rational
    bool base_inside = false;
    bool covered = false;
};

/// Writes every sample as a point on an open ray {base + t u0} inside the set.
std::vector<CoveragePoint> decompose(const ConvexSet& set, const Vector& u0, const std::vector<Vector>& samples);

struct InvarianceDiscrepancy
{
    std::size_t direction;
    std::size_t base_a;
    std::size_t base_b;
};

struct InvarianceReport
{
    std::size_t bases = 0;
    std::size_t directions = 0;
    std::vector<bool> membership;  // per direction, taken from the first base
    std::vector<InvarianceDiscrepancy> discrepancies;

    bool consistent() const { return discrepancies.empty(); }
};

/// Checks that the set of ray directions does not depend on the base point.
InvarianceReport direction_set_invariance(const ConvexSet& set, const std::vector<Vector>& bases,
                                          const std::vector<Vector>& directions);

/**
 * Evidence that t u0 lies in the set: b = 2t u_n with u_n = w_n / rho_n
 * (rho_n >= ||w_n||) and the complement 2t u0 - b both lie in the set, and
 * t u0 is their midpoint.
 */
struct MidpointCertificate
{
    Rational t;
    std::size_t index = 0;  // 1-based sequence index n
    std::size_t n1 = 0;     // first index with ||w_n|| > 2t
    std::size_t n2 = 0;     // first index whose complement lies in the set
    Vector u_n;
    Vector b_n;
    Vector complement;
    Vector midpoint;

    bool verify(const ConvexSet& set, const Vector& u0) const;
};

struct LimitOptions
{
    double cluster_epsilon = 1e-6;
    std::size_t min_cluster = 10;
    std::vector<Rational> t_values = {Rational(1), Rational(10), Rational(100)};
};

struct LimitDirection
{
    Vector direction;                 // exact, verified ray direction from the origin
    std::vector<double> normalized;
    std::size_t cluster_size = 0;
    std::vector<MidpointCertificate> certificates;
};

/**
 * Extracts a limit direction of w_n / ||w_n|| by epsilon-net clustering of
 * the sequence's directions relative to its first term, snaps it to a
 * verified rational ray direction, and certifies t u0 for each t.
 */
LimitDirection limit_direction(const ConvexSet& set, const std::vector<Vector>& sequence,
                               const LimitOptions& opts = {});

// ---------------------------------------------------------------------------
// Report

enum class Verdict { Bounded, UnboundedWithRay, UnboundedNoRayFoundAtCap };

std::string_view to_string(Verdict v);

struct RecessionReport
{
    Verdict verdict = Verdict::Bounded;
    RecessionCone cone;
    std::optional<Ray> ray;
    std::optional<ContradictionCertificate> certificate;
    std::vector<CoveragePoint> coverage;
};

struct AnalyzeOptions
{
    bool oracle_only = false;
    OracleOptions oracle;
};

RecessionReport analyze(const ConvexSet& set, const AnalyzeOptions& opts = {});

}  // namespace recess
