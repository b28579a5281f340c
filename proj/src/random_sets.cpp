#include "recess/random_sets.hpp"

#include "recess/counterexample.hpp"
#include "recess/lp.hpp"

namespace recess::random {

long integer(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational rational(Rng& rng, long lo, long hi, long den) { return Rational(integer(rng, lo * den, hi * den), den); }

Vector integer_vector(Rng& rng, std::size_t d, long lo, long hi, bool nonzero)
{
    while (true) {
        Vector v(d);
        for (std::size_t j = 0; j < d; ++j) v[j] = integer(rng, lo, hi);
        if (!nonzero || !v.is_zero()) return v;
    }
}

Vector rational_vector(Rng& rng, std::size_t d, long lo, long hi, long den)
{
    Vector v(d);
    for (std::size_t j = 0; j < d; ++j) v[j] = rational(rng, lo, hi, den);
    return v;
}

Vector unit_rational(Rng& rng, std::size_t d, NormKind kind)
{
    if (kind != NormKind::L2) {
        const Vector v = integer_vector(rng, d, -4, 4);
        return v * Rational(1 / norm_value(v, kind).power());
    }
    if (d == 1) return Vector{Rational(integer(rng, 0, 1) == 0 ? -1 : 1)};
    Vector p = rational_vector(rng, d - 1, -2, 2, 4);
    const Rational s = dot(p, p);
    Vector u(d);
    for (std::size_t j = 0; j + 1 < d; ++j) u[j] = 2 * p[j] / (s + 1);
    u[d - 1] = (s - 1) / (s + 1);
    // Move the distinguished coordinate to a random slot.
    std::swap(u[d - 1], u[static_cast<std::size_t>(integer(rng, 0, static_cast<long>(d) - 1))]);
    return u;
}

ConvexSet unbounded_polyhedron(Rng& rng, std::size_t d, NormKind kind, std::optional<Vector> ray)
{
    const Vector r = ray ? *ray : integer_vector(rng, d, -3, 3);
    const std::size_t m = d + 1 + static_cast<std::size_t>(integer(rng, 0, 3));
    std::vector<LinearInequality> rows;
    for (std::size_t i = 0; i < m; ++i) {
        Vector a = integer_vector(rng, d, -5, 5);
        if (dot(a, r).sign() > 0) a = -a;
        rows.push_back(LinearInequality{Functional(a), rational(rng, 1, 10, 2), true});
    }
    return ConvexSet::polyhedron(d, kind, std::move(rows));
}

ConvexSet bounded_polyhedron(Rng& rng, std::size_t d, NormKind kind)
{
    std::vector<LinearInequality> rows;
    for (std::size_t j = 0; j < d; ++j) {
        rows.push_back(LinearInequality{Functional(Vector::unit(d, j)), Rational(integer(rng, 1, 8)), true});
        rows.push_back(LinearInequality{Functional(-Vector::unit(d, j)), Rational(integer(rng, 1, 8)), true});
    }
    const std::size_t extra = static_cast<std::size_t>(integer(rng, 0, 3));
    for (std::size_t i = 0; i < extra; ++i)
        rows.push_back(LinearInequality{Functional(integer_vector(rng, d, -5, 5)), rational(rng, 1, 10, 2), true});
    return ConvexSet::polyhedron(d, kind, std::move(rows));
}

ConvexSet strip(Rng& rng, std::size_t d, std::size_t k, NormKind kind)
{
    const SystemKind sk = integer(rng, 0, 1) == 0 ? SystemKind::Orthonormal : SystemKind::Perturbed;
    BiorthogonalSystem sys = build_system(d, sk, rng());
    if (k < d) sys = sys.truncated(k);
    std::vector<Rational> eps;
    for (std::size_t n = 0; n < k; ++n) eps.push_back(rational(rng, 1, 5, 3) + Rational(1, 3));
    return build_strip(sys, eps, kind);
}

Vector interior_sample(Rng& rng, const ConvexSet& set, const Vector& base)
{
    const Vector u = integer_vector(rng, set.dim(), -5, 5);
    const RayLength len = ray_length(set, base, u);
    const Rational frac(integer(rng, 1, 999), 1000);
    Rational reach(10);
    if (len.kind == RayLengthKind::Finite) {
        reach = len.value.is_exact() ? len.value.exact() : Rational(from_double(len.value.value()) * Rational(999999, 1000000));
        reach = std::min(reach, Rational(10));
    }
    Vector x = base + (frac * reach) * u;
    return inside(set, x) ? x : base;
}

std::optional<Vector> cone_direction(Rng& rng, const RecessionCone& cone)
{
    if (cone.trivial()) return std::nullopt;
    const std::size_t d = cone.ambient_dim;
    Vector u(d);
    if (!cone.basis.empty() && cone.inequalities.empty()) {
        for (const auto& b : cone.basis) u += Rational(integer(rng, -3, 3)) * b;
    } else {
        lp::LinearProgram prog;
        prog.num_vars = d;
        for (const auto& g : cone.inequalities) prog.rows.push_back({g, lp::Relation::LessEqual, Rational(0)});
        for (const auto& h : cone.equalities) prog.rows.push_back({h, lp::Relation::Equal, Rational(0)});
        for (std::size_t j = 0; j < d; ++j) {
            prog.rows.push_back({Functional(Vector::unit(d, j)), lp::Relation::LessEqual, Rational(1)});
            prog.rows.push_back({Functional(-Vector::unit(d, j)), lp::Relation::LessEqual, Rational(1)});
        }
        u = Rational(integer(rng, 0, 2)) * *cone.sample_ray;
        for (int k = 0; k < 2; ++k) {
            prog.objective = Functional(integer_vector(rng, d, -3, 3));
            const lp::Outcome out = lp::solve(prog);
            if (out.status == lp::Status::Optimal) u += Rational(integer(rng, 0, 3)) * out.point;
        }
    }
    if (u.is_zero() || !cone.contains(u)) return cone.sample_ray;
    return u;
}

}  // namespace recess::random
