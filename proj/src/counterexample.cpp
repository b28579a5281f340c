#include "recess/counterexample.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "recess/linalg.hpp"

namespace recess {

bool BiorthogonalSystem::verify() const
{
    if (vectors.size() != functionals.size()) return false;
    for (std::size_t i = 0; i < functionals.size(); ++i)
        for (std::size_t j = 0; j < vectors.size(); ++j)
            if (functionals[i](vectors[j]) != (i == j ? 1 : 0)) return false;
    return true;
}

BiorthogonalSystem BiorthogonalSystem::truncated(std::size_t k) const
{
    if (k == 0 || k > count()) throw Error(ErrorCode::InvalidInput, "truncation must keep between 1 and count pairs");
    BiorthogonalSystem out;
    out.dim = dim;
    out.vectors.assign(vectors.begin(), vectors.begin() + static_cast<std::ptrdiff_t>(k));
    out.functionals.assign(functionals.begin(), functionals.begin() + static_cast<std::ptrdiff_t>(k));
    return out;
}

SystemKind parse_system_kind(std::string_view text)
{
    if (text == "orthonormal") return SystemKind::Orthonormal;
    if (text == "perturbed") return SystemKind::Perturbed;
    throw Error(ErrorCode::InvalidInput, "unknown system kind '" + std::string(text) + "'");
}

BiorthogonalSystem build_system(std::size_t d, SystemKind kind, std::uint64_t seed)
{
    if (d == 0) throw Error(ErrorCode::InvalidInput, "biorthogonal system needs d >= 1");
    BiorthogonalSystem sys;
    sys.dim = d;
    if (kind == SystemKind::Orthonormal) {
        for (std::size_t n = 0; n < d; ++n) {
            sys.vectors.push_back(Vector::unit(d, n));
            sys.functionals.emplace_back(Vector::unit(d, n));
        }
        return sys;
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-2, 2);
    linalg::Matrix lower = linalg::identity(d);
    linalg::Matrix upper = linalg::identity(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            lower[i][j] = entry(rng);
            upper[j][i] = entry(rng);
        }
    const linalg::Matrix x = linalg::multiply(lower, upper);
    const auto inv = linalg::inverse(x);
    if (!inv) throw Error(ErrorCode::Internal, "unimodular construction produced a singular matrix");
    for (std::size_t n = 0; n < d; ++n) {
        Vector col(d);
        for (std::size_t i = 0; i < d; ++i) col[i] = x[i][n];
        sys.vectors.push_back(std::move(col));
        sys.functionals.emplace_back(Vector((*inv)[n]));
    }
    if (!sys.verify()) throw Error(ErrorCode::Internal, "constructed system is not biorthogonal");
    return sys;
}

EpsilonRule parse_epsilon_rule(std::string_view text)
{
    if (text == "linear") return EpsilonRule::Linear;
    if (text == "quadratic") return EpsilonRule::Quadratic;
    if (text == "constant") return EpsilonRule::Constant;
    throw Error(ErrorCode::InvalidInput, "unknown epsilon rule '" + std::string(text) + "'");
}

std::vector<Rational> epsilon_sequence(EpsilonRule rule, std::size_t k)
{
    std::vector<Rational> eps;
    for (std::size_t n = 1; n <= k; ++n) {
        switch (rule) {
        case EpsilonRule::Linear: eps.emplace_back(n); break;
        case EpsilonRule::Quadratic: eps.emplace_back(n * n); break;
        case EpsilonRule::Constant: eps.emplace_back(1); break;
        }
    }
    return eps;
}

ConvexSet build_strip(const BiorthogonalSystem& system, const std::vector<Rational>& eps, NormKind norm)
{
    if (!system.verify()) throw Error(ErrorCode::InvalidInput, "system is not biorthogonal");
    return ConvexSet::strip_from_epsilon(system.dim, norm, system.functionals, eps, system.vectors);
}

namespace {

// ||v||^2 in every norm kind, exactly.
Rational squared_norm(const Vector& v, NormKind kind)
{
    const NormValue n = norm_value(v, kind);
    return kind == NormKind::L2 ? n.power() : Rational(n.power() * n.power());
}

Scalar product(const Scalar& a, const Scalar& b)
{
    if (a.is_exact() && b.is_exact()) return Scalar(Rational(a.exact() * b.exact()));
    return Scalar::approximate(a.value() * b.value());
}

}  // namespace

bool WitnessPoint::verify(const ConvexSet& set) const
{
    const auto* strip = set.as_strip();
    if (!strip || index == 0 || index > strip->rows.size()) return false;
    for (std::size_t m = 0; m < strip->rows.size(); ++m) {
        const Rational v = strip->rows[m].functional(point);
        if (m + 1 != index) {
            if (v.sign() != 0) return false;
            continue;
        }
        const Rational twice_sq = 4 * v * v;
        const Rational& r_sq = strip->rows[m].radius_sq;
        if (exact ? twice_sq != r_sq : twice_sq < r_sq) return false;
    }
    if (squared_norm(point, set.norm()) < eps_half_sq) return false;
    return inside(set, point) && inside(set, -point);
}

std::vector<WitnessPoint> witness_points(const ConvexSet& set)
{
    const auto* strip = set.as_strip();
    if (!strip) throw Error(ErrorCode::InvalidInput, "witness points need a strip set");
    if (strip->vectors.size() != strip->rows.size())
        throw Error(ErrorCode::InvalidInput, "strip set carries no biorthogonal vectors");

    std::vector<WitnessPoint> out;
    for (std::size_t n = 0; n < strip->rows.size(); ++n) {
        const auto& row = strip->rows[n];
        const Vector& x = strip->vectors[n];
        const Rational pairing = abs(row.functional(x));
        if (pairing.sign() == 0) throw Error(ErrorCode::InvalidInput, "x_n^*(x_n) vanishes");
        WitnessPoint w;
        w.index = n + 1;
        const auto r = exact_sqrt(row.radius_sq);
        w.exact = r.has_value();
        // Rounded up so that |x_n^*(a_n)| >= R_n / 2 still holds.
        const Rational coefficient = (r ? *r : sqrt_upper(row.radius_sq)) / (2 * pairing);
        w.coefficient = w.exact ? Scalar(coefficient) : Scalar::approximate(to_double(coefficient));
        w.point = coefficient * x;
        const NormValue dn = dual_norm_value(row.functional, set.norm());
        const Rational dual_sq = dn.kind() == NormKind::L2 ? dn.power() : Rational(dn.power() * dn.power());
        w.eps_half_sq = row.radius_sq / dual_sq / 4;
        out.push_back(std::move(w));
    }
    return out;
}

std::string EscapeProfile::to_csv() const
{
    std::ostringstream os;
    os << "d,max_ray,diam_lb,recc_dim\n";
    for (const auto& r : rows) {
        os << r.d << ',' << (r.max_ray ? r.max_ray->decimal() : std::string("inf")) << ',' << r.diam_lb.decimal()
           << ',' << r.recc_dim << '\n';
    }
    return os.str();
}

EscapeProfile escape_profile(std::span<const std::size_t> dims, const EscapeOptions& opts)
{
    if (dims.empty()) throw Error(ErrorCode::InvalidInput, "escape profile needs at least one dimension");
    if (!std::is_sorted(dims.begin(), dims.end()))
        throw Error(ErrorCode::InvalidInput, "dimensions must be listed in ascending order");

    EscapeProfile profile;
    for (std::size_t d : dims) {
        if (d == 0) throw Error(ErrorCode::InvalidInput, "dimension must be positive");
        BiorthogonalSystem sys = build_system(d, opts.system, opts.seed + d);
        const std::size_t k = opts.truncate ? std::min(*opts.truncate, d) : d;
        if (k < d) sys = sys.truncated(k);
        const ConvexSet strip = build_strip(sys, epsilon_sequence(opts.eps, k), opts.norm);

        EscapeRow row;
        row.d = d;
        row.recc_dim = recession_cone(strip).dimension;

        const Vector origin(d);
        if (row.recc_dim == 0) {
            for (const auto& x : sys.vectors) {
                const RayLength len = ray_length(strip, origin, x);
                const Scalar xn = norm(x, opts.norm);
                const Scalar along = xn.is_exact() && len.value.is_exact() ? Scalar(Rational(len.value.exact() / xn.exact()))
                                                               : Scalar::approximate(len.value.value() / xn.value());
                if (!row.max_ray || compare(along, *row.max_ray) > 0) row.max_ray = along;
            }
        }

        const auto witnesses = witness_points(strip);
        const auto& last = witnesses.back();
        row.diam_lb = product(Scalar(2), norm(last.point, opts.norm));
        if (!last.exact) row.diam_lb = Scalar::approximate(row.diam_lb.value());

        if (opts.system == SystemKind::Orthonormal && k == d) {
            const auto* s = strip.as_strip();
            Rational acc = 0;
            for (const auto& r : s->rows) {
                const Rational radius = *exact_sqrt(r.radius_sq);
                switch (opts.norm) {
                case NormKind::L1: acc += radius; break;
                case NormKind::L2: acc += r.radius_sq; break;
                case NormKind::Linf: acc = std::max(acc, radius); break;
                }
            }
            row.circumradius = opts.norm == NormKind::L2 ? Scalar::sqrt_of(acc) : Scalar(acc);
        }
        profile.rows.push_back(std::move(row));
    }
    return profile;
}

ConvexSet minkowski_lift(const ConvexSet& inner, std::size_t ambient_dim, const Rational& r,
                         std::optional<NormKind> ball_norm)
{
    return ConvexSet::minkowski(ambient_dim, inner.norm(), inner, r, ball_norm);
}

RayDecompositionReport ray_decomposition_check(const ConvexSet& lift, const Vector& u0,
                                               const std::vector<Rational>& t_grid)
{
    const auto* sum = lift.as_minkowski();
    if (!sum) throw Error(ErrorCode::InvalidInput, "ray decomposition needs a Minkowski lift");
    require_same_dim(lift.dim(), u0.size(), "decomposition direction");
    if (u0.is_zero()) throw Error(ErrorCode::ZeroDirection, "decomposition direction is zero");
    const Vector origin(lift.dim());
    if (!inside(lift, origin)) throw Error(ErrorCode::PremiseViolated, "the origin must lie in the lift");
    if (contains_half_line(lift, origin, u0).verdict != HalfLineVerdict::Contained)
        throw Error(ErrorCode::PremiseViolated, "u0 is not a ray direction of the lift");

    const NormKind kind = lift.norm();
    const Scalar u_norm = norm(u0, kind);
    std::vector<double> u_unit = u0.to_doubles();
    for (auto& x : u_unit) x /= u_norm.value();

    RayDecompositionReport report;
    std::optional<double> previous;
    for (const auto& n : t_grid) {
        if (n.sign() <= 0) throw Error(ErrorCode::InvalidInput, "grid values must be positive");
        const Vector x = n * u0;
        DecompositionStep step;
        step.n = n;
        step.w = minkowski_distance(lift, x).point;
        step.b = x - step.w;
        step.b_in_ball = norm_value(step.b, sum->ball_norm).compare(sum->radius) < 0;

        const NormValue w_norm = norm_value(step.w, kind);
        if (u_norm.is_exact()) {
            const Rational rhs = n * u_norm.exact() - sum->radius;
            step.norm_bound_holds = rhs.sign() <= 0 || w_norm.compare(rhs) >= 0;
        } else {
            const double rhs = to_double(n) * u_norm.value() - to_double(sum->radius);
            step.norm_bound_holds = w_norm.approx() >= rhs - tolerance() * std::max(1.0, rhs);
        }
        if (!step.w.is_zero()) {
            std::vector<double> wd = step.w.to_doubles();
            const double wn = w_norm.approx();
            for (std::size_t j = 0; j < wd.size(); ++j) wd[j] = wd[j] / wn - u_unit[j];
            step.direction_error = norm(wd, kind);
            if (previous && *step.direction_error > *previous + tolerance()) report.errors_nonincreasing = false;
            previous = step.direction_error;
            report.final_error = *step.direction_error;
        }
        report.bounds_hold = report.bounds_hold && step.b_in_ball && step.norm_bound_holds;
        report.steps.push_back(std::move(step));
    }
    return report;
}

DenseRestrictionWitness dense_restriction_witness(const ConvexSet& set, const Rational& bound)
{
    if (bound.sign() < 0) throw Error(ErrorCode::InvalidInput, "witness bound must be nonnegative");
    const auto base = interior_point(set);
    if (!base) throw Error(ErrorCode::EmptySet, "the set is empty");
    const RecessionCone cone = recession_cone(set);
    if (cone.trivial()) throw Error(ErrorCode::CannotWitness, "the set is bounded");

    const NormKind kind = set.norm();
    const Vector& u = *cone.sample_ray;
    const Rational s = (bound + Rational(3, 2) + norm_value(*base, kind).upper()) / norm_value(u, kind).lower();

    DenseRestrictionWitness w;
    w.bound = bound;
    w.a = *base + s * u;
    if (norm_value(w.a, kind).compare(Rational(bound + 1)) <= 0)
        throw Error(ErrorCode::Internal, "scaled witness did not clear the bound");
    w.delta = std::min(inner_radius_lower(set, w.a), Rational(49, 100));

    const Integer denominator = 1000000;
    Vector rounded(set.dim());
    for (std::size_t j = 0; j < set.dim(); ++j) rounded[j] = round_to_denominator(w.a[j], denominator);
    // a is already rational; keep it when rounding would leave B(a, delta/2).
    w.b = norm_value(rounded - w.a, kind).compare(Rational(w.delta / 2)) < 0 ? rounded : w.a;
    w.verified = inside(set, w.b) && norm_value(w.b, kind).compare(bound) > 0;
    return w;
}

}  // namespace recess
