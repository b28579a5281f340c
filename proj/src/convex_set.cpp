#include "recess/convex_set.hpp"

#include <cmath>
#include <limits>

#include "recess/linalg.hpp"

namespace recess {
namespace {

// Interval bracketing a possibly irrational nonnegative quantity.
struct Bracket
{
    Rational lo;
    Rational hi;
    bool exact = false;

    Scalar scalar() const
    {
        if (exact) return Scalar(lo);
        return Scalar::approximate(to_double(Rational((lo + hi) / 2)));
    }
};

// sqrt(a) - sqrt(b) for a, b >= 0.
Bracket root_difference(const Rational& a, const Rational& b, unsigned digits)
{
    auto ra = exact_sqrt(a);
    auto rb = exact_sqrt(b);
    if (ra && rb) return {*ra - *rb, *ra - *rb, true};
    return {sqrt_lower(a, digits) - sqrt_upper(b, digits), sqrt_upper(a, digits) - sqrt_lower(b, digits), false};
}

bool box_shaped(const std::vector<LinearInequality>& rows)
{
    for (const auto& row : rows) {
        std::size_t nonzero = 0;
        for (const auto& c : row.normal.coefficients())
            if (c.sign() != 0) ++nonzero;
        if (nonzero != 1) return false;
    }
    return true;
}

std::vector<LinearInequality> polyhedral_rows(const ConvexSet& set)
{
    if (set.as_minkowski()) throw Error(ErrorCode::InvalidInput, "Minkowski sums have no polyhedral closure here");
    return set.closure_rows();
}

Projection project_box(const std::vector<LinearInequality>& rows, const Vector& y, NormKind kind)
{
    const std::size_t k = y.size();
    std::vector<std::optional<Rational>> lo(k), hi(k);
    for (const auto& row : rows) {
        std::size_t j = 0;
        while (row.normal[j].sign() == 0) ++j;
        const Rational bound = row.offset / row.normal[j];
        if (row.normal[j].sign() > 0) {
            if (!hi[j] || bound < *hi[j]) hi[j] = bound;
        } else {
            if (!lo[j] || bound > *lo[j]) lo[j] = bound;
        }
    }
    Vector p = y;
    for (std::size_t j = 0; j < k; ++j) {
        if (lo[j] && hi[j] && *lo[j] > *hi[j]) throw Error(ErrorCode::EmptySet, "box closure is empty");
        if (lo[j] && p[j] < *lo[j]) p[j] = *lo[j];
        if (hi[j] && p[j] > *hi[j]) p[j] = *hi[j];
    }
    return {p, norm_value(y - p, kind)};
}

Projection project_lp(const std::vector<LinearInequality>& rows, const Vector& y, NormKind kind)
{
    const std::size_t k = y.size();
    const std::size_t slacks = kind == NormKind::L1 ? k : 1;
    const std::size_t n = k + slacks;
    lp::LinearProgram program;
    program.num_vars = n;
    Vector c(n);
    for (std::size_t s = 0; s < slacks; ++s) c[k + s] = 1;
    program.objective = Functional(c);
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t s = kind == NormKind::L1 ? k + j : k;
        Vector up(n), down(n);
        up[j] = 1;
        up[s] = -1;
        down[j] = -1;
        down[s] = -1;
        program.rows.push_back({Functional(up), lp::Relation::LessEqual, y[j]});
        program.rows.push_back({Functional(down), lp::Relation::LessEqual, Rational(-y[j])});
    }
    for (const auto& row : rows) {
        Vector a(n);
        for (std::size_t j = 0; j < k; ++j) a[j] = row.normal[j];
        program.rows.push_back({Functional(a), lp::Relation::LessEqual, row.offset});
    }
    const auto out = lp::solve(program);
    if (out.status != lp::Status::Optimal) throw Error(ErrorCode::EmptySet, "polyhedral closure is empty");
    Vector p(std::vector<Rational>(out.point.begin(), out.point.begin() + static_cast<std::ptrdiff_t>(k)));
    return {p, norm_value(y - p, kind)};
}

// Euclidean projection by enumerating active sets of linearly independent
// rows; the true nearest point is the projection onto one of them.
Projection project_active_sets(const std::vector<LinearInequality>& rows, const Vector& y)
{
    const std::size_t k = y.size();
    const std::size_t m = rows.size();
    auto feasible = [&](const Vector& w) {
        for (const auto& row : rows)
            if (row.slack(w).sign() < 0) return false;
        return true;
    };

    std::optional<Projection> best;
    auto consider = [&](const Vector& w) {
        if (!feasible(w)) return;
        NormValue dist = norm_value(y - w, NormKind::L2);
        if (!best || dist.compare(best->distance) < 0) best = Projection{w, dist};
    };

    consider(y);
    std::vector<std::size_t> subset;
    auto recurse = [&](auto&& self, std::size_t start) -> void {
        if (!subset.empty()) {
            const std::size_t s = subset.size();
            linalg::Matrix gram(s, std::vector<Rational>(s));
            Vector rhs(s);
            for (std::size_t i = 0; i < s; ++i) {
                const auto& ai = rows[subset[i]].normal.coefficients();
                for (std::size_t j = 0; j < s; ++j) gram[i][j] = dot(ai, rows[subset[j]].normal.coefficients());
                rhs[i] = dot(ai, y) - rows[subset[i]].offset;
            }
            if (auto lambda = linalg::solve(gram, rhs)) {
                Vector w = y;
                for (std::size_t i = 0; i < s; ++i) w -= (*lambda)[i] * rows[subset[i]].normal.coefficients();
                consider(w);
            }
        }
        if (subset.size() == k) return;
        for (std::size_t i = start; i < m; ++i) {
            subset.push_back(i);
            self(self, i + 1);
            subset.pop_back();
        }
    };
    recurse(recurse, 0);
    if (!best) throw Error(ErrorCode::EmptySet, "polyhedral closure is empty");
    return *best;
}

// Constant C with ||v||_ball <= C ||v||_ambient in dimension d.
Bracket norm_equivalence(NormKind ball, NormKind ambient, std::size_t d)
{
    auto one = Bracket{1, 1, true};
    if (ball == ambient || ball == NormKind::Linf) return one;
    if (ball == NormKind::L2 && ambient == NormKind::L1) return one;
    if (ball == NormKind::L1 && ambient == NormKind::Linf) return {Rational(d), Rational(d), true};
    // sqrt(d): L1 vs L2 and L2 vs Linf.
    const Rational dd(d);
    if (auto r = exact_sqrt(dd)) return {*r, *r, true};
    return {sqrt_lower(dd), sqrt_upper(dd), false};
}

struct RadiusResult
{
    Scalar value;
    Rational lower;
};

RadiusResult polyhedron_radius(const ConvexSet& set, const HPolyhedron& poly, const Vector& x)
{
    const NormKind dk = dual(set.norm());
    std::optional<NormValue> best;
    for (const auto& row : poly.rows) {
        const Rational s = row.slack(x);
        if (s.sign() <= 0) throw Error(ErrorCode::NotInSet, "point is not interior to the polyhedron");
        const Rational n = dual_norm_value(row.normal, set.norm()).power();
        NormValue delta(dk, dk == NormKind::L2 ? Rational(s * s / n) : Rational(s / n));
        if (!best || delta.compare(*best) < 0) best = delta;
    }
    if (!best) return {Scalar::approximate(std::numeric_limits<double>::infinity()), Rational(1)};
    return {best->scalar(), best->lower()};
}

RadiusResult strip_radius(const ConvexSet& set, const StripSet& strip, const Vector& x)
{
    // delta_n = sqrt(R_n^2 / N_n^2) - sqrt(f_n(x)^2 / N_n^2), N_n the dual norm.
    for (unsigned digits = 40; digits <= 2560; digits *= 2) {
        std::optional<Bracket> best;
        for (const auto& row : strip.rows) {
            const Rational fx = row.functional(x);
            if (!(fx * fx < row.radius_sq)) throw Error(ErrorCode::NotInSet, "point is not inside the strip set");
            const NormValue dn = dual_norm_value(row.functional, set.norm());
            const Rational nsq = dn.kind() == NormKind::L2 ? dn.power() : Rational(dn.power() * dn.power());
            Bracket b = root_difference(row.radius_sq / nsq, fx * fx / nsq, digits);
            if (!best) {
                best = std::move(b);
                continue;
            }
            const bool exact = best->exact && b.exact;
            if (b.lo < best->lo) best = std::move(b);
            best->exact = exact;
        }
        if (!best) return {Scalar::approximate(std::numeric_limits<double>::infinity()), Rational(1)};
        if (best->lo.sign() > 0) return {best->scalar(), best->lo};
    }
    throw Error(ErrorCode::Internal, "inner radius below representable precision");
}

RadiusResult minkowski_radius(const ConvexSet& set, const MinkowskiSum& sum, const Vector& x)
{
    const Projection p = minkowski_distance(set, x);
    if (p.distance.compare(sum.radius) >= 0) throw Error(ErrorCode::NotInSet, "point is not inside the Minkowski sum");
    const Bracket c = norm_equivalence(sum.ball_norm, set.norm(), set.dim());
    const Scalar dist = p.distance.scalar();
    Scalar value = dist.is_exact() && c.exact ? Scalar(Rational((sum.radius - dist.exact()) / c.lo))
                                              : Scalar::approximate((to_double(sum.radius) - dist.value()) / to_double(c.lo));
    for (unsigned digits = 40; digits <= 2000; digits *= 2) {
        Rational lower = (sum.radius - p.distance.upper(digits)) / c.hi;
        if (lower.sign() > 0) return {value, value.is_exact() ? value.exact() : lower};
    }
    throw Error(ErrorCode::Internal, "inner radius below representable precision");
}

}  // namespace

ConvexSet ConvexSet::polyhedron(std::size_t dim, NormKind norm, std::vector<LinearInequality> rows)
{
    if (dim == 0) throw Error(ErrorCode::InvalidInput, "polyhedron needs dimension >= 1");
    for (const auto& row : rows) {
        require_same_dim(dim, row.normal.size(), "polyhedron row");
        if (row.normal.coefficients().is_zero()) throw Error(ErrorCode::InvalidInput, "polyhedron row with zero normal");
    }
    return ConvexSet(dim, norm, HPolyhedron{std::move(rows)});
}

ConvexSet ConvexSet::strip(std::size_t dim, NormKind norm, std::vector<StripRow> rows, std::vector<Vector> vectors)
{
    if (dim == 0) throw Error(ErrorCode::InvalidInput, "strip set needs dimension >= 1");
    for (const auto& row : rows) {
        require_same_dim(dim, row.functional.size(), "strip functional");
        if (row.radius_sq.sign() <= 0) throw Error(ErrorCode::InvalidInput, "strip radii must be strictly positive");
        if (row.functional.coefficients().is_zero()) throw Error(ErrorCode::InvalidInput, "strip functional is zero");
    }
    if (!vectors.empty() && vectors.size() != rows.size())
        throw Error(ErrorCode::InvalidInput, "strip companion vectors must match the functionals");
    for (const auto& v : vectors) require_same_dim(dim, v.size(), "strip companion vector");
    return ConvexSet(dim, norm, StripSet{std::move(rows), std::move(vectors)});
}

ConvexSet ConvexSet::strip_from_epsilon(std::size_t dim, NormKind norm, std::vector<Functional> functionals,
                                        const std::vector<Rational>& eps, std::vector<Vector> vectors)
{
    if (eps.size() != functionals.size()) throw Error(ErrorCode::InvalidInput, "one epsilon per functional required");
    std::vector<StripRow> rows;
    for (std::size_t n = 0; n < functionals.size(); ++n) {
        if (eps[n].sign() <= 0) throw Error(ErrorCode::InvalidInput, "epsilon values must be positive");
        require_same_dim(dim, functionals[n].size(), "strip functional");
        const NormValue dn = dual_norm_value(functionals[n], norm);
        const Rational nsq = dn.kind() == NormKind::L2 ? dn.power() : Rational(dn.power() * dn.power());
        rows.push_back({std::move(functionals[n]), eps[n] * eps[n] * nsq});
    }
    return strip(dim, norm, std::move(rows), std::move(vectors));
}

ConvexSet ConvexSet::minkowski(std::size_t dim, NormKind norm, ConvexSet inner, Rational radius,
                               std::optional<NormKind> ball_norm)
{
    if (inner.dim() == 0 || inner.dim() > dim)
        throw Error(ErrorCode::InvalidInput, "inner set must live in a coordinate subspace of the ambient space");
    if (inner.as_minkowski()) throw Error(ErrorCode::InvalidInput, "nested Minkowski sums are not supported");
    if (radius.sign() <= 0) throw Error(ErrorCode::InvalidInput, "ball radius must be positive");
    const NormKind bn = ball_norm.value_or(norm);
    if (!supports_projection(inner, bn))
        throw Error(ErrorCode::InvalidInput, "inner set has no exact distance-to-closure under this norm");
    if (!interior_point(inner)) throw Error(ErrorCode::InvalidInput, "inner set is empty");
    auto ptr = std::make_shared<const ConvexSet>(std::move(inner));
    return ConvexSet(dim, norm, MinkowskiSum{std::move(ptr), std::move(radius), bn});
}

std::vector<LinearInequality> ConvexSet::closure_rows() const
{
    if (const auto* poly = as_polyhedron()) {
        std::vector<LinearInequality> rows = poly->rows;
        for (auto& r : rows) r.strict = false;
        return rows;
    }
    if (const auto* strip = as_strip()) {
        std::vector<LinearInequality> rows;
        for (const auto& row : strip->rows) {
            auto r = exact_sqrt(row.radius_sq);
            if (!r) throw Error(ErrorCode::InvalidInput, "strip radius is irrational; no rational closure rows");
            rows.push_back({row.functional, *r, false});
            rows.push_back({Functional(-row.functional.coefficients()), *r, false});
        }
        return rows;
    }
    throw Error(ErrorCode::InvalidInput, "Minkowski sums have no polyhedral closure here");
}

MembershipVerdict contains(const ConvexSet& set, const Vector& x)
{
    require_same_dim(set.dim(), x.size(), "membership query");
    MembershipVerdict verdict;
    if (const auto* poly = set.as_polyhedron()) {
        verdict.inside = true;
        std::optional<Rational> min_slack;
        for (std::size_t i = 0; i < poly->rows.size(); ++i) {
            const auto& row = poly->rows[i];
            Rational s = row.slack(x);
            if (!row.satisfied_by(x)) verdict.inside = false;
            if (!min_slack || s < *min_slack) {
                min_slack = std::move(s);
                verdict.binding_index = i;
            }
        }
        return verdict;
    }
    if (const auto* strip = set.as_strip()) {
        verdict.inside = true;
        std::optional<Rational> min_slack;
        for (std::size_t i = 0; i < strip->rows.size(); ++i) {
            const auto& row = strip->rows[i];
            const Rational fx = row.functional(x);
            if (!(fx * fx < row.radius_sq)) verdict.inside = false;
            Rational s = sqrt_lower(row.radius_sq) - abs(fx);
            if (!min_slack || s < *min_slack) {
                min_slack = std::move(s);
                verdict.binding_index = i;
            }
        }
        return verdict;
    }
    const auto& sum = *set.as_minkowski();
    verdict.inside = minkowski_distance(set, x).distance.compare(sum.radius) < 0;
    return verdict;
}

bool inside(const ConvexSet& set, const Vector& x) { return contains(set, x).inside; }

Scalar inner_radius(const ConvexSet& set, const Vector& x)
{
    require_same_dim(set.dim(), x.size(), "inner radius query");
    if (!inside(set, x)) throw Error(ErrorCode::NotInSet, "inner radius requested at a point outside the set");
    return std::visit(
        [&](const auto& shape) -> Scalar {
            using T = std::decay_t<decltype(shape)>;
            if constexpr (std::is_same_v<T, HPolyhedron>) return polyhedron_radius(set, shape, x).value;
            else if constexpr (std::is_same_v<T, StripSet>) return strip_radius(set, shape, x).value;
            else return minkowski_radius(set, shape, x).value;
        },
        set.shape());
}

Rational inner_radius_lower(const ConvexSet& set, const Vector& x)
{
    require_same_dim(set.dim(), x.size(), "inner radius query");
    if (!inside(set, x)) throw Error(ErrorCode::NotInSet, "inner radius requested at a point outside the set");
    return std::visit(
        [&](const auto& shape) -> Rational {
            using T = std::decay_t<decltype(shape)>;
            if constexpr (std::is_same_v<T, HPolyhedron>) return polyhedron_radius(set, shape, x).lower;
            else if constexpr (std::is_same_v<T, StripSet>) return strip_radius(set, shape, x).lower;
            else return minkowski_radius(set, shape, x).lower;
        },
        set.shape());
}

bool supports_projection(const ConvexSet& set, NormKind kind)
{
    if (set.as_minkowski()) return false;
    if (const auto* strip = set.as_strip()) {
        for (const auto& row : strip->rows)
            if (!exact_sqrt(row.radius_sq)) return false;
    }
    const auto rows = set.closure_rows();
    if (box_shaped(rows)) return true;
    if (kind != NormKind::L2) return true;
    return set.dim() <= 3;
}

Projection project_onto_closure(const ConvexSet& set, const Vector& y, NormKind kind)
{
    require_same_dim(set.dim(), y.size(), "projection");
    if (!supports_projection(set, kind))
        throw Error(ErrorCode::InvalidInput, "no exact projection available for this set and norm");
    const auto rows = polyhedral_rows(set);
    if (box_shaped(rows)) return project_box(rows, y, kind);
    if (kind != NormKind::L2) return project_lp(rows, y, kind);
    return project_active_sets(rows, y);
}

Projection minkowski_distance(const ConvexSet& set, const Vector& x)
{
    const auto* sum = set.as_minkowski();
    if (!sum) throw Error(ErrorCode::InvalidInput, "not a Minkowski sum");
    require_same_dim(set.dim(), x.size(), "Minkowski distance");
    const std::size_t k = sum->inner->dim();
    const std::size_t d = set.dim();
    Vector y(std::vector<Rational>(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k)));
    Projection inner = project_onto_closure(*sum->inner, y, sum->ball_norm);
    NormValue perp(sum->ball_norm, Rational(0));
    if (k < d) {
        Vector z(std::vector<Rational>(x.begin() + static_cast<std::ptrdiff_t>(k), x.end()));
        perp = norm_value(z, sum->ball_norm);
    }
    Vector embedded(d);
    for (std::size_t j = 0; j < k; ++j) embedded[j] = inner.point[j];
    return {embedded, NormValue::concatenate(inner.distance, perp)};
}

std::optional<Vector> interior_point(const ConvexSet& set)
{
    Vector origin(set.dim());
    if (inside(set, origin)) return origin;
    if (const auto* poly = set.as_polyhedron()) {
        std::vector<LinearInequality> rows = poly->rows;
        for (auto& r : rows) r.strict = true;
        return lp::feasible_point(rows, set.dim());
    }
    if (set.as_strip()) return origin;
    const auto& sum = *set.as_minkowski();
    auto p = interior_point(*sum.inner);
    if (!p) return std::nullopt;
    Vector embedded(set.dim());
    for (std::size_t j = 0; j < p->size(); ++j) embedded[j] = (*p)[j];
    return embedded;
}

}  // namespace recess
