#include "recess/recession.hpp"

#include <algorithm>
#include <cmath>

#include "recess/linalg.hpp"

namespace recess {
namespace {

Rational power_of_two(int e)
{
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= 2;
    return r;
}

void check_ray_query(const ConvexSet& set, const Vector& z, const Vector& u)
{
    require_same_dim(set.dim(), z.size(), "ray base");
    require_same_dim(set.dim(), u.size(), "ray direction");
    if (u.is_zero()) throw Error(ErrorCode::ZeroDirection, "ray direction must be nonzero");
    if (!inside(set, z)) throw Error(ErrorCode::NotInSet, "ray base is outside the set");
}

RayLength polyhedron_ray_length(const HPolyhedron& poly, const Vector& z, const Vector& u)
{
    RayLength out;
    out.kind = RayLengthKind::Infinite;
    std::optional<Rational> best;
    for (std::size_t i = 0; i < poly.rows.size(); ++i) {
        const auto& row = poly.rows[i];
        const Rational rate = row.normal(u);
        if (rate.sign() <= 0) continue;
        Rational t = row.slack(z) / rate;
        if (!best || t < *best) {
            best = std::move(t);
            out.binding = i;
        }
    }
    if (best) {
        out.kind = RayLengthKind::Finite;
        out.value = Scalar(*best);
    }
    return out;
}

RayLength strip_ray_length(const StripSet& strip, const Vector& z, const Vector& u)
{
    // t_n = (R_n - sign(f_n(u)) f_n(z)) / |f_n(u)|, R_n / |f_n(u)| = sqrt(R_n^2 / f_n(u)^2).
    RayLength out;
    out.kind = RayLengthKind::Infinite;
    std::optional<Rational> best_lo;
    Rational best_hi;
    bool all_exact = true;
    for (std::size_t i = 0; i < strip.rows.size(); ++i) {
        const auto& row = strip.rows[i];
        const Rational fu = row.functional(u);
        if (fu.sign() == 0) continue;
        const Rational shift = row.functional(z) / fu;
        const Rational q = row.radius_sq / (fu * fu);
        Rational lo, hi;
        if (auto r = exact_sqrt(q)) {
            lo = hi = *r - shift;
        } else {
            all_exact = false;
            lo = sqrt_lower(q) - shift;
            hi = sqrt_upper(q) - shift;
        }
        if (!best_lo || lo < *best_lo) {
            best_lo = std::move(lo);
            best_hi = std::move(hi);
            out.binding = i;
        }
    }
    if (best_lo) {
        out.kind = RayLengthKind::Finite;
        out.value = all_exact ? Scalar(*best_lo) : Scalar::approximate(to_double(Rational((*best_lo + best_hi) / 2)));
    }
    return out;
}

Vector pad(const Vector& v, std::size_t d)
{
    Vector out(d);
    for (std::size_t j = 0; j < v.size(); ++j) out[j] = v[j];
    return out;
}

Functional pad(const Functional& f, std::size_t d) { return Functional(pad(f.coefficients(), d)); }

// Optimal value of min <c, u> over the cone rows intersected with the box
// [-1, 1]^d, together with the minimizer.
lp::Outcome minimize_over_cone(const std::vector<Functional>& rows, const Vector& c)
{
    const std::size_t d = c.size();
    lp::LinearProgram program;
    program.num_vars = d;
    program.objective = Functional(c);
    for (const auto& a : rows) program.rows.push_back({a, lp::Relation::LessEqual, Rational(0)});
    for (std::size_t j = 0; j < d; ++j) {
        program.rows.push_back({Functional(Vector::unit(d, j)), lp::Relation::LessEqual, Rational(1)});
        program.rows.push_back({Functional(-Vector::unit(d, j)), lp::Relation::LessEqual, Rational(1)});
    }
    return lp::solve(program);
}

RecessionCone polyhedron_cone(const ConvexSet& set, const HPolyhedron& poly)
{
    RecessionCone cone;
    cone.kind = RecessionCone::Kind::Rows;
    cone.ambient_dim = set.dim();
    for (const auto& row : poly.rows) cone.inequalities.push_back(row.normal);
    const std::size_t d = set.dim();

    // Coordinate directions first so that simple rays are reported simply.
    for (std::size_t j = 0; j < d && !cone.sample_ray; ++j) {
        for (int s : {1, -1}) {
            Vector e = Vector::unit(d, j) * Rational(s);
            if (cone.contains(e)) {
                cone.sample_ray = e;
                break;
            }
        }
    }
    for (std::size_t j = 0; j < d && !cone.sample_ray; ++j) {
        for (int s : {1, -1}) {
            const auto out = minimize_over_cone(cone.inequalities, Vector::unit(d, j) * Rational(-s));
            if (out.status == lp::Status::Optimal && out.value.sign() < 0) {
                cone.sample_ray = out.point;
                break;
            }
        }
    }
    if (!cone.sample_ray) {
        cone.dimension = 0;
        return cone;
    }

    // Implicit equalities of the cone determine its linear hull.
    linalg::Matrix implicit;
    for (const auto& a : cone.inequalities) {
        const auto out = minimize_over_cone(cone.inequalities, a.coefficients());
        if (out.status == lp::Status::Optimal && out.value.sign() == 0) implicit.push_back(a.coefficients().coords());
    }
    cone.dimension = d - linalg::rank(implicit);
    return cone;
}

RecessionCone strip_cone(const ConvexSet& set, const StripSet& strip)
{
    RecessionCone cone;
    cone.kind = RecessionCone::Kind::Kernel;
    cone.ambient_dim = set.dim();
    linalg::Matrix m;
    for (const auto& row : strip.rows) {
        cone.equalities.push_back(row.functional);
        m.push_back(row.functional.coefficients().coords());
    }
    cone.basis = linalg::nullspace(std::move(m), set.dim());
    cone.dimension = cone.basis.size();
    if (!cone.basis.empty()) cone.sample_ray = cone.basis.front();
    return cone;
}

// Rational direction with ||u||_kind <= 1, equal to 1 when exact.
Vector unit_rational(const Vector& u, NormKind kind)
{
    const NormValue n = norm_value(u, kind);
    return u * Rational(1 / n.upper());
}

bool norm_is_one(const Vector& u, NormKind kind) { return norm_value(u, kind).compare(Rational(1)) == 0; }

// L1-nearest point of the cone to target, exact: minimize sum s_j subject to
// |u_j - target_j| <= s_j and the cone rows.
std::optional<Vector> nearest_in_cone(const RecessionCone& cone, const Vector& target)
{
    const std::size_t d = cone.ambient_dim;
    auto widen = [&](const Functional& f) {
        Vector w(2 * d);
        for (std::size_t j = 0; j < d; ++j) w[j] = f[j];
        return Functional(std::move(w));
    };
    lp::LinearProgram prog;
    prog.num_vars = 2 * d;
    Vector objective(2 * d);
    for (std::size_t j = 0; j < d; ++j) {
        objective[d + j] = 1;
        Vector up(2 * d), down(2 * d);
        up[j] = 1;
        up[d + j] = -1;
        down[j] = -1;
        down[d + j] = -1;
        prog.rows.push_back({Functional(std::move(up)), lp::Relation::LessEqual, target[j]});
        prog.rows.push_back({Functional(std::move(down)), lp::Relation::LessEqual, Rational(-target[j])});
    }
    prog.objective = Functional(std::move(objective));
    for (const auto& g : cone.inequalities) prog.rows.push_back({widen(g), lp::Relation::LessEqual, Rational(0)});
    for (const auto& h : cone.equalities) prog.rows.push_back({widen(h), lp::Relation::Equal, Rational(0)});
    const lp::Outcome out = lp::solve(prog);
    if (out.status != lp::Status::Optimal) return std::nullopt;
    Vector u(d);
    for (std::size_t j = 0; j < d; ++j) u[j] = out.point[j];
    if (u.is_zero()) return std::nullopt;
    return u;
}

}  // namespace

RayLength ray_length_oracle(const ConvexSet& set, const Vector& z, const Vector& u, const OracleOptions& opts)
{
    check_ray_query(set, z, u);
    auto in = [&](const Rational& t) { return inside(set, z + t * u); };
    const Rational cap = power_of_two(opts.cap_exponent);

    Rational lo, hi;
    if (in(Rational(1))) {
        lo = 1;
        bool found = false;
        for (Rational t = 2; t <= cap; t *= 2) {
            if (!in(t)) {
                hi = t;
                found = true;
                break;
            }
            lo = t;
        }
        if (!found) return {RayLengthKind::ExceedsCap, Scalar(cap), std::nullopt};
    } else {
        hi = 1;
        bool found = false;
        Rational t = Rational(1, 2);
        for (int k = 0; k < 400; ++k, t /= 2) {
            if (in(t)) {
                lo = t;
                found = true;
                break;
            }
            hi = t;
        }
        if (!found) return {RayLengthKind::Finite, Scalar(0), std::nullopt};
    }
    const Rational tol = from_double(opts.rel_tol);
    while (hi - lo > tol * lo) {
        Rational mid = (lo + hi) / 2;
        if (in(mid)) lo = std::move(mid);
        else hi = std::move(mid);
    }
    return {RayLengthKind::Finite, Scalar::approximate(to_double(Rational((lo + hi) / 2))), std::nullopt};
}

RayLength ray_length(const ConvexSet& set, const Vector& z, const Vector& u, const OracleOptions& opts)
{
    check_ray_query(set, z, u);
    if (const auto* poly = set.as_polyhedron()) return polyhedron_ray_length(*poly, z, u);
    if (const auto* strip = set.as_strip()) return strip_ray_length(*strip, z, u);
    return ray_length_oracle(set, z, u, opts);
}

std::vector<double> Ray::normalized(NormKind kind) const
{
    std::vector<double> d = direction.to_doubles();
    const double n = norm(d, kind);
    for (auto& x : d) x /= n;
    return d;
}

HalfLineEvidence contains_half_line(const ConvexSet& set, const Vector& z, const Vector& u,
                                    const HalfLineOptions& opts)
{
    check_ray_query(set, z, u);
    HalfLineEvidence ev;
    if (opts.oracle_only) {
        ev.method = "oracle";
        ev.length = ray_length_oracle(set, z, u, opts.oracle);
        ev.verdict = ev.length.kind == RayLengthKind::Finite ? HalfLineVerdict::NotContained : HalfLineVerdict::NotProven;
        return ev;
    }
    if (set.as_minkowski()) {
        // A direction of the closure's recession cone keeps every ray from an
        // interior point inside the open set.
        ev.method = "recession-cone";
        if (recession_cone(set).contains(u)) {
            ev.verdict = HalfLineVerdict::Contained;
            ev.length.kind = RayLengthKind::Infinite;
        } else {
            ev.verdict = HalfLineVerdict::NotContained;
            ev.length = ray_length_oracle(set, z, u, opts.oracle);
        }
        return ev;
    }
    ev.method = "closed-form";
    ev.length = ray_length(set, z, u, opts.oracle);
    ev.verdict = ev.length.kind == RayLengthKind::Infinite ? HalfLineVerdict::Contained : HalfLineVerdict::NotContained;
    return ev;
}

bool RecessionCone::contains(const Vector& u) const
{
    require_same_dim(ambient_dim, u.size(), "recession cone query");
    for (const auto& g : inequalities)
        if (g(u).sign() > 0) return false;
    for (const auto& h : equalities)
        if (h(u).sign() != 0) return false;
    return true;
}

RecessionCone recession_cone(const ConvexSet& set)
{
    if (!interior_point(set)) throw Error(ErrorCode::EmptySet, "recession cone of an empty set");
    if (const auto* poly = set.as_polyhedron()) return polyhedron_cone(set, *poly);
    if (const auto* strip = set.as_strip()) return strip_cone(set, *strip);

    const auto& sum = *set.as_minkowski();
    const RecessionCone inner = recession_cone(*sum.inner);
    const std::size_t d = set.dim();
    RecessionCone cone;
    cone.kind = RecessionCone::Kind::Embedded;
    cone.ambient_dim = d;
    for (const auto& g : inner.inequalities) cone.inequalities.push_back(pad(g, d));
    for (const auto& h : inner.equalities) cone.equalities.push_back(pad(h, d));
    for (std::size_t j = sum.inner->dim(); j < d; ++j) cone.equalities.push_back(Functional(Vector::unit(d, j)));
    for (const auto& b : inner.basis) cone.basis.push_back(pad(b, d));
    cone.dimension = inner.dimension;
    if (inner.sample_ray) cone.sample_ray = pad(*inner.sample_ray, d);
    return cone;
}

// ---------------------------------------------------------------------------
// Contradiction certificate

bool ContradictionCertificate::direction_condition() const
{
    const Vector v = anchor + t1 * u0 - a0;
    if (v.is_zero() || t0.sign() <= 0) return false;
    const Rational eps = delta / (2 * t0);
    if (norm != NormKind::L2) {
        const Rational nv = norm_value(v, norm).power();
        return norm_value(v * Rational(1 / nv) - u0, norm).compare(eps) < 0;
    }
    // ||v/|v| - u0||^2 = 2 - 2<v,u0>/|v| for a unit u0.
    if (!norm_is_one(u0, norm)) return false;
    const Rational p = dot(v, u0);
    const Rational rhs = 2 - eps * eps;
    if (rhs.sign() < 0) return true;
    if (p.sign() <= 0) return false;
    if (rhs.sign() == 0) return true;
    return 4 * p * p > rhs * rhs * norm_value(v, norm).power();
}

bool ContradictionCertificate::xi_in_ball() const { return norm_value(xi - z0, norm).compare(delta) < 0; }

bool ContradictionCertificate::combination_holds() const
{
    if (!(weight_xi.sign() > 0 && weight_xi < 1 && weight_ray.sign() > 0 && weight_ray < 1)) return false;
    if (weight_xi + weight_ray != 1) return false;
    return weight_xi * xi + weight_ray * (anchor + t1 * u0) == a0;
}

bool ContradictionCertificate::verify(const ConvexSet& set) const
{
    if (lambda.sign() >= 0 || a0 != z0 + t0 * u0) return false;
    if (!direction_condition() || !xi_in_ball() || !combination_holds()) return false;
    if (!inside(set, z0) || delta > inner_radius_lower(set, z0)) return false;
    return inside(set, xi) && inside(set, a0);
}

ContradictionCertificate translate_ray_certificate(const ConvexSet& set, const Vector& z0, const Vector& u0,
                                                   const Rational& t0, const CertificateOptions& opts)
{
    require_same_dim(set.dim(), z0.size(), "certificate base");
    require_same_dim(set.dim(), u0.size(), "certificate direction");
    if (t0.sign() <= 0) throw Error(ErrorCode::InvalidInput, "t0 must be positive");
    if (u0.is_zero()) throw Error(ErrorCode::ZeroDirection, "premise direction is zero");
    if (!norm_is_one(u0, set.norm())) throw Error(ErrorCode::InvalidInput, "premise direction must have unit norm");

    ContradictionCertificate c;
    c.norm = set.norm();
    c.anchor = opts.anchor.value_or(Vector(set.dim()));
    require_same_dim(set.dim(), c.anchor.size(), "certificate anchor");
    if (!inside(set, c.anchor)) throw Error(ErrorCode::PremiseViolated, "premise ray anchor is outside the set");
    if (contains_half_line(set, c.anchor, u0).verdict != HalfLineVerdict::Contained)
        throw Error(ErrorCode::PremiseViolated, "premise ray is not contained in the set");
    if (!inside(set, z0)) throw Error(ErrorCode::NotInSet, "z0 is outside the set");

    c.z0 = z0;
    c.u0 = u0;
    c.t0 = t0;
    c.a0 = z0 + t0 * u0;
    c.delta = inner_radius_lower(set, z0);
    c.delta_exact = inner_radius(set, z0).is_exact();

    c.t1 = 1;
    bool found = false;
    for (int k = 0; k <= opts.cap_exponent; ++k, c.t1 *= 2) {
        if (c.direction_condition()) {
            found = true;
            break;
        }
    }
    if (!found) throw Error(ErrorCode::SearchCapExceeded, "no t1 up to the cap satisfies the direction bound");

    const Vector v = c.anchor + c.t1 * u0 - c.a0;
    const Scalar nv = norm(v, c.norm);
    c.lambda_exact = nv.is_exact();
    c.lambda = nv.is_exact() ? Rational(-t0 / nv.exact()) : Rational(-t0 / norm_value(v, c.norm).upper());
    c.xi = c.a0 + c.lambda * v;
    c.weight_xi = 1 / (1 - c.lambda);
    c.weight_ray = -c.lambda / (1 - c.lambda);
    if (!c.xi_in_ball()) throw Error(ErrorCode::Internal, "certificate point fell outside the ball");
    return c;
}

// ---------------------------------------------------------------------------
// Decomposition and invariance

std::vector<CoveragePoint> decompose(const ConvexSet& set, const Vector& u0, const std::vector<Vector>& samples)
{
    require_same_dim(set.dim(), u0.size(), "decomposition direction");
    if (u0.is_zero()) throw Error(ErrorCode::ZeroDirection, "decomposition direction is zero");
    if (!recession_cone(set).contains(u0))
        throw Error(ErrorCode::PremiseViolated, "direction is not a recession direction of the set");
    const Rational u_norm = norm_value(u0, set.norm()).upper();

    std::vector<CoveragePoint> out;
    out.reserve(samples.size());
    for (const auto& z : samples) {
        require_same_dim(set.dim(), z.size(), "decomposition sample");
        if (!inside(set, z)) throw Error(ErrorCode::NotInSet, "decomposition sample is outside the set");
        CoveragePoint p;
        p.sample = z;
        p.step = inner_radius_lower(set, z) / (2 * u_norm);
        p.base = z - p.step * u0;
        p.base_inside = inside(set, p.base);
        p.covered = p.base_inside && p.step.sign() > 0 && p.base + p.step * u0 == z &&
                    contains_half_line(set, p.base, u0).verdict == HalfLineVerdict::Contained;
        out.push_back(std::move(p));
    }
    return out;
}

InvarianceReport direction_set_invariance(const ConvexSet& set, const std::vector<Vector>& bases,
                                          const std::vector<Vector>& directions)
{
    for (const auto& b : bases) {
        require_same_dim(set.dim(), b.size(), "invariance base");
        if (!inside(set, b)) throw Error(ErrorCode::NotInSet, "invariance base is outside the set");
    }
    InvarianceReport report;
    report.bases = bases.size();
    report.directions = directions.size();
    for (std::size_t i = 0; i < directions.size(); ++i) {
        std::optional<bool> first;
        for (std::size_t b = 0; b < bases.size(); ++b) {
            const bool in =
                contains_half_line(set, bases[b], directions[i]).verdict == HalfLineVerdict::Contained;
            if (!first) {
                first = in;
                report.membership.push_back(in);
            } else if (*first != in) {
                report.discrepancies.push_back({i, 0, b});
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Limit direction

bool MidpointCertificate::verify(const ConvexSet& set, const Vector& u0) const
{
    if (t.sign() <= 0 || index < std::max(n1, n2)) return false;
    if (b_n != 2 * t * u_n || complement != 2 * t * u0 - b_n) return false;
    if (midpoint != t * u0 || midpoint != b_n * Rational(1, 2) + complement * Rational(1, 2)) return false;
    return inside(set, b_n) && inside(set, complement);
}

LimitDirection limit_direction(const ConvexSet& set, const std::vector<Vector>& sequence, const LimitOptions& opts)
{
    const NormKind kind = set.norm();
    if (sequence.size() < 2) throw Error(ErrorCode::InvalidInput, "sequence needs at least two terms");
    const Vector origin(set.dim());
    if (!inside(set, origin)) throw Error(ErrorCode::InvalidInput, "the origin must lie in the set");
    std::vector<NormValue> norms;
    for (const auto& w : sequence) {
        require_same_dim(set.dim(), w.size(), "sequence term");
        if (!inside(set, w)) throw Error(ErrorCode::NotInSet, "sequence term is outside the set");
        norms.push_back(norm_value(w, kind));
    }
    for (std::size_t i = 1; i < norms.size(); ++i)
        if (norms[i].compare(norms[i - 1]) <= 0) throw Error(ErrorCode::InvalidInput, "sequence norms must increase strictly");
    const Rational growth = kind == NormKind::L2 ? Rational(100) : Rational(10);
    if (norms.back().power() < growth * norms.front().power())
        throw Error(ErrorCode::InvalidInput, "sequence must grow at least tenfold in norm");

    // Directions relative to the first term: a translation does not move the
    // limit points of w_n / ||w_n|| when ||w_n|| diverges.
    std::vector<std::vector<double>> dirs;
    for (std::size_t i = 1; i < sequence.size(); ++i) {
        std::vector<double> v = (sequence[i] - sequence.front()).to_doubles();
        const double n = norm(v, kind);
        if (n == 0.0) continue;
        for (auto& x : v) x /= n;
        dirs.push_back(std::move(v));
    }
    auto distance = [&](const std::vector<double>& a, const std::vector<double>& b) {
        std::vector<double> diff(a.size());
        for (std::size_t j = 0; j < a.size(); ++j) diff[j] = a[j] - b[j];
        return norm(diff, kind);
    };

    std::vector<std::size_t> centers;
    std::vector<std::vector<std::size_t>> members;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        std::size_t c = 0;
        while (c < centers.size() && distance(dirs[centers[c]], dirs[i]) > opts.cluster_epsilon) ++c;
        if (c == centers.size()) {
            centers.push_back(i);
            members.emplace_back();
        }
        members[c].push_back(i);
    }
    std::size_t best = 0;
    for (std::size_t c = 1; c < members.size(); ++c)
        if (members[c].size() > members[best].size()) best = c;
    if (members.empty() || members[best].size() < opts.min_cluster)
        throw Error(ErrorCode::InsufficientSequence,
                    "no cluster of " + std::to_string(opts.min_cluster) + " normalized terms within epsilon");

    std::vector<double> mean(set.dim(), 0.0);
    for (std::size_t i : members[best])
        for (std::size_t j = 0; j < mean.size(); ++j) mean[j] += dirs[i][j];
    {
        const double n = norm(mean, kind);
        for (auto& x : mean) x /= n;
    }

    // Snap to a short rational and accept the first candidate that is an
    // exactly verified ray direction.
    double peak = 0.0;
    for (double x : mean) peak = std::max(peak, std::abs(x));
    std::optional<Vector> snapped;
    Integer denominator = 1;
    for (int k = 0; k <= 9 && !snapped; ++k, denominator *= 10) {
        Vector cand(set.dim());
        for (std::size_t j = 0; j < mean.size(); ++j)
            cand[j] = round_to_denominator(from_double(mean[j] / peak), denominator);
        if (cand.is_zero()) continue;
        std::vector<double> cd = cand.to_doubles();
        const double cn = norm(cd, kind);
        for (auto& x : cd) x /= cn;
        if (distance(cd, mean) > 10 * opts.cluster_epsilon) continue;
        if (contains_half_line(set, origin, cand).verdict == HalfLineVerdict::Contained) snapped = cand;
    }
    if (!snapped) {
        Vector raw = Vector::from_doubles(mean);
        if (contains_half_line(set, origin, raw).verdict == HalfLineVerdict::Contained) snapped = raw;
    }
    if (!snapped) {
        // Lower-dimensional cones and faces: project the mean onto the cone.
        Vector target(set.dim());
        for (std::size_t j = 0; j < mean.size(); ++j)
            target[j] = round_to_denominator(from_double(mean[j] / peak), Integer(1000000000));
        if (auto cand = nearest_in_cone(recession_cone(set), target)) {
            std::vector<double> cd = cand->to_doubles();
            const double cn = norm(cd, kind);
            for (auto& x : cd) x /= cn;
            if (distance(cd, mean) <= 10 * opts.cluster_epsilon &&
                contains_half_line(set, origin, *cand).verdict == HalfLineVerdict::Contained)
                snapped = cand;
        }
    }
    if (!snapped) throw Error(ErrorCode::CertificateSearchFailed, "clustered direction is not a verified ray direction");

    LimitDirection out;
    out.direction = unit_rational(*snapped, kind);
    out.normalized = Ray{origin, out.direction}.normalized(kind);
    out.cluster_size = members[best].size();

    for (const auto& t : opts.t_values) {
        if (t.sign() <= 0) throw Error(ErrorCode::InvalidInput, "certificate parameters t must be positive");
        const Rational two_t = 2 * t;
        std::size_t n1 = 0;
        for (std::size_t i = 0; i < sequence.size() && n1 == 0; ++i)
            if (norms[i].compare(two_t) > 0) n1 = i + 1;
        if (n1 == 0) throw Error(ErrorCode::CertificateSearchFailed, "no sequence term is longer than 2t");

        auto unit_term = [&](std::size_t i) { return sequence[i] * Rational(1 / norms[i].upper()); };
        std::size_t n2 = 0;
        std::optional<MidpointCertificate> cert;
        for (std::size_t i = 0; i < sequence.size() && !cert; ++i) {
            const Vector u_n = unit_term(i);
            const Vector b = two_t * u_n;
            const Vector comp = two_t * out.direction - b;
            const bool comp_in = inside(set, comp);
            if (comp_in && n2 == 0) n2 = i + 1;
            if (i + 1 >= n1 && comp_in && n2 != 0 && inside(set, b)) {
                MidpointCertificate m;
                m.t = t;
                m.index = i + 1;
                m.n1 = n1;
                m.n2 = n2;
                m.u_n = u_n;
                m.b_n = b;
                m.complement = comp;
                m.midpoint = t * out.direction;
                cert = std::move(m);
            }
        }
        if (!cert) throw Error(ErrorCode::CertificateSearchFailed, "no index yields both midpoint halves inside the set");
        out.certificates.push_back(std::move(*cert));
    }
    return out;
}

// ---------------------------------------------------------------------------

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::Bounded: return "bounded";
    case Verdict::UnboundedWithRay: return "unbounded_with_ray";
    case Verdict::UnboundedNoRayFoundAtCap: return "unbounded_no_ray_at_cap";
    }
    return "bounded";
}

RecessionReport analyze(const ConvexSet& set, const AnalyzeOptions& opts)
{
    const auto base = interior_point(set);
    if (!base) throw Error(ErrorCode::EmptySet, "the set is empty");

    RecessionReport report;
    report.cone = recession_cone(set);
    if (report.cone.trivial()) {
        report.verdict = Verdict::Bounded;
        return report;
    }
    const Vector& u = *report.cone.sample_ray;
    HalfLineOptions hopts;
    hopts.oracle_only = opts.oracle_only;
    hopts.oracle = opts.oracle;
    const auto ev = contains_half_line(set, *base, u, hopts);
    if (ev.verdict != HalfLineVerdict::Contained) {
        report.verdict = Verdict::UnboundedNoRayFoundAtCap;
        return report;
    }
    report.verdict = Verdict::UnboundedWithRay;
    report.ray = Ray{*base, u};
    report.coverage = decompose(set, u, {*base});

    const Vector unit = unit_rational(u, set.norm());
    if (norm_is_one(unit, set.norm())) {
        CertificateOptions copts;
        copts.anchor = *base;
        report.certificate = translate_ray_certificate(set, report.coverage.front().base, unit, Rational(1), copts);
    }
    return report;
}

}  // namespace recess
