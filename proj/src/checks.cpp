#include "recess/checks.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>

#include "recess/counterexample.hpp"
#include "recess/random_sets.hpp"

namespace recess::checks {

namespace {

constexpr std::size_t kMaxMessages = 8;

class Timer
{
public:
    explicit Timer(CheckResult& r) : result_(r), start_(std::chrono::steady_clock::now()) {}
    ~Timer()
    {
        result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    CheckResult& result_;
    std::chrono::steady_clock::time_point start_;
};

// Runs body and turns an escaping exception into one failure.
void guarded(CheckResult& r, const std::string& what, const std::function<void()>& body)
{
    try {
        body();
    } catch (const std::exception& e) {
        r.expect(false, what + ": " + e.what());
    }
}

NormKind cycle_norm(std::size_t i)
{
    static constexpr NormKind kinds[] = {NormKind::L2, NormKind::L1, NormKind::Linf};
    return kinds[i % 3];
}

std::string describe(const Vector& v)
{
    std::string s = "(";
    for (std::size_t j = 0; j < v.size(); ++j) s += (j ? "," : "") + to_fraction_string(v[j]);
    return s + ")";
}

ConvexSet half_plane_y_above_minus_one()
{
    return ConvexSet::polyhedron(2, NormKind::L2, {LinearInequality{Functional{0, -1}, Rational(1), true}});
}

ConvexSet stadium()
{
    const ConvexSet half_line = ConvexSet::polyhedron(1, NormKind::L2, {LinearInequality{Functional{-1}, Rational(0), true}});
    return minkowski_lift(half_line, 2);
}

// Unbounded test sets of every representation, cycling with i.
ConvexSet unbounded_set(random::Rng& rng, std::size_t i)
{
    const std::size_t d = 2 + i % 4;
    const NormKind kind = cycle_norm(i);
    switch (i % 4) {
    case 0:
    case 1: return random::unbounded_polyhedron(rng, d, kind);
    case 2: return random::strip(rng, d, d - 1, kind);
    default: {
        const ConvexSet inner = random::unbounded_polyhedron(rng, 2, kind);
        return minkowski_lift(inner, 3, random::rational(rng, 1, 3, 2));
    }
    }
}

}  // namespace

void CheckResult::expect(bool ok, const std::string& what)
{
    if (ok) {
        ++passed;
        return;
    }
    ++failed;
    if (failures.size() < kMaxMessages) failures.push_back(what);
}

CheckResult half_line_decomposition(std::uint64_t seed, std::size_t sets, std::size_t samples)
{
    CheckResult r{"half-line decomposition"};
    Timer timer(r);
    random::Rng rng(seed);
    for (std::size_t i = 0; i < sets; ++i) {
        guarded(r, "set " + std::to_string(i), [&] {
            const std::size_t d = 2 + i % 4;
            const ConvexSet set = random::unbounded_polyhedron(rng, d, cycle_norm(i));
            const RecessionCone cone = recession_cone(set);
            r.expect(!cone.trivial(), "set " + std::to_string(i) + ": cone is trivial");
            if (cone.trivial()) return;
            std::vector<Vector> dirs;
            for (int k = 0; k < 4; ++k) dirs.push_back(*random::cone_direction(rng, cone));
            const Vector origin(d);
            std::vector<Vector> points;
            for (std::size_t s = 0; s < samples; ++s) points.push_back(random::interior_sample(rng, set, origin));
            for (const auto& z : points)
                for (const auto& u : dirs)
                    r.expect(ray_length(set, z, u).kind == RayLengthKind::Infinite,
                             "set " + std::to_string(i) + ": finite ray from " + describe(z) + " along " + describe(u));
            for (const auto& u : dirs) {
                std::size_t covered = 0;
                for (const auto& c : decompose(set, u, points))
                    if (c.covered && c.base_inside && c.step.sign() > 0 && c.base + c.step * u == c.sample) ++covered;
                r.expect(covered == points.size(), "set " + std::to_string(i) + ": decompose covered " +
                                                       std::to_string(covered) + "/" + std::to_string(points.size()));
            }
        });
    }
    return r;
}

CheckResult contradiction_worked_example()
{
    CheckResult r{"contradiction certificate, worked instance"};
    Timer timer(r);
    const ConvexSet set = half_plane_y_above_minus_one();
    const Vector u0{1, 0};
    guarded(r, "worked instance", [&] {
        const auto c = translate_ray_certificate(set, Vector{-2, 0}, u0, Rational(5));
        r.expect(c.a0 == Vector{3, 0}, "a0 = " + describe(c.a0));
        r.expect(c.delta == 1, "delta = " + to_fraction_string(c.delta));
        r.expect(c.t1 == 4, "t1 = " + to_fraction_string(c.t1));
        r.expect(c.lambda == -5, "lambda = " + to_fraction_string(c.lambda));
        r.expect(c.xi == Vector{-2, 0}, "xi = " + describe(c.xi));
        r.expect(c.weight_xi == Rational(1, 6) && c.weight_ray == Rational(5, 6), "weights");
        r.expect(c.weight_xi * c.xi + c.weight_ray * (c.t1 * u0) == c.a0, "convex combination");
        r.expect(c.verify(set), "verification");
    });
    guarded(r, "tiny t0", [&] {
        const Rational t0(1, 1000000000);
        const auto c = translate_ray_certificate(set, Vector{-2, 0}, u0, t0);
        r.expect(c.verify(set) && inside(set, c.a0), "t0 = 1e-9");
    });
    guarded(r, "z0 on the ray", [&] {
        const auto c = translate_ray_certificate(set, Vector{2, 0}, u0, Rational(3));
        r.expect(c.verify(set) && c.a0 == Vector{5, 0}, "z0 = 2 u0");
    });
    return r;
}

CheckResult contradiction_random(std::uint64_t seed, std::size_t instances)
{
    CheckResult r{"contradiction certificate, random instances"};
    Timer timer(r);
    random::Rng rng(seed);
    for (std::size_t i = 0; i < instances; ++i) {
        guarded(r, "instance " + std::to_string(i), [&] {
            const std::size_t d = 2 + i % 4;
            const NormKind kind = cycle_norm(i);
            const Vector u0 = random::unit_rational(rng, d, kind);
            const ConvexSet set = random::unbounded_polyhedron(rng, d, kind, u0);
            const Vector origin(d);
            CertificateOptions opts;
            if (i % 4 == 3) opts.anchor = random::interior_sample(rng, set, origin);
            const Vector z0 = random::interior_sample(rng, set, origin);
            const Rational t0 = random::rational(rng, 0, 10, 100) + Rational(1, 100);
            const auto c = translate_ray_certificate(set, z0, u0, t0, opts);
            const std::string tag = "instance " + std::to_string(i);
            r.expect(c.direction_condition(), tag + ": direction condition");
            r.expect(c.xi_in_ball(), tag + ": xi outside B(z0, delta)");
            r.expect(c.combination_holds(), tag + ": combination");
            r.expect(c.verify(set), tag + ": verification");
        });
    }
    return r;
}

CheckResult direction_invariance(std::uint64_t seed, std::size_t sets, std::size_t bases, std::size_t directions)
{
    CheckResult r{"direction-set invariance"};
    Timer timer(r);
    random::Rng rng(seed);
    for (std::size_t i = 0; i < sets; ++i) {
        guarded(r, "set " + std::to_string(i), [&] {
            const std::size_t d = 2 + i % 4;
            const NormKind kind = cycle_norm(i);
            ConvexSet set = [&] {
                switch (i % 5) {
                case 0: return random::bounded_polyhedron(rng, d, kind);
                case 1: return random::strip(rng, d, d, kind);
                case 2: return random::strip(rng, d, d - 1, kind);
                default: return random::unbounded_polyhedron(rng, d, kind);
                }
            }();
            const RecessionCone cone = recession_cone(set);
            const Vector origin(d);
            std::vector<Vector> base_list{origin};
            while (base_list.size() < bases) base_list.push_back(random::interior_sample(rng, set, origin));
            std::vector<Vector> dirs;
            for (std::size_t k = 0; k < directions; ++k) {
                if (!cone.trivial() && k % 3 == 0) dirs.push_back(*random::cone_direction(rng, cone));
                else dirs.push_back(random::integer_vector(rng, d, -4, 4));
            }
            const InvarianceReport report = direction_set_invariance(set, base_list, dirs);
            for (std::size_t k = 0; k < dirs.size(); ++k) {
                r.expect(report.membership[k] == cone.contains(dirs[k]),
                         "set " + std::to_string(i) + ": membership of " + describe(dirs[k]) + " disagrees with the cone");
            }
            r.expect(report.consistent(), "set " + std::to_string(i) + ": " +
                                              std::to_string(report.discrepancies.size()) + " discrepancies");
        });
    }
    return r;
}

CheckResult limit_worked_example(const LimitOptions& base)
{
    CheckResult r{"limit direction, worked instance"};
    Timer timer(r);
    const ConvexSet set = half_plane_y_above_minus_one();
    guarded(r, "w_n = (n, 1)", [&] {
        std::vector<Vector> seq;
        for (int n = 1; n <= 200; ++n) seq.push_back(Vector{n, 1});
        LimitOptions opts = base;
        opts.t_values.push_back(Rational(7));
        const LimitDirection ld = limit_direction(set, seq, opts);
        r.expect(ld.direction == Vector{1, 0}, "u0 = " + describe(ld.direction));
        r.expect(ld.certificates.size() == 4, "certificate count");
        for (const auto& c : ld.certificates) r.expect(c.verify(set, ld.direction), "t = " + to_fraction_string(c.t));
        const auto& seven = ld.certificates.back();
        r.expect(seven.index == 14, "t = 7 certified at n = " + std::to_string(seven.index));
        r.expect(seven.midpoint == Vector{7, 0}, "midpoint " + describe(seven.midpoint));
    });
    guarded(r, "w_n = n e_1", [&] {
        std::vector<Vector> seq;
        for (int n = 1; n <= 300; ++n) seq.push_back(Vector{n, 0});
        const LimitDirection ld = limit_direction(set, seq, base);
        r.expect(ld.direction == Vector{1, 0}, "u0 = " + describe(ld.direction));
    });
    return r;
}

CheckResult limit_random(std::uint64_t seed, std::size_t sequences, const LimitOptions& opts)
{
    CheckResult r{"limit direction, random sequences"};
    Timer timer(r);
    random::Rng rng(seed);
    for (std::size_t i = 0; i < sequences; ++i) {
        guarded(r, "sequence " + std::to_string(i), [&] {
            const std::size_t d = 2 + i % 4;
            const NormKind kind = cycle_norm(i);
            const ConvexSet set = i % 3 == 2 ? random::strip(rng, d, d - 1, kind)
                                             : random::unbounded_polyhedron(rng, d, kind);
            const RecessionCone cone = recession_cone(set);
            const Vector u = *random::cone_direction(rng, cone);
            const Vector origin(d);
            const Vector c = random::interior_sample(rng, set, origin) * Rational(1, 100);
            // Scale so the last term is far beyond 2t for every certificate t.
            const Rational scale = Rational(1000) / norm_value(u, kind).lower();
            std::vector<Vector> seq;
            for (long n = 1; n <= 80; ++n) {
                const Rational g = i % 2 == 0 ? Rational(n, 80) : Rational(n * n, 6400);
                seq.push_back(c + (g * scale) * u);
            }
            // Keep the tail on which the norms increase strictly.
            std::size_t start = 0;
            for (std::size_t k = 1; k < seq.size(); ++k)
                if (norm_value(seq[k], kind).compare(norm_value(seq[k - 1], kind)) <= 0) start = k;
            seq.erase(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(start));

            const LimitDirection ld = limit_direction(set, seq, opts);
            const std::string tag = "sequence " + std::to_string(i);
            r.expect(contains_half_line(set, origin, ld.direction).verdict == HalfLineVerdict::Contained,
                     tag + ": limit direction is not an exact ray");
            r.expect(ld.certificates.size() == opts.t_values.size(), tag + ": certificate count");
            for (const auto& cert : ld.certificates)
                r.expect(cert.verify(set, ld.direction), tag + ": midpoint certificate at t = " + to_fraction_string(cert.t));
        });
    }
    return r;
}

CheckResult finite_dimensional_rays(std::uint64_t seed, std::size_t sets)
{
    CheckResult r{"finite-dimensional ray criterion"};
    Timer timer(r);
    random::Rng rng(seed);
    for (std::size_t i = 0; i < sets; ++i) {
        guarded(r, "set " + std::to_string(i), [&] {
            const std::size_t d = 2 + i % 4;
            const bool bounded = i % 2 == 0;
            const ConvexSet set = bounded ? random::bounded_polyhedron(rng, d, cycle_norm(i))
                                          : unbounded_set(rng, i / 2);
            const RecessionReport report = analyze(set);
            const std::string tag = "set " + std::to_string(i);
            if (bounded) {
                r.expect(report.verdict == Verdict::Bounded, tag + ": expected bounded");
                return;
            }
            r.expect(report.verdict == Verdict::UnboundedWithRay, tag + ": expected a ray");
            if (!report.ray) return;
            r.expect(contains_half_line(set, report.ray->base, report.ray->direction).verdict ==
                         HalfLineVerdict::Contained,
                     tag + ": reported ray is not contained");
            if (report.certificate) r.expect(report.certificate->verify(set), tag + ": certificate");
            for (const auto& p : report.coverage) r.expect(p.covered && p.base_inside, tag + ": coverage");
        });
    }
    return r;
}

CheckResult strip_construction(const std::vector<std::size_t>& dims)
{
    CheckResult r{"strip construction"};
    Timer timer(r);
    Rational previous_diameter = 0;
    for (std::size_t d : dims) {
        guarded(r, "d = " + std::to_string(d), [&] {
            const std::string tag = "d = " + std::to_string(d);
            const BiorthogonalSystem sys = build_system(d, SystemKind::Orthonormal);
            r.expect(sys.verify(), tag + ": biorthogonality");
            const ConvexSet strip = build_strip(sys, epsilon_sequence(EpsilonRule::Linear, d), NormKind::L2);
            const auto* rows = strip.as_strip();
            const auto witnesses = witness_points(strip);
            for (std::size_t n = 0; n < d; ++n) {
                const Rational r_n = *exact_sqrt(rows->rows[n].radius_sq);
                r.expect(r_n == Rational(n + 1), tag + ": R_n");
                const auto& a = witnesses[n];
                for (std::size_t m = 0; m < d; ++m) {
                    const Rational v = abs(rows->rows[m].functional(a.point));
                    r.expect(v == (m == n ? Rational(r_n / 2) : Rational(0)), tag + ": pairing table");
                }
                const Scalar an = norm(a.point, NormKind::L2);
                r.expect(an.is_exact() && an.exact() == Rational(n + 1, 2), tag + ": ||a_n|| = n/2");
                r.expect(a.verify(strip), tag + ": witness invariants");
            }
            const Vector origin(d);
            const Scalar delta = inner_radius(strip, origin);
            r.expect(delta.is_exact() && delta.exact() == 1, tag + ": inner radius " + delta.decimal());
            const RecessionCone cone = recession_cone(strip);
            r.expect(cone.dimension == 0 && cone.trivial(), tag + ": recession cone dimension");
            for (const Vector& u : {Vector::unit(d, d - 1), Vector(std::vector<Rational>(d, Rational(1)))})
                r.expect(contains_half_line(strip, origin, u).verdict == HalfLineVerdict::NotContained,
                         tag + ": unexpected ray");
            const Rational diameter = 2 * witnesses.back().coefficient.exact() * norm(sys.vectors.back(), NormKind::L2).exact();
            r.expect(diameter == Rational(d), tag + ": diameter bound " + to_fraction_string(diameter));
            r.expect(diameter > previous_diameter, tag + ": diameter bound does not grow");
            previous_diameter = diameter;

            const std::size_t single[] = {d};
            const EscapeRow row = escape_profile(single).rows.front();
            r.expect(row.max_ray && row.max_ray->is_exact() && row.max_ray->exact() == Rational(d) &&
                         row.diam_lb.is_exact() && row.diam_lb.exact() == Rational(d) && row.recc_dim == 0,
                     tag + ": escape row");
        });
    }
    return r;
}

CheckResult witness_invariants(std::uint64_t seed, std::size_t systems)
{
    CheckResult r{"witness invariants"};
    Timer timer(r);
    random::Rng rng(seed);
    const EpsilonRule rules[] = {EpsilonRule::Linear, EpsilonRule::Quadratic, EpsilonRule::Constant};
    for (std::size_t i = 0; i < systems; ++i) {
        guarded(r, "system " + std::to_string(i), [&] {
            const std::size_t d = 1 + i % 6;
            const NormKind kind = cycle_norm(i);
            const BiorthogonalSystem sys = build_system(d, i % 2 ? SystemKind::Perturbed : SystemKind::Orthonormal, rng());
            const std::string tag = "system " + std::to_string(i);
            r.expect(sys.verify(), tag + ": biorthogonality");
            const ConvexSet strip = build_strip(sys, epsilon_sequence(rules[i % 3], d), kind);
            for (const auto& w : witness_points(strip)) r.expect(w.verify(strip), tag + ": witness " + std::to_string(w.index));
            const RecessionCone cone = recession_cone(strip);
            r.expect(cone.trivial() && cone.dimension == 0, tag + ": full-rank strip has a ray");
        });
    }
    return r;
}

CheckResult convexity_openness(std::uint64_t seed, std::size_t trials)
{
    CheckResult r{"convexity and openness"};
    Timer timer(r);
    random::Rng rng(seed);
    std::vector<ConvexSet> sets;
    for (std::size_t i = 0; i < 8; ++i) sets.push_back(unbounded_set(rng, i));
    sets.push_back(random::strip(rng, 4, 4, NormKind::L2));
    sets.push_back(random::bounded_polyhedron(rng, 3, NormKind::L1));
    for (std::size_t t = 0; t < trials; ++t) {
        const ConvexSet& set = sets[t % sets.size()];
        guarded(r, "trial " + std::to_string(t), [&] {
            const Vector origin(set.dim());
            const Vector base = *interior_point(set);
            const Vector x = random::interior_sample(rng, set, base);
            const Vector y = random::interior_sample(rng, set, base);
            const Rational theta(random::integer(rng, 0, 1000), 1000);
            r.expect(inside(set, theta * x + (1 - theta) * y), "convex combination left the set");

            const Rational delta = inner_radius_lower(set, x) * Rational(999999, 1000000);
            const Vector v = random::integer_vector(rng, set.dim(), -9, 9);
            const Vector p = x + (delta / norm_value(v, set.norm()).upper()) * v;
            r.expect(inside(set, p), "perturbation within the inner radius left the set");
            if (set.as_strip()) r.expect(inside(set, -x), "strip symmetry");
        });
    }
    return r;
}

CheckResult stadium_lift(std::size_t grid, std::size_t directions, std::size_t n_max)
{
    CheckResult r{"stadium lift"};
    Timer timer(r);
    const ConvexSet lift = stadium();
    guarded(r, "membership grid", [&] {
        // dist((x, y), {(s, 0) : s >= 0}) by ternary search over s.
        auto brute = [](double x, double y) {
            double lo = 0.0, hi = std::max(0.0, x) + 10.0;
            for (int it = 0; it < 200; ++it) {
                const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
                if (std::hypot(x - m1, y) < std::hypot(x - m2, y)) hi = m2;
                else lo = m1;
            }
            return std::hypot(x - lo, y);
        };
        for (std::size_t i = 0; i < grid; ++i) {
            for (std::size_t j = 0; j < grid; ++j) {
                const Vector p{Rational(-300 + static_cast<long>(i) * 11, 100),
                               Rational(-200 + static_cast<long>(j) * 4, 100) + Rational(1, 1000)};
                const double dist = brute(to_double(p[0]), to_double(p[1]));
                r.expect(inside(lift, p) == (dist < 1.0) || std::abs(dist - 1.0) <= 1e-7,
                         "membership disagrees with brute force at " + describe(p));
            }
        }
        r.expect(inside(lift, Vector{5, Rational(1, 2)}) && !inside(lift, Vector{-2, 0}), "reference points");
    });
    guarded(r, "recession grid", [&] {
        const ConvexSet inner = *lift.as_minkowski()->inner;
        const RecessionCone inner_cone = recession_cone(inner);
        const RecessionCone cone = recession_cone(lift);
        const Vector base{1, 0};
        for (std::size_t k = 0; k < directions; ++k) {
            const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(directions);
            const Vector u = Vector::from_doubles({std::cos(theta), std::sin(theta)});
            const bool expected = u[1] == 0 && inner_cone.contains(Vector{u[0]});
            r.expect(cone.contains(u) == expected, "cone mismatch at " + std::to_string(k) + " degrees");
            const bool exact = contains_half_line(lift, base, u).verdict == HalfLineVerdict::Contained;
            const bool oracle = ray_length_oracle(lift, base, u).kind == RayLengthKind::ExceedsCap;
            r.expect(exact == expected && oracle == expected, "half-line mismatch at " + std::to_string(k) + " degrees");
        }
    });
    guarded(r, "ray decomposition", [&] {
        std::vector<Rational> ns;
        for (std::size_t n = 1; n <= n_max; ++n) ns.emplace_back(n);
        const RayDecompositionReport report = ray_decomposition_check(lift, Vector{1, 0}, ns);
        r.expect(report.bounds_hold, "decomposition bounds");
        for (const auto& s : report.steps) {
            r.expect(s.norm_bound_holds && norm_value(s.w, NormKind::L2).compare(Rational(s.n - 1)) >= 0,
                     "||w_n|| >= n - 1 at n = " + to_fraction_string(s.n));
            r.expect(s.direction_error && *s.direction_error <= 1e-9, "direction error at n = " + to_fraction_string(s.n));
        }
    });
    return r;
}

CheckResult oracle_consistency(std::uint64_t seed, std::size_t triples, const OracleOptions& opts)
{
    CheckResult r{"oracle consistency"};
    Timer timer(r);
    random::Rng rng(seed);
    const double cap = std::ldexp(1.0, opts.cap_exponent);
    for (std::size_t i = 0; i < triples; ++i) {
        guarded(r, "triple " + std::to_string(i), [&] {
            const std::size_t d = 2 + i % 4;
            const NormKind kind = cycle_norm(i);
            ConvexSet set = [&] {
                switch (i % 4) {
                case 0: return random::bounded_polyhedron(rng, d, kind);
                case 1: return random::unbounded_polyhedron(rng, d, kind);
                case 2: return random::strip(rng, d, d, kind);
                default: return random::strip(rng, d, d - 1, kind);
                }
            }();
            const Vector z = random::interior_sample(rng, set, Vector(d));
            const Vector u = random::integer_vector(rng, d, -5, 5);
            const RayLength exact = ray_length(set, z, u);
            const RayLength oracle = ray_length_oracle(set, z, u, opts);
            const std::string tag = "triple " + std::to_string(i);
            const bool exact_beyond = exact.kind == RayLengthKind::Infinite ||
                                      (exact.kind == RayLengthKind::Finite && exact.value.value() >= cap);
            if (exact_beyond || oracle.kind != RayLengthKind::Finite) {
                r.expect(exact_beyond && oracle.kind == RayLengthKind::ExceedsCap, tag + ": cap disagreement");
                return;
            }
            const double a = exact.value.value(), b = oracle.value.value();
            r.expect(std::abs(a - b) <= 1e-9 * a, tag + ": " + std::to_string(a) + " vs " + std::to_string(b));
        });
    }
    return r;
}

CheckResult dense_witnesses(std::uint64_t seed, std::size_t sets, const Rational& bound)
{
    CheckResult r{"dense rational witnesses"};
    Timer timer(r);
    random::Rng rng(seed);
    for (std::size_t i = 0; i < sets; ++i) {
        guarded(r, "set " + std::to_string(i), [&] {
            const ConvexSet set = i == 0 ? stadium() : unbounded_set(rng, i);
            const DenseRestrictionWitness w = dense_restriction_witness(set, bound);
            const NormKind kind = set.norm();
            const std::string tag = "set " + std::to_string(i);
            r.expect(w.verified, tag + ": not verified");
            r.expect(inside(set, w.b), tag + ": b outside");
            r.expect(norm_value(w.b, kind).compare(bound) > 0, tag + ": ||b|| <= M");
            r.expect(norm_value(w.a, kind).compare(Rational(bound + 1)) > 0, tag + ": ||a|| <= M + 1");
            r.expect(w.delta.sign() > 0 && w.delta < Rational(1, 2), tag + ": delta");
            r.expect(norm_value(w.b - w.a, kind).compare(w.delta) < 0, tag + ": b outside B(a, delta)");
        });
    }
    for (std::size_t d : {2, 4, 8}) {
        const ConvexSet strip = build_strip(build_system(d, SystemKind::Orthonormal),
                                            epsilon_sequence(EpsilonRule::Linear, d), NormKind::L2);
        bool refused = false;
        try {
            dense_restriction_witness(strip, Rational(d));
        } catch (const Error& e) {
            refused = e.code() == ErrorCode::CannotWitness;
        }
        r.expect(refused, "bounded S_" + std::to_string(d) + " did not report CannotWitness");
    }
    return r;
}

std::size_t SuiteResult::passed() const
{
    std::size_t n = 0;
    for (const auto& c : checks) n += c.passed;
    return n;
}

std::size_t SuiteResult::failed() const
{
    std::size_t n = 0;
    for (const auto& c : checks) n += c.failed;
    return n;
}

bool SuiteResult::ok() const
{
    for (const auto& c : checks)
        if (!c.ok()) return false;
    return true;
}

std::vector<std::string> suite_names() { return {"prop21", "obs22", "thm23", "prop34", "prop41"}; }

SuiteResult run_suite(std::string_view name, const SuiteConfig& config)
{
    const std::uint64_t seed = config.seed;
    LimitOptions limit;
    limit.cluster_epsilon = config.cluster_epsilon;
    OracleOptions oracle;
    oracle.cap_exponent = config.cap_exponent;
    SuiteResult s{std::string(name), {}};
    if (name == "prop21") {
        s.checks.push_back(half_line_decomposition(seed));
        s.checks.push_back(contradiction_worked_example());
        s.checks.push_back(contradiction_random(seed + 1));
        s.checks.push_back(oracle_consistency(seed + 2, 500, oracle));
    } else if (name == "obs22") {
        s.checks.push_back(direction_invariance(seed));
    } else if (name == "thm23") {
        s.checks.push_back(limit_worked_example(limit));
        s.checks.push_back(limit_random(seed, 20, limit));
        s.checks.push_back(finite_dimensional_rays(seed + 1));
    } else if (name == "prop34") {
        s.checks.push_back(strip_construction());
        s.checks.push_back(witness_invariants(seed));
        s.checks.push_back(convexity_openness(seed + 1));
        s.checks.push_back(dense_witnesses(seed + 2));
    } else if (name == "prop41") {
        s.checks.push_back(stadium_lift());
        s.checks.push_back(convexity_openness(seed, 400));
    } else {
        throw Error(ErrorCode::InvalidInput, "unknown suite '" + std::string(name) + "'");
    }
    return s;
}

}  // namespace recess::checks
