#include "doctest.h"
#include "recess/counterexample.hpp"
#include "recess/random_sets.hpp"

using namespace recess;

namespace {

ConvexSet s4() { return build_strip(build_system(4, SystemKind::Orthonormal), epsilon_sequence(EpsilonRule::Linear, 4), NormKind::L2); }

ConvexSet y_above_minus_one() { return ConvexSet::polyhedron(2, NormKind::L2, {{Functional{0, -1}, Rational(1), true}}); }

// {y > 0, y < x}
ConvexSet wedge()
{
    return ConvexSet::polyhedron(2, NormKind::L2, {{Functional{0, -1}, Rational(0), true}, {Functional{-1, 1}, Rational(0), true}});
}

ConvexSet stadium()
{
    return minkowski_lift(ConvexSet::polyhedron(1, NormKind::L2, {{Functional{-1}, Rational(0), true}}), 2);
}

ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("ray lengths in closed form")
{
    const auto a = ray_length(s4(), Vector(4), Vector{1, 0, 0, 0});
    CHECK(a.kind == RayLengthKind::Finite);
    CHECK(a.value.exact() == 1);
    CHECK(a.binding == 0u);
    // (e1 + e2)/sqrt(2) scaled to a rational direction: length sqrt(2) along the unit vector.
    const auto b = ray_length(s4(), Vector(4), Vector{1, 1, 0, 0});
    CHECK(b.value.exact() == 1);
    CHECK(ray_length(wedge(), Vector{1, Rational(1, 2)}, Vector{1, 0}).kind == RayLengthKind::Infinite);
    CHECK(code_of([] { ray_length(y_above_minus_one(), Vector{0, -2}, Vector{1, 0}); }) == ErrorCode::NotInSet);
    CHECK(code_of([] { ray_length(y_above_minus_one(), Vector{0, 0}, Vector{0, 0}); }) == ErrorCode::ZeroDirection);
}

TEST_CASE("ties report the lowest binding index")
{
    const ConvexSet box = ConvexSet::polyhedron(2, NormKind::L2, {{Functional{0, 1}, Rational(1), true}, {Functional{1, 0}, Rational(1), true}});
    CHECK(ray_length(box, Vector(2), Vector{1, 1}).binding == 0u);
}

TEST_CASE("oracle ray length agrees with the closed form")
{
    const auto exact = ray_length(s4(), Vector(4), Vector{1, 1, 0, 0});
    const auto oracle = ray_length_oracle(s4(), Vector(4), Vector{1, 1, 0, 0});
    REQUIRE(oracle.kind == RayLengthKind::Finite);
    CHECK(oracle.value.value() == doctest::Approx(exact.value.value()).epsilon(1e-9));
    CHECK(ray_length_oracle(y_above_minus_one(), Vector(2), Vector{1, 0}).kind == RayLengthKind::ExceedsCap);
    OracleOptions small;
    small.cap_exponent = 3;
    CHECK(ray_length_oracle(s4(), Vector(4), Vector{1, 0, 0, 0}, small).kind == RayLengthKind::Finite);
}

TEST_CASE("half-line containment")
{
    CHECK(contains_half_line(y_above_minus_one(), Vector(2), Vector{1, 0}).verdict == HalfLineVerdict::Contained);
    random::Rng rng(2);
    for (int i = 0; i < 50; ++i) {
        const Vector u = random::integer_vector(rng, 4, -3, 3);
        CHECK(contains_half_line(s4(), Vector(4), u).verdict == HalfLineVerdict::NotContained);
    }
    const ConvexSet lift = stadium();
    CHECK(contains_half_line(lift, Vector{1, 0}, Vector{1, 0}).verdict == HalfLineVerdict::Contained);
    HalfLineOptions oracle;
    oracle.oracle_only = true;
    const auto ev = contains_half_line(lift, Vector{1, 0}, Vector{1, 0}, oracle);
    CHECK(ev.verdict == HalfLineVerdict::NotProven);
    CHECK(ev.length.kind == RayLengthKind::ExceedsCap);
}

TEST_CASE("recession cones")
{
    const RecessionCone w = recession_cone(wedge());
    REQUIRE_FALSE(w.trivial());
    CHECK(*w.sample_ray == Vector{1, 0});
    CHECK(w.dimension == 2);
    CHECK(w.contains(Vector{2, 1}));
    CHECK_FALSE(w.contains(Vector{1, 2}));
    CHECK_FALSE(w.contains(Vector{0, -1}));

    std::vector<Functional> fs{Functional(Vector::unit(5, 0)), Functional(Vector::unit(5, 1)), Functional(Vector::unit(5, 2))};
    const ConvexSet partial = ConvexSet::strip_from_epsilon(5, NormKind::L2, fs, {1, 2, 3});
    const RecessionCone k = recession_cone(partial);
    CHECK(k.dimension == 2);
    CHECK(k.contains(Vector::unit(5, 3)));
    CHECK(k.contains(Vector::unit(5, 4)));
    CHECK_FALSE(k.contains(Vector::unit(5, 0)));
    for (const auto& b : k.basis) CHECK(ray_length(partial, Vector(5), b).kind == RayLengthKind::Infinite);

    CHECK(recession_cone(s4()).trivial());
    CHECK(recession_cone(s4()).dimension == 0);

    const RecessionCone lifted = recession_cone(stadium());
    CHECK(lifted.contains(Vector{1, 0}));
    CHECK_FALSE(lifted.contains(Vector{1, Rational(1, 1000)}));
    CHECK_FALSE(lifted.contains(Vector{-1, 0}));

    const ConvexSet empty = ConvexSet::polyhedron(1, NormKind::L2, {{Functional{1}, Rational(0), true}, {Functional{-1}, Rational(0), true}});
    CHECK(code_of([&] { recession_cone(empty); }) == ErrorCode::EmptySet);
}

TEST_CASE("contradiction certificate, worked instance")
{
    const auto c = translate_ray_certificate(y_above_minus_one(), Vector{-2, 0}, Vector{1, 0}, Rational(5));
    CHECK(c.a0 == Vector{3, 0});
    CHECK(c.delta == 1);
    CHECK(c.t1 == 4);
    CHECK(c.lambda == -5);
    CHECK(c.xi == Vector{-2, 0});
    CHECK(c.weight_xi == Rational(1, 6));
    CHECK(c.weight_ray == Rational(5, 6));
    CHECK(c.verify(y_above_minus_one()));
}

TEST_CASE("contradiction certificate errors and edges")
{
    CHECK(code_of([] { translate_ray_certificate(y_above_minus_one(), Vector{0, 0}, Vector{0, -1}, Rational(1)); }) ==
          ErrorCode::PremiseViolated);
    CHECK(code_of([] { translate_ray_certificate(y_above_minus_one(), Vector{0, -3}, Vector{1, 0}, Rational(1)); }) ==
          ErrorCode::NotInSet);
    const auto tiny = translate_ray_certificate(y_above_minus_one(), Vector{-2, 0}, Vector{1, 0}, Rational(1, 1000000000));
    CHECK(tiny.verify(y_above_minus_one()));
    const auto on_ray = translate_ray_certificate(y_above_minus_one(), Vector{2, 0}, Vector{1, 0}, Rational(7));
    CHECK(on_ray.a0 == Vector{9, 0});
    CHECK(on_ray.verify(y_above_minus_one()));
    // A tampered certificate fails verification.
    auto bad = translate_ray_certificate(y_above_minus_one(), Vector{-2, 0}, Vector{1, 0}, Rational(5));
    bad.xi = Vector{-2, 5};
    CHECK_FALSE(bad.verify(y_above_minus_one()));
}

TEST_CASE("decompose")
{
    const auto pts = decompose(y_above_minus_one(), Vector{1, 0}, {Vector{0, 0}});
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].base == Vector{Rational(-1, 2), 0});
    CHECK(pts[0].step == Rational(1, 2));
    CHECK(pts[0].covered);

    std::vector<Functional> fs;
    for (std::size_t j = 0; j < 4; ++j) fs.emplace_back(Vector::unit(5, j));
    const ConvexSet partial = ConvexSet::strip_from_epsilon(5, NormKind::L2, fs, {1, 2, 3, 4});
    const auto k = decompose(partial, Vector::unit(5, 4), {Vector(5)});
    CHECK(k[0].base_inside);
    CHECK(k[0].base == Vector{0, 0, 0, 0, Rational(-1, 2)});
    CHECK(code_of([] { decompose(y_above_minus_one(), Vector{0, -1}, {Vector{0, 0}}); }) == ErrorCode::PremiseViolated);
}

TEST_CASE("direction-set invariance")
{
    std::vector<Vector> dirs;
    for (int k = 0; k < 360; ++k) {
        const double t = k * 3.141592653589793 / 180.0;
        dirs.push_back(Vector::from_doubles({std::cos(t), std::sin(t)}));
    }
    const auto report = direction_set_invariance(wedge(), {Vector{1, Rational(1, 2)}, Vector{10, 5}}, dirs);
    CHECK(report.consistent());
    CHECK(report.membership[0]);
    CHECK_FALSE(report.membership[90]);
    const auto strip = direction_set_invariance(s4(), {Vector(4), Vector{Rational(1, 2), 0, 1, 0}}, {Vector{1, 0, 0, 0}, Vector{0, 1, 1, 1}});
    for (bool m : strip.membership) CHECK_FALSE(m);
    CHECK(direction_set_invariance(wedge(), {Vector{1, Rational(1, 2)}, Vector{1, Rational(1, 2)}}, dirs).consistent());
    CHECK(code_of([&] { direction_set_invariance(wedge(), {Vector{0, 1}}, dirs); }) == ErrorCode::NotInSet);
}

TEST_CASE("limit direction")
{
    std::vector<Vector> seq;
    for (int n = 1; n <= 200; ++n) seq.push_back(Vector{n, 1});
    LimitOptions opts;
    opts.t_values = {Rational(7)};
    const LimitDirection ld = limit_direction(y_above_minus_one(), seq, opts);
    CHECK(ld.direction == Vector{1, 0});
    REQUIRE(ld.certificates.size() == 1);
    const auto& c = ld.certificates[0];
    CHECK(c.index == 14);
    CHECK(c.n1 == 14);
    CHECK(c.midpoint == Vector{7, 0});
    CHECK(c.verify(y_above_minus_one(), ld.direction));
}

TEST_CASE("wandering witness points give no limit direction")
{
    // Normalized a_n = (n/2) e_n are the coordinate vectors: no cluster.
    const std::size_t d = 40;
    const ConvexSet s = build_strip(build_system(d, SystemKind::Orthonormal), epsilon_sequence(EpsilonRule::Linear, d), NormKind::L2);
    std::vector<Vector> seq;
    for (const auto& w : witness_points(s)) seq.push_back(w.point);
    CHECK(code_of([&] { limit_direction(s, seq); }) == ErrorCode::InsufficientSequence);
}

TEST_CASE("analyze")
{
    const RecessionReport b = analyze(s4());
    CHECK(b.verdict == Verdict::Bounded);
    CHECK_FALSE(b.ray);
    const RecessionReport u = analyze(wedge());
    CHECK(u.verdict == Verdict::UnboundedWithRay);
    REQUIRE(u.ray);
    CHECK(contains_half_line(wedge(), u.ray->base, u.ray->direction).verdict == HalfLineVerdict::Contained);
    AnalyzeOptions oracle;
    oracle.oracle_only = true;
    CHECK(analyze(stadium(), oracle).verdict == Verdict::UnboundedNoRayFoundAtCap);
    CHECK(analyze(stadium()).verdict == Verdict::UnboundedWithRay);
}
