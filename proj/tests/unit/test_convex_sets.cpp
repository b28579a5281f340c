#include <cmath>

#include "doctest.h"
#include "recess/counterexample.hpp"
#include "recess/random_sets.hpp"

using namespace recess;

namespace {

ConvexSet s4() { return build_strip(build_system(4, SystemKind::Orthonormal), epsilon_sequence(EpsilonRule::Linear, 4), NormKind::L2); }

ConvexSet y_above_minus_one() { return ConvexSet::polyhedron(2, NormKind::L2, {{Functional{0, -1}, Rational(1), true}}); }

ConvexSet stadium()
{
    return minkowski_lift(ConvexSet::polyhedron(1, NormKind::L2, {{Functional{-1}, Rational(0), true}}), 2);
}

}  // namespace

TEST_CASE("strip membership at a witness point")
{
    const ConvexSet s = s4();
    const auto v = contains(s, Vector{0, 1, 0, 0});
    CHECK(v.inside);
    CHECK(inside(s, Vector{Rational(999, 1000), 0, 0, 0}));
    CHECK_FALSE(inside(s, Vector{1, 0, 0, 0}));
    const auto out = contains(s, Vector{0, 0, 5, 0});
    CHECK_FALSE(out.inside);
    CHECK(out.binding_index == 2u);
}

TEST_CASE("polyhedron membership ignores free coordinates")
{
    CHECK(inside(y_above_minus_one(), Vector{1000000, 0}));
    CHECK_FALSE(inside(y_above_minus_one(), Vector{0, -1}));
    CHECK_THROWS_AS(contains(y_above_minus_one(), Vector{1, 2, 3}), Error);
}

TEST_CASE("Minkowski membership matches the distance to the half-line")
{
    const ConvexSet lift = stadium();
    CHECK(inside(lift, Vector{5, Rational(1, 2)}));
    CHECK_FALSE(inside(lift, Vector{-2, 0}));
    CHECK(inside(lift, Vector{Rational(-1, 2), Rational(1, 2)}));   // dist sqrt(1/2)
    CHECK_FALSE(inside(lift, Vector{Rational(-3, 5), Rational(4, 5)}));  // dist exactly 1
    CHECK(inside(lift, Vector{3, 0}));  // the inner point itself
}

TEST_CASE("inner radius")
{
    const Scalar d0 = inner_radius(s4(), Vector(4));
    CHECK(d0.is_exact());
    CHECK(d0.exact() == 1);
    CHECK(inside(s4(), Vector{Rational(999999, 1000000), 0, 0, 0}));
    CHECK_FALSE(inside(s4(), Vector{Rational(1000001, 1000000), 0, 0, 0}));
    CHECK(inner_radius(y_above_minus_one(), Vector{-2, 0}).exact() == 1);
    try {
        inner_radius(y_above_minus_one(), Vector{0, -1});
        FAIL("expected NotInSet");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotInSet);
    }
    const Scalar lifted = inner_radius(stadium(), Vector{5, Rational(1, 2)});
    CHECK(lifted.exact() == Rational(1, 2));
}

TEST_CASE("construction errors")
{
    CHECK_THROWS_AS(ConvexSet::strip(2, NormKind::L2, {StripRow{Functional{1, 0}, Rational(0)}}), Error);
    CHECK_THROWS_AS(ConvexSet::polyhedron(2, NormKind::L2, {{Functional{0, 0}, Rational(1), true}}), Error);
    const ConvexSet empty = ConvexSet::polyhedron(1, NormKind::L2, {{Functional{1}, Rational(0), true}, {Functional{-1}, Rational(0), true}});
    CHECK_THROWS_AS(ConvexSet::minkowski(2, NormKind::L2, empty, Rational(1)), Error);
    CHECK_THROWS_AS(ConvexSet::minkowski(2, NormKind::L2, y_above_minus_one(), Rational(0)), Error);
}

TEST_CASE("convexity, openness and symmetry on random sets")
{
    random::Rng rng(3);
    for (int s = 0; s < 6; ++s) {
        const std::size_t d = 2 + static_cast<std::size_t>(s % 3);
        const ConvexSet set = s % 2 ? random::strip(rng, d, d, NormKind::L2) : random::unbounded_polyhedron(rng, d, NormKind::Linf);
        const Vector origin(d);
        for (int i = 0; i < 170; ++i) {
            const Vector x = random::interior_sample(rng, set, origin);
            const Vector y = random::interior_sample(rng, set, origin);
            const Rational theta(random::integer(rng, 0, 100), 100);
            CHECK(inside(set, theta * x + (1 - theta) * y));
            const Rational r = inner_radius_lower(set, x) * Rational(999999, 1000000);
            for (int k = 0; k < 3; ++k) {
                const Vector v = random::integer_vector(rng, d, -5, 5);
                CHECK(inside(set, x + (r / norm_value(v, set.norm()).upper()) * v));
            }
            if (set.as_strip()) CHECK(inside(set, -x));
        }
    }
}

TEST_CASE("Minkowski sum contains its inner set")
{
    random::Rng rng(8);
    const ConvexSet inner = random::unbounded_polyhedron(rng, 2, NormKind::L2);
    const ConvexSet lift = minkowski_lift(inner, 4);
    for (int i = 0; i < 200; ++i) {
        const Vector w = random::interior_sample(rng, inner, Vector(2));
        CHECK(inside(lift, Vector{w[0], w[1], 0, 0}));
    }
}

TEST_CASE("Minkowski membership agrees with brute force distances")
{
    const ConvexSet lift = stadium();
    for (int i = -30; i <= 30; ++i) {
        for (int j = -15; j <= 15; ++j) {
            const double x = i / 5.0, y = j / 7.0;
            const double dist = x >= 0 ? std::abs(y) : std::hypot(x, y);
            if (std::abs(dist - 1.0) < 1e-7) continue;
            CHECK(inside(lift, Vector{Rational(i, 5), Rational(j, 7)}) == (dist < 1.0));
        }
    }
}
