#include "doctest.h"
#include "recess/lp.hpp"
#include "recess/random_sets.hpp"

using namespace recess;
using lp::Relation;

TEST_CASE("optimal, unbounded, infeasible")
{
    lp::LinearProgram p;
    p.num_vars = 1;
    p.objective = Functional{1};
    p.rows = {{Functional{-1}, Relation::LessEqual, Rational(0)}};  // x >= 0
    auto out = lp::solve(p);
    REQUIRE(out.status == lp::Status::Optimal);
    CHECK(out.point == Vector{0});
    CHECK(out.value == 0);
    CHECK(lp::verify(p, out));

    p.rows = {{Functional{1}, Relation::LessEqual, Rational(0)}};  // x <= 0
    out = lp::solve(p);
    REQUIRE(out.status == lp::Status::Unbounded);
    CHECK(out.ray[0] < 0);
    CHECK(lp::verify(p, out));

    p.objective = Functional{0};
    p.rows = {{Functional{1}, Relation::LessEqual, Rational(-1)}, {Functional{-1}, Relation::LessEqual, Rational(-1)}};
    CHECK(lp::solve(p).status == lp::Status::Infeasible);
}

TEST_CASE("equality rows and dimension checks")
{
    lp::LinearProgram p;
    p.num_vars = 2;
    p.objective = Functional{1, 1};
    p.rows = {{Functional{1, -1}, Relation::Equal, Rational(1)},
              {Functional{-1, 0}, Relation::LessEqual, Rational(0)},
              {Functional{0, -1}, Relation::LessEqual, Rational(0)}};
    const auto out = lp::solve(p);
    REQUIRE(out.status == lp::Status::Optimal);
    CHECK(out.point == Vector{1, 0});
    p.rows.push_back({Functional{1, 2, 3}, Relation::LessEqual, Rational(0)});
    CHECK_THROWS_AS(lp::solve(p), Error);
}

TEST_CASE("feasible points of strict systems")
{
    const std::vector<LinearInequality> open{{Functional{1}, Rational(1), true}};
    const auto x = lp::feasible_point(open, 1);
    REQUIRE(x);
    CHECK((*x)[0] < 1);

    const std::vector<LinearInequality> empty{{Functional{1}, Rational(1), false}, {Functional{-1}, Rational(-2), false}};
    CHECK_FALSE(lp::feasible_point(empty, 1));

    const std::vector<LinearInequality> touching{{Functional{1}, Rational(0), true}, {Functional{-1}, Rational(0), true}};
    CHECK_FALSE(lp::feasible_point(touching, 1));

    std::vector<LinearInequality> strip;
    for (int n = 1; n <= 2; ++n) {
        strip.push_back({Functional(Vector::unit(2, n - 1)), Rational(n), true});
        strip.push_back({Functional(-Vector::unit(2, n - 1)), Rational(n), true});
    }
    const auto p = lp::feasible_point(strip, 2);
    REQUIRE(p);
    for (const auto& row : strip) CHECK(row.satisfied_by(*p));
}

TEST_CASE("weak duality spot check")
{
    random::Rng rng(5);
    int solved = 0;
    for (int i = 0; i < 100; ++i) {
        const std::size_t d = 2 + static_cast<std::size_t>(i % 3);
        lp::LinearProgram p;
        p.num_vars = d;
        p.objective = Functional(random::integer_vector(rng, d, -3, 3, false));
        for (std::size_t j = 0; j < d; ++j) {
            p.rows.push_back({Functional(Vector::unit(d, j)), Relation::LessEqual, Rational(random::integer(rng, 1, 5))});
            p.rows.push_back({Functional(-Vector::unit(d, j)), Relation::LessEqual, Rational(random::integer(rng, 1, 5))});
        }
        for (int k = 0; k < 3; ++k)
            p.rows.push_back({Functional(random::integer_vector(rng, d, -4, 4)), Relation::LessEqual,
                              Rational(random::integer(rng, 0, 6))});
        const auto out = lp::solve(p);
        REQUIRE(out.status == lp::Status::Optimal);
        CHECK(lp::verify(p, out));
        ++solved;
        // Every sampled feasible point is no better than the optimum.
        for (int s = 0; s < 20; ++s) {
            const Vector x = random::rational_vector(rng, d, -5, 5, 4);
            bool feasible = true;
            for (const auto& r : p.rows) feasible = feasible && r.a(x) <= r.b;
            if (feasible) CHECK(p.objective(x) >= out.value);
        }
    }
    CHECK(solved == 100);
}
