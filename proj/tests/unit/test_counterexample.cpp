#include <functional>

#include "doctest.h"
#include "recess/counterexample.hpp"

using namespace recess;

namespace {

ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Internal;
}

ConvexSet strip_d(std::size_t d, SystemKind kind = SystemKind::Orthonormal, NormKind norm = NormKind::L2)
{
    return build_strip(build_system(d, kind, 7), epsilon_sequence(EpsilonRule::Linear, d), norm);
}

ConvexSet stadium()
{
    return minkowski_lift(ConvexSet::polyhedron(1, NormKind::L2, {{Functional{-1}, Rational(0), true}}), 2);
}

}  // namespace

TEST_CASE("biorthogonal systems")
{
    const auto ortho = build_system(3, SystemKind::Orthonormal);
    CHECK(ortho.verify());
    CHECK(ortho.vectors[1] == Vector{0, 1, 0});
    const auto pert = build_system(3, SystemKind::Perturbed, 7);
    CHECK(pert.count() == 3);
    CHECK(pert.verify());
    CHECK(build_system(3, SystemKind::Perturbed, 7).vectors == pert.vectors);
    const auto one = build_system(1, SystemKind::Perturbed, 7);
    CHECK(one.verify());
    CHECK(pert.truncated(2).count() == 2);
    CHECK(pert.truncated(2).verify());
    CHECK(code_of([] { parse_system_kind("skew"); }) == ErrorCode::InvalidInput);
}

TEST_CASE("epsilon rules")
{
    CHECK(epsilon_sequence(EpsilonRule::Linear, 3) == std::vector<Rational>{1, 2, 3});
    CHECK(epsilon_sequence(EpsilonRule::Quadratic, 3) == std::vector<Rational>{1, 4, 9});
    CHECK(epsilon_sequence(EpsilonRule::Constant, 2) == std::vector<Rational>{1, 1});
    CHECK(parse_epsilon_rule("quadratic") == EpsilonRule::Quadratic);
}

TEST_CASE("strip radii")
{
    const ConvexSet s = strip_d(4);
    const StripSet* rows = s.as_strip();
    REQUIRE(rows);
    for (std::size_t n = 0; n < 4; ++n) CHECK(rows->rows[n].radius_sq == Rational((n + 1) * (n + 1)));
    CHECK(rows->vectors.size() == 4);
}

TEST_CASE("witness table for d = 3")
{
    const auto ws = witness_points(strip_d(3));
    REQUIRE(ws.size() == 3);
    CHECK(ws[0].point == Vector{Rational(1, 2), 0, 0});
    CHECK(ws[1].point == Vector{0, 1, 0});
    CHECK(ws[2].point == Vector{0, 0, Rational(3, 2)});
    for (const auto& w : ws) {
        CHECK(w.exact);
        CHECK(w.verify(strip_d(3)));
    }
    CHECK(ws[2].index == 3u);
    CHECK(ws[2].eps_half_sq == Rational(9, 4));
}

TEST_CASE("witnesses for perturbed systems under every norm")
{
    for (NormKind norm : {NormKind::L1, NormKind::L2, NormKind::Linf}) {
        const ConvexSet s = strip_d(5, SystemKind::Perturbed, norm);
        for (const auto& w : witness_points(s)) CHECK(w.verify(s));
    }
}

TEST_CASE("escape profile")
{
    const std::vector<std::size_t> dims{2, 4, 8};
    const EscapeProfile p = escape_profile(dims);
    REQUIRE(p.rows.size() == 3);
    for (const auto& row : p.rows) {
        REQUIRE(row.max_ray);
        CHECK(row.max_ray->exact() == Rational(row.d));
        CHECK(row.diam_lb.exact() == Rational(row.d));
        CHECK(row.recc_dim == 0u);
    }
    CHECK(p.to_csv() == "d,max_ray,diam_lb,recc_dim\n2,2,2,0\n4,4,4,0\n8,8,8,0\n");

    EscapeOptions cut;
    cut.truncate = 2;
    const std::vector<std::size_t> four{4};
    const EscapeProfile t = escape_profile(four, cut);
    CHECK_FALSE(t.rows[0].max_ray);
    CHECK(t.rows[0].recc_dim == 2u);
    CHECK(t.to_csv() == "d,max_ray,diam_lb,recc_dim\n4,inf,2,2\n");

    const std::vector<std::size_t> bad{4, 2};
    CHECK(code_of([&] { escape_profile(bad); }) == ErrorCode::InvalidInput);
}

TEST_CASE("stadium ray decomposition")
{
    std::vector<Rational> grid;
    for (int n = 1; n <= 100; ++n) grid.push_back(Rational(n));
    const auto rep = ray_decomposition_check(stadium(), Vector{1, 0}, grid);
    CHECK(rep.bounds_hold);
    CHECK(rep.errors_nonincreasing);
    CHECK(rep.final_error == doctest::Approx(0.0));
    REQUIRE(rep.steps.size() == 100);
    CHECK(rep.steps[0].w == Vector{1, 0});
    CHECK(rep.steps[0].b_in_ball);

    CHECK(code_of([] { ray_decomposition_check(stadium(), Vector{1, Rational(1, 100)}, {Rational(1)}); }) ==
          ErrorCode::PremiseViolated);
}

TEST_CASE("dense restriction witnesses")
{
    const ConvexSet half = ConvexSet::polyhedron(2, NormKind::L2, {{Functional{0, -1}, Rational(1), true}});
    const auto w = dense_restriction_witness(half, Rational(100));
    CHECK(w.verified);
    CHECK(w.a == Vector{Rational(203, 2), 0});
    CHECK(w.delta == Rational(49, 100));
    CHECK(inside(half, w.b));

    for (std::size_t d : {2u, 4u, 8u})
        CHECK(code_of([&] { dense_restriction_witness(strip_d(d), Rational(10)); }) == ErrorCode::CannotWitness);

    const auto far = dense_restriction_witness(stadium(), Rational(1000000));
    CHECK(far.verified);
    CHECK(inside(stadium(), far.b));
}
