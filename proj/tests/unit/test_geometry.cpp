#include <cmath>
#include <random>

#include "doctest.h"
#include "recess/geometry.hpp"
#include "recess/random_sets.hpp"

using namespace recess;

TEST_CASE("rational parsing and printing")
{
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-6/8") == Rational(-3, 4));
    CHECK(parse_rational("0.125") == Rational(1, 8));
    CHECK(parse_rational("1e3") == Rational(1000));
    CHECK(parse_rational("-2.5e-1") == Rational(-1, 4));
    CHECK(to_fraction_string(Rational(5)) == "5/1");
    CHECK(to_decimal_string(Rational(7)) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("square root bounds bracket the root")
{
    const Rational two(2);
    CHECK(sqrt_lower(two) * sqrt_lower(two) < two);
    CHECK(sqrt_upper(two) * sqrt_upper(two) > two);
    CHECK(sqrt_upper(two) - sqrt_lower(two) < Rational(1, 1000000));
    CHECK(*exact_sqrt(Rational(9, 16)) == Rational(3, 4));
    CHECK_FALSE(exact_sqrt(two).has_value());
}

TEST_CASE("norms of small vectors")
{
    const Vector v{3, 4};
    CHECK(norm(v, NormKind::L2).exact() == 5);
    CHECK(norm(v, NormKind::Linf).exact() == 4);
    CHECK(norm(v, NormKind::L1).exact() == 7);
    for (std::size_t d : {1, 5, 17})
        CHECK(norm(Vector(std::vector<Rational>(d, Rational(1))), NormKind::L1).exact() == Rational(d));
    CHECK_THROWS_AS(norm(Vector(), NormKind::L2), Error);
}

TEST_CASE("dual norms")
{
    CHECK(dual_norm(Functional{1, 0}, NormKind::L2).exact() == 1);
    const Scalar root2 = dual_norm(Functional{1, 1}, NormKind::L2);
    CHECK_FALSE(root2.is_exact());
    CHECK(root2.value() == doctest::Approx(std::sqrt(2.0)));
    CHECK(dual_norm(Functional{2, -3}, NormKind::Linf).exact() == 5);
    CHECK(dual_norm(Functional{2, -3}, NormKind::L1).exact() == 3);
    CHECK(dual(NormKind::L1) == NormKind::Linf);
    CHECK(dual(NormKind::L2) == NormKind::L2);
    CHECK(dual(NormKind::Linf) == NormKind::L1);
}

TEST_CASE("normalize")
{
    const Vector n = normalize(Vector{3, 4}, NormKind::L2);
    CHECK(n == Vector{Rational(3, 5), Rational(4, 5)});
    CHECK(normalize(Vector{5, 0, 0}, NormKind::L1) == Vector::unit(3, 0));
    CHECK(normalize(Vector{5, 0, 0}, NormKind::L2) == Vector::unit(3, 0));
    try {
        normalize(Vector{0, 0}, NormKind::L2);
        FAIL("expected ZeroDirection");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroDirection);
    }
    const Vector irrational = normalize(Vector{1, 1}, NormKind::L2);
    CHECK(norm(irrational.to_doubles(), NormKind::L2) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("triangle inequality and duality bound on random vectors")
{
    random::Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t d = 1 + static_cast<std::size_t>(i % 6);
        const Vector x = random::rational_vector(rng, d, -5, 5, 7);
        const Vector y = random::rational_vector(rng, d, -5, 5, 3);
        const Functional a(random::rational_vector(rng, d, -4, 4, 5));
        for (NormKind k : {NormKind::L1, NormKind::L2, NormKind::Linf}) {
            // ||x + y|| <= ||x|| + ||y||, compared exactly through NormValue.
            const NormValue lhs = norm_value(x + y, k);
            const NormValue nx = norm_value(x, k), ny = norm_value(y, k);
            if (k == NormKind::L2) {
                // (|x|+|y|)^2 = |x|^2 + |y|^2 + 2|x||y|; compare |x+y|^2 - |x|^2 - |y|^2 <= 2|x||y|.
                const Rational gap = lhs.power() - nx.power() - ny.power();
                CHECK((gap <= 0 || gap * gap <= 4 * nx.power() * ny.power()));
            } else {
                CHECK(lhs.power() <= nx.power() + ny.power());
            }
            const Rational pairing = abs(a(x));
            const NormValue dn = dual_norm_value(a, k);
            if (k == NormKind::L2) CHECK(pairing * pairing <= dn.power() * nx.power());
            else CHECK(pairing <= dn.power() * nx.power());
        }
    }
}

TEST_CASE("scalar comparison uses the tolerance only for approximate values")
{
    CHECK(compare(Scalar(Rational(1)), Scalar(Rational(1))) == 0);
    CHECK(compare(Scalar(Rational(1)), Scalar(Rational(1) + Rational(1, 1000000000000LL))) < 0);
    CHECK(compare(Scalar::approximate(1.0), Scalar::approximate(1.0 + 1e-12)) == 0);
    CHECK(compare(Scalar::approximate(1.0), Scalar::approximate(1.1)) < 0);
}

TEST_CASE("leading zeros are decimal")
{
    CHECK(parse_rational("010/08") == Rational(5, 4));
    CHECK(parse_rational("-007") == -7);
    CHECK(parse_rational("0.0") == 0);
    CHECK(parse_rational("00.5e1") == 5);
}
