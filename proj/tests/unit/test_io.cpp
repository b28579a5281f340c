#include <functional>
#include <string>

#include "doctest.h"
#include "recess/io.hpp"

using namespace recess;

#ifndef RECESS_FIXTURES
#define RECESS_FIXTURES "tests/fixtures"
#endif

namespace {

std::string fixture(const char* name) { return std::string(RECESS_FIXTURES) + "/" + name; }

std::string parse_error(const std::string& text)
{
    try {
        io::parse_set(text);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Parse);
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("fixtures load")
{
    const ConvexSet strip = io::load_set(fixture("strip_full_rank_d4.json"));
    CHECK(strip.dim() == 4u);
    REQUIRE(strip.as_strip());
    CHECK(strip.as_strip()->rows[3].radius_sq == 16);
    const ConvexSet half = io::load_set(fixture("halfplane.json"));
    CHECK(inside(half, Vector{5, 0}));
}

TEST_CASE("malformed input names line and field")
{
    try {
        io::load_set(fixture("malformed.json"));
        FAIL("expected a parse error");
    } catch (const Error& e) {
        const std::string msg = e.what();
        CHECK(e.code() == ErrorCode::Parse);
        CHECK(msg.find("line 8") != std::string::npos);
        CHECK(msg.find("/set/rows/1/a/1") != std::string::npos);
    }
    CHECK(parse_error("{\"dim\": 2,").find("line") != std::string::npos);
    CHECK(parse_error(R"({"dim": 2, "set": {"type": "cube"}})").find("/set/type") != std::string::npos);
    CHECK(parse_error(R"({"dim": 1, "set": {"type": "polyhedron", "rows": [{"a": [0.5], "b": "1"}]}})")
              .find("/set/rows/0/a/0") != std::string::npos);
    CHECK(parse_error(R"({"dim": 2, "set": {"type": "polyhedron", "rows": [{"a": ["1"], "b": "1"}]}})") != "");
    CHECK(parse_error(R"({"dim": 1, "set": {"type": "strip", "functionals": [["1"]], "eps": ["1"], "radii": ["1"]}})") !=
          "");
    CHECK_THROWS_AS(io::load_set(fixture("missing.json")), Error);
}

TEST_CASE("round trip")
{
    const char* text = R"({"dim": 3, "norm": "linf", "set": {"type": "minkowski", "inner_dim": 2,
        "inner": {"type": "polyhedron", "rows": [{"a": ["-1", "0"], "b": "0"}, {"a": ["0", "1"], "b": "1/2"}]},
        "radius": "3/2", "ball_norm": "l1"}})";
    const ConvexSet set = io::parse_set(text);
    const io::Json once = io::set_to_json(set);
    const ConvexSet again = io::parse_set(once.dump());
    CHECK(io::set_to_json(again) == once);
    for (const auto& p : {Vector{1, 0, 0}, Vector{-2, 0, 0}, Vector{5, 1, Rational(1, 3)}})
        CHECK(inside(set, p) == inside(again, p));

    const ConvexSet radii = io::parse_set(
        R"({"dim": 2, "set": {"type": "strip", "functionals": [["1", "1"]], "radii_sq": ["2"]}})");
    CHECK(io::set_to_json(io::parse_set(io::set_to_json(radii).dump())) == io::set_to_json(radii));
}

TEST_CASE("vectors and rationals")
{
    CHECK(io::parse_vector("1,0,-1/2") == Vector{1, 0, Rational(-1, 2)});
    CHECK_THROWS_AS(io::parse_vector("1,,2"), Error);
    CHECK(io::to_json(Rational(0)) == "0/1");
    CHECK(io::to_json(Rational(-3, 4)) == "-3/4");
}

TEST_CASE("certificate round trip")
{
    const ConvexSet half = io::load_set(fixture("halfplane.json"));
    const auto cert = translate_ray_certificate(half, Vector{-2, 0}, Vector{1, 0}, Rational(5));
    const io::Json j = io::to_json(cert);
    const ContradictionCertificate back = io::certificate_from_json(j);
    CHECK(back.verify(half));
    CHECK(back.a0 == cert.a0);
    CHECK(io::to_json(back) == j);
}

TEST_CASE("report json")
{
    const ConvexSet half = io::load_set(fixture("halfplane.json"));
    const io::Json j = io::to_json(analyze(half), half);
    CHECK(j.at("verdict") == "unbounded_with_ray");
    CHECK(j.at("certificates").at("contradiction_verified") == true);
    const ConvexSet strip = io::load_set(fixture("strip_full_rank_d4.json"));
    const io::Json b = io::to_json(analyze(strip), strip);
    CHECK(b.at("verdict") == "bounded");
    CHECK(b.at("ray").is_null());
}
