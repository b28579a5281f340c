#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "recess/recession.hpp"

namespace recess::checks {

/// Tally of one property check; every assertion counts once.
struct CheckResult
{
    explicit CheckResult(std::string n = {}) : name(std::move(n)) {}

    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<std::string> failures;  // first few messages only
    double seconds = 0.0;

    void expect(bool ok, const std::string& what);
    bool ok() const { return failed == 0 && passed > 0; }
};

/// Random unbounded polyhedra in R^2..R^5: infinite rays along cone
/// directions at every sample, and full coverage by decompose.
CheckResult half_line_decomposition(std::uint64_t seed, std::size_t sets = 50, std::size_t samples = 100);

/// The hand-checkable instance on {y > -1} plus its two edge cases.
CheckResult contradiction_worked_example();
CheckResult contradiction_random(std::uint64_t seed, std::size_t instances = 200);

/// Half-line membership per direction is the same from every base and
/// matches the exact recession cone.
CheckResult direction_invariance(std::uint64_t seed, std::size_t sets = 50, std::size_t bases = 10,
                                 std::size_t directions = 100);

/// w_n = (n, 1) in {y > -1}: u0 = e_1 and the t = 7 certificate at n = 14.
CheckResult limit_worked_example(const LimitOptions& opts = {});
CheckResult limit_random(std::uint64_t seed, std::size_t sequences = 20, const LimitOptions& opts = {});

/// analyze() finds a ray exactly when the random polyhedron is unbounded.
CheckResult finite_dimensional_rays(std::uint64_t seed, std::size_t sets = 40);

/// Orthonormal strip sets with eps_n = n across the given dimensions.
CheckResult strip_construction(const std::vector<std::size_t>& dims = {2, 4, 8, 16, 32, 64});

/// Witness invariants for perturbed systems, all eps rules and norms.
CheckResult witness_invariants(std::uint64_t seed, std::size_t systems = 12);

/// Convexity and openness of random sets via sampled combinations.
CheckResult convexity_openness(std::uint64_t seed, std::size_t trials = 1000);

/// Stadium half-strip: brute-force membership grid, recession grid, and
/// the ray decomposition along e_1.
CheckResult stadium_lift(std::size_t grid = 100, std::size_t directions = 360, std::size_t n_max = 100);

/// Closed-form against bisection ray lengths.
CheckResult oracle_consistency(std::uint64_t seed, std::size_t triples = 500, const OracleOptions& opts = {});

/// Dense rational witnesses beyond M on unbounded sets; CannotWitness on
/// bounded strip sets.
CheckResult dense_witnesses(std::uint64_t seed, std::size_t sets = 20, const Rational& bound = Rational(1000000));

struct SuiteResult
{
    std::string name;
    std::vector<CheckResult> checks;

    std::size_t passed() const;
    std::size_t failed() const;
    bool ok() const;
};

std::vector<std::string> suite_names();

struct SuiteConfig
{
    std::uint64_t seed = 1;
    double cluster_epsilon = 1e-6;
    int cap_exponent = 40;
};

/// Runs one named suite. Throws InvalidInput for unknown names.
SuiteResult run_suite(std::string_view name, const SuiteConfig& config = {});

}  // namespace recess::checks
