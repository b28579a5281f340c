// One line per acceptance criterion; exits nonzero when any criterion fails.
#include <cstdio>
#include <string>
#include <vector>

#include "recess/checks.hpp"

using recess::checks::CheckResult;

namespace {

constexpr std::uint64_t kSeed = 20231;

struct Criterion
{
    int id;
    std::string title;
    std::vector<CheckResult> parts;
    double time_limit = 0.0;  // seconds; 0 means unlimited
};

bool report(const Criterion& c)
{
    std::size_t passed = 0, failed = 0;
    double seconds = 0.0;
    bool ok = true;
    for (const auto& p : c.parts) {
        passed += p.passed;
        failed += p.failed;
        seconds += p.seconds;
        ok = ok && p.ok();
    }
    const bool in_time = c.time_limit <= 0.0 || seconds < c.time_limit;
    ok = ok && in_time;
    std::printf("criterion %d: %s  %s  (%zu checks passed, %zu failed, %.2fs%s)\n", c.id, ok ? "PASS" : "FAIL",
                c.title.c_str(), passed, failed, seconds, in_time ? "" : ", over time limit");
    for (const auto& p : c.parts)
        for (const auto& f : p.failures) std::printf("    %s: %s\n", p.name.c_str(), f.c_str());
    return ok;
}

}  // namespace

int main()
{
    namespace ck = recess::checks;
    std::vector<Criterion> criteria;
    criteria.push_back({1, "rays along cone directions and half-line decomposition",
                        {ck::half_line_decomposition(kSeed, 50, 100)}, 10.0});
    criteria.push_back({2, "contradiction certificates",
                        {ck::contradiction_worked_example(), ck::contradiction_random(kSeed + 1, 200)}});
    criteria.push_back({3, "direction-set invariance", {ck::direction_invariance(kSeed + 2, 50, 10, 100)}});
    criteria.push_back({4, "limit directions and midpoint certificates",
                        {ck::limit_worked_example(), ck::limit_random(kSeed + 3, 20)}});
    criteria.push_back({5, "strip-set construction sweep", {ck::strip_construction({2, 4, 8, 16, 32, 64})}, 30.0});
    criteria.push_back({6, "Minkowski lift of the half-line", {ck::stadium_lift(100, 360, 100)}});
    criteria.push_back({7, "closed-form and bisection ray lengths agree", {ck::oracle_consistency(kSeed + 4, 500)}});
    criteria.push_back({8, "dense rational witnesses", {ck::dense_witnesses(kSeed + 5, 20, recess::Rational(1000000))}});

    bool all = true;
    for (const auto& c : criteria) all = report(c) && all;
    return all ? 0 : 1;
}
