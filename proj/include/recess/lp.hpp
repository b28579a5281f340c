#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "recess/geometry.hpp"

namespace recess {

/// <a, x> < b (strict) or <a, x> <= b.
struct LinearInequality
{
    Functional normal;
    Rational offset;
    bool strict = true;

    Rational slack(const Vector& x) const { return offset - normal(x); }
    bool satisfied_by(const Vector& x) const;
};

namespace lp {

enum class Relation { LessEqual, Equal };

struct Constraint
{
    Functional a;
    Relation relation = Relation::LessEqual;
    Rational b;
};

/// minimize <c, x> over free variables x in R^d subject to the rows.
struct LinearProgram
{
    std::size_t num_vars = 0;
    Functional objective;
    std::vector<Constraint> rows;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Outcome
{
    Status status = Status::Infeasible;
    Vector point;   // Optimal: a minimizer
    Rational value; // Optimal: objective value
    Vector ray;     // Unbounded: A u <= 0 (= 0 on equality rows), <c, u> < 0
};

/**
 * Exact two-phase primal simplex on a dense tableau with Bland's rule.
 * Free variables are split into positive and negative parts internally.
 */
Outcome solve(const LinearProgram& program);

/// Re-checks an outcome against the program with exact arithmetic.
bool verify(const LinearProgram& program, const Outcome& outcome);

/**
 * Some point satisfying every row, strict rows with positive slack.
 * Strict rows are handled by maximizing a common slack s <= 1 and requiring
 * the optimum to be positive.
 */
std::optional<Vector> feasible_point(std::span<const LinearInequality> rows, std::size_t dim);

}  // namespace lp
}  // namespace recess
