#include "recess/lp.hpp"

#include <limits>

namespace recess {

bool LinearInequality::satisfied_by(const Vector& x) const
{
    const int s = slack(x).sign();
    return strict ? s > 0 : s >= 0;
}

namespace lp {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau over z >= 0 with rows T z = rhs. The objective row holds
// reduced costs; its last entry is minus the current objective value.
class Tableau
{
public:
    Tableau(std::size_t rows, std::size_t cols)
        : cols_(cols), cells_(rows, std::vector<Rational>(cols + 1, Rational(0))), objective_(cols + 1, Rational(0)),
          basis_(rows, kNone)
    {}

    Rational& at(std::size_t r, std::size_t c) { return cells_[r][c]; }
    Rational& rhs(std::size_t r) { return cells_[r][cols_]; }
    std::size_t rows() const { return cells_.size(); }
    std::size_t cols() const { return cols_; }
    std::vector<std::size_t>& basis() { return basis_; }

    void set_costs(const std::vector<Rational>& cost)
    {
        for (std::size_t j = 0; j <= cols_; ++j) objective_[j] = j < cols_ ? cost[j] : Rational(0);
        for (std::size_t i = 0; i < rows(); ++i) {
            const Rational& cb = cost[basis_[i]];
            if (cb.sign() == 0) continue;
            for (std::size_t j = 0; j <= cols_; ++j) objective_[j] -= cb * cells_[i][j];
        }
    }

    Rational objective_value() const { return -objective_[cols_]; }

    void pivot(std::size_t r, std::size_t c)
    {
        auto& prow = cells_[r];
        const Rational inv = 1 / prow[c];
        for (auto& v : prow) v *= inv;
        for (std::size_t i = 0; i < rows(); ++i) {
            if (i == r || cells_[i][c].sign() == 0) continue;
            const Rational f = cells_[i][c];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (prow[j].sign() != 0) cells_[i][j] -= f * prow[j];
        }
        if (objective_[c].sign() != 0) {
            const Rational f = objective_[c];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (prow[j].sign() != 0) objective_[j] -= f * prow[j];
        }
        basis_[r] = c;
    }

    // Bland's rule. Returns kNone at optimality, otherwise the entering
    // column of an unbounded edge.
    std::size_t optimize(std::size_t allowed_cols)
    {
        for (;;) {
            std::size_t enter = kNone;
            for (std::size_t j = 0; j < allowed_cols; ++j) {
                if (objective_[j].sign() < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == kNone) return kNone;

            std::size_t leave = kNone;
            Rational best_ratio;
            for (std::size_t i = 0; i < rows(); ++i) {
                if (cells_[i][enter].sign() <= 0) continue;
                Rational ratio = cells_[i][cols_] / cells_[i][enter];
                if (leave == kNone || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = std::move(ratio);
                }
            }
            if (leave == kNone) return enter;
            pivot(leave, enter);
        }
    }

private:
    std::size_t cols_;
    std::vector<std::vector<Rational>> cells_;
    std::vector<Rational> objective_;
    std::vector<std::size_t> basis_;
};

}  // namespace

Outcome solve(const LinearProgram& program)
{
    const std::size_t d = program.num_vars;
    if (d == 0) throw Error(ErrorCode::InvalidInput, "linear program needs at least one variable");
    require_same_dim(d, program.objective.size(), "objective");
    for (const auto& row : program.rows) require_same_dim(d, row.a.size(), "constraint row");

    const std::size_t m = program.rows.size();
    std::size_t slack_count = 0;
    for (const auto& row : program.rows)
        if (row.relation == Relation::LessEqual) ++slack_count;

    const std::size_t structural = 2 * d + slack_count;
    const std::size_t cols = structural + m;
    Tableau t(m, cols);

    std::size_t next_slack = 2 * d;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& row = program.rows[i];
        const bool flip = row.b.sign() < 0;
        const Rational s = flip ? Rational(-1) : Rational(1);
        for (std::size_t j = 0; j < d; ++j) {
            if (row.a[j].sign() == 0) continue;
            t.at(i, 2 * j) = s * row.a[j];
            t.at(i, 2 * j + 1) = -s * row.a[j];
        }
        if (row.relation == Relation::LessEqual) t.at(i, next_slack++) = s;
        t.rhs(i) = s * row.b;
        t.at(i, structural + i) = 1;
        t.basis()[i] = structural + i;
    }

    // Phase one: minimize the sum of artificials.
    std::vector<Rational> phase1(cols, Rational(0));
    for (std::size_t i = 0; i < m; ++i) phase1[structural + i] = 1;
    t.set_costs(phase1);
    t.optimize(cols);

    Outcome out;
    if (t.objective_value().sign() > 0) {
        out.status = Status::Infeasible;
        return out;
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis()[i] < structural) continue;
        for (std::size_t j = 0; j < structural; ++j) {
            if (t.at(i, j).sign() != 0) {
                t.pivot(i, j);
                break;
            }
        }
        // A row left with an artificial basic is redundant and stays at zero.
    }

    std::vector<Rational> phase2(cols, Rational(0));
    for (std::size_t j = 0; j < d; ++j) {
        phase2[2 * j] = program.objective[j];
        phase2[2 * j + 1] = -program.objective[j];
    }
    t.set_costs(phase2);
    const std::size_t enter = t.optimize(structural);

    auto to_original = [&](const std::vector<Rational>& z) {
        Vector x(d);
        for (std::size_t j = 0; j < d; ++j) x[j] = z[2 * j] - z[2 * j + 1];
        return x;
    };

    if (enter != kNone) {
        std::vector<Rational> dz(cols, Rational(0));
        dz[enter] = 1;
        for (std::size_t i = 0; i < m; ++i) dz[t.basis()[i]] = -t.at(i, enter);
        out.status = Status::Unbounded;
        out.ray = to_original(dz);
        return out;
    }

    std::vector<Rational> z(cols, Rational(0));
    for (std::size_t i = 0; i < m; ++i) z[t.basis()[i]] = t.rhs(i);
    out.status = Status::Optimal;
    out.point = to_original(z);
    out.value = program.objective(out.point);
    return out;
}

bool verify(const LinearProgram& program, const Outcome& outcome)
{
    switch (outcome.status) {
    case Status::Optimal:
        for (const auto& row : program.rows) {
            const Rational lhs = row.a(outcome.point);
            if (row.relation == Relation::Equal ? lhs != row.b : lhs > row.b) return false;
        }
        return program.objective(outcome.point) == outcome.value;
    case Status::Unbounded:
        for (const auto& row : program.rows) {
            const Rational lhs = row.a(outcome.ray);
            if (row.relation == Relation::Equal ? lhs.sign() != 0 : lhs.sign() > 0) return false;
        }
        return program.objective(outcome.ray).sign() < 0;
    case Status::Infeasible: return true;
    }
    return false;
}

std::optional<Vector> feasible_point(std::span<const LinearInequality> rows, std::size_t dim)
{
    if (dim == 0) throw Error(ErrorCode::InvalidInput, "feasibility problem needs dimension >= 1");
    bool any_strict = false;
    for (const auto& row : rows) {
        require_same_dim(dim, row.normal.size(), "inequality row");
        any_strict = any_strict || row.strict;
    }

    // Variables (x, s); s is the common slack of strict rows.
    const std::size_t n = dim + 1;
    LinearProgram program;
    program.num_vars = n;
    Vector c(n);
    if (any_strict) c[dim] = -1;
    program.objective = Functional(c);
    for (const auto& row : rows) {
        Vector a(n);
        for (std::size_t j = 0; j < dim; ++j) a[j] = row.normal[j];
        if (row.strict) a[dim] = 1;
        program.rows.push_back({Functional(a), Relation::LessEqual, row.offset});
    }
    program.rows.push_back({Functional(Vector::unit(n, dim)), Relation::LessEqual, Rational(1)});

    const Outcome out = solve(program);
    if (out.status != Status::Optimal) return std::nullopt;
    if (any_strict && out.point[dim].sign() <= 0) return std::nullopt;
    return Vector(std::vector<Rational>(out.point.begin(), out.point.begin() + static_cast<std::ptrdiff_t>(dim)));
}

}  // namespace lp
}  // namespace recess
