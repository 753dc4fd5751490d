#include <cstddef>
#include <vector>

#include "helly/errors.hpp"
#include "helly/geometry.hpp"

namespace helly {

namespace {

// Phase-I simplex on exact rationals. Free variables are split x = u - v;
// every row gets a slack, surplus, or artificial so the initial basis is the
// identity. Bland's rule on both the entering and leaving choice rules out
// cycling, so termination is unconditional.
class PhaseOneSimplex {
public:
    PhaseOneSimplex(const std::vector<LinearConstraint>& constraints, int dim)
        : dim_(dim), m_(constraints.size()) {
        // Count columns: 2*dim structural, one slack/surplus per inequality
        // row, one artificial per row that needs it.
        std::vector<int> slack_col(m_, -1), art_col(m_, -1);
        int cols = 2 * dim_;
        std::vector<char> negate(m_, 0);
        for (std::size_t k = 0; k < constraints.size(); ++k) {
            negate[k] = constraints[k].rhs < 0;
            const bool is_eq = constraints[k].relation == Relation::Eq;
            if (!is_eq) slack_col[k] = cols++;
            // A negated <= row becomes >=, whose surplus cannot be basic.
            if (is_eq || negate[k]) art_col[k] = cols++;
        }
        cols_ = cols;

        rows_.assign(m_, std::vector<Rational>(cols_ + 1, Rational(0)));
        basis_.assign(m_, -1);
        for (std::size_t k = 0; k < constraints.size(); ++k) {
            const auto& c = constraints[k];
            const Rational sign = negate[k] ? Rational(-1) : Rational(1);
            auto& row = rows_[k];
            for (int j = 0; j < dim_; ++j) {
                row[j] = sign * c.coefficients[j];
                row[dim_ + j] = -row[j];
            }
            if (slack_col[k] >= 0) row[slack_col[k]] = negate[k] ? Rational(-1) : Rational(1);
            if (art_col[k] >= 0) row[art_col[k]] = 1;
            row[cols_] = sign * c.rhs;
            basis_[k] = art_col[k] >= 0 ? art_col[k] : slack_col[k];
        }

        // Reduced-cost row for min(sum of artificials), canonicalized so basic
        // artificials have reduced cost 0: obj = c - sum(artificial rows).
        obj_.assign(cols_ + 1, Rational(0));
        for (std::size_t k = 0; k < constraints.size(); ++k) {
            if (art_col[k] >= 0) obj_[art_col[k]] = 1;
        }
        for (std::size_t k = 0; k < constraints.size(); ++k) {
            if (art_col[k] < 0) continue;
            for (int j = 0; j <= cols_; ++j) obj_[j] -= rows_[k][j];
        }
    }

    // Runs to optimality; returns true iff the phase-I optimum is zero.
    bool solve() {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < cols_; ++j) {
                if (obj_[j] < 0) { enter = j; break; }
            }
            if (enter < 0) break;
            int leave = -1;
            Rational best_ratio;
            for (std::size_t k = 0; k < m_; ++k) {
                if (rows_[k][enter] <= 0) continue;
                Rational ratio = rows_[k][cols_] / rows_[k][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[k] < basis_[leave])) {
                    leave = static_cast<int>(k);
                    best_ratio = ratio;
                }
            }
            if (leave < 0) {
                // Phase-I objective is bounded below by zero, so this cannot
                // happen on well-formed input.
                throw MalformedInputError("phase-I simplex: unbounded direction");
            }
            pivot(static_cast<std::size_t>(leave), enter);
        }
        // Optimal value of sum of artificials is -obj_[cols_].
        return obj_[cols_] == 0;
    }

    std::vector<Rational> witness() const {
        std::vector<Rational> value(cols_, Rational(0));
        for (std::size_t k = 0; k < m_; ++k) value[basis_[k]] = rows_[k][cols_];
        std::vector<Rational> point(dim_);
        for (int j = 0; j < dim_; ++j) point[j] = value[j] - value[dim_ + j];
        return point;
    }

private:
    void pivot(std::size_t row, int col) {
        const Rational p = rows_[row][col];
        for (int j = 0; j <= cols_; ++j) rows_[row][j] /= p;
        for (std::size_t k = 0; k < m_; ++k) {
            if (k == row || rows_[k][col] == 0) continue;
            const Rational f = rows_[k][col];
            for (int j = 0; j <= cols_; ++j) rows_[k][j] -= f * rows_[row][j];
        }
        if (obj_[col] != 0) {
            const Rational f = obj_[col];
            for (int j = 0; j <= cols_; ++j) obj_[j] -= f * rows_[row][j];
        }
        basis_[row] = col;
    }

    int dim_;
    std::size_t m_;
    int cols_ = 0;
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> obj_;
    std::vector<int> basis_;
};

}  // namespace

FeasibilityResult feasible(const std::vector<LinearConstraint>& constraints, int dim) {
    if (dim <= 0) throw MalformedInputError("dimension must be positive");
    for (const auto& c : constraints) {
        if (static_cast<int>(c.coefficients.size()) != dim) {
            throw MalformedInputError("constraint arity does not match dimension");
        }
    }
    if (constraints.empty()) {
        return {Feasibility::Nonempty, std::vector<Rational>(dim, Rational(0))};
    }
    PhaseOneSimplex simplex(constraints, dim);
    if (!simplex.solve()) return {Feasibility::Empty, std::nullopt};
    auto point = simplex.witness();
    for (const auto& c : constraints) {
        if (!satisfies(c, point)) {
            // Never expected; the witness is read off an optimal basis.
            throw MalformedInputError("phase-I simplex produced an invalid witness");
        }
    }
    return {Feasibility::Nonempty, std::move(point)};
}

}  // namespace helly
