#include "helly/fourier_motzkin.hpp"

#include <set>

#include "helly/errors.hpp"

namespace helly {

namespace {

struct Row {
    std::vector<Rational> a;
    Rational b;
};

// Positive scaling to an integer vector with content 1; keeps the constraint
// set small enough to dedupe across elimination rounds.
void normalize(Row& row) {
    Integer lcm(1);
    for (const auto& c : row.a) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), row.b.get_den().get_mpz_t());
    Integer gcd(0);
    auto scale = [&](const Rational& v) { return Integer(v.get_num() * (lcm / v.get_den())); };
    std::vector<Integer> ints;
    for (const auto& c : row.a) ints.push_back(scale(c));
    Integer bi = scale(row.b);
    for (const auto& v : ints) mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), v.get_mpz_t());
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), bi.get_mpz_t());
    if (gcd == 0) gcd = 1;
    for (std::size_t j = 0; j < row.a.size(); ++j) row.a[j] = Rational(ints[j] / gcd);
    row.b = Rational(bi / gcd);
}

}  // namespace

bool fm_feasible(const std::vector<LinearConstraint>& constraints, int dim) {
    if (dim <= 0) throw MalformedInputError("dimension must be positive");
    std::vector<Row> rows;
    for (const auto& c : constraints) {
        if (static_cast<int>(c.coefficients.size()) != dim) {
            throw MalformedInputError("constraint arity does not match dimension");
        }
        rows.push_back({c.coefficients, c.rhs});
        if (c.relation == Relation::Eq) {
            Row neg{c.coefficients, -c.rhs};
            for (auto& v : neg.a) v = -v;
            rows.push_back(std::move(neg));
        }
    }

    for (int var = 0; var < dim; ++var) {
        std::vector<Row> pos, neg, next;
        for (auto& row : rows) {
            if (row.a[var] > 0) pos.push_back(std::move(row));
            else if (row.a[var] < 0) neg.push_back(std::move(row));
            else next.push_back(std::move(row));
        }
        std::set<std::pair<std::vector<Rational>, Rational>> seen;
        for (auto& row : next) {
            normalize(row);
            seen.insert({row.a, row.b});
        }
        next.clear();
        for (const auto& p : pos) {
            for (const auto& q : neg) {
                // p.a[var] > 0 > q.a[var]; the combination (-q.a[var])*p +
                // (p.a[var])*q has nonnegative multipliers and kills var.
                Row combo;
                combo.a.resize(dim);
                const Rational mp = -q.a[var], mq = p.a[var];
                for (int j = 0; j < dim; ++j) combo.a[j] = mp * p.a[j] + mq * q.a[j];
                combo.b = mp * p.b + mq * q.b;
                normalize(combo);
                seen.insert({combo.a, combo.b});
            }
        }
        rows.clear();
        for (auto& [a, b] : seen) rows.push_back({a, b});
    }

    for (const auto& row : rows) {
        if (row.b < 0) return false;  // all coefficients are zero by now
    }
    return true;
}

}  // namespace helly
