#include <doctest.h>

#include "helly/errors.hpp"
#include "helly/fourier_motzkin.hpp"
#include "helly/generators.hpp"
#include "helly/geometry.hpp"

using namespace helly;

namespace {

Rational q(long num, long den = 1) {
    Rational value{Integer(num), Integer(den)};
    value.canonicalize();
    return value;
}

LinearConstraint le(std::vector<long> coeffs, long rhs) {
    LinearConstraint c;
    for (long v : coeffs) c.coefficients.push_back(q(v));
    c.rhs = q(rhs);
    c.relation = Relation::LessEq;
    return c;
}

LinearConstraint eq(std::vector<long> coeffs, long rhs) {
    auto c = le(std::move(coeffs), rhs);
    c.relation = Relation::Eq;
    return c;
}

ConvexSet interval(long lo, long hi) {
    ConvexSet set{1, {}};
    set.constraints.push_back(le({1}, hi));
    set.constraints.push_back(le({-1}, -lo));
    return set;
}

}  // namespace

TEST_CASE("feasible: disjoint rays on the line are empty") {
    auto r = feasible({le({1}, 1), le({-1}, -2)}, 1);
    CHECK(!r.nonempty());
    CHECK(!r.witness.has_value());
}

TEST_CASE("feasible: empty system is the whole plane with witness at origin") {
    auto r = feasible({}, 2);
    REQUIRE(r.nonempty());
    CHECK(*r.witness == std::vector<Rational>{q(0), q(0)});
}

TEST_CASE("feasible: unique solution of a 2x2 system") {
    auto r = feasible({eq({1, 1}, 1), eq({1, -1}, 0)}, 2);
    REQUIRE(r.nonempty());
    CHECK(*r.witness == std::vector<Rational>{q(1, 2), q(1, 2)});
}

TEST_CASE("feasible: dimension mismatch is rejected") {
    CHECK_THROWS_AS(feasible({le({1, 0}, 1)}, 1), MalformedInputError);
    CHECK_THROWS_AS(feasible({}, 0), MalformedInputError);
}

TEST_CASE("intersect_sets: overlapping intervals") {
    auto r = intersect_sets({interval(0, 2), interval(1, 3)});
    REQUIRE(r.nonempty());
    CHECK(satisfies(interval(0, 2), *r.witness));
    CHECK(satisfies(interval(1, 3), *r.witness));
}

TEST_CASE("intersect_sets: the whole line constrains nothing") {
    auto point5 = make_hyperplane({q(1)}, q(5));
    auto r = intersect_sets({make_whole_space(1), point5});
    REQUIRE(r.nonempty());
    CHECK(*r.witness == std::vector<Rational>{q(5)});
}

TEST_CASE("intersect_sets: three generic lines in the plane have no common point") {
    auto lines = gen_general_position_hyperplanes(3, 2, 20240601);
    // Independent oracle: the 3x2 coefficient matrix has rank 2 but the
    // augmented matrix has rank 3, so the equality system is inconsistent.
    std::vector<std::vector<Rational>> a, ab;
    for (const auto& line : lines) {
        a.push_back(line.constraints.front().coefficients);
        auto row = line.constraints.front().coefficients;
        row.push_back(line.constraints.front().rhs);
        ab.push_back(row);
    }
    REQUIRE(rational_rank(a) == 2);
    REQUIRE(rational_rank(ab) == 3);
    CHECK(!intersect_sets(lines).nonempty());
}

TEST_CASE("intersect_sets: empty input is rejected") {
    CHECK_THROWS_AS(intersect_sets({}), MalformedInputError);
}

TEST_CASE("make_whole_space and make_hyperplane") {
    CHECK(make_whole_space(3).constraints.empty());
    auto h = make_hyperplane({q(1), q(0)}, q(4));
    CHECK(h.dim == 2);
    REQUIRE(h.constraints.size() == 1);
    CHECK(h.constraints.front().relation == Relation::Eq);
    CHECK_THROWS_AS(make_hyperplane({q(0), q(0)}, q(1)), MalformedInputError);
}

TEST_CASE("is_general_position on the line") {
    auto point = [](long x) { return make_hyperplane({q(1)}, q(x)); };
    CHECK(is_general_position({point(1), point(2), point(3)}));
    CHECK(!is_general_position({point(1), point(1)}));
}

TEST_CASE("is_general_position: concurrent lines fail") {
    auto x0 = make_hyperplane({q(1), q(0)}, q(0));
    auto y0 = make_hyperplane({q(0), q(1)}, q(0));
    auto diag = make_hyperplane({q(1), q(1)}, q(0));
    CHECK(!is_general_position({x0, y0, diag}));
    CHECK(is_general_position({x0, y0}));
}

TEST_CASE("is_general_position rejects non-hyperplanes") {
    CHECK_THROWS_AS(is_general_position({make_whole_space(2)}), MalformedInputError);
    CHECK_THROWS_AS(is_general_position({interval(0, 1)}), MalformedInputError);
}

TEST_CASE("witness soundness on random systems") {
    for (int d = 1; d <= 3; ++d) {
        for (int trial = 0; trial < 60; ++trial) {
            const auto system = gen_random_system(d, 8, 900 + 100 * d + trial);
            const auto r = feasible(system, d);
            if (r.nonempty()) {
                for (const auto& c : system) CHECK(satisfies(c, *r.witness));
            }
        }
    }
}

TEST_CASE("oracle equivalence: simplex agrees with Fourier-Motzkin on 500 seeded systems") {
    int cases = 0;
    for (int d = 1; d <= 3; ++d) {
        for (int trial = 0; trial < 170 && cases < 510; ++trial, ++cases) {
            const auto system = gen_random_system(d, 10, 7000 + 1000 * d + trial);
            CAPTURE(d);
            CAPTURE(trial);
            CHECK(feasible(system, d).nonempty() == fm_feasible(system, d));
        }
    }
    CHECK(cases >= 500);
}

TEST_CASE("monotonicity: adding a constraint never revives an empty system") {
    for (int d = 1; d <= 2; ++d) {
        for (int trial = 0; trial < 40; ++trial) {
            auto system = gen_random_system(d, 10, 4200 + 100 * d + trial);
            bool empty_seen = false;
            std::vector<LinearConstraint> prefix;
            for (const auto& c : system) {
                prefix.push_back(c);
                const bool nonempty = feasible(prefix, d).nonempty();
                if (empty_seen) CHECK(!nonempty);
                empty_seen = empty_seen || !nonempty;
            }
        }
    }
}

TEST_CASE("Helly equivalence: a family intersects iff every (d+1)-tuple does") {
    for (int d = 1; d <= 2; ++d) {
        for (int trial = 0; trial < 25; ++trial) {
            const int n = d + 2 + trial % 5;  // up to 8 sets
            std::vector<int> sizes(d + 1, 1);
            // One flat random family, via a single wide class.
            auto cls = gen_random_classes(
                d, std::vector<int>(d + 1, n), SetModel::MixedWithHyperplanes,
                5100 + 100 * d + trial);
            const auto& family = cls.classes.front();
            const bool whole = intersect_sets(family).nonempty();

            bool all_tuples = true;
            std::vector<int> idx(d + 1);
            for (int i = 0; i <= d; ++i) idx[i] = i;
            for (;;) {
                std::vector<ConvexSet> tuple;
                for (int i : idx) tuple.push_back(family[i]);
                if (!intersect_sets(tuple).nonempty()) { all_tuples = false; break; }
                int i = d;
                while (i >= 0 && idx[i] == n - (d + 1) + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j <= d; ++j) idx[j] = idx[j - 1] + 1;
            }
            CAPTURE(d);
            CAPTURE(trial);
            CHECK(whole == all_tuples);
        }
    }
}
