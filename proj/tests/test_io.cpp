#include <doctest.h>

#include "helly/errors.hpp"
#include "helly/generators.hpp"
#include "helly/io.hpp"

using namespace helly;

namespace {

Rational q(long num, long den = 1) {
    Rational value{Integer(num), Integer(den)};
    value.canonicalize();
    return value;
}

bool same_instance(const Instance& a, const Instance& b) {
    return serialize_instance(a) == serialize_instance(b);
}

}  // namespace

TEST_CASE("instance parsing") {
    const std::string text =
        "dim 2\n"
        "set a\n"
        "1 0 <= 3\n"
        "1/2 -2/3 = -5/7\n"
        "set b\n";
    auto instance = parse_instance_string(text);
    CHECK(instance.dim == 2);
    REQUIRE(instance.sets.size() == 2);
    CHECK(instance.set_ids == std::vector<std::string>{"a", "b"});
    CHECK(instance.sets[0].constraints.size() == 2);
    CHECK(instance.sets[0].constraints[1].coefficients[1] == q(-2, 3));
    CHECK(instance.sets[0].constraints[1].relation == Relation::Eq);
    CHECK(instance.sets[1].is_whole_space());
    CHECK(!instance.is_colorful());
}

TEST_CASE("round trip: parse then serialize then parse is the identity") {
    const auto check_round_trip = [](const Instance& instance) {
        const auto text = serialize_instance(instance);
        const auto reparsed = parse_instance_string(text);
        CHECK(serialize_instance(reparsed) == text);
        CHECK(same_instance(instance, reparsed));
    };
    check_round_trip(instance_from_family(
        1, gen_example_monochromatic({1, 6, q(1, 2), 31})));
    check_round_trip(instance_from_classes(gen_construction_colorful({2, 5, q(3, 5), 17})));
    check_round_trip(instance_from_classes(
        gen_random_classes(2, {3, 2, 4}, SetModel::MixedWithHyperplanes, 77)));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_instance_string(""), MalformedInputError);
    CHECK_THROWS_AS(parse_instance_string("dim 2\n"), MalformedInputError);
    CHECK_THROWS_AS(parse_instance_string("dim 2\n1 0 <= 3\n"), MalformedInputError);
    CHECK_THROWS_AS(parse_instance_string("dim 2\nset a\n1 <= 3\n"), MalformedInputError);
    CHECK_THROWS_AS(parse_instance_string("dim 2\nset a\n1 0 < 3\n"), MalformedInputError);
    CHECK_THROWS_AS(parse_instance_string("dim 2\nset a\n1 1/0 <= 3\n"), MalformedInputError);
    CHECK_THROWS_AS(parse_instance_string("dim 0\nset a\n"), MalformedInputError);
    // Colorful files may not leave sets outside class blocks.
    CHECK_THROWS_AS(parse_instance_string("dim 1\nset a\nclass 1\nset b\n"),
                    MalformedInputError);
}

TEST_CASE("class-less instances become d+1 equal classes") {
    auto instance = instance_from_family(1, {make_whole_space(1), make_whole_space(1)});
    auto classes = classes_from_instance(instance);
    CHECK(classes.classes.size() == 2);
    CHECK(classes.classes[0].size() == 2);
}

TEST_CASE("report JSON carries rationals as strings") {
    auto classes = gen_construction_colorful({1, 4, q(1, 2), 7});
    auto report = verify_theorem(classes);
    auto json = report_to_json(report, "test-invocation");
    CHECK(json.find("\"alpha\": \"7/16\"") != std::string::npos);
    CHECK(json.find("\"beta_observed\": \"1/2\"") != std::string::npos);
    CHECK(json.find("test-invocation") != std::string::npos);
}

TEST_CASE("sweep CSV uses exact rational cells") {
    std::vector<SweepRow> rows{{q(7, 16), q(1, 2), q(7, 32), q(1, 4)}};
    auto csv = sweep_to_csv(rows, "inv");
    CHECK(csv.find("alpha,beta_observed,lower_bound,upper_bound") != std::string::npos);
    CHECK(csv.find("7/16,1/2,7/32,1/4") != std::string::npos);
}
