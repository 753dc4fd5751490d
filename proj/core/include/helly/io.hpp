#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "helly/geometry.hpp"
#include "helly/helly.hpp"

namespace helly {

// Text instance format:
//   dim d
//   [class k]            (colorful instances only; k = 1..d+1, in order)
//   set <id>
//   a_1 a_2 ... a_d REL b     (REL in {<=, =}; rationals as "p/q" or integers)
// A "set" block with no constraint lines is the whole space. Monochromatic
// files carry no "class" lines.
struct Instance {
    int dim = 0;
    std::vector<std::string> set_ids;
    std::vector<ConvexSet> sets;
    // Per-class index lists, empty for monochromatic instances. When present,
    // covers every set exactly once, in file order.
    std::vector<std::vector<int>> classes;

    bool is_colorful() const { return !classes.empty(); }
};

Instance parse_instance(std::istream& in);
Instance parse_instance_string(const std::string& text);
Instance load_instance(const std::string& path);

std::string serialize_instance(const Instance& instance);
void save_instance(const Instance& instance, const std::string& path);

Instance instance_from_family(int dim, const std::vector<ConvexSet>& family);
Instance instance_from_classes(const ColorClasses& classes);

// A class-less instance is read as d+1 equal color classes (the colorful
// theorem specializes to the monochromatic one that way).
ColorClasses classes_from_instance(const Instance& instance);

// Report as a single JSON document; every rational is a "p/q" string.
std::string report_to_json(const Report& report, const std::string& invocation);

struct SweepRow {
    Rational alpha;
    Rational beta_observed;
    Rational lower_bound;  // certified enclosure, rounded down
    Rational upper_bound;  // certified enclosure, rounded up
};

std::string sweep_to_csv(const std::vector<SweepRow>& rows, const std::string& invocation);

}  // namespace helly
