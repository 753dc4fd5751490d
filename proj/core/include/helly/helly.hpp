#pragma once

#include <optional>
#include <vector>

#include "helly/geometry.hpp"
#include "helly/hypergraph.hpp"
#include "helly/rational.hpp"

namespace helly {

// The d+1 color classes F_1..F_{d+1}, each a nonempty family of convex sets
// in R^d.
struct ColorClasses {
    int d = 0;
    std::vector<std::vector<ConvexSet>> classes;

    std::vector<int> sizes() const;
};

// Validates: exactly d+1 classes, each nonempty, all sets of dimension d.
ColorClasses make_color_classes(int d, std::vector<std::vector<ConvexSet>> classes);

struct IntersectionProfile {
    long long intersecting_count = 0;
    long long total_count = 0;
    Rational alpha;  // intersecting_count / total_count, exact
};

struct SubfamilyResult {
    int class_index = 0;
    std::vector<int> members;  // indices into the class, sorted
    std::optional<std::vector<Rational>> witness;
    Rational beta_observed;  // |members| / class size

    int size() const { return static_cast<int>(members.size()); }
};

// Fraction of intersecting (d+1)-tuples within one family, enumerated in
// lexicographic order. Requires |family| >= d+1. jobs > 1 splits the tuple
// list across threads; counts are order-independent.
IntersectionProfile count_intersecting_monochromatic(const std::vector<ConvexSet>& family,
                                                     int d, int jobs = 1);

// Fraction of intersecting colorful (d+1)-tuples (one member per class),
// enumerated in mixed-radix order over class indices.
IntersectionProfile count_intersecting_colorful(const ColorClasses& classes, int jobs = 1);

// H_i per class: (d+1)-uniform on the class members, an edge per
// non-intersecting (d+1)-tuple. Classes with <= d members come back edgeless.
std::vector<Hypergraph> build_nonintersecting_hypergraphs(const ColorClasses& classes,
                                                          int jobs = 1);

struct ExtractionResult {
    std::vector<Matching> matchings;  // maximal matching per class
    SubfamilyResult subfamily;
};

// Constructive pipeline: greedy maximal matchings in each H_i, then the
// uncovered vertices of the best class. A class whose uncovered set is at
// least d+1 strong is intersecting outright (the uncovered set is independent,
// so every (d+1)-tuple in it intersects and Helly applies); smaller uncovered
// sets are kept only when directly feasible, with a fallback scan over the
// other classes and finally over subsets.
ExtractionResult extract_intersecting_subfamily(const ColorClasses& classes, int jobs = 1);

// Maximum-cardinality intersecting subfamily by branch and bound. Documented
// limit: family size <= 25 (whole-space members are free and do not count
// against the search).
SubfamilyResult max_intersecting_subfamily_exact(const std::vector<ConvexSet>& family,
                                                 int scale_limit = 25);

// Exact decisions on the bound formulas. All roots are removed by raising both
// sides to the (d+1)-th power; no irrational arithmetic.
//   lower: beta >= max{ alpha/(d+1), 1 - (d+1)(1-alpha)^(1/(d+1)) }
//   upper: beta <= 1 - (1-alpha)^(1/(d+1))
// alpha must lie in (0,1], beta in [0,1].
bool beta_lower_bound_holds(const Rational& beta_obs, const Rational& alpha, int d);
bool beta_upper_bound_holds(const Rational& beta, const Rational& alpha, int d);

// Same decisions without the alpha > 0 gate (alpha = 0 makes both bound terms
// <= 0, so the lower bound holds trivially). Used by the report pipeline.
bool lower_bound_verdict(const Rational& beta_obs, const Rational& alpha, int d);

// Certified rational enclosure of the lower bound value, for display only.
Rational lower_bound_value_approx(const Rational& alpha, int d, bool round_up = false);
Rational upper_bound_value_approx(const Rational& alpha, int d, bool round_up = true);

// True iff size/n >= 1 - (d+1)(1-alpha)^(1/(d+1)), decided exactly.
bool extraction_meets_bound(int size, int n, const Rational& alpha, int d);

struct ClassMaxReport {
    bool in_scale = false;
    std::optional<SubfamilyResult> exact_max;
};

struct Report {
    int d = 0;
    std::vector<int> class_sizes;
    IntersectionProfile profile;
    std::vector<Matching> matchings;
    SubfamilyResult extraction;
    bool extraction_bound_met = false;
    std::vector<ClassMaxReport> class_maxima;
    bool exact_in_scale = false;  // every class was maximized exactly
    Rational beta_observed;
    bool lower_bound_passed = false;
    // Optional near-tightness check for construction instances where the
    // nominal (n, beta) of the recipe are known: the gap between beta_observed
    // and the upper bound is at most (d+1)/n.
    std::optional<bool> upper_gap_within_tolerance;
};

struct VerifyOptions {
    int max_exact_n = 25;  // per-class exact maximization cutoff
    int jobs = 1;
    // Nominal class size of the generating construction, when known; enables
    // the upper-bound gap check.
    std::optional<int> construction_n;
};

Report verify_theorem(const ColorClasses& classes, const VerifyOptions& options = {});

// True iff beta_obs - (1 - (1-alpha)^(1/(d+1))) <= (d+1)/n, via the exact
// equivalent (1 - beta_obs + (d+1)/n)^(d+1) >= 1 - alpha.
bool upper_gap_within(const Rational& beta_obs, const Rational& alpha, int d, int n);

// Finds a fully intersecting class, if any (the colorful Helly conclusion on
// alpha = 1 instances). Returns the smallest such index.
std::optional<int> find_intersecting_class(const ColorClasses& classes);

}  // namespace helly
