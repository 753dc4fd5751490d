#include "helly/helly.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "helly/errors.hpp"

namespace helly {

std::vector<int> ColorClasses::sizes() const {
    std::vector<int> out;
    for (const auto& cls : classes) out.push_back(static_cast<int>(cls.size()));
    return out;
}

ColorClasses make_color_classes(int d, std::vector<std::vector<ConvexSet>> classes) {
    if (d <= 0) throw MalformedInputError("dimension must be positive");
    if (static_cast<int>(classes.size()) != d + 1) {
        throw MalformedInputError("need exactly d+1 color classes");
    }
    for (const auto& cls : classes) {
        if (cls.empty()) throw MalformedInputError("color classes must be nonempty");
        for (const auto& set : cls) {
            if (set.dim != d) throw MalformedInputError("set dimension differs from d");
        }
    }
    return ColorClasses{d, std::move(classes)};
}

namespace {

std::vector<std::vector<int>> all_combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k > n) return out;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return out;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Mixed-radix enumeration over class sizes: tuple t -> (t mod n_1, ...),
// last class fastest.
std::vector<std::vector<int>> all_colorful_tuples(const std::vector<int>& sizes) {
    long long total = 1;
    for (int s : sizes) total *= s;
    std::vector<std::vector<int>> out;
    out.reserve(total);
    std::vector<int> pick(sizes.size(), 0);
    for (long long t = 0; t < total; ++t) {
        out.push_back(pick);
        for (int i = static_cast<int>(sizes.size()) - 1; i >= 0; --i) {
            if (++pick[i] < sizes[i]) break;
            pick[i] = 0;
        }
    }
    return out;
}

// Evaluates predicate over all tuples, optionally across threads. Results are
// positional, so aggregation is independent of the evaluation order.
template <typename Pred>
std::vector<char> parallel_map(const std::vector<std::vector<int>>& tuples, Pred pred,
                               int jobs) {
    std::vector<char> result(tuples.size(), 0);
    jobs = std::max(1, jobs);
    if (jobs == 1 || tuples.size() < 2) {
        for (std::size_t i = 0; i < tuples.size(); ++i) result[i] = pred(tuples[i]);
        return result;
    }
    std::vector<std::thread> workers;
    const std::size_t chunk = (tuples.size() + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(tuples.size(), lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back([&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) result[i] = pred(tuples[i]);
        });
    }
    for (auto& t : workers) t.join();
    return result;
}

bool tuple_intersects_mono(const std::vector<ConvexSet>& family, const std::vector<int>& idx) {
    std::vector<ConvexSet> tuple;
    for (int i : idx) tuple.push_back(family[i]);
    return intersect_sets(tuple).nonempty();
}

bool tuple_intersects_colorful(const ColorClasses& classes, const std::vector<int>& pick) {
    std::vector<ConvexSet> tuple;
    for (std::size_t i = 0; i < pick.size(); ++i) tuple.push_back(classes.classes[i][pick[i]]);
    return intersect_sets(tuple).nonempty();
}

}  // namespace

IntersectionProfile count_intersecting_monochromatic(const std::vector<ConvexSet>& family,
                                                     int d, int jobs) {
    if (static_cast<int>(family.size()) < d + 1) {
        throw MalformedInputError("fractional Helly needs at least d+1 sets");
    }
    for (const auto& set : family) {
        if (set.dim != d) throw MalformedInputError("set dimension differs from d");
    }
    const auto tuples = all_combinations(static_cast<int>(family.size()), d + 1);
    const auto hits = parallel_map(
        tuples, [&](const std::vector<int>& idx) { return tuple_intersects_mono(family, idx); },
        jobs);
    IntersectionProfile profile;
    profile.total_count = static_cast<long long>(tuples.size());
    profile.intersecting_count = std::count(hits.begin(), hits.end(), char(1));
    profile.alpha = Rational(Integer(static_cast<long>(profile.intersecting_count)), Integer(static_cast<long>(profile.total_count)));
    profile.alpha.canonicalize();
    return profile;
}

IntersectionProfile count_intersecting_colorful(const ColorClasses& classes, int jobs) {
    const auto tuples = all_colorful_tuples(classes.sizes());
    const auto hits = parallel_map(
        tuples,
        [&](const std::vector<int>& pick) { return tuple_intersects_colorful(classes, pick); },
        jobs);
    IntersectionProfile profile;
    profile.total_count = static_cast<long long>(tuples.size());
    profile.intersecting_count = std::count(hits.begin(), hits.end(), char(1));
    profile.alpha = Rational(Integer(static_cast<long>(profile.intersecting_count)), Integer(static_cast<long>(profile.total_count)));
    profile.alpha.canonicalize();
    return profile;
}

std::vector<Hypergraph> build_nonintersecting_hypergraphs(const ColorClasses& classes,
                                                          int jobs) {
    std::vector<Hypergraph> out;
    for (const auto& cls : classes.classes) {
        const int n = static_cast<int>(cls.size());
        const auto tuples = all_combinations(n, classes.d + 1);
        const auto empty = parallel_map(
            tuples,
            [&](const std::vector<int>& idx) { return !tuple_intersects_mono(cls, idx); },
            jobs);
        std::vector<std::vector<int>> edges;
        for (std::size_t i = 0; i < tuples.size(); ++i) {
            if (empty[i]) edges.push_back(tuples[i]);
        }
        out.push_back(make_hypergraph(n, classes.d + 1, std::move(edges)));
    }
    return out;
}

namespace {

SubfamilyResult make_subfamily(const ColorClasses& classes, int class_index,
                               std::vector<int> members) {
    SubfamilyResult result;
    result.class_index = class_index;
    result.members = std::move(members);
    std::sort(result.members.begin(), result.members.end());
    const int n = static_cast<int>(classes.classes[class_index].size());
    result.beta_observed = Rational(Integer(result.members.size()), Integer(n));
    result.beta_observed.canonicalize();
    if (!result.members.empty()) {
        std::vector<ConvexSet> sets;
        for (int i : result.members) sets.push_back(classes.classes[class_index][i]);
        auto feas = intersect_sets(sets);
        if (!feas.nonempty()) {
            throw MalformedInputError("subfamily is not intersecting");
        }
        result.witness = std::move(feas.witness);
    }
    return result;
}

// Largest intersecting subset of a handful of members (used only when an
// uncovered set of size <= d fails joint feasibility).
std::vector<int> best_feasible_subset(const std::vector<ConvexSet>& cls,
                                      const std::vector<int>& members) {
    std::vector<int> best;
    const int k = static_cast<int>(members.size());
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        if (__builtin_popcount(mask) <= static_cast<int>(best.size())) continue;
        std::vector<ConvexSet> sets;
        std::vector<int> subset;
        for (int i = 0; i < k; ++i) {
            if (mask & (1u << i)) {
                sets.push_back(cls[members[i]]);
                subset.push_back(members[i]);
            }
        }
        if (intersect_sets(sets).nonempty()) best = std::move(subset);
    }
    return best;
}

}  // namespace

ExtractionResult extract_intersecting_subfamily(const ColorClasses& classes, int jobs) {
    const int d = classes.d;
    const auto hypergraphs = build_nonintersecting_hypergraphs(classes, jobs);

    ExtractionResult result;
    std::vector<Rational> ratios;
    for (const auto& h : hypergraphs) {
        result.matchings.push_back(greedy_maximal_matching(h));
        Rational ratio(Integer(result.matchings.back().edges.size()), Integer(h.n));
        ratio.canonicalize();
        ratios.push_back(ratio);
    }

    std::vector<int> order(hypergraphs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return ratios[a] < ratios[b]; });

    const auto alpha = count_intersecting_colorful(classes, jobs).alpha;

    struct Candidate {
        int class_index;
        std::vector<int> uncovered;
        bool feasible;
    };
    std::vector<Candidate> candidates;
    for (int i : order) {
        Candidate c{i, uncovered_vertices(hypergraphs[i], result.matchings[i]), false};
        if (!c.uncovered.empty()) {
            std::vector<ConvexSet> sets;
            for (int v : c.uncovered) sets.push_back(classes.classes[i][v]);
            // Size >= d+1 is intersecting by Helly (the uncovered set is
            // independent), but the witness is needed either way.
            c.feasible = intersect_sets(sets).nonempty();
        }
        candidates.push_back(std::move(c));
    }

    // First preference: a feasible uncovered set that meets the size bound of
    // the guarantee for its own class; then the best-ratio feasible one.
    for (const auto& c : candidates) {
        const int n = static_cast<int>(classes.classes[c.class_index].size());
        if (c.feasible &&
            extraction_meets_bound(static_cast<int>(c.uncovered.size()), n, alpha, d)) {
            result.subfamily = make_subfamily(classes, c.class_index, c.uncovered);
            return result;
        }
    }
    for (const auto& c : candidates) {
        if (c.feasible) {
            result.subfamily = make_subfamily(classes, c.class_index, c.uncovered);
            return result;
        }
    }
    // Every uncovered set is empty or infeasible (infeasibility is only
    // possible at size <= d). Fall back to the largest intersecting subset of
    // the best-ratio class's uncovered set.
    const auto& first = candidates.front();
    result.subfamily = make_subfamily(
        classes, first.class_index,
        best_feasible_subset(classes.classes[first.class_index], first.uncovered));
    return result;
}

namespace {

struct MaxFsSearch {
    const std::vector<ConvexSet>* family;
    int dim;
    std::vector<int> constrained;  // indices of non-whole-space members
    std::vector<int> best;         // best subset of `constrained`
    std::vector<int> current;

    void run(std::size_t idx, std::vector<LinearConstraint>& active) {
        if (current.size() > best.size()) best = current;
        if (current.size() + (constrained.size() - idx) <= best.size()) return;
        for (std::size_t i = idx; i < constrained.size(); ++i) {
            const auto& set = (*family)[constrained[i]];
            const std::size_t mark = active.size();
            active.insert(active.end(), set.constraints.begin(), set.constraints.end());
            // Any superset of an infeasible subset stays infeasible, so an
            // infeasible include is pruned outright.
            if (feasible(active, dim).nonempty()) {
                current.push_back(constrained[i]);
                run(i + 1, active);
                current.pop_back();
            }
            active.resize(mark);
            if (current.size() + (constrained.size() - i - 1) <= best.size()) return;
        }
    }
};

}  // namespace

SubfamilyResult max_intersecting_subfamily_exact(const std::vector<ConvexSet>& family,
                                                 int scale_limit) {
    if (family.empty()) throw MalformedInputError("empty family");
    const int dim = family.front().dim;
    for (const auto& set : family) {
        if (set.dim != dim) throw MalformedInputError("sets of mixed dimension");
    }
    if (static_cast<int>(family.size()) > scale_limit) {
        throw ScaleLimitError("max_intersecting_subfamily_exact: family larger than limit");
    }

    std::vector<int> whole, constrained;
    for (std::size_t i = 0; i < family.size(); ++i) {
        (family[i].is_whole_space() ? whole : constrained).push_back(static_cast<int>(i));
    }

    MaxFsSearch search{&family, dim, constrained, {}, {}};
    std::vector<LinearConstraint> active;
    search.run(0, active);

    SubfamilyResult result;
    result.class_index = 0;
    result.members = whole;
    result.members.insert(result.members.end(), search.best.begin(), search.best.end());
    std::sort(result.members.begin(), result.members.end());
    result.beta_observed =
        Rational(Integer(result.members.size()), Integer(family.size()));
    result.beta_observed.canonicalize();
    if (!result.members.empty()) {
        std::vector<ConvexSet> sets;
        for (int i : result.members) sets.push_back(family[i]);
        result.witness = intersect_sets(sets).witness;
    }
    return result;
}

namespace {

void check_bound_args(const Rational& beta, const Rational& alpha, int d, bool alpha_positive) {
    if (d <= 0) throw MalformedInputError("dimension must be positive");
    if (beta < 0 || beta > 1) throw MalformedInputError("beta outside [0,1]");
    if (alpha > 1 || alpha < 0 || (alpha_positive && alpha == 0)) {
        throw MalformedInputError("alpha outside (0,1]");
    }
}

// beta >= 1 - (d+1)(1-alpha)^(1/(d+1)), via
// ((1-beta)/(d+1))^(d+1) <= 1-alpha (both sides nonnegative).
bool second_term_holds(const Rational& beta, const Rational& alpha, int d) {
    const Rational lhs = pow_rational((1 - beta) / (d + 1), d + 1);
    return lhs <= 1 - alpha;
}

}  // namespace

bool beta_lower_bound_holds(const Rational& beta_obs, const Rational& alpha, int d) {
    check_bound_args(beta_obs, alpha, d, /*alpha_positive=*/true);
    return beta_obs * (d + 1) >= alpha && second_term_holds(beta_obs, alpha, d);
}

bool beta_upper_bound_holds(const Rational& beta, const Rational& alpha, int d) {
    check_bound_args(beta, alpha, d, /*alpha_positive=*/true);
    // beta <= 1 - (1-alpha)^(1/(d+1))  <=>  (1-beta)^(d+1) >= 1-alpha.
    return pow_rational(1 - beta, d + 1) >= 1 - alpha;
}

bool lower_bound_verdict(const Rational& beta_obs, const Rational& alpha, int d) {
    check_bound_args(beta_obs, alpha, d, /*alpha_positive=*/false);
    return beta_obs * (d + 1) >= alpha && second_term_holds(beta_obs, alpha, d);
}

Rational lower_bound_value_approx(const Rational& alpha, int d, bool round_up) {
    const Rational first = alpha / (d + 1);
    const Rational root = round_up ? nth_root_lower(1 - alpha, d + 1)
                                   : nth_root_upper(1 - alpha, d + 1);
    Rational second = 1 - (d + 1) * root;
    if (second < 0) second = 0;
    return std::max(first, second);
}

Rational upper_bound_value_approx(const Rational& alpha, int d, bool round_up) {
    const Rational root = round_up ? nth_root_lower(1 - alpha, d + 1)
                                   : nth_root_upper(1 - alpha, d + 1);
    return 1 - root;
}

bool extraction_meets_bound(int size, int n, const Rational& alpha, int d) {
    Rational fraction{Integer(size), Integer(n)};
    fraction.canonicalize();
    if (fraction > 1) fraction = 1;
    return second_term_holds(fraction, alpha, d);
}

bool upper_gap_within(const Rational& beta_obs, const Rational& alpha, int d, int n) {
    Rational slack = beta_obs;
    slack = 1 - beta_obs + Rational(d + 1, n);
    if (slack < 0) return false;
    return pow_rational(slack, d + 1) >= 1 - alpha;
}

std::optional<int> find_intersecting_class(const ColorClasses& classes) {
    for (std::size_t i = 0; i < classes.classes.size(); ++i) {
        if (intersect_sets(classes.classes[i]).nonempty()) return static_cast<int>(i);
    }
    return std::nullopt;
}

Report verify_theorem(const ColorClasses& classes, const VerifyOptions& options) {
    Report report;
    report.d = classes.d;
    report.class_sizes = classes.sizes();
    report.profile = count_intersecting_colorful(classes, options.jobs);

    auto extraction = extract_intersecting_subfamily(classes, options.jobs);
    report.matchings = std::move(extraction.matchings);
    report.extraction = std::move(extraction.subfamily);
    report.extraction_bound_met = extraction_meets_bound(
        report.extraction.size(), report.class_sizes[report.extraction.class_index],
        report.profile.alpha, classes.d);

    report.exact_in_scale = true;
    Rational beta_obs(0);
    bool have_beta = false;
    for (std::size_t i = 0; i < classes.classes.size(); ++i) {
        ClassMaxReport cmr;
        cmr.in_scale = static_cast<int>(classes.classes[i].size()) <= options.max_exact_n;
        if (cmr.in_scale) {
            auto max = max_intersecting_subfamily_exact(classes.classes[i], options.max_exact_n);
            max.class_index = static_cast<int>(i);
            if (!have_beta || max.beta_observed > beta_obs) {
                beta_obs = max.beta_observed;
                have_beta = true;
            }
            cmr.exact_max = std::move(max);
        } else {
            report.exact_in_scale = false;
        }
        report.class_maxima.push_back(std::move(cmr));
    }
    if (!report.exact_in_scale) {
        // Out of exact scale: the verdict falls back to the extraction result,
        // which is a valid lower bound on the true beta_observed.
        if (!have_beta || report.extraction.beta_observed > beta_obs) {
            beta_obs = report.extraction.beta_observed;
        }
    }
    report.beta_observed = beta_obs;
    report.lower_bound_passed = lower_bound_verdict(beta_obs, report.profile.alpha, classes.d);

    if (options.construction_n) {
        report.upper_gap_within_tolerance =
            upper_gap_within(beta_obs, report.profile.alpha, classes.d, *options.construction_n);
    }
    return report;
}

}  // namespace helly
