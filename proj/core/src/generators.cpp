#include "helly/generators.hpp"

#include <algorithm>
#include <random>

#include "helly/errors.hpp"

namespace helly {

int floor_beta_n(const Rational& beta, int n) {
    Rational scaled = beta * n;
    return static_cast<int>(floor_rational(scaled).get_si());
}

namespace {

constexpr long kCoeffGrid = 10000;

Rational random_int_rational(std::mt19937_64& rng, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return Rational(Integer(dist(rng)));
}

// Small-denominator rational in roughly [lo, hi].
Rational random_small_rational(std::mt19937_64& rng, long lo, long hi) {
    std::uniform_int_distribution<long> num(lo * 4, hi * 4);
    std::uniform_int_distribution<long> den(1, 4);
    Rational value(Integer(num(rng)), Integer(den(rng) * 4));
    value.canonicalize();
    return value;
}

std::vector<Rational> random_normal(std::mt19937_64& rng, int d, long grid) {
    std::uniform_int_distribution<long> dist(-grid, grid);
    std::vector<Rational> coeffs(d);
    for (;;) {
        bool nonzero = false;
        for (auto& c : coeffs) {
            long v = dist(rng);
            c = Rational(Integer(v));
            nonzero = nonzero || v != 0;
        }
        if (nonzero) return coeffs;
    }
}

}  // namespace

std::vector<ConvexSet> gen_general_position_hyperplanes(int m, int d, std::uint64_t seed,
                                                        int max_retries) {
    if (m < 1) throw MalformedInputError("need at least one hyperplane");
    if (d < 1) throw MalformedInputError("dimension must be positive");
    std::mt19937_64 rng(seed);
    std::vector<ConvexSet> planes;
    while (static_cast<int>(planes.size()) < m) {
        bool placed = false;
        for (int attempt = 0; attempt < max_retries; ++attempt) {
            auto coeffs = random_normal(rng, d, kCoeffGrid);
            auto rhs = random_int_rational(rng, -kCoeffGrid, kCoeffGrid);
            planes.push_back(make_hyperplane(coeffs, rhs));
            if (is_general_position(planes)) {
                placed = true;
                break;
            }
            planes.pop_back();
        }
        if (!placed) {
            throw GenerationError("general-position rejection sampling exhausted retries");
        }
    }
    return planes;
}

namespace {

void check_spec(const ConstructionSpec& spec, int min_floor) {
    if (spec.d < 1 || spec.n < 1) throw SpecError("construction needs d >= 1, n >= 1");
    if (spec.beta <= 0 || spec.beta > 1) throw SpecError("beta must lie in (0,1]");
    if (floor_beta_n(spec.beta, spec.n) < min_floor) {
        throw SpecError("floor(beta*n) too small for the construction");
    }
    if (spec.n < floor_beta_n(spec.beta, spec.n)) throw SpecError("beta*n exceeds n");
}

}  // namespace

std::vector<ConvexSet> gen_example_monochromatic(const ConstructionSpec& spec) {
    check_spec(spec, spec.d + 1);
    const int bn = floor_beta_n(spec.beta, spec.n);
    const int whole_copies = bn - (spec.d + 1);
    const int plane_count = spec.n - bn + (spec.d + 1);
    std::vector<ConvexSet> family;
    for (int i = 0; i < whole_copies; ++i) family.push_back(make_whole_space(spec.d));
    auto planes = gen_general_position_hyperplanes(plane_count, spec.d, spec.seed);
    family.insert(family.end(), planes.begin(), planes.end());
    return family;
}

ColorClasses gen_construction_colorful(const ConstructionSpec& spec) {
    check_spec(spec, spec.d);
    const int bn = floor_beta_n(spec.beta, spec.n);
    const int whole_copies = bn - spec.d;
    const int planes_per_class = spec.n - bn + spec.d;
    // Joint general position across all classes, then dealt out in order.
    auto planes =
        gen_general_position_hyperplanes(planes_per_class * (spec.d + 1), spec.d, spec.seed);
    std::vector<std::vector<ConvexSet>> classes;
    for (int i = 0; i <= spec.d; ++i) {
        std::vector<ConvexSet> cls;
        for (int k = 0; k < whole_copies; ++k) cls.push_back(make_whole_space(spec.d));
        for (int k = 0; k < planes_per_class; ++k) {
            cls.push_back(planes[i * planes_per_class + k]);
        }
        classes.push_back(std::move(cls));
    }
    return make_color_classes(spec.d, std::move(classes));
}

Integer predicted_mono_count(int n, const Rational& beta, int d) {
    ConstructionSpec spec{d, n, beta, 0};
    check_spec(spec, d + 1);
    const int bn = floor_beta_n(beta, n);
    return binomial(n, d + 1) - binomial(n - bn + d + 1, d + 1);
}

Integer predicted_colorful_count(int n, const Rational& beta, int d) {
    ConstructionSpec spec{d, n, beta, 0};
    check_spec(spec, d);
    const int bn = floor_beta_n(beta, n);
    Integer total, misses;
    mpz_ui_pow_ui(total.get_mpz_t(), n, d + 1);
    mpz_ui_pow_ui(misses.get_mpz_t(), n - bn + d, d + 1);
    return total - misses;
}

namespace {

ConvexSet random_box(std::mt19937_64& rng, int d) {
    ConvexSet set{d, {}};
    for (int j = 0; j < d; ++j) {
        Rational lo = random_small_rational(rng, -10, 10);
        Rational hi = random_small_rational(rng, -10, 10);
        if (hi < lo) std::swap(lo, hi);
        std::vector<Rational> up(d, Rational(0)), down(d, Rational(0));
        up[j] = 1;
        down[j] = -1;
        set.constraints.push_back({up, hi, Relation::LessEq});
        set.constraints.push_back({down, -lo, Relation::LessEq});
    }
    return set;
}

ConvexSet random_halfspace_system(std::mt19937_64& rng, int d) {
    std::uniform_int_distribution<int> count(1, 4);
    ConvexSet set{d, {}};
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
        auto coeffs = random_normal(rng, d, 5);
        set.constraints.push_back({coeffs, random_small_rational(rng, -10, 10), Relation::LessEq});
    }
    return set;
}

ConvexSet random_mixed_set(std::mt19937_64& rng, int d) {
    std::uniform_int_distribution<int> kind(0, 3);
    switch (kind(rng)) {
        case 0: return make_whole_space(d);
        case 1: return make_hyperplane(random_normal(rng, d, 5),
                                       random_small_rational(rng, -10, 10));
        case 2: return random_box(rng, d);
        default: return random_halfspace_system(rng, d);
    }
}

}  // namespace

ColorClasses gen_random_classes(int d, const std::vector<int>& sizes, SetModel model,
                                std::uint64_t seed) {
    if (static_cast<int>(sizes.size()) != d + 1) {
        throw MalformedInputError("need d+1 class sizes");
    }
    std::mt19937_64 rng(seed);
    std::vector<std::vector<ConvexSet>> classes;
    for (int size : sizes) {
        if (size < 1) throw MalformedInputError("class sizes must be positive");
        std::vector<ConvexSet> cls;
        for (int i = 0; i < size; ++i) {
            switch (model) {
                case SetModel::AxisBoxes: cls.push_back(random_box(rng, d)); break;
                case SetModel::HalfspaceSystems: cls.push_back(random_halfspace_system(rng, d)); break;
                case SetModel::MixedWithHyperplanes: cls.push_back(random_mixed_set(rng, d)); break;
            }
        }
        classes.push_back(std::move(cls));
    }
    return make_color_classes(d, std::move(classes));
}

std::vector<LinearConstraint> gen_random_system(int d, int max_constraints,
                                                std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> count(0, max_constraints);
    std::uniform_int_distribution<int> rel(0, 2);
    std::uniform_int_distribution<long> small(-4, 4);
    const int k = count(rng);
    std::vector<LinearConstraint> constraints;
    for (int i = 0; i < k; ++i) {
        // Small coefficient range on purpose: it makes degenerate rows
        // (duplicates, implied equalities, zero rows) common.
        std::vector<Rational> coeffs(d);
        for (auto& c : coeffs) c = Rational(Integer(small(rng)));
        const Rational rhs = Rational(Integer(small(rng)));
        constraints.push_back(
            {coeffs, rhs, rel(rng) == 0 ? Relation::Eq : Relation::LessEq});
    }
    return constraints;
}

ColorClasses gen_alpha_one_instance(int d, int n, std::uint64_t seed) {
    if (n < 1) throw MalformedInputError("class size must be positive");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<ConvexSet>> classes;
    if (seed % 2 == 0) {
        // All sets contain a shared random point; every class is intersecting.
        std::vector<Rational> point(d);
        for (auto& c : point) c = random_small_rational(rng, -10, 10);
        for (int i = 0; i <= d; ++i) {
            std::vector<ConvexSet> cls;
            for (int k = 0; k < n; ++k) {
                auto set = random_box(rng, d);
                // Translate the box so it covers the shared point.
                for (int j = 0; j < d; ++j) {
                    auto& up = set.constraints[2 * j];
                    auto& down = set.constraints[2 * j + 1];
                    if (up.rhs < point[j]) up.rhs = point[j] + 1;
                    if (-down.rhs > point[j]) down.rhs = -(point[j] - 1);
                }
                cls.push_back(std::move(set));
            }
            classes.push_back(std::move(cls));
        }
    } else {
        // One scattered class of hyperplanes among whole-space classes: every
        // colorful tuple has at most one proper member, so alpha = 1, yet the
        // scattered class itself is non-intersecting once n > d.
        std::uniform_int_distribution<int> which(0, d);
        const int scattered = which(rng);
        for (int i = 0; i <= d; ++i) {
            std::vector<ConvexSet> cls;
            if (i == scattered && n > 1) {
                cls = gen_general_position_hyperplanes(n, d, rng());
            } else {
                for (int k = 0; k < n; ++k) cls.push_back(make_whole_space(d));
            }
            classes.push_back(std::move(cls));
        }
    }
    return make_color_classes(d, std::move(classes));
}

Hypergraph gen_random_hypergraph(int n, int r, double density, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution keep(density);
    std::vector<std::vector<int>> edges;
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    if (r <= n) {
        for (;;) {
            if (keep(rng)) edges.push_back(idx);
            int i = r - 1;
            while (i >= 0 && idx[i] == n - r + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return make_hypergraph(n, r, std::move(edges));
}

}  // namespace helly
