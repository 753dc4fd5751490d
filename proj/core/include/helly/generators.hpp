#pragma once

#include <cstdint>
#include <vector>

#include "helly/geometry.hpp"
#include "helly/helly.hpp"
#include "helly/rational.hpp"

namespace helly {

struct ConstructionSpec {
    int d = 1;
    int n = 0;          // class size
    Rational beta;      // in (0,1]
    std::uint64_t seed = 0;
};

// floor(beta * n) on exact rationals.
int floor_beta_n(const Rational& beta, int n);

// m hyperplanes in verified general position, coefficients from a seeded draw
// on an integer grid, redrawn until is_general_position passes.
std::vector<ConvexSet> gen_general_position_hyperplanes(int m, int d, std::uint64_t seed,
                                                        int max_retries = 100);

// floor(beta*n)-(d+1) copies of R^d plus n-floor(beta*n)+(d+1) hyperplanes in
// general position. Requires floor(beta*n) >= d+1.
std::vector<ConvexSet> gen_example_monochromatic(const ConstructionSpec& spec);

// d+1 classes, each floor(beta*n)-d copies of R^d plus n-floor(beta*n)+d
// hyperplanes; the union of all hyperplanes is jointly in general position.
// Requires floor(beta*n) >= d.
ColorClasses gen_construction_colorful(const ConstructionSpec& spec);

// Closed-form intersecting-tuple counts for the two constructions:
//   mono:     C(n,d+1) - C(n - floor(beta*n) + d+1, d+1)
//   colorful: n^(d+1) - (n - floor(beta*n) + d)^(d+1)
Integer predicted_mono_count(int n, const Rational& beta, int d);
Integer predicted_colorful_count(int n, const Rational& beta, int d);

enum class SetModel { AxisBoxes, HalfspaceSystems, MixedWithHyperplanes };

// Seeded random color classes for property tests; rational data throughout.
ColorClasses gen_random_classes(int d, const std::vector<int>& sizes, SetModel model,
                                std::uint64_t seed);

// Random constraint system for differential kernel tests: up to max_constraints
// rows over dimension d, with equality-heavy and degenerate rows mixed in.
std::vector<LinearConstraint> gen_random_system(int d, int max_constraints,
                                                std::uint64_t seed);

// Alpha = 1 instances for the colorful Helly harness: every colorful tuple
// intersects, while at least one class is fully intersecting by construction.
// Even seeds make all classes share a point; odd seeds plant one scattered
// non-intersecting class among whole-space classes.
ColorClasses gen_alpha_one_instance(int d, int n, std::uint64_t seed);

// Random r-uniform hypergraph with each possible edge kept with probability
// roughly density (seeded, deterministic).
Hypergraph gen_random_hypergraph(int n, int r, double density, std::uint64_t seed);

}  // namespace helly
