#pragma once

#include <optional>
#include <vector>

#include "helly/rational.hpp"

namespace helly {

enum class Relation { LessEq, Eq };

// One row "a . x REL b" over the ambient dimension of the owning set.
struct LinearConstraint {
    std::vector<Rational> coefficients;
    Rational rhs;
    Relation relation = Relation::LessEq;
};

// A convex subset of R^d as a finite system of linear constraints. An empty
// system denotes the whole space.
struct ConvexSet {
    int dim = 0;
    std::vector<LinearConstraint> constraints;

    bool is_whole_space() const { return constraints.empty(); }
};

enum class Feasibility { Nonempty, Empty };

struct FeasibilityResult {
    Feasibility status = Feasibility::Empty;
    // Present iff Nonempty; satisfies every queried constraint exactly.
    std::optional<std::vector<Rational>> witness;

    bool nonempty() const { return status == Feasibility::Nonempty; }
};

// Exact satisfaction check of a single constraint at a point.
bool satisfies(const LinearConstraint& constraint, const std::vector<Rational>& point);
bool satisfies(const ConvexSet& set, const std::vector<Rational>& point);

// Exact feasibility of a constraint system; phase-I simplex with Bland's rule.
FeasibilityResult feasible(const std::vector<LinearConstraint>& constraints, int dim);

// Joint nonemptiness of a tuple or subfamily of sets (concatenated systems).
// Throws MalformedInputError on an empty sequence or mixed dimensions.
FeasibilityResult intersect_sets(const std::vector<ConvexSet>& sets);

ConvexSet make_whole_space(int dim);

// A single hyperplane {x : coeffs . x = rhs}. Rejects the zero normal.
ConvexSet make_hyperplane(const std::vector<Rational>& coeffs, const Rational& rhs);

// True iff (a) every d of the hyperplanes meet in exactly one point (full-rank
// coefficient matrix) and (b) no d+1 of them have a common point. Inputs must
// be single-equality sets of a common dimension.
bool is_general_position(const std::vector<ConvexSet>& hyperplanes);

// Exact rank of a rational matrix, by Gaussian elimination.
int rational_rank(std::vector<std::vector<Rational>> matrix);

}  // namespace helly
