#include "helly/geometry.hpp"

#include <algorithm>

#include "helly/errors.hpp"

namespace helly {

bool satisfies(const LinearConstraint& constraint, const std::vector<Rational>& point) {
    if (constraint.coefficients.size() != point.size()) {
        throw MalformedInputError("point arity does not match constraint");
    }
    Rational lhs(0);
    for (std::size_t j = 0; j < point.size(); ++j) {
        lhs += constraint.coefficients[j] * point[j];
    }
    return constraint.relation == Relation::Eq ? lhs == constraint.rhs : lhs <= constraint.rhs;
}

bool satisfies(const ConvexSet& set, const std::vector<Rational>& point) {
    return std::all_of(set.constraints.begin(), set.constraints.end(),
                       [&](const auto& c) { return satisfies(c, point); });
}

FeasibilityResult intersect_sets(const std::vector<ConvexSet>& sets) {
    if (sets.empty()) {
        throw MalformedInputError("intersection of zero sets is undefined");
    }
    const int dim = sets.front().dim;
    std::vector<LinearConstraint> combined;
    for (const auto& set : sets) {
        if (set.dim != dim) throw MalformedInputError("sets of mixed dimension");
        combined.insert(combined.end(), set.constraints.begin(), set.constraints.end());
    }
    return feasible(combined, dim);
}

ConvexSet make_whole_space(int dim) {
    if (dim <= 0) throw MalformedInputError("dimension must be positive");
    return ConvexSet{dim, {}};
}

ConvexSet make_hyperplane(const std::vector<Rational>& coeffs, const Rational& rhs) {
    if (coeffs.empty()) throw MalformedInputError("hyperplane needs a dimension");
    if (std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; })) {
        throw MalformedInputError("hyperplane with zero normal");
    }
    ConvexSet set{static_cast<int>(coeffs.size()), {}};
    set.constraints.push_back({coeffs, rhs, Relation::Eq});
    return set;
}

int rational_rank(std::vector<std::vector<Rational>> matrix) {
    if (matrix.empty()) return 0;
    const std::size_t cols = matrix.front().size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < matrix.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < matrix.size() && matrix[pivot][col] == 0) ++pivot;
        if (pivot == matrix.size()) continue;
        std::swap(matrix[row], matrix[pivot]);
        for (std::size_t k = row + 1; k < matrix.size(); ++k) {
            if (matrix[k][col] == 0) continue;
            const Rational f = matrix[k][col] / matrix[row][col];
            for (std::size_t j = col; j < cols; ++j) {
                matrix[k][j] -= f * matrix[row][j];
            }
        }
        ++row;
    }
    return static_cast<int>(row);
}

namespace {

// Visits all k-subsets of {0..n-1} in lexicographic order; stops early when
// the visitor returns false.
template <typename Visitor>
bool for_each_subset(int n, int k, Visitor visit) {
    if (k > n) return true;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        if (!visit(idx)) return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

bool is_general_position(const std::vector<ConvexSet>& hyperplanes) {
    if (hyperplanes.empty()) return true;
    const int d = hyperplanes.front().dim;
    std::vector<std::vector<Rational>> normals;
    std::vector<Rational> offsets;
    for (const auto& h : hyperplanes) {
        if (h.dim != d || h.constraints.size() != 1 ||
            h.constraints.front().relation != Relation::Eq) {
            throw MalformedInputError("is_general_position expects single-equality sets");
        }
        normals.push_back(h.constraints.front().coefficients);
        offsets.push_back(h.constraints.front().rhs);
    }
    const int m = static_cast<int>(hyperplanes.size());

    // (a) every d normals are linearly independent.
    bool ok = for_each_subset(m, d, [&](const std::vector<int>& idx) {
        std::vector<std::vector<Rational>> sub;
        for (int i : idx) sub.push_back(normals[i]);
        return rational_rank(std::move(sub)) == d;
    });
    if (!ok) return false;

    // (b) no d+1 hyperplanes share a point: the augmented system must be
    // inconsistent, i.e. rank(A) < rank(A|b).
    ok = for_each_subset(m, d + 1, [&](const std::vector<int>& idx) {
        std::vector<std::vector<Rational>> a, ab;
        for (int i : idx) {
            a.push_back(normals[i]);
            auto row = normals[i];
            row.push_back(offsets[i]);
            ab.push_back(std::move(row));
        }
        return rational_rank(std::move(a)) < rational_rank(std::move(ab));
    });
    return ok;
}

}  // namespace helly
