#pragma once

#include <vector>

#include "helly/rational.hpp"

namespace helly {

// r-uniform hypergraph on vertices 0..n-1. Edges are strictly increasing
// r-tuples, stored sorted lexicographically with no duplicates.
struct Hypergraph {
    int n = 0;
    int r = 0;
    std::vector<std::vector<int>> edges;
};

// Validates the invariants above; throws MalformedInputError. Normalizes edge
// order (sorts, dedupes).
Hypergraph make_hypergraph(int n, int r, std::vector<std::vector<int>> edges);

struct Matching {
    std::vector<std::vector<int>> edges;  // pairwise disjoint, each an edge of H
};

// Deterministic greedy maximal matching: scans edges in the given order
// (indices into H.edges; empty order means lexicographic) and keeps every edge
// disjoint from those already chosen. The result is maximal: no edge of H
// avoids all chosen edges.
Matching greedy_maximal_matching(const Hypergraph& h, const std::vector<int>& edge_order = {});

// Exact nu(H) by branch and bound over edges. Documented limit: |edges| <= 64.
int matching_number_exact(const Hypergraph& h);

// Exact alpha(H) by exhaustive subset search. Documented limit: n <= 16.
int independence_number_exact(const Hypergraph& h);

// Vertices covered by no edge of M. Throws MalformedInputError if M is not a
// matching of H. If M is maximal, the returned set is independent in H.
std::vector<int> uncovered_vertices(const Hypergraph& h, const Matching& m);

bool is_independent_set(const Hypergraph& h, const std::vector<int>& vertices);

}  // namespace helly
