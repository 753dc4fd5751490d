#include "helly/hypergraph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "helly/errors.hpp"

namespace helly {

Hypergraph make_hypergraph(int n, int r, std::vector<std::vector<int>> edges) {
    if (n < 0 || r <= 0) throw MalformedInputError("hypergraph needs n >= 0, r >= 1");
    for (auto& edge : edges) {
        std::sort(edge.begin(), edge.end());
        if (static_cast<int>(edge.size()) != r ||
            std::adjacent_find(edge.begin(), edge.end()) != edge.end() ||
            edge.front() < 0 || edge.back() >= n) {
            throw MalformedInputError("edge is not an r-subset of the vertex range");
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Hypergraph{n, r, std::move(edges)};
}

Matching greedy_maximal_matching(const Hypergraph& h, const std::vector<int>& edge_order) {
    std::vector<int> order;
    if (edge_order.empty()) {
        order.resize(h.edges.size());
        std::iota(order.begin(), order.end(), 0);
    } else {
        if (edge_order.size() != h.edges.size()) {
            throw MalformedInputError("edge order must permute all edges");
        }
        order = edge_order;
    }
    std::vector<char> used(h.n, 0);
    Matching m;
    for (int e : order) {
        if (e < 0 || e >= static_cast<int>(h.edges.size())) {
            throw MalformedInputError("edge order index out of range");
        }
        const auto& edge = h.edges[e];
        if (std::any_of(edge.begin(), edge.end(), [&](int v) { return used[v]; })) continue;
        for (int v : edge) used[v] = 1;
        m.edges.push_back(edge);
    }
    return m;
}

namespace {

std::uint64_t edge_mask(const std::vector<int>& edge) {
    std::uint64_t mask = 0;
    for (int v : edge) mask |= std::uint64_t(1) << v;
    return mask;
}

void matching_search(const std::vector<std::uint64_t>& masks, std::size_t idx,
                     std::uint64_t used, int size, int& best) {
    best = std::max(best, size);
    if (size + static_cast<int>(masks.size() - idx) <= best) return;
    for (std::size_t e = idx; e < masks.size(); ++e) {
        if (masks[e] & used) continue;
        matching_search(masks, e + 1, used | masks[e], size + 1, best);
        if (size + static_cast<int>(masks.size() - e - 1) <= best) return;
    }
}

}  // namespace

int matching_number_exact(const Hypergraph& h) {
    if (h.edges.size() > 64 || h.n > 64) {
        throw ScaleLimitError("matching_number_exact is limited to 64 edges");
    }
    std::vector<std::uint64_t> masks;
    for (const auto& edge : h.edges) masks.push_back(edge_mask(edge));
    int best = 0;
    matching_search(masks, 0, 0, 0, best);
    return best;
}

int independence_number_exact(const Hypergraph& h) {
    if (h.n > 16) throw ScaleLimitError("independence_number_exact is limited to n <= 16");
    std::vector<std::uint64_t> masks;
    for (const auto& edge : h.edges) masks.push_back(edge_mask(edge));
    int best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << h.n); ++s) {
        const int size = __builtin_popcountll(s);
        if (size <= best) continue;
        bool independent = true;
        for (std::uint64_t m : masks) {
            if ((m & s) == m) { independent = false; break; }
        }
        if (independent) best = size;
    }
    return best;
}

std::vector<int> uncovered_vertices(const Hypergraph& h, const Matching& m) {
    std::vector<char> covered(h.n, 0);
    for (const auto& edge : m.edges) {
        if (!std::binary_search(h.edges.begin(), h.edges.end(), edge)) {
            throw MalformedInputError("matching edge is not an edge of the hypergraph");
        }
        for (int v : edge) {
            if (covered[v]) throw MalformedInputError("matching edges are not disjoint");
            covered[v] = 1;
        }
    }
    std::vector<int> uncovered;
    for (int v = 0; v < h.n; ++v) {
        if (!covered[v]) uncovered.push_back(v);
    }
    return uncovered;
}

bool is_independent_set(const Hypergraph& h, const std::vector<int>& vertices) {
    std::vector<char> in(h.n, 0);
    for (int v : vertices) in[v] = 1;
    for (const auto& edge : h.edges) {
        if (std::all_of(edge.begin(), edge.end(), [&](int v) { return in[v]; })) return false;
    }
    return true;
}

}  // namespace helly
