#ifndef GRAPHDEX_GRAPH_HPP
#define GRAPHDEX_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "graphdex/errors.hpp"

namespace graphdex {

// Unordered vertex pair, stored canonically as (min, max).
using Edge = std::pair<int, int>;

using DegreeSequence = std::vector<int>;

// Simple undirected graph. Immutable after construction via make_graph:
// no loops, no multi-edges, every endpoint in [0, n). Edges are kept sorted
// lexicographically, which fixes the edge-vertex labeling of every derived
// graph.
class Graph {
public:
    Graph() = default;

    int vertex_count() const { return n_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const {
        if (u == v) return false;
        Edge e{std::min(u, v), std::max(u, v)};
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    bool operator==(const Graph&) const = default;

private:
    friend Graph make_graph(int n, std::span<const Edge> edge_list);

    int n_ = 0;
    std::vector<Edge> edges_;
};

// Validating constructor. Rejects loops, out-of-range endpoints and duplicate
// unordered pairs rather than repairing them; errors name the offending pair.
inline Graph make_graph(int n, std::span<const Edge> edge_list) {
    if (n < 0) throw GraphError("vertex count must be nonnegative");
    std::vector<Edge> canon;
    canon.reserve(edge_list.size());
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edge_list.size() * 2);
    for (const Edge& e : edge_list) {
        int u = e.first, v = e.second;
        if (u == v) throw LoopEdgeError(u, v);
        if (u < 0 || v < 0 || u >= n || v >= n) throw EndpointOutOfRangeError(u, v, n);
        if (u > v) std::swap(u, v);
        std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
        if (!seen.insert(key).second) throw DuplicateEdgeError(u, v);
        canon.emplace_back(u, v);
    }
    std::sort(canon.begin(), canon.end());
    Graph g;
    g.n_ = n;
    g.edges_ = std::move(canon);
    return g;
}

inline Graph make_graph(int n, std::initializer_list<Edge> edge_list) {
    return make_graph(n, std::span<const Edge>{edge_list.begin(), edge_list.size()});
}

inline Graph make_graph(int n, const std::vector<Edge>& edge_list) {
    return make_graph(n, std::span<const Edge>{edge_list});
}

inline DegreeSequence degrees(const Graph& g) {
    DegreeSequence d(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const Edge& e : g.edges()) {
        ++d[static_cast<std::size_t>(e.first)];
        ++d[static_cast<std::size_t>(e.second)];
    }
    return d;
}

inline std::vector<std::vector<int>> adjacency_lists(const Graph& g) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count()));
    for (const Edge& e : g.edges()) {
        adj[static_cast<std::size_t>(e.first)].push_back(e.second);
        adj[static_cast<std::size_t>(e.second)].push_back(e.first);
    }
    return adj;
}

// Lazy range over the unordered vertex pairs that are NOT edges of g, in
// lexicographic order. Walks the candidate pairs and the (sorted) edge list
// in lockstep, so iteration is allocation-free.
class ComplementPairRange {
public:
    class iterator {
    public:
        using value_type = Edge;
        using reference = const Edge&;
        using pointer = const Edge*;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::forward_iterator_tag;

        iterator() = default;
        iterator(const Graph* g, int u, int v, std::size_t edge_idx)
            : g_(g), cur_(u, v), edge_idx_(edge_idx) {
            skip_edges();
        }

        reference operator*() const { return cur_; }
        pointer operator->() const { return &cur_; }

        iterator& operator++() {
            bump();
            skip_edges();
            return *this;
        }
        iterator operator++(int) {
            iterator t = *this;
            ++*this;
            return t;
        }

        bool operator==(const iterator& o) const { return cur_ == o.cur_; }

    private:
        void bump() {
            int n = g_->vertex_count();
            if (cur_.first >= n) return;
            if (++cur_.second >= n) {
                ++cur_.first;
                cur_.second = cur_.first + 1;
                if (cur_.second >= n) cur_ = {n, n};  // exhausted
            }
        }
        void skip_edges() {
            if (!g_) return;
            int n = g_->vertex_count();
            if (cur_.first >= n || cur_.second >= n) cur_ = {n, n};  // no pair left
            while (cur_.first < n && edge_idx_ < g_->edges().size() &&
                   g_->edges()[edge_idx_] == cur_) {
                ++edge_idx_;
                bump();
            }
        }

        const Graph* g_ = nullptr;
        Edge cur_{0, 0};
        std::size_t edge_idx_ = 0;
    };

    explicit ComplementPairRange(const Graph& g) : g_(&g) {}

    iterator begin() const { return iterator(g_, 0, 1, 0); }
    iterator end() const {
        int n = g_->vertex_count();
        return iterator(g_, n, n, g_->edges().size());
    }

    // C(n,2) - m
    std::int64_t size() const {
        std::int64_t n = g_->vertex_count();
        return n * (n - 1) / 2 - g_->edge_count();
    }

private:
    const Graph* g_;
};

inline ComplementPairRange complement_pairs(const Graph& g) { return ComplementPairRange(g); }

// True iff every vertex is reachable from vertex 0 (vacuously true for
// n <= 1). Disconnected graphs are still valid inputs everywhere; this is a
// warning surface only.
inline bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    auto adj = adjacency_lists(g);
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    visited[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (!visited[static_cast<std::size_t>(w)]) {
                visited[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

}  // namespace graphdex

#endif  // GRAPHDEX_GRAPH_HPP
