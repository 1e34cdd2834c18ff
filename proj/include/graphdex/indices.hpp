#ifndef GRAPHDEX_INDICES_HPP
#define GRAPHDEX_INDICES_HPP

#include <cstdint>

#include "graphdex/checked.hpp"
#include "graphdex/graph.hpp"

namespace graphdex {

// Degree-based indices, computed straight from the definitions (vertex sums
// over d(v)^k, edge sums over endpoint degrees, complement-pair sums with
// degrees still taken in g). All arithmetic is overflow-checked 64-bit.

namespace detail {

inline std::int64_t degree_power_sum(const Graph& g, int k) {
    std::int64_t total = 0;
    for (int d : degrees(g)) total = checked_add(total, checked_pow(d, k));
    return total;
}

}  // namespace detail

// M1(g) = sum over vertices of d(v)^2
inline std::int64_t m1(const Graph& g) { return detail::degree_power_sum(g, 2); }

// F(g) = sum over vertices of d(v)^3
inline std::int64_t f_index(const Graph& g) { return detail::degree_power_sum(g, 3); }

// xi4(g) = sum over vertices of d(v)^4
inline std::int64_t xi4(const Graph& g) { return detail::degree_power_sum(g, 4); }

// M2(g) = sum over edges uv of d(u) d(v)
inline std::int64_t m2(const Graph& g) {
    auto d = degrees(g);
    std::int64_t total = 0;
    for (const Edge& e : g.edges())
        total = checked_add(total, checked_mul(d[static_cast<std::size_t>(e.first)],
                                               d[static_cast<std::size_t>(e.second)]));
    return total;
}

// ReZG3(g) = sum over edges uv of d(u) d(v) (d(u) + d(v))
inline std::int64_t rezg3(const Graph& g) {
    auto d = degrees(g);
    std::int64_t total = 0;
    for (const Edge& e : g.edges()) {
        std::int64_t du = d[static_cast<std::size_t>(e.first)];
        std::int64_t dv = d[static_cast<std::size_t>(e.second)];
        total = checked_add(total, checked_mul(checked_mul(du, dv), checked_add(du, dv)));
    }
    return total;
}

// F-coindex: sum over NON-adjacent pairs {u,v} of d(u)^2 + d(v)^2, degrees in
// g. Computed by literal complement-pair enumeration, never via the (n-1)M1-F
// identity, so it can serve as the identity's oracle.
inline std::int64_t f_coindex_direct(const Graph& g) {
    auto d = degrees(g);
    std::int64_t total = 0;
    for (const Edge& p : complement_pairs(g)) {
        std::int64_t du = d[static_cast<std::size_t>(p.first)];
        std::int64_t dv = d[static_cast<std::size_t>(p.second)];
        total = checked_add(total, checked_add(checked_mul(du, du), checked_mul(dv, dv)));
    }
    return total;
}

// Edge-sum forms of the vertex-sum indices. Equal to their vertex-sum twins
// on every graph with no isolated vertices contributing (d = 0 terms vanish),
// hence equal on all graphs; kept as independent cross-checks.
inline std::int64_t m1_edge_sum(const Graph& g) {
    auto d = degrees(g);
    std::int64_t total = 0;
    for (const Edge& e : g.edges())
        total = checked_add(total, checked_add(d[static_cast<std::size_t>(e.first)],
                                               d[static_cast<std::size_t>(e.second)]));
    return total;
}

inline std::int64_t f_index_edge_sum(const Graph& g) {
    auto d = degrees(g);
    std::int64_t total = 0;
    for (const Edge& e : g.edges()) {
        std::int64_t du = d[static_cast<std::size_t>(e.first)];
        std::int64_t dv = d[static_cast<std::size_t>(e.second)];
        total = checked_add(total, checked_add(checked_mul(du, du), checked_mul(dv, dv)));
    }
    return total;
}

inline std::int64_t xi4_edge_sum(const Graph& g) {
    auto d = degrees(g);
    std::int64_t total = 0;
    for (const Edge& e : g.edges()) {
        std::int64_t du = d[static_cast<std::size_t>(e.first)];
        std::int64_t dv = d[static_cast<std::size_t>(e.second)];
        total = checked_add(total, checked_add(checked_pow(du, 3), checked_pow(dv, 3)));
    }
    return total;
}

struct IndexReport {
    std::int64_t n;
    std::int64_t m;
    std::int64_t m1;
    std::int64_t m2;
    std::int64_t f;
    std::int64_t f_coindex;
    std::int64_t rezg3;
    std::int64_t xi4;
};

inline IndexReport report(const Graph& g) {
    return IndexReport{
        g.vertex_count(),  g.edge_count(),      m1(g),    m2(g),
        f_index(g),        f_coindex_direct(g), rezg3(g), xi4(g),
    };
}

}  // namespace graphdex

#endif  // GRAPHDEX_INDICES_HPP
