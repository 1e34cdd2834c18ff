#ifndef GRAPHDEX_DERIVED_HPP
#define GRAPHDEX_DERIVED_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "graphdex/graph.hpp"

namespace graphdex {

enum class DerivedKind { Line, Subdivision, VertexSemitotal, EdgeSemitotal, Total, Paraline };

inline constexpr DerivedKind kAllKinds[] = {
    DerivedKind::Line,          DerivedKind::Subdivision, DerivedKind::VertexSemitotal,
    DerivedKind::EdgeSemitotal, DerivedKind::Total,       DerivedKind::Paraline,
};

inline std::string kind_name(DerivedKind k) {
    switch (k) {
        case DerivedKind::Line: return "L";
        case DerivedKind::Subdivision: return "S";
        case DerivedKind::VertexSemitotal: return "T1";
        case DerivedKind::EdgeSemitotal: return "T2";
        case DerivedKind::Total: return "T";
        case DerivedKind::Paraline: return "PL";
    }
    throw GraphError("unknown derived kind");
}

inline std::optional<DerivedKind> parse_kind(const std::string& s) {
    for (DerivedKind k : kAllKinds)
        if (kind_name(k) == s) return k;
    return std::nullopt;
}

// Where a derived-graph vertex came from in the base graph.
struct Original {
    int vertex;
    bool operator==(const Original&) const = default;
};
struct EdgeVertex {
    int edge;  // index into base.edges()
    bool operator==(const EdgeVertex&) const = default;
};
struct SubdividedHalf {  // half-edge: base edge `edge` on the `endpoint` side
    int edge;
    int endpoint;
    bool operator==(const SubdividedHalf&) const = default;
};
using VertexOrigin = std::variant<Original, EdgeVertex, SubdividedHalf>;

struct DerivedGraph {
    Graph graph;
    std::vector<VertexOrigin> origin;  // one entry per derived vertex
};

inline std::string origin_label(const VertexOrigin& o, const Graph& base) {
    struct V {
        const Graph& base;
        std::string operator()(const Original& x) const {
            return "vertex " + std::to_string(x.vertex);
        }
        std::string edge_str(int k) const {
            const Edge& e = base.edges()[static_cast<std::size_t>(k)];
            return "edge " + std::to_string(k) + " (" + std::to_string(e.first) + "-" +
                   std::to_string(e.second) + ")";
        }
        std::string operator()(const EdgeVertex& x) const { return edge_str(x.edge); }
        std::string operator()(const SubdividedHalf& x) const {
            return edge_str(x.edge) + " end " + std::to_string(x.endpoint);
        }
    };
    return std::visit(V{base}, o);
}

namespace detail {

// Edges of g incident to each vertex, as indices into g.edges().
inline std::vector<std::vector<int>> incident_edges(const Graph& g) {
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(g.vertex_count()));
    for (std::size_t k = 0; k < g.edges().size(); ++k) {
        const Edge& e = g.edges()[k];
        inc[static_cast<std::size_t>(e.first)].push_back(static_cast<int>(k));
        inc[static_cast<std::size_t>(e.second)].push_back(static_cast<int>(k));
    }
    return inc;
}

// Pairs of adjacent base edges, as pairs of edge indices shifted by `offset`.
// In a simple graph two distinct edges share at most one endpoint, so the
// per-vertex cliques cover each such pair exactly once.
inline void append_edge_adjacencies(const Graph& g, int offset, std::vector<Edge>& out) {
    for (const auto& inc : incident_edges(g)) {
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                out.emplace_back(offset + inc[i], offset + inc[j]);
    }
}

}  // namespace detail

// L(g): one vertex per edge of g (in edge-list order), adjacent iff the edges
// share an endpoint.
inline DerivedGraph line_graph(const Graph& g) {
    std::vector<Edge> e;
    detail::append_edge_adjacencies(g, 0, e);
    DerivedGraph out;
    out.graph = make_graph(static_cast<int>(g.edge_count()), e);
    out.origin.reserve(g.edges().size());
    for (int k = 0; k < static_cast<int>(g.edge_count()); ++k) out.origin.push_back(EdgeVertex{k});
    return out;
}

namespace detail {

inline std::vector<Edge> subdivision_edges(const Graph& g) {
    int n = g.vertex_count();
    std::vector<Edge> e;
    e.reserve(g.edges().size() * 2);
    for (std::size_t k = 0; k < g.edges().size(); ++k) {
        e.emplace_back(g.edges()[k].first, n + static_cast<int>(k));
        e.emplace_back(g.edges()[k].second, n + static_cast<int>(k));
    }
    return e;
}

inline std::vector<VertexOrigin> mixed_origin(const Graph& g) {
    std::vector<VertexOrigin> origin;
    origin.reserve(static_cast<std::size_t>(g.vertex_count()) + g.edges().size());
    for (int v = 0; v < g.vertex_count(); ++v) origin.push_back(Original{v});
    for (int k = 0; k < static_cast<int>(g.edge_count()); ++k) origin.push_back(EdgeVertex{k});
    return origin;
}

}  // namespace detail

// S(g): every edge replaced by a path of length two through a new vertex.
// Vertices 0..n-1 are the originals, n+k is the subdividing vertex of edge k.
inline DerivedGraph subdivision(const Graph& g) {
    DerivedGraph out;
    out.graph = make_graph(g.vertex_count() + static_cast<int>(g.edge_count()),
                           detail::subdivision_edges(g));
    out.origin = detail::mixed_origin(g);
    return out;
}

// T1(g): subdivision plus the original edges.
inline DerivedGraph vertex_semitotal(const Graph& g) {
    std::vector<Edge> e = detail::subdivision_edges(g);
    e.insert(e.end(), g.edges().begin(), g.edges().end());
    DerivedGraph out;
    out.graph = make_graph(g.vertex_count() + static_cast<int>(g.edge_count()), e);
    out.origin = detail::mixed_origin(g);
    return out;
}

// T2(g): subdivision plus an edge between the subdividing vertices of every
// pair of adjacent base edges.
inline DerivedGraph edge_semitotal(const Graph& g) {
    std::vector<Edge> e = detail::subdivision_edges(g);
    detail::append_edge_adjacencies(g, g.vertex_count(), e);
    DerivedGraph out;
    out.graph = make_graph(g.vertex_count() + static_cast<int>(g.edge_count()), e);
    out.origin = detail::mixed_origin(g);
    return out;
}

// T(g): union of S(g), the original edges, and the edge adjacencies.
inline DerivedGraph total_graph(const Graph& g) {
    std::vector<Edge> e = detail::subdivision_edges(g);
    e.insert(e.end(), g.edges().begin(), g.edges().end());
    detail::append_edge_adjacencies(g, g.vertex_count(), e);
    DerivedGraph out;
    out.graph = make_graph(g.vertex_count() + static_cast<int>(g.edge_count()), e);
    out.origin = detail::mixed_origin(g);
    return out;
}

// PL(g) = L(S(g)), built literally as that composition so that deriving PL in
// one step and deriving S then L agree vertex-for-vertex. Each vertex is an
// edge of S(g), i.e. a half-edge (x, n+k) of the base graph; the origin
// records base edge k and endpoint x.
inline DerivedGraph paraline(const Graph& g) {
    int n = g.vertex_count();
    DerivedGraph s = subdivision(g);
    DerivedGraph out = line_graph(s.graph);
    out.origin.clear();
    out.origin.reserve(s.graph.edges().size());
    for (const Edge& se : s.graph.edges())
        out.origin.push_back(SubdividedHalf{se.second - n, se.first});
    return out;
}

inline DerivedGraph construct(DerivedKind kind, const Graph& g) {
    switch (kind) {
        case DerivedKind::Line: return line_graph(g);
        case DerivedKind::Subdivision: return subdivision(g);
        case DerivedKind::VertexSemitotal: return vertex_semitotal(g);
        case DerivedKind::EdgeSemitotal: return edge_semitotal(g);
        case DerivedKind::Total: return total_graph(g);
        case DerivedKind::Paraline: return paraline(g);
    }
    throw GraphError("unknown derived kind");
}

// Every derived vertex has a degree determined by its origin:
//   L : edge uv             -> d(u) + d(v) - 2
//   S : vertex u -> d(u),      edge -> 2
//   T1: vertex u -> 2 d(u),    edge -> 2
//   T2: vertex u -> d(u),      edge uv -> d(u) + d(v)
//   T : vertex u -> 2 d(u),    edge uv -> d(u) + d(v)
//   PL: half-edge at x       -> d(x)
// Returns a description of every vertex whose actual degree disagrees.
inline std::vector<std::string> degree_fact_violations(DerivedKind kind, const Graph& g) {
    DerivedGraph dg = construct(kind, g);
    auto dd = degrees(dg.graph);
    auto d = degrees(g);
    auto edge_deg_sum = [&](int k) {
        const Edge& e = g.edges()[static_cast<std::size_t>(k)];
        return d[static_cast<std::size_t>(e.first)] + d[static_cast<std::size_t>(e.second)];
    };
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < dg.origin.size(); ++i) {
        int expected = -1;
        if (const auto* o = std::get_if<Original>(&dg.origin[i])) {
            int du = d[static_cast<std::size_t>(o->vertex)];
            expected = (kind == DerivedKind::VertexSemitotal || kind == DerivedKind::Total)
                           ? 2 * du
                           : du;
        } else if (const auto* e = std::get_if<EdgeVertex>(&dg.origin[i])) {
            switch (kind) {
                case DerivedKind::Line: expected = edge_deg_sum(e->edge) - 2; break;
                case DerivedKind::Subdivision:
                case DerivedKind::VertexSemitotal: expected = 2; break;
                default: expected = edge_deg_sum(e->edge); break;
            }
        } else if (const auto* h = std::get_if<SubdividedHalf>(&dg.origin[i])) {
            expected = d[static_cast<std::size_t>(h->endpoint)];
        }
        if (dd[i] != expected) {
            bad.push_back(kind_name(kind) + " vertex " + std::to_string(i) + " (" +
                          origin_label(dg.origin[i], g) + "): degree " + std::to_string(dd[i]) +
                          ", expected " + std::to_string(expected));
        }
    }
    return bad;
}

}  // namespace graphdex

#endif  // GRAPHDEX_DERIVED_HPP
