#ifndef GRAPHDEX_GENERATORS_HPP
#define GRAPHDEX_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "graphdex/errors.hpp"
#include "graphdex/graph.hpp"

namespace graphdex {

// C_n: vertices 0..n-1, edges {i, i+1 mod n}. Needs n >= 3 to stay simple.
inline Graph cycle(int n) {
    if (n < 3) throw SizeTooSmallError("cycle", n, 3);
    std::vector<Edge> e;
    e.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return make_graph(n, e);
}

// P_n: path on n vertices (n - 1 edges).
inline Graph path(int n) {
    if (n < 1) throw SizeTooSmallError("path", n, 1);
    std::vector<Edge> e;
    e.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return make_graph(n, e);
}

// S_n: star on n vertices, center 0, leaves 1..n-1.
inline Graph star(int n) {
    if (n < 2) throw SizeTooSmallError("star", n, 2);
    std::vector<Edge> e;
    e.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return make_graph(n, e);
}

// K_n. n >= 1.
inline Graph complete(int n) {
    if (n < 1) throw SizeTooSmallError("complete", n, 1);
    std::vector<Edge> e;
    e.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return make_graph(n, e);
}

// K_{a,b}: parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(int a, int b) {
    if (a < 1) throw SizeTooSmallError("complete_bipartite part", a, 1);
    if (b < 1) throw SizeTooSmallError("complete_bipartite part", b, 1);
    std::vector<Edge> e;
    e.reserve(static_cast<std::size_t>(a) * b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) e.emplace_back(u, v);
    return make_graph(a + b, e);
}

enum class Family { Cycle, Star, Path, Complete, CompleteBipartite };

struct FamilySpec {
    Family family;
    int n;       // order (first part size for CompleteBipartite)
    int b = 0;   // second part size, CompleteBipartite only
};

inline Graph make_family(const FamilySpec& s) {
    switch (s.family) {
        case Family::Cycle: return cycle(s.n);
        case Family::Star: return star(s.n);
        case Family::Path: return path(s.n);
        case Family::Complete: return complete(s.n);
        case Family::CompleteBipartite: return complete_bipartite(s.n, s.b);
    }
    throw GraphError("unknown family");
}

inline std::string family_descriptor(const FamilySpec& s) {
    switch (s.family) {
        case Family::Cycle: return "C" + std::to_string(s.n);
        case Family::Star: return "S" + std::to_string(s.n);
        case Family::Path: return "P" + std::to_string(s.n);
        case Family::Complete: return "K" + std::to_string(s.n);
        case Family::CompleteBipartite:
            return "K" + std::to_string(s.n) + "," + std::to_string(s.b);
    }
    throw GraphError("unknown family");
}

// G(n, p): every unordered pair, taken in lexicographic order, gets exactly
// one draw from a std::mt19937_64 seeded with `seed`; the pair becomes an
// edge iff the top 53 bits of the draw fall below p * 2^53. Fully determined
// by (n, p, seed) on any conforming platform, since mt19937_64 output is
// pinned by the standard.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
    if (n < 0) throw GraphError("vertex count must be nonnegative");
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidProbabilityError(p);
    std::mt19937_64 rng(seed);
    const auto threshold = static_cast<std::uint64_t>(p * 9007199254740992.0);  // p * 2^53
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if ((rng() >> 11) < threshold) e.emplace_back(u, v);
        }
    }
    return make_graph(n, e);
}

}  // namespace graphdex

#endif  // GRAPHDEX_GENERATORS_HPP
