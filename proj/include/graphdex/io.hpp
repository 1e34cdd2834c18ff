#ifndef GRAPHDEX_IO_HPP
#define GRAPHDEX_IO_HPP

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "graphdex/errors.hpp"
#include "graphdex/graph.hpp"

namespace graphdex {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::int64_t parse_int(std::string_view tok, int line, const char* what) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw SyntaxError(std::string(what) + " is not an integer: '" + std::string(tok) + "'",
                          line);
    return v;
}

}  // namespace detail

// Text format: optional comment lines (#...) and blank lines anywhere, one
// header line "n m", then exactly m lines "u v". Errors carry the offending
// line number.
inline Graph parse_edge_list(const std::string& text) {
    bool have_header = false;
    int n = 0;
    std::int64_t declared_m = 0;
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) {
            if (pos == text.size()) break;
            eol = text.size();
        }
        std::string_view line(text.data() + pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto tok = detail::split_ws(line);
        if (tok.empty()) continue;
        if (tok.size() != 2) throw SyntaxError("expected two integers", line_no);
        if (!have_header) {
            std::int64_t hn = detail::parse_int(tok[0], line_no, "vertex count");
            declared_m = detail::parse_int(tok[1], line_no, "edge count");
            if (hn < 0) throw SyntaxError("vertex count must be nonnegative", line_no);
            if (hn > INT32_MAX) throw SyntaxError("vertex count too large", line_no);
            if (declared_m < 0) throw SyntaxError("edge count must be nonnegative", line_no);
            n = static_cast<int>(hn);
            have_header = true;
            continue;
        }
        std::int64_t u64 = detail::parse_int(tok[0], line_no, "endpoint");
        std::int64_t v64 = detail::parse_int(tok[1], line_no, "endpoint");
        if (u64 == v64)
            throw LoopEdgeError(static_cast<int>(u64), static_cast<int>(v64), line_no);
        if (u64 < 0 || v64 < 0 || u64 >= n || v64 >= n)
            throw EndpointOutOfRangeError(static_cast<int>(u64), static_cast<int>(v64), n,
                                          line_no);
        int u = static_cast<int>(u64), v = static_cast<int>(v64);
        if (u > v) std::swap(u, v);
        std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
        if (!seen.insert(key).second) throw DuplicateEdgeError(u, v, line_no);
        edges.emplace_back(u, v);
    }
    if (!have_header) throw SyntaxError("missing header line", line_no == 0 ? 1 : line_no);
    if (static_cast<std::int64_t>(edges.size()) != declared_m)
        throw CountMismatchError(declared_m, static_cast<std::int64_t>(edges.size()));
    return make_graph(n, edges);
}

// Canonical form: header, then edges in lexicographic order, no comments.
inline std::string serialize_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + ' ' + std::to_string(g.edge_count()) +
                      '\n';
    for (const Edge& e : g.edges())
        out += std::to_string(e.first) + ' ' + std::to_string(e.second) + '\n';
    return out;
}

// graph6: printable bytes 63..126 carrying 6 bits each (value = byte - 63).
// Header is n itself for n <= 62, or '~' plus three bytes (18 bits) for
// larger n; then the upper triangle of the adjacency matrix in column-major
// order ((0,1),(0,2),(1,2),(0,3),...), most significant bit first, padded
// with zero bits to a byte boundary.
inline Graph parse_graph6(std::string_view s) {
    constexpr std::string_view kPrefix = ">>graph6<<";
    if (s.substr(0, kPrefix.size()) == kPrefix) s.remove_prefix(kPrefix.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    if (s.empty()) throw SyntaxError("empty graph6 string");

    auto sixbits = [&](std::size_t i) -> std::int64_t {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126)
            throw SyntaxError("invalid graph6 character", 0, static_cast<int>(i) + 1);
        return c - 63;
    };

    std::size_t pos;
    std::int64_t n;
    if (s[0] != '~') {
        n = sixbits(0);
        pos = 1;
    } else {
        if (s.size() >= 2 && s[1] == '~')
            throw SyntaxError("graph6 vertex count too large", 0, 2);
        if (s.size() < 4) throw SyntaxError("truncated graph6 header");
        n = (sixbits(1) << 12) | (sixbits(2) << 6) | sixbits(3);
        pos = 4;
    }

    std::int64_t total_bits = n * (n - 1) / 2;
    std::size_t body = static_cast<std::size_t>((total_bits + 5) / 6);
    if (s.size() - pos < body) throw SyntaxError("truncated graph6 body");
    if (s.size() - pos > body)
        throw SyntaxError("trailing data after graph6 body", 0,
                          static_cast<int>(pos + body) + 1);

    std::vector<Edge> edges;
    std::int64_t t = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++t) {
            std::int64_t bits = sixbits(pos + static_cast<std::size_t>(t / 6));
            if ((bits >> (5 - t % 6)) & 1) edges.emplace_back(u, v);
        }
    }
    for (std::int64_t pad = total_bits; pad < static_cast<std::int64_t>(body) * 6; ++pad) {
        std::int64_t bits = sixbits(pos + static_cast<std::size_t>(pad / 6));
        if ((bits >> (5 - pad % 6)) & 1)
            throw SyntaxError("nonzero graph6 padding bits", 0,
                              static_cast<int>(pos + static_cast<std::size_t>(pad / 6)) + 1);
    }
    return make_graph(static_cast<int>(n), edges);
}

inline std::string serialize_graph6(const Graph& g) {
    std::int64_t n = g.vertex_count();
    if (n >= (std::int64_t{1} << 18)) throw GraphError("graph too large for graph6");
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else {
        out += '~';
        out += static_cast<char>(63 + ((n >> 12) & 63));
        out += static_cast<char>(63 + ((n >> 6) & 63));
        out += static_cast<char>(63 + (n & 63));
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out += static_cast<char>(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out += static_cast<char>((acc << (6 - nbits)) + 63);
    return out;
}

}  // namespace graphdex

#endif  // GRAPHDEX_IO_HPP
