#pragma once

#include <string>
#include <utility>
#include <vector>

#include "graphdex/graphdex.hpp"

namespace graphdex::test {

// Mixed corpus: named families, degenerate graphs, awkward shapes
// (disconnected, isolated vertices), and a deterministic random batch.
// Small enough that full cross-checks over it stay fast.
inline const std::vector<std::pair<std::string, Graph>>& corpus() {
    static const std::vector<std::pair<std::string, Graph>> graphs = [] {
        std::vector<std::pair<std::string, Graph>> out;
        out.emplace_back("N0", make_graph(0, {}));
        out.emplace_back("N1", make_graph(1, {}));
        out.emplace_back("E5", make_graph(5, {}));
        out.emplace_back("K2", complete(2));
        for (int n = 3; n <= 8; ++n) out.emplace_back("C" + std::to_string(n), cycle(n));
        for (int n = 2; n <= 8; ++n) out.emplace_back("S" + std::to_string(n), star(n));
        for (int n = 2; n <= 8; ++n) out.emplace_back("P" + std::to_string(n), path(n));
        for (int n = 3; n <= 7; ++n) out.emplace_back("K" + std::to_string(n), complete(n));
        out.emplace_back("K2,3", complete_bipartite(2, 3));
        out.emplace_back("K3,3", complete_bipartite(3, 3));
        out.emplace_back("2xC3", make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}));
        out.emplace_back("C3+2iso", make_graph(5, {{0, 1}, {1, 2}, {0, 2}}));
        out.emplace_back("S4+K2", make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {4, 5}}));
        for (int i = 0; i < 12; ++i) {
            double p = i % 3 == 0 ? 0.25 : i % 3 == 1 ? 0.5 : 0.8;
            out.emplace_back("R" + std::to_string(i),
                             random_graph(4 + i % 7, p, 1000 + static_cast<std::uint64_t>(i)));
        }
        return out;
    }();
    return graphs;
}

}  // namespace graphdex::test
