#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>

#include "corpus.hpp"
#include "graphdex/graphdex.hpp"

using namespace graphdex;

TEST_CASE("make_graph canonicalizes and validates", "[graph]") {
    Graph g = make_graph(4, {{3, 1}, {2, 0}, {0, 1}});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(1, 0));
    CHECK(g.has_edge(3, 1));
    CHECK_FALSE(g.has_edge(0, 3));
    CHECK_FALSE(g.has_edge(2, 2));

    CHECK_THROWS_AS(make_graph(3, {{1, 1}}), LoopEdgeError);
    CHECK_THROWS_AS(make_graph(3, {{0, 3}}), EndpointOutOfRangeError);
    CHECK_THROWS_AS(make_graph(3, {{-1, 0}}), EndpointOutOfRangeError);
    // same unordered pair in either orientation
    CHECK_THROWS_AS(make_graph(4, {{0, 1}, {1, 0}}), DuplicateEdgeError);
    CHECK_THROWS_AS(make_graph(4, {{0, 1}, {0, 1}}), DuplicateEdgeError);

    try {
        make_graph(3, {{0, 1}, {2, 2}});
        FAIL("expected LoopEdgeError");
    } catch (const LoopEdgeError& e) {
        CHECK(e.u == 2);
        CHECK(e.v == 2);
    }
}

TEST_CASE("degree sum is twice the edge count", "[graph]") {
    for (const auto& [name, g] : test::corpus()) {
        INFO(name);
        auto d = degrees(g);
        CHECK(std::accumulate(d.begin(), d.end(), std::int64_t{0}) == 2 * g.edge_count());
    }
}

TEST_CASE("spec'd degree sequences", "[graph]") {
    CHECK(degrees(cycle(4)) == DegreeSequence{2, 2, 2, 2});
    CHECK(degrees(star(4)) == DegreeSequence{3, 1, 1, 1});
    CHECK(degrees(complete(4)) == DegreeSequence{3, 3, 3, 3});
    CHECK(degrees(make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})) ==
          DegreeSequence{4, 1, 1, 1, 1});
}

TEST_CASE("complement pairs", "[graph]") {
    auto collect = [](const Graph& g) {
        std::vector<Edge> out;
        for (const Edge& p : complement_pairs(g)) out.push_back(p);
        return out;
    };

    CHECK(collect(complete(4)).empty());
    CHECK(collect(cycle(4)) == std::vector<Edge>{{0, 2}, {1, 3}});
    CHECK(collect(cycle(5)).size() == 5);
    CHECK(collect(make_graph(0, {})).empty());
    CHECK(collect(make_graph(1, {})).empty());
    CHECK(collect(make_graph(2, {})) == std::vector<Edge>{{0, 1}});

    // edges and complement pairs partition all unordered pairs
    for (const auto& [name, g] : test::corpus()) {
        INFO(name);
        std::set<Edge> all;
        for (const Edge& e : g.edges()) all.insert(e);
        std::size_t edge_count = all.size();
        std::int64_t comp = 0;
        Edge prev{-1, -1};
        for (const Edge& p : complement_pairs(g)) {
            CHECK(prev < p);  // strictly increasing, hence no duplicates
            prev = p;
            CHECK(all.insert(p).second);
            ++comp;
        }
        std::int64_t n = g.vertex_count();
        CHECK(comp == complement_pairs(g).size());
        CHECK(static_cast<std::int64_t>(all.size()) ==
              static_cast<std::int64_t>(edge_count) + comp);
        CHECK(static_cast<std::int64_t>(all.size()) == n * (n - 1) / 2);
    }
}

TEST_CASE("connectivity", "[graph]") {
    CHECK(is_connected(cycle(6)));
    CHECK(is_connected(make_graph(1, {})));
    CHECK(is_connected(make_graph(0, {})));
    CHECK_FALSE(is_connected(make_graph(2, {})));
    CHECK_FALSE(is_connected(make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})));
    CHECK_FALSE(is_connected(make_graph(5, {{0, 1}, {1, 2}, {0, 2}})));
}
