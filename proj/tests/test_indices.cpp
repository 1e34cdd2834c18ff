#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "corpus.hpp"
#include "graphdex/graphdex.hpp"

using namespace graphdex;

TEST_CASE("index values on the small named graphs", "[indices]") {
    Graph c4 = cycle(4), s4 = star(4), k4 = complete(4);

    CHECK(m1(c4) == 16);
    CHECK(m1(s4) == 12);
    CHECK(m1(k4) == 36);

    CHECK(m2(c4) == 16);
    CHECK(m2(s4) == 9);
    CHECK(m2(k4) == 54);

    CHECK(f_index(c4) == 32);
    CHECK(f_index(s4) == 30);
    CHECK(f_index(k4) == 108);
    for (int n = 3; n <= 10; ++n) CHECK(f_index(cycle(n)) == 8 * n);
    CHECK(f_index(star(5)) == 68);

    CHECK(f_coindex_direct(k4) == 0);
    CHECK(f_coindex_direct(complete(7)) == 0);
    CHECK(f_coindex_direct(c4) == 16);
    CHECK(f_coindex_direct(cycle(5)) == 40);

    CHECK(rezg3(c4) == 64);
    CHECK(rezg3(s4) == 36);
    CHECK(rezg3(k4) == 324);
    for (int n = 3; n <= 10; ++n) CHECK(rezg3(cycle(n)) == 16 * n);

    CHECK(xi4(c4) == 64);
    CHECK(xi4(s4) == 84);
    CHECK(xi4(k4) == 324);

    IndexReport k2 = report(complete(2));
    CHECK(k2.m1 == 2);
    CHECK(k2.m2 == 1);
    CHECK(k2.f == 2);
    CHECK(k2.f_coindex == 0);
    CHECK(k2.rezg3 == 2);
    CHECK(k2.xi4 == 2);

    IndexReport empty5 = report(make_graph(5, {}));
    CHECK(empty5.m1 + empty5.m2 + empty5.f + empty5.f_coindex + empty5.rezg3 + empty5.xi4 == 0);
}

TEST_CASE("vertex-sum and edge-sum forms agree", "[indices]") {
    for (const auto& [name, g] : test::corpus()) {
        INFO(name);
        CHECK(m1(g) == m1_edge_sum(g));
        CHECK(f_index(g) == f_index_edge_sum(g));
        CHECK(xi4(g) == xi4_edge_sum(g));
    }
}

TEST_CASE("coindex identity holds against direct enumeration", "[indices]") {
    for (const auto& [name, g] : test::corpus()) {
        INFO(name);
        std::int64_t n = g.vertex_count();
        CHECK(f_coindex_direct(g) == (n - 1) * m1(g) - f_index(g));
    }
}

TEST_CASE("indices are invariant under relabeling", "[indices]") {
    std::mt19937_64 rng(99);
    for (const auto& [name, g] : test::corpus()) {
        INFO(name);
        int n = g.vertex_count();
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> relabeled;
        for (const Edge& e : g.edges())
            relabeled.emplace_back(perm[static_cast<std::size_t>(e.first)],
                                   perm[static_cast<std::size_t>(e.second)]);
        Graph h = make_graph(n, relabeled);

        IndexReport a = report(g), b = report(h);
        CHECK(a.m1 == b.m1);
        CHECK(a.m2 == b.m2);
        CHECK(a.f == b.f);
        CHECK(a.f_coindex == b.f_coindex);
        CHECK(a.rezg3 == b.rezg3);
        CHECK(a.xi4 == b.xi4);
    }
}

TEST_CASE("index arithmetic is overflow-checked", "[indices]") {
    // a single vertex of degree ~2^16 pushes xi4 past 2^63
    int n = 70000;
    std::vector<Edge> e;
    e.reserve(static_cast<std::size_t>(n) - 1);
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    Graph big_star = make_graph(n, e);
    CHECK_THROWS_AS(xi4(big_star), OverflowError);
    CHECK(f_index(big_star) > 0);  // cube still fits
}
