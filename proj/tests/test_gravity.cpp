#include "doctest.h"

#include <cmath>
#include <set>

#include "grif/generators.hpp"
#include "grif/gravity.hpp"
#include "grif/oracle.hpp"

using namespace grif;

TEST_CASE("init_positions is the identity cloud") {
    const auto x = init_positions(2);
    CHECK(x.at(0, 0) == 1.0);
    CHECK(x.at(1, 0) == 0.0);
    CHECK(x.at(0, 1) == 0.0);
    CHECK(x.at(1, 1) == 1.0);
    CHECK(x.distance(0, 1) == doctest::Approx(std::sqrt(2.0)));
    const auto big = init_positions(5);
    for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = a + 1; b < 5; ++b)
            CHECK(big.distance(a, b) == doctest::Approx(std::sqrt(2.0)));
    CHECK(init_positions(1).at(0, 0) == 1.0);
    CHECK_THROWS_AS(init_positions(0), std::invalid_argument);
}

TEST_CASE("gravity_step") {
    SUBCASE("no edges, no repulsion: nothing moves") {
        GravityParams p;
        p.g1 = 0.0;
        const auto x = init_positions(3);
        const auto y = gravity_step(x, gen::edgeless(3), p);
        CHECK(y.coords == x.coords);
    }
    SUBCASE("single edge, hand-evaluated update") {
        GravityParams p;
        p.g = 1.0;
        p.eps = 0.1;
        p.s = 1.0;
        p.g1 = 0.0;
        Graph g(2);
        g.add_edge(0, 1);
        const auto y = gravity_step(init_positions(2), g, p);
        // x_0' = (1,0) + (0.1 / sqrt(2)) * (-1, 1)
        CHECK(y.at(0, 0) == doctest::Approx(0.9292893).epsilon(1e-5));
        CHECK(y.at(1, 0) == doctest::Approx(0.0707107).epsilon(1e-5));
        CHECK(y.at(0, 1) == doctest::Approx(0.0707107).epsilon(1e-5));
        CHECK(y.at(1, 1) == doctest::Approx(0.9292893).epsilon(1e-5));
    }
    SUBCASE("K3 keeps all pairwise distances equal") {
        GravityParams p;
        auto x = init_positions(3);
        const Graph k3 = gen::complete(3);
        for (int step = 0; step < 25; ++step) x = gravity_step(x, k3, p);
        CHECK(x.distance(0, 1) == doctest::Approx(x.distance(1, 2)));
        CHECK(x.distance(0, 2) == doctest::Approx(x.distance(1, 2)));
    }
    SUBCASE("repulsion pushes non-adjacent vertices apart") {
        GravityParams p;
        p.g1 = 1.0;
        Graph g(3);
        g.add_edge(0, 1);  // 2 is isolated, repelled from both
        auto x = init_positions(3);
        const double before = x.distance(0, 2);
        for (int step = 0; step < 5; ++step) x = gravity_step(x, g, p);
        CHECK(x.distance(0, 2) > before);
    }
}

TEST_CASE("closest_adjacent_pair") {
    SUBCASE("edgeless graph has none") {
        CHECK(!closest_adjacent_pair(init_positions(3), gen::edgeless(3)).has_value());
    }
    SUBCASE("single edge picks that edge") {
        Graph g(3);
        g.add_edge(1, 2);
        const auto pair = closest_adjacent_pair(init_positions(3), g);
        REQUIRE(pair.has_value());
        CHECK(*pair == std::pair<std::size_t, std::size_t>{1, 2});
    }
    SUBCASE("ties break lexicographically") {
        const auto pair = closest_adjacent_pair(init_positions(3), gen::complete(3));
        REQUIRE(pair.has_value());
        CHECK(*pair == std::pair<std::size_t, std::size_t>{0, 1});
    }
}

TEST_CASE("common_neighbors") {
    CHECK(common_neighbors(gen::complete(4), 0, 1) == std::vector<std::size_t>{2, 3});
    CHECK(common_neighbors(gen::path(3), 0, 2) == std::vector<std::size_t>{1});
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    CHECK(common_neighbors(g, 0, 3).empty());
    CHECK_THROWS_AS(common_neighbors(g, 1, 1), std::invalid_argument);
}

TEST_CASE("gravity_clique") {
    GravityParams p;
    SUBCASE("complete graph") {
        CHECK(gravity_clique(gen::complete(4), p) == std::vector<std::size_t>{0, 1, 2, 3});
        CHECK(oracle::max_clique_exact(gen::complete(4)).size() == 4);
    }
    SUBCASE("triangle with a pendant vertex") {
        Graph g(4);
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        g.add_edge(1, 2);
        g.add_edge(0, 3);
        CHECK(gravity_clique(g, p) == std::vector<std::size_t>{0, 1, 2});
        CHECK(oracle::max_clique_exact(g) == std::vector<std::size_t>{0, 1, 2});
    }
    SUBCASE("edgeless graph returns a single vertex") {
        CHECK(gravity_clique(gen::edgeless(3), p) == std::vector<std::size_t>{0});
    }
    SUBCASE("output is always a clique on random graphs") {
        Rng rng(19);
        for (int trial = 0; trial < 30; ++trial) {
            Rng inst = rng.child(trial);
            const Graph g = gen::erdos_renyi(10, 0.3 + 0.05 * (trial % 8), inst);
            const auto clique = gravity_clique(g, p);
            CHECK(is_clique(g, clique));
            CHECK(!clique.empty());
            CHECK(clique.size() <= oracle::max_clique_exact(g).size());
        }
    }
    SUBCASE("parameter validation") {
        GravityParams bad;
        bad.eps = 0.0;
        CHECK_THROWS_AS(gravity_clique(gen::complete(3), bad), std::invalid_argument);
    }
}

TEST_CASE("automorphism equivariance of the dynamics") {
    Rng rng(29);
    SUBCASE("one relabeled step matches exactly up to 1e-9") {
        for (int trial = 0; trial < 10; ++trial) {
            Rng inst = rng.child(trial);
            const Graph g = gen::erdos_renyi(7, 0.5, inst);
            const Permutation pi = Permutation::random(7, inst);
            const Graph h = g.relabel(pi);
            GravityParams p;
            const auto xg = gravity_step(init_positions(7), g, p);
            const auto xh = gravity_step(init_positions(7), h, p);
            // relabeled run: position of pi(j) built from basis vector e_pi(j);
            // compare displacement patterns through the permutation
            for (std::size_t j = 0; j < 7; ++j)
                for (std::size_t i = 0; i < 7; ++i)
                    CHECK(xh.at(pi(i), pi(j)) == doctest::Approx(xg.at(i, j)).epsilon(1e-9));
        }
    }
    SUBCASE("distance multisets agree after many steps") {
        const Graph g = gen::petersen();
        Rng prng(5);
        const Permutation pi = Permutation::random(10, prng);
        const Graph h = g.relabel(pi);
        GravityParams p;
        auto xg = init_positions(10), xh = init_positions(10);
        for (int step = 0; step < 50; ++step) {
            xg = gravity_step(xg, g, p);
            xh = gravity_step(xh, h, p);
        }
        std::multiset<double> dg, dh;
        for (std::size_t a = 0; a < 10; ++a)
            for (std::size_t b = a + 1; b < 10; ++b) {
                dg.insert(std::round(xg.distance(a, b) * 1e9));
                dh.insert(std::round(xh.distance(a, b) * 1e9));
            }
        CHECK(dg == dh);
    }
    SUBCASE("vertex-transitive graphs keep uniform distance multisets per orbit") {
        for (const Graph& g : {gen::cycle(6), gen::complete(5)}) {
            GravityParams p;
            auto x = init_positions(g.vertex_count());
            for (int step = 0; step < 40; ++step) x = gravity_step(x, g, p);
            // edge orbit: all edges equivalent in C_n and K_n
            double first = -1.0;
            for (auto [u, v] : g.edges()) {
                if (first < 0) first = x.distance(u, v);
                CHECK(x.distance(u, v) == doctest::Approx(first).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("attractive-only diameter is non-increasing at small eps") {
    Rng rng(37);
    GravityParams p;
    p.g1 = 0.0;
    p.eps = 0.01;
    for (int trial = 0; trial < 5; ++trial) {
        Rng inst = rng.child(trial);
        const Graph g = gen::erdos_renyi(8, 0.6, inst);
        auto x = init_positions(8);
        auto diameter = [&](const PointCloud& c) {
            double d = 0.0;
            for (std::size_t a = 0; a < 8; ++a)
                for (std::size_t b = a + 1; b < 8; ++b) d = std::max(d, c.distance(a, b));
            return d;
        };
        double prev = diameter(x);
        for (int step = 0; step < 30; ++step) {
            x = gravity_step(x, g, p);
            const double cur = diameter(x);
            CHECK(cur <= prev + 1e-12);
            prev = cur;
        }
    }
}
