#include "doctest.h"

#include "grif/generators.hpp"
#include "grif/oracle.hpp"

using namespace grif;

TEST_CASE("brute_force_isomorphism") {
    SUBCASE("relabeled C4 yields a verified witness") {
        Rng rng(3);
        const Graph c4 = gen::cycle(4);
        const Permutation pi = Permutation::random(4, rng);
        const Graph c4r = c4.relabel(pi);
        const auto w = oracle::brute_force_isomorphism(c4, c4r);
        REQUIRE(w.permutation.has_value());
        for (auto [u, v] : c4.edges()) CHECK(c4r.has_edge((*w.permutation)(u), (*w.permutation)(v)));
    }
    SUBCASE("C6 vs two disjoint triangles: both 2-regular, not isomorphic") {
        Graph triangles(6);
        triangles.add_edge(0, 1);
        triangles.add_edge(1, 2);
        triangles.add_edge(0, 2);
        triangles.add_edge(3, 4);
        triangles.add_edge(4, 5);
        triangles.add_edge(3, 5);
        CHECK(!oracle::brute_force_isomorphism(gen::cycle(6), triangles).permutation.has_value());
    }
    SUBCASE("different edge counts prune instantly") {
        CHECK(!oracle::brute_force_isomorphism(gen::cycle(5), gen::path(5)).permutation.has_value());
    }
    SUBCASE("degree-sequence prune") {
        Graph a(4), b(4);
        a.add_edge(0, 1);
        a.add_edge(2, 3);
        b.add_edge(0, 1);
        b.add_edge(1, 2);
        CHECK(!oracle::brute_force_isomorphism(a, b).permutation.has_value());
    }
    SUBCASE("random relabelings always produce witnesses") {
        Rng rng(13);
        for (int trial = 0; trial < 10; ++trial) {
            const auto [g, h, pi] = gen::random_graph_pair(8, 0.4, 100 + trial);
            CHECK(oracle::brute_force_isomorphism(g, h).permutation.has_value());
        }
    }
}

TEST_CASE("max_clique_exact") {
    SUBCASE("complete graph") {
        CHECK(oracle::max_clique_exact(gen::complete(5)) ==
              std::vector<std::size_t>{0, 1, 2, 3, 4});
    }
    SUBCASE("Petersen graph is triangle-free") {
        CHECK(oracle::max_clique_exact(gen::petersen()).size() == 2);
    }
    SUBCASE("edgeless graph gives a single vertex") {
        CHECK(oracle::max_clique_exact(gen::edgeless(3)).size() == 1);
        CHECK(oracle::max_clique_exact(Graph(0)).empty());
    }
    SUBCASE("agrees with naive subset enumeration on small graphs") {
        Rng rng(17);
        for (int trial = 0; trial < 20; ++trial) {
            Rng inst = rng.child(trial);
            const Graph g = gen::erdos_renyi(8, 0.5, inst);
            std::size_t naive = 0;
            for (unsigned mask = 0; mask < (1u << 8); ++mask) {
                std::vector<std::size_t> vs;
                for (std::size_t v = 0; v < 8; ++v)
                    if (mask & (1u << v)) vs.push_back(v);
                if (is_clique(g, vs)) naive = std::max(naive, vs.size());
            }
            CHECK(oracle::max_clique_exact(g).size() == naive);
        }
    }
}

TEST_CASE("exhaustive_sat") {
    SUBCASE("contradiction") {
        CHECK(!oracle::exhaustive_sat(CnfFormula{1, {{1}, {-1}}}).has_value());
    }
    SUBCASE("lexicographic-first assignment") {
        const auto a = oracle::exhaustive_sat(CnfFormula{2, {{1, 2}}});
        REQUIRE(a.has_value());
        CHECK((*a)[0] == false);
        CHECK((*a)[1] == true);
    }
    SUBCASE("variable limit") {
        CnfFormula f;
        f.num_vars = 25;
        CHECK_THROWS_AS(oracle::exhaustive_sat(f), std::invalid_argument);
    }
    SUBCASE("returned assignments satisfy the formula") {
        Rng rng(19);
        for (int trial = 0; trial < 10; ++trial) {
            Rng inst = rng.child(trial);
            const CnfFormula f = random_cnf_bounded(7, 9, 3, 3, inst);
            const auto a = oracle::exhaustive_sat(f);
            if (a) CHECK(satisfies(f, *a));
        }
    }
}
