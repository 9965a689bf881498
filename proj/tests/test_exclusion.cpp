#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "test_util.hpp"
#include "wca/exclusion.hpp"
#include "wca/graph.hpp"
#include "wca/oracle.hpp"

using namespace wca;

namespace {

// Independent reconstruction of the exclusion set: Floyd-Warshall distances
// recomputed from scratch per deleted arc, loops in a shuffled order.
ExclusionSet reference_exclusion_set(const DirectedGraph& graph, unsigned seed) {
    DirectedGraph g = graph;
    const int n1 = g.vertex_count();
    const int n = n1 - 1;
    std::mt19937 rng(seed);
    ExclusionSet e;

    std::vector<std::pair<int, int>> pairs;
    for (int u = 1; u <= n1; ++u)
        for (int v = 1; v <= n1; ++v)
            if (u != v) pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng);

    for (auto [u, v] : pairs) {
        const int arc = g.has_arc(u, v) ? 1 : 0;
        const int m = with_arc_deleted(g, u, v, [&] { return testutil::floyd_warshall(g)[u][v]; });
        for (int k = arc + 1; k <= m - 1; ++k) {
            if (v == n1) { // missing u -> end path of length k: last slots die
                int pos = n1 - k;
                for (int w = 1; w <= n; ++w)
                    for (int j = 1; j <= n; ++j)
                        if (w != u && j != pos) e.insert(w, j, u, pos);
            } else if (u == n1) { // missing start -> v path: first slots die
                for (int w = 1; w <= n; ++w)
                    for (int i = 1; i <= n; ++i)
                        if (w != v && i != k) e.insert(v, k, w, i);
            } else {
                for (int l = 1; l + k <= n; ++l) e.insert(u, l, v, l + k);
            }
        }
    }
    return e;
}

} // namespace

TEST_CASE("complete instances exclude nothing") {
    CHECK(build_exclusion_set(complete_graph(5)).empty());
    CHECK(build_exclusion_set(complete_graph(4)).empty());
}

TEST_CASE("petersen exclusion counts match the published run") {
    DirectedGraph g = petersen_graph();
    ExclusionSet e = build_exclusion_set(g);
    CHECK(e.size() == 2592 - 858);
    VarLattice lat(9);
    ClosureEngine eng(lat);
    CHECK(apply_exclusion(e, eng).consistent);
    auto [p_free, q_free] = count_free(lat);
    CHECK(p_free == 57);
    CHECK(q_free == 858);
}

TEST_CASE("construction agrees with a shuffled independent rebuild") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 10; ++trial) {
        DirectedGraph g = testutil::random_strongly_connected(rng, 5 + trial % 4, 0.45, false);
        ExclusionSet a = build_exclusion_set(g);
        CHECK(a == reference_exclusion_set(g, 1000 + trial));
        CHECK(a == build_exclusion_set(g)); // deterministic
    }
    CHECK(build_exclusion_set(petersen_graph()) ==
          reference_exclusion_set(petersen_graph(), 99));
}

TEST_CASE("every missing arc contributes all consecutive-position pairs") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 10; ++trial) {
        DirectedGraph g = testutil::random_strongly_connected(rng, 6, 0.5, false);
        const int n = g.vertex_count() - 1;
        ExclusionSet e = build_exclusion_set(g);
        for (int u = 1; u <= n; ++u)
            for (int v = 1; v <= n; ++v) {
                if (u == v || g.has_arc(u, v)) continue;
                for (int l = 1; l < n; ++l) CHECK(e.contains(canonical_inducer(u, l, v, l + 1)));
            }
    }
}

TEST_CASE("essential arcs exclude the complementary offsets") {
    // In the directed 4-cycle, deleting (2,3) disconnects 2 from 3, so the
    // pair may only sit one position apart.
    ExclusionSet e = build_exclusion_set(directed_cycle_graph(4));
    CHECK(e.contains(canonical_inducer(2, 1, 3, 3)));
    // the one surviving assignment of the unique tour is never excluded
    CHECK_FALSE(e.contains(canonical_inducer(1, 1, 2, 2)));
    CHECK_FALSE(e.contains(canonical_inducer(2, 2, 3, 3)));
}

TEST_CASE("exclusion soundness: no excluded pair occurs in any cycle cover") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 12; ++trial) {
        DirectedGraph g = testutil::random_strongly_connected(rng, 4 + trial % 4, 0.5, false);
        const int n = g.vertex_count() - 1;
        ExclusionSet e = build_exclusion_set(g);
        PermSet cycles = enumerate_hamilton_cycles(g);
        for_each_permutation(n, [&](const PermutationMatrix& p, long rank) {
            if (!cycles.test(rank)) return;
            for (const Inducer& ind : inducers_of(p)) CHECK_FALSE(e.contains(ind));
        });
    }
}

TEST_CASE("apply_exclusion") {
    SUBCASE("empty set changes nothing") {
        VarLattice lat(3);
        ClosureEngine eng(lat);
        CHECK(apply_exclusion(ExclusionSet{}, eng).consistent);
        CHECK(lat.q_free_count() == 18);
        CHECK(lat.p_free_count() == 9);
    }
    SUBCASE("single member zeroes exactly one cell") {
        VarLattice lat(4);
        ClosureEngine eng(lat);
        ExclusionSet e;
        e.insert(1, 1, 2, 2);
        CHECK(apply_exclusion(e, eng).consistent);
        CHECK(lat.q_free_count() == lat.total_canonical_cells() - 1);
        CHECK(lat.q(1, 1, 2, 2) == VarState::Zero);
    }
    SUBCASE("excluding a forced pair is a contradiction signal") {
        VarLattice lat(4);
        ClosureEngine eng(lat);
        REQUIRE(eng.assign_q_one(canonical_inducer(1, 1, 2, 2)).consistent);
        ExclusionSet e;
        e.insert(1, 1, 2, 2);
        CHECK_FALSE(apply_exclusion(e, eng).consistent);
    }
}

TEST_CASE("count_free on a fresh lattice") {
    VarLattice lat(3);
    auto [p_free, q_free] = count_free(lat);
    CHECK(p_free == 9);
    CHECK(q_free == 18);
    SUBCASE("complete instance excludes nothing, so counts stay full") {
        VarLattice lat4(4);
        ClosureEngine eng(lat4);
        REQUIRE(apply_exclusion(build_exclusion_set(complete_graph(5)), eng).consistent);
        auto [p4, q4] = count_free(lat4);
        CHECK(p4 == 16);
        CHECK(q4 == 72);
    }
}

TEST_CASE("non-isomorphism exclusions") {
    SUBCASE("identical complete graphs exclude nothing") {
        CHECK(build_noniso_exclusion(complete_graph(3), complete_graph(3)).empty());
    }
    SUBCASE("directed triangle against the empty graph, by enumeration") {
        DirectedGraph g = directed_cycle_graph(3);
        DirectedGraph h(3); // no arcs
        ExclusionSet e = build_noniso_exclusion(g, h);
        ExclusionSet brute;
        for (int u = 1; u <= 3; ++u)
            for (int v = 1; v <= 3; ++v)
                for (int i = 1; i <= 3; ++i)
                    for (int j = 1; j <= 3; ++j)
                        if (u != v && i != j && g.has_arc(u, v) && !h.has_arc(i, j))
                            brute.insert(u, i, v, j);
        CHECK(e == brute);
        CHECK(e.size() == 18);
    }
    SUBCASE("arcs that map onto arcs are not excluded") {
        DirectedGraph g(3), h(3);
        g.add_arc(1, 2);
        h.add_arc(1, 2);
        ExclusionSet e = build_noniso_exclusion(g, h);
        CHECK_FALSE(e.contains(canonical_inducer(1, 1, 2, 2)));
        CHECK(e.contains(canonical_inducer(1, 1, 2, 3)));
    }
    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS(build_noniso_exclusion(complete_graph(3), complete_graph(4)),
                        std::invalid_argument);
    }
}

TEST_CASE("exclusion set text round-trip") {
    std::mt19937 rng(61);
    DirectedGraph g = testutil::random_strongly_connected(rng, 6, 0.4, false);
    ExclusionSet e = build_exclusion_set(g);
    std::stringstream buf;
    write_exclusion_set(buf, e);
    CHECK(read_exclusion_set(buf, 5) == e);
    SUBCASE("rejects malformed rows") {
        std::stringstream bad("1 2 3\n");
        CHECK_THROWS_AS(read_exclusion_set(bad, 5), ParseError);
        std::stringstream self("1 2 1 3\n");
        CHECK_THROWS_AS(read_exclusion_set(self, 5), ParseError);
        std::stringstream range("1 2 9 3\n");
        CHECK_THROWS_AS(read_exclusion_set(range, 5), ParseError);
    }
}
