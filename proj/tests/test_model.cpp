#include <doctest.h>

#include <set>

#include "test_util.hpp"
#include "wca/model.hpp"
#include "wca/oracle.hpp"

using namespace wca;

TEST_CASE("canonical inducers") {
    CHECK(canonical_inducer(2, 3, 1, 1) == Inducer{1, 1, 2, 3});
    CHECK(canonical_inducer(1, 1, 2, 3) == Inducer{1, 1, 2, 3});
    CHECK_THROWS_AS(canonical_inducer(1, 2, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(canonical_inducer(1, 2, 3, 2), std::invalid_argument);
    SUBCASE("orientation symmetry on random quadruples") {
        std::mt19937 rng(3);
        std::uniform_int_distribution<int> pick(1, 9);
        for (int t = 0; t < 200; ++t) {
            int u = pick(rng), i = pick(rng), v = pick(rng), j = pick(rng);
            if (u == v || i == j) continue;
            CHECK(canonical_inducer(u, i, v, j) == canonical_inducer(v, j, u, i));
            CHECK(canonical_inducer(u, i, v, j).i < canonical_inducer(u, i, v, j).j);
        }
    }
}

TEST_CASE("total inducer counts") {
    CHECK(total_inducers(3) == 18);
    CHECK(total_inducers(4) == 72);
    CHECK(total_inducers(9) == 2592);
    CHECK_THROWS_AS(total_inducers(1), std::invalid_argument);
}

TEST_CASE("exclusion set insertion is idempotent and canonical") {
    ExclusionSet e;
    CHECK(e.insert(2, 3, 1, 1));
    CHECK_FALSE(e.insert(1, 1, 2, 3));
    CHECK(e.size() == 1);
    CHECK(e.contains(Inducer{1, 1, 2, 3}));
}

TEST_CASE("permutation covers") {
    SUBCASE("identity on three vertices") {
        PermutationMatrix id{{1, 2, 3}};
        ExclusionSet cover = inducers_of(id);
        CHECK(cover.size() == 3);
        CHECK(cover.contains(Inducer{1, 1, 2, 2}));
        CHECK(cover.contains(Inducer{1, 1, 3, 3}));
        CHECK(cover.contains(Inducer{2, 2, 3, 3}));
    }
    SUBCASE("cover size is n(n-1)/2") {
        CHECK(inducers_of(PermutationMatrix{{2, 4, 1, 3}}).size() == 6);
    }
    SUBCASE("explicit expansion of (2,3,1)") {
        ExclusionSet cover = inducers_of(PermutationMatrix{{2, 3, 1}});
        CHECK(cover.contains(Inducer{1, 2, 2, 3}));
        CHECK(cover.contains(Inducer{3, 1, 1, 2}));
        CHECK(cover.contains(Inducer{3, 1, 2, 3}));
    }
    SUBCASE("distinct permutations have distinct covers") {
        std::vector<ExclusionSet> seen;
        for_each_permutation(4, [&](const PermutationMatrix& p, long) {
            auto cover = inducers_of(p);
            for (const auto& other : seen) CHECK(other != cover);
            seen.push_back(cover);
        });
        CHECK(seen.size() == 24);
    }
}

TEST_CASE("cycle encoding") {
    CHECK(cycle_to_permutation({4, 1, 2, 3, 4}, 3) == PermutationMatrix{{1, 2, 3}});
    SUBCASE("reversed traversal") {
        PermutationMatrix p = cycle_to_permutation({4, 3, 2, 1, 4}, 3);
        CHECK(p.position_of(3) == 1);
        CHECK(p.position_of(2) == 2);
        CHECK(p.position_of(1) == 3);
    }
    CHECK_THROWS_AS(cycle_to_permutation({4, 1, 1, 3, 4}, 3), std::invalid_argument);
    CHECK_THROWS_AS(cycle_to_permutation({4, 1, 2, 3}, 3), std::invalid_argument);
    CHECK_THROWS_AS(cycle_to_permutation({1, 2, 3, 4, 1}, 3), std::invalid_argument);
    SUBCASE("visiting_order inverts the encoding") {
        PermutationMatrix p = cycle_to_permutation({4, 2, 3, 1, 4}, 3);
        CHECK(p.visiting_order() == std::vector<int>{2, 3, 1});
    }
}
