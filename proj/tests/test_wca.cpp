#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "wca/exclusion.hpp"
#include "wca/graph.hpp"
#include "wca/oracle.hpp"
#include "wca/wca.hpp"

using namespace wca;

TEST_CASE("verify_cycle") {
    DirectedGraph cyc = directed_cycle_graph(4);
    CHECK(verify_cycle(PermutationMatrix{{1, 2, 3}}, cyc));
    CHECK_FALSE(verify_cycle(PermutationMatrix{{2, 1, 3}}, cyc));
    SUBCASE("missing closing arc") {
        DirectedGraph g(4);
        g.add_arc(4, 1);
        g.add_arc(1, 2);
        g.add_arc(2, 3); // no (3,4)
        g.add_arc(3, 1);
        CHECK_FALSE(verify_cycle(PermutationMatrix{{1, 2, 3}}, g));
    }
    CHECK_FALSE(verify_cycle(PermutationMatrix{{1, 1, 3}}, cyc));
}

TEST_CASE("decide on a unique-cycle instance finds the verified witness") {
    Report rep = decide(directed_cycle_graph(4));
    CHECK(rep.decision.verdict == Verdict::Hamiltonian);
    CHECK(rep.decision.reason == Reason::IntegerSolutionVerified);
    REQUIRE(rep.decision.witness.has_value());
    CHECK(*rep.decision.witness == PermutationMatrix{{1, 2, 3}});
    CHECK(verify_cycle(*rep.decision.witness, directed_cycle_graph(4)));
}

TEST_CASE("decide screens non-strongly-connected inputs") {
    DirectedGraph path(4);
    path.add_arc(1, 2);
    path.add_arc(2, 3);
    path.add_arc(3, 4);
    Report rep = decide(path);
    CHECK(rep.decision.verdict == Verdict::NonHamiltonian);
    CHECK(rep.decision.reason == Reason::NotStronglyConnected);
    CHECK(rep.decided_in_initial_closure);
}

TEST_CASE("decide rejects invalid configuration") {
    SolverConfig cfg;
    cfg.probe_budget = -5;
    CHECK_THROWS_AS(decide(directed_cycle_graph(4), cfg), std::invalid_argument);
}

TEST_CASE("decide on small non-Hamiltonian digraphs") {
    for (const DirectedGraph& g : {testutil::bowtie(), testutil::bowtie_with_pendant()}) {
        REQUIRE(enumerate_hamilton_cycles(g).count() == 0);
        Report rep = decide(g);
        CHECK(rep.decision.verdict == Verdict::NonHamiltonian);
    }
}

TEST_CASE("a fully excluded lattice is immediately infeasible") {
    ExclusionSet all;
    for (int u = 1; u <= 4; ++u)
        for (int i = 1; i <= 4; ++i)
            for (int v = 1; v <= 4; ++v)
                for (int j = i + 1; j <= 4; ++j)
                    if (u != v) all.insert(u, i, v, j);
    REQUIRE(static_cast<long>(all.size()) == total_inducers(4));
    VarLattice lat(4);
    ClosureEngine eng(lat);
    CHECK_FALSE(eng.apply_exclusion(all).consistent);
}

TEST_CASE("seeding the oracle closure settles an instance without probing") {
    DirectedGraph g = testutil::bowtie();
    OracleClosure closure = exact_closure(build_exclusion_set(g), 4);
    SolverConfig cfg;
    cfg.seed_exclusions = &closure.e_bar;
    Report rep = decide(g, cfg);
    CHECK(rep.decision.verdict == Verdict::NonHamiltonian);
    CHECK(rep.decided_in_initial_closure);
    CHECK(rep.probes == 0);
}

TEST_CASE("probe budget exhaustion reports an honest Undecided") {
    SolverConfig cfg;
    cfg.probe_budget = 1;
    Report rep = decide(complete_graph(6), cfg);
    CHECK(rep.decision.verdict == Verdict::Undecided);
    CHECK(rep.decision.reason == Reason::ProbeBudgetExhausted);
    CHECK(rep.budget_exhausted);
}

TEST_CASE("complete graphs") {
    SUBCASE("K4: one nested pin fixes the whole assignment, verified Hamiltonian") {
        Report rep = decide(complete_graph(4));
        CHECK(rep.decision.verdict == Verdict::Hamiltonian);
        REQUIRE(rep.decision.witness.has_value());
        CHECK(verify_cycle(*rep.decision.witness, complete_graph(4)));
        CHECK(rep.e_size_initial == 0);
    }
    SUBCASE("K5: fractional freedom survives, fixpoint undecided") {
        Report rep = decide(complete_graph(5));
        CHECK(rep.decision.verdict == Verdict::Undecided);
        CHECK(rep.decision.reason == Reason::Fixpoint);
        CHECK(rep.deductions == 0);
    }
}

TEST_CASE("verdicts agree with exhaustive enumeration on random instances") {
    std::mt19937 rng(83);
    for (int trial = 0; trial < 20; ++trial) {
        DirectedGraph g = testutil::random_strongly_connected(rng, 4 + trial % 3, 0.45, false);
        const bool has_cycle = enumerate_hamilton_cycles(g).count() > 0;
        SolverConfig cfg;
        cfg.collect_sets = true;
        Report rep = decide(g, cfg);
        if (rep.decision.verdict == Verdict::NonHamiltonian) CHECK_FALSE(has_cycle);
        if (rep.decision.verdict == Verdict::Hamiltonian) {
            CHECK(has_cycle);
            REQUIRE(rep.decision.witness.has_value());
            CHECK(verify_cycle(*rep.decision.witness, g));
        }
        // the weak closure stays inside the exact closure
        const int n = g.vertex_count() - 1;
        OracleClosure closure = exact_closure(build_exclusion_set(g), n);
        for (const Inducer& ind : *rep.e_tilde) CHECK(closure.e_bar.contains(ind));
        CHECK(rep.e_tilde_size >= rep.e_size_initial);
    }
}

TEST_CASE("smallest instances (three vertices) work end to end") {
    Report k3 = decide(complete_graph(3));
    CHECK(k3.decision.verdict == Verdict::Hamiltonian);
    REQUIRE(k3.decision.witness.has_value());
    CHECK(verify_cycle(*k3.decision.witness, complete_graph(3)));
    Report c3 = decide(directed_cycle_graph(3));
    CHECK(c3.decision.verdict == Verdict::Hamiltonian);
}

TEST_CASE("report statistics are internally consistent") {
    SolverConfig cfg;
    cfg.collect_sets = true;
    Report rep = decide(testutil::bowtie(), cfg);
    CHECK(rep.n == 4);
    CHECK(rep.e_tilde_size == static_cast<long>(rep.e_tilde->size()));
    CHECK(rep.f_tilde_size == static_cast<long>(rep.f_tilde->size()));
    CHECK(rep.q_free_final + rep.e_tilde_size == total_inducers(4)); // free = total - zero
    CHECK(rep.wall_time_s >= 0.0);
}
