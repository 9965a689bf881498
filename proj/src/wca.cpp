#include "wca/wca.hpp"

#include <chrono>

#include "wca/exclusion.hpp"

namespace wca {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::NonHamiltonian: return "NonHamiltonian";
        case Verdict::Hamiltonian: return "Hamiltonian";
        case Verdict::Undecided: return "Undecided";
    }
    return "?";
}

const char* to_string(Reason r) {
    switch (r) {
        case Reason::ExclusionClosedAllInducers: return "ExclusionClosedAllInducers";
        case Reason::MatchFailure: return "MatchFailure";
        case Reason::PropagationContradiction: return "PropagationContradiction";
        case Reason::IntegerSolutionVerified: return "IntegerSolutionVerified";
        case Reason::Fixpoint: return "Fixpoint";
        case Reason::NotStronglyConnected: return "NotStronglyConnected";
        case Reason::ProbeBudgetExhausted: return "ProbeBudgetExhausted";
    }
    return "?";
}

long default_probe_budget(int n) {
    long ln = n;
    return 50L * ln * ln * ln * ln;
}

bool verify_cycle(const PermutationMatrix& p, const DirectedGraph& g) {
    const int n = g.vertex_count() - 1;
    if (p.size() != n || !p.is_valid()) return false;
    std::vector<int> seq = p.visiting_order();
    if (!g.has_arc(n + 1, seq.front())) return false;
    for (int i = 0; i + 1 < n; ++i)
        if (!g.has_arc(seq[i], seq[i + 1])) return false;
    return g.has_arc(seq.back(), n + 1);
}

namespace {

Reason infeasible_reason(const VarLattice& lat, InfeasibleCause cause) {
    if (lat.q_zero_canonical() == lat.total_canonical_cells())
        return Reason::ExclusionClosedAllInducers;
    return cause == InfeasibleCause::MatchFailure ? Reason::MatchFailure
                                                  : Reason::PropagationContradiction;
}

} // namespace

WcaOutcome run_wca(ClosureEngine& eng, bool literal_restarts, bool exhaust_closure) {
    VarLattice& lat = eng.lattice();
    std::optional<PermutationMatrix> deferred_witness; // exhaust mode keeps going

    ClosureResult r = eng.implement_closure();
    if (r == ClosureResult::Infeasible)
        return {Verdict::NonHamiltonian, infeasible_reason(lat, eng.infeasible_cause()), {}, true};
    if (r == ClosureResult::FeasibleInteger)
        return {Verdict::Hamiltonian, Reason::IntegerSolutionVerified, eng.extract_permutation(),
                true};
    if (eng.stopped()) return {Verdict::Undecided, Reason::ProbeBudgetExhausted, {}, false};

    // Nested level: assume each free pair variable at each bit, run the full
    // closure on the hypothetical state, and commit the opposite value when
    // the assumption collapses.
    const auto& cands = eng.candidates();
    const std::size_t total = cands.size();
    std::size_t cursor = 0;
    std::size_t since_deduction = 0;

    // Tests one bit hypothetically; fills `forced` or returns an exit.
    auto test_bit = [&](const Inducer& c, int bit, int& forced,
                        std::optional<WcaOutcome>& exit_now) {
        std::size_t mark = eng.push_hypothesis();
        eng.request_q(c.u, c.i, c.v, c.j, bit ? VarState::One : VarState::Zero);
        ClosureResult inner =
            eng.propagate().consistent ? eng.test_assumption() : ClosureResult::Infeasible;
        if (inner == ClosureResult::FeasibleInteger) {
            PermutationMatrix w = eng.extract_permutation();
            eng.pop_hypothesis(mark);
            if (!exhaust_closure) {
                exit_now =
                    WcaOutcome{Verdict::Hamiltonian, Reason::IntegerSolutionVerified, w, false};
            } else if (!deferred_witness) {
                deferred_witness = w; // keep sweeping; the assumption stands unrefuted
            }
            return;
        }
        eng.pop_hypothesis(mark);
        if (inner == ClosureResult::Infeasible)
            forced = 1 - bit;
        else if (eng.stopped())
            exit_now = WcaOutcome{Verdict::Undecided, Reason::ProbeBudgetExhausted, {}, false};
    };

    auto settle = [&](Reason fallback) -> WcaOutcome {
        if (deferred_witness)
            return {Verdict::Hamiltonian, Reason::IntegerSolutionVerified, deferred_witness,
                    false};
        if (lat.q_zero_canonical() == lat.total_canonical_cells())
            return {Verdict::NonHamiltonian, Reason::ExclusionClosedAllInducers, {}, false};
        return {Verdict::Undecided, fallback, {}, false};
    };

    while (since_deduction < total && lat.q_undecided_count() > 0) {
        if (eng.out_of_budget()) return settle(Reason::ProbeBudgetExhausted);
        const Inducer c = cands[cursor];
        cursor = (cursor + 1) % total;
        ++since_deduction;
        if (lat.q(c.u, c.i, c.v, c.j) != VarState::Free) continue;

        int forced = -1;
        std::optional<WcaOutcome> exit_now;
        test_bit(c, 1, forced, exit_now);
        if (exit_now)
            return exit_now->verdict == Verdict::Undecided ? settle(exit_now->reason) : *exit_now;
        if (forced < 0) {
            test_bit(c, 0, forced, exit_now);
            if (exit_now)
                return exit_now->verdict == Verdict::Undecided ? settle(exit_now->reason)
                                                               : *exit_now;
        }
        if (forced < 0) continue;

        eng.log_deduction(c, forced, forced == 0 ? "assume(1) infeasible" : "assume(0) infeasible");
        if (!eng.commit_deduction(c, forced).consistent)
            return {Verdict::NonHamiltonian,
                    infeasible_reason(lat, InfeasibleCause::PropagationContradiction), {}, false};
        if (!eng.match_p())
            return {Verdict::NonHamiltonian, infeasible_reason(lat, InfeasibleCause::MatchFailure),
                    {}, false};

        // Full restart after a commitment: rerun the closure, then resume the sweep.
        ClosureResult r2 = eng.implement_closure();
        if (r2 == ClosureResult::Infeasible)
            return {Verdict::NonHamiltonian, infeasible_reason(lat, eng.infeasible_cause()), {},
                    false};
        if (r2 == ClosureResult::FeasibleInteger)
            return {Verdict::Hamiltonian, Reason::IntegerSolutionVerified,
                    eng.extract_permutation(), false};
        if (eng.stopped()) return settle(Reason::ProbeBudgetExhausted);
        since_deduction = 0;
        if (literal_restarts) cursor = 0;
    }

    return settle(Reason::Fixpoint);
}

Report decide(const DirectedGraph& g, const SolverConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    Report rep;
    const int n = g.vertex_count() - 1;
    rep.n = n;

    if (cfg.probe_budget < 0) throw std::invalid_argument("probe budget must be positive");
    if (cfg.time_limit_ms < 0) throw std::invalid_argument("time limit must be non-negative");
    const long budget = cfg.probe_budget == 0 ? default_probe_budget(n) : cfg.probe_budget;

    auto finish = [&](Report& r) -> Report& {
        r.wall_time_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return r;
    };

    if (!is_strongly_connected(g)) {
        // A strongly connected instance is a standing assumption; anything
        // else trivially has no closed tour through all vertices.
        rep.decision = {Verdict::NonHamiltonian, Reason::NotStronglyConnected, {}};
        rep.decided_in_initial_closure = true;
        rep.p_free_initial = rep.p_free_final = static_cast<long>(n) * n;
        rep.q_free_initial = rep.q_free_final = total_inducers(n);
        return finish(rep);
    }

    ExclusionSet e = build_exclusion_set(g);
    rep.exclusion_emitted = static_cast<long>(e.size());
    if (cfg.seed_exclusions != nullptr) e.merge(*cfg.seed_exclusions);

    EngineOptions opt;
    opt.probe_budget = budget;
    if (cfg.time_limit_ms > 0) {
        opt.has_deadline = true;
        opt.deadline = t0 + std::chrono::milliseconds(cfg.time_limit_ms);
    }
    opt.literal_restarts = cfg.literal_restarts;
    opt.trace = cfg.trace;

    VarLattice lat(n);
    ClosureEngine eng(lat, opt);
    PropagationOutcome applied = eng.apply_exclusion(e);
    rep.e_size_initial = lat.q_zero_canonical();
    rep.p_free_initial = lat.p_free_count();
    rep.q_free_initial = lat.q_free_count();

    WcaOutcome out;
    if (!applied.consistent)
        out = {Verdict::NonHamiltonian,
               infeasible_reason(lat, InfeasibleCause::PropagationContradiction), {}, true};
    else
        out = run_wca(eng, cfg.literal_restarts, cfg.exhaust_closure);

    if (out.verdict == Verdict::Hamiltonian) {
        if (out.integral && verify_cycle(*out.integral, g)) {
            rep.decision = {Verdict::Hamiltonian, Reason::IntegerSolutionVerified, out.integral};
        } else {
            // An integral screen the graph rejects: report honestly instead
            // of trusting the relaxation.
            rep.decision = {Verdict::Undecided, Reason::Fixpoint, {}};
            rep.witness_rejected = true;
        }
    } else {
        rep.decision = {out.verdict, out.reason, {}};
    }
    rep.decided_in_initial_closure = out.decided_in_initial_closure;
    rep.p_free_final = lat.p_free_count();
    rep.q_free_final = lat.q_free_count();
    rep.e_tilde_size = lat.q_zero_canonical();
    rep.f_tilde_size = lat.q_one_canonical();
    rep.probes = eng.probes();
    rep.deductions = eng.deductions();
    rep.budget_exhausted = eng.stopped();
    if (cfg.collect_sets) {
        rep.e_tilde = lat.cells_in_state(VarState::Zero);
        rep.f_tilde = lat.cells_in_state(VarState::One);
    }
    return finish(rep);
}

} // namespace wca
