#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "wca/closure.hpp"
#include "wca/graph.hpp"
#include "wca/model.hpp"

namespace wca {

enum class Verdict { NonHamiltonian, Hamiltonian, Undecided };

enum class Reason {
    ExclusionClosedAllInducers, // every pair variable deduced Zero
    MatchFailure,               // vertex/position screen lost its perfect matching
    PropagationContradiction,   // an over-constrained cell during propagation
    IntegerSolutionVerified,    // integral extraction passed the cycle check
    Fixpoint,                   // full sweep with no deduction
    NotStronglyConnected,       // screened out before encoding
    ProbeBudgetExhausted,       // probe budget or wall-clock limit hit
};

const char* to_string(Verdict v);
const char* to_string(Reason r);

struct Decision {
    Verdict verdict;
    Reason reason;
    std::optional<PermutationMatrix> witness; // present iff verdict == Hamiltonian
};

struct SolverConfig {
    long probe_budget = 0;  // 0 -> default of 50 * n^4
    long time_limit_ms = 0; // 0 -> none
    bool literal_restarts = false;
    std::ostream* trace = nullptr;
    const ExclusionSet* seed_exclusions = nullptr; // merged into the built set
    bool collect_sets = false;                     // materialize e/f sets in the report
    /// Keep deducing instead of exiting at the first nested integral state;
    /// the verdict is unchanged but the committed sets reach their fixpoint.
    /// For observing the closure on Hamiltonian instances.
    bool exhaust_closure = false;
};

struct Report {
    Decision decision;
    int n = 0; // matrix dimension: vertex count minus one
    long p_free_initial = 0, q_free_initial = 0;
    long p_free_final = 0, q_free_final = 0;
    long exclusion_emitted = 0; // inducers produced by the set construction
    long e_size_initial = 0;    // Zero cells at solver entry (construction + fixpoint)
    long e_tilde_size = 0;      // Zero cells at exit
    long f_tilde_size = 0;      // One cells at exit
    long probes = 0;
    long deductions = 0;
    double wall_time_s = 0.0;
    bool decided_in_initial_closure = false; // settled before any assumption was tested
    bool budget_exhausted = false;
    bool witness_rejected = false; // integral extraction failed the cycle check
    std::optional<ExclusionSet> e_tilde, f_tilde;
};

/// True iff the permutation's cycle (start vertex n+1, then the encoded
/// visiting order, then back) uses only arcs of g.
bool verify_cycle(const PermutationMatrix& p, const DirectedGraph& g);

struct WcaOutcome {
    Verdict verdict;
    Reason reason;
    std::optional<PermutationMatrix> integral; // unverified integral extraction
    bool decided_in_initial_closure = false;
};

/// The deduction loop over an engine whose lattice already carries the
/// instance's exclusion set: closure, then one nested assumption level per
/// free pair variable, restarting after every committed deduction.
WcaOutcome run_wca(ClosureEngine& engine, bool literal_restarts, bool exhaust_closure = false);

/// Full pipeline: connectivity screen, exclusion-set construction, closure
/// solving, witness verification, statistics.
Report decide(const DirectedGraph& g, const SolverConfig& cfg = {});

long default_probe_budget(int n);

} // namespace wca
