#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <random>
#include <vector>

#include "wca/lattice.hpp"
#include "wca/model.hpp"

namespace wca {

enum class ClosureResult { Infeasible, FeasibleInteger, FeasibleFractional };
enum class ProbeResult { Refuted, Possible };
enum class InfeasibleCause { None, MatchFailure, PropagationContradiction };

struct PropagationOutcome {
    bool consistent;
    std::size_t changed; // trail entries written by this call; 0 means already at fixpoint
};

/// Views over the lattice: Zero cells are the working exclusion set, One
/// cells the forced set. Both grow monotonically at the committed level.
struct WorkingSets {
    const VarLattice* lattice;
    long e_tilde_size() const { return lattice->q_zero_canonical(); }
    long f_tilde_size() const { return lattice->q_one_canonical(); }
    ExclusionSet e_tilde() const { return lattice->cells_in_state(VarState::Zero); }
    ExclusionSet f_tilde() const { return lattice->cells_in_state(VarState::One); }
};

struct EngineOptions {
    long probe_budget = std::numeric_limits<long>::max();
    bool has_deadline = false;
    std::chrono::steady_clock::time_point deadline{};
    /// Re-sweep from the lexicographic start after every deduction instead of
    /// continuing cyclically. Same fixpoint, more re-probes; kept for
    /// differential testing.
    bool literal_restarts = false;
    std::ostream* trace = nullptr;
    /// Nonzero: process pending propagation events in a seeded random order
    /// instead of FIFO (confluence testing only).
    unsigned shuffle_seed = 0;
};

/// Deduction engine for the doubly-stochastic 0/1 system: every line of a
/// block sums to that block's p variable, p rows/columns sum to one. Runs the
/// Boolean consequences of those sums to a fixpoint, tests the vertex/position
/// screen for a perfect matching, and refutes single-variable assumptions by
/// propagate-and-match probes.
class ClosureEngine {
public:
    ClosureEngine(VarLattice& lattice, EngineOptions options = {});

    // -- propagation ------------------------------------------------------
    void request_p(int u, int i, VarState target);
    void request_q(int u, int i, int v, int j, VarState target);
    /// Processes pending requests to a fixpoint. A conflicting write (any
    /// attempt to flip Zero<->One) reports an inconsistent outcome rather
    /// than throwing: contradictions are the algorithm's primary signal.
    PropagationOutcome propagate();

    PropagationOutcome apply_exclusion(const ExclusionSet& e);

    /// True iff rows 1..n can be perfectly matched to positions through the
    /// non-Zero p screen (augmenting-path search, warm-started).
    bool match_p();

    /// Forces one pair variable to One along with everything that implies:
    /// both p pins, the complementary row/column/block zeroings, then a full
    /// propagation fixpoint. Idempotent on an already-One cell; a Zero cell
    /// is a caller error.
    PropagationOutcome assign_q_one(const Inducer& ind);

    /// Hypothetically fixes ind's cell to the assumed bit, propagates and
    /// match-tests, then restores the lattice. Refuted(1) licenses deducing
    /// Zero; Refuted(0) licenses deducing One.
    ProbeResult probe(const Inducer& ind, int assumed_bit);

    /// The closure loop: match screen, then sweep every free pair variable,
    /// probing both bits and committing the forced value when one side is
    /// refuted, until a full pass deduces nothing.
    ClosureResult implement_closure();
    /// Identical body run on whatever hypothetical state the lattice carries.
    ClosureResult test_assumption() { return implement_closure(); }

    bool integral_p() const;
    PermutationMatrix extract_permutation() const;
    /// The row->position assignment found by the last successful match_p().
    PermutationMatrix matching_permutation() const;

    /// Top-level commitment of a deduced value, with its propagation.
    PropagationOutcome commit_deduction(const Inducer& ind, int value);

    /// Every canonical cell in lexicographic (u,i,v,j) order: the sweep order.
    const std::vector<Inducer>& candidates() {
        build_candidates();
        return candidates_;
    }

    // -- bookkeeping --------------------------------------------------------
    VarLattice& lattice() { return lat_; }
    WorkingSets working_sets() const { return WorkingSets{&lat_}; }
    InfeasibleCause infeasible_cause() const { return cause_; }
    long probes() const { return probes_; }
    long deductions() const { return deductions_; }
    bool stopped() const { return stopped_; } // probe budget or deadline hit
    bool out_of_budget();

    /// Hypothetical scope around run-level assumptions; commits inside the
    /// scope roll back on exit.
    std::size_t push_hypothesis() {
        ++depth_;
        return lat_.mark();
    }
    void pop_hypothesis(std::size_t mark) {
        --depth_;
        pending_.clear();
        lat_.undo_to(mark);
    }

    void log_deduction(const Inducer& ind, int value, const char* via) const;

private:
    struct Request {
        std::uint8_t kind; // 0 = p, 1 = q
        std::uint8_t target;
        std::uint8_t u, i, v, j;
    };

    void apply(const Request& r);
    void on_p_zero(int u, int i);
    void on_p_one(int u, int i);
    void on_q_zero(int u, int i, int v, int j);
    void on_q_one(int u, int i, int v, int j);
    void line_checks_after_loss(int bu, int bi, int pv, int pj);
    int vline_survivor(int bu, int bi, int pv) const;
    int jline_survivor(int bu, int bi, int pj) const;
    bool augment(int row);
    void build_candidates();

    VarLattice& lat_;
    EngineOptions opt_;
    std::vector<Request> pending_;
    std::size_t head_ = 0;
    bool contradiction_ = false;
    InfeasibleCause cause_ = InfeasibleCause::None;
    long probes_ = 0;
    long deductions_ = 0;
    bool stopped_ = false;
    int depth_ = 0;
    std::vector<int> seed_match_;
    std::vector<int> match_row_col_, match_col_row_; // scratch for match_p
    std::vector<std::uint8_t> match_visited_;
    std::vector<Inducer> candidates_; // all canonical cells, lexicographic
    std::mt19937 rng_;
};

} // namespace wca
