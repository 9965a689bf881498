#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wca/model.hpp"

namespace wca {

enum class VarState : std::uint8_t { Free = 0, Zero = 1, One = 2 };

/// Assignment state for the n^2 vertex/position variables p(u,i) and the
/// n^2(n-1)^2/2 pair variables q(u,i,v,j). The q store is mirrored: every
/// logical cell is kept in both of its blocks so block scans are contiguous.
/// The diagonal q(u,i,u,i) is identified with p(u,i) and never stored.
///
/// The lattice records every write on a trail so any prefix of work can be
/// undone exactly; per-line non-zero/one counters are maintained through the
/// same writes, which is what makes the propagation rules cheap to trigger.
/// It performs no deduction itself.
class VarLattice {
public:
    explicit VarLattice(int n);

    int n() const { return n_; }
    long total_canonical_cells() const { return total_inducers(n_); }

    VarState p(int u, int i) const { return p_[p_idx(u, i)]; }
    VarState q(int u, int i, int v, int j) const {
        if (u == v) throw std::invalid_argument("q diagonal blocks do not exist");
        if (i == j) return VarState::Zero; // two vertices cannot share a position
        return q_[q_idx(u, i, v, j)];
    }

    /// Raw writes: caller is responsible for rejecting Zero<->One flips.
    void set_p(int u, int i, VarState s);
    void set_q(int u, int i, int v, int j, VarState s);

    // Aggregate counts (p counted over all n^2 cells, q over canonical cells).
    // "free" follows the reporting convention: anything not Zero.
    long p_free_count() const { return static_cast<long>(n_) * n_ - p_zero_; }
    long q_free_count() const { return total_canonical_cells() - q_zero_canonical_; }
    /// Cells still undecided (excludes One cells, unlike q_free_count).
    long q_undecided_count() const {
        return total_canonical_cells() - q_zero_canonical_ - q_one_canonical_;
    }
    long q_zero_canonical() const { return q_zero_canonical_; }
    long q_one_canonical() const { return q_one_canonical_; }

    // Line counters for block (u,i): over j for a fixed partner vertex v, and
    // over v for a fixed partner position j.
    int vline_nonzero(int u, int i, int v) const { return vline_nz_[vline_idx(u, i, v)]; }
    int vline_one(int u, int i, int v) const { return vline_one_[vline_idx(u, i, v)]; }
    int jline_nonzero(int u, int i, int j) const { return jline_nz_[jline_idx(u, i, j)]; }
    int jline_one(int u, int i, int j) const { return jline_one_[jline_idx(u, i, j)]; }
    int prow_nonzero(int u) const { return prow_nz_[u - 1]; }
    int pcol_nonzero(int i) const { return pcol_nz_[i - 1]; }

    // --- unchecked trail marks (hot path) ------------------------------
    std::size_t mark() const { return trail_.size(); }
    void undo_to(std::size_t mark);

    // --- checked snapshot tokens ----------------------------------------
    struct Snapshot {
        std::size_t trail_size;
        std::uint64_t id;
    };
    Snapshot snapshot();
    /// Undoes everything back to the snapshot, including any snapshots taken
    /// after it. Restoring a token that was already popped is a usage error.
    void restore(const Snapshot& snap);

    /// Materializes the inducers currently in the given state (canonical q
    /// cells only); Zero yields the weak-closure set, One the forced set.
    ExclusionSet cells_in_state(VarState s) const;

    std::size_t trail_size() const { return trail_.size(); }

private:
    friend class ClosureEngine;

    std::size_t p_idx(int u, int i) const {
        return static_cast<std::size_t>(u - 1) * n_ + (i - 1);
    }
    // Partner offsets skip the block's own vertex/position.
    static int off(int x, int excl) { return x < excl ? x - 1 : x - 2; }
    static int unoff(int o, int excl) { return o + 1 < excl ? o + 1 : o + 2; }
    std::size_t q_idx(int u, int i, int v, int j) const {
        return (p_idx(u, i) * (n_ - 1) + off(v, u)) * (n_ - 1) + off(j, i);
    }
    std::size_t vline_idx(int u, int i, int v) const { return p_idx(u, i) * (n_ - 1) + off(v, u); }
    std::size_t jline_idx(int u, int i, int j) const { return p_idx(u, i) * (n_ - 1) + off(j, i); }

    void bump_q_counters(int u, int i, int v, int j, VarState from, VarState to);
    void bump_p_counters(int u, int i, VarState from, VarState to);

    struct TrailEntry {
        std::uint8_t kind; // 0 = p cell, 1 = q cell
        std::uint8_t old_state;
        std::uint8_t u, i, v, j;
    };

    int n_;
    std::vector<VarState> p_;
    std::vector<VarState> q_;
    std::vector<std::uint16_t> vline_nz_, vline_one_, jline_nz_, jline_one_;
    std::vector<std::uint16_t> prow_nz_, pcol_nz_;
    long p_zero_ = 0;
    long q_zero_canonical_ = 0;
    long q_one_canonical_ = 0;
    std::vector<TrailEntry> trail_;
    std::vector<std::uint64_t> snapshot_stack_;
    std::uint64_t next_snapshot_id_ = 1;
};

} // namespace wca
