#include "wca/lattice.hpp"

#include <algorithm>

namespace wca {

VarLattice::VarLattice(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("lattice needs n >= 2");
    if (n > 250) throw std::invalid_argument("lattice too large (max n = 250)");
    const std::size_t cells = static_cast<std::size_t>(n) * n;
    p_.assign(cells, VarState::Free);
    q_.assign(cells * (n - 1) * (n - 1), VarState::Free);
    vline_nz_.assign(cells * (n - 1), static_cast<std::uint16_t>(n - 1));
    jline_nz_.assign(cells * (n - 1), static_cast<std::uint16_t>(n - 1));
    vline_one_.assign(cells * (n - 1), 0);
    jline_one_.assign(cells * (n - 1), 0);
    prow_nz_.assign(n, static_cast<std::uint16_t>(n));
    pcol_nz_.assign(n, static_cast<std::uint16_t>(n));
}

void VarLattice::bump_p_counters(int u, int i, VarState from, VarState to) {
    bool was_nz = from != VarState::Zero;
    bool is_nz = to != VarState::Zero;
    if (was_nz && !is_nz) {
        --prow_nz_[u - 1];
        --pcol_nz_[i - 1];
        ++p_zero_;
    } else if (!was_nz && is_nz) {
        ++prow_nz_[u - 1];
        ++pcol_nz_[i - 1];
        --p_zero_;
    }
}

void VarLattice::bump_q_counters(int u, int i, int v, int j, VarState from, VarState to) {
    bool was_nz = from != VarState::Zero;
    bool is_nz = to != VarState::Zero;
    int dnz = (was_nz ? -1 : 0) + (is_nz ? 1 : 0);
    int done = (from == VarState::One ? -1 : 0) + (to == VarState::One ? 1 : 0);
    if (dnz != 0) {
        vline_nz_[vline_idx(u, i, v)] += dnz;
        jline_nz_[jline_idx(u, i, j)] += dnz;
        vline_nz_[vline_idx(v, j, u)] += dnz;
        jline_nz_[jline_idx(v, j, i)] += dnz;
        q_zero_canonical_ -= dnz;
    }
    if (done != 0) {
        vline_one_[vline_idx(u, i, v)] += done;
        jline_one_[jline_idx(u, i, j)] += done;
        vline_one_[vline_idx(v, j, u)] += done;
        jline_one_[jline_idx(v, j, i)] += done;
        q_one_canonical_ += done;
    }
}

void VarLattice::set_p(int u, int i, VarState s) {
    VarState& cell = p_[p_idx(u, i)];
    if (cell == s) return;
    bump_p_counters(u, i, cell, s);
    trail_.push_back({0, static_cast<std::uint8_t>(cell), static_cast<std::uint8_t>(u),
                      static_cast<std::uint8_t>(i), 0, 0});
    cell = s;
}

void VarLattice::set_q(int u, int i, int v, int j, VarState s) {
    if (i > j) {
        std::swap(u, v);
        std::swap(i, j);
    }
    VarState& cell = q_[q_idx(u, i, v, j)];
    if (cell == s) return;
    bump_q_counters(u, i, v, j, cell, s);
    trail_.push_back({1, static_cast<std::uint8_t>(cell), static_cast<std::uint8_t>(u),
                      static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(v),
                      static_cast<std::uint8_t>(j)});
    cell = s;
    q_[q_idx(v, j, u, i)] = s;
}

void VarLattice::undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
        const TrailEntry e = trail_.back();
        trail_.pop_back();
        VarState old = static_cast<VarState>(e.old_state);
        if (e.kind == 0) {
            VarState& cell = p_[p_idx(e.u, e.i)];
            bump_p_counters(e.u, e.i, cell, old);
            cell = old;
        } else {
            VarState& cell = q_[q_idx(e.u, e.i, e.v, e.j)];
            bump_q_counters(e.u, e.i, e.v, e.j, cell, old);
            cell = old;
            q_[q_idx(e.v, e.j, e.u, e.i)] = old;
        }
    }
}

VarLattice::Snapshot VarLattice::snapshot() {
    Snapshot s{trail_.size(), next_snapshot_id_++};
    snapshot_stack_.push_back(s.id);
    return s;
}

void VarLattice::restore(const Snapshot& snap) {
    auto it = std::find(snapshot_stack_.begin(), snapshot_stack_.end(), snap.id);
    if (it == snapshot_stack_.end())
        throw std::logic_error("restore: stale snapshot token (already popped)");
    snapshot_stack_.erase(it, snapshot_stack_.end());
    undo_to(snap.trail_size);
}

ExclusionSet VarLattice::cells_in_state(VarState s) const {
    ExclusionSet out;
    for (int u = 1; u <= n_; ++u)
        for (int i = 1; i <= n_; ++i)
            for (int v = 1; v <= n_; ++v) {
                if (v == u) continue;
                for (int j = i + 1; j <= n_; ++j)
                    if (q_[q_idx(u, i, v, j)] == s) out.insert(u, i, v, j);
            }
    return out;
}

} // namespace wca
