#include "wca/closure.hpp"

#include <ostream>

namespace wca {

ClosureEngine::ClosureEngine(VarLattice& lattice, EngineOptions options)
    : lat_(lattice), opt_(options), rng_(options.shuffle_seed) {
    seed_match_.assign(lat_.n() + 1, 0);
    pending_.reserve(1024);
}

void ClosureEngine::request_p(int u, int i, VarState target) {
    pending_.push_back({0, static_cast<std::uint8_t>(target), static_cast<std::uint8_t>(u),
                        static_cast<std::uint8_t>(i), 0, 0});
}

void ClosureEngine::request_q(int u, int i, int v, int j, VarState target) {
    pending_.push_back({1, static_cast<std::uint8_t>(target), static_cast<std::uint8_t>(u),
                        static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(v),
                        static_cast<std::uint8_t>(j)});
}

PropagationOutcome ClosureEngine::propagate() {
    const std::size_t start = lat_.trail_size();
    contradiction_ = false;
    while (head_ < pending_.size() && !contradiction_) {
        Request r;
        if (opt_.shuffle_seed != 0) {
            // Randomized processing order; the fixpoint is order-independent
            // and the confluence tests lean on this switch.
            std::uniform_int_distribution<std::size_t> pick(head_, pending_.size() - 1);
            std::size_t at = pick(rng_);
            std::swap(pending_[at], pending_[head_]);
        }
        r = pending_[head_++];
        apply(r);
    }
    pending_.clear();
    head_ = 0;
    return {!contradiction_, lat_.trail_size() - start};
}

void ClosureEngine::apply(const Request& r) {
    const VarState target = static_cast<VarState>(r.target);
    if (r.kind == 0) {
        VarState cur = lat_.p(r.u, r.i);
        if (cur == target) return;
        if (cur != VarState::Free) { // Zero<->One flip: over-constrained cell
            contradiction_ = true;
            return;
        }
        lat_.set_p(r.u, r.i, target);
        if (target == VarState::Zero)
            on_p_zero(r.u, r.i);
        else
            on_p_one(r.u, r.i);
    } else {
        VarState cur = lat_.q(r.u, r.i, r.v, r.j);
        if (cur == target) return;
        if (cur != VarState::Free) {
            contradiction_ = true;
            return;
        }
        lat_.set_q(r.u, r.i, r.v, r.j, target);
        int u = r.u, i = r.i, v = r.v, j = r.j;
        if (i > j) { // canonical orientation for the consequence scans
            std::swap(u, v);
            std::swap(i, j);
        }
        if (target == VarState::Zero)
            on_q_zero(u, i, v, j);
        else
            on_q_one(u, i, v, j);
    }
}

int ClosureEngine::vline_survivor(int bu, int bi, int pv) const {
    for (int j = 1; j <= lat_.n(); ++j)
        if (j != bi && lat_.q(bu, bi, pv, j) != VarState::Zero) return j;
    return 0;
}

int ClosureEngine::jline_survivor(int bu, int bi, int pj) const {
    for (int v = 1; v <= lat_.n(); ++v)
        if (v != bu && lat_.q(bu, bi, v, pj) != VarState::Zero) return v;
    return 0;
}

// After a cell of block (bu,bi) went Zero: its vertex line pv and position
// line pj may now be empty (forcing the block's p to Zero) or, under a One
// p, reduced to a single survivor that must carry the whole line sum.
void ClosureEngine::line_checks_after_loss(int bu, int bi, int pv, int pj) {
    const VarState own = lat_.p(bu, bi);
    if (own == VarState::Zero) return; // dead block, nothing left to deduce
    int nz = lat_.vline_nonzero(bu, bi, pv);
    if (nz == 0) {
        request_p(bu, bi, VarState::Zero);
    } else if (nz == 1 && own == VarState::One && lat_.vline_one(bu, bi, pv) == 0) {
        request_q(bu, bi, pv, vline_survivor(bu, bi, pv), VarState::One);
    }
    nz = lat_.jline_nonzero(bu, bi, pj);
    if (nz == 0) {
        request_p(bu, bi, VarState::Zero);
    } else if (nz == 1 && own == VarState::One && lat_.jline_one(bu, bi, pj) == 0) {
        request_q(bu, bi, jline_survivor(bu, bi, pj), pj, VarState::One);
    }
}

void ClosureEngine::on_q_zero(int u, int i, int v, int j) {
    line_checks_after_loss(u, i, v, j);
    line_checks_after_loss(v, j, u, i);
}

void ClosureEngine::on_q_one(int u, int i, int v, int j) {
    // Both pins are forced, and a One exhausts all four lines through it.
    request_p(u, i, VarState::One);
    request_p(v, j, VarState::One);
    const int n = lat_.n();
    for (int j2 = 1; j2 <= n; ++j2)
        if (j2 != i && j2 != j && lat_.q(u, i, v, j2) != VarState::Zero)
            request_q(u, i, v, j2, VarState::Zero);
    for (int v2 = 1; v2 <= n; ++v2)
        if (v2 != u && v2 != v && lat_.q(u, i, v2, j) != VarState::Zero)
            request_q(u, i, v2, j, VarState::Zero);
    for (int i2 = 1; i2 <= n; ++i2)
        if (i2 != j && i2 != i && lat_.q(v, j, u, i2) != VarState::Zero)
            request_q(v, j, u, i2, VarState::Zero);
    for (int u2 = 1; u2 <= n; ++u2)
        if (u2 != v && u2 != u && lat_.q(v, j, u2, i) != VarState::Zero)
            request_q(v, j, u2, i, VarState::Zero);
}

void ClosureEngine::on_p_zero(int u, int i) {
    const int n = lat_.n();
    int rn = lat_.prow_nonzero(u);
    if (rn == 0) {
        contradiction_ = true; // no position left for vertex u
        return;
    }
    if (rn == 1) {
        for (int i2 = 1; i2 <= n; ++i2)
            if (lat_.p(u, i2) != VarState::Zero) {
                request_p(u, i2, VarState::One);
                break;
            }
    }
    int cn = lat_.pcol_nonzero(i);
    if (cn == 0) {
        contradiction_ = true;
        return;
    }
    if (cn == 1) {
        for (int u2 = 1; u2 <= n; ++u2)
            if (lat_.p(u2, i) != VarState::Zero) {
                request_p(u2, i, VarState::One);
                break;
            }
    }
    // A dead p empties its whole block.
    for (int v = 1; v <= n; ++v) {
        if (v == u) continue;
        for (int j = 1; j <= n; ++j)
            if (j != i && lat_.q(u, i, v, j) != VarState::Zero)
                request_q(u, i, v, j, VarState::Zero);
    }
}

void ClosureEngine::on_p_one(int u, int i) {
    const int n = lat_.n();
    for (int i2 = 1; i2 <= n; ++i2)
        if (i2 != i && lat_.p(u, i2) != VarState::Zero) request_p(u, i2, VarState::Zero);
    for (int u2 = 1; u2 <= n; ++u2)
        if (u2 != u && lat_.p(u2, i) != VarState::Zero) request_p(u2, i, VarState::Zero);
    // Each line of this block now sums to exactly one.
    for (int v = 1; v <= n; ++v) {
        if (v == u) continue;
        int nz = lat_.vline_nonzero(u, i, v);
        if (nz == 0) {
            contradiction_ = true;
            return;
        }
        if (nz == 1 && lat_.vline_one(u, i, v) == 0)
            request_q(u, i, v, vline_survivor(u, i, v), VarState::One);
    }
    for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        int nz = lat_.jline_nonzero(u, i, j);
        if (nz == 0) {
            contradiction_ = true;
            return;
        }
        if (nz == 1 && lat_.jline_one(u, i, j) == 0)
            request_q(u, i, jline_survivor(u, i, j), j, VarState::One);
    }
}

PropagationOutcome ClosureEngine::apply_exclusion(const ExclusionSet& e) {
    for (const Inducer& ind : e) {
        if (lat_.q(ind.u, ind.i, ind.v, ind.j) == VarState::One) {
            contradiction_ = true; // excluded pair already forced to One
            pending_.clear();
            head_ = 0;
            return {false, 0};
        }
        request_q(ind.u, ind.i, ind.v, ind.j, VarState::Zero);
    }
    return propagate();
}

bool ClosureEngine::augment(int row) {
    const int n = lat_.n();
    for (int c = 1; c <= n; ++c) {
        if (match_visited_[c] || lat_.p(row, c) == VarState::Zero) continue;
        match_visited_[c] = 1;
        if (match_col_row_[c] == 0 || augment(match_col_row_[c])) {
            match_col_row_[c] = row;
            match_row_col_[row] = c;
            return true;
        }
    }
    return false;
}

bool ClosureEngine::match_p() {
    const int n = lat_.n();
    match_row_col_ = seed_match_;
    match_col_row_.assign(n + 1, 0);
    for (int r = 1; r <= n; ++r) {
        int c = match_row_col_[r];
        if (c != 0 && lat_.p(r, c) != VarState::Zero && match_col_row_[c] == 0)
            match_col_row_[c] = r;
        else
            match_row_col_[r] = 0;
    }
    match_visited_.assign(n + 1, 0);
    for (int r = 1; r <= n; ++r) {
        if (match_row_col_[r] != 0) continue;
        std::fill(match_visited_.begin(), match_visited_.end(), 0);
        if (!augment(r)) return false;
    }
    // A matching found on a tighter screen stays valid on any looser one, so
    // it is always safe to keep as the next warm start.
    seed_match_ = match_row_col_;
    return true;
}

PropagationOutcome ClosureEngine::assign_q_one(const Inducer& ind) {
    VarState cur = lat_.q(ind.u, ind.i, ind.v, ind.j);
    if (cur == VarState::Zero)
        throw std::logic_error("assign_q_one: " + to_string(ind) + " is already excluded");
    if (cur == VarState::One) return {true, 0};
    request_q(ind.u, ind.i, ind.v, ind.j, VarState::One);
    return propagate();
}

bool ClosureEngine::out_of_budget() {
    if (stopped_) return true;
    if (probes_ >= opt_.probe_budget) {
        stopped_ = true;
        return true;
    }
    if (opt_.has_deadline && (probes_ & 63) == 0 &&
        std::chrono::steady_clock::now() > opt_.deadline) {
        stopped_ = true;
        return true;
    }
    return false;
}

ProbeResult ClosureEngine::probe(const Inducer& ind, int assumed_bit) {
    ++probes_;
    const std::size_t before = lat_.mark();
    ++depth_;
    request_q(ind.u, ind.i, ind.v, ind.j, assumed_bit ? VarState::One : VarState::Zero);
    PropagationOutcome out = propagate();
    bool refuted = !out.consistent || !match_p();
    --depth_;
    lat_.undo_to(before);
    return refuted ? ProbeResult::Refuted : ProbeResult::Possible;
}

void ClosureEngine::build_candidates() {
    if (!candidates_.empty()) return;
    const int n = lat_.n();
    candidates_.reserve(static_cast<std::size_t>(total_inducers(n)));
    for (int u = 1; u <= n; ++u)
        for (int i = 1; i <= n; ++i)
            for (int v = 1; v <= n; ++v) {
                if (v == u) continue;
                for (int j = i + 1; j <= n; ++j) candidates_.push_back(Inducer{u, i, v, j});
            }
}

void ClosureEngine::log_deduction(const Inducer& ind, int value, const char* via) const {
    if (opt_.trace != nullptr && depth_ == 0)
        *opt_.trace << to_string(ind) << " -> " << value << " via " << via << '\n';
}

ClosureResult ClosureEngine::implement_closure() {
    cause_ = InfeasibleCause::None;
    if (!match_p()) {
        cause_ = InfeasibleCause::MatchFailure;
        return ClosureResult::Infeasible;
    }
    build_candidates();
    const std::size_t total = candidates_.size();
    std::size_t cursor = 0;
    std::size_t since_deduction = 0;
    while (since_deduction < total && lat_.q_undecided_count() > 0) {
        if (out_of_budget()) return ClosureResult::FeasibleFractional;
        const Inducer cand = candidates_[cursor];
        cursor = (cursor + 1) % total;
        ++since_deduction;
        if (lat_.q(cand.u, cand.i, cand.v, cand.j) != VarState::Free) continue;

        int forced = -1;
        if (probe(cand, 1) == ProbeResult::Refuted)
            forced = 0;
        else if (out_of_budget())
            return ClosureResult::FeasibleFractional;
        else if (probe(cand, 0) == ProbeResult::Refuted)
            forced = 1;

        if (forced < 0) continue;
        log_deduction(cand, forced, forced == 0 ? "probe(1) refuted" : "probe(0) refuted");
        if (!commit_deduction(cand, forced).consistent) {
            cause_ = InfeasibleCause::PropagationContradiction;
            return ClosureResult::Infeasible;
        }
        if (!match_p()) {
            cause_ = InfeasibleCause::MatchFailure;
            return ClosureResult::Infeasible;
        }
        since_deduction = 0;
        if (opt_.literal_restarts) cursor = 0;
    }
    if (lat_.q_undecided_count() == 0 && integral_p()) return ClosureResult::FeasibleInteger;
    return ClosureResult::FeasibleFractional;
}

PermutationMatrix ClosureEngine::matching_permutation() const {
    PermutationMatrix p;
    p.perm.assign(seed_match_.begin() + 1, seed_match_.end());
    return p;
}

PropagationOutcome ClosureEngine::commit_deduction(const Inducer& ind, int value) {
    ++deductions_;
    request_q(ind.u, ind.i, ind.v, ind.j, value ? VarState::One : VarState::Zero);
    return propagate();
}

bool ClosureEngine::integral_p() const {
    for (int u = 1; u <= lat_.n(); ++u)
        if (lat_.prow_nonzero(u) != 1) return false;
    for (int i = 1; i <= lat_.n(); ++i)
        if (lat_.pcol_nonzero(i) != 1) return false;
    return true;
}

PermutationMatrix ClosureEngine::extract_permutation() const {
    PermutationMatrix p;
    p.perm.assign(lat_.n(), 0);
    for (int u = 1; u <= lat_.n(); ++u)
        for (int i = 1; i <= lat_.n(); ++i)
            if (lat_.p(u, i) != VarState::Zero) {
                p.perm[u - 1] = i;
                break;
            }
    return p;
}

} // namespace wca
