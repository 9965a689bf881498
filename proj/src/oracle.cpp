#include "wca/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "wca/exclusion.hpp"

namespace wca {

long factorial(int n) {
    long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

PermSet::PermSet(int n) : n_(n), universe_(factorial(n)) {
    bits_.assign(static_cast<std::size_t>((universe_ + 63) / 64), 0);
}

long PermSet::count() const {
    long c = 0;
    for (std::uint64_t w : bits_) c += __builtin_popcountll(w);
    return c;
}

PermSet PermSet::complement() const {
    PermSet out(n_);
    for (std::size_t k = 0; k < bits_.size(); ++k) out.bits_[k] = ~bits_[k];
    long spare = static_cast<long>(bits_.size()) * 64 - universe_;
    if (spare > 0) out.bits_.back() &= ~0ULL >> spare;
    return out;
}

bool PermSet::subset_of(const PermSet& other) const {
    for (std::size_t k = 0; k < bits_.size(); ++k)
        if (bits_[k] & ~other.bits_[k]) return false;
    return true;
}

void for_each_permutation(int n, const std::function<void(const PermutationMatrix&, long)>& fn) {
    PermutationMatrix p;
    p.perm.assign(n, 0);
    std::iota(p.perm.begin(), p.perm.end(), 1);
    long rank = 0;
    do {
        fn(p, rank++);
    } while (std::next_permutation(p.perm.begin(), p.perm.end()));
}

PermSet enumerate_hamilton_cycles(const DirectedGraph& g) {
    const int n = g.vertex_count() - 1;
    if (n > 9)
        throw std::invalid_argument("cycle enumeration budgeted to n <= 9, got n = " +
                                    std::to_string(n));
    PermSet cycles(n);
    std::vector<int> seq(n);
    for_each_permutation(n, [&](const PermutationMatrix& p, long rank) {
        for (int u = 1; u <= n; ++u) seq[p.perm[u - 1] - 1] = u;
        if (!g.has_arc(n + 1, seq.front()) || !g.has_arc(seq.back(), n + 1)) return;
        for (int i = 0; i + 1 < n; ++i)
            if (!g.has_arc(seq[i], seq[i + 1])) return;
        cycles.set(rank);
    });
    return cycles;
}

namespace {

// Compact id for canonical inducers: position pair (i<j) major, ordered
// vertex pair minor.
long inducer_id(int n, const Inducer& ind) {
    long pos_pair = static_cast<long>(ind.j - 2) * (ind.j - 1) / 2 + (ind.i - 1);
    long vp = static_cast<long>(ind.u - 1) * (n - 1) + (ind.v < ind.u ? ind.v - 1 : ind.v - 2);
    return pos_pair * n * (n - 1) + vp;
}

std::vector<std::uint8_t> flatten(const ExclusionSet& e, int n) {
    std::vector<std::uint8_t> flat(total_inducers(n), 0);
    for (const Inducer& ind : e) flat[inducer_id(n, ind)] = 1;
    return flat;
}

bool covers_member(const PermutationMatrix& p, const std::vector<std::uint8_t>& flat, int n) {
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            int i = p.perm[u - 1], j = p.perm[v - 1];
            Inducer ind = i < j ? Inducer{u, i, v, j} : Inducer{v, j, u, i};
            if (flat[inducer_id(n, ind)]) return true;
        }
    return false;
}

void check_budget(int n, int max_n, const char* what) {
    if (n > max_n)
        throw std::invalid_argument(std::string(what) + " budgeted to n <= " +
                                    std::to_string(max_n) + ", got n = " + std::to_string(n));
}

} // namespace

PermSet perm_of(const ExclusionSet& e, int n) {
    check_budget(n, 8, "perm_of");
    PermSet induced(n);
    const auto flat = flatten(e, n);
    for_each_permutation(n, [&](const PermutationMatrix& p, long rank) {
        if (covers_member(p, flat, n)) induced.set(rank);
    });
    return induced;
}

OracleClosure exact_closure(const ExclusionSet& e, int n) {
    check_budget(n, 8, "exact_closure");
    OracleClosure out;
    const auto flat = flatten(e, n);
    // An inducer stays out of the closure iff some non-induced permutation
    // covers it, so mark covers of all surviving permutations.
    std::vector<std::uint8_t> survives(total_inducers(n), 0);
    long survivors = 0;
    for_each_permutation(n, [&](const PermutationMatrix& p, long) {
        if (covers_member(p, flat, n)) return;
        ++survivors;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) {
                int i = p.perm[u - 1], j = p.perm[v - 1];
                Inducer ind = i < j ? Inducer{u, i, v, j} : Inducer{v, j, u, i};
                survives[inducer_id(n, ind)] = 1;
            }
    });
    out.perm_complement_size = survivors;
    for (int u = 1; u <= n; ++u)
        for (int i = 1; i <= n; ++i)
            for (int v = 1; v <= n; ++v) {
                if (v == u) continue;
                for (int j = i + 1; j <= n; ++j) {
                    Inducer ind{u, i, v, j};
                    if (survives[inducer_id(n, ind)])
                        out.e_bar_complement.insert(ind);
                    else
                        out.e_bar.insert(ind);
                }
            }
    return out;
}

TheoryChecklist check_theory(const DirectedGraph& g) {
    const int n = g.vertex_count() - 1;
    check_budget(n, 7, "check_theory");
    TheoryChecklist out;

    const ExclusionSet e = build_exclusion_set(g);
    const PermSet cycles = enumerate_hamilton_cycles(g);
    const PermSet extraneous = cycles.complement();
    const PermSet induced = perm_of(e, n);
    out.exclusion_matches_extraneous = induced == extraneous;

    const OracleClosure closure = exact_closure(e, n);
    const long total = total_inducers(n);
    const bool hamiltonian = cycles.count() > 0;
    out.hamiltonian_iff_closure_strict =
        hamiltonian == (static_cast<long>(closure.e_bar.size()) < total);
    out.hamiltonian_iff_nonempty_complements =
        (hamiltonian == (closure.perm_complement_size != 0)) &&
        (hamiltonian == !closure.e_bar_complement.empty());

    // The complement must consist exactly of the inducers covered by the
    // surviving permutations, and those covers must avoid the closure.
    const PermSet induced_by_closure = perm_of(closure.e_bar, n);
    bool complement_ok = induced_by_closure == induced;
    ExclusionSet covered_by_survivors;
    for_each_permutation(n, [&](const PermutationMatrix& p, long rank) {
        if (induced_by_closure.test(rank)) return;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                covered_by_survivors.insert(u, p.perm[u - 1], v, p.perm[v - 1]);
    });
    complement_ok = complement_ok && covered_by_survivors == closure.e_bar_complement;
    out.complement_covers_exactly_survivors = complement_ok;

    // Uniqueness: the closure is a fixpoint, and any equivalent enlargement
    // of e closes to the same set.
    bool unique = exact_closure(closure.e_bar, n).e_bar == closure.e_bar;
    for (const Inducer& ind : closure.e_bar) {
        if (e.contains(ind)) continue;
        ExclusionSet e2 = e;
        e2.insert(ind);
        unique = unique && exact_closure(e2, n).e_bar == closure.e_bar;
        break; // one redundant enlargement suffices
    }
    out.closure_unique_and_idempotent = unique;
    return out;
}

} // namespace wca
