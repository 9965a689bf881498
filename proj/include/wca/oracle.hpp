#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "wca/graph.hpp"
#include "wca/model.hpp"

namespace wca {

/// Bitset over the lexicographic ranks of all n! permutations of 1..n.
class PermSet {
public:
    explicit PermSet(int n);

    int n() const { return n_; }
    long universe() const { return universe_; }
    void set(long rank) { bits_[rank >> 6] |= 1ULL << (rank & 63); }
    bool test(long rank) const { return (bits_[rank >> 6] >> (rank & 63)) & 1; }
    long count() const;
    PermSet complement() const;
    bool subset_of(const PermSet& other) const;
    bool operator==(const PermSet&) const = default;

private:
    int n_;
    long universe_;
    std::vector<std::uint64_t> bits_;
};

long factorial(int n);

/// Calls fn(perm) for each permutation in lexicographic order of the image
/// vector (perm[u-1] = position of vertex u); the callback index is its rank.
void for_each_permutation(int n, const std::function<void(const PermutationMatrix&, long)>& fn);

/// All permutations whose encoded cycle lies entirely in g. Budgeted to
/// n <= 9 (the matrix dimension, one less than the vertex count).
PermSet enumerate_hamilton_cycles(const DirectedGraph& g);

/// Union over the members of all permutations covering each inducer (n <= 8).
PermSet perm_of(const ExclusionSet& e, int n);

struct OracleClosure {
    ExclusionSet e_bar;            // every inducer covered only by induced permutations
    ExclusionSet e_bar_complement; // the rest
    long perm_complement_size = 0; // permutations not induced by e
};

/// The unique maximum-cardinality equivalent of e: an inducer joins the
/// closure exactly when all (n-2)! permutations covering it are induced by e.
/// Budgeted to n <= 8.
OracleClosure exact_closure(const ExclusionSet& e, int n);

struct TheoryChecklist {
    bool exclusion_matches_extraneous = false; // built set induces exactly the non-cycles
    bool hamiltonian_iff_closure_strict = false;
    bool hamiltonian_iff_nonempty_complements = false;
    bool complement_covers_exactly_survivors = false;
    bool closure_unique_and_idempotent = false;
    bool all() const {
        return exclusion_matches_extraneous && hamiltonian_iff_closure_strict &&
               hamiltonian_iff_nonempty_complements && complement_covers_exactly_survivors &&
               closure_unique_and_idempotent;
    }
};

/// Exhaustive verification of the closure theory on one instance (n <= 7).
TheoryChecklist check_theory(const DirectedGraph& g);

} // namespace wca
