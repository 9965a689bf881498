#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace wca {

/// Unordered pair {p(u,i), p(v,j)} pinning vertex u to cycle position i and
/// vertex v to position j. Stored canonically with i < j, so the pair and its
/// swap compare equal. Requires u != v and i != j.
struct Inducer {
    int u, i, v, j;
    auto operator<=>(const Inducer&) const = default;
};

inline Inducer canonical_inducer(int u, int i, int v, int j) {
    if (u == v || i == j)
        throw std::invalid_argument("inducer needs distinct vertices and distinct positions");
    if (i < j) return Inducer{u, i, v, j};
    return Inducer{v, j, u, i};
}

/// n^2 (n-1)^2 / 2: the number of canonical vertex/position pair variables.
inline long total_inducers(int n) {
    if (n < 2) throw std::invalid_argument("total_inducers needs n >= 2");
    long ln = n;
    return ln * ln * (ln - 1) * (ln - 1) / 2;
}

/// Set of canonical inducers. Insertion is idempotent; iteration order is the
/// lexicographic (u,i,v,j) order of the canonical representatives.
class ExclusionSet {
public:
    using const_iterator = std::set<Inducer>::const_iterator;

    bool insert(const Inducer& ind) { return members_.insert(ind).second; }
    bool insert(int u, int i, int v, int j) { return insert(canonical_inducer(u, i, v, j)); }
    bool contains(const Inducer& ind) const { return members_.count(ind) != 0; }
    void merge(const ExclusionSet& other) { members_.insert(other.begin(), other.end()); }

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const_iterator begin() const { return members_.begin(); }
    const_iterator end() const { return members_.end(); }
    bool operator==(const ExclusionSet&) const = default;

private:
    std::set<Inducer> members_;
};

/// perm[u-1] = i: the i-th arc of the cycle enters vertex u. A bijection of
/// 1..n; the closing arc into the start vertex n+1 is implicit.
struct PermutationMatrix {
    std::vector<int> perm;

    int size() const { return static_cast<int>(perm.size()); }
    int position_of(int u) const { return perm[u - 1]; }
    /// seq[i-1] = vertex entered by the i-th arc (the inverse map).
    std::vector<int> visiting_order() const;
    bool is_valid() const;
    bool operator==(const PermutationMatrix&) const = default;
};

/// The n(n-1)/2 canonical inducers jointly pinning every assignment of P.
ExclusionSet inducers_of(const PermutationMatrix& p);

/// Encodes a Hamilton cycle of the complete graph, given as the visited
/// vertex sequence n+1, x1, ..., xn, n+1, into its permutation matrix.
PermutationMatrix cycle_to_permutation(const std::vector<int>& cycle, int n);

std::string to_string(const Inducer& ind);

} // namespace wca
