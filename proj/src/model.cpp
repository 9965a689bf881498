#include "wca/model.hpp"

namespace wca {

std::vector<int> PermutationMatrix::visiting_order() const {
    std::vector<int> seq(perm.size(), 0);
    for (int u = 1; u <= size(); ++u) seq[perm[u - 1] - 1] = u;
    return seq;
}

bool PermutationMatrix::is_valid() const {
    const int n = size();
    std::vector<std::uint8_t> seen(n + 1, 0);
    for (int i : perm) {
        if (i < 1 || i > n || seen[i]) return false;
        seen[i] = 1;
    }
    return true;
}

ExclusionSet inducers_of(const PermutationMatrix& p) {
    if (!p.is_valid()) throw std::invalid_argument("inducers_of: not a permutation");
    ExclusionSet cover;
    const int n = p.size();
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            cover.insert(u, p.position_of(u), v, p.position_of(v));
    return cover;
}

PermutationMatrix cycle_to_permutation(const std::vector<int>& cycle, int n) {
    if (static_cast<int>(cycle.size()) != n + 2 || cycle.front() != n + 1 || cycle.back() != n + 1)
        throw std::invalid_argument(
            "cycle must list n+2 vertices, starting and ending at vertex n+1");
    PermutationMatrix p;
    p.perm.assign(n, 0);
    for (int i = 1; i <= n; ++i) {
        int u = cycle[i];
        if (u < 1 || u > n || p.perm[u - 1] != 0)
            throw std::invalid_argument("cycle is not a Hamilton cycle of the complete graph");
        p.perm[u - 1] = i;
    }
    return p;
}

std::string to_string(const Inducer& ind) {
    return "{(" + std::to_string(ind.u) + "," + std::to_string(ind.i) + "),(" +
           std::to_string(ind.v) + "," + std::to_string(ind.j) + ")}";
}

} // namespace wca
