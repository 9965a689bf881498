#include "wca/exclusion.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace wca {

ExclusionSet build_exclusion_set(const DirectedGraph& graph) {
    DirectedGraph g = graph; // scoped deletions stay internal to this call
    const int n1 = g.vertex_count();
    const int n = n1 - 1;
    ExclusionSet e;

    // Last arc: a path u -> n+1 of length k would put vertex u at position
    // n+1-k; rule the position out for every length below the minimum.
    for (int u = 1; u <= n; ++u) {
        const int arc = g.has_arc(u, n1) ? 1 : 0;
        const int m = with_arc_deleted(g, u, n1, [&] { return shortest_path(g, u, n1).value; });
        for (int k = arc + 1; k <= m - 1; ++k) {
            const int pos = n1 - k;
            for (int v = 1; v <= n; ++v) {
                if (v == u) continue;
                for (int j = 1; j <= n; ++j)
                    if (j != pos) e.insert(v, j, u, pos);
            }
        }
    }

    // First arc: a path n+1 -> v of length k would put vertex v at position k.
    for (int v = 1; v <= n; ++v) {
        const int arc = g.has_arc(n1, v) ? 1 : 0;
        const int m = with_arc_deleted(g, n1, v, [&] { return shortest_path(g, n1, v).value; });
        for (int k = arc + 1; k <= m - 1; ++k) {
            for (int u = 1; u <= n; ++u) {
                if (u == v) continue;
                for (int i = 1; i <= n; ++i)
                    if (i != k) e.insert(v, k, u, i);
            }
        }
    }

    // General case: no u -> v path of length k means the pair can never sit
    // k positions apart.
    for (int u = 1; u <= n; ++u) {
        for (int v = 1; v <= n; ++v) {
            if (v == u) continue;
            const int arc = g.has_arc(u, v) ? 1 : 0;
            const int m = with_arc_deleted(g, u, v, [&] { return shortest_path(g, u, v).value; });
            for (int k = arc + 1; k <= m - 1; ++k)
                for (int l = 1; l + k <= n; ++l) e.insert(u, l, v, l + k);
        }
    }
    return e;
}

PropagationOutcome apply_exclusion(const ExclusionSet& e, ClosureEngine& engine) {
    return engine.apply_exclusion(e);
}

std::pair<long, long> count_free(const VarLattice& lattice) {
    return {lattice.p_free_count(), lattice.q_free_count()};
}

ExclusionSet build_noniso_exclusion(const DirectedGraph& g, const DirectedGraph& h) {
    if (g.vertex_count() != h.vertex_count())
        throw std::invalid_argument("non-isomorphism exclusion needs equal vertex counts");
    const int n = g.vertex_count();
    ExclusionSet e;
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v) {
            if (v == u || !g.has_arc(u, v)) continue;
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    if (j != i && !h.has_arc(i, j)) e.insert(u, i, v, j);
        }
    return e;
}

void write_exclusion_set(std::ostream& out, const ExclusionSet& e) {
    for (const Inducer& ind : e)
        out << ind.u << ' ' << ind.i << ' ' << ind.v << ' ' << ind.j << '\n';
}

ExclusionSet read_exclusion_set(std::istream& in, int n) {
    ExclusionSet e;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        int u, i, v, j;
        if (!(fields >> u)) continue; // blank
        if (!(fields >> i >> v >> j))
            throw ParseError("exclusion line " + std::to_string(line_no) + ": expected \"u i v j\"");
        auto in_range = [&](int x) { return x >= 1 && x <= n; };
        if (!in_range(u) || !in_range(i) || !in_range(v) || !in_range(j) || u == v || i == j)
            throw ParseError("exclusion line " + std::to_string(line_no) + ": invalid inducer");
        e.insert(u, i, v, j);
    }
    return e;
}

} // namespace wca
