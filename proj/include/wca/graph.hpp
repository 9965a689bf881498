#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wca {

// Thrown for malformed input text; the message names the line or byte offset.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Simple directed graph on vertices 1..vertex_count with O(1) arc membership.
/// Solver convention: the highest-labelled vertex is the fixed start/end of
/// every candidate cycle, so parsers never reorder labels.
class DirectedGraph {
public:
    explicit DirectedGraph(int vertex_count);

    int vertex_count() const { return vertex_count_; }
    int arc_count() const { return arc_count_; }

    bool has_arc(int u, int v) const {
        check_pair(u, v);
        return adj_[idx(u, v)] != 0;
    }

    void add_arc(int u, int v);
    /// Adds both counter-directed arcs.
    void add_edge(int u, int v) {
        add_arc(u, v);
        add_arc(v, u);
    }

    int out_degree(int u) const;
    int in_degree(int u) const;

    /// Exact membership equality, used by restore tests.
    bool same_arcs(const DirectedGraph& other) const {
        return vertex_count_ == other.vertex_count_ && adj_ == other.adj_;
    }

    /// Swaps vertex labels a and b (adjacency rows/columns), so any vertex can
    /// be moved to the start/end slot vertex_count().
    void swap_labels(int a, int b);

private:
    friend class ScopedArcDeletion;

    std::size_t idx(int u, int v) const {
        return static_cast<std::size_t>(u - 1) * vertex_count_ + (v - 1);
    }
    void check_vertex(int u) const {
        if (u < 1 || u > vertex_count_)
            throw std::out_of_range("vertex label " + std::to_string(u) + " out of range [1," +
                                    std::to_string(vertex_count_) + "]");
    }
    void check_pair(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
    }

    int vertex_count_;
    int arc_count_ = 0;
    std::vector<std::uint8_t> adj_;
};

/// Removes one arc for the lifetime of the scope and restores it on exit,
/// including during stack unwinding. Deleting an absent arc is a no-op.
class ScopedArcDeletion {
public:
    ScopedArcDeletion(DirectedGraph& g, int u, int v) : g_(g), u_(u), v_(v) {
        had_ = g.has_arc(u, v);
        if (had_) {
            g_.adj_[g_.idx(u_, v_)] = 0;
            --g_.arc_count_;
        }
    }
    ~ScopedArcDeletion() {
        if (had_) {
            g_.adj_[g_.idx(u_, v_)] = 1;
            ++g_.arc_count_;
        }
    }
    ScopedArcDeletion(const ScopedArcDeletion&) = delete;
    ScopedArcDeletion& operator=(const ScopedArcDeletion&) = delete;

private:
    DirectedGraph& g_;
    int u_, v_;
    bool had_;
};

template <typename Body>
auto with_arc_deleted(DirectedGraph& g, int u, int v, Body&& body) {
    ScopedArcDeletion guard(g, u, v);
    return std::forward<Body>(body)();
}

/// Length of a shortest directed path in arcs. A value equal to the graph's
/// vertex count means no path exists (one more than any simple path can use).
struct PathLength {
    int value;
    bool operator==(const PathLength&) const = default;
};

inline int no_path_sentinel(const DirectedGraph& g) { return g.vertex_count(); }

/// Breadth-first search; arcs are unit weight so this is the degenerate case
/// of Dijkstra's algorithm.
PathLength shortest_path(const DirectedGraph& g, int s, int t);

bool is_strongly_connected(const DirectedGraph& g);

/// Edge-list text: a header line with the vertex count, then "u v" lines.
/// With directed=false each line contributes both arcs.
DirectedGraph parse_edge_list(const std::string& text, bool directed);

/// One graph6-encoded undirected graph (the optional ">>graph6<<" header is
/// skipped). Decoded edges become counter-directed arc pairs.
DirectedGraph parse_graph6(const std::string& text);

/// Named test instances. Accepts "cycle:k" / "complete:k" (or parenthesised
/// forms) for the parameterised families.
DirectedGraph builtin_graph(const std::string& name);

DirectedGraph petersen_graph();
DirectedGraph petersen_plus_edge_graph();
DirectedGraph herschel_graph();
/// 21 vertices: K14 on 1..14, and each of 15..21 joined to all of 1..7.
DirectedGraph c7_21_graph();
DirectedGraph directed_cycle_graph(int k);
DirectedGraph complete_graph(int k);

} // namespace wca
