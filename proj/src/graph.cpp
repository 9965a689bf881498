#include "wca/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace wca {

DirectedGraph::DirectedGraph(int vertex_count) : vertex_count_(vertex_count) {
    if (vertex_count < 3)
        throw std::invalid_argument("graph needs at least 3 vertices, got " +
                                    std::to_string(vertex_count));
    if (vertex_count > 250)
        throw std::invalid_argument("graph too large (max 250 vertices)");
    adj_.assign(static_cast<std::size_t>(vertex_count) * vertex_count, 0);
}

void DirectedGraph::add_arc(int u, int v) {
    check_pair(u, v);
    if (u == v)
        throw std::invalid_argument("self-loop (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") not allowed");
    if (!adj_[idx(u, v)]) {
        adj_[idx(u, v)] = 1;
        ++arc_count_;
    }
}

int DirectedGraph::out_degree(int u) const {
    check_vertex(u);
    int d = 0;
    for (int v = 1; v <= vertex_count_; ++v) d += adj_[idx(u, v)];
    return d;
}

int DirectedGraph::in_degree(int u) const {
    check_vertex(u);
    int d = 0;
    for (int v = 1; v <= vertex_count_; ++v) d += adj_[idx(v, u)];
    return d;
}

void DirectedGraph::swap_labels(int a, int b) {
    check_pair(a, b);
    if (a == b) return;
    for (int v = 1; v <= vertex_count_; ++v) std::swap(adj_[idx(a, v)], adj_[idx(b, v)]);
    for (int u = 1; u <= vertex_count_; ++u) std::swap(adj_[idx(u, a)], adj_[idx(u, b)]);
}

PathLength shortest_path(const DirectedGraph& g, int s, int t) {
    const int n1 = g.vertex_count();
    if (s == t) throw std::invalid_argument("shortest_path requires s != t");
    std::vector<int> dist(n1 + 1, -1);
    std::vector<int> queue;
    queue.reserve(n1);
    dist[s] = 0;
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        if (u == t) break;
        for (int v = 1; v <= n1; ++v) {
            if (dist[v] < 0 && g.has_arc(u, v)) {
                dist[v] = dist[u] + 1;
                if (v == t) return PathLength{dist[v]};
                queue.push_back(v);
            }
        }
    }
    return PathLength{dist[t] < 0 ? no_path_sentinel(g) : dist[t]};
}

namespace {

int reachable_count(const DirectedGraph& g, int s, bool reverse) {
    const int n1 = g.vertex_count();
    std::vector<std::uint8_t> seen(n1 + 1, 0);
    std::vector<int> queue{s};
    seen[s] = 1;
    int count = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int v = 1; v <= n1; ++v) {
            bool arc = reverse ? g.has_arc(v, u) : g.has_arc(u, v);
            if (arc && !seen[v]) {
                seen[v] = 1;
                ++count;
                queue.push_back(v);
            }
        }
    }
    return count;
}

} // namespace

bool is_strongly_connected(const DirectedGraph& g) {
    return reachable_count(g, 1, false) == g.vertex_count() &&
           reachable_count(g, 1, true) == g.vertex_count();
}

DirectedGraph parse_edge_list(const std::string& text, bool directed) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int vertex_count = -1;
    DirectedGraph g(3); // replaced once the header is read

    auto fail = [&](const std::string& msg) {
        throw ParseError("edge list line " + std::to_string(line_no) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        if (vertex_count < 0) {
            if (!(fields >> vertex_count)) continue; // blank or comment before header
            std::string extra;
            if (fields >> extra) fail("header must be a single vertex count");
            if (vertex_count < 3) fail("vertex count must be at least 3");
            g = DirectedGraph(vertex_count);
            continue;
        }
        int u, v;
        if (!(fields >> u)) continue; // blank line
        if (!(fields >> v)) fail("expected \"u v\"");
        std::string extra;
        if (fields >> extra) fail("trailing token '" + extra + "'");
        if (u < 1 || u > vertex_count || v < 1 || v > vertex_count)
            fail("vertex label out of range [1," + std::to_string(vertex_count) + "]");
        if (u == v) fail("self-loop");
        if (directed)
            g.add_arc(u, v);
        else
            g.add_edge(u, v);
    }
    if (vertex_count < 0) throw ParseError("edge list: missing vertex-count header");
    return g;
}

DirectedGraph parse_graph6(const std::string& text) {
    // Strip the optional format header and surrounding whitespace.
    std::string s = text;
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s.erase(0, header.size());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw ParseError("graph6: empty input");

    std::size_t pos = 0;
    auto byte = [&](std::size_t at) -> int {
        if (at >= s.size()) throw ParseError("graph6: truncated at offset " + std::to_string(at));
        unsigned char c = static_cast<unsigned char>(s[at]);
        if (c < 63 || c > 126)
            throw ParseError("graph6: invalid byte at offset " + std::to_string(at));
        return c - 63;
    };

    long n;
    if (byte(0) < 63) {
        n = byte(0);
        pos = 1;
    } else {
        // 126 marks the multi-byte vertex count forms.
        if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126)
            throw ParseError("graph6: 6-byte vertex counts not supported");
        n = (static_cast<long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    }
    if (n < 3) throw ParseError("graph6: fewer than 3 vertices");
    if (n > 250) throw ParseError("graph6: graph too large");

    DirectedGraph g(static_cast<int>(n));
    long bits = n * (n - 1) / 2;
    long need = (bits + 5) / 6;
    if (static_cast<long>(s.size() - pos) != need)
        throw ParseError("graph6: expected " + std::to_string(need) + " data bytes, got " +
                         std::to_string(s.size() - pos));
    long bit = 0;
    for (int j = 2; j <= n; ++j) {
        for (int i = 1; i < j; ++i, ++bit) {
            int b = byte(pos + bit / 6);
            if ((b >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

namespace {

DirectedGraph petersen_base() {
    // Outer 5-cycle 1..5, spokes i -> i+5, inner pentagram on 6..10.
    DirectedGraph g(10);
    const int outer[5][2] = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}};
    const int inner[5][2] = {{6, 8}, {8, 10}, {10, 7}, {7, 9}, {9, 6}};
    for (auto& e : outer) g.add_edge(e[0], e[1]);
    for (auto& e : inner) g.add_edge(e[0], e[1]);
    for (int i = 1; i <= 5; ++i) g.add_edge(i, i + 5);
    return g;
}

} // namespace

DirectedGraph petersen_graph() { return petersen_base(); }

DirectedGraph petersen_plus_edge_graph() {
    DirectedGraph g = petersen_base();
    g.add_edge(1, 3); // any added chord yields a Hamiltonian graph
    return g;
}

DirectedGraph herschel_graph() {
    DirectedGraph g(11);
    const int edges[18][2] = {{1, 3}, {1, 4}, {1, 5},  {2, 3},  {2, 4},  {2, 6},
                              {3, 7}, {3, 8}, {4, 9},  {4, 10}, {5, 7},  {5, 9},
                              {6, 8}, {6, 10}, {7, 11}, {8, 11}, {9, 11}, {10, 11}};
    for (auto& e : edges) g.add_edge(e[0], e[1]);
    return g;
}

DirectedGraph c7_21_graph() {
    // Complete graph on 1..14; each of 15..21 is a hub joined to 1..7 only.
    // The rim of each "wheel" already lies inside K14, so hubs contribute
    // spokes and nothing else.
    DirectedGraph g(21);
    for (int u = 1; u <= 14; ++u)
        for (int v = u + 1; v <= 14; ++v) g.add_edge(u, v);
    for (int w = 15; w <= 21; ++w)
        for (int v = 1; v <= 7; ++v) g.add_edge(w, v);
    return g;
}

DirectedGraph directed_cycle_graph(int k) {
    DirectedGraph g(k);
    for (int u = 1; u <= k; ++u) g.add_arc(u, u % k + 1);
    return g;
}

DirectedGraph complete_graph(int k) {
    DirectedGraph g(k);
    for (int u = 1; u <= k; ++u)
        for (int v = u + 1; v <= k; ++v) g.add_edge(u, v);
    return g;
}

DirectedGraph builtin_graph(const std::string& name) {
    if (name == "petersen") return petersen_graph();
    if (name == "petersen_plus_edge") return petersen_plus_edge_graph();
    if (name == "herschel") return herschel_graph();
    if (name == "c7_21") return c7_21_graph();

    auto parametrised = [&](const std::string& prefix) -> int {
        // Accepts "name:k" and "name(k)".
        if (name.rfind(prefix, 0) != 0) return -1;
        std::string rest = name.substr(prefix.size());
        if (rest.size() >= 2 && rest.front() == ':')
            rest = rest.substr(1);
        else if (rest.size() >= 3 && rest.front() == '(' && rest.back() == ')')
            rest = rest.substr(1, rest.size() - 2);
        else
            return -1;
        try {
            std::size_t used = 0;
            int k = std::stoi(rest, &used);
            if (used != rest.size() || k < 3) return -1;
            return k;
        } catch (const std::exception&) {
            return -1;
        }
    };

    if (int k = parametrised("cycle"); k > 0) return directed_cycle_graph(k);
    if (int k = parametrised("complete"); k > 0) return complete_graph(k);
    throw std::invalid_argument("unknown builtin graph '" + name + "'");
}

} // namespace wca
