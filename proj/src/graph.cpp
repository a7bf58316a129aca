#include "dbclosure/graph.hpp"

#include <algorithm>
#include <string>

#include "dbclosure/errors.hpp"

namespace dbclosure {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 1)
        throw InvalidArgument("graph must have at least one vertex, got " + std::to_string(n));
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (const Edge &e : edges)
        g.add_edge(e.u, e.v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw IndexOutOfRange("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (row_ptr(u)[v / 64] >> (v % 64)) & 1u;
}

bool Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw SelfLoop("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v))
        return false;
    row_ptr(u)[v / 64] |= std::uint64_t{1} << (v % 64);
    row_ptr(v)[u / 64] |= std::uint64_t{1} << (u % 64);
    ++edge_count_;
    return true;
}

bool Graph::remove_edge(int u, int v) {
    if (!has_edge(u, v))
        return false;
    row_ptr(u)[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    row_ptr(v)[u / 64] &= ~(std::uint64_t{1} << (u % 64));
    --edge_count_;
    return true;
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    const std::uint64_t *row = row_ptr(v);
    for (int w = 0; w < words_; ++w)
        d += std::popcount(row[w]);
    return d;
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v)
        best = std::max(best, degree(v));
    return best;
}

int Graph::min_degree() const {
    int best = n_;
    for (int v = 0; v < n_; ++v)
        best = std::min(best, degree(v));
    return best;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for_each_neighbor(v, [&](int w) { out.push_back(w); });
    return out;
}

std::uint64_t Graph::row64(int v) const {
    check_vertex(v);
    if (n_ > 64)
        throw InvalidArgument("row64 requires n <= 64");
    return row_ptr(v)[0];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for_each_neighbor(u, [&](int v) {
            if (u < v)
                out.push_back({u, v});
        });
    return out;
}

std::optional<int> regular_degree(const Graph &g) {
    const int r = g.degree(0);
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != r)
            return std::nullopt;
    return r;
}

bool is_spanning_subgraph(const Graph &sub, const Graph &sup) {
    if (sub.order() != sup.order())
        throw SizeMismatch("orders differ: " + std::to_string(sub.order()) + " vs " + std::to_string(sup.order()));
    for (const Edge &e : sub.edges())
        if (!sup.has_edge(e.u, e.v))
            return false;
    return true;
}

std::vector<Edge> complement_edges(const Graph &g) {
    std::vector<Edge> out;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v))
                out.push_back({u, v});
    return out;
}

bool is_connected(const Graph &g) {
    std::vector<char> seen(g.order(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        g.for_each_neighbor(v, [&](int w) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        });
    }
    return reached == g.order();
}

bool is_tree(const Graph &g) {
    return g.edge_count() + 1 == static_cast<std::size_t>(g.order()) && is_connected(g);
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3)
        throw InvalidArgument("cycle needs n >= 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph relabel(const Graph &g, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != g.order())
        throw SizeMismatch("permutation size does not match graph order");
    Graph out(g.order());
    for (const Edge &e : g.edges())
        out.add_edge(perm[e.u], perm[e.v]);
    return out;
}

} // namespace dbclosure
