#ifndef DBCLOSURE_GRAPH_HPP
#define DBCLOSURE_GRAPH_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace dbclosure {

/// Unordered vertex pair, stored with u < v once normalized.
struct Edge {
    int u = 0;
    int v = 0;

    auto operator<=>(const Edge &) const = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Each vertex keeps its neighbourhood as a row of 64-bit words, so edge tests
/// are O(1) and neighbourhoods can be combined with word operations.  Graphs
/// with n <= 64 use exactly one word per row, which is what the exact search
/// relies on.
class Graph {
  public:
    /// Edgeless graph on n >= 1 vertices.
    explicit Graph(int n);

    /// Builds a graph from index pairs.  Duplicates and both orientations
    /// collapse to one edge.  Throws IndexOutOfRange or SelfLoop.
    static Graph from_edge_list(int n, std::span<const Edge> edges);

    int order() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }

    bool has_edge(int u, int v) const;
    /// Returns false when the edge was already present.
    bool add_edge(int u, int v);
    /// Returns false when the edge was absent.
    bool remove_edge(int u, int v);

    int degree(int v) const;
    int max_degree() const;
    int min_degree() const;

    std::vector<int> neighbors(int v) const;

    template <class F> void for_each_neighbor(int v, F &&f) const {
        const std::uint64_t *row = row_ptr(v);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = row[w];
            while (bits) {
                f(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
    }

    /// Neighbourhood bit mask; only valid for n <= 64.
    std::uint64_t row64(int v) const;

    /// All edges (u < v) in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph &, const Graph &) = default;

  private:
    const std::uint64_t *row_ptr(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }
    std::uint64_t *row_ptr(int v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }
    void check_vertex(int v) const;

    int n_;
    int words_;
    std::size_t edge_count_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// r when every vertex has degree r.
std::optional<int> regular_degree(const Graph &g);

/// True iff every edge of `sub` is an edge of `sup` (same labels).
/// Throws SizeMismatch when the orders differ.
bool is_spanning_subgraph(const Graph &sub, const Graph &sup);

/// All non-adjacent pairs (u < v) in lexicographic order.
std::vector<Edge> complement_edges(const Graph &g);

bool is_connected(const Graph &g);
bool is_tree(const Graph &g);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

/// Image of g under the vertex map v -> perm[v].
Graph relabel(const Graph &g, std::span<const int> perm);

} // namespace dbclosure

#endif
