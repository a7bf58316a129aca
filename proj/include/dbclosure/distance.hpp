#ifndef DBCLOSURE_DISTANCE_HPP
#define DBCLOSURE_DISTANCE_HPP

#include <vector>

#include "dbclosure/graph.hpp"

namespace dbclosure {

/// All-pairs hop distances of a connected graph.
class DistanceMatrix {
  public:
    DistanceMatrix(int n, std::vector<int> d) : n_(n), d_(std::move(d)) {}

    int order() const { return n_; }
    int operator()(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    int max_entry() const;

  private:
    int n_;
    std::vector<int> d_;
};

/// BFS from every vertex.  Throws Disconnected.
DistanceMatrix all_pairs_distances(const Graph &g);

/// Throws Disconnected.
int diameter(const Graph &g);

/// Split of V(G) by which of x, y is strictly closer.
///
/// closer_to_x is W_xy, closer_to_y is W_yx, equidistant holds the vertices at
/// equal distance from both.  Every set is sorted ascending.
struct EdgePartition {
    int x = 0;
    int y = 0;
    std::vector<int> closer_to_x;
    std::vector<int> closer_to_y;
    std::vector<int> equidistant;
};

/// Defined for any pair x != y, adjacent or not.  Throws Disconnected or
/// IndexOutOfRange.
EdgePartition edge_partition(const Graph &g, int x, int y);
EdgePartition edge_partition(const DistanceMatrix &d, int x, int y);

} // namespace dbclosure

#endif
