#include "dbclosure/distance.hpp"

#include <algorithm>
#include <string>

#include "dbclosure/errors.hpp"

namespace dbclosure {

int DistanceMatrix::max_entry() const { return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end()); }

DistanceMatrix all_pairs_distances(const Graph &g) {
    const int n = g.order();
    std::vector<int> d(static_cast<std::size_t>(n) * n, -1);
    std::vector<int> queue(n);
    for (int s = 0; s < n; ++s) {
        int *row = d.data() + static_cast<std::size_t>(s) * n;
        int head = 0, tail = 0;
        row[s] = 0;
        queue[tail++] = s;
        while (head < tail) {
            const int v = queue[head++];
            g.for_each_neighbor(v, [&](int w) {
                if (row[w] < 0) {
                    row[w] = row[v] + 1;
                    queue[tail++] = w;
                }
            });
        }
        if (tail != n)
            throw Disconnected("graph is disconnected: vertex " + std::to_string(s) + " reaches " +
                               std::to_string(tail) + " of " + std::to_string(n) + " vertices");
    }
    return DistanceMatrix(n, std::move(d));
}

int diameter(const Graph &g) { return all_pairs_distances(g).max_entry(); }

EdgePartition edge_partition(const DistanceMatrix &d, int x, int y) {
    const int n = d.order();
    if (x < 0 || x >= n || y < 0 || y >= n)
        throw IndexOutOfRange("pair (" + std::to_string(x) + "," + std::to_string(y) + ") out of range");
    if (x == y)
        throw InvalidArgument("edge_partition needs distinct vertices");
    EdgePartition p;
    p.x = x;
    p.y = y;
    for (int u = 0; u < n; ++u) {
        const int dx = d(u, x), dy = d(u, y);
        if (dx < dy)
            p.closer_to_x.push_back(u);
        else if (dy < dx)
            p.closer_to_y.push_back(u);
        else
            p.equidistant.push_back(u);
    }
    return p;
}

EdgePartition edge_partition(const Graph &g, int x, int y) {
    if (x < 0 || x >= g.order() || y < 0 || y >= g.order())
        throw IndexOutOfRange("pair (" + std::to_string(x) + "," + std::to_string(y) + ") out of range");
    return edge_partition(all_pairs_distances(g), x, y);
}

} // namespace dbclosure
