#ifndef DBCLOSURE_BALANCE_HPP
#define DBCLOSURE_BALANCE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "dbclosure/graph.hpp"

namespace dbclosure {

struct EdgeImbalance {
    int x = 0;
    int y = 0;
    int closer_to_x = 0; // |W_xy|
    int closer_to_y = 0; // |W_yx|

    int gap() const { return closer_to_x > closer_to_y ? closer_to_x - closer_to_y : closer_to_y - closer_to_x; }
    bool operator==(const EdgeImbalance &) const = default;
};

struct ImbalanceReport {
    std::vector<EdgeImbalance> records; // one per edge, lexicographic (x < y)
    bool balanced = true;
    std::optional<EdgeImbalance> worst_edge; // largest gap, first in edge order on ties
};

/// |W_xy| == |W_yx| for every edge xy.  Throws Disconnected.
bool is_distance_balanced(const Graph &g);

ImbalanceReport imbalance_report(const Graph &g);

/// Sum over edges of |W_xy| * |W_yx|.
///
/// The sum is bounded by n^2 * n(n-1)/2, which fits in 64 bits for
/// n <= 40000.  Throws Disconnected.
std::uint64_t szeged_index(const Graph &g);

} // namespace dbclosure

#endif
