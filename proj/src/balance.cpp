#include "dbclosure/balance.hpp"

#include "dbclosure/distance.hpp"
#include "dbclosure/errors.hpp"

namespace dbclosure {

namespace {

EdgeImbalance count_sides(const DistanceMatrix &d, int x, int y) {
    EdgeImbalance rec{x, y, 0, 0};
    for (int u = 0; u < d.order(); ++u) {
        const int dx = d(u, x), dy = d(u, y);
        rec.closer_to_x += dx < dy;
        rec.closer_to_y += dy < dx;
    }
    return rec;
}

} // namespace

bool is_distance_balanced(const Graph &g) {
    const DistanceMatrix d = all_pairs_distances(g);
    for (const Edge &e : g.edges()) {
        const EdgeImbalance rec = count_sides(d, e.u, e.v);
        if (rec.closer_to_x != rec.closer_to_y)
            return false;
    }
    return true;
}

ImbalanceReport imbalance_report(const Graph &g) {
    const DistanceMatrix d = all_pairs_distances(g);
    ImbalanceReport report;
    for (const Edge &e : g.edges()) {
        const EdgeImbalance rec = count_sides(d, e.u, e.v);
        report.records.push_back(rec);
        if (rec.gap() == 0)
            continue;
        report.balanced = false;
        if (!report.worst_edge || rec.gap() > report.worst_edge->gap())
            report.worst_edge = rec;
    }
    return report;
}

std::uint64_t szeged_index(const Graph &g) {
    if (g.order() > 40000)
        throw InvalidArgument("szeged_index supports n <= 40000");
    const DistanceMatrix d = all_pairs_distances(g);
    std::uint64_t sum = 0;
    for (const Edge &e : g.edges()) {
        const EdgeImbalance rec = count_sides(d, e.u, e.v);
        sum += static_cast<std::uint64_t>(rec.closer_to_x) * static_cast<std::uint64_t>(rec.closer_to_y);
    }
    return sum;
}

} // namespace dbclosure
