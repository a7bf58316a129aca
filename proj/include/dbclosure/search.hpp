#ifndef DBCLOSURE_SEARCH_HPP
#define DBCLOSURE_SEARCH_HPP

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "dbclosure/errors.hpp"
#include "dbclosure/graph.hpp"

namespace dbclosure {

// Exact b(G): the fewest edges whose addition makes G distance-balanced.
//
// Levels k = 0, 1, 2, ... are searched in order.  Inside a level the k-subsets
// of complement_edges(g) are visited in lexicographic order, so the first hit
// is both minimal and the canonical (lexicographically smallest) witness.
//
// In regular mode only r-regular candidates are visited, where r is pinned by
// n*r/2 = |E(g)| + k.  That restriction is exact when g has diameter <= 2 or g
// is a tree with maximum degree >= n-3, since every distance-balanced
// supergraph is then regular; elsewhere the mode is refused.

inline constexpr int kMaxSearchOrder = 64;

enum class PruneMode { Naive, Regular };

std::string_view to_string(PruneMode mode);

/// Polled from other threads while a search runs.
struct SearchProgress {
    std::atomic<int> current_k{0};
    std::atomic<std::uint64_t> explored{0};
};

struct SearchConfig {
    PruneMode prune_mode = PruneMode::Naive;
    std::optional<int> max_k;
    bool all_witnesses = false;
    std::optional<double> time_budget_seconds;
    int threads = 1;
    SearchProgress *progress = nullptr;
};

struct SearchResult {
    int b = 0;
    /// Lexicographically smallest witness first; all minimal ones when requested.
    std::vector<std::vector<Edge>> witnesses;
    /// Candidates tested, in lexicographic order, up to and including the
    /// reported witness (the whole last level with all_witnesses).  Identical
    /// for every thread count.
    std::uint64_t explored = 0;
    PruneMode mode_used = PruneMode::Naive;
};

/// Thrown when max_k or the time budget stops the search.  b >= lower_bound is
/// certified: every level below it was exhausted.
class BudgetExceeded : public Error {
  public:
    BudgetExceeded(const std::string &what, int lower_bound, std::uint64_t explored)
        : Error(what), lower_bound(lower_bound), explored(explored) {}

    int lower_bound;
    std::uint64_t explored;
};

/// True when regular-mode pruning is exact for g.
bool regular_pruning_justified(const Graph &g);

/// Throws Disconnected, TooLarge (n > 64), PruneModeUnjustified, BudgetExceeded.
SearchResult exact_b(const Graph &g, const SearchConfig &cfg = {});

/// Calls `visit` for every r-regular supergraph of g on the same labels, in
/// lexicographic order of the added-edge sets; stops early when `visit`
/// returns false.  Throws InfeasibleDegree or TooLarge.
void for_each_regular_supergraph(const Graph &g, int r, const std::function<bool(const Graph &)> &visit);

std::vector<Graph> enumerate_regular_supergraphs(const Graph &g, int r);

/// Number of k-edge additions to g that give a distance-balanced graph.
std::uint64_t db_filter_count(const Graph &g, int k, int threads = 1);

} // namespace dbclosure

#endif
