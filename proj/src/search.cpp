#include "dbclosure/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <climits>
#include <thread>

#include "dbclosure/distance.hpp"

namespace dbclosure {

namespace {

using Clock = std::chrono::steady_clock;
using AdjRows = std::array<std::uint64_t, kMaxSearchOrder>;

constexpr std::uint64_t kPollMask = 1023;

// Distance-balance test on a bitset graph.  Keeps the BFS layers of every
// vertex: layer[s][d] is the set of vertices at distance d from s.  For an
// edge xy, |W_xy| is the sum over d of |layer[x][d] & layer[y][d+1]|.
class BalanceChecker {
  public:
    explicit BalanceChecker(int n) : n_(n), all_(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1) {}

    bool balanced(const AdjRows &adj) {
        for (int s = 0; s < n_; ++s) {
            auto &layer = layers_[s];
            std::uint64_t seen = std::uint64_t{1} << s;
            std::uint64_t frontier = seen;
            int d = 0;
            layer[0] = frontier;
            while (true) {
                std::uint64_t next = 0;
                for (std::uint64_t bits = frontier; bits; bits &= bits - 1)
                    next |= adj[std::countr_zero(bits)];
                next &= ~seen;
                if (!next)
                    break;
                seen |= next;
                layer[++d] = next;
                frontier = next;
            }
            layer[d + 1] = 0;
            depth_[s] = d;
            if (seen != all_)
                return false;
        }
        for (int x = 0; x < n_; ++x) {
            for (std::uint64_t bits = adj[x] >> x; bits; bits &= bits - 1) {
                const int y = x + std::countr_zero(bits);
                if (y == x)
                    continue;
                const int top = std::min(depth_[x], depth_[y]);
                int wx = 0, wy = 0;
                for (int d = 0; d <= top; ++d) {
                    wx += std::popcount(layers_[x][d] & layers_[y][d + 1]);
                    wy += std::popcount(layers_[y][d] & layers_[x][d + 1]);
                }
                if (wx != wy)
                    return false;
            }
        }
        return true;
    }

  private:
    int n_;
    std::uint64_t all_;
    std::array<std::array<std::uint64_t, kMaxSearchOrder + 1>, kMaxSearchOrder> layers_{};
    std::array<int, kMaxSearchOrder> depth_{};
};

enum class Goal { First, All, Count, Enumerate };

// Read-only description of one level, shared by all workers.
struct LevelTask {
    int n = 0;
    AdjRows base{};
    std::array<int, kMaxSearchOrder> base_degree{};
    const std::vector<Edge> *cands = nullptr;
    int k = 0;
    PruneMode mode = PruneMode::Naive;
    int r = 0; // regular mode target degree
    Goal goal = Goal::First;
    std::optional<Clock::time_point> deadline;
    const std::function<bool(const AdjRows &)> *enumerate = nullptr;

    // shared mutable state
    std::atomic<int> *best_chunk = nullptr;
    std::atomic<bool> *timed_out = nullptr;
    std::atomic<bool> *stop_all = nullptr;
    SearchProgress *progress = nullptr;
};

struct ChunkOutcome {
    std::uint64_t tested = 0;
    std::uint64_t hit_count = 0;
    std::vector<std::vector<int>> hits;
};

// Enumerates the k-subsets whose smallest candidate index is `first`.
class ChunkRunner {
  public:
    explicit ChunkRunner(const LevelTask &task) : task_(task), checker_(task.n) {}

    ChunkOutcome run(int first) {
        out_ = {};
        stop_ = false;
        chunk_ = first;
        adj_ = task_.base;
        chosen_.clear();
        const auto &cands = *task_.cands;
        const int total = static_cast<int>(cands.size());

        if (task_.mode == PruneMode::Regular) {
            for (int v = 0; v < task_.n; ++v) {
                need_[v] = task_.r - task_.base_degree[v];
                avail_[v] = 0;
            }
            for (int j = first + 1; j < total; ++j) {
                ++avail_[cands[j].u];
                ++avail_[cands[j].v];
            }
            const Edge e = cands[first];
            if (need_[e.u] <= 0 || need_[e.v] <= 0)
                return out_;
            --need_[e.u];
            --need_[e.v];
            for (int v = 0; v < task_.n; ++v)
                if (need_[v] > avail_[v])
                    return out_;
        }
        push(first);
        if (task_.mode == PruneMode::Regular)
            extend_regular(first + 1, task_.k - 1);
        else
            extend_naive(first + 1, task_.k - 1);
        return out_;
    }

  private:
    void push(int j) {
        const Edge e = (*task_.cands)[j];
        adj_[e.u] |= std::uint64_t{1} << e.v;
        adj_[e.v] |= std::uint64_t{1} << e.u;
        chosen_.push_back(j);
    }

    void pop() {
        const Edge e = (*task_.cands)[chosen_.back()];
        adj_[e.u] &= ~(std::uint64_t{1} << e.v);
        adj_[e.v] &= ~(std::uint64_t{1} << e.u);
        chosen_.pop_back();
    }

    void extend_naive(int start, int remaining) {
        if (remaining == 0) {
            visit();
            return;
        }
        const int last = static_cast<int>(task_.cands->size()) - remaining;
        for (int j = start; j <= last && !stop_; ++j) {
            push(j);
            extend_naive(j + 1, remaining - 1);
            pop();
        }
    }

    // need_[v]: edges v still has to receive; avail_[v]: candidates incident to
    // v at indices >= the current position.
    void extend_regular(int start, int remaining) {
        if (remaining == 0) {
            visit();
            return;
        }
        const auto &cands = *task_.cands;
        const int total = static_cast<int>(cands.size());
        int j = start;
        for (; j < total && !stop_; ++j) {
            const Edge e = cands[j];
            --avail_[e.u];
            --avail_[e.v];
            if (need_[e.u] > 0 && need_[e.v] > 0) {
                --need_[e.u];
                --need_[e.v];
                push(j);
                extend_regular(j + 1, remaining - 1);
                pop();
                ++need_[e.u];
                ++need_[e.v];
            }
            // from here on j is excluded
            if (need_[e.u] > avail_[e.u] || need_[e.v] > avail_[e.v]) {
                ++j;
                break;
            }
        }
        for (int i = start; i < j; ++i) {
            ++avail_[cands[i].u];
            ++avail_[cands[i].v];
        }
    }

    void visit() {
        ++out_.tested;
        if ((out_.tested & kPollMask) == 0)
            poll();
        if (stop_)
            return;
        switch (task_.goal) {
        case Goal::Enumerate:
            if (!(*task_.enumerate)(adj_)) {
                stop_ = true;
                task_.stop_all->store(true);
            }
            return;
        case Goal::Count:
            out_.hit_count += checker_.balanced(adj_);
            return;
        case Goal::All:
            if (checker_.balanced(adj_))
                out_.hits.push_back(chosen_);
            return;
        case Goal::First:
            if (checker_.balanced(adj_)) {
                out_.hits.push_back(chosen_);
                stop_ = true;
            }
            return;
        }
    }

    void poll() {
        if (task_.progress)
            task_.progress->explored.fetch_add(kPollMask + 1, std::memory_order_relaxed);
        if (task_.timed_out->load(std::memory_order_relaxed)) {
            stop_ = true;
            return;
        }
        if (task_.deadline && Clock::now() > *task_.deadline) {
            task_.timed_out->store(true);
            stop_ = true;
            return;
        }
        if (task_.goal == Goal::First && task_.best_chunk->load(std::memory_order_relaxed) < chunk_)
            stop_ = true;
    }

    const LevelTask &task_;
    BalanceChecker checker_;
    ChunkOutcome out_;
    bool stop_ = false;
    int chunk_ = 0;
    AdjRows adj_{};
    std::array<int, kMaxSearchOrder> need_{};
    std::array<int, kMaxSearchOrder> avail_{};
    std::vector<int> chosen_;
};

struct LevelOutcome {
    std::uint64_t explored = 0;
    std::uint64_t hit_count = 0;
    std::vector<std::vector<int>> hits;
};

void atomic_min(std::atomic<int> &target, int value) {
    int cur = target.load();
    while (value < cur && !target.compare_exchange_weak(cur, value)) {
    }
}

// Runs one level over all chunks, optionally on several threads, and merges
// the per-chunk outcomes in chunk order so the result does not depend on
// scheduling.
LevelOutcome run_level(LevelTask &task, int threads) {
    std::atomic<int> best{INT_MAX};
    std::atomic<bool> stop_all{false};
    task.best_chunk = &best;
    task.stop_all = &stop_all;

    LevelOutcome level;
    const int total = static_cast<int>(task.cands->size());

    if (task.k == 0) {
        level.explored = 1;
        bool ok = true;
        if (task.mode == PruneMode::Regular)
            for (int v = 0; v < task.n; ++v)
                ok = ok && task.base_degree[v] == task.r;
        if (!ok)
            return {};
        if (task.goal == Goal::Enumerate) {
            (*task.enumerate)(task.base);
            return level;
        }
        if (BalanceChecker(task.n).balanced(task.base)) {
            level.hit_count = 1;
            level.hits.push_back({});
        }
        return level;
    }
    if (task.k > total)
        return {};

    const int chunks = total - task.k + 1;
    std::vector<ChunkOutcome> outcomes(chunks);
    std::atomic<int> next{0};

    auto worker = [&] {
        ChunkRunner runner(task);
        while (true) {
            const int i = next.fetch_add(1);
            if (i >= chunks || stop_all.load() || task.timed_out->load())
                break;
            if (task.goal == Goal::First && i > best.load())
                break;
            outcomes[i] = runner.run(i);
            if (task.goal == Goal::First && !outcomes[i].hits.empty())
                atomic_min(best, i);
        }
    };

    const int extra = std::max(0, std::min(threads, chunks) - 1);
    std::vector<std::thread> pool;
    pool.reserve(extra);
    for (int t = 0; t < extra; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto &th : pool)
        th.join();

    for (int i = 0; i < chunks; ++i) {
        auto &o = outcomes[i];
        level.explored += o.tested;
        level.hit_count += o.hit_count;
        if (task.goal == Goal::First && !o.hits.empty()) {
            level.hits.push_back(std::move(o.hits.front()));
            break;
        }
        for (auto &h : o.hits)
            level.hits.push_back(std::move(h));
    }
    return level;
}

LevelTask make_task(const Graph &g, const std::vector<Edge> &cands) {
    LevelTask task;
    task.n = g.order();
    for (int v = 0; v < task.n; ++v) {
        task.base[v] = g.row64(v);
        task.base_degree[v] = g.degree(v);
    }
    task.cands = &cands;
    return task;
}

void require_search_size(const Graph &g) {
    if (g.order() > kMaxSearchOrder)
        throw TooLarge("exact search supports n <= " + std::to_string(kMaxSearchOrder) + ", got " +
                       std::to_string(g.order()));
}

void require_connected(const Graph &g) {
    if (!is_connected(g))
        throw Disconnected("graph is disconnected");
}

Graph to_graph(int n, const AdjRows &adj) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (std::uint64_t bits = adj[u] >> u; bits; bits &= bits - 1) {
            const int v = u + std::countr_zero(bits);
            if (v != u)
                g.add_edge(u, v);
        }
    return g;
}

std::vector<Edge> to_edges(const std::vector<Edge> &cands, const std::vector<int> &idx) {
    std::vector<Edge> out;
    out.reserve(idx.size());
    for (int i : idx)
        out.push_back(cands[i]);
    return out;
}

} // namespace

std::string_view to_string(PruneMode mode) { return mode == PruneMode::Naive ? "naive" : "regular"; }

bool regular_pruning_justified(const Graph &g) {
    if (diameter(g) <= 2)
        return true;
    return is_tree(g) && g.max_degree() >= g.order() - 3;
}

SearchResult exact_b(const Graph &g, const SearchConfig &cfg) {
    require_search_size(g);
    require_connected(g);
    if (cfg.prune_mode == PruneMode::Regular && !regular_pruning_justified(g))
        throw PruneModeUnjustified("regular pruning needs diameter <= 2 or a tree with max degree >= n-3");

    const std::vector<Edge> cands = complement_edges(g);
    const int total = static_cast<int>(cands.size());
    const int max_k = std::min(cfg.max_k.value_or(total), total);
    const int n = g.order();

    std::optional<Clock::time_point> deadline;
    if (cfg.time_budget_seconds)
        deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(*cfg.time_budget_seconds));
    std::atomic<bool> timed_out{false};

    LevelTask task = make_task(g, cands);
    task.mode = cfg.prune_mode;
    task.goal = cfg.all_witnesses ? Goal::All : Goal::First;
    task.deadline = deadline;
    task.timed_out = &timed_out;
    task.progress = cfg.progress;

    SearchResult result;
    result.mode_used = cfg.prune_mode;
    const auto base_edges = static_cast<int>(g.edge_count());
    for (int k = 0; k <= max_k; ++k) {
        if (cfg.progress)
            cfg.progress->current_k.store(k);
        if (deadline && Clock::now() > *deadline)
            timed_out.store(true);
        if (timed_out.load())
            throw BudgetExceeded("time budget exhausted at k=" + std::to_string(k), k, result.explored);

        task.k = k;
        if (cfg.prune_mode == PruneMode::Regular) {
            const int twice = 2 * (base_edges + k);
            if (twice % n != 0)
                continue;
            task.r = twice / n;
            if (task.r < g.max_degree() || task.r > n - 1)
                continue;
        }
        LevelOutcome level = run_level(task, std::max(1, cfg.threads));
        if (timed_out.load())
            throw BudgetExceeded("time budget exhausted at k=" + std::to_string(k), k,
                                 result.explored + level.explored);
        result.explored += level.explored;
        if (cfg.progress)
            cfg.progress->explored.store(result.explored);
        if (!level.hits.empty()) {
            result.b = k;
            for (const auto &h : level.hits)
                result.witnesses.push_back(to_edges(cands, h));
            return result;
        }
    }
    throw BudgetExceeded("no distance-balanced supergraph with at most " + std::to_string(max_k) + " added edges",
                         max_k + 1, result.explored);
}

void for_each_regular_supergraph(const Graph &g, int r, const std::function<bool(const Graph &)> &visit) {
    require_search_size(g);
    const int n = g.order();
    if (r < g.max_degree() || r > n - 1 || (n * r) % 2 != 0)
        throw InfeasibleDegree("no " + std::to_string(r) + "-regular supergraph: need max degree <= r <= n-1 and n*r even");

    const std::vector<Edge> cands = complement_edges(g);
    std::atomic<bool> timed_out{false};
    const std::function<bool(const AdjRows &)> adapter = [&](const AdjRows &adj) { return visit(to_graph(n, adj)); };

    LevelTask task = make_task(g, cands);
    task.mode = PruneMode::Regular;
    task.goal = Goal::Enumerate;
    task.r = r;
    task.k = n * r / 2 - static_cast<int>(g.edge_count());
    task.timed_out = &timed_out;
    task.enumerate = &adapter;
    run_level(task, 1);
}

std::vector<Graph> enumerate_regular_supergraphs(const Graph &g, int r) {
    std::vector<Graph> out;
    for_each_regular_supergraph(g, r, [&](const Graph &h) {
        out.push_back(h);
        return true;
    });
    return out;
}

std::uint64_t db_filter_count(const Graph &g, int k, int threads) {
    require_search_size(g);
    require_connected(g);
    const std::vector<Edge> cands = complement_edges(g);
    if (k < 0 || k > static_cast<int>(cands.size()))
        throw InvalidArgument("k must lie in [0, " + std::to_string(cands.size()) + "]");
    std::atomic<bool> timed_out{false};
    LevelTask task = make_task(g, cands);
    task.goal = Goal::Count;
    task.k = k;
    task.timed_out = &timed_out;
    return run_level(task, std::max(1, threads)).hit_count;
}

} // namespace dbclosure
