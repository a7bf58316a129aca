#include "dbclosure/closure.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dbclosure/balance.hpp"
#include "dbclosure/distance.hpp"
#include "dbclosure/errors.hpp"
#include "dbclosure/search.hpp"

namespace dbclosure {

namespace {

// Removes the closed walk v0 v1 ... v_{k-1} v0.
void remove_cycle(Graph &g, const std::vector<int> &cycle) {
    for (std::size_t i = 0; i < cycle.size(); ++i)
        g.remove_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
}

std::vector<int> iota_cycle(int from, int to) {
    std::vector<int> out;
    for (int v = from; v <= to; ++v)
        out.push_back(v);
    return out;
}

bool needs_search(FamilyTag tag, int m) {
    return (tag == FamilyTag::S3 && m <= 4) || (tag == FamilyTag::S22 && m <= 2);
}

// Canonical labels: o = 0, x_i = i, y = m+1, z = m+2.
Graph closed_form(FamilyTag tag, int m) {
    const int y = m + 1, z = m + 2;
    switch (tag) {
    case FamilyTag::Star:
        return complete_graph(m + 1);
    case FamilyTag::S2: {
        Graph g = complete_graph(m + 2);
        if (m % 2 == 0) {
            g.remove_edge(0, y);
            for (int i = 1; i + 1 <= m; i += 2)
                g.remove_edge(i, i + 1);
        }
        return g;
    }
    case FamilyTag::S22:
    case FamilyTag::Broom: {
        Graph g = complete_graph(m + 3);
        remove_cycle(g, iota_cycle(1, m));
        remove_cycle(g, {0, y, z});
        return g;
    }
    case FamilyTag::S3: {
        Graph g = complete_graph(m + 3);
        remove_cycle(g, iota_cycle(3, m));
        remove_cycle(g, {0, y, 2, 1, z});
        return g;
    }
    default:
        throw UnsupportedFamily("no closed form for family " + std::string(to_string(tag)));
    }
}

std::vector<Edge> added_edges(const Graph &input, const Graph &closure) {
    std::vector<Edge> out;
    for (const Edge &e : closure.edges())
        if (!input.has_edge(e.u, e.v))
            out.push_back(e);
    return out;
}

ClosureResult finish(const Graph &input, Graph closure, long long expected_b, TreeFamily family,
                     ClosureMethod method) {
    ClosureResult res;
    res.added_edges = added_edges(input, closure);
    res.b = static_cast<int>(res.added_edges.size());
    res.certificate = verify_closure(input, closure, expected_b);
    res.closure = std::move(closure);
    res.family = std::move(family);
    res.method = method;
    return res;
}

long long choose2(long long k) { return k * (k - 1) / 2; }

} // namespace

long long b_formula(FamilyTag tag, long long m) {
    switch (tag) {
    case FamilyTag::Star:
        return choose2(m + 1) - m;
    case FamilyTag::S2:
        return m % 2 == 0 ? m * m / 2 - 1 : choose2(m + 1);
    case FamilyTag::S22:
    case FamilyTag::S3:
    case FamilyTag::Broom:
        return (m * m + m - 4) / 2;
    default:
        throw UnsupportedFamily("no b formula for family " + std::string(to_string(tag)));
    }
}

long long b_formula(const TreeFamily &family) { return b_formula(family.tag, family.m); }

ClosureResult construct_family_closure(FamilyTag tag, int m) {
    const Graph tree = family_tree(tag, m);
    const long long expected = b_formula(tag, m);
    TreeFamily family{tag, m, {}};
    for (int v = 0; v < tree.order(); ++v)
        family.relabeling.push_back(v);

    if (!needs_search(tag, m))
        return finish(tree, closed_form(tag, m), expected, std::move(family), ClosureMethod::ClosedForm);

    SearchConfig cfg;
    cfg.prune_mode = PruneMode::Regular;
    const SearchResult found = exact_b(tree, cfg);
    if (found.b != expected)
        throw std::logic_error("exact search gave b=" + std::to_string(found.b) + " for " +
                               std::string(to_string(tag)) + " m=" + std::to_string(m) + ", formula says " +
                               std::to_string(expected));
    Graph closure = tree;
    for (const Edge &e : found.witnesses.front())
        closure.add_edge(e.u, e.v);
    return finish(tree, std::move(closure), expected, std::move(family), ClosureMethod::Search);
}

ClosureResult construct_closure(const Graph &g) {
    if (!is_connected(g))
        throw Disconnected("graph is disconnected");
    const int n = g.order();

    if (!is_tree(g)) {
        if (g.max_degree() != n - 1)
            throw UnsupportedFamily("only trees with max degree >= n-3 and graphs with max degree n-1 are supported");
        TreeFamily family{FamilyTag::MaxDegMinus1, n - 1, {}};
        const long long expected = choose2(n) - static_cast<long long>(g.edge_count());
        return finish(g, complete_graph(n), expected, std::move(family), ClosureMethod::ClosedForm);
    }

    TreeFamily family = classify_tree(g);
    if (family.tag == FamilyTag::Other)
        throw UnsupportedFamily("tree with max degree " + std::to_string(family.m) + " < n-3 = " +
                                std::to_string(n - 3));
    if (n == 1)
        return finish(g, g, 0, std::move(family), ClosureMethod::ClosedForm);

    ClosureResult canonical = construct_family_closure(family.tag, family.m);
    // canonical index -> input label
    std::vector<int> back(n);
    for (int v = 0; v < n; ++v)
        back[family.relabeling[v]] = v;
    Graph closure = relabel(canonical.closure, back);
    return finish(g, std::move(closure), b_formula(family), std::move(family), canonical.method);
}

Certificate verify_closure(const Graph &t, const Graph &c, std::optional<long long> expected_b) {
    if (t.order() != c.order())
        throw SizeMismatch("orders differ: " + std::to_string(t.order()) + " vs " + std::to_string(c.order()));
    Certificate cert;
    cert.contains_input = is_spanning_subgraph(t, c);
    cert.diameter = diameter(c);
    cert.distance_balanced = is_distance_balanced(c);
    cert.regular_degree = regular_degree(c);
    if (expected_b) {
        const long long added = static_cast<long long>(c.edge_count()) - static_cast<long long>(t.edge_count());
        cert.matches_formula = added == *expected_b;
    }
    return cert;
}

} // namespace dbclosure
