#ifndef DBCLOSURE_CLOSURE_HPP
#define DBCLOSURE_CLOSURE_HPP

#include <optional>
#include <vector>

#include "dbclosure/graph.hpp"
#include "dbclosure/trees.hpp"

namespace dbclosure {

struct Certificate {
    bool contains_input = false;
    bool distance_balanced = false;
    int diameter = 0;
    std::optional<int> regular_degree;
    /// Absent when no expected b was supplied.
    std::optional<bool> matches_formula;

    bool all_pass() const { return contains_input && distance_balanced && matches_formula.value_or(true); }
};

enum class ClosureMethod { ClosedForm, Search };

struct ClosureResult {
    Graph closure{1};
    std::vector<Edge> added_edges; // closure minus input, lexicographic
    int b = 0;
    Certificate certificate;
    TreeFamily family;
    ClosureMethod method = ClosureMethod::ClosedForm;
};

/// b(T) for a recognised tree family:
///   Star            C(m+1,2) - m
///   S2              m^2/2 - 1 (m even), C(m+1,2) (m odd)
///   S22, S3, Broom  (m^2 + m - 4)/2
/// Throws UnsupportedFamily for Other and MaxDegMinus1.
long long b_formula(FamilyTag tag, long long m);
long long b_formula(const TreeFamily &family);

/// Minimal distance-balanced closure of a tree with maximum degree >= n-3, or
/// of any connected graph with maximum degree n-1 (closure K_n).  Output uses
/// the input's labels.  S3 with m <= 4 and S22 with m = 2 have no closed-form
/// construction and are solved by exact search, then checked against
/// b_formula.  Throws UnsupportedFamily, Disconnected.
ClosureResult construct_closure(const Graph &g);

/// Closure of the canonical family tree, in canonical labels.
ClosureResult construct_family_closure(FamilyTag tag, int m);

/// Throws SizeMismatch, Disconnected (when c is disconnected).
Certificate verify_closure(const Graph &t, const Graph &c, std::optional<long long> expected_b = std::nullopt);

} // namespace dbclosure

#endif
