#ifndef DBCLOSURE_TREES_HPP
#define DBCLOSURE_TREES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "dbclosure/graph.hpp"

namespace dbclosure {

/// Branch lengths of a starlike tree S(n_1, ..., n_k), in the order given.
struct StarlikeSpec {
    std::vector<int> branches;
};

/// Parses "3,1^4" style specs (length with optional ^multiplicity).
/// Throws ParseError or EmptySpec.
StarlikeSpec parse_starlike_spec(std::string_view text);
std::string to_string(const StarlikeSpec &spec);

// Canonical labelling shared by every family below: centre o = 0, its
// neighbours x_1..x_m = 1..m, and the pendant vertices y = m+1, z = m+2.
//
//   Star   K_{1,m}          o-x_i
//   S2     S(2,1^{m-1})     o-x_i, x_1-y
//   S22    S(2^2,1^{m-2})   o-x_i, x_1-y, x_2-z
//   Broom                   o-x_i, x_1-y, x_1-z
//   S3     S(3,1^{m-1})     o-x_i, x_1-y, y-z

enum class FamilyTag { Star, S2, S22, S3, Broom, MaxDegMinus1, Other };

std::string_view to_string(FamilyTag tag);

struct TreeFamily {
    FamilyTag tag = FamilyTag::Other;
    int m = 0; // maximum degree of the input
    /// relabeling[v] is the canonical index of input vertex v; empty for Other.
    std::vector<int> relabeling;
};

/// Starlike tree on sum(n_i) + 1 vertices with centre 0.  Specs that name one
/// of the families above get the canonical layout; otherwise branch j occupies
/// consecutive indices.  Throws EmptySpec or InvalidArgument.
Graph starlike(const StarlikeSpec &spec);

/// K_{1,m}, m >= 1.
Graph star(int m);

/// Star o-x_1..x_m with y and z pendant on x_1.  Throws ParameterTooSmall for
/// m < 3 (broom(2) is S(2,1^2) and stays in that family).
Graph broom(int m);

/// Canonical tree of a family with parameter m.  Throws UnsupportedFamily or
/// ParameterTooSmall.
Graph family_tree(FamilyTag tag, int m);

/// Smallest m for which family_tree(tag, m) is a member of that family under
/// classify_tree's precedence.
int family_min_m(FamilyTag tag);

/// Maps a tree with maximum degree >= n-3 onto its family and canonical
/// labelling; anything else is Other.  Precedence where families overlap:
/// Star > S2 > S22 > S3 > Broom.  Throws NotATree.
TreeFamily classify_tree(const Graph &t);

} // namespace dbclosure

#endif
