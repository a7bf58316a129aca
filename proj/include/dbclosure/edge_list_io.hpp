#ifndef DBCLOSURE_EDGE_LIST_IO_HPP
#define DBCLOSURE_EDGE_LIST_IO_HPP

#include <iosfwd>
#include <string>

#include "dbclosure/graph.hpp"

namespace dbclosure {

// Edge-list text format: the first non-comment line holds n, every further
// non-empty line holds "u v" (0-based).  Lines starting with '#' are comments.
// Duplicates and reversed pairs collapse to a single edge.

Graph read_edge_list(std::istream &in);
Graph read_edge_list_file(const std::string &path);

/// Writes n followed by the edges in lexicographic order.
void write_edge_list(std::ostream &out, const Graph &g);

} // namespace dbclosure

#endif
