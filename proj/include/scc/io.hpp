#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "scc/graph.hpp"
#include "scc/partition.hpp"

namespace scc {

struct GraphParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Edge-list format: '#' comment lines, header "n <count>", then one
/// "u v" pair per line with 0 <= u,v < count. Duplicates are dropped.
Graph parse_edge_list(std::istream& in);

/// DIMACS directed format: 'c' comments, "p edge <n> <m>" header, then m
/// arcs "a u v" with 1-based ids. The arc count must match the header.
Graph parse_dimacs(std::istream& in);

/// Sniffs the format from the first significant line ('p'/'c' -> DIMACS,
/// otherwise edge list). Throws GraphParseError on malformed input.
Graph load_graph(std::istream& in);
Graph load_graph_file(const std::string& path);

/// One line per component, members ascending, components by least member.
std::string format_sccs(const SccPartition& partition);

/// Condensation as deterministic text: one "C<least-member>" line per
/// component (sorted), then deduplicated "Ci -> Cj" edge lines between
/// distinct components (sorted). Throws std::invalid_argument when the
/// partition does not partition g's vertices.
std::string format_condensation(const Graph& g, const SccPartition& partition);

} // namespace scc
