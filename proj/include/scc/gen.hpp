#pragma once

#include <cstdint>
#include <string_view>

#include "scc/graph.hpp"

namespace scc {

enum class GraphModel { gnp, dag, cycle_chain, complete, empty };

/// Description of a seeded random digraph. The same spec always produces
/// the same graph, bit for bit: the generator is splitmix64 (see prng.hpp)
/// and gnp/dag sample edge gaps geometrically, skip = floor(log1p(-u) /
/// log1p(-p)) over the row-major pair enumeration.
struct GraphSpec {
    GraphModel model = GraphModel::empty;
    std::uint32_t n = 0;
    double p = 0.0;       // gnp, dag
    std::uint32_t k = 1;  // cycle_chain: number of cycles
    std::uint64_t seed = 0;
};

/// Parses "model:key=value,..." such as "gnp:n=100,p=0.05,seed=42".
/// Models: gnp, dag, cycle_chain (k=...), complete, empty.
/// Throws std::invalid_argument on malformed input.
GraphSpec parse_graph_spec(std::string_view text);

/// Deterministic graph for the spec.
///   gnp          each ordered pair u != v independently with probability p
///   dag          pairs u < v with probability p (SCCs are all singletons)
///   cycle_chain  k balanced disjoint cycles, each linked to the next
///   complete     every ordered pair u != v
///   empty        no edges
/// Throws std::domain_error when p is outside [0,1] or cycle_chain's k
/// does not fit the vertex count.
Graph generate(const GraphSpec& spec);

} // namespace scc
