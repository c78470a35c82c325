#pragma once

#include <cstdint>
#include <optional>

#include "scc/env.hpp"
#include "scc/graph.hpp"
#include "scc/partition.hpp"
#include "scc/prng.hpp"

namespace scc {

/// Deterministic rule for picking one vertex out of a non-empty set.
/// Default is smallest id (reproducible traces); the seeded variant ranks
/// vertices by a splitmix64-shuffled permutation so tests can sweep
/// arbitrary visit orders.
class ChoiceOrder {
public:
    static ChoiceOrder smallest_id() { return ChoiceOrder{}; }
    static ChoiceOrder seeded(std::uint64_t seed, std::uint32_t vertex_count);

    /// Member of s minimizing the rank. Pre: !s.empty().
    [[nodiscard]] Vertex pick(const VertexSet& s) const;

private:
    std::vector<std::uint32_t> rank_; // empty = identity ranking
};

/// Value returned by one search call: infinity or the serial of a stack
/// vertex, never unvisited, together with the updated environment.
struct DfsResult {
    NumMark value;
    Env env;
};

/// Visit the unvisited vertex x: push it, search its successors, then
/// either report the smaller value found (x's component is still open) or
/// pop x's component off the stack and emit it.
DfsResult dfs1(const Graph& g, Vertex x, Env e, const ChoiceOrder& order);

/// Fold over the root set: visited roots contribute their mark, unvisited
/// ones a dfs1 call; the result is the minimum contribution (infinity for
/// no roots). Iterates where a literal rendition would tail-recurse on
/// roots minus the picked vertex, so recursion depth stays bounded by the
/// nesting of dfs1 calls (at most the vertex count).
DfsResult dfs(const Graph& g, VertexSet roots, Env e, const ChoiceOrder& order);

/// The strongly connected components of g, as the canonical partition of
/// the component sets accumulated by dfs over all vertices.
SccPartition tarjan(const Graph& g, const ChoiceOrder& order = ChoiceOrder::smallest_id());

/// Fuel sufficient for any run: n*(n+1) + n recursion steps.
std::uint64_t default_fuel(std::uint32_t vertex_count);

/// Fuel-bounded driver: structurally recursive, spending one unit of fuel
/// per search step, with a dummy result when fuel runs out on pending
/// roots. With fuel = default_fuel the dummy is unreachable and the result
/// equals tarjan().
std::optional<SccPartition> tarjan_fueled(const Graph& g, std::uint64_t fuel,
                                          const ChoiceOrder& order = ChoiceOrder::smallest_id());

} // namespace scc
