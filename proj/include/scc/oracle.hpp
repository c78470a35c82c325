#pragma once

#include <span>
#include <vector>

#include "scc/graph.hpp"
#include "scc/partition.hpp"

namespace scc {

/// Mutual reachability of x and y.
bool in_same_scc(const Graph& g, Vertex x, Vertex y);

/// True iff s is a non-empty, pairwise mutually reachable, maximal vertex
/// set: no vertex outside s is mutually reachable with a member.
bool is_scc(const Graph& g, const VertexSet& s);

/// Ground-truth SCC partition: equivalence classes of mutual reachability,
/// computed from the full transitive closure (one BFS per vertex). Shares
/// nothing with either Tarjan implementation.
SccPartition scc_oracle(const Graph& g);

/// Reachability closure plus oracle partition for one graph, built once and
/// reused by the invariant checkers so that checked runs do not redo a BFS
/// per clause.
struct SccFacts {
    explicit SccFacts(const Graph& g);

    TransitiveClosure closure;
    SccPartition partition;
    std::vector<std::uint32_t> component_index; // vertex -> position in partition

    [[nodiscard]] bool reachable(Vertex x, Vertex y) const { return closure.reachable(x, y); }
    [[nodiscard]] bool same_scc(Vertex x, Vertex y) const {
        return component_index[x] == component_index[y];
    }
    [[nodiscard]] std::span<const Vertex> component_of(Vertex v) const {
        return partition.components()[component_index[v]];
    }
};

} // namespace scc
