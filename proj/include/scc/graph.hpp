#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "scc/vertex_set.hpp"

namespace scc {

/// Finite directed graph over dense vertex ids 0..n-1. Immutable after
/// construction; successor lists are deduplicated and sorted ascending.
/// Self-loops are allowed.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::uint32_t vertex_count) : succ_(vertex_count) {}
    Graph(std::uint32_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges);

    [[nodiscard]] std::uint32_t vertex_count() const {
        return static_cast<std::uint32_t>(succ_.size());
    }
    [[nodiscard]] std::uint64_t edge_count() const { return edge_count_; }

    /// Successor set of v. Throws std::out_of_range for v >= vertex_count().
    [[nodiscard]] std::span<const Vertex> successors(Vertex v) const;

    /// True iff y is a successor of x. Throws std::out_of_range on bad ids.
    [[nodiscard]] bool edge(Vertex x, Vertex y) const;

    friend bool operator==(const Graph& a, const Graph& b) = default;

private:
    void check_range(Vertex v) const;

    std::vector<std::vector<Vertex>> succ_;
    std::uint64_t edge_count_ = 0;
};

/// Path-or-equal reachability (reflexive, transitive), by breadth-first
/// search. Throws std::out_of_range on bad ids.
bool reachable(const Graph& g, Vertex x, Vertex y);

/// Vertices y with a path x -> ... -> y whose vertices before y all lie in
/// `white`. The empty path always contributes x itself; a non-white x
/// contributes nothing else. Targets themselves may be non-white: the cone
/// crosses exactly one edge out of the white region.
VertexSet white_reachable(const Graph& g, const VertexSet& white, Vertex x);

/// Full reachability relation, one BFS per source. O(1) queries afterwards.
class TransitiveClosure {
public:
    explicit TransitiveClosure(const Graph& g);

    [[nodiscard]] bool reachable(Vertex x, Vertex y) const {
        return (bits_[static_cast<std::size_t>(x) * words_ + (y >> 6)] >> (y & 63)) & 1;
    }

private:
    std::uint32_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

} // namespace scc
