#include "scc/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace scc {

Graph::Graph(std::uint32_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges)
    : succ_(vertex_count) {
    for (const auto& [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count)
            throw std::out_of_range("edge endpoint outside vertex range");
        succ_[u].push_back(v);
    }
    for (auto& s : succ_) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        edge_count_ += s.size();
    }
}

void Graph::check_range(Vertex v) const {
    if (v >= vertex_count())
        throw std::out_of_range("vertex id outside graph");
}

std::span<const Vertex> Graph::successors(Vertex v) const {
    check_range(v);
    return succ_[v];
}

bool Graph::edge(Vertex x, Vertex y) const {
    check_range(x);
    check_range(y);
    const auto& s = succ_[x];
    return std::binary_search(s.begin(), s.end(), y);
}

bool reachable(const Graph& g, Vertex x, Vertex y) {
    if (x >= g.vertex_count() || y >= g.vertex_count())
        throw std::out_of_range("vertex id outside graph");
    if (x == y)
        return true;
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<Vertex> queue{x};
    seen[x] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (Vertex w : g.successors(queue[i])) {
            if (w == y)
                return true;
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
        }
    }
    return false;
}

VertexSet white_reachable(const Graph& g, const VertexSet& white, Vertex x) {
    const std::uint32_t n = g.vertex_count();
    if (x >= n)
        throw std::out_of_range("vertex id outside graph");
    if (white.universe() != n)
        throw std::logic_error("white set universe does not match graph");

    std::vector<char> in_cone(n, 0);
    in_cone[x] = 1;
    if (white.contains(x)) {
        // BFS inside the white region; every successor of a reached white
        // vertex joins the cone, white or not.
        std::vector<char> seen(n, 0);
        std::vector<Vertex> queue{x};
        seen[x] = 1;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            for (Vertex w : g.successors(queue[i])) {
                in_cone[w] = 1;
                if (white.contains(w) && !seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            }
        }
    }

    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v)
        if (in_cone[v])
            members.push_back(v);
    return VertexSet::of(members, n);
}

TransitiveClosure::TransitiveClosure(const Graph& g)
    : n_(g.vertex_count()), words_((n_ + 63) / 64), bits_(static_cast<std::size_t>(n_) * words_) {
    std::vector<Vertex> queue;
    std::vector<char> seen(n_);
    for (Vertex s = 0; s < n_; ++s) {
        std::fill(seen.begin(), seen.end(), 0);
        queue.assign(1, s);
        seen[s] = 1;
        std::uint64_t* row = bits_.data() + static_cast<std::size_t>(s) * words_;
        row[s >> 6] |= 1ull << (s & 63);
        for (std::size_t i = 0; i < queue.size(); ++i) {
            for (Vertex w : g.successors(queue[i])) {
                if (!seen[w]) {
                    seen[w] = 1;
                    row[w >> 6] |= 1ull << (w & 63);
                    queue.push_back(w);
                }
            }
        }
    }
}

} // namespace scc
