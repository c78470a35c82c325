#include "scc/oracle.hpp"

#include <algorithm>

namespace scc {

bool in_same_scc(const Graph& g, Vertex x, Vertex y) {
    return reachable(g, x, y) && reachable(g, y, x);
}

bool is_scc(const Graph& g, const VertexSet& s) {
    if (s.empty())
        return false;
    const auto members = s.to_vector();
    const Vertex rep = members.front();
    for (Vertex v : members)
        if (!in_same_scc(g, rep, v))
            return false;
    // Maximality: for an equivalence class it is enough that no outside
    // vertex is mutually reachable with the representative.
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!s.contains(v) && in_same_scc(g, rep, v))
            return false;
    return true;
}

SccPartition scc_oracle(const Graph& g) {
    const std::uint32_t n = g.vertex_count();
    TransitiveClosure closure(g);
    std::vector<std::vector<Vertex>> classes;
    std::vector<char> assigned(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        if (assigned[v])
            continue;
        std::vector<Vertex> cls{v};
        assigned[v] = 1;
        for (Vertex w = v + 1; w < n; ++w) {
            if (!assigned[w] && closure.reachable(v, w) && closure.reachable(w, v)) {
                cls.push_back(w);
                assigned[w] = 1;
            }
        }
        classes.push_back(std::move(cls));
    }
    return SccPartition::canonical(std::move(classes));
}

SccFacts::SccFacts(const Graph& g)
    : closure(g), partition(scc_oracle(g)), component_index(g.vertex_count(), 0) {
    for (std::uint32_t c = 0; c < partition.components().size(); ++c)
        for (Vertex v : partition.components()[c])
            component_index[v] = c;
}

} // namespace scc
