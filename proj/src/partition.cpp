#include "scc/partition.hpp"

#include <algorithm>

namespace scc {

SccPartition SccPartition::canonical(std::vector<std::vector<Vertex>> components) {
    for (auto& c : components)
        std::sort(c.begin(), c.end());
    std::sort(components.begin(), components.end(),
              [](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
                  // empty components (only possible in broken runs) sort last
                  if (a.empty() != b.empty())
                      return b.empty();
                  if (!a.empty() && a.front() != b.front())
                      return a.front() < b.front();
                  return a < b;
              });
    SccPartition out;
    out.components_ = std::move(components);
    return out;
}

bool SccPartition::is_partition_of(std::uint32_t vertex_count) const {
    std::vector<char> seen(vertex_count, 0);
    std::uint64_t total = 0;
    for (const auto& c : components_) {
        if (c.empty())
            return false;
        for (Vertex v : c) {
            if (v >= vertex_count || seen[v])
                return false;
            seen[v] = 1;
        }
        total += c.size();
    }
    return total == vertex_count;
}

SccPartition partition_from_sccs(const ConsList<std::vector<Vertex>>& sccs) {
    std::vector<std::vector<Vertex>> components;
    components.reserve(sccs.size());
    for (const auto& c : sccs)
        components.push_back(c);
    return SccPartition::canonical(std::move(components));
}

} // namespace scc
