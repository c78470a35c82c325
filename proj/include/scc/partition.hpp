#pragma once

#include <cstdint>
#include <vector>

#include "scc/cons_list.hpp"
#include "scc/vertex_set.hpp"

namespace scc {

/// Set of vertex sets in canonical form: members of each component sorted
/// ascending, components ordered by least member. All partition equality in
/// the project goes through this form.
///
/// A value can also hold a non-partition (overlapping or incomplete
/// components) so that broken runs remain representable for diagnostics;
/// is_partition_of() tells the two apart.
class SccPartition {
public:
    SccPartition() = default;

    static SccPartition canonical(std::vector<std::vector<Vertex>> components);

    [[nodiscard]] const std::vector<std::vector<Vertex>>& components() const {
        return components_;
    }
    [[nodiscard]] std::size_t component_count() const { return components_.size(); }

    /// Components are non-empty, pairwise disjoint, and cover 0..n-1 exactly.
    [[nodiscard]] bool is_partition_of(std::uint32_t vertex_count) const;

    friend bool operator==(const SccPartition& a, const SccPartition& b) = default;

private:
    std::vector<std::vector<Vertex>> components_;
};

/// Canonical partition from an environment's component list.
SccPartition partition_from_sccs(const ConsList<std::vector<Vertex>>& sccs);

} // namespace scc
