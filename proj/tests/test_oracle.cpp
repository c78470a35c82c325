#include "doctest.h"

#include "scc/gen.hpp"
#include "scc/oracle.hpp"

using namespace scc;

namespace {

Graph make(std::uint32_t n, std::vector<std::pair<Vertex, Vertex>> edges) {
    return Graph(n, edges);
}

} // namespace

TEST_CASE("in_same_scc is mutual reachability") {
    const Graph two_cycle = make(2, {{0, 1}, {1, 0}});
    CHECK(in_same_scc(two_cycle, 0, 0));
    CHECK(in_same_scc(two_cycle, 0, 1));
    const Graph arrow = make(2, {{0, 1}});
    CHECK_FALSE(in_same_scc(arrow, 0, 1));
}

TEST_CASE("is_scc requires non-empty, mutual, maximal") {
    const Graph arrow = make(2, {{0, 1}});
    CHECK(is_scc(arrow, VertexSet::of(std::vector<Vertex>{0}, 2)));

    const Graph two_cycle = make(2, {{0, 1}, {1, 0}});
    CHECK_FALSE(is_scc(two_cycle, VertexSet::of(std::vector<Vertex>{0}, 2))); // not maximal
    CHECK(is_scc(two_cycle, VertexSet::of(std::vector<Vertex>{0, 1}, 2)));

    CHECK_FALSE(is_scc(arrow, VertexSet::empty_set(2)));
}

TEST_CASE("scc_oracle groups mutual-reachability classes") {
    const Graph g = make(3, {{0, 1}, {1, 0}, {1, 2}});
    const SccPartition p = scc_oracle(g);
    REQUIRE(p.component_count() == 2);
    CHECK(p.components()[0] == std::vector<Vertex>{0, 1});
    CHECK(p.components()[1] == std::vector<Vertex>{2});

    CHECK(scc_oracle(Graph(0)).component_count() == 0);

    GraphSpec complete;
    complete.model = GraphModel::complete;
    complete.n = 4;
    const SccPartition k4 = scc_oracle(generate(complete));
    REQUIRE(k4.component_count() == 1);
    CHECK(k4.components()[0] == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("oracle classes partition the vertices and satisfy is_scc") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        GraphSpec spec;
        spec.model = GraphModel::gnp;
        spec.n = static_cast<std::uint32_t>(seed % 9);
        spec.p = 0.25 + 0.1 * static_cast<double>(seed % 5);
        spec.seed = seed;
        const Graph g = generate(spec);
        const SccPartition p = scc_oracle(g);
        CHECK(p.is_partition_of(spec.n));
        for (const auto& c : p.components())
            CHECK(is_scc(g, VertexSet::of(c, spec.n)));
    }
}
