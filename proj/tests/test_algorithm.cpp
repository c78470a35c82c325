#include "doctest.h"

#include "scc/algorithm.hpp"
#include "scc/gen.hpp"
#include "scc/oracle.hpp"

using namespace scc;

namespace {

Graph make(std::uint32_t n, std::vector<std::pair<Vertex, Vertex>> edges) {
    return Graph(n, edges);
}

} // namespace

TEST_CASE("dfs1 on an isolated vertex emits a singleton component") {
    const Graph g(1);
    const DfsResult r = dfs1(g, 0, init_env(g), ChoiceOrder::smallest_id());
    CHECK(r.value.is_infinity());
    CHECK(r.env.stack.empty());
    CHECK(r.env.black.contains(0));
    CHECK(r.env.gray.empty());
    CHECK(r.env.num.at(0).is_infinity());
    REQUIRE(r.env.sccs.size() == 1);
    CHECK(r.env.sccs.head() == std::vector<Vertex>{0});
    CHECK(partition_from_sccs(r.env.sccs) == scc_oracle(g));
}

TEST_CASE("dfs1 on a self-loop emits the singleton") {
    const Graph g = make(1, {{0, 0}});
    const DfsResult r = dfs1(g, 0, init_env(g), ChoiceOrder::smallest_id());
    CHECK(r.value.is_infinity());
    CHECK(partition_from_sccs(r.env.sccs) == scc_oracle(g));
}

TEST_CASE("dfs1 trace of the 2-cycle") {
    const Graph g = make(2, {{0, 1}, {1, 0}});
    const ChoiceOrder order = ChoiceOrder::smallest_id();

    // Inner visit: with 0 already pushed, visiting 1 finds the back edge and
    // returns 0's serial, keeping 1 on the stack as a black vertex.
    const Env pushed0 = add_stack_incr(0, init_env(g));
    const DfsResult inner = dfs1(g, 1, pushed0, order);
    CHECK(inner.value == NumMark::serial(0));
    CHECK(inner.env.black.contains(1));
    CHECK_FALSE(inner.env.gray.contains(1));
    CHECK(inner.env.stack.to_vector() == std::vector<Vertex>{1, 0});
    CHECK(inner.env.sccs.empty());

    // Full visit from scratch pops {0,1} at the base.
    const DfsResult full = dfs1(g, 0, init_env(g), order);
    CHECK(full.value.is_infinity());
    CHECK(partition_from_sccs(full.env.sccs) == scc_oracle(g));
    CHECK(full.env.stack.empty());
}

TEST_CASE("dfs base cases") {
    const Graph g = make(3, {{0, 1}, {1, 0}});
    const Env e0 = init_env(g);
    const ChoiceOrder order = ChoiceOrder::smallest_id();

    const DfsResult empty = dfs(g, VertexSet::empty_set(3), e0, order);
    CHECK(empty.value.is_infinity());
    CHECK(empty.env == e0);

    const Env pushed = add_stack_incr(2, e0);
    const DfsResult visited =
        dfs(g, VertexSet::of(std::vector<Vertex>{2}, 3), pushed, order);
    CHECK(visited.value == NumMark::serial(0));
    CHECK(visited.env == pushed);
}

TEST_CASE("dfs over all vertices gathers the components") {
    const Graph g = make(3, {{0, 1}, {1, 0}});
    const DfsResult r =
        dfs(g, VertexSet::full_set(3), init_env(g), ChoiceOrder::smallest_id());
    CHECK(partition_from_sccs(r.env.sccs) == scc_oracle(g));
    CHECK(partition_from_sccs(r.env.sccs).component_count() == 2);
}

TEST_CASE("tarjan examples") {
    CHECK(tarjan(Graph(0)).component_count() == 0);

    const Graph arrow = make(2, {{0, 1}});
    CHECK(tarjan(arrow) == scc_oracle(arrow));
    CHECK(tarjan(arrow).component_count() == 2);

    const Graph cycle3 = make(3, {{0, 1}, {1, 2}, {2, 0}});
    const SccPartition p = tarjan(cycle3);
    REQUIRE(p.component_count() == 1);
    CHECK(p.components()[0] == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("tarjan matches the oracle across a seeded campaign") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        GraphSpec spec;
        spec.model = GraphModel::gnp;
        spec.n = static_cast<std::uint32_t>(seed % 9);
        spec.p = 0.15 * static_cast<double>(seed % 7);
        if (spec.p > 1.0)
            spec.p = 1.0;
        spec.seed = seed;
        const Graph g = generate(spec);
        CHECK(tarjan(g) == scc_oracle(g));
    }
}

TEST_CASE("every vertex lands in exactly one component") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        GraphSpec spec;
        spec.model = GraphModel::gnp;
        spec.n = 8;
        spec.p = 0.3;
        spec.seed = 500 + seed;
        const Graph g = generate(spec);
        CHECK(tarjan(g).is_partition_of(8));
    }
}

TEST_CASE("choice order does not change the partition") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        GraphSpec spec;
        spec.model = GraphModel::gnp;
        spec.n = 7;
        spec.p = 0.35;
        spec.seed = 900 + seed;
        const Graph g = generate(spec);
        const SccPartition base = tarjan(g, ChoiceOrder::smallest_id());
        for (std::uint64_t k = 1; k <= 4; ++k)
            CHECK(tarjan(g, ChoiceOrder::seeded(k, 7)) == base);
    }
}

TEST_CASE("default_fuel matches n*(n+1)+n") {
    CHECK(default_fuel(10) == 120);
    CHECK(default_fuel(0) == 0);
}

TEST_CASE("fuel-bounded driver") {
    // Fuel 0 on a non-empty graph hits the dummy.
    CHECK_FALSE(tarjan_fueled(make(2, {{0, 1}}), 0).has_value());
    // The empty graph needs no fuel at all.
    CHECK(tarjan_fueled(Graph(0), 0).has_value());

    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        GraphSpec spec;
        spec.model = GraphModel::gnp;
        spec.n = static_cast<std::uint32_t>(seed % 12) + 1;
        spec.p = 0.25;
        spec.seed = 3000 + seed;
        const Graph g = generate(spec);
        const auto fueled = tarjan_fueled(g, default_fuel(spec.n));
        REQUIRE(fueled.has_value());
        CHECK(*fueled == tarjan(g));
    }
}
