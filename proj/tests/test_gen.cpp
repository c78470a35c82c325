#include "doctest.h"

#include "scc/fast_scc.hpp"
#include "scc/gen.hpp"
#include "scc/oracle.hpp"

using namespace scc;

TEST_CASE("generation is deterministic") {
    GraphSpec spec = parse_graph_spec("gnp:n=60,p=0.08,seed=42");
    const Graph a = generate(spec);
    const Graph b = generate(spec);
    CHECK(a == b);
    spec.seed = 43;
    CHECK_FALSE(generate(spec) == a);
}

TEST_CASE("spec string parsing") {
    const GraphSpec spec = parse_graph_spec("gnp:n=100,p=0.05,seed=42");
    CHECK(spec.model == GraphModel::gnp);
    CHECK(spec.n == 100);
    CHECK(spec.p == doctest::Approx(0.05));
    CHECK(spec.seed == 42);
    CHECK(parse_graph_spec("empty:n=0").n == 0);
    CHECK(parse_graph_spec("cycle_chain:n=6,k=3").k == 3);
    CHECK_THROWS_AS((void)parse_graph_spec("blob:n=3"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_graph_spec("gnp:n=3,q=1"), std::invalid_argument);
}

TEST_CASE("probability bounds are enforced") {
    CHECK_THROWS_AS((void)generate(parse_graph_spec("gnp:n=4,p=1.5")), std::domain_error);
    CHECK_THROWS_AS((void)generate(parse_graph_spec("dag:n=4,p=-0.1")), std::domain_error);
}

TEST_CASE("edge cases of the models") {
    CHECK(generate(parse_graph_spec("empty:n=0")).vertex_count() == 0);
    CHECK(generate(parse_graph_spec("gnp:n=5,p=0")).edge_count() == 0);
    CHECK(generate(parse_graph_spec("gnp:n=5,p=1")).edge_count() == 20);
    const Graph k4 = generate(parse_graph_spec("complete:n=4"));
    CHECK(k4.edge_count() == 12);
}

TEST_CASE("dag graphs only have singleton components") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        GraphSpec spec;
        spec.model = GraphModel::dag;
        spec.n = 30;
        spec.p = 0.2;
        spec.seed = seed;
        const Graph g = generate(spec);
        for (Vertex u = 0; u < spec.n; ++u)
            for (Vertex v : g.successors(u))
                CHECK(u < v);
        CHECK(scc_oracle(g).component_count() == spec.n);
        CHECK(tarjan_fast(g).component_count() == spec.n);
    }
}

TEST_CASE("cycle_chain builds k linked cycles") {
    const Graph g = generate(parse_graph_spec("cycle_chain:n=6,k=3"));
    const SccPartition p = scc_oracle(g);
    REQUIRE(p.component_count() == 3);
    for (const auto& c : p.components())
        CHECK(c.size() == 2);

    CHECK_THROWS_AS((void)generate(parse_graph_spec("cycle_chain:n=2,k=5")), std::domain_error);
}
