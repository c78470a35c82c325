#include "doctest.h"

#include <vector>

#include "scc/gen.hpp"
#include "scc/graph.hpp"

using namespace scc;

namespace {

Graph make(std::uint32_t n, std::vector<std::pair<Vertex, Vertex>> edges) {
    return Graph(n, edges);
}

// Independent reachability oracle: reflexive closure by repeated squaring of
// the boolean adjacency matrix. Shares nothing with the BFS-based paths.
std::vector<std::vector<bool>> closure_by_squaring(const Graph& g) {
    const std::uint32_t n = g.vertex_count();
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (Vertex u = 0; u < n; ++u) {
        m[u][u] = true;
        for (Vertex v : g.successors(u))
            m[u][v] = true;
    }
    for (std::uint32_t step = 1; step < n; step *= 2) {
        std::vector<std::vector<bool>> sq(n, std::vector<bool>(n, false));
        for (Vertex i = 0; i < n; ++i)
            for (Vertex k = 0; k < n; ++k)
                if (m[i][k])
                    for (Vertex j = 0; j < n; ++j)
                        if (m[k][j])
                            sq[i][j] = true;
        m = std::move(sq);
    }
    return m;
}

} // namespace

TEST_CASE("successors returns the stored set") {
    const Graph g = make(2, {{0, 1}});
    CHECK(std::vector<Vertex>(g.successors(0).begin(), g.successors(0).end()) ==
          std::vector<Vertex>{1});
    CHECK(g.successors(1).empty());

    const Graph loop = make(1, {{0, 0}});
    CHECK(std::vector<Vertex>(loop.successors(0).begin(), loop.successors(0).end()) ==
          std::vector<Vertex>{0});

    const Graph isolated = make(3, {{0, 1}});
    CHECK(isolated.successors(2).empty());

    CHECK_THROWS_AS((void)g.successors(2), std::out_of_range);
}

TEST_CASE("edge checks membership") {
    const Graph g = make(2, {{0, 1}});
    CHECK(g.edge(0, 1));
    CHECK_FALSE(g.edge(1, 0));
    CHECK(make(1, {{0, 0}}).edge(0, 0));
    CHECK_THROWS_AS((void)g.edge(0, 5), std::out_of_range);
}

TEST_CASE("duplicate edges collapse") {
    const Graph g = make(2, {{0, 1}, {0, 1}, {0, 1}});
    CHECK(g.edge_count() == 1);
}

TEST_CASE("reachable basics") {
    const Graph chain = make(3, {{0, 1}, {1, 2}});
    for (Vertex v = 0; v < 3; ++v)
        CHECK(reachable(chain, v, v)); // empty path
    CHECK(reachable(chain, 0, 2));
    CHECK_FALSE(reachable(chain, 2, 0));
}

TEST_CASE("reachable agrees with repeated-squaring closure on random graphs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        GraphSpec spec;
        spec.model = GraphModel::gnp;
        spec.n = static_cast<std::uint32_t>(seed % 8) + 1;
        spec.p = 0.3;
        spec.seed = seed;
        const Graph g = generate(spec);
        const auto closure = closure_by_squaring(g);
        const TransitiveClosure tc(g);
        for (Vertex x = 0; x < spec.n; ++x)
            for (Vertex y = 0; y < spec.n; ++y) {
                CHECK(reachable(g, x, y) == closure[x][y]);
                CHECK(tc.reachable(x, y) == closure[x][y]);
            }
        // Transitivity of the closure itself.
        for (Vertex x = 0; x < spec.n; ++x)
            for (Vertex y = 0; y < spec.n; ++y)
                for (Vertex z = 0; z < spec.n; ++z)
                    if (closure[x][y] && closure[y][z])
                        CHECK(closure[x][z]);
    }
}

TEST_CASE("white_reachable: fully white universe equals plain reachability") {
    const Graph g = make(2, {{0, 1}});
    const VertexSet all = VertexSet::full_set(2);
    CHECK(white_reachable(g, all, 0) == VertexSet::of(std::vector<Vertex>{0, 1}, 2));

    GraphSpec spec;
    spec.model = GraphModel::gnp;
    spec.n = 7;
    spec.p = 0.35;
    spec.seed = 9;
    const Graph r = generate(spec);
    const VertexSet white = VertexSet::full_set(7);
    for (Vertex x = 0; x < 7; ++x) {
        std::vector<Vertex> reach;
        for (Vertex y = 0; y < 7; ++y)
            if (reachable(r, x, y))
                reach.push_back(y);
        CHECK(white_reachable(r, white, x) == VertexSet::of(reach, 7));
    }
}

TEST_CASE("white_reachable: non-white source contributes only itself") {
    const Graph g = make(2, {{0, 1}});
    const VertexSet none = VertexSet::empty_set(2);
    CHECK(white_reachable(g, none, 0) == VertexSet::of(std::vector<Vertex>{0}, 2));
}

TEST_CASE("white_reachable crosses exactly one edge out of the white region") {
    // 1 is not white, but it is the target of an edge whose source is white,
    // so it belongs to the cone; nothing beyond it does.
    const Graph g = make(3, {{0, 1}, {1, 2}});
    const VertexSet white = VertexSet::of(std::vector<Vertex>{0}, 3);
    CHECK(white_reachable(g, white, 0) == VertexSet::of(std::vector<Vertex>{0, 1}, 3));
}
