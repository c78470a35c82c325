#include "scc/algorithm.hpp"

#include <algorithm>
#include <limits>

namespace scc {

ChoiceOrder ChoiceOrder::seeded(std::uint64_t seed, std::uint32_t vertex_count) {
    std::vector<Vertex> perm(vertex_count);
    for (std::uint32_t i = 0; i < vertex_count; ++i)
        perm[i] = i;
    SplitMix64 rng(seed);
    for (std::uint32_t i = vertex_count; i > 1; --i)
        std::swap(perm[i - 1], perm[rng.next_below(i)]);
    ChoiceOrder order;
    order.rank_.resize(vertex_count);
    for (std::uint32_t pos = 0; pos < vertex_count; ++pos)
        order.rank_[perm[pos]] = pos;
    return order;
}

Vertex ChoiceOrder::pick(const VertexSet& s) const {
    if (rank_.empty())
        return s.first();
    Vertex best = 0;
    std::uint32_t best_rank = std::numeric_limits<std::uint32_t>::max();
    s.for_each([&](Vertex v) {
        if (rank_[v] < best_rank) {
            best_rank = rank_[v];
            best = v;
        }
    });
    return best;
}

namespace {

std::vector<Vertex> sorted_component(std::vector<Vertex> popped) {
    std::sort(popped.begin(), popped.end());
    return popped;
}

} // namespace

DfsResult dfs1(const Graph& g, Vertex x, Env e, const ChoiceOrder& order) {
    const std::uint32_t n0 = e.sn;
    DfsResult sub = dfs(g, VertexSet::of(g.successors(x), g.vertex_count()),
                        add_stack_incr(x, std::move(e)), order);
    if (num_lt(sub.value, NumMark::serial(n0)))
        return {sub.value, add_black(x, std::move(sub.env))};

    auto [s2, s3] = split(x, sub.env.stack);
    Env out;
    out.black = sub.env.black.with(x);
    // gray is invariant across the successor search, so the entry gray set
    // is exactly the inner one minus x.
    out.gray = sub.env.gray.without(x);
    out.stack = std::move(s3);
    out.sccs = sub.env.sccs.cons(sorted_component(s2));
    out.sn = sub.env.sn;
    out.num = set_infty(s2, sub.env.num);
    return {NumMark::infinity(), std::move(out)};
}

DfsResult dfs(const Graph& g, VertexSet roots, Env e, const ChoiceOrder& order) {
    NumMark acc = NumMark::infinity();
    while (!roots.empty()) {
        const Vertex x = order.pick(roots);
        roots = roots.without(x);
        NumMark n1;
        if (!e.num.at(x).is_unvisited()) {
            n1 = e.num.at(x);
        } else {
            DfsResult r = dfs1(g, x, std::move(e), order);
            n1 = r.value;
            e = std::move(r.env);
        }
        acc = num_min(acc, n1);
    }
    return {acc, std::move(e)};
}

SccPartition tarjan(const Graph& g, const ChoiceOrder& order) {
    DfsResult r = dfs(g, VertexSet::full_set(g.vertex_count()), init_env(g), order);
    return partition_from_sccs(r.env.sccs);
}

std::uint64_t default_fuel(std::uint32_t vertex_count) {
    const std::uint64_t n = vertex_count;
    return n * (n + 1) + n;
}

namespace {

struct FueledResult {
    bool exhausted = false;
    NumMark value = NumMark::infinity();
    Env env;
};

// One unit of fuel per search step: the step's trailing fold continues at
// fuel-1 and the inner successor search of a fresh visit starts at fuel-1.
// Entering a step with pending roots and no fuel yields the dummy.
FueledResult dfs_fueled(const Graph& g, VertexSet roots, Env e, std::uint64_t fuel,
                        const ChoiceOrder& order) {
    NumMark acc = NumMark::infinity();
    while (!roots.empty()) {
        if (fuel == 0)
            return {true, NumMark::infinity(), std::move(e)};
        const Vertex x = order.pick(roots);
        roots = roots.without(x);
        NumMark n1;
        if (!e.num.at(x).is_unvisited()) {
            n1 = e.num.at(x);
        } else {
            const std::uint32_t n0 = e.sn;
            FueledResult sub =
                dfs_fueled(g, VertexSet::of(g.successors(x), g.vertex_count()),
                           add_stack_incr(x, std::move(e)), fuel - 1, order);
            if (sub.exhausted)
                return sub;
            if (num_lt(sub.value, NumMark::serial(n0))) {
                n1 = sub.value;
                e = add_black(x, std::move(sub.env));
            } else {
                auto [s2, s3] = split(x, sub.env.stack);
                Env out;
                out.black = sub.env.black.with(x);
                out.gray = sub.env.gray.without(x);
                out.stack = std::move(s3);
                out.sccs = sub.env.sccs.cons(sorted_component(s2));
                out.sn = sub.env.sn;
                out.num = set_infty(s2, sub.env.num);
                n1 = NumMark::infinity();
                e = std::move(out);
            }
        }
        acc = num_min(acc, n1);
        --fuel;
    }
    return {false, acc, std::move(e)};
}

} // namespace

std::optional<SccPartition> tarjan_fueled(const Graph& g, std::uint64_t fuel,
                                          const ChoiceOrder& order) {
    FueledResult r = dfs_fueled(g, VertexSet::full_set(g.vertex_count()), init_env(g), fuel, order);
    if (r.exhausted)
        return std::nullopt;
    return partition_from_sccs(r.env.sccs);
}

} // namespace scc
