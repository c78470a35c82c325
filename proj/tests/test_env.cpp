#include "doctest.h"

#include "scc/env.hpp"
#include "scc/gen.hpp"
#include "scc/prng.hpp"

using namespace scc;

namespace {

ConsList<Vertex> list_of(std::vector<Vertex> vs) {
    ConsList<Vertex> out;
    for (auto it = vs.rbegin(); it != vs.rend(); ++it)
        out = out.cons(*it);
    return out;
}

} // namespace

TEST_CASE("NumMark ordering and min") {
    const NumMark a = NumMark::serial(1);
    const NumMark b = NumMark::serial(4);
    const NumMark inf = NumMark::infinity();
    CHECK(num_lt(a, b));
    CHECK(num_lt(a, inf));
    CHECK_FALSE(num_lt(inf, b));
    CHECK(num_min(a, b) == a);
    CHECK(num_min(inf, b) == b);
    CHECK(num_min(b, inf) == b);
    CHECK(num_min(inf, inf) == inf);
    CHECK_THROWS_AS((void)num_lt(NumMark::unvisited(), a), std::logic_error);

    // min is associative and commutative with infinity as identity
    const NumMark marks[] = {NumMark::serial(0), NumMark::serial(3), NumMark::serial(7), inf};
    for (auto x : marks)
        for (auto y : marks) {
            CHECK(num_min(x, y) == num_min(y, x));
            for (auto z : marks)
                CHECK(num_min(num_min(x, y), z) == num_min(x, num_min(y, z)));
        }
}

TEST_CASE("init_env is all-empty") {
    const Graph g(3);
    const Env e = init_env(g);
    CHECK(e.black.empty());
    CHECK(e.gray.empty());
    CHECK(e.stack.empty());
    CHECK(e.sccs.empty());
    CHECK(e.sn == 0);
    for (Vertex v = 0; v < 3; ++v)
        CHECK(e.num.at(v).is_unvisited());

    for (const auto& r : wf_env(g, e))
        CHECK(r.holds);
    CHECK(subenv(e, e).holds);
}

TEST_CASE("add_stack_incr pushes and stamps") {
    const Graph g(3);
    const Env e0 = init_env(g);
    const Env e1 = add_stack_incr(1, e0);
    CHECK(e1.stack.to_vector() == std::vector<Vertex>{1});
    CHECK(e1.gray.contains(1));
    CHECK(e1.num.at(1) == NumMark::serial(0));
    CHECK(e1.sn == 1);
    CHECK(e1.black == e0.black);
    CHECK(e1.sccs == e0.sccs);

    const Env e2 = add_stack_incr(2, e1);
    CHECK(e2.stack.to_vector() == std::vector<Vertex>{2, 1});
    CHECK(e2.num.at(2) == NumMark::serial(1));
    CHECK(e2.sn == 2);
}

TEST_CASE("add_black recolors only") {
    const Graph g(2);
    const Env e1 = add_stack_incr(0, init_env(g));
    const Env e2 = add_black(0, e1);
    CHECK(e2.black.contains(0));
    CHECK_FALSE(e2.gray.contains(0));
    CHECK(e2.stack == e1.stack);
    CHECK(e2.sn == e1.sn);
    CHECK(e2.num == e1.num);
}

TEST_CASE("split pops down to the vertex") {
    {
        auto [s2, s3] = split(2, list_of({5, 3, 2, 1, 0}));
        CHECK(s2 == std::vector<Vertex>{5, 3, 2});
        CHECK(s3.to_vector() == std::vector<Vertex>{1, 0});
    }
    {
        auto [s2, s3] = split(5, list_of({5, 3, 2}));
        CHECK(s2 == std::vector<Vertex>{5});
        CHECK(s3.to_vector() == std::vector<Vertex>{3, 2});
    }
    {
        auto [s2, s3] = split(0, list_of({0}));
        CHECK(s2 == std::vector<Vertex>{0});
        CHECK(s3.empty());
    }
    CHECK_THROWS_AS(split(7, list_of({1, 2})), std::invalid_argument);
}

TEST_CASE("split concatenation property") {
    SplitMix64 rng(17);
    for (int round = 0; round < 50; ++round) {
        const std::size_t len = 1 + rng.next_below(9);
        std::vector<Vertex> values;
        for (std::size_t i = 0; i < len; ++i)
            values.push_back(static_cast<Vertex>(i));
        for (std::size_t i = len; i > 1; --i)
            std::swap(values[i - 1], values[rng.next_below(i)]);
        const auto s = list_of(values);
        const Vertex x = values[rng.next_below(len)];
        auto [s2, s3] = split(x, s);
        CHECK(s2.back() == x);
        auto joined = s2;
        for (Vertex v : s3)
            joined.push_back(v);
        CHECK(joined == values);
    }
}

TEST_CASE("set_infty overwrites exactly the listed vertices") {
    NumMap num(3);
    num = num.with(0, NumMark::serial(3)).with(1, NumMark::serial(4)).with(2, NumMark::serial(5));
    const std::vector<Vertex> popped{0, 1};
    const NumMap out = set_infty(popped, num);
    CHECK(out.at(0).is_infinity());
    CHECK(out.at(1).is_infinity());
    CHECK(out.at(2) == NumMark::serial(5));
    CHECK(set_infty({}, num) == num);
    CHECK(set_infty(popped, out) == out); // idempotent
}

TEST_CASE("wf_env flags a black-to-white edge with its witness") {
    const Graph g(2, std::vector<std::pair<Vertex, Vertex>>{{0, 1}});
    Env e = init_env(g);
    e.black = e.black.with(0);
    const auto reports = wf_env(g, e);
    REQUIRE(reports.size() == 7);
    CHECK(reports[3].clause == "no_black_to_white");
    CHECK_FALSE(reports[3].holds);
    REQUIRE(reports[3].witness.has_value());
    CHECK(reports[3].witness->find("0 -> 1") != std::string::npos);
}

TEST_CASE("wf_env evaluation is pure") {
    const Graph g(2, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 0}});
    const Env e = add_stack_incr(0, init_env(g));
    const auto a = wf_env(g, e);
    const auto b = wf_env(g, e);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].clause == b[i].clause);
        CHECK(a[i].holds == b[i].holds);
        CHECK(a[i].witness == b[i].witness);
    }
}

TEST_CASE("subenv holds across push-then-blacken and rejects popped stacks") {
    const Graph g(2);
    const Env e = init_env(g);
    const Env e2 = add_black(0, add_stack_incr(0, e));
    CHECK(subenv(e, e2).holds); // gray restored, stack extended by a black vertex

    CHECK_FALSE(subenv(e2, e).holds); // stack shrank
}

TEST_CASE("environment text round-trips") {
    const Graph g(4, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 0}, {2, 3}});
    Env e = add_stack_incr(3, add_stack_incr(2, init_env(g)));
    e.sccs = e.sccs.cons(std::vector<Vertex>{0, 1});
    e.black = e.black.with(0).with(1);
    e.num = e.num.with(0, NumMark::infinity()).with(1, NumMark::infinity());

    const std::string text = env_to_text(e);
    const Env back = parse_env_text(text);
    CHECK(back == e);
    CHECK(env_to_text(back) == text);

    const auto lines = env_field_lines(e);
    REQUIRE(lines.size() == 6);
    CHECK(lines[2] == "stack: 3 2");
    CHECK(lines[3] == "sccs: {0 1}");
    CHECK(lines[5].find("0:inf") != std::string::npos);
    CHECK(lines[5].find("2:0") != std::string::npos);
    CHECK(lines[5].find("3:1") != std::string::npos);
}
