#include "scc/checker.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <tuple>

namespace scc {

unsigned parse_suites(std::string_view csv) {
    if (csv.empty() || csv == "all")
        return kAllSuites;
    unsigned mask = 0;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        std::string_view name = csv.substr(start, comma == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : comma - start);
        if (name == "preconditions")
            mask |= suite_bit(CheckSuite::preconditions);
        else if (name == "postconditions")
            mask |= suite_bit(CheckSuite::postconditions);
        else if (name == "assertions")
            mask |= suite_bit(CheckSuite::assertions);
        else if (name == "wf_env_each_step")
            mask |= suite_bit(CheckSuite::wf_env_each_step);
        else if (name == "measures")
            mask |= suite_bit(CheckSuite::measures);
        else if (name == "fuel_bound")
            mask |= suite_bit(CheckSuite::fuel_bound);
        else if (name == "coq_post")
            mask |= suite_bit(CheckSuite::coq_post);
        else if (name == "all")
            mask |= kAllSuites;
        else
            throw std::invalid_argument("unknown check suite: " + std::string(name));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return mask;
}

// ---------------------------------------------------------------------------
// Contract predicates

bool num_of_reachable(NumMark n, Vertex x, const Env& e, const SccFacts& facts) {
    for (Vertex y : e.stack)
        if (e.num.at(y) == n && facts.reachable(x, y))
            return true;
    return false;
}

bool xedge_to(const ConsList<Vertex>& s1, const ConsList<Vertex>& s3, Vertex y, const Graph& g) {
    if (!s1.ends_with(s3))
        throw std::invalid_argument("xedge_to: old stack is not a suffix of the new one");
    bool in_s3 = false;
    for (Vertex v : s3)
        if (v == y) {
            in_s3 = true;
            break;
        }
    if (!in_s3)
        return false;
    const std::size_t prefix_len = s1.size() - s3.size();
    std::size_t i = 0;
    for (Vertex v : s1) {
        if (i++ >= prefix_len)
            break;
        if (g.edge(v, y))
            return true;
    }
    return false;
}

bool precedes(Vertex x, Vertex y, const ConsList<Vertex>& s) {
    bool seen_x = false;
    for (Vertex v : s) {
        if (v == x)
            seen_x = true;
        if (seen_x && v == y)
            return true;
    }
    return false;
}

bool colored_num_holds(const Graph& g, const Env& e) {
    bool ok = true;
    auto probe = [&](Vertex v) {
        if (v >= g.vertex_count() || e.num.at(v).is_unvisited())
            ok = false;
    };
    e.black.for_each(probe);
    e.gray.for_each(probe);
    return ok;
}

namespace {

VertexSet white_of(const Graph& g, const Env& e) {
    std::vector<Vertex> white;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!e.black.contains(v) && !e.gray.contains(v))
            white.push_back(v);
    return VertexSet::of(white, g.vertex_count());
}

NumMark num_max(NumMark a, NumMark b) { return num_lt(a, b) ? b : a; }

CheckReport aggregate_wf(const char* name, const Graph& g, const Env& e, const SccFacts& facts) {
    for (const auto& r : wf_env(g, e, facts))
        if (!r.holds)
            return CheckReport::fail(name, r.clause + ": " + r.witness.value_or(""));
    return CheckReport::ok(name);
}

} // namespace

Measure Measure::for_dfs1(const Graph& g, Vertex x, const Env& e) {
    Measure m;
    m.white = white_of(g, e);
    m.lex = {m.white.size(), 0};
    m.root_like = VertexSet::empty_set(g.vertex_count()).with(x);
    m.tag = 1;
    return m;
}

Measure Measure::for_dfs(const Graph& g, const VertexSet& roots, const Env& e) {
    Measure m;
    m.white = white_of(g, e);
    m.lex = {m.white.size(), 1, roots.size()};
    m.root_like = roots;
    m.tag = 2;
    return m;
}

bool lex_strictly_less(const Measure& callee, const Measure& caller) {
    const std::size_t common = std::min(callee.lex.size(), caller.lex.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (callee.lex[i] < caller.lex[i])
            return true;
        if (callee.lex[i] > caller.lex[i])
            return false;
    }
    return false;
}

bool triple_strictly_less(const Measure& callee, const Measure& caller) {
    if (!(callee.white == caller.white))
        return callee.white.subset_of(caller.white);
    if (!(callee.root_like == caller.root_like))
        return callee.root_like.subset_of(caller.root_like);
    return callee.tag < caller.tag;
}

std::vector<CheckReport> check_measures(const Measure& caller, const Measure& callee,
                                        const Graph& g, const Env& callee_env) {
    std::vector<CheckReport> out;
    auto tuple_text = [](const Measure& m) {
        std::string s = "(";
        for (std::size_t i = 0; i < m.lex.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(m.lex[i]);
        }
        return s + ")";
    };
    if (lex_strictly_less(callee, caller))
        out.push_back(CheckReport::ok("why3_variant_decreases"));
    else
        out.push_back(CheckReport::fail("why3_variant_decreases",
                                        "callee " + tuple_text(callee) + " not below caller " +
                                            tuple_text(caller)));
    if (triple_strictly_less(callee, caller))
        out.push_back(CheckReport::ok("isabelle_triple_decreases"));
    else
        out.push_back(CheckReport::fail("isabelle_triple_decreases",
                                        "(white, roots, tag) triple did not decrease"));
    if (colored_num_holds(g, callee_env))
        out.push_back(CheckReport::ok("colored_num"));
    else
        out.push_back(CheckReport::fail("colored_num",
                                        "a colored vertex carries an unvisited mark"));
    return out;
}

std::vector<CheckReport> check_assertions_dfs1(Dfs1Branch branch, const Dfs1Bindings& b,
                                               const Graph& g, const SccFacts& facts) {
    std::vector<CheckReport> out;
    const std::uint32_t n = g.vertex_count();
    if (branch == Dfs1Branch::lower_value) {
        // A1: some strictly lower stack vertex is reachable from x.
        bool a1 = false;
        for (Vertex y : b.inner.stack)
            if (y != b.x && precedes(b.x, y, b.inner.stack) && facts.reachable(b.x, y)) {
                a1 = true;
                break;
            }
        out.push_back(a1 ? CheckReport::ok("A1")
                         : CheckReport::fail("A1", "no lower stack vertex reachable from " +
                                                       std::to_string(b.x)));
        // A2: a lower gray vertex shares x's component.
        bool a2 = false;
        b.inner.gray.for_each([&](Vertex y) {
            if (a2 || y == b.x)
                return;
            if (visited_le(b.inner.num.at(y), b.inner.num.at(b.x)) &&
                b.inner.num.at(y) != b.inner.num.at(b.x) && facts.same_scc(b.x, y))
                a2 = true;
        });
        out.push_back(a2 ? CheckReport::ok("A2")
                         : CheckReport::fail("A2", "no lower gray vertex in the component of " +
                                                       std::to_string(b.x)));
        return out;
    }

    // Pop branch: A3..A7 over the popped prefix s2.
    std::vector<char> in_s2(n, 0);
    for (Vertex v : b.s2)
        in_s2[v] = 1;

    bool a3 = !b.s2.empty() && b.s2.back() == b.x && b.s3 == b.entry.stack;
    if (a3)
        for (Vertex v : b.s2)
            if (v != b.x && !b.inner.black.contains(v))
                a3 = false;
    out.push_back(a3 ? CheckReport::ok("A3")
                     : CheckReport::fail("A3", "popped prefix is not x-terminated black prefix "
                                               "over the entry stack"));

    bool a4 = true;
    for (Vertex v : b.s2)
        if (!facts.same_scc(v, b.x))
            a4 = false;
    out.push_back(a4 ? CheckReport::ok("A4")
                     : CheckReport::fail("A4", "popped vertices are not pairwise connected"));

    bool a5 = true;
    Vertex missing = 0;
    for (Vertex y = 0; y < n; ++y)
        if (facts.same_scc(y, b.x) && !in_s2[y]) {
            a5 = false;
            missing = y;
            break;
        }
    out.push_back(a5 ? CheckReport::ok("A5")
                     : CheckReport::fail("A5", "component member " + std::to_string(missing) +
                                                   " missing from the popped prefix"));

    auto sorted_s2 = b.s2;
    std::sort(sorted_s2.begin(), sorted_s2.end());
    const auto component = facts.component_of(b.x);
    bool a6 = !sorted_s2.empty() &&
              std::equal(sorted_s2.begin(), sorted_s2.end(), component.begin(), component.end());
    out.push_back(a6 ? CheckReport::ok("A6")
                     : CheckReport::fail("A6", "popped prefix is not a maximal component"));

    bool a7 = true;
    for (Vertex v : b.s2)
        if (b.entry.gray.contains(v))
            a7 = false;
    out.push_back(a7 ? CheckReport::ok("A7")
                     : CheckReport::fail("A7", "popped prefix meets the entry gray set"));
    return out;
}

namespace {

// post_whites / post_num, shared by check_post_dfs and the runner.
std::vector<CheckReport> coq_value_reports(const VertexSet& roots, const Env& e, const Env& e2,
                                           NumMark m, const Graph& g) {
    std::vector<CheckReport> out;
    const std::uint32_t n = g.vertex_count();
    const VertexSet white_before = white_of(g, e);

    std::vector<char> cone(n, 0);
    roots.for_each([&](Vertex x) {
        white_reachable(g, white_before, x).for_each([&](Vertex y) { cone[y] = 1; });
    });

    std::vector<Vertex> expected_white;
    white_before.for_each([&](Vertex v) {
        if (!cone[v])
            expected_white.push_back(v);
    });
    if (white_of(g, e2) == VertexSet::of(expected_white, n))
        out.push_back(CheckReport::ok("post_whites"));
    else
        out.push_back(CheckReport::fail(
            "post_whites", "white set is not the old one minus the white-reachable cones"));

    NumMark min_mark = NumMark::infinity();
    bool defined = true;
    for (Vertex y = 0; y < n; ++y) {
        if (!cone[y])
            continue;
        const NumMark mark = e2.num.at(y);
        if (mark.is_unvisited()) {
            defined = false;
            break;
        }
        min_mark = num_min(min_mark, mark);
    }
    if (defined && min_mark == m)
        out.push_back(CheckReport::ok("post_num"));
    else
        out.push_back(CheckReport::fail(
            "post_num", defined ? "returned " + m.to_string() + " but the cone minimum is " +
                                      min_mark.to_string()
                                : "a cone vertex is still unvisited"));
    return out;
}

} // namespace

std::vector<CheckReport> check_post_dfs(const VertexSet& roots, const Env& e, const Env& e2,
                                        NumMark m, const Graph& g, const SccFacts& facts) {
    std::vector<CheckReport> out;
    out.push_back(aggregate_wf("post_invariants", g, e2, facts));
    out.push_back(subenv(e, e2));
    for (auto& r : coq_value_reports(roots, e, e2, m, g))
        out.push_back(std::move(r));
    return out;
}

// ---------------------------------------------------------------------------
// Checked execution

namespace {

const char* suite_name(CheckSuite s) {
    switch (s) {
    case CheckSuite::preconditions: return "preconditions";
    case CheckSuite::postconditions: return "postconditions";
    case CheckSuite::assertions: return "assertions";
    case CheckSuite::wf_env_each_step: return "wf_env_each_step";
    case CheckSuite::measures: return "measures";
    case CheckSuite::fuel_bound: return "fuel_bound";
    case CheckSuite::coq_post: return "coq_post";
    }
    return "?";
}

struct Runner {
    const Graph& g;
    const SccFacts& facts;
    const CheckConfig cfg;
    const ChoiceOrder& order;
    const Mutation mut;

    std::vector<TraceEvent> trace;
    CheckSummary sum;
    bool stop = false;

    bool enabled(CheckSuite s) const { return cfg.suites & suite_bit(s); }

    void tally(CheckSuite suite, std::vector<CheckReport>& sink,
               std::vector<CheckReport> reports) {
        const char* name = suite_name(suite);
        for (auto& r : reports) {
            ++sum.clauses_evaluated;
            ++sum.evaluated_by_suite[name];
            if (!r.holds) {
                ++sum.clauses_failed;
                ++sum.failed_by_suite[name];
                ++sum.failed_by_clause[r.clause];
                if (!sum.first_failure)
                    sum.first_failure = r;
                if (cfg.fail_mode == FailMode::halt_on_first) {
                    sum.halted = true;
                    stop = true;
                }
            }
            sink.push_back(std::move(r));
        }
    }

    std::vector<CheckReport> dfs1_pre(Vertex x, const Env& e) {
        std::vector<CheckReport> out;
        out.push_back(x < g.vertex_count()
                          ? CheckReport::ok("pre_vertex_in_graph")
                          : CheckReport::fail("pre_vertex_in_graph", std::to_string(x)));
        bool reaches = true;
        e.gray.for_each([&](Vertex y) {
            if (!facts.reachable(y, x))
                reaches = false;
        });
        out.push_back(reaches ? CheckReport::ok("pre_gray_reaches_x")
                              : CheckReport::fail("pre_gray_reaches_x",
                                                  "a gray vertex cannot reach " +
                                                      std::to_string(x)));
        out.push_back(!e.black.contains(x) && !e.gray.contains(x)
                          ? CheckReport::ok("pre_not_colored")
                          : CheckReport::fail("pre_not_colored",
                                              std::to_string(x) + " is already colored"));
        out.push_back(aggregate_wf("pre_wf_env", g, e, facts));
        return out;
    }

    std::vector<CheckReport> dfs_pre(const VertexSet& roots, const Env& e) {
        std::vector<CheckReport> out;
        out.push_back(roots.universe() == g.vertex_count()
                          ? CheckReport::ok("pre_roots_in_graph")
                          : CheckReport::fail("pre_roots_in_graph", "universe mismatch"));
        bool access = true;
        e.gray.for_each([&](Vertex y) {
            roots.for_each([&](Vertex r) {
                if (!facts.reachable(y, r))
                    access = false;
            });
        });
        out.push_back(access ? CheckReport::ok("pre_access_to")
                             : CheckReport::fail("pre_access_to",
                                                 "a gray vertex cannot reach every root"));
        out.push_back(aggregate_wf("pre_wf_env", g, e, facts));
        return out;
    }

    std::vector<CheckReport> dfs1_post(Vertex x, const Env& entry, const Env& out_env,
                                       NumMark value) {
        std::vector<CheckReport> out;
        out.push_back(aggregate_wf("post_wf_env", g, out_env, facts));
        out.push_back(subenv(entry, out_env));
        out.push_back(out_env.black.contains(x)
                          ? CheckReport::ok("post_black")
                          : CheckReport::fail("post_black",
                                              std::to_string(x) + " is not black on return"));
        out.push_back(visited_le(value, out_env.num.at(x))
                          ? CheckReport::ok("post_value_le_mark")
                          : CheckReport::fail("post_value_le_mark",
                                              "returned " + value.to_string() + " above mark " +
                                                  out_env.num.at(x).to_string()));
        const bool q4 = value.is_infinity() || num_of_reachable(value, x, out_env, facts);
        out.push_back(q4 ? CheckReport::ok("post_value_reachable")
                         : CheckReport::fail("post_value_reachable",
                                             "returned " + value.to_string() +
                                                 " names no reachable stack vertex"));
        if (!out_env.stack.ends_with(entry.stack)) {
            out.push_back(CheckReport::fail("post_xedge_bound", "stack is not an extension"));
        } else {
            CheckReport r = CheckReport::ok("post_xedge_bound");
            for (Vertex y : entry.stack) {
                if (xedge_to(out_env.stack, entry.stack, y, g) &&
                    !visited_le(value, out_env.num.at(y))) {
                    r = CheckReport::fail("post_xedge_bound",
                                          "cross edge into " + std::to_string(y) +
                                              " undercuts the returned value");
                    break;
                }
            }
            out.push_back(std::move(r));
        }
        return out;
    }

    std::vector<CheckReport> dfs_post(const VertexSet& roots, const Env& entry,
                                      const Env& out_env, NumMark value) {
        std::vector<CheckReport> out;
        out.push_back(aggregate_wf("post_wf_env", g, out_env, facts));
        out.push_back(subenv(entry, out_env));
        bool colored = true;
        roots.for_each([&](Vertex r) {
            if (!out_env.black.contains(r) && !out_env.gray.contains(r))
                colored = false;
        });
        out.push_back(colored ? CheckReport::ok("post_roots_colored")
                              : CheckReport::fail("post_roots_colored",
                                                  "a root is still white on return"));
        bool bounded = true;
        roots.for_each([&](Vertex r) {
            if (!visited_le(value, out_env.num.at(r)))
                bounded = false;
        });
        out.push_back(bounded ? CheckReport::ok("post_value_le_roots")
                              : CheckReport::fail("post_value_le_roots",
                                                  "returned value above a root's mark"));
        bool witnessed = value.is_infinity();
        if (!witnessed) {
            roots.for_each([&](Vertex r) {
                if (witnessed)
                    return;
                for (Vertex y : out_env.stack)
                    if (out_env.num.at(y) == value && facts.reachable(r, y)) {
                        witnessed = true;
                        return;
                    }
            });
        }
        out.push_back(witnessed ? CheckReport::ok("post_value_witness")
                                : CheckReport::fail("post_value_witness",
                                                    "finite value has no stack witness"));
        return out;
    }

    std::vector<CheckReport> fuel_reports(std::uint64_t fuel, const VertexSet& roots,
                                          const Env& e) {
        std::vector<CheckReport> out;
        const std::uint64_t bound =
            static_cast<std::uint64_t>(white_of(g, e).size()) * (g.vertex_count() + 1) +
            roots.size();
        out.push_back(fuel >= bound
                          ? CheckReport::ok("fuel_lower_bound")
                          : CheckReport::fail("fuel_lower_bound",
                                              "fuel " + std::to_string(fuel) + " below bound " +
                                                  std::to_string(bound)));
        out.push_back(fuel > 0 || roots.empty()
                          ? CheckReport::ok("fuel_not_exhausted")
                          : CheckReport::fail("fuel_not_exhausted",
                                              "fuel ran out with pending roots"));
        return out;
    }

    void emit_assert(int id, const Env& env, NumMark value, CheckReport report) {
        TraceEvent ev;
        ev.kind = TraceEvent::Kind::assert_point;
        ev.assert_id = id;
        ev.env_before = env;
        ev.value = value;
        std::vector<CheckReport> batch;
        batch.push_back(std::move(report));
        tally(CheckSuite::assertions, ev.reports, std::move(batch));
        trace.push_back(std::move(ev));
    }

    Env push_no_gray(Vertex x, Env e) {
        const std::uint32_t n = e.sn;
        e.stack = e.stack.cons(x);
        e.sn = n + 1;
        e.num = e.num.with(x, NumMark::serial(n));
        return e;
    }

    std::pair<NumMark, Env> run_dfs1(Vertex x, Env e, std::uint64_t fuel,
                                     const Measure& caller) {
        const Env entry = e;
        const Measure mine = Measure::for_dfs1(g, x, entry);
        {
            TraceEvent ev;
            ev.kind = TraceEvent::Kind::call_dfs1;
            ev.env_before = entry;
            if (enabled(CheckSuite::preconditions))
                tally(CheckSuite::preconditions, ev.reports, dfs1_pre(x, entry));
            if (enabled(CheckSuite::measures))
                tally(CheckSuite::measures, ev.reports, check_measures(caller, mine, g, entry));
            trace.push_back(std::move(ev));
        }
        if (stop)
            return {NumMark::infinity(), std::move(e)};

        const std::uint32_t n0 = e.sn;
        Env pushed = (mut == Mutation::skip_gray_add) ? push_no_gray(x, std::move(e))
                                                      : add_stack_incr(x, std::move(e));
        auto [n1, e1] = run_dfs(VertexSet::of(g.successors(x), g.vertex_count()),
                                std::move(pushed), fuel - 1, &mine, true);
        if (stop)
            return {n1, std::move(e1)};

        const bool lower = (mut == Mutation::le_for_lt) ? num_le(n1, NumMark::serial(n0))
                                                        : num_lt(n1, NumMark::serial(n0));
        NumMark value;
        Env result;
        if (lower) {
            if (enabled(CheckSuite::assertions)) {
                Dfs1Bindings b{x, entry, e1, n1, {}, {}};
                auto reports = check_assertions_dfs1(Dfs1Branch::lower_value, b, g, facts);
                emit_assert(1, e1, n1, std::move(reports[0]));
                if (!stop)
                    emit_assert(2, e1, n1, std::move(reports[1]));
            }
            if (stop)
                return {n1, std::move(e1)};
            value = n1;
            result = (mut == Mutation::skip_add_black) ? e1 : add_black(x, e1);
        } else {
            auto [s2, s3] = split(x, e1.stack);
            if (mut == Mutation::split_pop_short && !s2.empty()) {
                const Vertex last = s2.back();
                s2.pop_back();
                s3 = s3.cons(last);
            }
            if (enabled(CheckSuite::assertions)) {
                Dfs1Bindings b{x, entry, e1, n1, s2, s3};
                auto reports = check_assertions_dfs1(Dfs1Branch::pop_component, b, g, facts);
                for (std::size_t i = 0; i < reports.size() && !stop; ++i)
                    emit_assert(static_cast<int>(i + 3), e1, n1, std::move(reports[i]));
            }
            if (stop)
                return {n1, std::move(e1)};
            auto component = s2;
            std::sort(component.begin(), component.end());
            Env built;
            built.black = e1.black.with(x);
            built.gray = entry.gray;
            built.stack = s3;
            built.sccs = e1.sccs.cons(std::move(component));
            built.sn = e1.sn;
            built.num = (mut == Mutation::skip_set_infty) ? e1.num : set_infty(s2, e1.num);
            value = NumMark::infinity();
            result = std::move(built);
        }

        TraceEvent ev;
        ev.kind = TraceEvent::Kind::return_dfs1;
        ev.env_before = entry;
        ev.env_after = result;
        ev.value = value;
        if (enabled(CheckSuite::postconditions))
            tally(CheckSuite::postconditions, ev.reports, dfs1_post(x, entry, result, value));
        if (enabled(CheckSuite::wf_env_each_step))
            tally(CheckSuite::wf_env_each_step, ev.reports, wf_env(g, result, facts));
        if (enabled(CheckSuite::coq_post)) {
            const VertexSet root = VertexSet::empty_set(g.vertex_count()).with(x);
            tally(CheckSuite::coq_post, ev.reports,
                  coq_value_reports(root, entry, result, value, g));
        }
        trace.push_back(std::move(ev));
        return {value, std::move(result)};
    }

    std::pair<NumMark, Env> run_dfs(VertexSet roots, Env e, std::uint64_t fuel,
                                    const Measure* caller, bool fresh_env) {
        const Env entry = e;
        const Measure mine = Measure::for_dfs(g, roots, entry);
        {
            TraceEvent ev;
            ev.kind = TraceEvent::Kind::call_dfs;
            ev.env_before = entry;
            if (enabled(CheckSuite::preconditions))
                tally(CheckSuite::preconditions, ev.reports, dfs_pre(roots, entry));
            if (enabled(CheckSuite::wf_env_each_step) && fresh_env)
                tally(CheckSuite::wf_env_each_step, ev.reports, wf_env(g, entry, facts));
            if (enabled(CheckSuite::measures)) {
                if (caller) {
                    tally(CheckSuite::measures, ev.reports,
                          check_measures(*caller, mine, g, entry));
                } else {
                    // Top-level call: no edge to compare, but colored_num
                    // still applies.
                    std::vector<CheckReport> batch;
                    batch.push_back(colored_num_holds(g, entry)
                                        ? CheckReport::ok("colored_num")
                                        : CheckReport::fail("colored_num",
                                                            "a colored vertex carries an "
                                                            "unvisited mark"));
                    tally(CheckSuite::measures, ev.reports, std::move(batch));
                }
            }
            if (enabled(CheckSuite::fuel_bound))
                tally(CheckSuite::fuel_bound, ev.reports, fuel_reports(fuel, roots, entry));
            trace.push_back(std::move(ev));
        }
        if (stop)
            return {NumMark::infinity(), std::move(e)};

        NumMark value = NumMark::infinity();
        Env finale;
        if (roots.empty()) {
            finale = std::move(e);
        } else {
            const Vertex x = order.pick(roots);
            const VertexSet rest = roots.without(x);
            NumMark n1;
            Env e1;
            if (!e.num.at(x).is_unvisited()) {
                n1 = e.num.at(x);
                e1 = std::move(e);
            } else {
                std::tie(n1, e1) = run_dfs1(x, std::move(e), fuel, mine);
            }
            if (stop)
                return {n1, std::move(e1)};
            auto [n2, e2] = run_dfs(rest, std::move(e1), fuel - 1, &mine, false);
            if (stop)
                return {n2, std::move(e2)};
            value = (mut == Mutation::wrong_min) ? num_max(n1, n2) : num_min(n1, n2);
            finale = std::move(e2);
        }

        TraceEvent ev;
        ev.kind = TraceEvent::Kind::return_dfs;
        ev.env_before = entry;
        ev.env_after = finale;
        ev.value = value;
        if (enabled(CheckSuite::postconditions))
            tally(CheckSuite::postconditions, ev.reports, dfs_post(roots, entry, finale, value));
        if (enabled(CheckSuite::coq_post))
            tally(CheckSuite::coq_post, ev.reports,
                  coq_value_reports(roots, entry, finale, value, g));
        trace.push_back(std::move(ev));
        return {value, std::move(finale)};
    }
};

} // namespace

CheckedRun run_checked(const Graph& g, const CheckConfig& config, const ChoiceOrder& order,
                       Mutation mutation) {
    if ((config.suites & kAllSuites) == 0)
        throw std::invalid_argument("at least one check suite must be enabled");
    const SccFacts facts(g);
    Runner runner{g, facts, config, order, mutation, {}, {}, false};
    auto [value, final_env] =
        runner.run_dfs(VertexSet::full_set(g.vertex_count()), init_env(g),
                       default_fuel(g.vertex_count()), nullptr, true);
    (void)value;
    CheckedRun out;
    out.partition = partition_from_sccs(final_env.sccs);
    out.trace = std::move(runner.trace);
    out.summary = std::move(runner.sum);
    return out;
}

CheckedRun run_checked(const Graph& g, const CheckConfig& config, const ChoiceOrder& order) {
    return run_checked(g, config, order, Mutation::none);
}

// ---------------------------------------------------------------------------
// Trace format

namespace {

const char* kind_name(TraceEvent::Kind k) {
    switch (k) {
    case TraceEvent::Kind::call_dfs1: return "call_dfs1";
    case TraceEvent::Kind::call_dfs: return "call_dfs";
    case TraceEvent::Kind::return_dfs1: return "return_dfs1";
    case TraceEvent::Kind::return_dfs: return "return_dfs";
    case TraceEvent::Kind::assert_point: return "assert";
    }
    return "?";
}

std::string env_inline(const Env& e) {
    std::string out;
    for (const auto& line : env_field_lines(e)) {
        if (!out.empty())
            out += "; ";
        out += line;
    }
    return out;
}

Env env_from_inline(const std::string& text) {
    std::string joined;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t sep = text.find("; ", start);
        joined += text.substr(start, sep == std::string::npos ? std::string::npos : sep - start);
        joined += '\n';
        if (sep == std::string::npos)
            break;
        start = sep + 2;
    }
    return parse_env_text(joined);
}

} // namespace

std::string trace_to_text(std::span<const TraceEvent> trace) {
    std::string out;
    for (const auto& ev : trace) {
        out += kind_name(ev.kind);
        out += '\t';
        out += ev.assert_id ? "A" + std::to_string(ev.assert_id) : "-";
        out += '\t';
        out += ev.value ? ev.value->to_string() : "-";
        out += '\t';
        out += env_inline(ev.env_before);
        out += '\t';
        out += ev.env_after ? env_inline(*ev.env_after) : "-";
        out += '\t';
        std::string reports;
        for (const auto& r : ev.reports) {
            if (!reports.empty())
                reports += " ; ";
            reports += r.clause;
            reports += r.holds ? "=ok" : "=FAIL(" + r.witness.value_or("") + ")";
        }
        out += reports;
        out += '\n';
    }
    return out;
}

ReplaySummary replay_trace(const Graph& g, std::istream& in) {
    ReplaySummary sum;
    const SccFacts facts(g);
    std::vector<std::string> stack_kinds;
    std::string line;
    auto problem = [&](std::string text) {
        ++sum.failures;
        if (sum.problems.size() < 20)
            sum.problems.push_back(std::move(text));
    };
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        ++sum.events;
        std::vector<std::string> cols;
        std::size_t start = 0;
        while (true) {
            std::size_t tab = line.find('\t', start);
            cols.push_back(line.substr(start, tab == std::string::npos ? std::string::npos
                                                                       : tab - start));
            if (tab == std::string::npos)
                break;
            start = tab + 1;
        }
        if (cols.size() != 6) {
            problem("line " + std::to_string(sum.events) + ": expected 6 columns");
            continue;
        }
        const std::string& kind = cols[0];
        std::optional<Env> before, after;
        try {
            if (cols[3] != "-")
                before = env_from_inline(cols[3]);
            if (cols[4] != "-")
                after = env_from_inline(cols[4]);
        } catch (const std::exception& ex) {
            problem("line " + std::to_string(sum.events) + ": bad environment: " + ex.what());
            continue;
        }
        for (const auto& env : {before, after}) {
            if (!env)
                continue;
            ++sum.envs_checked;
            for (const auto& r : wf_env(g, *env, facts))
                if (!r.holds)
                    problem("line " + std::to_string(sum.events) + ": " + r.clause + " fails: " +
                            r.witness.value_or(""));
        }
        if (kind == "call_dfs" || kind == "call_dfs1") {
            stack_kinds.push_back(kind);
        } else if (kind == "return_dfs" || kind == "return_dfs1") {
            const std::string expected = kind == "return_dfs" ? "call_dfs" : "call_dfs1";
            if (stack_kinds.empty() || stack_kinds.back() != expected) {
                problem("line " + std::to_string(sum.events) + ": unbalanced " + kind);
            } else {
                stack_kinds.pop_back();
            }
            if (before && after) {
                const CheckReport r = subenv(*before, *after);
                if (!r.holds)
                    problem("line " + std::to_string(sum.events) +
                            ": subenv fails: " + r.witness.value_or(""));
            }
        } else if (kind != "assert") {
            problem("line " + std::to_string(sum.events) + ": unknown event kind " + kind);
        }
    }
    if (!stack_kinds.empty())
        problem("trace ends with " + std::to_string(stack_kinds.size()) + " open calls");
    return sum;
}

} // namespace scc
