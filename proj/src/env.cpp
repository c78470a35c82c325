#include "scc/env.hpp"

#include <algorithm>
#include <sstream>

namespace scc {

Env init_env(const Graph& g) {
    const std::uint32_t n = g.vertex_count();
    Env e;
    e.black = VertexSet::empty_set(n);
    e.gray = VertexSet::empty_set(n);
    e.sn = 0;
    e.num = NumMap(n);
    return e;
}

Env add_stack_incr(Vertex x, Env e) {
    const std::uint32_t n = e.sn;
    e.gray = e.gray.with(x);
    e.stack = e.stack.cons(x);
    e.sn = n + 1;
    e.num = e.num.with(x, NumMark::serial(n));
    return e;
}

Env add_black(Vertex x, Env e) {
    e.black = e.black.with(x);
    e.gray = e.gray.without(x);
    return e;
}

std::pair<std::vector<Vertex>, ConsList<Vertex>> split(Vertex x, const ConsList<Vertex>& s) {
    std::vector<Vertex> prefix;
    std::size_t depth = 0;
    for (Vertex v : s) {
        prefix.push_back(v);
        ++depth;
        if (v == x)
            return {std::move(prefix), s.drop(depth)};
    }
    throw std::invalid_argument("split: vertex not on stack");
}

NumMap set_infty(std::span<const Vertex> popped, const NumMap& num) {
    return num.with_all_infinity(popped);
}

namespace {

std::string vertex_list(std::span<const Vertex> vs) {
    std::string out;
    for (Vertex v : vs) {
        if (!out.empty())
            out += ' ';
        out += std::to_string(v);
    }
    return out;
}

// Union of the emitted components.
VertexSet scc_members(const Env& e, std::uint32_t n) {
    std::vector<Vertex> all;
    for (const auto& c : e.sccs)
        all.insert(all.end(), c.begin(), c.end());
    return VertexSet::of(all, n);
}

CheckReport clause_wf_color(const Graph& g, const Env& e) {
    const char* name = "wf_color";
    if (e.black.universe() != g.vertex_count() || e.gray.universe() != g.vertex_count())
        return CheckReport::fail(name, "color sets sized for a different graph");
    if (e.black.intersects(e.gray)) {
        std::optional<Vertex> bad;
        e.black.for_each([&](Vertex v) {
            if (!bad && e.gray.contains(v))
                bad = v;
        });
        return CheckReport::fail(name, "vertex " + std::to_string(*bad) + " is both black and gray");
    }
    std::vector<char> on_stack(g.vertex_count(), 0);
    for (Vertex v : e.stack) {
        if (v >= g.vertex_count())
            return CheckReport::fail(name, "stack vertex " + std::to_string(v) +
                                               " is not a graph vertex");
        on_stack[v] = 1;
    }
    std::optional<std::string> witness;
    e.gray.for_each([&](Vertex v) {
        if (!on_stack[v] && !witness)
            witness = "gray vertex " + std::to_string(v) + " not on the stack";
    });
    if (witness)
        return CheckReport::fail(name, *witness);
    for (Vertex v : e.stack)
        if (!e.black.contains(v) && !e.gray.contains(v))
            return CheckReport::fail(name, "stack vertex " + std::to_string(v) + " is uncolored");
    for (const auto& c : e.sccs)
        for (Vertex v : c)
            if (!e.black.contains(v))
                return CheckReport::fail(name,
                                         "emitted vertex " + std::to_string(v) + " is not black");
    return CheckReport::ok(name);
}

CheckReport clause_wf_num(const Graph& g, const Env& e) {
    const char* name = "wf_num";
    const std::uint32_t n = g.vertex_count();
    const VertexSet emitted = scc_members(e, n);
    for (Vertex v = 0; v < n; ++v) {
        const NumMark m = e.num.at(v);
        const bool colored_or_emitted =
            e.black.contains(v) || e.gray.contains(v) || emitted.contains(v);
        if (m.is_unvisited() == colored_or_emitted)
            return CheckReport::fail(name, "vertex " + std::to_string(v) + " has mark " +
                                               m.to_string() + " but is " +
                                               (colored_or_emitted ? "colored" : "untouched"));
        if (m.is_infinity() != emitted.contains(v))
            return CheckReport::fail(name, "vertex " + std::to_string(v) + " has mark " +
                                               m.to_string() +
                                               (emitted.contains(v) ? " but was emitted"
                                                                    : " but was not emitted"));
    }
    // Stack serials: defined, below sn, and strictly decreasing from top to
    // bottom (which makes them distinct and matches the stack order).
    std::optional<std::uint32_t> above;
    for (Vertex v : e.stack) {
        if (v >= n)
            return CheckReport::fail(name, "stack vertex " + std::to_string(v) +
                                               " is not a graph vertex");
        const NumMark m = e.num.at(v);
        if (!m.is_serial())
            return CheckReport::fail(name, "stack vertex " + std::to_string(v) +
                                               " has non-serial mark " + m.to_string());
        const std::uint32_t k = m.serial_value();
        if (k >= e.sn)
            return CheckReport::fail(name, "stack vertex " + std::to_string(v) + " has serial " +
                                               std::to_string(k) + " >= sn");
        if (above && k >= *above)
            return CheckReport::fail(name, "stack vertex " + std::to_string(v) +
                                               " breaks the stack/serial order");
        above = k;
    }
    return CheckReport::ok(name);
}

CheckReport clause_simplelist(const Env& e, std::uint32_t n) {
    std::vector<char> seen(n, 0);
    for (Vertex v : e.stack) {
        if (v >= n || seen[v])
            return CheckReport::fail("simplelist",
                                     "vertex " + std::to_string(v) + " repeats on the stack");
        seen[v] = 1;
    }
    return CheckReport::ok("simplelist");
}

CheckReport clause_no_black_to_white(const Graph& g, const Env& e) {
    std::optional<std::string> witness;
    e.black.for_each([&](Vertex b) {
        if (witness)
            return;
        for (Vertex y : g.successors(b)) {
            if (!e.black.contains(y) && !e.gray.contains(y)) {
                witness = "edge " + std::to_string(b) + " -> " + std::to_string(y) +
                          " leaves the black region";
                return;
            }
        }
    });
    if (witness)
        return CheckReport::fail("no_black_to_white", *witness);
    return CheckReport::ok("no_black_to_white");
}

CheckReport clause_stack_order_reachable(const Env& e, const SccFacts& facts) {
    const auto stack = e.stack.to_vector();
    for (Vertex x : stack) {
        for (Vertex y : stack) {
            if (visited_le(e.num.at(x), e.num.at(y)) && !facts.reachable(x, y))
                return CheckReport::fail("stack_order_reachable",
                                         "stack vertex " + std::to_string(x) +
                                             " cannot reach higher vertex " + std::to_string(y));
        }
    }
    return CheckReport::ok("stack_order_reachable");
}

CheckReport clause_stack_to_gray(const Env& e, const SccFacts& facts) {
    for (Vertex y : e.stack) {
        bool found = false;
        e.gray.for_each([&](Vertex x) {
            if (!found && visited_le(e.num.at(x), e.num.at(y)) && facts.reachable(y, x))
                found = true;
        });
        if (!found)
            return CheckReport::fail("stack_to_gray",
                                     "stack vertex " + std::to_string(y) +
                                         " reaches no gray vertex at or below its serial");
    }
    return CheckReport::ok("stack_to_gray");
}

CheckReport clause_sccs_exact(const Env& e, const SccFacts& facts) {
    const char* name = "sccs_exact";
    // Expected: exactly the oracle components that are fully black.
    std::vector<std::vector<Vertex>> expected;
    for (const auto& c : facts.partition.components()) {
        bool all_black = true;
        for (Vertex v : c)
            if (!e.black.contains(v)) {
                all_black = false;
                break;
            }
        if (all_black)
            expected.push_back(c);
    }
    std::vector<std::vector<Vertex>> actual;
    for (const auto& c : e.sccs)
        actual.push_back(c);
    const SccPartition want = SccPartition::canonical(std::move(expected));
    const SccPartition got = SccPartition::canonical(std::move(actual));
    if (want == got)
        return CheckReport::ok(name);
    for (const auto& c : got.components())
        if (std::find(want.components().begin(), want.components().end(), c) ==
            want.components().end())
            return CheckReport::fail(name, "recorded component {" + vertex_list(c) +
                                               "} is not a fully black component");
    for (const auto& c : want.components())
        if (std::find(got.components().begin(), got.components().end(), c) ==
            got.components().end())
            return CheckReport::fail(name, "fully black component {" + vertex_list(c) +
                                               "} is missing from sccs");
    return CheckReport::fail(name, "component sets differ");
}

} // namespace

std::vector<CheckReport> wf_env(const Graph& g, const Env& e, const SccFacts& facts) {
    static const char* const kClauses[] = {"wf_color",
                                           "wf_num",
                                           "simplelist",
                                           "no_black_to_white",
                                           "stack_order_reachable",
                                           "stack_to_gray",
                                           "sccs_exact"};
    std::vector<CheckReport> reports;
    reports.reserve(7);
    // Dimension guard: an environment built for a different vertex count
    // (possible with replayed traces) fails every clause instead of
    // indexing out of range below.
    const std::uint32_t n = g.vertex_count();
    bool stack_in_range = true;
    for (Vertex v : e.stack)
        if (v >= n)
            stack_in_range = false;
    if (e.black.universe() != n || e.gray.universe() != n || e.num.size() != n ||
        !stack_in_range) {
        for (const char* clause : kClauses)
            reports.push_back(CheckReport::fail(clause, "environment sized for a different graph"));
        return reports;
    }
    reports.push_back(clause_wf_color(g, e));
    reports.push_back(clause_wf_num(g, e));
    reports.push_back(clause_simplelist(e, n));
    reports.push_back(clause_no_black_to_white(g, e));
    reports.push_back(clause_stack_order_reachable(e, facts));
    reports.push_back(clause_stack_to_gray(e, facts));
    reports.push_back(clause_sccs_exact(e, facts));
    return reports;
}

std::vector<CheckReport> wf_env(const Graph& g, const Env& e) {
    return wf_env(g, e, SccFacts(g));
}

CheckReport subenv(const Env& before, const Env& after) {
    const char* name = "subenv";
    if (before.black.universe() != after.black.universe() ||
        before.num.size() != after.num.size())
        return CheckReport::fail(name, "environments sized for different graphs");
    for (Vertex v : before.stack)
        if (v >= before.num.size())
            return CheckReport::fail(name, "stack vertex outside the graph");
    if (!before.black.subset_of(after.black))
        return CheckReport::fail(name, "black set shrank");
    if (!(before.gray == after.gray))
        return CheckReport::fail(name, "gray set changed");
    if (!after.stack.ends_with(before.stack))
        return CheckReport::fail(name, "stack is not an extension of the earlier stack");
    const std::size_t grown = after.stack.size() - before.stack.size();
    std::size_t i = 0;
    for (Vertex v : after.stack) {
        if (i++ >= grown)
            break;
        if (!after.black.contains(v))
            return CheckReport::fail(name, "new stack vertex " + std::to_string(v) +
                                               " is not black");
    }
    for (const auto& c : before.sccs) {
        bool found = false;
        for (const auto& c2 : after.sccs)
            if (c == c2) {
                found = true;
                break;
            }
        if (!found)
            return CheckReport::fail(name, "an emitted component disappeared");
    }
    for (Vertex v : before.stack)
        if (before.num.at(v) != after.num.at(v))
            return CheckReport::fail(name, "mark of retained stack vertex " + std::to_string(v) +
                                               " changed");
    return CheckReport::ok(name);
}

std::vector<std::string> env_field_lines(const Env& e) {
    std::vector<std::string> lines;
    lines.push_back("black: " + vertex_list(e.black.to_vector()));
    lines.push_back("gray: " + vertex_list(e.gray.to_vector()));
    lines.push_back("stack: " + vertex_list(e.stack.to_vector()));
    std::string sccs;
    {
        auto comps = e.sccs.to_vector(); // newest first; print oldest first
        for (auto it = comps.rbegin(); it != comps.rend(); ++it) {
            if (!sccs.empty())
                sccs += ' ';
            sccs += '{' + vertex_list(*it) + '}';
        }
    }
    lines.push_back("sccs: " + sccs);
    lines.push_back("sn: " + std::to_string(e.sn));
    std::string num;
    for (Vertex v = 0; v < e.num.size(); ++v) {
        if (!num.empty())
            num += ' ';
        num += std::to_string(v) + ':' + e.num.at(v).to_string();
    }
    lines.push_back("num: " + num);
    return lines;
}

std::string env_to_text(const Env& e) {
    std::string out;
    for (const auto& line : env_field_lines(e)) {
        out += line;
        out += '\n';
    }
    return out;
}

namespace {

std::string expect_field(std::istringstream& in, const std::string& key) {
    std::string line;
    if (!std::getline(in, line) || line.rfind(key + ":", 0) != 0)
        throw std::invalid_argument("bad environment text: expected field " + key);
    std::string rest = line.substr(key.size() + 1);
    if (!rest.empty() && rest.front() == ' ')
        rest.erase(rest.begin());
    return rest;
}

std::vector<Vertex> parse_vertices(const std::string& text) {
    std::vector<Vertex> out;
    std::istringstream in(text);
    unsigned long v;
    while (in >> v)
        out.push_back(static_cast<Vertex>(v));
    return out;
}

} // namespace

Env parse_env_text(const std::string& text) {
    std::istringstream in(text);
    const auto black = parse_vertices(expect_field(in, "black"));
    const auto gray = parse_vertices(expect_field(in, "gray"));
    const auto stack = parse_vertices(expect_field(in, "stack"));
    const std::string sccs_text = expect_field(in, "sccs");
    const std::string sn_text = expect_field(in, "sn");
    const std::string num_text = expect_field(in, "num");

    // Universe size = number of "v:mark" pairs.
    std::vector<NumMark> marks;
    {
        std::istringstream nin(num_text);
        std::string pair;
        while (nin >> pair) {
            auto colon = pair.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("bad num pair: " + pair);
            marks.push_back(NumMark::from_string(pair.substr(colon + 1)));
        }
    }
    const std::uint32_t n = static_cast<std::uint32_t>(marks.size());

    Env e;
    e.black = VertexSet::of(black, n);
    e.gray = VertexSet::of(gray, n);
    for (auto it = stack.rbegin(); it != stack.rend(); ++it)
        e.stack = e.stack.cons(*it);
    {
        std::vector<std::vector<Vertex>> comps;
        std::istringstream sin(sccs_text);
        std::string token;
        std::vector<Vertex> current;
        bool open = false;
        while (sin >> token) {
            if (token.front() == '{') {
                open = true;
                current.clear();
                token.erase(token.begin());
            }
            if (!open)
                throw std::invalid_argument("bad sccs field");
            bool closes = !token.empty() && token.back() == '}';
            if (closes)
                token.pop_back();
            if (!token.empty())
                current.push_back(static_cast<Vertex>(std::stoul(token)));
            if (closes) {
                comps.push_back(current);
                open = false;
            }
        }
        if (open)
            throw std::invalid_argument("bad sccs field");
        // Text order is oldest first; consing forward puts the newest back
        // at the head.
        for (const auto& c : comps)
            e.sccs = e.sccs.cons(c);
    }
    e.sn = static_cast<std::uint32_t>(std::stoul(sn_text));
    e.num = NumMap(n);
    for (Vertex v = 0; v < n; ++v)
        if (!marks[v].is_unvisited())
            e.num = e.num.with(v, marks[v]);
    return e;
}

} // namespace scc
