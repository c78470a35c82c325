#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "scc/cons_list.hpp"
#include "scc/graph.hpp"
#include "scc/num_mark.hpp"
#include "scc/oracle.hpp"
#include "scc/vertex_set.hpp"

namespace scc {

/// Outcome of evaluating one named clause against a concrete state or
/// transition. The witness is present exactly when the clause failed.
struct CheckReport {
    std::string clause;
    bool holds = true;
    std::optional<std::string> witness;

    static CheckReport ok(std::string clause) { return {std::move(clause), true, std::nullopt}; }
    static CheckReport fail(std::string clause, std::string witness) {
        return {std::move(clause), false, std::move(witness)};
    }
};

/// The environment threaded through the search. black and gray are the
/// ghost color sets; they are carried by every run so that checked mode can
/// evaluate the color invariants, but the computed answer never reads them.
/// Values are immutable: every updater returns a fresh environment and the
/// heavy fields share storage until changed.
struct Env {
    VertexSet black;
    VertexSet gray;
    ConsList<Vertex> stack;               // head = top of stack
    ConsList<std::vector<Vertex>> sccs;   // emitted components, newest first
    std::uint32_t sn = 0;                 // next fresh serial number
    NumMap num;

    friend bool operator==(const Env& a, const Env& b) {
        return a.black == b.black && a.gray == b.gray && a.stack == b.stack &&
               a.sccs == b.sccs && a.sn == b.sn && a.num == b.num;
    }
};

/// All-empty environment: nothing colored, empty stack, sn = 0, every
/// vertex unvisited.
Env init_env(const Graph& g);

/// Push x: onto the stack, into gray, assign serial e.sn, bump sn.
/// Expected on a white x with an unvisited mark; misuse is not trapped
/// here — checked mode reports it.
Env add_stack_incr(Vertex x, Env e);

/// Move x from gray to black; everything else untouched.
Env add_black(Vertex x, Env e);

/// Decompose s at the topmost occurrence of x: returns (s2, s3) with
/// s == s2 ++ s3 and x the last element of s2. Throws std::invalid_argument
/// when x does not occur (the search guarantees presence; absence is a bug
/// worth surfacing rather than the silent full-copy a literal rendition
/// would produce).
std::pair<std::vector<Vertex>, ConsList<Vertex>> split(Vertex x, const ConsList<Vertex>& s);

/// num with every vertex of popped set to infinity.
NumMap set_infty(std::span<const Vertex> popped, const NumMap& num);

/// The seven-clause well-formedness predicate, one report per clause in
/// fixed order:
///   1 wf_color    black/gray disjoint, gray on the stack, stack colored,
///                 emitted components all black
///   2 wf_num      marks agree with colors; infinity exactly on emitted
///                 components; stack serials distinct, below sn, and
///                 decreasing from top to bottom
///   3 simplelist  stack has no duplicates
///   4 no_black_to_white   no edge from a black vertex to a white one
///   5 stack_order_reachable  num(x) <= num(y) implies x reaches y, on stack
///   6 stack_to_gray          every stack vertex reaches a gray vertex at or
///                            below its own serial
///   7 sccs_exact  sccs is exactly the set of components that are fully black
std::vector<CheckReport> wf_env(const Graph& g, const Env& e, const SccFacts& facts);
std::vector<CheckReport> wf_env(const Graph& g, const Env& e);

/// Monotone-extension relation between an environment and a later one:
/// black grows, gray is unchanged, the stack extends by new black vertices,
/// components are kept, and marks of retained stack vertices are stable.
CheckReport subenv(const Env& before, const Env& after);

/// One line per field, stack top-first, marks as "v:mark" pairs.
std::vector<std::string> env_field_lines(const Env& e);
std::string env_to_text(const Env& e);
Env parse_env_text(const std::string& text);

} // namespace scc
