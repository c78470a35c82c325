#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scc/algorithm.hpp"
#include "scc/env.hpp"
#include "scc/graph.hpp"
#include "scc/oracle.hpp"
#include "scc/partition.hpp"

namespace scc {

// ---------------------------------------------------------------------------
// Configuration

enum class CheckSuite : unsigned {
    preconditions = 1u << 0,    // dfs1/dfs entry contracts
    postconditions = 1u << 1,   // dfs1's five return clauses, subenv at returns
    assertions = 1u << 2,       // the seven in-body assertion points A1..A7
    wf_env_each_step = 1u << 3, // wf_env at every environment produced
    measures = 1u << 4,         // lexicographic variants + colored_num per call edge
    fuel_bound = 1u << 5,       // simulated fuel never exhausted, lower bound per call
    coq_post = 1u << 6,         // white-set difference and big-min value clauses
};

constexpr unsigned kAllSuites = 0x7Fu;

inline unsigned suite_bit(CheckSuite s) { return static_cast<unsigned>(s); }

/// Parses "all" or a comma-separated list of suite names
/// (preconditions, postconditions, assertions, wf_env_each_step, measures,
/// fuel_bound, coq_post). Throws std::invalid_argument on unknown names.
unsigned parse_suites(std::string_view csv);

enum class FailMode { collect, halt_on_first };

struct CheckConfig {
    unsigned suites = kAllSuites;
    FailMode fail_mode = FailMode::collect;
};

/// Canonical bug injections for mutation testing. Each one must be caught
/// by at least one named clause on some small graph; they exist only behind
/// run_checked's test hook and never touch the plain algorithm.
enum class Mutation {
    none,
    skip_set_infty,  // popped component keeps its serial numbers
    split_pop_short, // pop stops one vertex early, x stays on the stack
    skip_add_black,  // early-return branch forgets to blacken x
    wrong_min,       // dfs folds with max instead of min
    skip_gray_add,   // push assigns a serial but never grays the vertex
    le_for_lt,       // branch on n1 <= n0 instead of n1 < n0
};

// ---------------------------------------------------------------------------
// Trace

struct TraceEvent {
    enum class Kind { call_dfs1, call_dfs, return_dfs1, return_dfs, assert_point };

    Kind kind;
    int assert_id = 0; // 1..7 when kind == assert_point
    Env env_before;
    std::optional<Env> env_after;
    std::optional<NumMark> value;
    std::vector<CheckReport> reports;
};

struct CheckSummary {
    std::uint64_t clauses_evaluated = 0;
    std::uint64_t clauses_failed = 0;
    bool halted = false;
    std::optional<CheckReport> first_failure;
    std::map<std::string, std::uint64_t> failed_by_clause;
    std::map<std::string, std::uint64_t> evaluated_by_suite;
    std::map<std::string, std::uint64_t> failed_by_suite;

    [[nodiscard]] bool all_hold() const { return clauses_failed == 0; }
};

struct CheckedRun {
    SccPartition partition;
    std::vector<TraceEvent> trace;
    CheckSummary summary;
};

// ---------------------------------------------------------------------------
// Contract predicates

/// Some stack vertex y has mark n and is reachable from x.
bool num_of_reachable(NumMark n, Vertex x, const Env& e, const SccFacts& facts);

/// With s1 == s2 ++ s3: y lies in s3 and some vertex of the new prefix s2
/// has an edge to y. Throws std::invalid_argument when s3 is not a suffix
/// of s1.
bool xedge_to(const ConsList<Vertex>& s1, const ConsList<Vertex>& s3, Vertex y, const Graph& g);

/// x occurs in s and y occurs at x's position or deeper (toward the
/// bottom of the stack).
bool precedes(Vertex x, Vertex y, const ConsList<Vertex>& s);

/// Every colored vertex is a graph vertex with a visited mark.
bool colored_num_holds(const Graph& g, const Env& e);

/// Termination measures of one call, taken at its entry.
struct Measure {
    std::vector<std::uint64_t> lex;   // (|white|, 0) at dfs1, (|white|, 1, |roots|) at dfs
    VertexSet white;                  // vertices minus colored
    VertexSet root_like;              // {x} at dfs1, roots at dfs
    int tag = 0;                      // 1 = dfs1, 2 = dfs

    static Measure for_dfs1(const Graph& g, Vertex x, const Env& e);
    static Measure for_dfs(const Graph& g, const VertexSet& roots, const Env& e);
};

/// callee strictly below caller, comparing the numeric tuples left to right
/// over their common prefix.
bool lex_strictly_less(const Measure& callee, const Measure& caller);

/// callee strictly below caller in the (white set, root set, tag) triple
/// ordered by strict inclusion on the set components.
bool triple_strictly_less(const Measure& callee, const Measure& caller);

/// Reports for one recursive call edge: both variant orderings plus
/// colored_num on the callee's environment.
std::vector<CheckReport> check_measures(const Measure& caller, const Measure& callee,
                                        const Graph& g, const Env& callee_env);

enum class Dfs1Branch { lower_value, pop_component };

/// Variables in scope at the dfs1 assertion points.
struct Dfs1Bindings {
    Vertex x = 0;
    Env entry;                 // environment at dfs1 entry
    Env inner;                 // environment returned by the successor search
    NumMark value;             // n1
    std::vector<Vertex> s2;    // popped prefix (pop branch only)
    ConsList<Vertex> s3;       // remaining stack (pop branch only)
};

/// A1-A2 on the lower-value branch, A3-A7 on the pop branch.
std::vector<CheckReport> check_assertions_dfs1(Dfs1Branch branch, const Dfs1Bindings& b,
                                               const Graph& g, const SccFacts& facts);

/// The return-value record of a completed dfs call: invariants and subenv,
/// the white-set difference equation, and the big-min characterization of
/// the returned value (minimum over an empty cone is infinity).
std::vector<CheckReport> check_post_dfs(const VertexSet& roots, const Env& e, const Env& e2,
                                        NumMark m, const Graph& g, const SccFacts& facts);

// ---------------------------------------------------------------------------
// Checked execution

/// Runs the functional search with every enabled suite evaluated at its
/// anchor point. Observationally transparent: the partition equals
/// tarjan(g, order). Throws std::invalid_argument when no suite is enabled.
CheckedRun run_checked(const Graph& g, const CheckConfig& config, const ChoiceOrder& order);

/// Test hook: same, with one of the canonical bugs injected.
CheckedRun run_checked(const Graph& g, const CheckConfig& config, const ChoiceOrder& order,
                       Mutation mutation);

// ---------------------------------------------------------------------------
// Trace file format: one event per line, tab-separated columns
//   kind  anchor  value  env_before  env_after  reports
// with environments inlined as their field lines joined by "; ".

std::string trace_to_text(std::span<const TraceEvent> trace);

struct ReplaySummary {
    std::size_t events = 0;
    std::size_t envs_checked = 0;
    std::size_t failures = 0;
    std::vector<std::string> problems;

    [[nodiscard]] bool ok() const { return failures == 0; }
};

/// Re-validates a recorded trace against the graph: event nesting balances,
/// every recorded environment satisfies wf_env, and subenv holds across
/// each return. Intended for traces produced by healthy runs.
ReplaySummary replay_trace(const Graph& g, std::istream& in);

} // namespace scc
