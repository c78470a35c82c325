#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "scc/algorithm.hpp"
#include "scc/checker.hpp"
#include "scc/fast_scc.hpp"
#include "scc/gen.hpp"
#include "scc/io.hpp"
#include "scc/oracle.hpp"
#include "scc/util.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

constexpr std::size_t kDeepStack = 512ull << 20;

struct Options {
    std::string input;
    std::string gen_spec;
    std::string algo = "functional";
    std::string order = "min";
    std::string emit = "sccs";
    std::string fuel;
    std::string out_path;
    std::vector<std::string> checked; // present iff --checked given
    bool checked_given = false;
};

scc::ChoiceOrder make_order(const std::string& text, std::uint32_t n) {
    if (text == "min")
        return scc::ChoiceOrder::smallest_id();
    if (text.rfind("seed:", 0) == 0)
        return scc::ChoiceOrder::seeded(std::stoull(text.substr(5)), n);
    throw std::invalid_argument("--order expects min or seed:<k>");
}

int run_bench(std::ostream& out) {
    const std::vector<std::uint32_t> sizes{1u << 14, 1u << 15, 1u << 16, 1u << 17};
    auto family = [](std::uint32_t n) {
        scc::GraphSpec spec;
        spec.model = scc::GraphModel::gnp;
        spec.n = n;
        spec.p = 8.0 / static_cast<double>(n);
        spec.seed = 42 + n;
        return scc::generate(spec);
    };
    const auto rows = scc::bench_linear(family, sizes);
    out << scc::format_bench(rows);
    return kExitOk;
}

int run(const Options& opt) {
    std::ofstream out_file;
    if (!opt.out_path.empty()) {
        out_file.open(opt.out_path);
        if (!out_file) {
            std::cerr << "error: cannot open " << opt.out_path << "\n";
            return kExitInputError;
        }
    }
    std::ostream& out = opt.out_path.empty() ? std::cout : out_file;

    if (opt.emit == "bench")
        return run_bench(out);

    if (opt.input.empty() == opt.gen_spec.empty()) {
        std::cerr << "error: provide exactly one of --input or --gen\n";
        return kExitInputError;
    }

    scc::Graph g;
    try {
        g = opt.input.empty() ? scc::generate(scc::parse_graph_spec(opt.gen_spec))
                              : scc::load_graph_file(opt.input);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInputError;
    }

    scc::ChoiceOrder order = scc::ChoiceOrder::smallest_id();
    try {
        order = make_order(opt.order, g.vertex_count());
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInputError;
    }

    const bool checked = opt.checked_given || opt.emit == "trace";
    if (checked && opt.algo != "functional") {
        std::cerr << "error: checked mode instruments the functional algorithm; "
                     "use --algo functional\n";
        return kExitInputError;
    }
    if (!opt.fuel.empty() && opt.algo != "functional") {
        std::cerr << "error: --fuel applies to the functional algorithm\n";
        return kExitInputError;
    }

    int exit_code = kExitOk;
    std::optional<scc::SccPartition> partition;
    std::string trace_text;

    try {
        if (checked) {
            scc::CheckConfig config;
            config.suites = scc::parse_suites(opt.checked.empty() ? "all" : opt.checked.front());
            scc::CheckedRun result;
            scc::run_with_stack(kDeepStack, [&] { result = scc::run_checked(g, config, order); });
            partition = result.partition;
            trace_text = scc::trace_to_text(result.trace);
            const auto& sum = result.summary;
            std::cerr << "checked: " << sum.clauses_evaluated << " clauses evaluated, "
                      << sum.clauses_failed << " failed\n";
            if (!sum.all_hold()) {
                for (const auto& [clause, count] : sum.failed_by_clause)
                    std::cerr << "clause " << clause << ": " << count << " failure(s)\n";
                if (sum.first_failure)
                    std::cerr << "first failure: " << sum.first_failure->clause << ": "
                              << sum.first_failure->witness.value_or("") << "\n";
                exit_code = kExitCheckFailed;
            }
        } else if (opt.algo == "fast") {
            partition = scc::tarjan_fast(g);
        } else if (opt.algo == "oracle") {
            partition = scc::scc_oracle(g);
        } else if (!opt.fuel.empty()) {
            const std::uint64_t fuel = opt.fuel == "auto"
                                           ? scc::default_fuel(g.vertex_count())
                                           : std::stoull(opt.fuel);
            std::optional<scc::SccPartition> result;
            scc::run_with_stack(kDeepStack,
                                [&] { result = scc::tarjan_fueled(g, fuel, order); });
            if (!result) {
                std::cerr << "fuel exhausted after " << fuel << " steps\n";
                return kExitCheckFailed;
            }
            partition = *result;
        } else {
            scc::run_with_stack(kDeepStack, [&] { partition = scc::tarjan(g, order); });
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInputError;
    }

    if (opt.emit == "sccs") {
        out << scc::format_sccs(*partition);
    } else if (opt.emit == "condensation") {
        out << scc::format_condensation(g, *partition);
    } else if (opt.emit == "trace") {
        out << trace_text;
    }
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tarjan strongly connected components: functional reference, "
                 "runtime-checked mode, fast iterative variant, brute-force oracle"};

    Options opt;
    app.add_option("--input", opt.input, "graph file (edge list or DIMACS)");
    app.add_option("--gen", opt.gen_spec, "generator spec, e.g. gnp:n=100,p=0.05,seed=42");
    app.add_option("--algo", opt.algo, "functional | fast | oracle")
        ->check(CLI::IsMember({"functional", "fast", "oracle"}));
    auto* checked_opt =
        app.add_option("--checked", opt.checked,
                       "run all contract checks, or a comma list of suites: preconditions, "
                       "postconditions, assertions, wf_env_each_step, measures, fuel_bound, "
                       "coq_post")
            ->expected(0, 1);
    app.add_option("--order", opt.order, "min | seed:<k>");
    app.add_option("--emit", opt.emit, "sccs | condensation | trace | bench")
        ->check(CLI::IsMember({"sccs", "condensation", "trace", "bench"}));
    app.add_option("--fuel", opt.fuel, "auto or a step budget for the fuel-bounded driver");
    app.add_option("--out", opt.out_path, "write payload to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }
    opt.checked_given = checked_opt->count() > 0;

    try {
        return run(opt);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInputError;
    }
}
