#include "scc/fast_scc.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <stdexcept>

namespace scc {

SccPartition tarjan_fast(const Graph& g) {
    const std::uint32_t n = g.vertex_count();
    constexpr std::uint32_t kUnset = 0xFFFFFFFFu;

    std::vector<std::uint32_t> index(n, kUnset);
    std::vector<std::uint32_t> low(n, 0);
    std::vector<std::uint8_t> on_stack(n, 0);
    std::vector<Vertex> stack;
    stack.reserve(n);

    struct Frame {
        Vertex v;
        std::uint32_t cursor;
    };
    std::vector<Frame> frames;

    std::vector<std::vector<Vertex>> components;
    std::uint32_t counter = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (index[root] != kUnset)
            continue;
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        frames.push_back({root, 0});
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto succ = g.successors(f.v);
            if (f.cursor < succ.size()) {
                const Vertex w = succ[f.cursor++];
                if (index[w] == kUnset) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    components.emplace_back();
                    Vertex w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        components.back().push_back(w);
                    } while (w != f.v);
                }
                const Vertex done = f.v;
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().v] = std::min(low[frames.back().v], low[done]);
            }
        }
    }
    return SccPartition::canonical(std::move(components));
}

std::vector<BenchRow> bench_linear(const std::function<Graph(std::uint32_t)>& family,
                                   std::span<const std::uint32_t> sizes) {
    if (sizes.size() < 3)
        throw std::invalid_argument("bench_linear needs at least 3 sizes");
    for (std::size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i] <= sizes[i - 1])
            throw std::invalid_argument("bench_linear sizes must be strictly increasing");

    using clock = std::chrono::steady_clock;
    std::vector<BenchRow> rows;
    for (std::uint32_t size : sizes) {
        const Graph g = family(size);
        tarjan_fast(g); // warm-up, untimed

        std::vector<double> samples;
        double total = 0.0;
        while (samples.size() < 5 || (total < 150.0 && samples.size() < 100)) {
            const auto t0 = clock::now();
            volatile std::size_t guard = tarjan_fast(g).component_count();
            (void)guard;
            const auto t1 = clock::now();
            const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            samples.push_back(ms);
            total += ms;
        }
        // Scheduler noise only ever adds time; the minimum is the stable
        // estimate of the true cost.
        rows.push_back({size, g.edge_count(), *std::min_element(samples.begin(), samples.end())});
    }
    return rows;
}

std::vector<double> doubling_ratios(std::span<const BenchRow> rows) {
    std::vector<double> out;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double denom = std::max(rows[i - 1].millis, 1e-6);
        out.push_back(rows[i].millis / denom);
    }
    return out;
}

std::string format_bench(std::span<const BenchRow> rows) {
    std::string out;
    char buf[96];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%u,%llu,%.3f\n", r.size,
                      static_cast<unsigned long long>(r.edges), r.millis);
        out += buf;
    }
    return out;
}

} // namespace scc
