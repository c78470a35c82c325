#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "scc/graph.hpp"
#include "scc/partition.hpp"

namespace scc {

/// Index/lowlink Tarjan over flat arrays with an explicit frame stack:
/// no host recursion, O(V+E) time, O(V) auxiliary space. Safe at 10^6
/// vertices.
SccPartition tarjan_fast(const Graph& g);

struct BenchRow {
    std::uint32_t size;
    std::uint64_t edges;
    double millis;
};

/// Times tarjan_fast over family(size) for each size. Graph construction is
/// excluded; each point is the median of repeated runs. Requires at least
/// three strictly increasing sizes (throws std::invalid_argument otherwise).
std::vector<BenchRow> bench_linear(const std::function<Graph(std::uint32_t)>& family,
                                   std::span<const std::uint32_t> sizes);

/// time(sizes[i+1]) / time(sizes[i]) for consecutive rows.
std::vector<double> doubling_ratios(std::span<const BenchRow> rows);

/// Comma-separated rows: size,edges,millis.
std::string format_bench(std::span<const BenchRow> rows);

} // namespace scc
