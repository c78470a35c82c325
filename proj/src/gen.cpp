#include "scc/gen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "scc/prng.hpp"

namespace scc {

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

// Geometric gap sampling over a linear enumeration of candidate pairs:
// the next accepted position is current + 1 + floor(log1p(-u)/log1p(-p)).
// p = 0 and p = 1 short-circuit.
template <typename PairOf>
void sample_pairs(std::uint64_t total, double p, std::uint64_t seed, const PairOf& pair_of,
                  EdgeList& out) {
    if (p <= 0.0 || total == 0)
        return;
    if (p >= 1.0) {
        for (std::uint64_t t = 0; t < total; ++t)
            out.push_back(pair_of(t));
        return;
    }
    SplitMix64 rng(seed);
    const double denom = std::log1p(-p);
    std::uint64_t t = 0;
    while (true) {
        const double u = rng.next_unit();
        const double skip = std::floor(std::log1p(-u) / denom);
        if (skip >= static_cast<double>(total)) // gap larger than what's left
            break;
        t += static_cast<std::uint64_t>(skip);
        if (t >= total)
            break;
        out.push_back(pair_of(t));
        ++t;
    }
}

Graph make_gnp(std::uint32_t n, double p, std::uint64_t seed) {
    EdgeList edges;
    if (n >= 2) {
        const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1);
        // Row-major over ordered pairs, diagonal skipped.
        auto pair_of = [n](std::uint64_t t) -> std::pair<Vertex, Vertex> {
            const Vertex u = static_cast<Vertex>(t / (n - 1));
            const std::uint64_t r = t % (n - 1);
            const Vertex v = static_cast<Vertex>(r + (r >= u ? 1 : 0));
            return {u, v};
        };
        edges.reserve(static_cast<std::size_t>(p * static_cast<double>(total)) + 16);
        sample_pairs(total, p, seed, pair_of, edges);
    }
    return Graph(n, edges);
}

Graph make_dag(std::uint32_t n, double p, std::uint64_t seed) {
    EdgeList edges;
    if (n >= 2) {
        // Row offsets into the strictly upper-triangular pair enumeration.
        std::vector<std::uint64_t> offset(n, 0);
        for (std::uint32_t u = 1; u < n; ++u)
            offset[u] = offset[u - 1] + (n - u);
        const std::uint64_t total = offset[n - 1];
        auto pair_of = [&offset](std::uint64_t t) -> std::pair<Vertex, Vertex> {
            const auto it = std::upper_bound(offset.begin(), offset.end(), t);
            const Vertex u = static_cast<Vertex>(std::distance(offset.begin(), it) - 1);
            return {u, static_cast<Vertex>(u + 1 + (t - offset[u]))};
        };
        sample_pairs(total, p, seed, pair_of, edges);
    }
    return Graph(n, edges);
}

Graph make_cycle_chain(std::uint32_t n, std::uint32_t k) {
    if (n == 0)
        return Graph(0);
    if (k == 0 || k > n)
        throw std::domain_error("cycle_chain needs 1 <= k <= n");
    EdgeList edges;
    const std::uint32_t base = n / k;
    const std::uint32_t extra = n % k;
    std::uint32_t start = 0;
    std::uint32_t prev_start = 0;
    for (std::uint32_t c = 0; c < k; ++c) {
        const std::uint32_t size = base + (c < extra ? 1 : 0);
        for (std::uint32_t i = 0; i < size; ++i) {
            const Vertex from = start + i;
            const Vertex to = start + (i + 1) % size;
            edges.emplace_back(from, to);
        }
        if (c > 0)
            edges.emplace_back(prev_start, start); // chain link between cycles
        prev_start = start;
        start += size;
    }
    return Graph(n, edges);
}

Graph make_complete(std::uint32_t n) {
    EdgeList edges;
    edges.reserve(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v)
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

} // namespace

Graph generate(const GraphSpec& spec) {
    switch (spec.model) {
    case GraphModel::empty:
        return Graph(spec.n);
    case GraphModel::complete:
        return make_complete(spec.n);
    case GraphModel::cycle_chain:
        return make_cycle_chain(spec.n, spec.k);
    case GraphModel::gnp:
    case GraphModel::dag:
        if (spec.p < 0.0 || spec.p > 1.0 || std::isnan(spec.p))
            throw std::domain_error("edge probability must be in [0,1]");
        return spec.model == GraphModel::gnp ? make_gnp(spec.n, spec.p, spec.seed)
                                             : make_dag(spec.n, spec.p, spec.seed);
    }
    throw std::invalid_argument("unknown graph model");
}

GraphSpec parse_graph_spec(std::string_view text) {
    GraphSpec spec;
    const std::size_t colon = text.find(':');
    const std::string_view model = text.substr(0, colon);
    if (model == "gnp")
        spec.model = GraphModel::gnp;
    else if (model == "dag")
        spec.model = GraphModel::dag;
    else if (model == "cycle_chain")
        spec.model = GraphModel::cycle_chain;
    else if (model == "complete")
        spec.model = GraphModel::complete;
    else if (model == "empty")
        spec.model = GraphModel::empty;
    else
        throw std::invalid_argument("unknown graph model: " + std::string(model));

    if (colon == std::string_view::npos)
        return spec;
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
        const std::size_t comma = rest.find(',');
        const std::string_view item =
            rest.substr(0, comma == std::string_view::npos ? rest.size() : comma);
        const std::size_t eq = item.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("expected key=value in graph spec");
        const std::string_view key = item.substr(0, eq);
        const std::string value(item.substr(eq + 1));
        try {
            if (key == "n")
                spec.n = static_cast<std::uint32_t>(std::stoul(value));
            else if (key == "p")
                spec.p = std::stod(value);
            else if (key == "k")
                spec.k = static_cast<std::uint32_t>(std::stoul(value));
            else if (key == "seed")
                spec.seed = std::stoull(value);
            else
                throw std::invalid_argument("unknown graph spec key: " + std::string(key));
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("bad value for " + std::string(key) + ": " + value);
        }
        if (comma == std::string_view::npos)
            break;
        rest = rest.substr(comma + 1);
    }
    return spec;
}

} // namespace scc
