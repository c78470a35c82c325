#include "scc/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace scc {

namespace {

bool blank_or_comment(const std::string& line, char comment) {
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r')
            continue;
        return c == comment;
    }
    return true;
}

} // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    std::uint32_t n = 0;
    bool have_header = false;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank_or_comment(line, '#'))
            continue;
        std::istringstream ls(line);
        if (!have_header) {
            std::string tag;
            unsigned long count;
            if (!(ls >> tag >> count) || tag != "n")
                throw GraphParseError("line " + std::to_string(line_no) +
                                      ": expected header \"n <count>\"");
            n = static_cast<std::uint32_t>(count);
            have_header = true;
            continue;
        }
        unsigned long u, v;
        if (!(ls >> u >> v))
            throw GraphParseError("line " + std::to_string(line_no) + ": expected \"u v\"");
        if (u >= n || v >= n)
            throw GraphParseError("line " + std::to_string(line_no) + ": vertex out of range");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (!have_header)
        throw GraphParseError("missing \"n <count>\" header");
    return Graph(n, edges);
}

Graph parse_dimacs(std::istream& in) {
    std::string line;
    std::uint32_t n = 0;
    std::uint64_t declared_edges = 0;
    bool have_header = false;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank_or_comment(line, 'c'))
            continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            std::string kind;
            unsigned long nn, mm;
            if (have_header || !(ls >> kind >> nn >> mm) || kind != "edge")
                throw GraphParseError("line " + std::to_string(line_no) +
                                      ": expected \"p edge <n> <m>\"");
            n = static_cast<std::uint32_t>(nn);
            declared_edges = mm;
            have_header = true;
        } else if (tag == "a") {
            if (!have_header)
                throw GraphParseError("line " + std::to_string(line_no) + ": arc before header");
            unsigned long u, v;
            if (!(ls >> u >> v))
                throw GraphParseError("line " + std::to_string(line_no) + ": expected \"a u v\"");
            if (u < 1 || v < 1 || u > n || v > n)
                throw GraphParseError("line " + std::to_string(line_no) + ": vertex out of range");
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else {
            throw GraphParseError("line " + std::to_string(line_no) + ": unknown record \"" +
                                  tag + "\"");
        }
    }
    if (!have_header)
        throw GraphParseError("missing \"p edge\" header");
    if (edges.size() != declared_edges)
        throw GraphParseError("header declares " + std::to_string(declared_edges) +
                              " arcs but the body has " + std::to_string(edges.size()));
    return Graph(n, edges);
}

Graph load_graph(std::istream& in) {
    std::stringstream buffered;
    buffered << in.rdbuf();
    const std::string content = buffered.str();
    // First significant character decides: DIMACS records start with c/p.
    for (std::size_t i = 0; i < content.size(); ++i) {
        const char c = content[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
            continue;
        std::istringstream replay(content);
        if (c == 'p' || c == 'c')
            return parse_dimacs(replay);
        if (c == 'n' || c == '#')
            return parse_edge_list(replay);
        throw GraphParseError("unrecognized graph format");
    }
    throw GraphParseError("empty graph file");
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw GraphParseError("cannot open " + path);
    return load_graph(in);
}

std::string format_sccs(const SccPartition& partition) {
    std::string out;
    for (const auto& c : partition.components()) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i)
                out += ' ';
            out += std::to_string(c[i]);
        }
        out += '\n';
    }
    return out;
}

std::string format_condensation(const Graph& g, const SccPartition& partition) {
    const std::uint32_t n = g.vertex_count();
    if (!partition.is_partition_of(n))
        throw std::invalid_argument("partition does not cover the graph");

    std::vector<Vertex> component_name(n); // least member of the component
    for (const auto& c : partition.components())
        for (Vertex v : c)
            component_name[v] = c.front();

    std::set<std::pair<Vertex, Vertex>> cond_edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.successors(u))
            if (component_name[u] != component_name[v])
                cond_edges.emplace(component_name[u], component_name[v]);

    std::string out;
    for (const auto& c : partition.components())
        out += "C" + std::to_string(c.front()) + "\n";
    for (const auto& [a, b] : cond_edges)
        out += "C" + std::to_string(a) + " -> C" + std::to_string(b) + "\n";
    return out;
}

} // namespace scc
