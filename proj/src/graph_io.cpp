#include "mwbis/graph_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace mwbis {

GraphFile read_graph_file(std::istream& in) {
    GraphFile out;
    bool have_header = false;
    int n = 0;
    long long m = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::optional<double>> weights;
    bool any_weight = false;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") {
            std::string rest;
            std::getline(ls, rest);
            if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
            out.comments.push_back(rest);
            continue;
        }
        if (tag == "p") {
            if (have_header) throw ParseError(lineno, "duplicate problem line");
            std::string kind;
            if (!(ls >> kind >> n >> m) || kind != "mwbis")
                throw ParseError(lineno, "expected 'p mwbis <n> <m>'");
            if (n < 0 || m < 0) throw ParseError(lineno, "negative n or m");
            have_header = true;
            weights.assign(n, std::nullopt);
            continue;
        }
        if (!have_header) throw ParseError(lineno, "'" + tag + "' line before the problem line");
        if (tag == "w") {
            int v;
            double w;
            if (!(ls >> v >> w)) throw ParseError(lineno, "expected 'w <vertex> <weight>'");
            if (v < 1 || v > n) throw ParseError(lineno, "vertex id out of range [1, n]");
            if (!(w > 0.0)) throw ParseError(lineno, "weight must be positive");
            if (weights[v - 1])
                throw ParseError(lineno, "duplicate weight for vertex " + std::to_string(v));
            weights[v - 1] = w;
            any_weight = true;
            continue;
        }
        if (tag == "e") {
            int u, v;
            if (!(ls >> u >> v)) throw ParseError(lineno, "expected 'e <u> <v>'");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(lineno, "vertex id out of range [1, n]");
            if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
            edges.emplace_back(u - 1, v - 1);
            continue;
        }
        throw ParseError(lineno, "unknown line type '" + tag + "'");
    }
    if (!have_header) throw ParseError(lineno, "missing problem line 'p mwbis <n> <m>'");

    out.graph = build_graph(n, edges);
    if (out.graph.m != m)
        throw ParseError(lineno, "header declares " + std::to_string(m) + " edges, file has " +
                                     std::to_string(out.graph.m) + " distinct edges");
    if (any_weight) {
        std::vector<double> w(n);
        for (int v = 0; v < n; ++v) {
            if (!weights[v])
                throw ParseError(lineno,
                                 "missing weight for vertex " + std::to_string(v + 1) +
                                     " (weight lines are all-or-none)");
            w[v] = *weights[v];
        }
        out.weights = std::move(w);
    }
    return out;
}

GraphFile read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return read_graph_file(in);
}

namespace {

void write_weight(std::ostream& out, double w) {
    if (w == std::floor(w) && std::fabs(w) < 1e15) {
        out << static_cast<long long>(w);
    } else {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", w);
        out << buf;
    }
}

}  // namespace

void write_graph_file(std::ostream& out, const Graph& g, const std::vector<double>* weights,
                      const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "c " << c << "\n";
    out << "p mwbis " << g.n << " " << g.m << "\n";
    if (weights) {
        for (int v = 0; v < g.n; ++v) {
            out << "w " << v + 1 << " ";
            write_weight(out, (*weights)[v]);
            out << "\n";
        }
    }
    for (const auto& [u, v] : g.edge_list()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

void write_graph_file(const std::string& path, const Graph& g, const std::vector<double>* weights,
                      const std::vector<std::string>& comments) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    write_graph_file(out, g, weights, comments);
    if (!out) throw IoError("write to " + path + " failed");
}

WeightedInstance instance_from_file(const GraphFile& file, int k) {
    if (file.weights) return make_instance(file.graph, *file.weights, k);
    return make_mivc_instance(file.graph, k);
}

}  // namespace mwbis
