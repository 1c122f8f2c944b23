#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mwbis/instance.hpp"

namespace mwbis {

// Reports the 1-based line of the offending input.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// File open/write failure, as opposed to malformed content.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Line-oriented graph file, 1-based vertex ids:
//   c <comment>
//   p mwbis <n> <m>
//   w <vertex> <weight>      (all-or-none; absent means MIVC degree weights)
//   e <u> <v>
// The budget k never lives in the file; it arrives per run.
struct GraphFile {
    Graph graph;
    std::optional<std::vector<double>> weights;  // nullopt: MIVC convention
    std::vector<std::string> comments;
};

GraphFile read_graph_file(std::istream& in);
GraphFile read_graph_file(const std::string& path);

void write_graph_file(std::ostream& out, const Graph& g,
                      const std::vector<double>* weights = nullptr,
                      const std::vector<std::string>& comments = {});
void write_graph_file(const std::string& path, const Graph& g,
                      const std::vector<double>* weights = nullptr,
                      const std::vector<std::string>& comments = {});

// Applies the MIVC convention when the file carries no weights.
WeightedInstance instance_from_file(const GraphFile& file, int k);

}  // namespace mwbis
