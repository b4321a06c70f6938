#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "homolink/attributes.hpp"
#include "homolink/graph.hpp"

namespace homolink {

// Edge list: one edge per line, two labels separated by whitespace or a
// comma, optional integer timestamp as a third column. Blank lines and lines
// starting with '#' are skipped. Errors are InputError with "<source>:<line>".
std::vector<RawEdge> read_edge_list(std::istream& in, const std::string& source = "<stream>");
std::vector<RawEdge> read_edge_list(const std::filesystem::path& path);

// Writes edges in canonical order with external labels (and timestamps when
// present). Reading the output back yields the same graph.
void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& labels);

// Pair list: two labels per line, same tokenization as edge lists.
std::vector<std::pair<std::string, std::string>> read_pairs(std::istream& in, const std::string& source = "<stream>");
std::vector<std::pair<std::string, std::string>> read_pairs(const std::filesystem::path& path);

struct AttributeLoad {
  AttributeTable table;
  std::size_t rows = 0;
  std::size_t unknown_nodes = 0;  // rows whose node is not in the graph
};

// CSV with header `node,<attr1>,...`. An empty field or `NA` is missing.
// Graph nodes without a row are missing on every attribute.
AttributeLoad read_attributes(std::istream& in, const LabeledGraph& graph, const std::string& source = "<stream>");
AttributeLoad read_attributes(const std::filesystem::path& path, const LabeledGraph& graph);

// One row per node in id order; missing values are written as empty fields.
void write_attributes(std::ostream& out, const AttributeTable& tab, const std::vector<std::string>& labels);

// Labels in file order, resolved to dense ids; unknown labels are InputError.
NodeId resolve_label(const LabeledGraph& graph, const std::string& label);

}  // namespace homolink
