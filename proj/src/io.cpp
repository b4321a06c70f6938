#include "homolink/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "homolink/errors.hpp"

namespace homolink {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

// Splits on runs of whitespace and/or commas.
std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == ',' || c == '\r'; };
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_sep(line[j])) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
  throw InputError(source + ":" + std::to_string(line) + ": " + what);
}

bool skippable(std::string_view line) {
  auto t = trim(line);
  return t.empty() || t.front() == '#';
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return in;
}

}  // namespace

std::vector<RawEdge> read_edge_list(std::istream& in, const std::string& source) {
  std::vector<RawEdge> edges;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    auto tok = tokens(line);
    if (tok.size() < 2 || tok.size() > 3) fail(source, lineno, "expected 2 or 3 columns");
    RawEdge e{std::string(tok[0]), std::string(tok[1]), std::nullopt};
    if (tok.size() == 3) {
      Timestamp ts = 0;
      auto [ptr, ec] = std::from_chars(tok[2].data(), tok[2].data() + tok[2].size(), ts);
      if (ec != std::errc{} || ptr != tok[2].data() + tok[2].size()) {
        fail(source, lineno, "timestamp is not an integer: " + std::string(tok[2]));
      }
      e.timestamp = ts;
    }
    edges.push_back(std::move(e));
  }
  return edges;
}

std::vector<RawEdge> read_edge_list(const std::filesystem::path& path) {
  auto in = open(path);
  return read_edge_list(in, path.string());
}

void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& labels) {
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out << labels.at(edges[i].u) << ' ' << labels.at(edges[i].v);
    if (g.has_timestamps()) out << ' ' << g.timestamps()[i];
    out << '\n';
  }
}

std::vector<std::pair<std::string, std::string>> read_pairs(std::istream& in, const std::string& source) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    auto tok = tokens(line);
    if (tok.size() != 2) fail(source, lineno, "expected 2 columns");
    pairs.emplace_back(std::string(tok[0]), std::string(tok[1]));
  }
  return pairs;
}

std::vector<std::pair<std::string, std::string>> read_pairs(const std::filesystem::path& path) {
  auto in = open(path);
  return read_pairs(in, path.string());
}

AttributeLoad read_attributes(std::istream& in, const LabeledGraph& graph, const std::string& source) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> names;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    auto cols = split_csv(line);
    if (cols.size() < 2) fail(source, lineno, "header needs a node column and at least one attribute");
    for (std::size_t c = 1; c < cols.size(); ++c) {
      if (cols[c].empty()) fail(source, lineno, "empty attribute name");
      names.emplace_back(cols[c]);
    }
    break;
  }
  if (names.empty()) throw InputError(source + ": missing header");

  AttributeLoad load{AttributeTable(graph.labels.size(), names), 0, 0};
  std::unordered_set<NodeId> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    auto cols = split_csv(line);
    if (cols.size() != names.size() + 1) {
      fail(source, lineno, "expected " + std::to_string(names.size() + 1) + " fields, got " +
                               std::to_string(cols.size()));
    }
    ++load.rows;
    auto id = graph.find(std::string(cols[0]));
    if (!id) {
      ++load.unknown_nodes;
      continue;
    }
    if (!seen.insert(*id).second) fail(source, lineno, "duplicate row for node " + std::string(cols[0]));
    for (std::size_t a = 0; a < names.size(); ++a) {
      auto v = cols[a + 1];
      if (v.empty() || v == "NA") continue;
      load.table.set(a, *id, v);
    }
  }
  return load;
}

AttributeLoad read_attributes(const std::filesystem::path& path, const LabeledGraph& graph) {
  auto in = open(path);
  return read_attributes(in, graph, path.string());
}

void write_attributes(std::ostream& out, const AttributeTable& tab, const std::vector<std::string>& labels) {
  out << "node";
  for (const auto& n : tab.names()) out << ',' << n;
  out << '\n';
  for (NodeId x = 0; x < tab.node_count(); ++x) {
    out << labels.at(x);
    for (std::size_t a = 0; a < tab.attribute_count(); ++a) {
      out << ',';
      if (auto v = tab.value(a, x)) out << *v;
    }
    out << '\n';
  }
}

NodeId resolve_label(const LabeledGraph& graph, const std::string& label) {
  if (auto id = graph.find(label)) return *id;
  throw InputError("unknown node label: " + label);
}

}  // namespace homolink
