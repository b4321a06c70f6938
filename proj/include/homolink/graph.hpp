#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace homolink {

using NodeId = std::uint32_t;
using Timestamp = std::int64_t;

// Undirected edge, always stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(NodeId a, NodeId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/**
 * Immutable simple undirected graph in compressed sparse row form.
 *
 * Neighbor lists are sorted ascending so that intersections are linear merges.
 * The canonical edge list keeps first-seen order, which the temporal holdout
 * relies on for tie-breaking; optional per-edge timestamps run parallel to it.
 */
class Graph {
 public:
  Graph() = default;

  // Builds from dense ids. Self-loops and duplicates (in either orientation)
  // are dropped; the first occurrence of an edge wins, including its timestamp.
  // `timestamps`, when non-empty, must have the same length as `edges`.
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges,
                          std::span<const Timestamp> timestamps = {});

  std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return edges_.size(); }

  std::size_t degree(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }

  std::span<const NodeId> neighbors(NodeId u) const {
    return {adjacency_.data() + offsets_[u], degree(u)};
  }

  bool has_edge(NodeId u, NodeId v) const;

  std::span<const Edge> edges() const { return edges_; }
  bool has_timestamps() const { return !timestamps_.empty(); }
  std::span<const Timestamp> timestamps() const { return timestamps_; }

  // Throws std::out_of_range unless u < node_count().
  void check_node(NodeId u) const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> adjacency_;
  std::vector<Edge> edges_;
  std::vector<Timestamp> timestamps_;
};

// A graph together with the external labels of its nodes (labels[id]).
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;
  std::size_t duplicates_dropped = 0;
  std::size_t self_loops_dropped = 0;
  std::unordered_map<std::string, NodeId> index;

  // Dense id of an external label, if present.
  std::optional<NodeId> find(const std::string& label) const;
};

struct RawEdge {
  std::string from;
  std::string to;
  std::optional<Timestamp> timestamp;
};

/**
 * Ingests labeled edges. Labels are assigned dense ids in sorted order
 * (numeric order when every label is an integer, lexicographic otherwise),
 * so the id assignment does not depend on line order. Directed input is
 * symmetrized; reciprocal pairs count as duplicates.
 *
 * Throws InputError("empty graph") when no edges are given, and when only
 * some edges carry timestamps.
 */
LabeledGraph build_graph(std::span<const RawEdge> edges, bool directed_input = false);

// Sorted Γ(u) ∩ Γ(v). Requires u != v.
std::vector<NodeId> common_neighbors(const Graph& g, NodeId u, NodeId v);
std::size_t common_neighbor_count(const Graph& g, NodeId u, NodeId v);

// Number of edges among the neighbors of i.
std::size_t edges_among_neighbors(const Graph& g, NodeId i);

// 2e_i / (k_i (k_i - 1)); 0 when k_i < 2.
double local_clustering(const Graph& g, NodeId i);

// Mean local clustering over all nodes. With exclude_low_degree the mean is
// taken only over nodes of degree >= 2 (0 if there are none).
double average_clustering(const Graph& g, bool exclude_low_degree = false);

// Triangles through each node (e_i in the clustering formula).
std::vector<std::uint64_t> node_triangles(const Graph& g);

// Total number of triangles in g.
std::uint64_t triangle_count(const Graph& g);

struct Subgraph {
  Graph graph;
  // parent_ids[local id] = id in the parent graph, in BFS discovery order.
  std::vector<NodeId> parent_ids;
};

/**
 * Breadth-first sample: the first max_nodes nodes discovered from start
 * (FIFO queue, neighbors expanded in ascending id order), returned as the
 * induced subgraph. Local ids follow discovery order; timestamps carry over.
 */
Subgraph bfs_sample(const Graph& g, NodeId start, std::size_t max_nodes);

// Induced subgraph on `nodes` (local id = position in `nodes`).
Subgraph induced_subgraph(const Graph& g, std::span<const NodeId> nodes);

}  // namespace homolink
