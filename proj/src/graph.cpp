#include "homolink/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "homolink/errors.hpp"

namespace homolink {

namespace {

std::uint64_t edge_key(const Edge& e) {
  return (static_cast<std::uint64_t>(e.u) << 32) | e.v;
}

std::optional<long long> parse_integer(const std::string& s) {
  long long value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return value;
}

}  // namespace

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges,
                        std::span<const Timestamp> timestamps) {
  if (!timestamps.empty() && timestamps.size() != edges.size()) {
    throw std::invalid_argument("timestamp count does not match edge count");
  }
  Graph g;
  g.offsets_.assign(node_count + 1, 0);

  // Keep the first occurrence of every edge. Sort indices by key (stable) to
  // find duplicates without hashing.
  std::vector<std::size_t> order(edges.size());
  std::vector<Edge> canon(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u >= node_count || e.v >= node_count) {
      throw std::out_of_range("edge endpoint outside node range");
    }
    canon[i] = make_edge(e.u, e.v);
    order[i] = i;
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return edge_key(canon[a]) < edge_key(canon[b]);
  });
  std::vector<char> keep(edges.size(), 0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Edge& e = canon[order[k]];
    if (e.u == e.v) continue;
    if (k > 0 && canon[order[k - 1]] == e) continue;
    keep[order[k]] = 1;
  }

  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!keep[i]) continue;
    g.edges_.push_back(canon[i]);
    if (!timestamps.empty()) g.timestamps_.push_back(timestamps[i]);
    ++g.offsets_[canon[i].u + 1];
    ++g.offsets_[canon[i].v + 1];
  }
  for (std::size_t u = 0; u < node_count; ++u) g.offsets_[u + 1] += g.offsets_[u];

  g.adjacency_.resize(2 * g.edges_.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : g.edges_) {
    g.adjacency_[cursor[e.u]++] = e.v;
    g.adjacency_[cursor[e.v]++] = e.u;
  }
  for (std::size_t u = 0; u < node_count; ++u) {
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u + 1]));
  }
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

void Graph::check_node(NodeId u) const {
  if (u >= node_count()) {
    throw std::out_of_range("node id " + std::to_string(u) + " out of range [0, " +
                            std::to_string(node_count()) + ")");
  }
}

std::optional<NodeId> LabeledGraph::find(const std::string& label) const {
  if (auto it = index.find(label); it != index.end()) return it->second;
  return std::nullopt;
}

LabeledGraph build_graph(std::span<const RawEdge> edges, bool directed_input) {
  // Orientation is discarded, so (a,b) and (b,a) collapse to one edge either
  // way; the flag only records what the caller declared.
  (void)directed_input;
  if (edges.empty()) throw InputError("empty graph");

  const bool stamped = edges.front().timestamp.has_value();
  for (const RawEdge& e : edges) {
    if (e.timestamp.has_value() != stamped) {
      throw InputError("timestamps must be given for every edge or for none");
    }
  }

  std::vector<std::string> labels;
  labels.reserve(edges.size());
  for (const RawEdge& e : edges) {
    labels.push_back(e.from);
    labels.push_back(e.to);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  bool all_numeric = std::all_of(labels.begin(), labels.end(),
                                 [](const std::string& l) { return parse_integer(l).has_value(); });
  if (all_numeric) {
    std::stable_sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
      return *parse_integer(a) < *parse_integer(b);
    });
  }

  LabeledGraph out;
  out.index.reserve(labels.size() * 2);
  for (std::size_t i = 0; i < labels.size(); ++i) out.index.emplace(labels[i], static_cast<NodeId>(i));

  std::vector<Edge> dense;
  std::vector<Timestamp> stamps;
  dense.reserve(edges.size());
  std::size_t self_loops = 0;
  for (const RawEdge& e : edges) {
    NodeId a = out.index.at(e.from);
    NodeId b = out.index.at(e.to);
    if (a == b) {
      ++self_loops;
      continue;
    }
    dense.push_back(make_edge(a, b));
    if (stamped) stamps.push_back(*e.timestamp);
  }

  out.graph = Graph::from_edges(labels.size(), dense, stamps);
  out.self_loops_dropped = self_loops;
  out.duplicates_dropped = dense.size() - out.graph.edge_count();
  out.labels = std::move(labels);
  return out;
}

std::size_t common_neighbor_count(const Graph& g, NodeId u, NodeId v) {
  g.check_node(u);
  g.check_node(v);
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::size_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::vector<NodeId> common_neighbors(const Graph& g, NodeId u, NodeId v) {
  g.check_node(u);
  g.check_node(v);
  if (u == v) throw std::invalid_argument("common_neighbors requires distinct nodes");
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::vector<NodeId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t edges_among_neighbors(const Graph& g, NodeId i) {
  g.check_node(i);
  auto nb = g.neighbors(i);
  std::size_t twice = 0;
  for (NodeId w : nb) {
    // Count neighbors of w that are also neighbors of i; each edge seen twice.
    auto nw = g.neighbors(w);
    std::size_t a = 0, b = 0;
    while (a < nb.size() && b < nw.size()) {
      if (nb[a] < nw[b]) {
        ++a;
      } else if (nw[b] < nb[a]) {
        ++b;
      } else {
        ++twice;
        ++a;
        ++b;
      }
    }
  }
  return twice / 2;
}

double local_clustering(const Graph& g, NodeId i) {
  g.check_node(i);
  const double k = static_cast<double>(g.degree(i));
  if (k < 2) return 0.0;
  return 2.0 * static_cast<double>(edges_among_neighbors(g, i)) / (k * (k - 1.0));
}

std::vector<std::uint64_t> node_triangles(const Graph& g) {
  // Orient each edge low -> high; every triangle u < v < w is found once
  // from u by marking u's forward neighbors.
  const std::size_t n = g.node_count();
  std::vector<std::uint64_t> counts(n, 0);
  std::vector<char> mark(n, 0);
  for (NodeId u = 0; u < n; ++u) {
    auto nu = g.neighbors(u);
    auto fu = std::upper_bound(nu.begin(), nu.end(), u);
    for (auto it = fu; it != nu.end(); ++it) mark[*it] = 1;
    for (auto it = fu; it != nu.end(); ++it) {
      NodeId v = *it;
      auto nv = g.neighbors(v);
      for (auto jt = std::upper_bound(nv.begin(), nv.end(), v); jt != nv.end(); ++jt) {
        if (!mark[*jt]) continue;
        ++counts[u];
        ++counts[v];
        ++counts[*jt];
      }
    }
    for (auto it = fu; it != nu.end(); ++it) mark[*it] = 0;
  }
  return counts;
}

double average_clustering(const Graph& g, bool exclude_low_degree) {
  const std::size_t n = g.node_count();
  const auto triangles = node_triangles(g);
  double sum = 0.0;
  std::size_t counted = 0;
  for (NodeId i = 0; i < n; ++i) {
    const double k = static_cast<double>(g.degree(i));
    if (k < 2) {
      if (!exclude_low_degree) ++counted;
      continue;
    }
    sum += 2.0 * static_cast<double>(triangles[i]) / (k * (k - 1.0));
    ++counted;
  }
  return counted == 0 ? 0.0 : sum / static_cast<double>(counted);
}

std::uint64_t triangle_count(const Graph& g) {
  std::uint64_t total = 0;
  for (auto c : node_triangles(g)) total += c;
  return total / 3;
}

Subgraph induced_subgraph(const Graph& g, std::span<const NodeId> nodes) {
  constexpr NodeId kAbsent = static_cast<NodeId>(-1);
  std::vector<NodeId> local(g.node_count(), kAbsent);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    g.check_node(nodes[i]);
    local[nodes[i]] = static_cast<NodeId>(i);
  }
  std::vector<Edge> kept;
  std::vector<Timestamp> stamps;
  auto all = g.edges();
  for (std::size_t i = 0; i < all.size(); ++i) {
    NodeId a = local[all[i].u];
    NodeId b = local[all[i].v];
    if (a == kAbsent || b == kAbsent) continue;
    kept.push_back(make_edge(a, b));
    if (g.has_timestamps()) stamps.push_back(g.timestamps()[i]);
  }
  Subgraph out;
  out.graph = Graph::from_edges(nodes.size(), kept, stamps);
  out.parent_ids.assign(nodes.begin(), nodes.end());
  return out;
}

Subgraph bfs_sample(const Graph& g, NodeId start, std::size_t max_nodes) {
  g.check_node(start);
  if (max_nodes < 1) throw std::invalid_argument("max_nodes must be at least 1");
  std::vector<char> seen(g.node_count(), 0);
  std::vector<NodeId> order;
  std::deque<NodeId> queue;
  seen[start] = 1;
  order.push_back(start);
  queue.push_back(start);
  while (!queue.empty() && order.size() < max_nodes) {
    NodeId u = queue.front();
    queue.pop_front();
    for (NodeId w : g.neighbors(u)) {
      if (seen[w]) continue;
      seen[w] = 1;
      order.push_back(w);
      queue.push_back(w);
      if (order.size() >= max_nodes) break;
    }
  }
  return induced_subgraph(g, order);
}

}  // namespace homolink
