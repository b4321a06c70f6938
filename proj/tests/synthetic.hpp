#pragma once

// Synthetic graph generators for tests and the acceptance suite.

#include <random>
#include <set>
#include <string>
#include <vector>

#include "homolink/attributes.hpp"
#include "homolink/graph.hpp"
#include "homolink/random.hpp"

namespace synth {

using homolink::AttributeTable;
using homolink::Edge;
using homolink::Graph;
using homolink::NodeId;

struct Planted {
  Graph graph;
  std::vector<int> block;  // ground-truth block of each node
};

// Two (or more) blocks of equal expected size; each node draws `half_degree`
// partners, inside its own block with probability `in_block`.
inline Planted block_graph(std::size_t n, std::size_t half_degree, double in_block, std::uint64_t seed,
                           int blocks = 2) {
  homolink::Rng rng(seed);
  Planted p;
  p.block.resize(n);
  std::vector<std::vector<NodeId>> members(static_cast<std::size_t>(blocks));
  for (NodeId i = 0; i < n; ++i) {
    p.block[i] = static_cast<int>(homolink::uniform_below(rng, static_cast<std::uint64_t>(blocks)));
    members[static_cast<std::size_t>(p.block[i])].push_back(i);
  }
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < half_degree; ++k) {
      NodeId j;
      if (homolink::uniform_unit(rng) < in_block) {
        const auto& own = members[static_cast<std::size_t>(p.block[i])];
        j = own[homolink::uniform_below(rng, own.size())];
      } else {
        int other = p.block[i];
        while (other == p.block[i]) other = static_cast<int>(homolink::uniform_below(rng, static_cast<std::uint64_t>(blocks)));
        const auto& them = members[static_cast<std::size_t>(other)];
        j = them[homolink::uniform_below(rng, them.size())];
      }
      if (i != j) edges.push_back(homolink::make_edge(i, j));
    }
  }
  p.graph = Graph::from_edges(n, edges);
  return p;
}

/**
 * Triadic-closure rewiring: `rounds` times, pick a random node u with a
 * two-hop neighbor w not adjacent to u, add (u, w) and remove a random
 * existing edge of u (other than the one used for the path), keeping m
 * fixed.
 */
inline Graph closure_rewire(const Graph& g, std::size_t rounds, std::uint64_t seed) {
  homolink::Rng rng(seed);
  const std::size_t n = g.node_count();
  std::vector<std::set<NodeId>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  auto pick = [&](const std::set<NodeId>& s) {
    auto it = s.begin();
    std::advance(it, static_cast<long>(homolink::uniform_below(rng, s.size())));
    return *it;
  };
  for (std::size_t r = 0; r < rounds; ++r) {
    NodeId u = static_cast<NodeId>(homolink::uniform_below(rng, n));
    if (adj[u].size() < 2) continue;
    NodeId v = pick(adj[u]);
    if (adj[v].size() < 2) continue;
    NodeId w = pick(adj[v]);
    if (w == u || adj[u].count(w)) continue;
    NodeId drop = pick(adj[u]);
    if (drop == v || adj[drop].size() < 2) continue;
    adj[u].erase(drop);
    adj[drop].erase(u);
    adj[u].insert(w);
    adj[w].insert(u);
  }
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v : adj[u])
      if (u < v) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

// Table with one column per entry in `columns`; values are "v<k>".
inline AttributeTable table_from(std::size_t n, const std::vector<std::string>& names,
                                 const std::vector<std::vector<int>>& columns) {
  AttributeTable tab(n, names);
  for (std::size_t a = 0; a < names.size(); ++a) {
    for (NodeId x = 0; x < n; ++x) {
      if (columns[a][x] >= 0) tab.set(a, x, "v" + std::to_string(columns[a][x]));
    }
  }
  return tab;
}

inline std::vector<int> random_labels(std::size_t n, int values, std::uint64_t seed) {
  homolink::Rng rng(seed);
  std::vector<int> out(n);
  for (auto& v : out) v = static_cast<int>(homolink::uniform_below(rng, static_cast<std::uint64_t>(values)));
  return out;
}

}  // namespace synth
