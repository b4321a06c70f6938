#pragma once

// Brute-force reference implementations. These deliberately use explicit
// sets and dense matrices and share no code paths with the library's
// merge-based kernels.

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "homolink/attributes.hpp"
#include "homolink/graph.hpp"

namespace oracle {

using homolink::AttributeTable;
using homolink::Edge;
using homolink::Graph;
using homolink::NodeId;

struct DenseGraph {
  std::size_t n = 0;
  std::vector<std::vector<int>> adj;
  std::vector<std::set<NodeId>> nbrs;

  explicit DenseGraph(const Graph& g) : n(g.node_count()), adj(n, std::vector<int>(n, 0)), nbrs(n) {
    for (const Edge& e : g.edges()) {
      adj[e.u][e.v] = adj[e.v][e.u] = 1;
      nbrs[e.u].insert(e.v);
      nbrs[e.v].insert(e.u);
    }
  }
  std::size_t degree(NodeId i) const { return nbrs[i].size(); }
  std::size_t edges() const {
    std::size_t m = 0;
    for (std::size_t i = 0; i < n; ++i) m += nbrs[i].size();
    return m / 2;
  }
};

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.push_back({i, j});
    }
  }
  return Graph::from_edges(n, edges);
}

inline std::set<NodeId> intersect(const std::set<NodeId>& a, const std::set<NodeId>& b) {
  std::set<NodeId> out;
  for (auto x : a) {
    if (b.count(x)) out.insert(x);
  }
  return out;
}

inline std::set<NodeId> unite(const std::set<NodeId>& a, const std::set<NodeId>& b) {
  std::set<NodeId> out = a;
  out.insert(b.begin(), b.end());
  return out;
}

inline double local_clustering(const DenseGraph& d, NodeId i) {
  std::vector<NodeId> nb(d.nbrs[i].begin(), d.nbrs[i].end());
  const double k = static_cast<double>(nb.size());
  if (nb.size() < 2) return 0.0;
  std::size_t links = 0;
  for (std::size_t a = 0; a < nb.size(); ++a) {
    for (std::size_t b = a + 1; b < nb.size(); ++b) links += static_cast<std::size_t>(d.adj[nb[a]][nb[b]]);
  }
  return 2.0 * static_cast<double>(links) / (k * (k - 1.0));
}

inline double average_clustering(const DenseGraph& d) {
  double s = 0.0;
  for (NodeId i = 0; i < d.n; ++i) s += local_clustering(d, i);
  return d.n == 0 ? 0.0 : s / static_cast<double>(d.n);
}

// Triangles by enumerating every node triple.
inline std::uint64_t triangles(const DenseGraph& d) {
  std::uint64_t t = 0;
  for (NodeId a = 0; a < d.n; ++a)
    for (NodeId b = a + 1; b < d.n; ++b)
      for (NodeId c = b + 1; c < d.n; ++c) t += static_cast<std::uint64_t>(d.adj[a][b] && d.adj[b][c] && d.adj[a][c]);
  return t;
}

// Connected triples by enumerating every (center, unordered neighbor pair).
inline std::uint64_t connected_triples(const DenseGraph& d) {
  std::uint64_t t = 0;
  for (NodeId c = 0; c < d.n; ++c)
    for (NodeId a = 0; a < d.n; ++a)
      for (NodeId b = a + 1; b < d.n; ++b) t += static_cast<std::uint64_t>(a != c && b != c && d.adj[c][a] && d.adj[c][b]);
  return t;
}

inline double global_clustering(const DenseGraph& d) {
  auto triples = connected_triples(d);
  return triples == 0 ? 0.0 : 3.0 * static_cast<double>(triangles(d)) / static_cast<double>(triples);
}

// Double loop over all ordered pairs (diagonal included), skipping pairs
// with a missing value.
inline double homophily_weight(const DenseGraph& d, const AttributeTable& tab, std::size_t attr) {
  const double two_m = 2.0 * static_cast<double>(d.edges());
  double num = 0.0, expected = 0.0, labeled_pairs_adj = 0.0;
  for (NodeId i = 0; i < d.n; ++i) {
    for (NodeId j = 0; j < d.n; ++j) {
      auto vi = tab.value(attr, i);
      auto vj = tab.value(attr, j);
      if (!vi || !vj) continue;
      const double kk = static_cast<double>(d.degree(i)) * static_cast<double>(d.degree(j)) / two_m;
      labeled_pairs_adj += d.adj[i][j];
      if (*vi == *vj) {
        num += d.adj[i][j] - kk;
        expected += kk;
      }
    }
  }
  const double wmax = labeled_pairs_adj - expected;
  if (wmax <= 1e-12 * std::max(1.0, labeled_pairs_adj)) return 0.0;
  return num / wmax;
}

inline double jaccard(const DenseGraph& d, NodeId u, NodeId v) {
  auto uni = unite(d.nbrs[u], d.nbrs[v]);
  return uni.empty() ? 0.0 : static_cast<double>(intersect(d.nbrs[u], d.nbrs[v]).size()) / static_cast<double>(uni.size());
}

inline double cosine(const DenseGraph& d, NodeId u, NodeId v) {
  if (d.degree(u) == 0 || d.degree(v) == 0) return 0.0;
  return static_cast<double>(intersect(d.nbrs[u], d.nbrs[v]).size()) /
         std::sqrt(static_cast<double>(d.degree(u)) * static_cast<double>(d.degree(v)));
}

// 1 - |row_u - row_v|_1 / (k_u + k_v), computed from the adjacency rows.
inline double l1_norm(const DenseGraph& d, NodeId u, NodeId v) {
  const double total = static_cast<double>(d.degree(u) + d.degree(v));
  if (total == 0.0) return 0.0;
  double dist = 0.0;
  for (NodeId z = 0; z < d.n; ++z) dist += std::abs(d.adj[u][z] - d.adj[v][z]);
  return 1.0 - dist / total;
}

inline double adamic_adar(const DenseGraph& d, NodeId u, NodeId v) {
  double s = 0.0;
  for (auto z : intersect(d.nbrs[u], d.nbrs[v])) s += 1.0 / std::log(static_cast<double>(d.degree(z)));
  return s;
}

inline double pmi(const DenseGraph& d, NodeId u, NodeId v) {
  auto i = intersect(d.nbrs[u], d.nbrs[v]).size();
  if (i == 0) return 0.0;
  return std::log(2.0 * static_cast<double>(d.edges()) * static_cast<double>(i) /
                  (static_cast<double>(d.degree(u)) * static_cast<double>(d.degree(v))));
}

inline double network_similarity(const DenseGraph& d, NodeId u, NodeId v) {
  auto cu = d.nbrs[u];
  cu.insert(u);
  auto cv = d.nbrs[v];
  cv.insert(v);
  return static_cast<double>(intersect(cu, cv).size()) / static_cast<double>(unite(cu, cv).size());
}

// Frequencies recounted from the string values of the table.
struct Counts {
  std::map<std::string, std::size_t> freq;
  std::size_t labeled = 0;
};

inline Counts count_values(const AttributeTable& tab, std::size_t attr) {
  Counts c;
  for (NodeId x = 0; x < tab.node_count(); ++x) {
    if (auto v = tab.value(attr, x)) {
      ++c.freq[std::string(*v)];
      ++c.labeled;
    }
  }
  return c;
}

// Names match homolink::to_string(HomophilyMetric).
inline std::optional<double> homophily(const AttributeTable& tab, const std::string& kind, std::size_t attr,
                                       NodeId x, NodeId y) {
  auto vx = tab.value(attr, x);
  auto vy = tab.value(attr, y);
  if (!vx || !vy) return std::nullopt;
  Counts c = count_values(tab, attr);
  const double fx = static_cast<double>(c.freq[std::string(*vx)]);
  const double fy = static_cast<double>(c.freq[std::string(*vy)]);
  const double n = static_cast<double>(c.labeled);
  const double dom = static_cast<double>(c.freq.size());
  const bool eq = *vx == *vy;
  if (kind == "overlap") return eq ? 1.0 : 0.0;
  if (kind == "eskin") return eq ? 1.0 : dom * dom / (dom * dom + 2.0);
  if (kind == "iof") return eq ? 1.0 : 1.0 / (1.0 + std::log(fx) * std::log(fy));
  if (kind == "of") return eq ? 1.0 : 1.0 / (1.0 + std::log(n / fx) * std::log(n / fy));
  if (kind == "goodall") {
    if (!eq) return 0.0;
    if (c.labeled < 2) return 1.0;
    return 1.0 - fx * (fx - 1.0) / (n * (n - 1.0));
  }
  return std::nullopt;
}

// Exact AUC over every (probe edge, non-edge) combination.
template <class Score>
double exact_auc(const std::vector<Edge>& probe, const std::vector<Edge>& non_edges, Score&& score) {
  std::vector<double> sp, sn;
  for (auto e : probe) sp.push_back(score(e.u, e.v));
  for (auto e : non_edges) sn.push_back(score(e.u, e.v));
  double total = 0.0;
  for (double a : sp)
    for (double b : sn) total += a > b ? 1.0 : (a == b ? 0.5 : 0.0);
  return total / (static_cast<double>(sp.size()) * static_cast<double>(sn.size()));
}

}  // namespace oracle
