#include "homolink/weights.hpp"

#include <cmath>
#include <numeric>
#include <unordered_set>

#include "homolink/errors.hpp"
#include "homolink/parallel.hpp"

namespace homolink {

HomophilyWeight homophily_weight_terms(const Graph& g, const AttributeTable& tab, std::size_t attr) {
  if (g.node_count() != tab.node_count()) {
    throw InputError("graph and attribute table disagree on node count");
  }
  if (tab.labeled_count(attr) < 2) {
    throw InputError("unweightable attribute: " + tab.names().at(attr) + " has fewer than two labeled nodes");
  }
  if (g.edge_count() == 0) throw DegenerateError("homophily weight undefined on a graph without edges");

  const double two_m = 2.0 * static_cast<double>(g.edge_count());

  // Degree mass per value: sum_{i,j same value} k_i k_j = sum_c D_c^2.
  std::vector<double> degree_mass(tab.code_count(attr), 0.0);
  for (NodeId i = 0; i < g.node_count(); ++i) {
    ValueCode c = tab.code(attr, i);
    if (c != kMissing) degree_mass[static_cast<std::size_t>(c)] += static_cast<double>(g.degree(i));
  }
  double expected_same = 0.0;
  for (double d : degree_mass) expected_same += d * d / two_m;

  double same_edges = 0.0;
  double labeled_edges = 0.0;
  for (const Edge& e : g.edges()) {
    ValueCode a = tab.code(attr, e.u);
    ValueCode b = tab.code(attr, e.v);
    if (a == kMissing || b == kMissing) continue;
    labeled_edges += 2.0;
    if (a == b) same_edges += 2.0;
  }

  HomophilyWeight w;
  w.observed = same_edges - expected_same;
  w.maximum = labeled_edges - expected_same;
  // W_max vanishes when one value carries all the labeled degree mass; allow
  // for rounding in D^2 / 2m.
  if (w.maximum <= 1e-12 * std::max(1.0, labeled_edges)) {
    w.degenerate = true;
    w.value = 0.0;
  } else {
    w.value = w.observed / w.maximum;
  }
  return w;
}

double homophily_weight(const Graph& g, const AttributeTable& tab, std::string_view attr) {
  return homophily_weight_terms(g, tab, tab.index_of(attr)).value;
}

double structural_weight_avg_cc(const Graph& g, bool exclude_low_degree) {
  return average_clustering(g, exclude_low_degree);
}

GlobalClustering global_clustering_terms(const Graph& g) {
  GlobalClustering out;
  out.triangles = triangle_count(g);
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const std::uint64_t k = g.degree(i);
    if (k >= 2) out.connected_triples += k * (k - 1) / 2;
  }
  if (out.connected_triples > 0) {
    out.value = 3.0 * static_cast<double>(out.triangles) / static_cast<double>(out.connected_triples);
  }
  return out;
}

double global_clustering(const Graph& g) { return global_clustering_terms(g).value; }

namespace {

std::uint64_t key(NodeId a, NodeId b) {
  Edge e = make_edge(a, b);
  return (static_cast<std::uint64_t>(e.u) << 32) | e.v;
}

}  // namespace

Graph rewire_degree_preserving(const Graph& g, std::size_t attempts, Rng& rng) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  const std::size_t m = edges.size();
  if (m < 2) return Graph::from_edges(g.node_count(), edges);

  std::unordered_set<std::uint64_t> present;
  present.reserve(2 * m);
  for (const Edge& e : edges) present.insert(key(e.u, e.v));

  for (std::size_t t = 0; t < attempts; ++t) {
    const auto i = static_cast<std::size_t>(uniform_below(rng, m));
    const auto j = static_cast<std::size_t>(uniform_below(rng, m));
    if (i == j) continue;
    NodeId a = edges[i].u, b = edges[i].v;
    NodeId c = edges[j].u, d = edges[j].v;
    if (rng() & 1) std::swap(c, d);
    // (a,b),(c,d) -> (a,d),(c,b)
    if (a == d || c == b) continue;
    if (present.count(key(a, d)) || present.count(key(c, b))) continue;
    present.erase(key(a, b));
    present.erase(key(c, d));
    present.insert(key(a, d));
    present.insert(key(c, b));
    edges[i] = make_edge(a, d);
    edges[j] = make_edge(c, b);
  }
  return Graph::from_edges(g.node_count(), edges);
}

MotifResult motif_z(const Graph& g, const MotifOptions& options) {
  if (options.replicas < 2) throw InputError("motif z-score needs at least two replicas");
  MotifResult out;
  out.observed = triangle_count(g);
  out.null_counts.assign(options.replicas, 0);
  const std::size_t attempts = options.swaps_per_edge * g.edge_count();
  parallel_for(options.replicas, [&](std::size_t r) {
    Rng rng(options.seed + r);
    out.null_counts[r] = triangle_count(rewire_degree_preserving(g, attempts, rng));
  });

  const auto reps = static_cast<double>(options.replicas);
  double sum = 0.0;
  for (auto c : out.null_counts) sum += static_cast<double>(c);
  out.null_mean = sum / reps;
  double ss = 0.0;
  for (auto c : out.null_counts) {
    const double d = static_cast<double>(c) - out.null_mean;
    ss += d * d;
  }
  out.null_stddev = std::sqrt(ss / (reps - 1.0));
  if (out.null_stddev == 0.0) throw DegenerateError("degenerate null model");
  out.z = (static_cast<double>(out.observed) - out.null_mean) / out.null_stddev;
  return out;
}

std::string_view to_string(StructuralEstimator e) {
  switch (e) {
    case StructuralEstimator::kAverageLocalClustering: return "avg-cc";
    case StructuralEstimator::kGlobalClustering: return "global-cc";
    case StructuralEstimator::kMotifZ: return "motif-z";
  }
  return "?";
}

StructuralEstimator parse_structural_estimator(std::string_view name) {
  for (auto e : {StructuralEstimator::kAverageLocalClustering, StructuralEstimator::kGlobalClustering,
                 StructuralEstimator::kMotifZ}) {
    if (to_string(e) == name) return e;
  }
  throw InputError("unknown structural estimator: " + std::string(name));
}

double WeightSet::homophily_weight(std::string_view attr) const {
  for (const auto& [name, w] : homophily) {
    if (name == attr) return w;
  }
  throw InputError("no weight for attribute: " + std::string(attr));
}

WeightSet compute_weights(const Graph& g, const AttributeTable& tab,
                          const std::vector<std::string>& attributes, const WeightOptions& options) {
  WeightSet ws;
  ws.estimator = options.estimator;
  for (const auto& name : attributes) {
    auto terms = homophily_weight_terms(g, tab, tab.index_of(name));
    if (terms.degenerate) {
      ws.warnings.push_back("attribute " + name + " does not discriminate (W_max = 0); weight set to 0");
    }
    ws.homophily.emplace_back(name, terms.value);
  }
  switch (options.estimator) {
    case StructuralEstimator::kAverageLocalClustering:
      ws.structural = structural_weight_avg_cc(g, options.exclude_low_degree);
      break;
    case StructuralEstimator::kGlobalClustering: {
      auto gc = global_clustering_terms(g);
      if (gc.connected_triples == 0) ws.warnings.push_back("graph has no connected triples; global clustering is 0");
      ws.structural = gc.value;
      break;
    }
    case StructuralEstimator::kMotifZ:
      ws.structural = motif_z(g, options.motif).z;
      break;
  }
  return ws;
}

WeightSet uniform_weights(const std::vector<std::string>& attributes) {
  WeightSet ws;
  for (const auto& name : attributes) ws.homophily.emplace_back(name, 1.0);
  ws.structural = 1.0;
  return ws;
}

}  // namespace homolink
