#include "homolink/structural.hpp"

#include <cmath>
#include <stdexcept>

#include "homolink/errors.hpp"

namespace homolink {

std::string_view to_string(StructuralMetric kind) {
  switch (kind) {
    case StructuralMetric::kJaccard: return "jaccard";
    case StructuralMetric::kCosine: return "cosine";
    case StructuralMetric::kL1Norm: return "l1";
    case StructuralMetric::kAdamicAdar: return "adamic-adar";
    case StructuralMetric::kPmi: return "pmi";
    case StructuralMetric::kNetworkSimilarity: return "ns";
  }
  return "?";
}

StructuralMetric parse_structural_metric(std::string_view name) {
  for (auto kind : kAllStructuralMetrics) {
    if (to_string(kind) == name) return kind;
  }
  throw InputError("unknown structural metric: " + std::string(name));
}

namespace {

double adamic_adar(const Graph& g, NodeId u, NodeId v) {
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  double sum = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      // A common neighbor has degree >= 2, so the log is positive.
      sum += 1.0 / std::log(static_cast<double>(g.degree(a[i])));
      ++i;
      ++j;
    }
  }
  return sum;
}

}  // namespace

double structural_score(const Graph& g, StructuralMetric kind, NodeId u, NodeId v) {
  g.check_node(u);
  g.check_node(v);
  if (u == v) throw std::invalid_argument("structural_score requires distinct nodes");

  if (kind == StructuralMetric::kAdamicAdar) return adamic_adar(g, u, v);

  const auto ku = static_cast<double>(g.degree(u));
  const auto kv = static_cast<double>(g.degree(v));
  const auto inter = static_cast<double>(common_neighbor_count(g, u, v));

  switch (kind) {
    case StructuralMetric::kJaccard: {
      const double uni = ku + kv - inter;
      return uni == 0.0 ? 0.0 : inter / uni;
    }
    case StructuralMetric::kCosine:
      return (ku == 0.0 || kv == 0.0) ? 0.0 : inter / std::sqrt(ku * kv);
    case StructuralMetric::kL1Norm:
      return (ku + kv == 0.0) ? 0.0 : 2.0 * inter / (ku + kv);
    case StructuralMetric::kPmi: {
      if (inter == 0.0) return 0.0;
      const double two_m = 2.0 * static_cast<double>(g.edge_count());
      return std::log(two_m * inter / (ku * kv));
    }
    case StructuralMetric::kNetworkSimilarity: {
      // u lies in both closed neighborhoods iff u ~ v, and likewise v.
      const double closed_inter = inter + (g.has_edge(u, v) ? 2.0 : 0.0);
      const double closed_union = (ku + 1.0) + (kv + 1.0) - closed_inter;
      return closed_inter / closed_union;
    }
    case StructuralMetric::kAdamicAdar:
      break;
  }
  return adamic_adar(g, u, v);
}

}  // namespace homolink
