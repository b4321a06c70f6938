#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "homolink/attributes.hpp"
#include "homolink/graph.hpp"
#include "homolink/homophily.hpp"
#include "homolink/structural.hpp"
#include "homolink/weights.hpp"

namespace homolink {

// What to do with an attribute term whose value is missing on either side.
enum class MissingPolicy { kSkipTerm, kZero };

enum class WeightSource { kComputed, kSupplied, kUniform };

std::string_view to_string(WeightSource s);

struct ScorerConfig {
  // nullopt drops the structural term (homophily-only scoring).
  std::optional<StructuralMetric> structural = StructuralMetric::kNetworkSimilarity;
  HomophilyMetric homophily = HomophilyMetric::kOf;
  std::vector<std::string> attributes;
  WeightSource weight_source = WeightSource::kComputed;
  WeightSet supplied;  // used when weight_source == kSupplied
  WeightOptions weight_options;
  MissingPolicy missing = MissingPolicy::kSkipTerm;
};

// Weights the config asks for, computed on `g` when the source is kComputed.
WeightSet resolve_weights(const Graph& g, const AttributeTable& tab, const ScorerConfig& cfg);

struct WeightedTerm {
  double weight = 0.0;
  double value = 0.0;
};

// sum(w * v) / sum(w). Throws DegenerateError("degenerate scorer") when the
// weight sum is not positive.
double fuse_terms(std::span<const WeightedTerm> terms);

/**
 * Weighted fusion of homophily and structural similarity:
 *
 *   P(x, y) = (sum_k w_k h_k + w_s s) / (sum_k w_k + w_s)
 *
 * where h_k is 1 when the values of attribute k agree and S_k(X_k, Y_k)
 * otherwise, and s is the structural score. With one attribute this is the
 * two-branch equal/otherwise rule; with unit weights it is the plain mean of
 * the included terms. Negative homophily weights are accepted.
 *
 * The scorer keeps references to the graph and table; both must outlive it.
 */
class PairScorer {
 public:
  PairScorer(const Graph& g, const AttributeTable& tab, const ScorerConfig& cfg, WeightSet weights);

  double operator()(NodeId x, NodeId y) const;

  const WeightSet& weights() const { return weights_; }

 private:
  struct AttributeTerm {
    std::size_t index = 0;
    double weight = 0.0;
    std::size_t labeled = 0;
    std::size_t domain = 0;
  };

  const Graph* graph_;
  const AttributeTable* table_;
  std::optional<StructuralMetric> structural_;
  HomophilyMetric homophily_;
  MissingPolicy missing_;
  WeightSet weights_;
  std::vector<AttributeTerm> attributes_;
};

// One-shot scoring with the weights resolved from cfg (recomputed on g when
// the source is kComputed; build a PairScorer to score many pairs).
double score_pair(const Graph& g, const AttributeTable& tab, const ScorerConfig& cfg, NodeId x, NodeId y);

// Same rule with every included weight set to 1.
double score_pair_uniform(const Graph& g, const AttributeTable& tab, const ScorerConfig& cfg, NodeId x,
                          NodeId y);

}  // namespace homolink
