#include "homolink/aggregate.hpp"

#include <stdexcept>

#include "homolink/errors.hpp"

namespace homolink {

std::string_view to_string(WeightSource s) {
  switch (s) {
    case WeightSource::kComputed: return "computed";
    case WeightSource::kSupplied: return "file";
    case WeightSource::kUniform: return "uniform";
  }
  return "?";
}

WeightSet resolve_weights(const Graph& g, const AttributeTable& tab, const ScorerConfig& cfg) {
  switch (cfg.weight_source) {
    case WeightSource::kComputed:
      return compute_weights(g, tab, cfg.attributes, cfg.weight_options);
    case WeightSource::kSupplied:
      return cfg.supplied;
    case WeightSource::kUniform:
      return uniform_weights(cfg.attributes);
  }
  throw std::logic_error("unhandled weight source");
}

double fuse_terms(std::span<const WeightedTerm> terms) {
  double num = 0.0;
  double den = 0.0;
  for (const auto& t : terms) {
    num += t.weight * t.value;
    den += t.weight;
  }
  if (!(den > 0.0)) throw DegenerateError("degenerate scorer");
  return num / den;
}

PairScorer::PairScorer(const Graph& g, const AttributeTable& tab, const ScorerConfig& cfg, WeightSet weights)
    : graph_(&g),
      table_(&tab),
      structural_(cfg.structural),
      homophily_(cfg.homophily),
      missing_(cfg.missing),
      weights_(std::move(weights)) {
  if (g.node_count() != tab.node_count()) {
    throw InputError("graph and attribute table disagree on node count");
  }
  if (!structural_ && cfg.attributes.empty()) throw InputError("scorer has no terms");
  for (const auto& name : cfg.attributes) {
    AttributeTerm term;
    term.index = tab.index_of(name);
    term.weight = weights_.homophily_weight(name);
    term.labeled = tab.labeled_count(term.index);
    term.domain = tab.domain_size(term.index);
    attributes_.push_back(term);
  }
}

double PairScorer::operator()(NodeId x, NodeId y) const {
  if (x == y) throw std::invalid_argument("cannot score a node against itself");
  graph_->check_node(x);
  graph_->check_node(y);

  double num = 0.0;
  double den = 0.0;
  for (const auto& a : attributes_) {
    const ValueCode cx = table_->code(a.index, x);
    const ValueCode cy = table_->code(a.index, y);
    double h = 0.0;
    if (cx == kMissing || cy == kMissing) {
      if (missing_ == MissingPolicy::kSkipTerm) continue;
    } else if (cx == cy) {
      h = 1.0;
    } else {
      ValueFrequencies f{table_->frequency(a.index, cx), table_->frequency(a.index, cy), a.labeled, a.domain};
      h = categorical_similarity(homophily_, false, f);
    }
    num += a.weight * h;
    den += a.weight;
  }
  if (structural_) {
    num += weights_.structural * structural_score(*graph_, *structural_, x, y);
    den += weights_.structural;
  }
  if (!(den > 0.0)) throw DegenerateError("degenerate scorer");
  return num / den;
}

double score_pair(const Graph& g, const AttributeTable& tab, const ScorerConfig& cfg, NodeId x, NodeId y) {
  return PairScorer(g, tab, cfg, resolve_weights(g, tab, cfg))(x, y);
}

double score_pair_uniform(const Graph& g, const AttributeTable& tab, const ScorerConfig& cfg, NodeId x,
                          NodeId y) {
  return PairScorer(g, tab, cfg, uniform_weights(cfg.attributes))(x, y);
}

}  // namespace homolink
