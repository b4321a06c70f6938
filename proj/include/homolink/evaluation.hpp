#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "homolink/aggregate.hpp"
#include "homolink/attributes.hpp"
#include "homolink/graph.hpp"
#include "homolink/random.hpp"

namespace homolink {

enum class HoldoutMode { kRandom, kLatest };

std::string_view to_string(HoldoutMode mode);
HoldoutMode parse_holdout_mode(std::string_view name);

/**
 * Edge holdout. The train graph keeps every node of the original graph and
 * all edges not in the probe set. Non-edges are pairs absent from the
 * original graph, i.e. absent from both train and probe.
 */
struct HoldoutSplit {
  Graph train;
  std::vector<Edge> probe;
  HoldoutMode mode = HoldoutMode::kRandom;

  bool is_probe(NodeId u, NodeId v) const;
  bool is_original_edge(NodeId u, NodeId v) const { return train.has_edge(u, v) || is_probe(u, v); }

  // Draws a uniform node pair u < v that is neither an original edge nor a
  // self-pair, by rejection.
  Edge sample_non_edge(Rng& rng) const;

  // Sorted probe edges, for membership tests.
  std::vector<Edge> sorted_probe;
};

// Number of edges a holdout of `fraction` removes: ceil(fraction * m).
std::size_t holdout_size(std::size_t edge_count, double fraction);

/**
 * Removes ceil(fraction * m) edges: a uniform sample without replacement
 * (kRandom) or the most recent ones by timestamp, later input order winning
 * ties (kLatest). Throws InputError when fraction is outside (0, 1), when
 * fraction * m < 1, or when kLatest is asked of an unstamped graph.
 */
HoldoutSplit holdout(const Graph& g, double fraction, HoldoutMode mode, std::uint64_t seed);

struct TrialOutcome {
  std::uint64_t seed = 0;
  std::size_t samples = 0;  // n
  std::size_t wins = 0;     // n'  (probe scored higher)
  std::size_t ties = 0;     // n''
  double auc = 0.0;         // (n' + 0.5 n'') / n
  WeightSet weights;
};

using PairScoreFn = std::function<double(NodeId, NodeId)>;

// n independent rounds, each comparing one uniformly drawn probe edge with
// one uniformly drawn non-edge (with replacement across rounds).
TrialOutcome auc_trial(const HoldoutSplit& split, const PairScoreFn& score, std::size_t samples,
                       std::uint64_t seed);

// Same, scoring with the fusion scorer; weights are resolved on the train
// graph first.
TrialOutcome auc_trial(const HoldoutSplit& split, const AttributeTable& tab, const ScorerConfig& cfg,
                       std::size_t samples, std::uint64_t seed);

struct EvaluationOptions {
  std::size_t repetitions = 10;
  double fraction = 0.10;
  std::optional<HoldoutMode> mode;     // default: kLatest when timestamps exist
  std::optional<std::size_t> samples;  // default: ceil(0.05 * m)
  std::uint64_t master_seed = 0;
};

struct EvaluationReport {
  std::vector<TrialOutcome> trials;
  double mean_auc = 0.0;
  std::size_t samples = 0;
  double fraction = 0.0;
  HoldoutMode mode = HoldoutMode::kRandom;
  std::size_t probe_count = 0;
  std::uint64_t master_seed = 0;
};

// Per-trial seed for trial i.
std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t trial);

// Runs `repetitions` holdout + trial cycles in parallel; bit-reproducible
// for a fixed master seed regardless of thread count.
EvaluationReport evaluate(const Graph& g, const AttributeTable& tab, const ScorerConfig& cfg,
                          const EvaluationOptions& options);

// Variant with a caller-provided scorer factory; the factory receives the
// train graph of each trial.
using ScorerFactory = std::function<PairScoreFn(const Graph& train)>;
EvaluationReport evaluate_with(const Graph& g, const ScorerFactory& factory, const EvaluationOptions& options);

}  // namespace homolink
