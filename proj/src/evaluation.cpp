#include "homolink/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "homolink/errors.hpp"
#include "homolink/parallel.hpp"

namespace homolink {

std::string_view to_string(HoldoutMode mode) {
  return mode == HoldoutMode::kRandom ? "random" : "latest";
}

HoldoutMode parse_holdout_mode(std::string_view name) {
  if (name == "random") return HoldoutMode::kRandom;
  if (name == "latest") return HoldoutMode::kLatest;
  throw InputError("unknown holdout mode: " + std::string(name));
}

bool HoldoutSplit::is_probe(NodeId u, NodeId v) const {
  return std::binary_search(sorted_probe.begin(), sorted_probe.end(), make_edge(u, v));
}

Edge HoldoutSplit::sample_non_edge(Rng& rng) const {
  const std::uint64_t n = train.node_count();
  for (;;) {
    auto u = static_cast<NodeId>(uniform_below(rng, n));
    auto v = static_cast<NodeId>(uniform_below(rng, n));
    if (u == v || is_original_edge(u, v)) continue;
    return make_edge(u, v);
  }
}

std::size_t holdout_size(std::size_t edge_count, double fraction) {
  const double raw = fraction * static_cast<double>(edge_count);
  // Guard against 0.1 * 30 = 3.0000000000000004 rounding up to 4.
  return static_cast<std::size_t>(std::ceil(raw - 1e-9 * std::max(1.0, raw)));
}

HoldoutSplit holdout(const Graph& g, double fraction, HoldoutMode mode, std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction < 1.0)) throw InputError("holdout fraction must be in (0, 1)");
  const std::size_t m = g.edge_count();
  if (fraction * static_cast<double>(m) < 1.0) throw InputError("holdout removes no edges (fraction * m < 1)");
  const std::size_t remove = holdout_size(m, fraction);

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (mode == HoldoutMode::kLatest) {
    if (!g.has_timestamps()) throw InputError("latest-edge holdout needs timestamps on every edge");
    auto ts = g.timestamps();
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ts[a] < ts[b]; });
    std::rotate(order.begin(), order.end() - static_cast<std::ptrdiff_t>(remove), order.end());
  } else {
    Rng rng(seed);
    // Partial Fisher-Yates: the first `remove` slots become the sample.
    for (std::size_t i = 0; i < remove; ++i) {
      auto j = i + static_cast<std::size_t>(uniform_below(rng, m - i));
      std::swap(order[i], order[j]);
    }
  }

  std::vector<char> removed(m, 0);
  for (std::size_t i = 0; i < remove; ++i) removed[order[i]] = 1;

  HoldoutSplit split;
  split.mode = mode;
  std::vector<Edge> kept;
  std::vector<Timestamp> kept_ts;
  kept.reserve(m - remove);
  auto edges = g.edges();
  for (std::size_t i = 0; i < m; ++i) {
    if (removed[i]) {
      split.probe.push_back(edges[i]);
    } else {
      kept.push_back(edges[i]);
      if (g.has_timestamps()) kept_ts.push_back(g.timestamps()[i]);
    }
  }
  split.train = Graph::from_edges(g.node_count(), kept, kept_ts);
  split.sorted_probe = split.probe;
  std::sort(split.sorted_probe.begin(), split.sorted_probe.end());
  return split;
}

TrialOutcome auc_trial(const HoldoutSplit& split, const PairScoreFn& score, std::size_t samples,
                       std::uint64_t seed) {
  if (samples < 1) throw InputError("AUC needs at least one sample");
  if (split.probe.empty()) throw InputError("probe set is empty");
  const std::uint64_t n = split.train.node_count();
  const std::uint64_t pairs = n * (n - 1) / 2;
  if (pairs <= split.train.edge_count() + split.probe.size()) throw InputError("graph has no non-edges");

  Rng rng(seed);
  TrialOutcome out;
  out.seed = seed;
  out.samples = samples;
  for (std::size_t r = 0; r < samples; ++r) {
    const Edge& p = split.probe[static_cast<std::size_t>(uniform_below(rng, split.probe.size()))];
    const Edge q = split.sample_non_edge(rng);
    const double sp = score(p.u, p.v);
    const double sq = score(q.u, q.v);
    if (sp > sq) {
      ++out.wins;
    } else if (sp == sq) {
      ++out.ties;
    }
  }
  out.auc = (static_cast<double>(out.wins) + 0.5 * static_cast<double>(out.ties)) / static_cast<double>(samples);
  return out;
}

TrialOutcome auc_trial(const HoldoutSplit& split, const AttributeTable& tab, const ScorerConfig& cfg,
                       std::size_t samples, std::uint64_t seed) {
  PairScorer scorer(split.train, tab, cfg, resolve_weights(split.train, tab, cfg));
  auto out = auc_trial(split, [&](NodeId x, NodeId y) { return scorer(x, y); }, samples, seed);
  out.weights = scorer.weights();
  return out;
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t trial) { return derive_seed(master_seed, trial); }

namespace {

template <class RunTrial>
EvaluationReport run_trials(const Graph& g, const EvaluationOptions& options, RunTrial&& run) {
  if (options.repetitions < 1) throw InputError("evaluation needs at least one repetition");
  EvaluationReport report;
  report.master_seed = options.master_seed;
  report.fraction = options.fraction;
  report.mode = options.mode.value_or(g.has_timestamps() ? HoldoutMode::kLatest : HoldoutMode::kRandom);
  report.samples = options.samples.value_or(holdout_size(g.edge_count(), 0.05));
  if (report.samples < 1) report.samples = 1;
  report.trials.resize(options.repetitions);

  parallel_for(options.repetitions, [&](std::size_t i) {
    const std::uint64_t seed = trial_seed(options.master_seed, i);
    HoldoutSplit split = holdout(g, options.fraction, report.mode, derive_seed(seed, 0));
    TrialOutcome t = run(split, report.samples, derive_seed(seed, 1));
    t.seed = seed;
    report.trials[i] = std::move(t);
  });

  report.probe_count = holdout_size(g.edge_count(), options.fraction);
  double total = 0.0;
  for (const auto& t : report.trials) total += t.auc;
  report.mean_auc = total / static_cast<double>(report.trials.size());
  return report;
}

}  // namespace

EvaluationReport evaluate(const Graph& g, const AttributeTable& tab, const ScorerConfig& cfg,
                          const EvaluationOptions& options) {
  return run_trials(g, options, [&](const HoldoutSplit& split, std::size_t samples, std::uint64_t seed) {
    return auc_trial(split, tab, cfg, samples, seed);
  });
}

EvaluationReport evaluate_with(const Graph& g, const ScorerFactory& factory, const EvaluationOptions& options) {
  return run_trials(g, options, [&](const HoldoutSplit& split, std::size_t samples, std::uint64_t seed) {
    return auc_trial(split, factory(split.train), samples, seed);
  });
}

}  // namespace homolink
