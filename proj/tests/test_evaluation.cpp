#include <doctest.h>

#include <cmath>
#include <set>

#include "homolink/errors.hpp"
#include "homolink/evaluation.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"

using namespace homolink;

namespace {

Graph path_graph(std::size_t m, bool stamped) {
  std::vector<Edge> e;
  std::vector<Timestamp> ts;
  for (NodeId i = 0; i < m; ++i) {
    e.push_back({i, i + 1});
    ts.push_back(static_cast<Timestamp>(i + 1));
  }
  return stamped ? Graph::from_edges(m + 1, e, ts) : Graph::from_edges(m + 1, e);
}

std::vector<Edge> non_edges_of(const HoldoutSplit& split) {
  std::vector<Edge> out;
  const NodeId n = static_cast<NodeId>(split.train.node_count());
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (!split.is_original_edge(u, v)) out.push_back({u, v});
  return out;
}

}  // namespace

TEST_CASE("holdout sizes and partitions") {
  auto g = path_graph(10, false);
  auto split = holdout(g, 0.1, HoldoutMode::kRandom, 3);
  CHECK(split.probe.size() == 1);
  CHECK(split.train.edge_count() == 9);
  CHECK(split.train.node_count() == g.node_count());
  std::set<Edge> all(split.probe.begin(), split.probe.end());
  for (const Edge& e : split.train.edges()) CHECK(all.insert(e).second);
  CHECK(all == std::set<Edge>(g.edges().begin(), g.edges().end()));
  CHECK(holdout_size(30, 0.1) == 3);
  CHECK(holdout_size(31, 0.1) == 4);
}

TEST_CASE("latest holdout removes the newest edges") {
  auto g = path_graph(10, true);
  auto split = holdout(g, 0.2, HoldoutMode::kLatest, 0);
  REQUIRE(split.probe.size() == 2);
  std::set<Edge> probe(split.probe.begin(), split.probe.end());
  CHECK(probe == std::set<Edge>{{8, 9}, {9, 10}});
  CHECK_THROWS_AS(holdout(path_graph(10, false), 0.2, HoldoutMode::kLatest, 0), InputError);
}

TEST_CASE("latest holdout breaks timestamp ties by input order") {
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
  std::vector<Timestamp> ts{1, 5, 5, 2};
  auto split = holdout(Graph::from_edges(5, e, ts), 0.25, HoldoutMode::kLatest, 0);
  REQUIRE(split.probe.size() == 1);
  CHECK(split.probe[0] == Edge{2, 3});
}

TEST_CASE("holdout errors and determinism") {
  auto g = path_graph(10, false);
  CHECK_THROWS_AS(holdout(g, 0.05, HoldoutMode::kRandom, 1), InputError);
  CHECK_THROWS_AS(holdout(g, 0.0, HoldoutMode::kRandom, 1), InputError);
  CHECK_THROWS_AS(holdout(g, 1.0, HoldoutMode::kRandom, 1), InputError);
  auto a = holdout(g, 0.3, HoldoutMode::kRandom, 9);
  auto b = holdout(g, 0.3, HoldoutMode::kRandom, 9);
  CHECK(a.probe == b.probe);
  CHECK(std::vector<Edge>(a.train.edges().begin(), a.train.edges().end()) ==
        std::vector<Edge>(b.train.edges().begin(), b.train.edges().end()));
}

TEST_CASE("non-edge sampler never returns original edges") {
  std::mt19937_64 gen(8);
  auto g = oracle::random_graph(25, 0.4, gen);
  auto split = holdout(g, 0.2, HoldoutMode::kRandom, 2);
  Rng rng(4);
  for (int i = 0; i < 200000; ++i) {
    Edge e = split.sample_non_edge(rng);
    REQUIRE(e.u < e.v);
    REQUIRE_FALSE(g.has_edge(e.u, e.v));
  }
}

TEST_CASE("AUC protocol edge cases") {
  std::mt19937_64 gen(12);
  auto g = oracle::random_graph(30, 0.2, gen);
  auto split = holdout(g, 0.1, HoldoutMode::kRandom, 5);

  auto perfect = auc_trial(split, [&](NodeId u, NodeId v) { return split.is_probe(u, v) ? 1.0 : 0.0; }, 1000, 1);
  CHECK(perfect.auc == 1.0);
  CHECK(perfect.wins == 1000);

  auto constant = auc_trial(split, [](NodeId, NodeId) { return 0.25; }, 1000, 1);
  CHECK(constant.ties == 1000);
  CHECK(constant.auc == 0.5);

  CHECK_THROWS_AS(auc_trial(split, [](NodeId, NodeId) { return 0.0; }, 0, 1), InputError);

  // Complete graph: no non-edges at all.
  std::vector<Edge> k;
  for (NodeId i = 0; i < 6; ++i)
    for (NodeId j = i + 1; j < 6; ++j) k.push_back({i, j});
  auto full = holdout(Graph::from_edges(6, k), 0.2, HoldoutMode::kRandom, 1);
  CHECK_THROWS_AS(auc_trial(full, [](NodeId, NodeId) { return 0.0; }, 10, 1), InputError);
}

TEST_CASE("negating scores mirrors the AUC") {
  std::mt19937_64 gen(13);
  auto g = oracle::random_graph(40, 0.15, gen);
  auto split = holdout(g, 0.1, HoldoutMode::kRandom, 6);
  // Continuous, tie-free scores.
  auto score = [](NodeId u, NodeId v) { return std::sin(1.0 + 31.0 * u + 17.0 * v * v); };
  auto up = auc_trial(split, score, 5000, 3);
  auto down = auc_trial(split, [&](NodeId u, NodeId v) { return -score(u, v); }, 5000, 3);
  REQUIRE(up.ties == 0);
  CHECK(down.auc == doctest::Approx(1.0 - up.auc).epsilon(1e-15));
}

TEST_CASE("sampled AUC converges to the enumerated AUC") {
  auto planted = synth::block_graph(12, 2, 0.8, 21);
  auto tab = synth::table_from(12, {"b"}, {planted.block});
  ScorerConfig cfg;
  cfg.attributes = {"b"};
  auto split = holdout(planted.graph, 0.25, HoldoutMode::kRandom, 8);
  PairScorer scorer(split.train, tab, cfg, resolve_weights(split.train, tab, cfg));
  const double exact = oracle::exact_auc(split.probe, non_edges_of(split), scorer);
  const std::size_t n = 40000;
  auto sampled = auc_trial(split, tab, cfg, n, 77);
  CHECK(std::abs(sampled.auc - exact) <= 3.0 * std::sqrt(0.25 / static_cast<double>(n)));
}

TEST_CASE("evaluate is deterministic and reports the protocol") {
  auto planted = synth::block_graph(300, 4, 0.8, 33);
  auto tab = synth::table_from(300, {"b"}, {planted.block});
  ScorerConfig cfg;
  cfg.attributes = {"b"};
  EvaluationOptions opts;
  opts.master_seed = 2024;
  auto a = evaluate(planted.graph, tab, cfg, opts);
  auto b = evaluate(planted.graph, tab, cfg, opts);
  REQUIRE(a.trials.size() == 10);
  CHECK(a.samples == holdout_size(planted.graph.edge_count(), 0.05));
  CHECK(a.mode == HoldoutMode::kRandom);
  double total = 0.0;
  for (std::size_t i = 0; i < a.trials.size(); ++i) {
    const auto& t = a.trials[i];
    CHECK(t.auc == b.trials[i].auc);
    CHECK(t.seed == b.trials[i].seed);
    CHECK(t.wins + t.ties <= t.samples);
    CHECK(t.auc == (static_cast<double>(t.wins) + 0.5 * static_cast<double>(t.ties)) / static_cast<double>(t.samples));
    total += t.auc;
  }
  CHECK(a.mean_auc == b.mean_auc);
  CHECK(a.mean_auc == total / 10.0);
  CHECK(a.mean_auc > 0.5);
}

TEST_CASE("evaluate picks latest holdout for stamped graphs") {
  auto g = path_graph(60, true);
  auto r = evaluate_with(g, [](const Graph&) { return PairScoreFn([](NodeId, NodeId) { return 0.0; }); },
                         EvaluationOptions{3, 0.1, std::nullopt, 10, 1});
  CHECK(r.mode == HoldoutMode::kLatest);
  for (const auto& t : r.trials) CHECK(t.auc == 0.5);
}
