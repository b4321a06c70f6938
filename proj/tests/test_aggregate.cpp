#include <doctest.h>

#include <algorithm>

#include "homolink/aggregate.hpp"
#include "homolink/errors.hpp"
#include "synthetic.hpp"

using namespace homolink;

namespace {

// Path 0-1-2-3 with an extra edge 1-3: pair (0,2) shares neighbor 1.
struct Fixture {
  Graph g = Graph::from_edges(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {1, 3}, {3, 4}});
  AttributeTable tab{5, {"gender", "marital"}};
  Fixture() {
    const char* gender[] = {"M", "F", "M", "F", "M"};
    const char* marital[] = {"s", "s", "m", "s", "m"};
    for (NodeId x = 0; x < 5; ++x) {
      tab.set(0, x, gender[x]);
      tab.set(1, x, marital[x]);
    }
  }
};

ScorerConfig supplied(std::vector<std::string> attrs, std::vector<double> hw, double ws) {
  ScorerConfig cfg;
  cfg.attributes = attrs;
  cfg.weight_source = WeightSource::kSupplied;
  for (std::size_t i = 0; i < attrs.size(); ++i) cfg.supplied.homophily.emplace_back(attrs[i], hw[i]);
  cfg.supplied.structural = ws;
  return cfg;
}

}  // namespace

TEST_CASE("fuse_terms") {
  std::vector<WeightedTerm> equal{{0.3, 1.0}, {0.5, 0.4}};
  CHECK(fuse_terms(equal) == doctest::Approx(0.625));
  std::vector<WeightedTerm> unequal{{0.3, 0.2}, {0.5, 0.4}};
  CHECK(fuse_terms(unequal) == doctest::Approx(0.325));
  std::vector<WeightedTerm> pure{{0.0, 1.0}, {0.5, 0.4}};
  CHECK(fuse_terms(pure) == 0.4);
  std::vector<WeightedTerm> homo{{0.3, 1.0}, {0.0, 0.4}};
  CHECK(fuse_terms(homo) == 1.0);
  CHECK(fuse_terms(std::vector<WeightedTerm>{{1, 1.0}, {1, 0.4}}) == doctest::Approx(0.7));
  CHECK(fuse_terms(std::vector<WeightedTerm>{{1, 0.2}, {1, 0.4}}) == doctest::Approx(0.3));
  CHECK(fuse_terms(std::vector<WeightedTerm>{{1, 1.0}, {1, 1.0}, {1, 0.4}}) == doctest::Approx(0.8));
  CHECK_THROWS_WITH_AS(fuse_terms(std::vector<WeightedTerm>{{0.5, 1.0}, {-0.5, 0.4}}), "degenerate scorer",
                       DegenerateError);
  CHECK_THROWS_AS(fuse_terms(std::vector<WeightedTerm>{}), DegenerateError);
}

TEST_CASE("score_pair reduces to the two-branch rule") {
  Fixture f;
  const double s = structural_score(f.g, StructuralMetric::kNetworkSimilarity, 0, 2);
  auto cfg = supplied({"gender"}, {0.3}, 0.5);

  // (0,2): gender M/M, equal branch.
  CHECK(score_pair(f.g, f.tab, cfg, 0, 2) == (0.3 + 0.5 * s) / (0.3 + 0.5));
  // (0,3): gender M/F, otherwise branch with OF.
  const double s03 = structural_score(f.g, StructuralMetric::kNetworkSimilarity, 0, 3);
  const double of = *homophily_score(f.tab, HomophilyMetric::kOf, "gender", 0, 3);
  CHECK(score_pair(f.g, f.tab, cfg, 0, 3) == (0.3 * of + 0.5 * s03) / (0.3 + 0.5));
}

TEST_CASE("weight annihilation") {
  Fixture f;
  const double s = structural_score(f.g, StructuralMetric::kNetworkSimilarity, 0, 3);
  CHECK(score_pair(f.g, f.tab, supplied({"gender"}, {0.0}, 0.5), 0, 3) == s);
  CHECK(score_pair(f.g, f.tab, supplied({"gender"}, {0.3}, 0.0), 0, 2) == 1.0);
}

TEST_CASE("uniform scoring is the plain mean") {
  Fixture f;
  auto cfg = supplied({"gender", "marital"}, {0.9, 0.1}, 0.2);
  const double s = structural_score(f.g, StructuralMetric::kNetworkSimilarity, 0, 4);
  // (0,4): gender M/M equal, marital s/m unequal.
  const double of = *homophily_score(f.tab, HomophilyMetric::kOf, "marital", 0, 4);
  CHECK(score_pair_uniform(f.g, f.tab, cfg, 0, 4) == doctest::Approx((1.0 + of + s) / 3.0));
}

TEST_CASE("missing policy") {
  Fixture f;
  f.tab.clear(0, 2);
  auto cfg = supplied({"gender"}, {0.3}, 0.5);
  const double s = structural_score(f.g, StructuralMetric::kNetworkSimilarity, 0, 2);
  CHECK(score_pair(f.g, f.tab, cfg, 0, 2) == s);
  cfg.missing = MissingPolicy::kZero;
  CHECK(score_pair(f.g, f.tab, cfg, 0, 2) == doctest::Approx(0.5 * s / 0.8));

  auto only = supplied({"gender"}, {0.3}, 0.5);
  only.structural.reset();
  CHECK_THROWS_AS(score_pair(f.g, f.tab, only, 0, 2), DegenerateError);
}

TEST_CASE("scorer configuration errors") {
  Fixture f;
  ScorerConfig none;
  none.structural.reset();
  CHECK_THROWS_AS(score_pair(f.g, f.tab, none, 0, 1), InputError);
  CHECK_THROWS_AS(score_pair(f.g, f.tab, supplied({"age"}, {1.0}, 1.0), 0, 1), InputError);
  CHECK_THROWS_AS(score_pair(f.g, f.tab, supplied({"gender"}, {1.0}, 1.0), 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(score_pair(f.g, f.tab, supplied({"gender"}, {-2.0}, 1.0), 0, 2), DegenerateError);
}

TEST_CASE("negative homophily weights are accepted") {
  Fixture f;
  auto cfg = supplied({"gender"}, {-0.039}, 0.072);
  CHECK_NOTHROW(score_pair(f.g, f.tab, cfg, 0, 3));
}

TEST_CASE("computed weights come from the graph") {
  auto planted = synth::block_graph(200, 3, 0.8, 9);
  auto tab = synth::table_from(200, {"b"}, {planted.block});
  ScorerConfig cfg;
  cfg.attributes = {"b"};
  auto ws = resolve_weights(planted.graph, tab, cfg);
  CHECK(ws.homophily_weight("b") == homophily_weight(planted.graph, tab, "b"));
  CHECK(ws.structural == structural_weight_avg_cc(planted.graph));
}

TEST_CASE("scale invariance, symmetry and convexity") {
  auto planted = synth::block_graph(80, 3, 0.8, 4);
  auto other = synth::random_labels(80, 3, 5);
  auto tab = synth::table_from(80, {"b", "r"}, {planted.block, other});
  for (auto hk : kAllHomophilyMetrics) {
    for (auto sk : kAllStructuralMetrics) {
      auto base = supplied({"b", "r"}, {0.4, 0.1}, 0.3);
      base.homophily = hk;
      base.structural = sk;
      PairScorer scorer(planted.graph, tab, base, base.supplied);
      for (double alpha : {0.5, 2.0, 10.0}) {
        WeightSet scaled = base.supplied;
        for (auto& [n, w] : scaled.homophily) w *= alpha;
        scaled.structural *= alpha;
        PairScorer scaled_scorer(planted.graph, tab, base, scaled);
        for (NodeId x = 0; x < 20; ++x)
          for (NodeId y = x + 1; y < 20; ++y) CHECK(scaled_scorer(x, y) == doctest::Approx(scorer(x, y)).epsilon(1e-12));
      }
      for (NodeId x = 0; x < 20; ++x) {
        for (NodeId y = x + 1; y < 20; ++y) {
          const double p = scorer(x, y);
          CHECK(p == scorer(y, x));
          if (sk == StructuralMetric::kPmi || sk == StructuralMetric::kAdamicAdar) continue;
          std::vector<double> terms{structural_score(planted.graph, sk, x, y)};
          for (std::size_t a = 0; a < 2; ++a) {
            auto h = *homophily_score(tab, hk, a, x, y);
            terms.push_back(tab.code(a, x) == tab.code(a, y) ? 1.0 : h);
          }
          CHECK(p >= *std::min_element(terms.begin(), terms.end()) - 1e-12);
          CHECK(p <= *std::max_element(terms.begin(), terms.end()) + 1e-12);
        }
      }
    }
  }
}
