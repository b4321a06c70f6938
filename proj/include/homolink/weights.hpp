#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "homolink/attributes.hpp"
#include "homolink/graph.hpp"
#include "homolink/random.hpp"

namespace homolink {

/**
 * Normalized homophily weight of one attribute, the modularity-style ratio
 *
 *   W / W_max = sum_ij (A_ij - k_i k_j / 2m) d(c_i, c_j)
 *             / (L - sum_ij (k_i k_j / 2m) d(c_i, c_j))
 *
 * over ordered pairs of labeled nodes, diagonal included (A_ii = 0). L is
 * the ordered count of edges between labeled nodes, which equals 2m when the
 * attribute is complete. Degrees and m always come from the whole graph.
 * Positive values mean same-value edges exceed the configuration-model
 * expectation; negative values indicate heterophily.
 */
struct HomophilyWeight {
  double value = 0.0;     // W / W_max, or 0 when degenerate
  double observed = 0.0;  // W
  double maximum = 0.0;   // W_max
  bool degenerate = false;  // W_max <= 0: the attribute cannot discriminate
};

// Throws InputError("unweightable attribute ...") when fewer than two nodes
// are labeled, DegenerateError when the graph has no edges.
HomophilyWeight homophily_weight_terms(const Graph& g, const AttributeTable& tab, std::size_t attr);
double homophily_weight(const Graph& g, const AttributeTable& tab, std::string_view attr);

// Mean local clustering over all nodes (degree < 2 contributes 0 unless
// excluded).
double structural_weight_avg_cc(const Graph& g, bool exclude_low_degree = false);

struct GlobalClustering {
  double value = 0.0;
  std::uint64_t triangles = 0;
  std::uint64_t connected_triples = 0;  // sum_i k_i (k_i - 1) / 2
};

// 3 * triangles / connected triples; value 0 when there are no triples.
GlobalClustering global_clustering_terms(const Graph& g);
double global_clustering(const Graph& g);

/**
 * Degree-preserving randomization by double-edge swaps. Each attempt picks
 * two edges (a,b), (c,d) and rewires to (a,d),(c,b) or (a,c),(b,d); attempts
 * that would create a self-loop or duplicate edge are rejected.
 */
Graph rewire_degree_preserving(const Graph& g, std::size_t attempts, Rng& rng);

struct MotifOptions {
  std::size_t replicas = 20;
  std::size_t swaps_per_edge = 10;
  std::uint64_t seed = 0;
};

struct MotifResult {
  double z = 0.0;
  std::uint64_t observed = 0;
  double null_mean = 0.0;
  double null_stddev = 0.0;
  std::vector<std::uint64_t> null_counts;
};

// Closed-triad z-score against `replicas` degree-preserving randomizations.
// Replica r uses seed + r. Throws DegenerateError("degenerate null model")
// when the null counts have zero spread.
MotifResult motif_z(const Graph& g, const MotifOptions& options = {});

enum class StructuralEstimator { kAverageLocalClustering, kGlobalClustering, kMotifZ };

// avg-cc, global-cc, motif-z
std::string_view to_string(StructuralEstimator e);
StructuralEstimator parse_structural_estimator(std::string_view name);

struct WeightSet {
  std::vector<std::pair<std::string, double>> homophily;
  double structural = 0.0;
  StructuralEstimator estimator = StructuralEstimator::kAverageLocalClustering;
  std::vector<std::string> warnings;

  // Throws InputError when the attribute has no weight.
  double homophily_weight(std::string_view attr) const;
};

struct WeightOptions {
  StructuralEstimator estimator = StructuralEstimator::kAverageLocalClustering;
  bool exclude_low_degree = false;
  MotifOptions motif;
};

WeightSet compute_weights(const Graph& g, const AttributeTable& tab,
                          const std::vector<std::string>& attributes, const WeightOptions& options = {});

// Every attribute and the structural term weighted 1.
WeightSet uniform_weights(const std::vector<std::string>& attributes);

}  // namespace homolink
