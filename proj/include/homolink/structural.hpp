#pragma once

#include <array>
#include <string>
#include <string_view>

#include "homolink/graph.hpp"

namespace homolink {

// Neighborhood-based pair similarity.
//
// With I = |Γ(u) ∩ Γ(v)| and U = |Γ(u) ∪ Γ(v)|:
//   kJaccard            I / U
//   kCosine             I / sqrt(k_u k_v)
//   kL1Norm             2I / (k_u + k_v), i.e. 1 - |row_u - row_v|_1 / (k_u + k_v)
//   kAdamicAdar         sum over common z of 1 / ln k_z
//   kPmi                ln(2m I / (k_u k_v)), 0 when I = 0
//   kNetworkSimilarity  Jaccard over closed neighborhoods Γ(x) ∪ {x}
// Every ratio is 0 when its denominator is 0.
enum class StructuralMetric { kJaccard, kCosine, kL1Norm, kAdamicAdar, kPmi, kNetworkSimilarity };

inline constexpr std::array<StructuralMetric, 6> kAllStructuralMetrics = {
    StructuralMetric::kJaccard,    StructuralMetric::kCosine, StructuralMetric::kL1Norm,
    StructuralMetric::kAdamicAdar, StructuralMetric::kPmi,    StructuralMetric::kNetworkSimilarity};

// CLI spelling: jaccard, cosine, l1, adamic-adar, pmi, ns.
std::string_view to_string(StructuralMetric kind);
// Throws InputError for unknown names.
StructuralMetric parse_structural_metric(std::string_view name);

// Requires u != v; throws std::out_of_range for invalid ids.
double structural_score(const Graph& g, StructuralMetric kind, NodeId u, NodeId v);

}  // namespace homolink
