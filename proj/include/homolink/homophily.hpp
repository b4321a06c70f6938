#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "homolink/attributes.hpp"

namespace homolink {

// Per-attribute categorical similarity S_k(X, Y). N is the number of labeled
// nodes, f(.) the value frequency and n_k the number of observed values.
//
//   kOverlap  match 1, mismatch 0
//   kEskin    match 1, mismatch n_k^2 / (n_k^2 + 2)
//   kIof      match 1, mismatch 1 / (1 + ln f(X) ln f(Y))
//   kOf       match 1, mismatch 1 / (1 + ln(N/f(X)) ln(N/f(Y)))
//   kGoodall  match 1 - f(X)(f(X)-1) / (N(N-1)), mismatch 0   (Goodall3)
enum class HomophilyMetric { kOverlap, kGoodall, kEskin, kIof, kOf };

inline constexpr std::array<HomophilyMetric, 5> kAllHomophilyMetrics = {
    HomophilyMetric::kOverlap, HomophilyMetric::kGoodall, HomophilyMetric::kEskin,
    HomophilyMetric::kIof, HomophilyMetric::kOf};

std::string_view to_string(HomophilyMetric kind);
HomophilyMetric parse_homophily_metric(std::string_view name);

// Frequency context of one comparison.
struct ValueFrequencies {
  std::size_t fx = 0;
  std::size_t fy = 0;
  std::size_t labeled = 0;  // N
  std::size_t domain = 0;   // n_k
};

// The scoring rule itself, independent of any table.
double categorical_similarity(HomophilyMetric kind, bool equal, const ValueFrequencies& freq);

// nullopt when either value is missing.
std::optional<double> homophily_score(const AttributeTable& tab, HomophilyMetric kind,
                                      std::size_t attr, NodeId x, NodeId y);
std::optional<double> homophily_score(const AttributeTable& tab, HomophilyMetric kind,
                                      std::string_view attr, NodeId x, NodeId y);

}  // namespace homolink
