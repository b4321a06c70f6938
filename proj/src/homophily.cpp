#include "homolink/homophily.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "homolink/errors.hpp"

namespace homolink {

std::string_view to_string(HomophilyMetric kind) {
  switch (kind) {
    case HomophilyMetric::kOverlap: return "overlap";
    case HomophilyMetric::kGoodall: return "goodall";
    case HomophilyMetric::kEskin: return "eskin";
    case HomophilyMetric::kIof: return "iof";
    case HomophilyMetric::kOf: return "of";
  }
  return "?";
}

HomophilyMetric parse_homophily_metric(std::string_view name) {
  for (auto kind : kAllHomophilyMetrics) {
    if (to_string(kind) == name) return kind;
  }
  throw InputError("unknown homophily metric: " + std::string(name));
}

double categorical_similarity(HomophilyMetric kind, bool equal, const ValueFrequencies& freq) {
  const auto fx = static_cast<double>(freq.fx);
  const auto fy = static_cast<double>(freq.fy);
  const auto n = static_cast<double>(freq.labeled);
  switch (kind) {
    case HomophilyMetric::kOverlap:
      return equal ? 1.0 : 0.0;
    case HomophilyMetric::kEskin: {
      if (equal) return 1.0;
      const auto d2 = static_cast<double>(freq.domain) * static_cast<double>(freq.domain);
      return d2 / (d2 + 2.0);
    }
    case HomophilyMetric::kIof:
      if (equal) return 1.0;
      return 1.0 / (1.0 + std::log(fx) * std::log(fy));
    case HomophilyMetric::kOf:
      if (equal) return 1.0;
      return 1.0 / (1.0 + std::log(n / fx) * std::log(n / fy));
    case HomophilyMetric::kGoodall: {
      if (!equal) return 0.0;
      if (freq.labeled < 2) return 1.0;
      const double p2 = fx * (fx - 1.0) / (n * (n - 1.0));
      return 1.0 - p2;
    }
  }
  throw std::logic_error("unhandled homophily metric");
}

std::optional<double> homophily_score(const AttributeTable& tab, HomophilyMetric kind,
                                      std::size_t attr, NodeId x, NodeId y) {
  if (x >= tab.node_count() || y >= tab.node_count()) throw std::out_of_range("node id out of range");
  const ValueCode cx = tab.code(attr, x);
  const ValueCode cy = tab.code(attr, y);
  if (cx == kMissing || cy == kMissing) return std::nullopt;
  ValueFrequencies freq{tab.frequency(attr, cx), tab.frequency(attr, cy), tab.labeled_count(attr),
                        tab.domain_size(attr)};
  return categorical_similarity(kind, cx == cy, freq);
}

std::optional<double> homophily_score(const AttributeTable& tab, HomophilyMetric kind,
                                      std::string_view attr, NodeId x, NodeId y) {
  return homophily_score(tab, kind, tab.index_of(attr), x, y);
}

}  // namespace homolink
