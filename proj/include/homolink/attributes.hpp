#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "homolink/graph.hpp"

namespace homolink {

using ValueCode = std::int32_t;
inline constexpr ValueCode kMissing = -1;

/**
 * Categorical node attributes, one column per attribute, indexed by dense
 * node id. Values are interned per attribute; the frequency index f(value)
 * is maintained on every write, so frequencies always reflect the current
 * table state. N_k counts non-missing entries; the domain size n_k counts
 * values with nonzero frequency.
 */
class AttributeTable {
 public:
  AttributeTable() = default;
  AttributeTable(std::size_t node_count, std::vector<std::string> names);

  std::size_t node_count() const { return node_count_; }
  std::size_t attribute_count() const { return columns_.size(); }
  const std::vector<std::string>& names() const { return names_; }

  // Throws InputError("unknown attribute: <name>").
  std::size_t index_of(std::string_view name) const;
  bool has_attribute(std::string_view name) const;

  ValueCode code(std::size_t attr, NodeId node) const { return columns_[attr].codes[node]; }
  bool is_missing(std::size_t attr, NodeId node) const { return code(attr, node) == kMissing; }
  std::optional<std::string_view> value(std::size_t attr, NodeId node) const;

  // Interns `value` if new; returns its code.
  ValueCode intern(std::size_t attr, std::string_view value);
  void set(std::size_t attr, NodeId node, std::string_view value);
  void set_code(std::size_t attr, NodeId node, ValueCode code);
  void clear(std::size_t attr, NodeId node) { set_code(attr, node, kMissing); }

  // Value name of a code previously interned for attr.
  const std::string& value_name(std::size_t attr, ValueCode code) const;
  std::size_t code_count(std::size_t attr) const { return columns_[attr].dictionary.size(); }

  std::size_t frequency(std::size_t attr, ValueCode code) const;
  std::size_t labeled_count(std::size_t attr) const { return columns_[attr].labeled; }
  std::size_t missing_count(std::size_t attr) const { return node_count_ - labeled_count(attr); }
  std::size_t domain_size(std::size_t attr) const;

 private:
  struct Column {
    std::vector<ValueCode> codes;
    std::vector<std::string> dictionary;
    std::unordered_map<std::string, ValueCode> lookup;
    std::vector<std::size_t> frequency;
    std::size_t labeled = 0;
  };

  void check(std::size_t attr, NodeId node) const;

  std::size_t node_count_ = 0;
  std::vector<std::string> names_;
  std::vector<Column> columns_;
};

// 1/0 for equal/different present values; nullopt when either is missing.
std::optional<int> delta(const AttributeTable& tab, std::string_view attr, NodeId i, NodeId j);

struct ImputationPolicy {
  std::size_t min_votes = 1;  // f
  double min_share = 0.5;     // t, in (0, 1]
};

// Throws InputError unless min_votes >= 1 and min_share in (0, 1].
void validate(const ImputationPolicy& policy);

struct ImputationReport {
  std::string attribute;
  ImputationPolicy policy;
  std::size_t missing_before = 0;
  std::size_t predicted = 0;
  std::size_t remaining_missing = 0;
  // Filled only when ground truth was available (tuning holdout).
  std::optional<double> precision;
};

struct ImputationResult {
  AttributeTable table;
  ImputationReport report;
};

/**
 * Majority-vote imputation. In each pass every missing node collects one
 * vote per neighbor holding a value, taken from the table as it stood at the
 * start of the pass. The top value (V of T votes) is assigned iff
 * V >= min_votes and V/T >= min_share; a tie for the top value assigns
 * nothing. Returns a new table; `tab` is left untouched.
 */
ImputationResult impute(const Graph& g, const AttributeTable& tab, std::string_view attr,
                        const ImputationPolicy& policy, std::size_t passes = 1);

struct ImputationScore {
  std::size_t predicted = 0;
  std::size_t correct = 0;
  double precision() const {
    return predicted == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(predicted);
  }
};

// Compares `imputed` against `truth` on `nodes` (nodes still missing in
// `imputed` are not counted as predictions).
ImputationScore score_imputation(const AttributeTable& truth, const AttributeTable& imputed,
                                 std::size_t attr, std::span<const NodeId> nodes);

// Precision(f,t) * ln(C(f,t)); requires correct >= 1.
double tuning_objective(double precision, std::size_t correct);

struct TuningRow {
  ImputationPolicy policy;
  std::size_t predicted = 0;
  std::size_t correct = 0;
  double precision = 0.0;
  std::optional<double> objective;  // empty when correct == 0
};

struct TuningResult {
  ImputationPolicy best;
  TuningRow best_row;
  std::vector<TuningRow> rows;
  std::vector<NodeId> hidden;
};

/**
 * Grid search for (f, t): hides a random holdout_fraction of the labeled
 * nodes, imputes with every grid policy and scores on the hidden set.
 * The winner maximizes Precision * ln(C); ties go to higher precision, then
 * smaller f, then larger t. Throws DegenerateError("no viable policy") when
 * no policy yields a correct prediction.
 */
TuningResult tune_thresholds(const Graph& g, const AttributeTable& tab, std::string_view attr,
                             std::span<const std::size_t> f_grid, std::span<const double> t_grid,
                             double holdout_fraction, std::uint64_t seed, std::size_t passes = 1);

}  // namespace homolink
