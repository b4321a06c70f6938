#include "homolink/attributes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "homolink/errors.hpp"
#include "homolink/random.hpp"

namespace homolink {

AttributeTable::AttributeTable(std::size_t node_count, std::vector<std::string> names)
    : node_count_(node_count), names_(std::move(names)) {
  for (std::size_t a = 0; a < names_.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (names_[a] == names_[b]) throw InputError("duplicate attribute: " + names_[a]);
    }
  }
  columns_.resize(names_.size());
  for (auto& c : columns_) c.codes.assign(node_count_, kMissing);
}

std::size_t AttributeTable::index_of(std::string_view name) const {
  for (std::size_t a = 0; a < names_.size(); ++a) {
    if (names_[a] == name) return a;
  }
  throw InputError("unknown attribute: " + std::string(name));
}

bool AttributeTable::has_attribute(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

void AttributeTable::check(std::size_t attr, NodeId node) const {
  if (attr >= columns_.size()) throw std::out_of_range("attribute index out of range");
  if (node >= node_count_) throw std::out_of_range("node id out of range");
}

std::optional<std::string_view> AttributeTable::value(std::size_t attr, NodeId node) const {
  check(attr, node);
  ValueCode c = code(attr, node);
  if (c == kMissing) return std::nullopt;
  return columns_[attr].dictionary[static_cast<std::size_t>(c)];
}

ValueCode AttributeTable::intern(std::size_t attr, std::string_view value) {
  Column& col = columns_.at(attr);
  std::string key(value);
  if (auto it = col.lookup.find(key); it != col.lookup.end()) return it->second;
  auto c = static_cast<ValueCode>(col.dictionary.size());
  col.dictionary.push_back(key);
  col.lookup.emplace(std::move(key), c);
  col.frequency.push_back(0);
  return c;
}

void AttributeTable::set(std::size_t attr, NodeId node, std::string_view value) {
  check(attr, node);
  set_code(attr, node, intern(attr, value));
}

void AttributeTable::set_code(std::size_t attr, NodeId node, ValueCode c) {
  check(attr, node);
  Column& col = columns_[attr];
  if (c != kMissing && (c < 0 || static_cast<std::size_t>(c) >= col.dictionary.size())) {
    throw std::out_of_range("value code out of range");
  }
  ValueCode old = col.codes[node];
  if (old == c) return;
  if (old != kMissing) {
    --col.frequency[static_cast<std::size_t>(old)];
    --col.labeled;
  }
  if (c != kMissing) {
    ++col.frequency[static_cast<std::size_t>(c)];
    ++col.labeled;
  }
  col.codes[node] = c;
}

const std::string& AttributeTable::value_name(std::size_t attr, ValueCode c) const {
  return columns_.at(attr).dictionary.at(static_cast<std::size_t>(c));
}

std::size_t AttributeTable::frequency(std::size_t attr, ValueCode c) const {
  if (c == kMissing) return 0;
  return columns_.at(attr).frequency.at(static_cast<std::size_t>(c));
}

std::size_t AttributeTable::domain_size(std::size_t attr) const {
  const auto& f = columns_.at(attr).frequency;
  return static_cast<std::size_t>(std::count_if(f.begin(), f.end(), [](std::size_t x) { return x > 0; }));
}

std::optional<int> delta(const AttributeTable& tab, std::string_view attr, NodeId i, NodeId j) {
  const std::size_t a = tab.index_of(attr);
  if (i >= tab.node_count() || j >= tab.node_count()) throw std::out_of_range("node id out of range");
  ValueCode x = tab.code(a, i);
  ValueCode y = tab.code(a, j);
  if (x == kMissing || y == kMissing) return std::nullopt;
  return x == y ? 1 : 0;
}

void validate(const ImputationPolicy& policy) {
  if (policy.min_votes < 1) throw InputError("imputation policy needs f >= 1");
  if (!(policy.min_share > 0.0 && policy.min_share <= 1.0)) {
    throw InputError("imputation policy needs t in (0, 1]");
  }
}

ImputationResult impute(const Graph& g, const AttributeTable& tab, std::string_view attr,
                        const ImputationPolicy& policy, std::size_t passes) {
  validate(policy);
  if (g.node_count() != tab.node_count()) {
    throw InputError("graph and attribute table disagree on node count");
  }
  const std::size_t a = tab.index_of(attr);

  ImputationResult result{tab, {}};
  result.report.attribute = std::string(attr);
  result.report.policy = policy;
  result.report.missing_before = tab.missing_count(a);

  std::vector<std::size_t> votes;
  std::vector<ValueCode> touched;
  std::vector<std::pair<NodeId, ValueCode>> assignments;
  for (std::size_t pass = 0; pass < passes; ++pass) {
    const AttributeTable& before = result.table;
    votes.assign(before.code_count(a), 0);
    assignments.clear();
    for (NodeId x = 0; x < g.node_count(); ++x) {
      if (!before.is_missing(a, x)) continue;
      std::size_t total = 0;
      touched.clear();
      for (NodeId w : g.neighbors(x)) {
        ValueCode c = before.code(a, w);
        if (c == kMissing) continue;
        if (votes[static_cast<std::size_t>(c)]++ == 0) touched.push_back(c);
        ++total;
      }
      ValueCode top = kMissing;
      std::size_t top_votes = 0;
      bool tied = false;
      for (ValueCode c : touched) {
        std::size_t v = votes[static_cast<std::size_t>(c)];
        if (v > top_votes) {
          top = c;
          top_votes = v;
          tied = false;
        } else if (v == top_votes) {
          tied = true;
        }
        votes[static_cast<std::size_t>(c)] = 0;
      }
      if (top == kMissing || tied) continue;
      const double share = static_cast<double>(top_votes) / static_cast<double>(total);
      if (top_votes >= policy.min_votes && share >= policy.min_share) {
        assignments.emplace_back(x, top);
      }
    }
    if (assignments.empty()) break;
    for (auto [x, c] : assignments) result.table.set_code(a, x, c);
    result.report.predicted += assignments.size();
  }
  result.report.remaining_missing = result.table.missing_count(a);
  return result;
}

ImputationScore score_imputation(const AttributeTable& truth, const AttributeTable& imputed,
                                 std::size_t attr, std::span<const NodeId> nodes) {
  ImputationScore s;
  for (NodeId x : nodes) {
    auto guess = imputed.value(attr, x);
    if (!guess) continue;
    ++s.predicted;
    if (truth.value(attr, x) == guess) ++s.correct;
  }
  return s;
}

double tuning_objective(double precision, std::size_t correct) {
  if (correct == 0) throw DegenerateError("tuning objective undefined for zero correct predictions");
  return precision * std::log(static_cast<double>(correct));
}

namespace {

// Strict preference order for grid winners.
bool better(const TuningRow& a, const TuningRow& b) {
  if (*a.objective != *b.objective) return *a.objective > *b.objective;
  if (a.precision != b.precision) return a.precision > b.precision;
  if (a.policy.min_votes != b.policy.min_votes) return a.policy.min_votes < b.policy.min_votes;
  return a.policy.min_share > b.policy.min_share;
}

}  // namespace

TuningResult tune_thresholds(const Graph& g, const AttributeTable& tab, std::string_view attr,
                             std::span<const std::size_t> f_grid, std::span<const double> t_grid,
                             double holdout_fraction, std::uint64_t seed, std::size_t passes) {
  const std::size_t a = tab.index_of(attr);
  if (!(holdout_fraction > 0.0 && holdout_fraction < 1.0)) {
    throw InputError("holdout fraction must be in (0, 1)");
  }
  if (f_grid.empty() || t_grid.empty()) throw InputError("empty tuning grid");

  std::vector<NodeId> labeled;
  for (NodeId x = 0; x < tab.node_count(); ++x) {
    if (!tab.is_missing(a, x)) labeled.push_back(x);
  }
  const auto hide = static_cast<std::size_t>(
      std::llround(holdout_fraction * static_cast<double>(labeled.size())));
  if (hide == 0 || hide >= labeled.size()) {
    throw InputError("not enough labeled nodes to hold out for attribute " + std::string(attr));
  }

  Rng rng(seed);
  shuffle(labeled.begin(), labeled.end(), rng);
  TuningResult result;
  result.hidden.assign(labeled.begin(), labeled.begin() + static_cast<std::ptrdiff_t>(hide));
  std::sort(result.hidden.begin(), result.hidden.end());

  AttributeTable masked = tab;
  for (NodeId x : result.hidden) masked.clear(a, x);

  const TuningRow* best = nullptr;
  for (std::size_t f : f_grid) {
    for (double t : t_grid) {
      ImputationPolicy policy{f, t};
      auto imputed = impute(g, masked, attr, policy, passes);
      auto score = score_imputation(tab, imputed.table, a, result.hidden);
      TuningRow row;
      row.policy = policy;
      row.predicted = score.predicted;
      row.correct = score.correct;
      row.precision = score.precision();
      if (score.correct > 0) row.objective = tuning_objective(row.precision, score.correct);
      result.rows.push_back(row);
    }
  }
  for (const auto& row : result.rows) {
    if (!row.objective) continue;
    if (best == nullptr || better(row, *best)) best = &row;
  }
  if (best == nullptr) throw DegenerateError("no viable policy");
  result.best = best->policy;
  result.best_row = *best;
  return result;
}

}  // namespace homolink
