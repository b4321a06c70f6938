#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "homolink/aggregate.hpp"
#include "homolink/attributes.hpp"
#include "homolink/errors.hpp"
#include "homolink/evaluation.hpp"
#include "homolink/graph.hpp"
#include "homolink/homophily.hpp"
#include "homolink/io.hpp"
#include "homolink/structural.hpp"
#include "homolink/weights.hpp"

namespace homolink::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Inputs {
  LabeledGraph lg;
  AttributeTable table{0, {}};
  bool has_attributes = false;
};

struct CommonFlags {
  std::string edges;
  std::string attributes;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format = "json";
};

struct ScoringFlags {
  std::string structural = "ns";
  std::string homophily = "of";
  std::vector<std::string> attrs;
  std::string weights = "computed";
  std::string weights_file;
  std::string estimator = "avg-cc";
  std::string missing = "auto";
};

Inputs load_inputs(const CommonFlags& c) {
  auto raw = read_edge_list(std::filesystem::path(c.edges));
  Inputs in{build_graph(raw)};
  if (!c.attributes.empty()) {
    in.table = read_attributes(std::filesystem::path(c.attributes), in.lg).table;
    in.has_attributes = true;
  } else {
    in.table = AttributeTable(in.lg.labels.size(), {});
  }
  return in;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed, std::ostream& err) {
  if (seed) return *seed;
  std::random_device rd;
  const std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) | rd();
  err << "seed: " << s << '\n';
  return s;
}

// Writes to `path` when given, else to `fallback`.
void emit(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write " + path);
  body(file);
  if (!file) throw InputError("write failed: " + path);
}

std::string number(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fixed(double v, int digits = 4) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) out << "  ";
      out << std::setw(static_cast<int>(width[c])) << (c == 0 ? std::left : std::right) << cells[c];
    }
    out << std::right << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

std::vector<std::string> attribute_list(const ScoringFlags& f, const Inputs& in) {
  if (!f.attrs.empty() && !in.has_attributes) throw InputError("--attrs needs --attributes");
  std::vector<std::string> attrs = f.attrs.empty() ? in.table.names() : f.attrs;
  for (const auto& a : attrs) (void)in.table.index_of(a);
  return attrs;
}

WeightSet read_weight_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw InputError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(file);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("structural") || !j["structural"].is_number()) {
    throw InputError(path + ": expected an object with a numeric \"structural\" weight");
  }
  WeightSet ws;
  ws.structural = j["structural"].get<double>();
  if (j.contains("estimator")) ws.estimator = parse_structural_estimator(j["estimator"].get<std::string>());
  for (const auto& [key, value] : j.items()) {
    if (key == "structural" || key == "estimator" || key == "seed" || key == "warnings") continue;
    if (!value.is_number()) throw InputError(path + ": weight for " + key + " is not a number");
    ws.homophily.emplace_back(key, value.get<double>());
  }
  return ws;
}

ScorerConfig scorer_config(const ScoringFlags& f, const Inputs& in, std::uint64_t seed,
                           std::vector<std::string>& warnings) {
  ScorerConfig cfg;
  if (f.structural == "none") {
    cfg.structural.reset();
  } else {
    cfg.structural = parse_structural_metric(f.structural);
  }
  cfg.homophily = parse_homophily_metric(f.homophily);
  cfg.attributes = attribute_list(f, in);
  cfg.weight_options.estimator = parse_structural_estimator(f.estimator);
  cfg.weight_options.motif.seed = seed;
  // Without a structural term a skipped attribute can leave a pair with no
  // terms at all, so "auto" scores missing values 0 there.
  const bool zero = f.missing == "zero" || (f.missing == "auto" && !cfg.structural);
  cfg.missing = zero ? MissingPolicy::kZero : MissingPolicy::kSkipTerm;
  if (f.weights == "uniform") {
    cfg.weight_source = WeightSource::kUniform;
  } else if (f.weights == "file") {
    if (f.weights_file.empty()) throw InputError("--weights file needs --weights-file");
    cfg.weight_source = WeightSource::kSupplied;
    cfg.supplied = read_weight_file(f.weights_file);
    for (const auto& a : cfg.attributes) {
      auto it = std::find_if(cfg.supplied.homophily.begin(), cfg.supplied.homophily.end(),
                             [&](const auto& p) { return p.first == a; });
      if (it == cfg.supplied.homophily.end()) throw InputError("weights file has no weight for " + a);
    }
  } else {
    cfg.weight_source = WeightSource::kComputed;
    if (!cfg.structural) {
      // A lone attribute term cancels its own weight, and a negative one
      // leaves a negative denominator.
      cfg.weight_source = WeightSource::kUniform;
      warnings.push_back("homophily-only scoring uses uniform weights");
    }
  }
  return cfg;
}

Json weights_json(const WeightSet& ws, bool structural = true) {
  Json j = Json::object();
  for (const auto& [name, w] : ws.homophily) j[name] = w;
  if (structural) j["structural"] = ws.structural;
  return j;
}

void add_scoring_flags(CLI::App* sub, ScoringFlags& f) {
  sub->add_option("--structural", f.structural, "structural metric (none drops the term)")
      ->check(CLI::IsMember({"jaccard", "cosine", "l1", "adamic-adar", "pmi", "ns", "none"}));
  sub->add_option("--homophily", f.homophily, "homophily metric")
      ->check(CLI::IsMember({"overlap", "goodall", "eskin", "iof", "of"}));
  sub->add_option("--attrs", f.attrs, "comma-separated attribute subset (default: all)")->delimiter(',');
  sub->add_option("--weights", f.weights, "weight source")
      ->check(CLI::IsMember({"computed", "uniform", "file"}));
  sub->add_option("--weights-file", f.weights_file, "JSON weights as written by `weights`");
  sub->add_option("--estimator", f.estimator, "structural weight estimator")
      ->check(CLI::IsMember({"avg-cc", "global-cc", "motif-z"}));
  sub->add_option("--missing", f.missing, "missing values: skip the term, score it 0, or auto (0 when homophily-only)")
      ->check(CLI::IsMember({"auto", "skip", "zero"}));
}

void add_common(CLI::App* sub, CommonFlags& c, bool attributes_required) {
  sub->add_option("--edges", c.edges, "edge list (label label [timestamp])")->required();
  auto* a = sub->add_option("--attributes", c.attributes, "attribute CSV with header node,<attr>,...");
  if (attributes_required) a->required();
  sub->add_option("--out", c.out, "output path (default: stdout)");
}

// sample ---------------------------------------------------------------------

struct SampleFlags {
  CommonFlags common;
  std::string start;
  std::size_t max_nodes = 0;
  std::string attributes_out;
};

NodeId default_start(const Graph& g) {
  if (!g.has_timestamps() || g.edge_count() == 0) return 0;
  auto ts = g.timestamps();
  auto oldest = std::min_element(ts.begin(), ts.end()) - ts.begin();
  return g.edges()[static_cast<std::size_t>(oldest)].u;
}

int cmd_sample(const SampleFlags& f, std::ostream& out) {
  Inputs in = load_inputs(f.common);
  const NodeId start = f.start.empty() ? default_start(in.lg.graph) : resolve_label(in.lg, f.start);
  auto sub = bfs_sample(in.lg.graph, start, f.max_nodes);
  std::vector<std::string> labels;
  labels.reserve(sub.parent_ids.size());
  for (NodeId p : sub.parent_ids) labels.push_back(in.lg.labels[p]);
  emit(f.common.out, out, [&](std::ostream& o) { write_edge_list(o, sub.graph, labels); });
  if (!f.attributes_out.empty()) {
    if (!in.has_attributes) throw InputError("--attributes-out needs --attributes");
    AttributeTable tab(sub.parent_ids.size(), in.table.names());
    for (std::size_t a = 0; a < tab.attribute_count(); ++a)
      for (NodeId x = 0; x < sub.parent_ids.size(); ++x)
        if (auto v = in.table.value(a, sub.parent_ids[x])) tab.set(a, x, *v);
    emit(f.attributes_out, out, [&](std::ostream& o) { write_attributes(o, tab, labels); });
  }
  return kExitOk;
}

// weights --------------------------------------------------------------------

struct WeightsFlags {
  CommonFlags common;
  ScoringFlags scoring;
  bool exclude_low_degree = false;
  std::size_t replicas = 20;
  std::size_t swaps = 10;
};

int cmd_weights(const WeightsFlags& f, std::ostream& out, std::ostream& err) {
  Inputs in = load_inputs(f.common);
  auto attrs = attribute_list(f.scoring, in);
  for (const auto& a : attrs)
    if (a == "structural" || a == "estimator" || a == "seed" || a == "warnings")
      throw InputError("attribute name collides with a report key: " + a);
  WeightOptions opts;
  opts.estimator = parse_structural_estimator(f.scoring.estimator);
  opts.exclude_low_degree = f.exclude_low_degree;
  const std::uint64_t seed =
      opts.estimator == StructuralEstimator::kMotifZ ? resolve_seed(f.common.seed, err) : f.common.seed.value_or(0);
  opts.motif = MotifOptions{f.replicas, f.swaps, seed};
  auto ws = compute_weights(in.lg.graph, in.table, attrs, opts);

  emit(f.common.out, out, [&](std::ostream& o) {
    if (f.common.format == "table") {
      std::vector<std::vector<std::string>> rows;
      rows.push_back({"structural (" + std::string(to_string(ws.estimator)) + ")", fixed(ws.structural)});
      for (const auto& [name, w] : ws.homophily) rows.push_back({name, fixed(w)});
      print_table(o, {"feature", "weight"}, rows);
      for (const auto& w : ws.warnings) o << "warning: " << w << '\n';
      return;
    }
    Json j = weights_json(ws);
    j["estimator"] = std::string(to_string(ws.estimator));
    j["seed"] = seed;
    j["warnings"] = ws.warnings;
    o << j.dump(2) << '\n';
  });
  return kExitOk;
}

// impute ---------------------------------------------------------------------

struct ImputeFlags {
  CommonFlags common;
  std::string attr;
  std::size_t f = 1;
  double t = 0.5;
  bool tune = false;
  std::vector<std::size_t> f_grid{1, 2, 3, 4, 5};
  std::vector<double> t_grid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  double holdout = 0.3;
  std::size_t passes = 1;
  std::string report;
};

int cmd_impute(const ImputeFlags& f, std::ostream& out, std::ostream& err) {
  Inputs in = load_inputs(f.common);
  const Graph& g = in.lg.graph;
  ImputationPolicy policy{f.f, f.t};
  std::optional<TuningResult> tuning;
  std::optional<std::uint64_t> seed;
  if (f.tune) {
    seed = resolve_seed(f.common.seed, err);
    tuning = tune_thresholds(g, in.table, f.attr, f.f_grid, f.t_grid, f.holdout, *seed, f.passes);
    policy = tuning->best;
  }
  auto result = impute(g, in.table, f.attr, policy, f.passes);
  auto& rep = result.report;
  if (tuning) rep.precision = tuning->best_row.precision;
  const double pct_after =
      100.0 * static_cast<double>(rep.remaining_missing) / static_cast<double>(std::max<std::size_t>(1, g.node_count()));

  emit(f.common.out, out, [&](std::ostream& o) { write_attributes(o, result.table, in.lg.labels); });

  emit(f.report, out, [&](std::ostream& o) {
    if (f.common.format == "table") {
      print_table(o, {"attribute", "f", "t", "predicted", "precision", "missing-before", "%missing-after"},
                  {{rep.attribute, std::to_string(policy.min_votes), fixed(policy.min_share, 2),
                    std::to_string(rep.predicted), rep.precision ? fixed(*rep.precision, 2) : "-",
                    std::to_string(rep.missing_before), fixed(pct_after, 1)}});
      if (tuning) {
        o << '\n';
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : tuning->rows) {
          rows.push_back({std::to_string(r.policy.min_votes), fixed(r.policy.min_share, 2), std::to_string(r.predicted),
                          std::to_string(r.correct), fixed(r.precision), r.objective ? fixed(*r.objective) : "-"});
        }
        print_table(o, {"f", "t", "predicted", "correct", "precision", "objective"}, rows);
      }
      return;
    }
    Json j;
    j["attribute"] = rep.attribute;
    j["f"] = policy.min_votes;
    j["t"] = policy.min_share;
    j["passes"] = f.passes;
    j["predicted"] = rep.predicted;
    j["precision"] = rep.precision ? Json(*rep.precision) : Json(nullptr);
    j["missing_before"] = rep.missing_before;
    j["missing_after"] = rep.remaining_missing;
    j["pct_missing_after"] = pct_after;
    if (tuning) {
      j["seed"] = *seed;
      j["holdout"] = f.holdout;
      j["hidden"] = tuning->hidden.size();
      Json rows = Json::array();
      for (const auto& r : tuning->rows) {
        rows.push_back({{"f", r.policy.min_votes},
                        {"t", r.policy.min_share},
                        {"predicted", r.predicted},
                        {"correct", r.correct},
                        {"precision", r.precision},
                        {"objective", r.objective ? Json(*r.objective) : Json(nullptr)}});
      }
      j["tuning"] = rows;
    }
    o << j.dump(2) << '\n';
  });
  return kExitOk;
}

// score / metrics ------------------------------------------------------------

struct PairFlags {
  CommonFlags common;
  ScoringFlags scoring;
  std::string pairs;
};

std::vector<std::pair<NodeId, NodeId>> load_pairs(const std::string& path, const LabeledGraph& lg) {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (const auto& [a, b] : read_pairs(std::filesystem::path(path))) {
    out.emplace_back(resolve_label(lg, a), resolve_label(lg, b));
  }
  return out;
}

int cmd_score(const PairFlags& f, std::ostream& out, std::ostream& err) {
  Inputs in = load_inputs(f.common);
  auto pairs = load_pairs(f.pairs, in.lg);
  std::vector<std::string> warnings;
  const std::uint64_t seed = f.scoring.estimator == "motif-z" ? resolve_seed(f.common.seed, err) : 0;
  auto cfg = scorer_config(f.scoring, in, seed, warnings);
  PairScorer scorer(in.lg.graph, in.table, cfg, resolve_weights(in.lg.graph, in.table, cfg));
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  for (const auto& w : scorer.weights().warnings) err << "warning: " << w << '\n';
  std::vector<double> scores;
  scores.reserve(pairs.size());
  for (auto [x, y] : pairs) scores.push_back(scorer(x, y));
  emit(f.common.out, out, [&](std::ostream& o) {
    o << "u,v,score\n";
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      o << in.lg.labels[pairs[i].first] << ',' << in.lg.labels[pairs[i].second] << ',' << number(scores[i]) << '\n';
    }
  });
  return kExitOk;
}

int cmd_metrics(const PairFlags& f, std::ostream& out) {
  Inputs in = load_inputs(f.common);
  auto pairs = load_pairs(f.pairs, in.lg);
  auto attrs = attribute_list(f.scoring, in);

  std::vector<std::string> header{"u", "v"};
  for (auto k : kAllStructuralMetrics) header.emplace_back(to_string(k));
  for (const auto& a : attrs)
    for (auto k : kAllHomophilyMetrics) header.push_back(a + ":" + std::string(to_string(k)));

  std::vector<std::vector<std::optional<double>>> values;
  for (auto [x, y] : pairs) {
    auto& row = values.emplace_back();
    for (auto k : kAllStructuralMetrics) row.push_back(structural_score(in.lg.graph, k, x, y));
    for (const auto& a : attrs) {
      const std::size_t idx = in.table.index_of(a);
      for (auto k : kAllHomophilyMetrics) row.push_back(homophily_score(in.table, k, idx, x, y));
    }
  }

  emit(f.common.out, out, [&](std::ostream& o) {
    if (f.common.format == "json") {
      Json rows = Json::array();
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        Json r;
        r["u"] = in.lg.labels[pairs[i].first];
        r["v"] = in.lg.labels[pairs[i].second];
        for (std::size_t c = 0; c < values[i].size(); ++c)
          r[header[c + 2]] = values[i][c] ? Json(*values[i][c]) : Json(nullptr);
        rows.push_back(r);
      }
      o << rows.dump(2) << '\n';
      return;
    }
    const bool table = f.common.format == "table";
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      std::vector<std::string> r{in.lg.labels[pairs[i].first], in.lg.labels[pairs[i].second]};
      for (const auto& v : values[i]) r.push_back(v ? (table ? fixed(*v) : number(*v)) : (table ? "-" : ""));
      rows.push_back(std::move(r));
    }
    if (table) {
      print_table(o, header, rows);
      return;
    }
    rows.insert(rows.begin(), header);
    for (const auto& r : rows) {
      for (std::size_t c = 0; c < r.size(); ++c) o << (c ? "," : "") << r[c];
      o << '\n';
    }
  });
  return kExitOk;
}

// evaluate -------------------------------------------------------------------

struct EvaluateFlags {
  CommonFlags common;
  ScoringFlags scoring;
  std::size_t reps = 10;
  double fraction = 0.10;
  std::string holdout;
  std::optional<std::size_t> samples;
};

int cmd_evaluate(const EvaluateFlags& f, std::ostream& out, std::ostream& err) {
  Inputs in = load_inputs(f.common);
  const std::uint64_t seed = resolve_seed(f.common.seed, err);
  std::vector<std::string> warnings;
  auto cfg = scorer_config(f.scoring, in, seed, warnings);
  EvaluationOptions opts;
  opts.repetitions = f.reps;
  opts.fraction = f.fraction;
  if (!f.holdout.empty()) opts.mode = parse_holdout_mode(f.holdout);
  opts.samples = f.samples;
  opts.master_seed = seed;
  auto report = evaluate(in.lg.graph, in.table, cfg, opts);

  std::set<std::string> seen(warnings.begin(), warnings.end());
  for (const auto& t : report.trials)
    for (const auto& w : t.weights.warnings)
      if (seen.insert(w).second) warnings.push_back(w);

  emit(f.common.out, out, [&](std::ostream& o) {
    if (f.common.format == "table") {
      std::vector<std::vector<std::string>> rows;
      for (std::size_t i = 0; i < report.trials.size(); ++i) {
        const auto& t = report.trials[i];
        rows.push_back({std::to_string(i), std::to_string(t.seed), std::to_string(t.samples), std::to_string(t.wins),
                        std::to_string(t.ties), fixed(t.auc)});
      }
      print_table(o, {"trial", "seed", "n", "n'", "n''", "auc"}, rows);
      o << "mean auc " << fixed(report.mean_auc) << " over " << report.trials.size() << " trials ("
        << to_string(report.mode) << " holdout, fraction " << number(report.fraction) << ", probe "
        << report.probe_count << ", seed " << report.master_seed << ")\n";
      for (const auto& w : warnings) o << "warning: " << w << '\n';
      return;
    }
    Json j;
    j["structural"] = cfg.structural ? std::string(to_string(*cfg.structural)) : std::string("none");
    j["homophily"] = std::string(to_string(cfg.homophily));
    j["attributes"] = cfg.attributes;
    j["weights"] = std::string(to_string(cfg.weight_source));
    j["estimator"] = std::string(to_string(cfg.weight_options.estimator));
    j["master_seed"] = report.master_seed;
    j["repetitions"] = report.trials.size();
    j["fraction"] = report.fraction;
    j["mode"] = std::string(to_string(report.mode));
    j["samples"] = report.samples;
    j["probe_count"] = report.probe_count;
    j["mean_auc"] = report.mean_auc;
    Json trials = Json::array();
    for (const auto& t : report.trials) {
      trials.push_back({{"seed", t.seed},
                        {"samples", t.samples},
                        {"wins", t.wins},
                        {"ties", t.ties},
                        {"auc", t.auc},
                        {"weights", weights_json(t.weights, cfg.structural.has_value())}});
    }
    j["trials"] = trials;
    j["warnings"] = warnings;
    o << j.dump(2) << '\n';
  });
  return kExitOk;
}

void write_error(std::ostream& err, const char* type, const std::string& message) {
  Json j;
  j["error"] = {{"type", type}, {"message", message}};
  err << j.dump() << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Link prediction with structural and homophily similarity", "homolink"};
  app.require_subcommand(1);

  SampleFlags sample;
  auto* s = app.add_subcommand("sample", "BFS sample of a graph, written as an edge list");
  add_common(s, sample.common, false);
  s->add_option("--start", sample.start, "start node label (default: oldest node, else the first)");
  s->add_option("--max-nodes", sample.max_nodes, "node budget")->required()->check(CLI::PositiveNumber);
  s->add_option("--attributes-out", sample.attributes_out, "write the sampled nodes' attributes here");

  WeightsFlags weights;
  auto* w = app.add_subcommand("weights", "data-driven homophily and structural weights");
  add_common(w, weights.common, false);
  w->add_option("--attrs", weights.scoring.attrs, "comma-separated attribute subset (default: all)")->delimiter(',');
  w->add_option("--estimator", weights.scoring.estimator, "structural weight estimator")
      ->check(CLI::IsMember({"avg-cc", "global-cc", "motif-z"}));
  w->add_option("--seed", weights.common.seed, "seed for the motif null model");
  w->add_option("--format", weights.common.format)->check(CLI::IsMember({"json", "table"}));
  w->add_flag("--exclude-low-degree", weights.exclude_low_degree, "drop degree < 2 nodes from avg-cc");
  w->add_option("--replicas", weights.replicas, "motif null-model replicas");
  w->add_option("--swaps", weights.swaps, "motif swaps per edge");

  ImputeFlags imp;
  auto* m = app.add_subcommand("impute", "fill missing attribute values by neighbor majority vote");
  add_common(m, imp.common, true);
  m->get_option("--out")->required()->description("completed attribute CSV");
  m->add_option("--attr", imp.attr, "attribute to complete")->required();
  m->add_option("--f", imp.f, "minimum votes for the winning value");
  m->add_option("--t", imp.t, "minimum vote share for the winning value");
  m->add_flag("--tune", imp.tune, "pick (f, t) by grid search on a hidden subset");
  m->add_option("--f-grid", imp.f_grid)->delimiter(',');
  m->add_option("--t-grid", imp.t_grid)->delimiter(',');
  m->add_option("--holdout", imp.holdout, "fraction of labeled nodes hidden while tuning");
  m->add_option("--passes", imp.passes, "synchronous imputation passes");
  m->add_option("--seed", imp.common.seed, "tuning seed (default: random, printed)");
  m->add_option("--report", imp.report, "report path (default: stdout)");
  m->add_option("--format", imp.common.format)->check(CLI::IsMember({"json", "table"}));

  PairFlags score;
  auto* sc = app.add_subcommand("score", "fused similarity for a pair list, as CSV u,v,score");
  add_common(sc, score.common, false);
  add_scoring_flags(sc, score.scoring);
  sc->add_option("--pairs", score.pairs, "pair list (two labels per line)")->required();
  sc->add_option("--seed", score.common.seed, "seed for the motif null model");

  PairFlags metrics;
  metrics.common.format = "csv";
  auto* mt = app.add_subcommand("metrics", "every structural and homophily score for a pair list");
  add_common(mt, metrics.common, false);
  mt->add_option("--pairs", metrics.pairs, "pair list (two labels per line)")->required();
  mt->add_option("--attrs", metrics.scoring.attrs)->delimiter(',');
  mt->add_option("--format", metrics.common.format)->check(CLI::IsMember({"json", "table", "csv"}));

  EvaluateFlags ev;
  auto* e = app.add_subcommand("evaluate", "repeated edge holdout and sampled AUC");
  add_common(e, ev.common, false);
  add_scoring_flags(e, ev.scoring);
  e->add_option("--reps", ev.reps, "holdout repetitions")->check(CLI::PositiveNumber);
  e->add_option("--fraction", ev.fraction, "fraction of edges held out");
  e->add_option("--holdout", ev.holdout, "holdout mode (default: latest when timestamped)")
      ->check(CLI::IsMember({"random", "latest"}));
  e->add_option("--samples", ev.samples, "comparisons per trial (default: ceil(0.05 m))");
  e->add_option("--seed", ev.common.seed, "master seed (default: random, printed)");
  e->add_option("--format", ev.common.format)->check(CLI::IsMember({"json", "table"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    if (ex.get_exit_code() == 0) return app.exit(ex, out, err);
    write_error(err, "usage", ex.what());
    return kExitInput;
  }

  try {
    if (*s) return cmd_sample(sample, out);
    if (*w) return cmd_weights(weights, out, err);
    if (*m) return cmd_impute(imp, out, err);
    if (*sc) return cmd_score(score, out, err);
    if (*mt) return cmd_metrics(metrics, out);
    if (*e) return cmd_evaluate(ev, out, err);
  } catch (const DegenerateError& ex) {
    write_error(err, "degenerate", ex.what());
    return kExitDegenerate;
  } catch (const InputError& ex) {
    write_error(err, "input", ex.what());
    return kExitInput;
  } catch (const std::invalid_argument& ex) {
    write_error(err, "input", ex.what());
    return kExitInput;
  } catch (const std::out_of_range& ex) {
    write_error(err, "input", ex.what());
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace homolink::cli
