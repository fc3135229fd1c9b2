/*
 * Copyright 2026 The uarank Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "uarank/cli.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_cat.h"
#include "json.hpp"
#include "uarank/fairness_audit.h"
#include "uarank/io.h"
#include "uarank/metrics.h"
#include "uarank/population.h"
#include "uarank/rank_core.h"
#include "uarank/ranking_function.h"

namespace uarank {
namespace {

using json = nlohmann::json;

// Raw flag storage shared by every subcommand. Options are copied into the
// RunConfig only when they were actually given.
struct Flags {
  std::string in, in2, model, out, fn, group, values, weights, bucket;
  std::string format = "table";
  double phi = 0.0, delta = 0.0;
  uint64_t seed = 0;
  int64_t samples = 0;
  int n = 0, k = 0, threads = 1;
  bool exact = false;
};

struct Report {
  json result;
  std::string table;
};

bool IsSamplingPath(const RunConfig& c) {
  if (c.command == "audit") {
    return (c.audit_kind == "theorem" && !c.exact) ||
           c.audit_kind == "closeness";
  }
  if (c.command == "rank" || c.command == "stability" ||
      c.command == "utility") {
    return c.fn.has_value() && *c.fn == "pl";
  }
  return false;
}

absl::Status Invalid(const std::string& msg) {
  return absl::InvalidArgumentError(msg);
}

json ConfigJson(const RunConfig& c) {
  json j;
  j["command"] = c.command;
  j["auditKind"] = c.audit_kind.empty() ? json() : json(c.audit_kind);
  j["in"] = c.in.empty() ? json() : json(c.in);
  j["in2"] = c.in2.empty() ? json() : json(c.in2);
  j["model"] = c.model.empty() ? json() : json(c.model);
  j["fn"] = c.fn ? json(*c.fn) : json();
  j["phi"] = c.phi ? json(*c.phi) : json();
  j["seed"] = c.seed ? json(*c.seed) : json();
  j["samples"] = c.samples ? json(*c.samples) : json();
  j["delta"] = c.delta ? json(*c.delta) : json();
  j["bucket"] = c.bucket ? json(*c.bucket) : json();
  j["n"] = c.n ? json(*c.n) : json();
  j["k"] = c.k ? json(*c.k) : json();
  j["group"] = c.group ? json(*c.group) : json();
  j["exact"] = c.exact;
  j["values"] = c.values ? json(*c.values) : json();
  j["weights"] = c.weights ? json(*c.weights) : json();
  j["threads"] = c.threads;
  return j;
}

json MatrixJson(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    rows.push_back(std::vector<double>(m.row(r).begin(), m.row(r).end()));
  }
  return rows;
}

std::string MatrixTable(const Matrix& m, const char* row_label) {
  std::string out = absl::StrFormat("%-6s", row_label);
  for (int c = 0; c < m.cols(); ++c) {
    absl::StrAppendFormat(&out, " %10s", absl::StrFormat("k=%d", c + 1));
  }
  out += "\n";
  for (int r = 0; r < m.rows(); ++r) {
    absl::StrAppendFormat(&out, "%-6d", r + 1);
    for (int c = 0; c < m.cols(); ++c) {
      absl::StrAppendFormat(&out, " %10.6f", m(r, c));
    }
    out += "\n";
  }
  return out;
}

std::string KeyValueTable(
    const std::vector<std::pair<std::string, std::string>>& rows) {
  size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::string out;
  for (const auto& [k, v] : rows) {
    absl::StrAppendFormat(&out, "%-*s  %s\n", static_cast<int>(width), k, v);
  }
  return out;
}

std::string Num(double v) { return absl::StrFormat("%.17g", v); }

absl::StatusOr<ClassUtilityMap> TauFor(const RunConfig& c, int num_labels) {
  if (!c.values.has_value()) return ClassUtilityMap::Linear(num_labels);
  absl::StatusOr<std::vector<double>> v = ParseNumberList(*c.values);
  if (!v.ok()) {
    return Invalid(absl::StrFormat("--values: %s", v.status().message()));
  }
  if (static_cast<int>(v->size()) != num_labels) {
    return Invalid(absl::StrFormat("--values has %d entries, expected L = %d",
                                   v->size(), num_labels));
  }
  return ClassUtilityMap::Create(*std::move(v));
}

absl::StatusOr<RankingFunctionParams> FnParams(const RunConfig& c,
                                               int num_labels) {
  RankingFunctionParams params;
  absl::StatusOr<RankingFunctionId> id = ParseRankingFunctionId(*c.fn);
  if (!id.ok()) return id.status();
  params.id = *id;
  absl::StatusOr<ClassUtilityMap> tau = TauFor(c, num_labels);
  if (!tau.ok()) return tau.status();
  params.tau = *std::move(tau);
  if (c.phi) params.phi = *c.phi;
  if (c.samples) params.samples = *c.samples;
  if (c.seed) params.seed = *c.seed;
  params.num_threads = c.threads;
  if (auto s = ValidateRankingFunctionParams(params, num_labels); !s.ok()) {
    return s;
  }
  return params;
}

absl::StatusOr<Report> RunRank(const RunConfig& c) {
  absl::StatusOr<PredictionMatrix> p = LoadPredictionMatrix(c.in);
  if (!p.ok()) return p.status();
  absl::StatusOr<RankingFunctionParams> fn = FnParams(c, p->num_labels());
  if (!fn.ok()) return fn.status();
  absl::StatusOr<RankingDistribution> m = ApplyRankingFunction(*fn, *p);
  if (!m.ok()) return m.status();
  Report r;
  r.result["predictions"] = MatrixJson(p->matrix());
  r.result["ranking"] = MatrixJson(m->matrix());
  r.table = MatrixTable(m->matrix(), "i");
  return r;
}

absl::StatusOr<Report> RunOracle(const RunConfig& c) {
  absl::StatusOr<PredictionMatrix> p = LoadPredictionMatrix(c.in);
  if (!p.ok()) return p.status();
  absl::StatusOr<RankingDistribution> m;
  if (*c.fn == "ua") {
    m = UaRankOracle(*p);
  } else {
    absl::StatusOr<ClassUtilityMap> tau = TauFor(c, p->num_labels());
    if (!tau.ok()) return tau.status();
    m = PlRankExact(*p, *tau);
  }
  if (!m.ok()) return m.status();
  Report r;
  r.result["predictions"] = MatrixJson(p->matrix());
  r.result["ranking"] = MatrixJson(m->matrix());
  r.table = MatrixTable(m->matrix(), "i");
  return r;
}

absl::StatusOr<Report> RunStability(const RunConfig& c) {
  absl::StatusOr<PredictionMatrix> p = LoadPredictionMatrix(c.in);
  if (!p.ok()) return p.status();
  absl::StatusOr<PredictionMatrix> q = LoadPredictionMatrix(c.in2);
  if (!q.ok()) return q.status();
  absl::StatusOr<RankingFunctionParams> fn = FnParams(c, p->num_labels());
  if (!fn.ok()) return fn.status();
  absl::StatusOr<StabilityReport> s = StabilityGap(*fn, *p, *q);
  if (!s.ok()) return s.status();
  Report r;
  r.result["infGap"] = s->inf_gap;
  r.result["l1Dist"] = s->l1_dist;
  r.result["ratio"] = s->ratio ? json(*s->ratio) : json();
  r.table = KeyValueTable({{"infGap", Num(s->inf_gap)},
                           {"l1Dist", Num(s->l1_dist)},
                           {"ratio", s->ratio ? Num(*s->ratio) : "-"}});
  return r;
}

absl::StatusOr<Report> RunUtility(const RunConfig& c) {
  absl::StatusOr<PredictionMatrix> p = LoadPredictionMatrix(c.in);
  if (!p.ok()) return p.status();
  absl::StatusOr<RankingFunctionParams> fn = FnParams(c, p->num_labels());
  if (!fn.ok()) return fn.status();
  const ClassUtilityMap& tau = *fn->tau;
  absl::StatusOr<UtilitySpec> spec;
  const std::string weights = c.weights.value_or("dcg");
  if (weights == "dcg") {
    spec = UtilitySpec::Dcg(tau, p->num_individuals());
  } else {
    absl::StatusOr<std::string> text = ReadFile(weights);
    if (!text.ok()) return text.status();
    absl::StatusOr<std::vector<double>> w = ParseNumberList(*text);
    if (!w.ok()) {
      return Invalid(absl::StrFormat("%s: %s", weights, w.status().message()));
    }
    spec = UtilitySpec::Create(tau, *std::move(w));
  }
  if (!spec.ok()) return spec.status();
  absl::StatusOr<UtilityReport> u = NormalizedUtility(*p, *fn, *spec);
  if (!u.ok()) return u.status();
  Report r;
  r.result["utility"] = u->raw;
  r.result["minUtility"] = u->min;
  r.result["maxUtility"] = u->max;
  r.result["normalizedUtility"] = u->normalized;
  r.result["positionWeights"] = spec->position_weights();
  r.table = KeyValueTable({{"utility", Num(u->raw)},
                           {"minUtility", Num(u->min)},
                           {"maxUtility", Num(u->max)},
                           {"normalizedUtility", Num(u->normalized)}});
  return r;
}

std::string BucketString(const Bucket& b) {
  std::string s = "(";
  for (size_t i = 0; i < b.size(); ++i) {
    absl::StrAppendFormat(&s, "%s%d", i == 0 ? "" : ",", b[i]);
  }
  return s + ")";
}

absl::StatusOr<Report> RunAudit(const RunConfig& c) {
  absl::StatusOr<PopulationModel> pop = LoadPopulationModel(c.model);
  if (!pop.ok()) return pop.status();
  Report r;
  AuditOptions opts;
  opts.num_threads = c.threads;

  if (c.audit_kind == "multiaccuracy") {
    const MultiaccuracyReport ma = MultiaccuracyAlpha(*pop);
    json groups = json::array();
    std::vector<std::pair<std::string, std::string>> rows;
    for (int g = 0; g < pop->num_groups(); ++g) {
      groups.push_back({{"group", pop->group(g).name},
                        {"alpha", ma.per_group[g]}});
      rows.emplace_back("group " + pop->group(g).name, Num(ma.per_group[g]));
    }
    rows.emplace_back("alpha", Num(ma.alpha));
    r.result["groups"] = groups;
    r.result["alpha"] = ma.alpha;
    r.table = KeyValueTable(rows);
    return r;
  }

  if (c.audit_kind == "multicalibration") {
    absl::StatusOr<MulticalibrationReport> mc =
        MulticalibrationAlpha(*pop, *c.delta);
    if (!mc.ok()) return mc.status();
    json cells = json::array();
    std::vector<std::pair<std::string, std::string>> rows;
    for (const CalibrationCell& cell : mc->cells) {
      cells.push_back({{"group", pop->group(cell.group).name},
                       {"bucket", cell.bucket},
                       {"alpha", cell.alpha}});
      rows.emplace_back(absl::StrFormat("group %s bucket %s",
                                        pop->group(cell.group).name,
                                        BucketString(cell.bucket)),
                        Num(cell.alpha));
    }
    rows.emplace_back("alpha", Num(mc->alpha));
    r.result["cells"] = cells;
    r.result["alpha"] = mc->alpha;
    r.table = KeyValueTable(rows);
    return r;
  }

  if (c.audit_kind == "closeness") {
    absl::StatusOr<ClosenessReport> cr =
        NatureClosenessCheck(*pop, *c.n, *c.samples, *c.seed, opts);
    if (!cr.ok()) return cr.status();
    r.result["epsilon"] = cr->epsilon;
    r.result["bound"] = cr->bound;
    r.result["maxGap"] = cr->max_gap;
    r.result["meanGap"] = cr->mean_gap;
    r.result["violations"] = cr->violations;
    r.table = KeyValueTable({{"epsilon", Num(cr->epsilon)},
                             {"bound", Num(cr->bound)},
                             {"maxGap", Num(cr->max_gap)},
                             {"meanGap", Num(cr->mean_gap)},
                             {"violations", absl::StrCat(cr->violations)}});
    return r;
  }

  // theorem
  absl::StatusOr<int> group = pop->FindGroup(*c.group);
  if (!group.ok()) return group.status();
  AuditCell cell;
  cell.group = *group;
  if (c.bucket.has_value()) {
    cell.bucket = *c.bucket;
    cell.delta = *c.delta;
  }
  absl::StatusOr<RankingFunctionParams> fn = FnParams(c, pop->num_labels());
  if (!fn.ok()) return fn.status();
  absl::StatusOr<double> alpha = AuditAlpha(*pop, cell);
  if (!alpha.ok()) return alpha.status();
  const double bound = TheoremBound(*fn, pop->num_labels(), *c.n, *alpha);
  const int rank = *c.k - 1;
  r.result["alpha"] = *alpha;
  r.result["bound"] = bound;
  if (c.exact) {
    absl::StatusOr<double> gap =
        TheoremGapExact(*pop, *c.n, rank, cell, *fn, opts);
    if (!gap.ok()) return gap.status();
    r.result["gap"] = *gap;
    r.result["withinBound"] = *gap <= bound + 1e-12;
    r.table = KeyValueTable({{"gap", Num(*gap)},
                             {"alpha", Num(*alpha)},
                             {"bound", Num(bound)}});
    return r;
  }
  absl::StatusOr<AuditReport> est = TheoremGapEstimate(
      *pop, *c.n, rank, cell, *fn, *c.samples, *c.seed, opts);
  if (!est.ok()) return est.status();
  r.result["gap"] = est->estimate;
  r.result["signedMean"] = est->mean;
  r.result["mcError"] = est->mc_error;
  r.table = KeyValueTable({{"gap", Num(est->estimate)},
                           {"mcError", Num(est->mc_error)},
                           {"alpha", Num(*alpha)},
                           {"bound", Num(bound)}});
  return r;
}

absl::StatusOr<std::vector<int>> ParseBucket(const std::string& text) {
  absl::StatusOr<std::vector<double>> v = ParseNumberList(text);
  if (!v.ok()) {
    return Invalid(absl::StrFormat("--bucket: %s", v.status().message()));
  }
  std::vector<int> out;
  for (double x : *v) {
    if (x != std::floor(x) || x < 0 || x > 1e6) {
      return Invalid(absl::StrFormat(
          "--bucket entries must be nonnegative integers, got %g", x));
    }
    out.push_back(static_cast<int>(x));
  }
  return out;
}

void AddOptions(CLI::App* app, Flags& f, bool model_input) {
  if (model_input) {
    app->add_option("--model", f.model, "population model JSON");
  } else {
    app->add_option("--in", f.in, "prediction matrix CSV");
  }
  app->add_option("--fn", f.fn, "ranking function: ua, opt, mix or pl");
  app->add_option("--phi", f.phi, "mixture weight for mix");
  app->add_option("--values", f.values, "label values v_1..v_L, e.g. 1,2,3");
  app->add_option("--seed", f.seed, "random seed");
  app->add_option("--samples", f.samples, "Monte-Carlo sample count");
  app->add_option("--threads", f.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  app->add_option("--format", f.format, "table or structured")
      ->check(CLI::IsMember({"table", "structured"}));
  app->add_option("--out", f.out, "write the report to this file");
}

}  // namespace

const char* ErrorCategory(const absl::Status& status) {
  switch (status.code()) {
    case absl::StatusCode::kResourceExhausted:
      return "budget";
    case absl::StatusCode::kNotFound:
    case absl::StatusCode::kPermissionDenied:
    case absl::StatusCode::kDataLoss:
    case absl::StatusCode::kUnavailable:
      return "io";
    default:
      return "validation";
  }
}

int ExitCodeFor(const absl::Status& status) {
  if (status.ok()) return kExitOk;
  if (status.code() == absl::StatusCode::kResourceExhausted) return kExitBudget;
  return kExitValidation;
}

absl::StatusOr<RunConfig> ParseCommandLine(int argc, const char* const* argv) {
  CLI::App app{"Uncertainty-aware ranking, stability, utility and audits",
               "uarank"};
  app.require_subcommand(1);
  Flags f;

  CLI::App* rank = app.add_subcommand("rank", "rank marginals of a ranking function");
  AddOptions(rank, f, false);
  CLI::App* stability =
      app.add_subcommand("stability", "compare rankings of two matrices");
  AddOptions(stability, f, false);
  stability->add_option("--in2", f.in2, "second prediction matrix CSV");
  CLI::App* utility =
      app.add_subcommand("utility", "expected and normalized utility");
  AddOptions(utility, f, false);
  utility->add_option("--weights", f.weights, "dcg or a file of weights");
  CLI::App* oracle =
      app.add_subcommand("oracle", "brute-force ua or exact pl marginals");
  AddOptions(oracle, f, false);

  CLI::App* audit = app.add_subcommand("audit", "multigroup fairness audits");
  audit->require_subcommand(1);
  const std::vector<std::string> kinds = {"multiaccuracy", "multicalibration",
                                          "theorem", "closeness"};
  for (const std::string& kind : kinds) {
    CLI::App* sub = audit->add_subcommand(kind);
    AddOptions(sub, f, true);
    sub->add_option("--delta", f.delta, "bucket width");
    if (kind == "theorem" || kind == "closeness") {
      sub->add_option("--n", f.n, "dataset size");
    }
    if (kind == "theorem") {
      sub->add_option("--k", f.k, "rank position, 1-based");
      sub->add_option("--group", f.group, "group name");
      sub->add_option("--bucket", f.bucket, "bucket coordinates, 0-based");
      sub->add_flag("--exact", f.exact, "enumerate all type vectors");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    if (code == 0) return absl::CancelledError(out.str());
    return Invalid(e.what());
  }

  CLI::App* cmd = app.get_subcommands().front();
  RunConfig c;
  c.command = cmd->get_name();
  if (cmd == audit) {
    cmd = audit->get_subcommands().front();
    c.audit_kind = cmd->get_name();
  }
  auto given = [cmd](const char* name) {
    try {
      return cmd->get_option(name)->count() > 0;
    } catch (const CLI::OptionNotFound&) {
      return false;
    }
  };
  c.in = f.in;
  c.in2 = f.in2;
  c.model = f.model;
  c.out = f.out;
  c.exact = f.exact;
  c.threads = f.threads;
  c.format = f.format == "structured" ? OutputFormat::kStructured
                                      : OutputFormat::kTable;
  if (given("--fn")) c.fn = f.fn;
  if (given("--phi")) c.phi = f.phi;
  if (given("--seed")) c.seed = f.seed;
  if (given("--samples")) c.samples = f.samples;
  if (given("--delta")) c.delta = f.delta;
  if (given("--n")) c.n = f.n;
  if (given("--k")) c.k = f.k;
  if (given("--group")) c.group = f.group;
  if (given("--values")) c.values = f.values;
  if (given("--weights")) c.weights = f.weights;
  if (given("--bucket")) {
    absl::StatusOr<std::vector<int>> b = ParseBucket(f.bucket);
    if (!b.ok()) return b.status();
    c.bucket = *std::move(b);
  }
  if (c.command == "oracle" && !c.fn) c.fn = "ua";
  return c;
}

absl::Status ValidateRunConfig(const RunConfig& c) {
  const bool audit = c.command == "audit";
  if (!audit && c.command != "rank" && c.command != "stability" &&
      c.command != "utility" && c.command != "oracle") {
    return Invalid(absl::StrFormat("unknown command '%s'", c.command));
  }
  if (audit && c.audit_kind != "multiaccuracy" &&
      c.audit_kind != "multicalibration" && c.audit_kind != "theorem" &&
      c.audit_kind != "closeness") {
    return Invalid(absl::StrFormat("unknown audit '%s'", c.audit_kind));
  }
  if (c.threads < 1) return Invalid("--threads must be at least 1");

  const bool needs_fn = !audit || c.audit_kind == "theorem";
  if (needs_fn && !c.fn) return Invalid("--fn is required");
  if (!needs_fn && c.fn) {
    return Invalid(absl::StrFormat("--fn is not used by audit %s",
                                   c.audit_kind));
  }
  if (c.fn) {
    if (!ParseRankingFunctionId(*c.fn).ok()) {
      return Invalid(absl::StrFormat(
          "unknown ranking function '%s', expected ua, opt, mix or pl", *c.fn));
    }
    if (c.command == "oracle" && *c.fn != "ua" && *c.fn != "pl") {
      return Invalid("oracle supports --fn ua or pl");
    }
    if (audit && *c.fn == "pl") {
      return Invalid("audits support --fn ua, opt or mix");
    }
    const bool mix = *c.fn == "mix";
    if (mix && !c.phi) return Invalid("--phi is required for --fn mix");
    if (!mix && c.phi) return Invalid("--phi is only valid with --fn mix");
  }
  if (c.phi && !(*c.phi >= 0.0 && *c.phi <= 1.0)) {
    return Invalid(absl::StrFormat("--phi = %g outside [0, 1]", *c.phi));
  }

  if (IsSamplingPath(c)) {
    if (!c.samples) return Invalid("--samples is required on sampling paths");
    if (!c.seed) return Invalid("--seed is required on sampling paths");
    if (*c.samples < 1) {
      return Invalid(absl::StrFormat("--samples = %d must be at least 1",
                                     *c.samples));
    }
  } else if (c.samples || c.seed) {
    return Invalid("--samples and --seed are only valid on sampling paths");
  }

  if (!audit) {
    if (c.in.empty()) return Invalid("--in is required");
    if (c.command == "stability" && c.in2.empty()) {
      return Invalid("--in2 is required");
    }
    return absl::OkStatus();
  }

  if (c.model.empty()) return Invalid("--model is required");
  if (c.delta && !BucketsPerLabel(*c.delta).ok()) {
    return BucketsPerLabel(*c.delta).status();
  }
  if (c.audit_kind == "multicalibration" && !c.delta) {
    return Invalid("--delta is required for audit multicalibration");
  }
  if (c.audit_kind == "multiaccuracy" || c.audit_kind == "closeness") {
    if (c.delta) {
      return Invalid(absl::StrFormat("--delta is not used by audit %s",
                                     c.audit_kind));
    }
  }
  if (c.audit_kind == "theorem" || c.audit_kind == "closeness") {
    if (!c.n) return Invalid("--n is required");
    if (*c.n < 1) return Invalid(absl::StrFormat("--n = %d must be at least 1", *c.n));
  }
  if (c.audit_kind == "theorem") {
    if (!c.k) return Invalid("--k is required");
    if (*c.k < 1 || *c.k > *c.n) {
      return Invalid(absl::StrFormat("--k = %d outside [1, %d]", *c.k, *c.n));
    }
    if (!c.group) return Invalid("--group is required");
    if (c.bucket.has_value() != c.delta.has_value()) {
      return Invalid("--bucket and --delta must be given together");
    }
  }
  return absl::OkStatus();
}

int Run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  auto fail = [&err](const absl::Status& s) {
    err << "error[" << ErrorCategory(s) << "]: " << s.message() << "\n";
    return ExitCodeFor(s);
  };
  if (absl::Status s = ValidateRunConfig(config); !s.ok()) return fail(s);

  absl::StatusOr<Report> report;
  if (config.command == "rank") {
    report = RunRank(config);
  } else if (config.command == "oracle") {
    report = RunOracle(config);
  } else if (config.command == "stability") {
    report = RunStability(config);
  } else if (config.command == "utility") {
    report = RunUtility(config);
  } else {
    report = RunAudit(config);
  }
  if (!report.ok()) return fail(report.status());

  std::string text;
  if (config.format == OutputFormat::kStructured) {
    json doc;
    doc["config"] = ConfigJson(config);
    doc["result"] = report->result;
    text = doc.dump(2) + "\n";
  } else {
    text = report->table;
  }
  if (config.out.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(config.out, std::ios::binary);
  file << text;
  if (!file) {
    return fail(absl::UnavailableError(
        absl::StrFormat("cannot write '%s'", config.out)));
  }
  return kExitOk;
}

int RunCommandLine(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
  absl::StatusOr<RunConfig> config = ParseCommandLine(argc, argv);
  if (!config.ok()) {
    if (config.status().code() == absl::StatusCode::kCancelled) {
      out << config.status().message();
      return kExitOk;
    }
    err << "error[" << ErrorCategory(config.status())
        << "]: " << config.status().message() << "\n";
    return ExitCodeFor(config.status());
  }
  return Run(*config, out, err);
}

}  // namespace uarank
