// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Dispatch() is the whole program minus main(), so
// tests can drive it with captured streams.
//
// Exit codes: 0 success, 1 domain-negative outcome (or a domain error such
// as a failed precondition), 2 usage or parse error.

#ifndef MATROID_LAB_TOOLS_CLI_HPP_
#define MATROID_LAB_TOOLS_CLI_HPP_

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "matroid_lab/matroid_lab.hpp"
#include "matroid_lab/testing/acceptance.hpp"

namespace matroid_lab::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

struct CommonOptions {
  bool json = false;
  std::string output;
  uint64_t seed = 1;
  double cap_pairs = 1e7;
  int threads = 0;
  bool timings = false;
};

// A failure that maps directly to an exit code.
struct CliFailure {
  int code;
  std::string message;
};

inline std::string Sha256Hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < length; ++i) {
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return out.str();
}

inline int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
    case ErrorKind::kUnknownFamily:
    case ErrorKind::kUnsupportedParam:
      return kExitUsage;
    default:
      return kExitNegative;
  }
}

inline Json LabelsJson(const GroundSet& g, const Subset& s) { return g.Labels(s); }

inline Json ChainJson(const ExtensionChain& chain) {
  Json steps = Json::array();
  for (const ExtensionStep& step : chain.steps) {
    Json minimal = Json::array();
    for (const Subset& f : step.cut.MinimalFlats()) {
      minimal.push_back(LabelsJson(step.cut.host().ground(), f));
    }
    steps.push_back({{"label", step.label},
                     {"generators", step.generators},
                     {"cut_minimal_flats", minimal},
                     {"defect_before", step.defect_before},
                     {"defect_after", step.defect_after}});
  }
  return {{"base", chain.base.name()},
          {"base_elements", chain.base.size()},
          {"status", std::string(ChainStatusName(chain.status))},
          {"note", chain.note},
          {"added", chain.Added()},
          {"steps", steps},
          {"result_elements", chain.result.size()},
          {"result_rank", chain.result.rank()}};
}

inline Json ReportJson(const SubmodularityReport& r) {
  Json out = {{"status", std::string(AmalgamStatusName(r.status))},
              {"elements", r.ground.size()},
              {"lattice_size", r.lattice_size},
              {"pairs_checked", r.pairs_checked},
              {"eta_only_violations", r.eta_only_violations},
              {"brute_checked", r.brute_checked}};
  if (r.violation) {
    const XiViolation& v = *r.violation;
    out["violation"] = {{"x", LabelsJson(r.ground, v.x)},
                        {"y", LabelsJson(r.ground, v.y)},
                        {"xi_x", v.xi_x},
                        {"xi_y", v.xi_y},
                        {"xi_meet", v.xi_meet},
                        {"xi_union", v.xi_union},
                        {"slack", v.Slack()}};
  }
  if (r.unexpected_for_rank4_ote) out["unexpected_for_rank4_ote"] = true;
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

// Human rendering: flattened "key: value" lines.
inline void RenderText(const Json& j, const std::string& prefix, std::ostream& out) {
  auto scalar = [](const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      RenderText(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
    return;
  }
  if (j.is_array()) {
    bool flat = std::all_of(j.begin(), j.end(), [](const Json& v) { return v.is_primitive(); });
    if (flat) {
      out << prefix << ":";
      for (const Json& v : j) out << ' ' << scalar(v);
      out << "\n";
      return;
    }
    bool sets = std::all_of(j.begin(), j.end(), [](const Json& v) {
      return v.is_array() &&
             std::all_of(v.begin(), v.end(), [](const Json& w) { return w.is_primitive(); });
    });
    if (sets) {
      out << prefix << ":";
      for (const Json& v : j) {
        out << " {";
        for (size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << scalar(v[i]);
        out << "}";
      }
      out << "\n";
      return;
    }
    for (size_t i = 0; i < j.size(); ++i) RenderText(j[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << prefix << ": " << scalar(j) << "\n";
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  CommonOptions common;

  std::string ReadFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliFailure{kExitUsage, "cannot read '" + path + "'"};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    inputs_.push_back({{"path", path}, {"sha256", Sha256Hex(text)}});
    return text;
  }

  Matroid LoadMatroid(const std::string& path) {
    Matroid m = ParseMatroid(ReadFile(path));
    return m;
  }

  void WriteText(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw CliFailure{kExitUsage, "cannot write '" + path + "'"};
    f << text;
  }

  // Writes the matroid to -o if given; otherwise to stdout unless JSON
  // output is active (then it is embedded in the results).
  void EmitMatroid(const Matroid& m, Json& results, bool to_stdout_by_default) {
    std::string text = SerializeMatroid(m);
    if (!common.output.empty()) {
      WriteText(common.output, text);
      results["output"] = common.output;
    } else if (common.json) {
      results["matroid"] = text;
    } else if (to_stdout_by_default) {
      matroid_text_ = text;
    }
  }

  int Finish(const std::string& command, const Json& config, Json results, int code) {
    Json report;
    report["command"] = command;
    report["inputs"] = inputs_;
    report["config"] = config;
    report["results"] = std::move(results);
    report["exit_code"] = code;
    if (common.timings) {
      report["timings"] = {{"seconds", std::chrono::duration<double>(
                                           std::chrono::steady_clock::now() - start_)
                                           .count()}};
    }
    if (common.json) {
      out_ << report.dump(2) << "\n";
    } else if (matroid_text_) {
      out_ << *matroid_text_;
    } else {
      RenderText(report["results"], "", out_);
      if (common.timings) RenderText(report["timings"], "timings", out_);
    }
    return code;
  }

  int Fail(const std::string& command, int code, const std::string& kind,
           const std::string& message) {
    if (common.json) {
      Json report = {{"command", command},
                     {"inputs", inputs_},
                     {"error", {{"kind", kind}, {"message", message}}},
                     {"exit_code", code}};
      out_ << report.dump(2) << "\n";
    } else {
      err_ << "error: " << message << "\n";
    }
    return code;
  }

  std::ostream& out() { return out_; }

 private:
  std::ostream& out_;
  std::ostream& err_;
  Json inputs_ = Json::array();
  std::optional<std::string> matroid_text_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::vector<Subset> ParseFlatList(const Matroid& m, const std::string& text) {
  std::vector<Subset> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ';')) {
    Subset s = m.ground().Parse(part);
    out.push_back(s);
  }
  return out;
}

inline Subset RequireFlatArg(const Matroid& m, const std::string& text, const char* what) {
  Subset s = m.ground().Parse(text);
  if (!m.IsFlat(s)) {
    throw MatroidError(ErrorKind::kNotAFlat,
                       std::string(what) + " {" + m.Format(s) + "} is not a flat");
  }
  return s;
}

inline Json Config(const CommonOptions& c) {
  return {{"seed", c.seed}, {"cap_pairs", static_cast<int64_t>(c.cap_pairs)}};
}

// ---- subcommands -------------------------------------------------------

inline int RunAnalyze(Runner& run, const std::string& path, bool ote) {
  std::string text = run.ReadFile(path);
  Json results;
  Json config = Config(run.common);
  if (*internal::ReadRaw(text).representation == Representation::kRankTable) {
    RankTable table = ParseRankTable(text);
    if (auto v = CheckRankAxioms(table)) {
      results["is_matroid"] = false;
      results["axiom_violation"] = v->Describe(table.ground);
      Json escher = Json::array();
      for (const auto& e : CheckEscher(table)) {
        escher.push_back(Json::array({LabelsJson(table.ground, e.l1),
                                      LabelsJson(table.ground, e.l2),
                                      LabelsJson(table.ground, e.l3)}));
      }
      results["escher_violations"] = escher.size();
      results["escher_long_line_violations"] = CheckEscher(table, 3).size();
      results["escher"] = escher;
      return run.Finish("analyze", config, results, kExitNegative);
    }
  }
  Matroid m = ParseMatroid(text);
  const GroundSet& g = m.ground();
  results["name"] = m.name();
  results["elements"] = m.size();
  results["rank"] = m.rank();
  Json counts = Json::array();
  for (int k = 0; k <= m.rank(); ++k) counts.push_back(m.Flats(k).size());
  results["flats_per_rank"] = counts;
  auto axioms = CheckMatroidAxioms(m, run.common.seed);
  results["axioms"] = axioms ? axioms->Describe(g) : std::string("ok");
  PairCheck modular = CheckModular(m);
  results["is_modular"] = modular.holds;
  if (modular.witness) {
    results["modular_witness"] = Json::array({LabelsJson(g, modular.witness->x),
                                  LabelsJson(g, modular.witness->y)});
  }
  PairCheck hyper = CheckHypermodular(m);
  results["is_hypermodular"] = hyper.holds;
  if (hyper.witness) {
    results["hypermodular_witness"] = Json::array({LabelsJson(g, hyper.witness->x),
                                       LabelsJson(g, hyper.witness->y)});
  }
  auto bundle = BundleViolations(m, static_cast<int64_t>(run.common.cap_pairs));
  results["bundle_condition"] = bundle.empty();
  results["bundle_violations"] = bundle.size();
  if (!bundle.empty()) {
    const auto& q = bundle.front();
    results["first_bundle_violation"] = Json::array({LabelsJson(g, q.l1), LabelsJson(g, q.l2),
                                         LabelsJson(g, q.l3), LabelsJson(g, q.l4)});
  }
  auto pairs = CoplanarDisjointLinePairs(m);
  results["coplanar_disjoint_line_pairs"] = pairs.size();
  if (!pairs.empty()) {
    results["first_coplanar_disjoint_pair"] = Json::array({LabelsJson(g, pairs[0].x),
                                               LabelsJson(g, pairs[0].y)});
  }
  results["escher_violations"] = CheckEscher(m).size();
  if (ote) {
    OteCheck check = CheckOTE(m, ResolveThreads(run.common.threads));
    results["is_ote"] = check.holds;
    if (check.witness) {
      results["ote_witness"] = Json::array({LabelsJson(g, check.witness->x),
                                LabelsJson(g, check.witness->y)});
    }
  }
  return run.Finish("analyze", config, results, kExitOk);
}

inline int RunExtend(Runner& run, const std::string& path, const std::string& flats,
                     std::string label, bool to_modular) {
  Matroid m = run.LoadMatroid(path);
  std::vector<Subset> seeds = ParseFlatList(m, flats);
  for (const Subset& s : seeds) ModularCut::RequireFlat(m, s);
  Json results;
  Json config = Config(run.common);
  config["flats"] = flats;
  if (to_modular) {
    if (seeds.size() != 2) throw CliFailure{kExitUsage, "--to-modular needs exactly two flats"};
    ExtensionChain chain =
        ReduceDefectChain(m, seeds[0], seeds[1], label.empty() ? "_p" : label);
    results["chain"] = ChainJson(chain);
    run.EmitMatroid(chain.result, results, true);
    return run.Finish("extend", config, results,
                      chain.status == ChainStatus::kComplete ? kExitOk : kExitNegative);
  }
  ModularCut cut = GenerateCut(m, seeds);
  if (label.empty()) label = m.ground().FreshLabel("_p");
  Matroid ext = CrapoExtend(cut, label);
  Json minimal = Json::array();
  for (const Subset& f : cut.MinimalFlats()) minimal.push_back(LabelsJson(m.ground(), f));
  results["label"] = label;
  results["cut_size"] = cut.size();
  results["cut_minimal_flats"] = minimal;
  if (auto p = IsPrincipal(cut)) results["principal_at"] = LabelsJson(m.ground(), *p);
  run.EmitMatroid(ext, results, true);
  return run.Finish("extend", config, results, kExitOk);
}

inline int RunCuts(Runner& run, const std::string& path, bool enumerate,
                   const std::string& flats) {
  Matroid m = run.LoadMatroid(path);
  Json results;
  Json config = Config(run.common);
  if (enumerate) {
    Json cuts = Json::array();
    auto all = EnumerateModularCuts(m);
    for (const ModularCut& c : all) {
      Json minimal = Json::array();
      for (const Subset& f : c.MinimalFlats()) minimal.push_back(LabelsJson(m.ground(), f));
      cuts.push_back(minimal);
    }
    results["count"] = all.size();
    results["cuts_by_minimal_flats"] = cuts;
  }
  if (!flats.empty()) {
    std::vector<Subset> seeds = ParseFlatList(m, flats);
    for (const Subset& s : seeds) ModularCut::RequireFlat(m, s);
    ModularCut cut = GenerateCut(m, seeds);
    Json members = Json::array();
    for (const Subset& f : cut.Flats()) members.push_back(LabelsJson(m.ground(), f));
    results["generated_cut"] = members;
    auto p = IsPrincipal(cut);
    results["principal"] = p.has_value();
    if (seeds.size() == 2 && ModularDefect(m, seeds[0], seeds[1]) > 0) {
      results["defect"] = ModularDefect(m, seeds[0], seeds[1]);
      results["intersectable"] = IsIntersectable(m, seeds[0], seeds[1]);
    }
  }
  if (!enumerate && flats.empty()) {
    throw CliFailure{kExitUsage, "cuts needs --enumerate or --flats"};
  }
  return run.Finish("cuts", config, results, kExitOk);
}

inline int RunAmalgam(Runner& run, const std::string& p1, const std::string& p2,
                      bool brute_check, const std::string& expect) {
  Matroid m1 = run.LoadMatroid(p1);
  Matroid m2 = run.LoadMatroid(p2);
  AmalgamOptions options;
  options.threads = ResolveThreads(run.common.threads);
  options.brute_check = brute_check;
  SubmodularityReport report = ProperAmalgam(m1, m2, options);
  Json results = ReportJson(report);
  Json config = Config(run.common);
  config["brute_check"] = brute_check;
  if (report.amalgam) run.EmitMatroid(*report.amalgam, results, false);
  int code = kExitOk;
  if (!expect.empty() && expect != AmalgamStatusName(report.status)) code = kExitNegative;
  return run.Finish("amalgam", config, results, code);
}

inline Json WitnessJson(const WitnessBundle& w) {
  Json checks = Json::array();
  for (const auto& c : w.checks) {
    Json entry = {{"name", c.name}, {"holds", c.holds}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(entry);
  }
  return {{"a", w.a},
          {"e", w.e},
          {"f", w.free_label},
          {"t1", w.t1},
          {"t2", w.t2},
          {"b1", w.b1},
          {"b2", w.b2},
          {"p", w.p},
          {"q", w.q},
          {"delta_t", w.delta_t},
          {"delta_b", w.delta_b},
          {"n0_elements", w.n0.size()},
          {"n_elements", w.n.size()},
          {"n_rank", w.n.rank()},
          {"checks", checks},
          {"all_hold", w.AllHold()},
          {"chain_t", ChainJson(w.chain_t)},
          {"chain_b", ChainJson(w.chain_b)}};
}

inline int RunWitness(Runner& run, const std::string& path, const std::string& flat,
                      const std::string& hyperplane) {
  Matroid m = run.LoadMatroid(path);
  Subset f = RequireFlatArg(m, flat, "F");
  Subset h = RequireFlatArg(m, hyperplane, "H");
  WitnessBundle w = NonstickyWitness(m, f, h);
  Json results = WitnessJson(w);
  run.EmitMatroid(w.n, results, false);
  Json config = Config(run.common);
  config["flat"] = flat;
  config["hyperplane"] = hyperplane;
  return run.Finish("witness", config, results, w.AllHold() ? kExitOk : kExitNegative);
}

inline int RunCertify(Runner& run, const std::string& path, const std::string& flat,
                      const std::string& hyperplane, bool auto_pair, bool brute_check) {
  Matroid m = run.LoadMatroid(path);
  AmalgamOptions options;
  options.threads = ResolveThreads(run.common.threads);
  options.brute_check = brute_check;
  NonstickyCertificate cert;
  if (auto_pair || (flat.empty() && hyperplane.empty())) {
    cert = CertifyNonstickyAuto(m, options);
  } else {
    cert = CertifyNonsticky(m, RequireFlatArg(m, flat, "F"),
                            RequireFlatArg(m, hyperplane, "H"), options);
  }
  Json results;
  results["pair"] = Json::array({LabelsJson(cert.base.ground(), cert.f),
                     LabelsJson(cert.base.ground(), cert.h)});
  results["contracted"] = cert.contracted;
  results["n1_added"] = cert.n1_chain.Added();
  results["n2_elements"] = cert.witness.n.size();
  results["witness_invariants_hold"] = cert.witness.AllHold();
  results["amalgam"] = ReportJson(cert.report);
  results["non_sticky_certified"] = cert.report.status == AmalgamStatus::kFails;
  Json config = Config(run.common);
  config["auto_pair"] = auto_pair;
  return run.Finish("certify-nonsticky", config, results,
                    cert.report.status == AmalgamStatus::kFails ? kExitOk : kExitNegative);
}

inline int RunEmbed(Runner& run, const std::string& path, bool rank4,
                    std::optional<int> budget, const std::string& log) {
  Matroid m = run.LoadMatroid(path);
  Json results;
  Json config = Config(run.common);
  int code = kExitOk;
  Json chain;
  Matroid result;
  if (rank4 == budget.has_value()) {
    throw CliFailure{kExitUsage, "embed-ote needs exactly one of --rank4 and --budget"};
  }
  if (rank4) {
    EmbeddingResult e = EmbedOteRank4(m);
    chain = ChainJson(e.chain);
    results["pairs_listed"] = e.pairs_listed;
    results["is_ote"] = e.result_is_ote;
    results["is_hypermodular"] = e.result_is_hypermodular;
    results["input_bundle_condition"] = e.input_bundle_condition;
    results["is_modular"] = e.result_is_modular;
    results["trace_check"] = e.trace_problem ? *e.trace_problem : std::string("ok");
    if (e.chain.status != ChainStatus::kComplete) code = kExitNegative;
    result = e.chain.result;
  } else {
    config["budget"] = *budget;
    BudgetedResult b = EmbedOteGeneral(m, *budget, ResolveThreads(run.common.threads));
    chain = ChainJson(b.chain);
    results["pairs_handled"] = b.pairs_handled;
    if (b.remaining) {
      results["remaining_pair"] = Json::array({LabelsJson(b.chain.result.ground(), b.remaining->x),
                                   LabelsJson(b.chain.result.ground(), b.remaining->y)});
    }
    result = b.chain.result;
  }
  results["status"] = chain["status"];
  results["steps"] = chain["steps"].size();
  if (!log.empty()) {
    run.WriteText(log, chain.dump(2) + "\n");
  } else {
    results["chain"] = chain;
  }
  run.EmitMatroid(result, results, false);
  return run.Finish("embed-ote", config, results, code);
}

inline int RunHypermodular(Runner& run, const std::string& path, int budget,
                           const std::string& log) {
  Matroid m = run.LoadMatroid(path);
  BudgetedResult b = HypermodularCompletion(m, budget);
  Json results;
  Json config = Config(run.common);
  config["budget"] = budget;
  Json chain = ChainJson(b.chain);
  results["status"] = chain["status"];
  results["steps"] = b.chain.steps.size();
  results["pairs_handled"] = b.pairs_handled;
  int64_t remaining = 0;
  auto hyperplanes = Hyperplanes(b.chain.result);
  for (size_t i = 0; i < hyperplanes.size(); ++i) {
    for (size_t j = i + 1; j < hyperplanes.size(); ++j) {
      remaining += ModularDefect(b.chain.result, hyperplanes[i], hyperplanes[j]) > 0;
    }
  }
  results["hyperplanes"] = hyperplanes.size();
  results["non_modular_hyperplane_pairs"] = remaining;
  if (!log.empty()) {
    run.WriteText(log, chain.dump(2) + "\n");
  } else {
    results["chain"] = chain;
  }
  run.EmitMatroid(b.chain.result, results, false);
  return run.Finish("hypermodular-complete", config, results, kExitOk);
}

inline int RunGen(Runner& run, const std::string& family, const std::vector<int>& params) {
  Matroid m = GenNamed(family, params);
  Json results = {{"family", family}, {"params", params}, {"name", m.name()},
                  {"elements", m.size()}, {"rank", m.rank()}};
  run.EmitMatroid(m, results, true);
  return run.Finish("gen", Config(run.common), results, kExitOk);
}

inline int RunIsomorphic(Runner& run, const std::string& p1, const std::string& p2,
                         int bound) {
  Matroid a = run.LoadMatroid(p1);
  Matroid b = run.LoadMatroid(p2);
  auto map = FindIsomorphism(a, b, bound);
  Json results = {{"isomorphic", map.has_value()}};
  if (map) {
    Json pairs = Json::array();
    for (int e = 0; e < a.size(); ++e) {
      pairs.push_back(Json::array({a.ground().label(e), b.ground().label((*map)[e])}));
    }
    results["bijection"] = pairs;
  }
  Json config = Config(run.common);
  config["bound"] = bound;
  return run.Finish("isomorphic", config, results, map ? kExitOk : kExitNegative);
}

inline int RunSelftest(Runner& run) {
  std::vector<testing::CriterionResult> criteria;
  std::ostringstream lines;
  bool ok = testing::RunAcceptance(run.common.json ? lines : run.out(), &criteria);
  if (!run.common.json) return ok ? kExitOk : kExitNegative;
  Json list = Json::array();
  for (const auto& c : criteria) {
    Json entry = {{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
    if (run.common.timings) entry["seconds"] = c.seconds;
    list.push_back(entry);
  }
  return run.Finish("selftest", Config(run.common), {{"all_pass", ok}, {"criteria", list}},
                    ok ? kExitOk : kExitNegative);
}

// ---- dispatch ----------------------------------------------------------

inline int Dispatch(int argc, const char* const* argv, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
  CLI::App app{"matroid_lab: finite matroids, modular cuts, extensions and amalgams"};
  app.require_subcommand(1);
  Runner run(out, err);
  CommonOptions& c = run.common;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", c.json, "emit a JSON report");
    sub->add_option("-o,--output", c.output, "write the resulting matroid file here");
    sub->add_option("--seed", c.seed, "seed for sampled checks")->capture_default_str();
    sub->add_option("--cap-pairs", c.cap_pairs, "enumeration cap")->capture_default_str();
    sub->add_option("--threads", c.threads,
                    "worker threads (default: MATROID_LAB_THREADS or all cores)");
    sub->add_flag("--timings", c.timings, "include wall-clock timings in the report");
  };

  std::string file1, file2, flats, label, flat, hyperplane, expect, log, family;
  bool ote = false, to_modular = false, enumerate = false, brute_check = false,
       auto_pair = false, rank4 = false;
  std::optional<int> budget;
  int hyper_budget = 0;
  int bound = kDefaultIsomorphismBound;
  std::vector<int> params;

  auto* analyze = app.add_subcommand("analyze", "structural report for a matroid file");
  analyze->add_option("file", file1)->required();
  analyze->add_flag("--ote", ote, "also test the OTE property");
  add_common(analyze);

  auto* extend = app.add_subcommand("extend", "single-element extension by a generated cut");
  extend->add_option("file", file1)->required();
  extend->add_option("--flats", flats, "generating flats, ';'-separated")->required();
  extend->add_option("--label", label, "label of the new element");
  extend->add_flag("--to-modular", to_modular, "extend until the two flats are modular");
  add_common(extend);

  auto* cuts = app.add_subcommand("cuts", "modular cuts of a matroid");
  cuts->add_option("file", file1)->required();
  cuts->add_flag("--enumerate", enumerate, "list every modular cut (tiny inputs)");
  cuts->add_option("--flats", flats, "report the cut generated by these flats");
  add_common(cuts);

  auto* amalgam = app.add_subcommand("amalgam", "proper amalgam of two extensions");
  amalgam->add_option("file1", file1)->required();
  amalgam->add_option("file2", file2)->required();
  amalgam->add_flag("--brute-check", brute_check, "exhaustive check of xi on small grounds");
  amalgam->add_option("--expect", expect, "expected status; exit 1 otherwise")
      ->check(CLI::IsMember({"exists", "fails", "inconclusive"}));
  add_common(amalgam);

  auto* witness = app.add_subcommand("witness", "erect the non-stickiness witness");
  witness->add_option("file", file1)->required();
  witness->add_option("--flat", flat, "the flat F")->required();
  witness->add_option("--hyperplane", hyperplane, "the hyperplane H")->required();
  add_common(witness);

  auto* certify = app.add_subcommand("certify-nonsticky", "non-stickiness certificate");
  certify->add_option("file", file1)->required();
  certify->add_option("--flat", flat, "the flat F");
  certify->add_option("--hyperplane", hyperplane, "the hyperplane H");
  certify->add_flag("--auto-pair", auto_pair, "choose the pair automatically");
  certify->add_flag("--brute-check", brute_check, "exhaustive check of xi on small grounds");
  add_common(certify);

  auto* embed = app.add_subcommand("embed-ote", "extend towards an OTE matroid");
  embed->add_option("file", file1)->required();
  embed->add_flag("--rank4", rank4, "single pass for hypermodular rank-4 input");
  embed->add_option("--budget", budget, "maximum number of extension steps");
  embed->add_option("--log", log, "write the chain log here");
  add_common(embed);

  auto* hyper = app.add_subcommand("hypermodular-complete", "extend towards hypermodularity");
  hyper->add_option("file", file1)->required();
  hyper->add_option("--budget", hyper_budget, "maximum number of extension steps")->required();
  hyper->add_option("--log", log, "write the chain log here");
  add_common(hyper);

  auto* gen = app.add_subcommand("gen", "named matroid families");
  gen->add_option("family", family,
                  "uniform R N | free N | vamos | pg3 Q | pg3-minus-point Q | "
                  "figure1-erection | u36-intersection")
      ->required();
  gen->add_option("params", params, "integer parameters");
  add_common(gen);

  auto* iso = app.add_subcommand("isomorphic", "search for an isomorphism");
  iso->add_option("file1", file1)->required();
  iso->add_option("file2", file2)->required();
  iso->add_option("--bound", bound, "largest ground set searched")->capture_default_str();
  add_common(iso);

  auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
  add_common(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, eo;
    int code = app.exit(e, o, eo);
    out << o.str();
    err << eo.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (*analyze) return RunAnalyze(run, file1, ote);
    if (*extend) return RunExtend(run, file1, flats, label, to_modular);
    if (*cuts) return RunCuts(run, file1, enumerate, flats);
    if (*amalgam) return RunAmalgam(run, file1, file2, brute_check, expect);
    if (*witness) return RunWitness(run, file1, flat, hyperplane);
    if (*certify) return RunCertify(run, file1, flat, hyperplane, auto_pair, brute_check);
    if (*embed) return RunEmbed(run, file1, rank4, budget, log);
    if (*hyper) return RunHypermodular(run, file1, hyper_budget, log);
    if (*gen) return RunGen(run, family, params);
    if (*iso) return RunIsomorphic(run, file1, file2, bound);
    if (*selftest) return RunSelftest(run);
  } catch (const CliFailure& f) {
    return run.Fail(command, f.code, f.code == kExitUsage ? "UsageError" : "Error", f.message);
  } catch (const MatroidError& e) {
    return run.Fail(command, ExitCodeFor(e.kind()), std::string(ErrorKindName(e.kind())),
                    e.what());
  }
  return kExitUsage;
}

}  // namespace matroid_lab::cli

#endif  // MATROID_LAB_TOOLS_CLI_HPP_
