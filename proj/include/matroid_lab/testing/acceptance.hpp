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

// The eleven acceptance criteria. Every time limit and sample count used
// here is a named constant below.

#ifndef MATROID_LAB_TESTING_ACCEPTANCE_HPP_
#define MATROID_LAB_TESTING_ACCEPTANCE_HPP_

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "matroid_lab/amalgam.hpp"
#include "matroid_lab/constructions.hpp"
#include "matroid_lab/cuts.hpp"
#include "matroid_lab/generators.hpp"
#include "matroid_lab/isomorphism.hpp"
#include "matroid_lab/modularity.hpp"
#include "matroid_lab/rank_table.hpp"
#include "matroid_lab/testing/oracles.hpp"

namespace matroid_lab::testing {

inline constexpr double kAxiomSuiteSeconds = 120.0;
inline constexpr double kModularStickySeconds = 300.0;
inline constexpr double kXiOracleSeconds = 180.0;
inline constexpr double kEmbeddingSeconds = 60.0;
inline constexpr int kAxiomSamples = 100'000;
inline constexpr int kAxiomExhaustiveLimit = 10;
inline constexpr uint64_t kAcceptanceSeed = 1;
inline constexpr int kXiOracleMaxElements = 12;
inline constexpr int kRandomOteContexts = 20;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// The golden corpus: generated, parsed-equivalent and constructed matroids.
inline std::vector<Matroid> GoldenCorpus() {
  std::vector<Matroid> out = {Uniform(2, 4), Uniform(3, 6), Uniform(4, 8)};
  for (int n = 0; n <= 5; ++n) out.push_back(Free(n));
  out.push_back(Vamos());
  out.push_back(ProjectiveSpace3(2));
  out.push_back(ProjectiveSpace3(3));
  out.push_back(ProjectiveSpace3MinusPoint(2));
  out.push_back(ProjectiveSpace3MinusPoint(4));
  out.push_back(U36IntersectionPoint());
  WitnessBundle w3 = NonstickyWitness(Uniform(3, 6), Subset{0, 1}, Subset{2, 3});
  out.push_back(w3.n0);
  out.push_back(w3.n);
  WitnessBundle w4 = NonstickyWitness(Uniform(4, 8), Subset{0, 1, 2}, Subset{3, 4, 5});
  out.push_back(w4.n0);
  out.push_back(w4.n);
  return out;
}

// Ten distinct single-element extensions of PG(3,2), the new element
// labelled `label`.
inline std::vector<Matroid> ProjectiveExtensions(const std::string& label) {
  const Matroid pg = ProjectiveSpace3(2);
  const auto points = pg.Flats(1);
  const auto lines = pg.Flats(2);
  const auto planes = pg.Flats(3);
  return {AddColoop(pg, label),
          AddFreeOnFlat(pg, pg.All(), label),
          AddFreeOnFlat(pg, Subset{}, label),
          AddFreeOnFlat(pg, points[0], label),
          AddFreeOnFlat(pg, points[7], label),
          AddFreeOnFlat(pg, lines[0], label),
          AddFreeOnFlat(pg, lines[20], label),
          AddFreeOnFlat(pg, lines[34], label),
          AddFreeOnFlat(pg, planes[0], label),
          AddFreeOnFlat(pg, planes[9], label)};
}

namespace internal {

inline Matroid RandomPrincipalChain(const Matroid& base, int steps, std::mt19937_64& rng,
                                    const std::string& prefix) {
  Matroid cur = base;
  for (int s = 0; s < steps; ++s) {
    std::uniform_int_distribution<int> pick(0, cur.NumFlats() - 1);
    cur = AddFreeOnFlat(cur, cur.Flat(pick(rng)), cur.ground().FreshLabel(prefix));
  }
  return cur;
}

inline int64_t XiViolationsOnLattice(const AmalgamContext& ctx) {
  int64_t bad = 0;
  const auto& lattice = ctx.Lattice();
  for (size_t i = 0; i < lattice.size(); ++i) {
    for (size_t j = i; j < lattice.size(); ++j) {
      const Subset &x = lattice[i], &y = lattice[j];
      if (ctx.Xi(x) + ctx.Xi(y) < ctx.Xi(x & y) + ctx.Xi(x | y)) ++bad;
    }
  }
  return bad;
}

using Clock = std::chrono::steady_clock;

inline double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace internal

inline CriterionResult AxiomSuite() {
  CriterionResult r{1, "axiom suite over the golden corpus"};
  auto start = internal::Clock::now();
  int checked = 0;
  std::ostringstream bad;
  for (const Matroid& m : GoldenCorpus()) {
    ++checked;
    auto v = CheckMatroidAxioms(m, kAcceptanceSeed, kAxiomSamples, kAxiomExhaustiveLimit);
    if (v) bad << m.name() << ": " << v->Describe(m.ground()) << "; ";
  }
  r.seconds = internal::SecondsSince(start);
  r.pass = bad.str().empty() && r.seconds < kAxiomSuiteSeconds;
  r.detail = std::to_string(checked) + " matroids" +
             (bad.str().empty() ? std::string() : ", failures: " + bad.str());
  return r;
}

inline CriterionResult EscherProperty() {
  CriterionResult r{2, "Escher property"};
  auto start = internal::Clock::now();
  std::ostringstream bad;
  for (const Matroid& m : GoldenCorpus()) {
    auto v = CheckEscher(m);
    if (!v.empty()) bad << m.name() << " has " << v.size() << "; ";
  }
  const RankTable table = EscherConfigurationTable();
  auto table_violations = CheckEscher(table, 3);
  auto all_lines = CheckEscher(table);
  r.seconds = internal::SecondsSince(start);
  r.pass = bad.str().empty() && table_violations.size() == 1;
  r.detail = "corpus violations: " + (bad.str().empty() ? std::string("none") : bad.str()) +
             "; Escher table violations on 3-point lines: " +
             std::to_string(table_violations.size()) + " (" +
             std::to_string(all_lines.size()) + " counting 2-point lines)";
  return r;
}

inline CriterionResult CrapoBijection() {
  CriterionResult r{3, "modular cuts match single-element extensions"};
  auto start = internal::Clock::now();
  std::ostringstream detail;
  bool ok = true;
  int64_t u24 = -1;
  for (const auto& [rank, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 3}, {2, 4}}) {
    Matroid m = Uniform(rank, n);
    int64_t cuts = static_cast<int64_t>(EnumerateModularCuts(m).size());
    int64_t brute = BruteExtensionCount(m);
    ok = ok && cuts == brute;
    if (rank == 2 && n == 4) u24 = cuts;
    detail << m.name() << ": " << cuts << " cuts, " << brute << " extensions; ";
  }
  r.seconds = internal::SecondsSince(start);
  r.pass = ok && u24 == 7;
  r.detail = detail.str();
  return r;
}

inline CriterionResult ModularSticky() {
  CriterionResult r{4, "amalgams of extensions of PG(3,2)"};
  auto start = internal::Clock::now();
  const auto left = ProjectiveExtensions("x");
  const auto right = ProjectiveExtensions("y");
  int pairs = 0;
  int64_t lattice_pairs = 0;
  std::ostringstream bad;
  for (size_t i = 0; i < left.size(); ++i) {
    for (size_t j = i + 1; j < right.size(); ++j) {
      ++pairs;
      auto report = ProperAmalgam(left[i], right[j]);
      AmalgamContext ctx = AmalgamContext::Build(left[i], right[j]);
      int64_t xi_bad = internal::XiViolationsOnLattice(ctx);
      lattice_pairs += int64_t{ctx.LatticeSize()} * (ctx.LatticeSize() + 1) / 2;
      bool verified = report.amalgam && VerifyAmalgam(*report.amalgam, left[i], right[j]);
      if (report.status != AmalgamStatus::kExists || !verified || xi_bad != 0) {
        bad << "(" << i << "," << j << ") " << AmalgamStatusName(report.status) << "; ";
      }
    }
  }
  r.seconds = internal::SecondsSince(start);
  r.pass = bad.str().empty() && r.seconds < kModularStickySeconds;
  r.detail = std::to_string(pairs) + " pairs, " + std::to_string(lattice_pairs) +
             " lattice pairs checked" +
             (bad.str().empty() ? std::string() : ", failures: " + bad.str());
  return r;
}

inline CriterionResult IntersectionVsErection() {
  CriterionResult r{5, "U(3,6) intersection point vs erection has no amalgam"};
  auto start = internal::Clock::now();
  auto report = ProperAmalgam(U36IntersectionPoint(), U36Erection());
  r.seconds = internal::SecondsSince(start);
  r.pass = report.status == AmalgamStatus::kFails && report.violation &&
           report.violation->Slack() <= -1;
  std::ostringstream d;
  d << "status " << AmalgamStatusName(report.status);
  if (report.violation) {
    const auto& v = *report.violation;
    d << ", X={" << report.ground.Format(v.x) << "} Y={" << report.ground.Format(v.y)
      << "} xi: " << v.xi_x << " + " << v.xi_y << " < " << v.xi_meet << " + " << v.xi_union;
  }
  r.detail = d.str();
  return r;
}

inline CriterionResult WitnessInvariants() {
  CriterionResult r{6, "witness invariants"};
  auto start = internal::Clock::now();
  std::ostringstream d;
  bool ok = true;
  struct Instance {
    Matroid m;
    Subset f, h;
  };
  for (const Instance& in : {Instance{Uniform(3, 6), Subset{0, 1}, Subset{2, 3}},
                             Instance{Uniform(4, 8), Subset{0, 1, 2}, Subset{3, 4, 5}}}) {
    WitnessBundle w = NonstickyWitness(in.m, in.f, in.h);
    int expected = in.m.Rank(in.f) - 1;
    bool here = w.delta_t == expected && w.delta_b == expected && w.AllHold();
    ok = ok && here;
    d << in.m.name() << ": delta " << w.delta_t << "/" << w.delta_b << " (expected "
      << expected << "), |N| = " << w.n.size() << ", rank " << w.n.rank()
      << (w.AllHold() ? ", invariants hold; " : ", invariant failed; ");
  }
  r.seconds = internal::SecondsSince(start);
  r.pass = ok;
  r.detail = d.str();
  return r;
}

// Small amalgam contexts (|E| <= 12) for the xi oracle.
inline std::vector<std::pair<Matroid, Matroid>> SmallContexts() {
  Matroid u24 = Uniform(2, 4);
  Matroid u36 = Uniform(3, 6);
  Matroid u35 = Uniform(3, 5);
  Matroid v8 = Vamos();
  Matroid f3 = Free(3);
  return {
      {AddFreeOnFlat(u24, u24.All(), "x"), AddFreeOnFlat(u24, Subset{0}, "y")},
      {U36IntersectionPoint(), U36Erection()},
      {AddColoop(u35, "x"), AddFreeOnFlat(u35, Subset{0, 1}, "y")},
      {AddFreeOnFlat(f3, Subset{0, 1}, "x"), AddFreeOnFlat(f3, Subset{1, 2}, "y")},
      {AddFreeOnFlat(v8, v8.Closure(Subset{0, 1}), "x"),
       AddFreeOnFlat(v8, v8.Closure(Subset{2, 3, 4}), "y")},
      {CrapoExtend(GenerateCut(u36, {Subset{0, 1}, Subset{2, 3}}), "x"),
       CrapoExtend(GenerateCut(u36, {Subset{0, 2}, Subset{1, 3}}), "y")},
  };
}

inline CriterionResult XiOracle() {
  CriterionResult r{7, "xi over lattice supersets equals brute-force minimum"};
  auto start = internal::Clock::now();
  int contexts = 0;
  int64_t subsets = 0;
  std::ostringstream bad;
  for (const auto& [m1, m2] : SmallContexts()) {
    AmalgamContext ctx = AmalgamContext::Build(m1, m2);
    if (ctx.size() > kXiOracleMaxElements) continue;
    ++contexts;
    std::vector<int> brute = BruteXi(ctx);
    for (uint32_t mask = 0; mask < brute.size(); ++mask) {
      ++subsets;
      if (ctx.Xi(Subset::FromLowWord(mask)) != brute[mask]) {
        bad << "context " << contexts << " X={"
            << ctx.ground().Format(Subset::FromLowWord(mask)) << "}; ";
        break;
      }
    }
  }
  r.seconds = internal::SecondsSince(start);
  r.pass = bad.str().empty() && contexts >= 5 && r.seconds < kXiOracleSeconds;
  r.detail = std::to_string(contexts) + " contexts, " + std::to_string(subsets) +
             " subsets" + (bad.str().empty() ? std::string() : ", mismatches: " + bad.str());
  return r;
}

inline CriterionResult Rank4EtaAnatomy() {
  CriterionResult r{8, "eta violations over rank-4 OTE common restrictions"};
  auto start = internal::Clock::now();
  const Matroid pg = ProjectiveSpace3(2);
  bool ok = IsOTE(pg) && pg.rank() == 4;
  std::vector<std::pair<Matroid, Matroid>> contexts;
  const auto left = ProjectiveExtensions("x");
  const auto right = ProjectiveExtensions("y");
  for (size_t i = 0; i < left.size(); ++i) {
    for (size_t j = i + 1; j < right.size(); ++j) contexts.emplace_back(left[i], right[j]);
  }
  std::mt19937_64 rng(kAcceptanceSeed);
  for (int c = 0; c < kRandomOteContexts; ++c) {
    contexts.emplace_back(internal::RandomPrincipalChain(pg, 1 + c % 3, rng, "x"),
                          internal::RandomPrincipalChain(pg, 1 + (c / 3) % 3, rng, "y"));
  }
  int64_t found = 0;
  std::map<std::string, int> shapes;
  for (const auto& [m1, m2] : contexts) {
    AmalgamContext ctx = AmalgamContext::Build(m1, m2);
    for (const EtaViolation& v : AnalyzeEtaViolations(ctx)) {
      ++found;
      ++shapes[v.t_shape];
      ok = ok && v.Identity() == -1 && (v.t_shape == "lines" || v.t_shape == "line-plane");
    }
  }
  r.seconds = internal::SecondsSince(start);
  r.pass = ok;
  std::ostringstream d;
  d << contexts.size() << " contexts, " << found << " eta-violating pairs";
  for (const auto& [shape, n] : shapes) d << ", " << shape << ": " << n;
  if (found == 0) d << " (no violating pair exists in these contexts)";
  r.detail = d.str();
  return r;
}

inline CriterionResult Embedding() {
  CriterionResult r{9, "rank-4 OTE embedding"};
  auto start = internal::Clock::now();
  const Matroid pg = ProjectiveSpace3(2);
  EmbeddingResult punctured = EmbedOteRank4(ProjectiveSpace3MinusPoint(2));
  EmbeddingResult full = EmbedOteRank4(pg);
  bool iso = AreIsomorphic(punctured.chain.result, pg);
  r.seconds = internal::SecondsSince(start);
  r.pass = punctured.chain.status == ChainStatus::kComplete &&
           punctured.chain.steps.size() == 1 && iso && full.chain.steps.empty() &&
           SameMatroid(full.chain.result, pg) && r.seconds < kEmbeddingSeconds;
  r.detail = "PG(3,2) minus a point: " + std::to_string(punctured.chain.steps.size()) +
             " step(s), isomorphic to PG(3,2): " + (iso ? "yes" : "no") +
             "; PG(3,2): " + std::to_string(full.chain.steps.size()) + " step(s)";
  return r;
}

inline CriterionResult NonstickyPipeline() {
  CriterionResult r{10, "non-stickiness certificates"};
  auto start = internal::Clock::now();
  auto u36 = CertifyNonsticky(Uniform(3, 6), Subset{0, 1}, Subset{2, 3});
  auto v8 = CertifyNonstickyAuto(Vamos());
  bool pg_rejected = false;
  std::string pg_message;
  try {
    CertifyNonstickyAuto(ProjectiveSpace3(2));
  } catch (const MatroidError& e) {
    pg_rejected = e.kind() == ErrorKind::kPreconditionFailed;
    pg_message = e.what();
  }
  r.seconds = internal::SecondsSince(start);
  r.pass = u36.report.status == AmalgamStatus::kFails &&
           v8.report.status == AmalgamStatus::kFails && pg_rejected;
  r.detail = std::string("U(3,6): ") + std::string(AmalgamStatusName(u36.report.status)) +
             "; V8: " + std::string(AmalgamStatusName(v8.report.status)) + " on pair {" +
             v8.input.Format(v8.f) + "} {" + v8.input.Format(v8.h) + "}; PG(3,2): " +
             (pg_rejected ? pg_message : "not rejected");
  return r;
}

inline CriterionResult BundleAndOte() {
  CriterionResult r{11, "bundle condition and OTE"};
  auto start = internal::Clock::now();
  const Matroid v8 = Vamos(), pg = ProjectiveSpace3(2), u36 = Uniform(3, 6);
  auto bv8 = BundleViolations(v8);
  auto bpg = BundleViolations(pg);
  OteCheck opg = CheckOTE(pg), ov8 = CheckOTE(v8), ou = CheckOTE(u36);
  r.seconds = internal::SecondsSince(start);
  r.pass = !bv8.empty() && bpg.empty() && opg.holds && !ov8.holds && ov8.witness &&
           !ou.holds && ou.witness;
  std::ostringstream d;
  d << "bundle violations V8 " << bv8.size() << ", PG(3,2) " << bpg.size()
    << "; OTE PG(3,2) " << opg.holds;
  if (ov8.witness) {
    d << "; V8 witness {" << v8.Format(ov8.witness->x) << "} {" << v8.Format(ov8.witness->y)
      << "}";
  }
  if (ou.witness) {
    d << "; U(3,6) witness {" << u36.Format(ou.witness->x) << "} {"
      << u36.Format(ou.witness->y) << "}";
  }
  r.detail = d.str();
  return r;
}

inline std::vector<std::function<CriterionResult()>> AcceptanceCriteria() {
  return {AxiomSuite,        EscherProperty,    CrapoBijection, ModularSticky,
          IntersectionVsErection, WitnessInvariants, XiOracle,       Rank4EtaAnatomy,
          Embedding,         NonstickyPipeline, BundleAndOte};
}

// Runs every criterion, printing one line each. Exceptions count as
// failures. Returns true when all pass.
inline bool RunAcceptance(std::ostream& out, std::vector<CriterionResult>* results = nullptr) {
  bool all = true;
  int id = 0;
  for (const auto& criterion : AcceptanceCriteria()) {
    ++id;
    CriterionResult r;
    try {
      r = criterion();
    } catch (const std::exception& e) {
      r = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what()};
    }
    all = all && r.pass;
    char seconds[32];
    std::snprintf(seconds, sizeof(seconds), "%.2fs", r.seconds);
    out << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << seconds
        << "): " << r.detail << "\n";
    out.flush();
    if (results) results->push_back(r);
  }
  return all;
}

}  // namespace matroid_lab::testing

#endif  // MATROID_LAB_TESTING_ACCEPTANCE_HPP_
