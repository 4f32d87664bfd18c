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

// Free additions, the non-stickiness witness and certificate, and
// extension chains towards OTE and hypermodular matroids.
//
// Labels of added elements: _a* (free on H), _e* (coloop), _f* (free),
// _p* and _q* (the two defect-reducing chains of the witness), _n* (the
// chain making the pair modular in a certificate), _p* in embedding chains.

#ifndef MATROID_LAB_CONSTRUCTIONS_HPP_
#define MATROID_LAB_CONSTRUCTIONS_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matroid_lab/amalgam.hpp"
#include "matroid_lab/cuts.hpp"
#include "matroid_lab/generators.hpp"
#include "matroid_lab/matroid.hpp"
#include "matroid_lab/modularity.hpp"
#include "matroid_lab/rank_table.hpp"

namespace matroid_lab {

inline Matroid AddFreeOnFlat(const Matroid& m, const Subset& f, const std::string& label) {
  return CrapoExtend(PrincipalCut(m, f), label);
}

inline Matroid AddColoop(const Matroid& m, const std::string& label) {
  return CrapoExtend(ModularCut(m), label);
}

struct InvariantCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct WitnessBundle {
  Matroid m;
  Subset f;
  Subset h;
  std::vector<std::string> a;
  std::string e;
  std::string free_label;
  // The four rank-r sets of N0, as labels.
  std::vector<std::string> t1, t2, b1, b2;
  std::vector<std::string> p, q;
  Matroid n0;
  Matroid n;
  int delta_t = 0;  // defect of (T1, T2) in N0
  int delta_b = 0;  // defect of (B1, B2) in N0
  ExtensionChain chain_t;
  ExtensionChain chain_b;
  std::vector<InvariantCheck> checks;

  bool AllHold() const {
    for (const auto& c : checks) {
      if (!c.holds) return false;
    }
    return true;
  }
};

namespace internal {

inline Subset LabelsIn(const Matroid& m, const std::vector<std::string>& labels) {
  Subset s;
  for (const std::string& l : labels) s.Insert(*m.ground().IndexOf(l));
  return s;
}

inline void RequireFlatOf(const Matroid& m, const Subset& f, const char* what) {
  if (!m.IsFlat(f)) Precondition(std::string(what) + " {" + m.Format(f) + "} is not a flat");
}

}  // namespace internal

// Erects a Vamos-type configuration above the disjoint non-modular pair
// (F, H), H a hyperplane: A freely on H (|A| = r - 1 - r(F)), a coloop e
// and a free f give N0; then (T1, T2) and (B1, B2) are made modular by
// defect-reducing chains adding P and Q.
inline WitnessBundle NonstickyWitness(const Matroid& m, const Subset& f, const Subset& h) {
  internal::RequireFlatOf(m, f, "F");
  internal::RequireFlatOf(m, h, "H");
  const int r = m.rank();
  const int rf = m.Rank(f);
  if (r < 3) internal::Precondition("rank must be at least 3");
  if (m.Rank(h) != r - 1) internal::Precondition("H is not a hyperplane");
  if (f.Intersects(h)) internal::Precondition("F and H are not disjoint");
  if (rf < 2 || rf > r - 1) internal::Precondition("need 2 <= r(F) <= r - 1");
  if (ModularDefect(m, f, h) == 0) internal::Precondition("F and H form a modular pair");

  WitnessBundle w;
  w.m = m;
  w.f = f;
  w.h = h;
  Matroid cur = m;
  Subset h_cur = h;
  for (int i = 0; i < r - 1 - rf; ++i) {
    std::string label = cur.ground().FreshLabel("_a");
    cur = AddFreeOnFlat(cur, cur.Closure(h_cur), label);
    h_cur.Insert(*cur.ground().IndexOf(label));
    w.a.push_back(label);
  }
  w.e = cur.ground().FreshLabel("_e");
  cur = AddColoop(cur, w.e);
  w.free_label = cur.ground().FreshLabel("_f");
  cur = AddFreeOnFlat(cur, cur.All(), w.free_label);
  w.n0 = cur.WithName(m.name().empty() ? "N0" : m.name() + ":N0");

  const auto f_labels = m.ground().Labels(f);
  const auto h_labels = m.ground().Labels(h);
  auto join = [](std::vector<std::string> x, const std::vector<std::string>& y,
                 const std::string& z) {
    x.insert(x.end(), y.begin(), y.end());
    x.push_back(z);
    return x;
  };
  w.t1 = join(f_labels, w.a, w.e);
  w.t2 = join(h_labels, w.a, w.e);
  w.b1 = join(f_labels, w.a, w.free_label);
  w.b2 = join(h_labels, w.a, w.free_label);

  const Matroid& n0 = w.n0;
  auto in_n0 = [&](const std::vector<std::string>& l) { return internal::LabelsIn(n0, l); };
  w.delta_t = ModularDefect(n0, in_n0(w.t1), in_n0(w.t2));
  w.delta_b = ModularDefect(n0, in_n0(w.b1), in_n0(w.b2));

  w.chain_t = ReduceDefectChain(n0, in_n0(w.t1), in_n0(w.t2), "_p");
  const Matroid& n1 = w.chain_t.result;
  w.chain_b = ReduceDefectChain(n1, internal::LabelsIn(n1, w.b1),
                                internal::LabelsIn(n1, w.b2), "_q");
  w.p = w.chain_t.Added();
  w.q = w.chain_b.Added();
  w.n = w.chain_b.result.WithName(m.name().empty() ? "N" : m.name() + ":N");

  // Invariants.
  const Matroid& n = w.n;
  auto in_n = [&](const std::vector<std::string>& l) { return internal::LabelsIn(n, l); };
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    w.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  add("rank(N0) = r + 1", n0.rank() == r + 1, std::to_string(n0.rank()));
  {
    Subset h_n0 = TranslateSubset(m.ground(), h, n0.ground()) | in_n0(w.a);
    add("cl_N0(H) = H u A", n0.Closure(TranslateSubset(m.ground(), h, n0.ground())) == h_n0);
  }
  add("delta_N0(T1,T2) = r(F) - 1", w.delta_t == rf - 1, std::to_string(w.delta_t));
  add("delta_N0(B1,B2) = r(F) - 1", w.delta_b == rf - 1, std::to_string(w.delta_b));
  add("|P| = |Q| = r(F) - 1",
      static_cast<int>(w.p.size()) == rf - 1 && static_cast<int>(w.q.size()) == rf - 1);
  add("chains complete", w.chain_t.status == ChainStatus::kComplete &&
                             w.chain_b.status == ChainStatus::kComplete,
      w.chain_t.note + w.chain_b.note);
  const Subset ct1 = n.Closure(in_n(w.t1)), ct2 = n.Closure(in_n(w.t2));
  const Subset cb1 = n.Closure(in_n(w.b1)), cb2 = n.Closure(in_n(w.b2));
  add("(cl_N(T1), cl_N(T2)) modular", ModularDefect(n, ct1, ct2) == 0);
  add("(cl_N(B1), cl_N(B2)) modular", ModularDefect(n, cb1, cb2) == 0);
  add("P inside cl_N(T1) n cl_N(T2)", in_n(w.p).IsSubsetOf(ct1 & ct2));
  add("Q inside cl_N(B1) n cl_N(B2)", in_n(w.q).IsSubsetOf(cb1 & cb2));
  {
    Subset fn = n.Closure(TranslateSubset(m.ground(), f, n.ground()));
    Subset hn = n.Closure(TranslateSubset(m.ground(), h, n.ground()));
    add("(cl_N(F), cl_N(H)) not modular", ModularDefect(n, fn, hn) > 0);
  }
  return w;
}

struct NonstickyCertificate {
  Matroid input;
  // Elements contracted (F n H, as labels of the input); empty if none.
  std::vector<std::string> contracted;
  Matroid base;  // input, or its contraction by F n H
  Subset f;      // in base
  Subset h;      // in base
  ExtensionChain n1_chain;
  WitnessBundle witness;
  SubmodularityReport report;
};

// Proper amalgam of N1 (where (F, H) has been made modular) and the witness
// N of (F, H). The expected outcome is kFails; its violating pair is the
// certificate.
inline NonstickyCertificate CertifyNonsticky(const Matroid& m, const Subset& f,
                                             const Subset& h,
                                             const AmalgamOptions& options = {}) {
  internal::RequireFlatOf(m, f, "F");
  internal::RequireFlatOf(m, h, "H");
  if (m.Rank(h) != m.rank() - 1) internal::Precondition("H is not a hyperplane");
  if (ModularDefect(m, f, h) == 0) {
    internal::Precondition("F and H form a modular pair; no intersectable pair given");
  }
  if (!IsIntersectable(m, f, h)) internal::Precondition("F and H are not intersectable");
  NonstickyCertificate cert;
  cert.input = m;
  cert.base = m;
  cert.f = f;
  cert.h = h;
  const Subset meet = f & h;
  if (!meet.Empty()) {
    cert.contracted = m.ground().Labels(meet);
    cert.base = Contract(m, meet);
    cert.f = TranslateSubset(m.ground(), f - meet, cert.base.ground());
    cert.h = TranslateSubset(m.ground(), h - meet, cert.base.ground());
  }
  cert.n1_chain = ReduceDefectChain(cert.base, cert.f, cert.h, "_n");
  if (cert.n1_chain.status != ChainStatus::kComplete) {
    internal::Precondition("could not make the pair modular: " + cert.n1_chain.note);
  }
  cert.witness = NonstickyWitness(cert.base, cert.f, cert.h);
  cert.report = ProperAmalgam(cert.n1_chain.result.WithName("N1"),
                              cert.witness.n.WithName("N2"), options);
  return cert;
}

// As above with the pair chosen by MinMaxPair.
inline NonstickyCertificate CertifyNonstickyAuto(const Matroid& m,
                                                 const AmalgamOptions& options = {}) {
  IntersectablePair pair;
  try {
    pair = MinMaxPair(m);
  } catch (const MatroidError& e) {
    if (e.kind() != ErrorKind::kIsOTE) throw;
    internal::Precondition("no intersectable non-modular pair: the matroid is OTE");
  }
  return CertifyNonsticky(m, pair.x, pair.y, options);
}

// Trace check: every line (plane) of `cur` meeting the
// original elements restricts to a line (plane) of `m`.
inline std::optional<std::string> TraceCheck(const Matroid& m, const Matroid& cur) {
  for (int k : {2, 3}) {
    if (k > cur.rank()) break;
    for (const Subset& flat : cur.Flats(k)) {
      Subset trace = TranslateSubset(cur.ground(), flat, m.ground());
      if (trace.Empty()) continue;
      auto idx = m.FlatIndex(trace);
      if (!idx || m.FlatRank(*idx) != k) {
        return "rank-" + std::to_string(k) + " flat {" + cur.Format(flat) +
               "} restricts to {" + m.Format(trace) + "}";
      }
    }
  }
  return std::nullopt;
}

struct EmbeddingResult {
  ExtensionChain chain;
  bool result_is_ote = false;
  bool result_is_hypermodular = false;
  bool input_bundle_condition = false;
  bool result_is_modular = false;
  int pairs_listed = 0;
  // First trace-check failure along the chain, if any.
  std::optional<std::string> trace_problem;
};

// One pass over the disjoint coplanar line pairs of the input: each pair
// still intersectable in the current matroid is intersected via its
// generated cut.
inline EmbeddingResult EmbedOteRank4(const Matroid& m) {
  internal::RequireHypermodularRank4(m);
  EmbeddingResult out;
  out.chain.base = m;
  const auto pairs = CoplanarDisjointLinePairs(m);
  out.pairs_listed = static_cast<int>(pairs.size());
  Matroid cur = m;
  for (const FlatPair& pair : pairs) {
    Subset x = cur.Closure(TranslateSubset(m.ground(), pair.x, cur.ground()));
    Subset y = cur.Closure(TranslateSubset(m.ground(), pair.y, cur.ground()));
    int before = ModularDefect(cur, x, y);
    if (before == 0 || !IsIntersectable(cur, x, y)) continue;
    ModularCut cut = GenerateCut(cur, {x, y});
    std::string label = cur.ground().FreshLabel("_p");
    Matroid next = CrapoExtend(cut, label);
    Subset xn = next.Closure(TranslateSubset(cur.ground(), x, next.ground()));
    Subset yn = next.Closure(TranslateSubset(cur.ground(), y, next.ground()));
    out.chain.steps.push_back(ExtensionStep{{cur.ground().Labels(x), cur.ground().Labels(y)},
                                            cut, label, before, ModularDefect(next, xn, yn)});
    cur = next;
    if (!out.trace_problem) out.trace_problem = TraceCheck(m, cur);
  }
  out.chain.result = cur;
  out.result_is_hypermodular = IsHypermodular(cur);
  out.result_is_ote = IsOTE(cur);
  out.input_bundle_condition = BundleViolations(m).empty();
  out.result_is_modular = IsModular(cur);
  out.chain.status = ChainStatus::kComplete;
  if (cur.rank() != 4 || !out.result_is_hypermodular || !out.result_is_ote) {
    out.chain.status = ChainStatus::kStoppedEarly;
    out.chain.note = "single pass did not reach a hypermodular rank-4 OTE matroid";
  } else if (out.input_bundle_condition && !out.result_is_modular) {
    out.chain.status = ChainStatus::kStoppedEarly;
    out.chain.note = "bundle condition holds but the result is not modular";
  }
  return out;
}

struct BudgetedResult {
  ExtensionChain chain;
  // Number of target pairs handled (each extended until modular or stuck).
  int pairs_handled = 0;
  // A pair still to handle when the budget ran out.
  std::optional<IntersectablePair> remaining;
};

namespace internal {

// Shared driver. `find_target` returns the first target pair of the current
// matroid (or nullopt when done); the pair is extended via its generated cut
// until its defect stops decreasing or the budget is spent, then the search
// restarts. Pairs are never materialized in bulk.
template <class FindTarget>
BudgetedResult RunBudgeted(const Matroid& m, int budget, FindTarget&& find_target) {
  if (budget < 0) {
    throw MatroidError(ErrorKind::kUnsupportedParam, "budget must be non-negative");
  }
  BudgetedResult out;
  out.chain.base = m;
  Matroid cur = m;
  int used = 0;
  while (true) {
    std::optional<IntersectablePair> target = find_target(cur);
    if (!target) {
      out.chain.status = ChainStatus::kComplete;
      break;
    }
    if (used >= budget) {
      out.chain.status = ChainStatus::kPartial;
      out.remaining = target;
      break;
    }
    ++out.pairs_handled;
    const auto xl = cur.ground().Labels(target->x);
    const auto yl = cur.ground().Labels(target->y);
    while (used < budget) {
      Subset x = cur.Closure(LabelsIn(cur, xl));
      Subset y = cur.Closure(LabelsIn(cur, yl));
      int before = ModularDefect(cur, x, y);
      if (before == 0 || !IsIntersectable(cur, x, y)) break;
      ModularCut cut = GenerateCut(cur, {x, y});
      std::string label = cur.ground().FreshLabel("_p");
      Matroid next = CrapoExtend(cut, label);
      Subset xn = next.Closure(TranslateSubset(cur.ground(), x, next.ground()));
      Subset yn = next.Closure(TranslateSubset(cur.ground(), y, next.ground()));
      int after = ModularDefect(next, xn, yn);
      out.chain.steps.push_back(ExtensionStep{
          {cur.ground().Labels(x), cur.ground().Labels(y)}, cut, label, before, after});
      cur = next;
      ++used;
      if (after >= before) break;
    }
  }
  out.chain.result = cur;
  out.chain.note = std::to_string(used) + " of " + std::to_string(budget) + " steps used";
  return out;
}

inline std::optional<IntersectablePair> FirstNonModularHyperplanePair(const Matroid& m) {
  if (m.rank() < 1) return std::nullopt;
  auto hyperplanes = m.Flats(m.rank() - 1);
  for (size_t a = 0; a < hyperplanes.size(); ++a) {
    for (size_t b = a + 1; b < hyperplanes.size(); ++b) {
      int d = ModularDefect(m, hyperplanes[a], hyperplanes[b]);
      if (d > 0) return IntersectablePair{hyperplanes[a], hyperplanes[b], d};
    }
  }
  return std::nullopt;
}

}  // namespace internal

// Repeatedly intersects the first intersectable non-modular pair; complete
// once the matroid is OTE.
inline BudgetedResult EmbedOteGeneral(const Matroid& m, int budget, int threads = 1) {
  return internal::RunBudgeted(
      m, budget, [threads](const Matroid& cur) { return FindIntersectablePair(cur, threads); });
}

// As EmbedOteGeneral restricted to non-modular hyperplane pairs (always
// intersectable); complete once the matroid is hypermodular.
inline BudgetedResult HypermodularCompletion(const Matroid& m, int budget) {
  return internal::RunBudgeted(m, budget, internal::FirstNonModularHyperplanePair);
}

// The witness N for U(3,6) with F = {a,b}, H = {c,d}.
inline Matroid U36Erection() {
  Matroid u = Uniform(3, 6);
  return NonstickyWitness(u, Subset{0, 1}, Subset{2, 3}).n.WithName("figure1-erection");
}

// The extension of U(3,6) in which the lines {a,b} and {c,d} meet.
inline Matroid U36IntersectionPoint() {
  Matroid u = Uniform(3, 6);
  return CrapoExtend(GenerateCut(u, {Subset{0, 1}, Subset{2, 3}}), "_n1")
      .WithName("u36-intersection");
}

// Rank table of the Escher configuration on a b c d p e f g: lines abp,
// cdp and efg, pairwise coplanar in abcdp, abpefg and cdpefg, spanning
// rank 4. Not a matroid.
inline RankTable EscherConfigurationTable() {
  GroundSet g(std::vector<std::string>{"a", "b", "c", "d", "p", "e", "f", "g"});
  const std::vector<std::pair<std::string, int>> closed = {
      {"a b p", 2}, {"c d p", 2}, {"e f g", 2},
      {"a b c d p", 3}, {"a b p e f g", 3}, {"c d p e f g", 3}};
  std::vector<std::pair<uint32_t, int>> masks;
  for (const auto& [labels, rank] : closed) {
    masks.emplace_back(static_cast<uint32_t>(g.Parse(labels).LowWord()), rank);
  }
  RankTable t{g, std::vector<int>(size_t{1} << g.size())};
  for (uint32_t x = 0; x < t.rank.size(); ++x) {
    int r = std::min(std::popcount(x), 4);
    for (const auto& [mask, rank] : masks) {
      if ((x & ~mask) == 0) r = std::min(r, rank);
    }
    t.rank[x] = r;
  }
  return t;
}

// Named families: uniform r n, free n, vamos, pg3 q, pg3-minus-point q,
// figure1-erection, u36-intersection.
inline Matroid GenNamed(const std::string& family, const std::vector<int>& params) {
  auto need = [&](size_t k) {
    if (params.size() != k) {
      throw MatroidError(ErrorKind::kUnsupportedParam,
                         family + " takes " + std::to_string(k) + " parameter(s)");
    }
  };
  if (family == "uniform") {
    need(2);
    return Uniform(params[0], params[1]);
  }
  if (family == "free") {
    need(1);
    if (params[0] < 0) throw MatroidError(ErrorKind::kUnsupportedParam, "n < 0");
    return Free(params[0]);
  }
  if (family == "vamos") {
    need(0);
    return Vamos();
  }
  if (family == "pg3") {
    need(1);
    return ProjectiveSpace3(params[0]);
  }
  if (family == "pg3-minus-point") {
    need(1);
    return ProjectiveSpace3MinusPoint(params[0]);
  }
  if (family == "figure1-erection") {
    need(0);
    return U36Erection();
  }
  if (family == "u36-intersection") {
    need(0);
    return U36IntersectionPoint();
  }
  throw MatroidError(ErrorKind::kUnknownFamily, "unknown family '" + family + "'");
}

}  // namespace matroid_lab

#endif  // MATROID_LAB_CONSTRUCTIONS_HPP_
