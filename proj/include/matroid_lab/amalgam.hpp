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

// Amalgams of two extensions M1, M2 of a common restriction M on T.
//
// With E = E1 u E2 and T = E1 n E2:
//   eta(X) = r1(X n E1) + r2(X n E2) - r(X n T)
//   xi(X)  = min { eta(Y) : Y in L, Y contains X }
// where L is the lattice of sets whose traces on E1 and E2 are flats. When
// xi is submodular it is the rank function of the proper amalgam.

#ifndef MATROID_LAB_AMALGAM_HPP_
#define MATROID_LAB_AMALGAM_HPP_

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "matroid_lab/cuts.hpp"
#include "matroid_lab/matroid.hpp"
#include "matroid_lab/modularity.hpp"
#include "matroid_lab/parallel.hpp"
#include "matroid_lab/rank_table.hpp"

namespace matroid_lab {

class AmalgamContext {
 public:
  // Elements of E are those of M1 in order, then those of M2 outside T in
  // order, so a subset of E restricted to E1 is literally a subset of M1.
  static AmalgamContext Build(const Matroid& m1, const Matroid& m2) {
    std::vector<std::string> t_labels;
    for (const std::string& label : m1.ground().labels()) {
      if (m2.ground().Contains(label)) t_labels.push_back(label);
    }
    if (t_labels.empty()) {
      throw MatroidError(ErrorKind::kPreconditionFailed,
                         "the two matroids share no elements");
    }
    Matroid common = RestrictToLabels(m1, t_labels);
    Matroid other = RestrictToLabels(m2, t_labels);
    if (auto diff = FirstFlatDifference(common, other)) {
      throw MatroidError(ErrorKind::kRestrictionMismatch,
                         "restrictions to the common elements differ at " + *diff);
    }
    if (auto diff = FirstFlatDifference(other, common)) {
      throw MatroidError(ErrorKind::kRestrictionMismatch,
                         "restrictions to the common elements differ at " + *diff);
    }
    std::vector<std::string> labels = m1.ground().labels();
    for (const std::string& label : m2.ground().labels()) {
      if (!m1.ground().Contains(label)) labels.push_back(label);
    }
    AmalgamContext ctx;
    ctx.m1_ = m1;
    ctx.m2_ = m2;
    ctx.common_ = common.WithName("M");
    ctx.ground_ = GroundSet(std::move(labels));
    ctx.e1_ = Subset::Range(m1.size());
    ctx.e2_of_m2_.resize(m2.size());
    for (int i = 0; i < m2.size(); ++i) {
      int e = *ctx.ground_.IndexOf(m2.ground().label(i));
      ctx.e2_of_m2_[i] = e;
      ctx.e2_.Insert(e);
    }
    ctx.t_ = ctx.e1_ & ctx.e2_;
    ctx.BuildLattice();
    return ctx;
  }

  const Matroid& m1() const { return m1_; }
  const Matroid& m2() const { return m2_; }
  const Matroid& common() const { return common_; }
  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  Subset e1() const { return e1_; }
  Subset e2() const { return e2_; }
  Subset t() const { return t_; }

  // Members of L in (M1 flat, M2 flat) index order.
  const std::vector<Subset>& Lattice() const { return lattice_; }
  int LatticeSize() const { return static_cast<int>(lattice_.size()); }
  int LatticeEta(int i) const { return lattice_eta_[i]; }

  Subset ToM2(const Subset& x) const {
    Subset out;
    for (int i = 0; i < m2_.size(); ++i) {
      if (x.Contains(e2_of_m2_[i])) out.Insert(i);
    }
    return out;
  }
  Subset FromM2(const Subset& x) const {
    Subset out;
    x.ForEach([&](int i) { out.Insert(e2_of_m2_[i]); });
    return out;
  }

  int R1(const Subset& x) const { return m1_.Rank(x & e1_); }
  int R2(const Subset& x) const { return m2_.Rank(ToM2(x)); }
  int RT(const Subset& x) const { return m1_.Rank(x & t_); }

  int Eta(const Subset& x) const { return R1(x) + R2(x) - RT(x); }

  bool InLattice(const Subset& x) const {
    return m1_.IsFlat(x & e1_) && m2_.IsFlat(ToM2(x));
  }

  int Xi(const Subset& x) const {
    {
      std::lock_guard<std::mutex> lock(memo_->mu);
      auto it = memo_->xi.find(x);
      if (it != memo_->xi.end()) return it->second;
    }
    int value = -1;
    for (int i : by_eta_) {
      if (x.IsSubsetOf(lattice_[i])) {
        value = lattice_eta_[i];
        break;
      }
    }
    std::lock_guard<std::mutex> lock(memo_->mu);
    memo_->xi.emplace(x, value);
    return value;
  }

  Subset Meet(const Subset& x, const Subset& y) const {
    RequireInLattice(x);
    RequireInLattice(y);
    return x & y;
  }

  // Least member of L containing X u Y: alternate phi1 and phi2 to a
  // fixpoint, starting with phi1.
  Subset Join(const Subset& x, const Subset& y) const {
    RequireInLattice(x);
    RequireInLattice(y);
    return LeastLatticeSuperset(x | y);
  }

  Subset LeastLatticeSuperset(const Subset& x) const {
    Subset z = x;
    while (true) {
      Subset z1 = m1_.Closure(z & e1_) | (z & e2_);
      Subset z2 = (z1 & e1_) | FromM2(m2_.Closure(ToM2(z1)));
      if (z2 == z) return z;
      z = z2;
    }
  }

 private:
  struct Memo {
    std::mutex mu;
    std::unordered_map<Subset, int, SubsetHash> xi;
  };

  AmalgamContext() : memo_(std::make_shared<Memo>()) {}

  void RequireInLattice(const Subset& x) const {
    if (!InLattice(x)) {
      throw MatroidError(ErrorKind::kNotInLattice,
                         "{" + ground_.Format(x) + "} is not in the lattice");
    }
  }

  void BuildLattice() {
    // Group M2 flats by their trace on T (as E subsets).
    std::unordered_map<Subset, std::vector<int>, SubsetHash> by_trace;
    for (int f = 0; f < m2_.NumFlats(); ++f) {
      by_trace[FromM2(m2_.Flat(f)) & t_].push_back(f);
    }
    for (int f1 = 0; f1 < m1_.NumFlats(); ++f1) {
      const Subset& a = m1_.Flat(f1);
      auto it = by_trace.find(a & t_);
      if (it == by_trace.end()) continue;
      for (int f2 : it->second) {
        lattice_.push_back(a | FromM2(m2_.Flat(f2)));
        lattice_eta_.push_back(m1_.FlatRank(f1) + m2_.FlatRank(f2) - m1_.Rank(a & t_));
      }
    }
    by_eta_.resize(lattice_.size());
    std::iota(by_eta_.begin(), by_eta_.end(), 0);
    std::stable_sort(by_eta_.begin(), by_eta_.end(), [&](int a, int b) {
      return lattice_eta_[a] < lattice_eta_[b];
    });
  }

  Matroid m1_, m2_, common_;
  GroundSet ground_;
  Subset e1_, e2_, t_;
  std::vector<int> e2_of_m2_;
  std::vector<Subset> lattice_;
  std::vector<int> lattice_eta_;
  std::vector<int> by_eta_;
  std::shared_ptr<Memo> memo_;
};

enum class AmalgamStatus { kExists, kFails, kInconclusive };

inline std::string_view AmalgamStatusName(AmalgamStatus s) {
  switch (s) {
    case AmalgamStatus::kExists: return "exists";
    case AmalgamStatus::kFails: return "fails";
    case AmalgamStatus::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

// xi(X) + xi(Y) < xi(X n Y) + xi(X u Y), with the four values.
struct XiViolation {
  Subset x;
  Subset y;
  int xi_x = 0;
  int xi_y = 0;
  int xi_meet = 0;
  int xi_union = 0;
  // Negative for a genuine violation.
  int Slack() const { return xi_x + xi_y - xi_meet - xi_union; }
};

struct SubmodularityReport {
  AmalgamStatus status = AmalgamStatus::kInconclusive;
  GroundSet ground;
  int lattice_size = 0;
  int64_t pairs_checked = 0;
  // L-pairs where eta fails the inequality but xi satisfies it.
  int64_t eta_only_violations = 0;
  std::optional<XiViolation> violation;
  std::optional<Matroid> amalgam;
  bool brute_checked = false;
  // Set when the amalgam does not exist although the common restriction is
  // a rank-4 OTE matroid, where existence is expected.
  bool unexpected_for_rank4_ote = false;
  std::string note;
};

struct AmalgamOptions {
  int threads = 1;
  // Re-check xi on every pair of subsets when |E| <= brute_bound.
  bool brute_check = false;
  int brute_bound = 12;
};

inline bool VerifyAmalgam(const Matroid& a, const Matroid& m1, const Matroid& m2) {
  for (const Matroid* m : {&m1, &m2}) {
    for (const std::string& label : m->ground().labels()) {
      if (!a.ground().Contains(label)) return false;
    }
  }
  for (const std::string& label : a.ground().labels()) {
    if (!m1.ground().Contains(label) && !m2.ground().Contains(label)) return false;
  }
  return SameMatroid(RestrictToLabels(a, m1.ground().labels()), m1) &&
         SameMatroid(RestrictToLabels(a, m2.ground().labels()), m2);
}

namespace internal {

inline XiViolation XiPair(const AmalgamContext& ctx, const Subset& x, const Subset& y) {
  return {x, y, ctx.Xi(x), ctx.Xi(y), ctx.Xi(x & y), ctx.Xi(x | y)};
}

inline bool EtaSubmodularOn(const AmalgamContext& ctx, const Subset& x, const Subset& y) {
  return ctx.Eta(x) + ctx.Eta(y) >= ctx.Eta(x & y) + ctx.Eta(x | y);
}

inline void FlagRank4Ote(const AmalgamContext& ctx, SubmodularityReport& report) {
  const Matroid& common = ctx.common();
  if (common.rank() == 4 && IsOTE(common)) {
    report.unexpected_for_rank4_ote = true;
    if (!report.note.empty()) report.note += "; ";
    report.note += "unexpected: the common restriction is a rank-4 OTE matroid";
  }
}

}  // namespace internal

// Sweeps L x L (pairs i <= j in lattice order) for pairs where neither eta
// nor xi is submodular and stops at the first. Without such a pair xi is
// submodular everywhere and the amalgam is built from it and verified.
inline SubmodularityReport ProperAmalgam(const Matroid& m1, const Matroid& m2,
                                         const AmalgamOptions& options = {}) {
  AmalgamContext ctx = AmalgamContext::Build(m1, m2);
  SubmodularityReport report;
  report.ground = ctx.ground();
  report.lattice_size = ctx.LatticeSize();
  const auto& lattice = ctx.Lattice();
  const int64_t n = ctx.LatticeSize();

  std::vector<int64_t> eta_only(n, 0), checked(n, 0);
  std::vector<int> hit_column(n, -1);
  int64_t hit_row = ParallelFindFirst(n, options.threads, [&](int64_t i) {
    for (int64_t j = i; j < n; ++j) {
      ++checked[i];
      if (internal::EtaSubmodularOn(ctx, lattice[i], lattice[j])) continue;
      if (internal::XiPair(ctx, lattice[i], lattice[j]).Slack() >= 0) {
        ++eta_only[i];
        continue;
      }
      hit_column[i] = static_cast<int>(j);
      return true;
    }
    return false;
  });
  const int64_t rows = hit_row < 0 ? n : hit_row + 1;
  for (int64_t i = 0; i < rows; ++i) {
    report.pairs_checked += checked[i];
    report.eta_only_violations += eta_only[i];
  }
  if (hit_row >= 0) {
    report.status = AmalgamStatus::kFails;
    report.violation = internal::XiPair(ctx, lattice[hit_row], lattice[hit_column[hit_row]]);
    internal::FlagRank4Ote(ctx, report);
    return report;
  }

  auto xi = [&](const Subset& s) { return ctx.Xi(s); };
  try {
    std::string name = "amalgam(" + m1.name() + "," + m2.name() + ")";
    report.amalgam = Matroid::FromRankFunction(ctx.ground(), xi, name);
  } catch (const MatroidError& e) {
    report.status = AmalgamStatus::kInconclusive;
    report.note = std::string("xi does not define a matroid: ") + e.what();
    internal::FlagRank4Ote(ctx, report);
    return report;
  }
  if (!VerifyAmalgam(*report.amalgam, m1, m2)) {
    report.status = AmalgamStatus::kInconclusive;
    report.note = "xi matroid does not restrict to both extensions";
    report.amalgam.reset();
    internal::FlagRank4Ote(ctx, report);
    return report;
  }
  report.status = AmalgamStatus::kExists;
  if (options.brute_check && ctx.size() <= options.brute_bound) {
    report.brute_checked = true;
    RankTable table{ctx.ground(), std::vector<int>(size_t{1} << ctx.size())};
    for (uint32_t mask = 0; mask < table.rank.size(); ++mask) {
      table.rank[mask] = ctx.Xi(Subset::FromLowWord(mask));
    }
    if (auto v = CheckRankAxioms(table)) {
      report.status = AmalgamStatus::kFails;
      report.violation = internal::XiPair(ctx, v->x, v->y);
      report.amalgam.reset();
      report.note = "exhaustive check found " + v->Describe(ctx.ground());
      internal::FlagRank4Ote(ctx, report);
    }
  } else if (options.brute_check) {
    report.note = "exhaustive check skipped: |E| = " + std::to_string(ctx.size()) +
                  " exceeds " + std::to_string(options.brute_bound);
  }
  return report;
}

// Anatomy of an L-pair on which eta is not submodular.
struct EtaViolation {
  Subset x;
  Subset y;
  int defect1 = 0;  // defect of the traces on E1 in M1
  int defect2 = 0;  // defect of the traces on E2 in M2
  int defect_t = 0;  // defect of the traces on T in M
  std::string t_shape;  // "lines", "line-plane" or "other"
  bool xi_equals_eta = false;  // on both X and Y

  int Identity() const { return defect1 + defect2 - defect_t; }
};

inline std::string ClassifyTracePair(const Matroid& m, const Subset& a, const Subset& b) {
  if (a.Intersects(b)) return "other";
  const int ra = m.Rank(a), rb = m.Rank(b);
  const bool flats = m.IsFlat(a) && m.IsFlat(b);
  if (flats && ra == 2 && rb == 2 && m.Rank(a | b) == 3) return "lines";
  if (flats && ((ra == 2 && rb == 3) || (ra == 3 && rb == 2))) return "line-plane";
  return "other";
}

inline std::vector<EtaViolation> AnalyzeEtaViolations(const AmalgamContext& ctx) {
  std::vector<EtaViolation> out;
  const auto& lattice = ctx.Lattice();
  const Matroid& m = ctx.common();
  for (size_t i = 0; i < lattice.size(); ++i) {
    for (size_t j = i; j < lattice.size(); ++j) {
      const Subset &x = lattice[i], &y = lattice[j];
      if (internal::EtaSubmodularOn(ctx, x, y)) continue;
      EtaViolation v;
      v.x = x;
      v.y = y;
      v.defect1 = ModularDefect(ctx.m1(), x & ctx.e1(), y & ctx.e1());
      v.defect2 = ModularDefect(ctx.m2(), ctx.ToM2(x), ctx.ToM2(y));
      const Subset xt = TranslateSubset(ctx.ground(), x & ctx.t(), m.ground());
      const Subset yt = TranslateSubset(ctx.ground(), y & ctx.t(), m.ground());
      v.defect_t = ModularDefect(m, xt, yt);
      v.t_shape = ClassifyTracePair(m, xt, yt);
      v.xi_equals_eta = ctx.Xi(x) == ctx.Eta(x) && ctx.Xi(y) == ctx.Eta(y);
      out.push_back(v);
    }
  }
  return out;
}

// A pair (X, Y) in an extension of a rank-4 matroid that meets the
// hypotheses under which such pairs cannot be modular, yet is modular.
struct ExclusionViolation {
  Subset x;
  Subset y;
  std::string shape;  // "lines" or "line-plane"
};

struct ExclusionReport {
  int64_t examined = 0;
  bool exhaustive = false;
  std::vector<ExclusionViolation> violations;
};

struct ExclusionOptions {
  int64_t samples = 10'000;
  uint64_t seed = 1;
  int exhaustive_limit = 10;
};

// Property harness for extensions of a rank-4 OTE matroid. Candidate pairs
// are X = tX u G u ZX, Y = tY u G u ZY with G a flat of the extension
// disjoint from T (so X n Y = G) and ZX, ZY disjoint sets outside T u G;
// (tX, tY) is a disjoint coplanar line pair of M, or a plane and a disjoint
// line meeting the rank hypothesis of the line-plane case.
inline ExclusionReport ModularPairExclusionCheck(const Matroid& m, const Matroid& ext,
                                                 const ExclusionOptions& options = {}) {
  if (m.rank() != 4) internal::Precondition("base matroid must have rank 4");
  if (!IsOTE(m)) internal::Precondition("base matroid is not OTE");
  for (const std::string& label : m.ground().labels()) {
    if (!ext.ground().Contains(label)) {
      internal::Precondition("'" + label + "' missing from the extension");
    }
  }
  if (auto diff = FirstFlatDifference(m, RestrictToLabels(ext, m.ground().labels()))) {
    internal::Precondition("not an extension: " + *diff);
  }
  const GroundSet& g = ext.ground();
  const Subset t = TranslateSubset(m.ground(), m.All(), g);
  const Subset outside = ext.All() - t;
  auto lift = [&](const Subset& s) { return TranslateSubset(m.ground(), s, g); };

  struct Shape {
    Subset tx, ty;
    std::string name;
  };
  std::vector<Shape> shapes;
  for (const FlatPair& p : CoplanarDisjointLinePairs(m)) {
    shapes.push_back({lift(p.x), lift(p.y), "lines"});
    shapes.push_back({lift(p.y), lift(p.x), "lines"});
  }
  auto lines = Lines(m);
  for (const Subset& plane : m.Flats(3)) {
    for (const Subset& line : lines) {
      if (!plane.Intersects(line)) shapes.push_back({lift(plane), lift(line), "line-plane"});
    }
  }
  std::vector<Subset> bases_g;
  for (int f = 0; f < ext.NumFlats(); ++f) {
    if (!ext.Flat(f).Intersects(t)) bases_g.push_back(ext.Flat(f));
  }

  // Whether the hypotheses hold for (X, Y) with X n Y = G.
  auto applicable = [&](const Shape& s, const Subset& x, const Subset& y,
                        const Subset& gset) {
    if (s.name == "lines") return !t.IsSubsetOf(ext.Closure(x | y));
    Subset plane_m = TranslateSubset(g, s.tx, m.ground());
    Subset line_y = TranslateSubset(g, s.ty, m.ground());
    for (const Subset& l : lines) {
      if (!l.IsSubsetOf(plane_m) || m.Rank(l | line_y) != 3) continue;
      if (ext.Rank(gset | s.tx) == ext.Rank(gset | lift(l)) + 1) return true;
    }
    return false;
  };

  ExclusionReport report;
  auto consider = [&](const Shape& s, const Subset& gset, const Subset& zx,
                      const Subset& zy) {
    Subset x = s.tx | gset | zx, y = s.ty | gset | zy;
    ++report.examined;
    if (!applicable(s, x, y, gset)) return;
    if (ModularDefect(ext, x, y) == 0) report.violations.push_back({x, y, s.name});
  };

  if (ext.size() <= options.exhaustive_limit) {
    report.exhaustive = true;
    for (const Shape& s : shapes) {
      for (const Subset& gset : bases_g) {
        std::vector<int> free_elems = (outside - gset).Members();
        const int k = static_cast<int>(free_elems.size());
        int64_t total = 1;
        for (int i = 0; i < k; ++i) total *= 3;
        for (int64_t code = 0; code < total; ++code) {
          Subset zx, zy;
          int64_t c = code;
          for (int i = 0; i < k; ++i, c /= 3) {
            if (c % 3 == 1) zx.Insert(free_elems[i]);
            if (c % 3 == 2) zy.Insert(free_elems[i]);
          }
          consider(s, gset, zx, zy);
        }
      }
    }
    return report;
  }
  if (shapes.empty() || bases_g.empty()) return report;
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<size_t> pick_shape(0, shapes.size() - 1);
  std::uniform_int_distribution<size_t> pick_g(0, bases_g.size() - 1);
  std::uniform_int_distribution<int> three(0, 2);
  for (int64_t i = 0; i < options.samples; ++i) {
    const Shape& s = shapes[pick_shape(rng)];
    const Subset& gset = bases_g[pick_g(rng)];
    Subset zx, zy;
    (outside - gset).ForEach([&](int e) {
      int c = three(rng);
      if (c == 1) zx.Insert(e);
      if (c == 2) zy.Insert(e);
    });
    consider(s, gset, zx, zy);
  }
  return report;
}

}  // namespace matroid_lab

#endif  // MATROID_LAB_AMALGAM_HPP_
