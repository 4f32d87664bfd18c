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

// Modular cuts and single-element extensions.

#ifndef MATROID_LAB_CUTS_HPP_
#define MATROID_LAB_CUTS_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "matroid_lab/matroid.hpp"
#include "matroid_lab/modularity.hpp"
#include "matroid_lab/parallel.hpp"

namespace matroid_lab {

// A family of flats of a fixed host matroid, stored as a membership vector
// over the host's flat indices. Construction does not validate; call
// Validate() or use the factory functions below.
class ModularCut {
 public:
  explicit ModularCut(Matroid host)
      : host_(std::move(host)), member_(host_.NumFlats(), 0) {}

  static ModularCut FromFlats(const Matroid& host, const std::vector<Subset>& flats) {
    ModularCut cut(host);
    for (const Subset& f : flats) cut.Add(RequireFlat(host, f));
    return cut;
  }

  const Matroid& host() const { return host_; }
  bool Contains(int flat_index) const { return member_[flat_index] != 0; }
  bool Contains(const Subset& s) const {
    auto idx = host_.FlatIndex(s);
    return idx && Contains(*idx);
  }
  void Add(int flat_index) { member_[flat_index] = 1; }

  std::vector<int> Members() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(member_.size()); ++i) {
      if (member_[i]) out.push_back(i);
    }
    return out;
  }
  std::vector<Subset> Flats() const {
    std::vector<Subset> out;
    for (int i : Members()) out.push_back(host_.Flat(i));
    return out;
  }
  // Members with no proper subset in the cut.
  std::vector<Subset> MinimalFlats() const {
    std::vector<Subset> out;
    for (int i : Members()) {
      bool minimal = true;
      for (int j : Members()) {
        if (j != i && host_.Flat(j).IsSubsetOf(host_.Flat(i))) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.push_back(host_.Flat(i));
    }
    return out;
  }
  int size() const {
    return static_cast<int>(std::count(member_.begin(), member_.end(), 1));
  }
  bool Empty() const { return size() == 0; }
  bool IsTrivial() const { return Contains(host_.BottomIndex()); }

  // Empty when the family is upward closed and closed under intersections
  // of modular member pairs; otherwise a description of the failure.
  std::optional<std::string> Validate() const {
    for (int i : Members()) {
      for (int c : host_.Covers(i)) {
        if (!Contains(c)) {
          return "not upward closed: {" + host_.Format(host_.Flat(i)) +
                 "} is a member but its cover {" + host_.Format(host_.Flat(c)) +
                 "} is not";
        }
      }
    }
    std::vector<int> members = Members();
    for (size_t a = 0; a < members.size(); ++a) {
      for (size_t b = a + 1; b < members.size(); ++b) {
        const Subset& x = host_.Flat(members[a]);
        const Subset& y = host_.Flat(members[b]);
        if (ModularDefect(host_, x, y) != 0) continue;
        if (!Contains(x & y)) {
          return "modular pair {" + host_.Format(x) + "}, {" + host_.Format(y) +
                 "} has intersection outside the family";
        }
      }
    }
    return std::nullopt;
  }

  friend bool operator==(const ModularCut& a, const ModularCut& b) {
    return a.member_ == b.member_ && SameMatroid(a.host_, b.host_);
  }

  static int RequireFlat(const Matroid& m, const Subset& f) {
    auto idx = m.FlatIndex(f);
    if (!idx) {
      throw MatroidError(ErrorKind::kNotAFlat, "{" + m.Format(f) + "} is not a flat");
    }
    return *idx;
  }

 private:
  Matroid host_;
  std::vector<char> member_;
};

namespace internal {

// Adds f and everything above it, breadth first over covers.
inline void AddUpward(ModularCut& cut, int f, std::vector<int>* added) {
  if (cut.Contains(f)) return;
  std::vector<int> queue{f};
  cut.Add(f);
  for (size_t head = 0; head < queue.size(); ++head) {
    int cur = queue[head];
    if (added) added->push_back(cur);
    for (int c : cut.host().Covers(cur)) {
      if (!cut.Contains(c)) {
        cut.Add(c);
        queue.push_back(c);
      }
    }
  }
}

}  // namespace internal

inline ModularCut PrincipalCut(const Matroid& m, const Subset& f) {
  ModularCut cut(m);
  internal::AddUpward(cut, ModularCut::RequireFlat(m, f), nullptr);
  return cut;
}

// Least modular cut containing the seeds. Every member is paired once with
// each earlier member; new members are appended and paired in turn.
inline ModularCut GenerateCut(const Matroid& m, const std::vector<Subset>& seeds) {
  ModularCut cut(m);
  std::vector<int> order;
  for (const Subset& s : seeds) {
    internal::AddUpward(cut, ModularCut::RequireFlat(m, s), &order);
  }
  for (size_t i = 0; i < order.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      const Subset& x = m.Flat(order[j]);
      const Subset& y = m.Flat(order[i]);
      Subset meet = x & y;
      if (cut.Contains(meet)) continue;
      if (ModularDefect(m, x, y) != 0) continue;
      internal::AddUpward(cut, *m.FlatIndex(meet), &order);
    }
  }
  return cut;
}

// The flat F with cut = {flats containing F}, if any.
inline std::optional<Subset> IsPrincipal(const ModularCut& cut) {
  if (cut.Empty()) return std::nullopt;
  const Matroid& m = cut.host();
  Subset meet = m.All();
  for (int i : cut.Members()) meet &= m.Flat(i);
  if (!cut.Contains(meet)) return std::nullopt;
  for (int f = 0; f < m.NumFlats(); ++f) {
    if (meet.IsSubsetOf(m.Flat(f)) != cut.Contains(f)) return std::nullopt;
  }
  return meet;
}

inline bool IsIntersectable(const Matroid& m, const Subset& x, const Subset& y) {
  ModularCut::RequireFlat(m, x);
  ModularCut::RequireFlat(m, y);
  if (ModularDefect(m, x, y) == 0) {
    throw MatroidError(ErrorKind::kNotNonModular,
                       "{" + m.Format(x) + "} and {" + m.Format(y) +
                           "} form a modular pair");
  }
  // The generated cut lies inside the principal cut of X n Y, so the two
  // agree exactly when X n Y is generated.
  return !GenerateCut(m, {x, y}).Contains(x & y);
}

// The single-element extension M +_cut p with p labelled `label`.
inline Matroid CrapoExtend(const ModularCut& cut, const std::string& label) {
  const Matroid& m = cut.host();
  GroundSet g = m.ground().Extended(label);
  if (auto problem = cut.Validate()) {
    throw MatroidError(ErrorKind::kInvalidCut, *problem);
  }
  const int p = m.size();
  const bool raises = cut.Empty();
  std::vector<std::vector<Subset>> levels(m.rank() + (raises ? 2 : 1));
  for (int f = 0; f < m.NumFlats(); ++f) {
    const Subset& flat = m.Flat(f);
    const int k = m.FlatRank(f);
    if (cut.Contains(f)) {
      levels[k].push_back(flat.With(p));
      continue;
    }
    levels[k].push_back(flat);
    bool cover_in_cut = false;
    for (int c : m.Covers(f)) cover_in_cut |= cut.Contains(c);
    if (!cover_in_cut) levels[k + 1].push_back(flat.With(p));
  }
  std::string name = m.name().empty() ? "" : m.name() + "+" + label;
  return Matroid::FromFlats(std::move(g), std::move(levels), std::move(name));
}

// The cut of `base` corresponding to `extension`, which must equal base plus
// the element `label`.
inline ModularCut CutOfExtension(const Matroid& base, const Matroid& extension,
                                 const std::string& label) {
  auto p = extension.ground().IndexOf(label);
  if (!p) {
    throw MatroidError(ErrorKind::kPreconditionFailed,
                       "label '" + label + "' not in extension");
  }
  Matroid restricted = Delete(extension, Subset::Single(*p));
  if (auto diff = FirstFlatDifference(base, restricted)) {
    throw MatroidError(ErrorKind::kRestrictionMismatch,
                       "extension does not restrict to base: " + *diff);
  }
  ModularCut cut(base);
  for (int f = 0; f < base.NumFlats(); ++f) {
    Subset image = TranslateSubset(base.ground(), base.Flat(f), extension.ground());
    if (extension.Closure(image).Contains(*p)) cut.Add(f);
  }
  return cut;
}

enum class ChainStatus { kComplete, kStoppedEarly, kPartial };

inline std::string_view ChainStatusName(ChainStatus s) {
  switch (s) {
    case ChainStatus::kComplete: return "complete";
    case ChainStatus::kStoppedEarly: return "stopped_early";
    case ChainStatus::kPartial: return "partial";
  }
  return "unknown";
}

struct ExtensionStep {
  // Generating flats, as label lists in the host of `cut`.
  std::vector<std::vector<std::string>> generators;
  ModularCut cut;
  std::string label;
  int defect_before = -1;  // defect of the tracked pair, when there is one
  int defect_after = -1;
};

struct ExtensionChain {
  Matroid base;
  std::vector<ExtensionStep> steps;
  Matroid result;
  ChainStatus status = ChainStatus::kComplete;
  std::string note;
  // Labels of the added elements, in order.
  std::vector<std::string> Added() const {
    std::vector<std::string> out;
    for (const auto& s : steps) out.push_back(s.label);
    return out;
  }
};

// Extends along the images of the cut generated by (X, Y) until cl(X) and
// cl(Y) form a modular pair. Each image family is validated before use and
// every step must lower the defect by exactly one; otherwise the chain stops
// with kStoppedEarly. New elements are labelled prefix1, prefix2, ... (first
// unused numbers).
inline ExtensionChain ReduceDefectChain(const Matroid& m, const Subset& x_in,
                                        const Subset& y_in,
                                        const std::string& prefix = "_p") {
  const Subset x = m.Closure(x_in), y = m.Closure(y_in);
  const int delta0 = ModularDefect(m, x, y);
  if (delta0 == 0 || !IsIntersectable(m, x, y)) {
    throw MatroidError(ErrorKind::kNotIntersectable,
                       "{" + m.Format(x) + "} and {" + m.Format(y) +
                           "} are not an intersectable non-modular pair");
  }
  const std::vector<Subset> generated = GenerateCut(m, {x, y}).Flats();
  const std::vector<std::string> x_labels = m.ground().Labels(x);
  const std::vector<std::string> y_labels = m.ground().Labels(y);

  ExtensionChain chain{m, {}, m, ChainStatus::kComplete, {}};
  Matroid cur = m;
  auto in_cur = [&](const Subset& s) { return TranslateSubset(m.ground(), s, cur.ground()); };
  int delta = delta0;
  while (delta > 0) {
    const Subset cx = cur.Closure(in_cur(x)), cy = cur.Closure(in_cur(y));
    ModularCut image(cur);
    for (const Subset& f : generated) image.Add(cur.ClosureIndex(in_cur(f)));
    if (auto problem = image.Validate()) {
      chain.status = ChainStatus::kStoppedEarly;
      chain.note = "image family is not a modular cut: " + *problem;
      break;
    }
    std::string label = cur.ground().FreshLabel(prefix);
    Matroid next = CrapoExtend(image, label);
    int after = ModularDefect(next, next.Closure(TranslateSubset(m.ground(), x, next.ground())),
                              next.Closure(TranslateSubset(m.ground(), y, next.ground())));
    chain.steps.push_back(ExtensionStep{{cur.ground().Labels(cx), cur.ground().Labels(cy)},
                                        image, label, delta, after});
    cur = next;
    if (after != delta - 1) {
      chain.status = ChainStatus::kStoppedEarly;
      chain.note = "defect went from " + std::to_string(delta) + " to " +
                   std::to_string(after);
      break;
    }
    delta = after;
  }
  chain.result = cur;
  return chain;
}

struct IntersectablePair {
  Subset x;
  Subset y;
  int defect = 0;
};

namespace internal {

// Non-modular, non-nested flat pairs (a < b) in flat-index order.
inline std::vector<IntersectablePair> NonModularPairs(const Matroid& m) {
  std::vector<IntersectablePair> out;
  for (int a = 0; a < m.NumFlats(); ++a) {
    for (int b = a + 1; b < m.NumFlats(); ++b) {
      const Subset &x = m.Flat(a), &y = m.Flat(b);
      if (x.IsSubsetOf(y) || y.IsSubsetOf(x)) continue;
      int d = ModularDefect(m, x, y);
      if (d > 0) out.push_back({x, y, d});
    }
  }
  return out;
}

}  // namespace internal

// Witness of failure of the only-trivially-extendable property: the first
// intersectable non-modular flat pair in flat-index order.
inline std::optional<IntersectablePair> FindIntersectablePair(const Matroid& m,
                                                              int threads = 1) {
  // Rows are searched in parallel; within a row, pairs in order.
  auto first_in_row = [&m](int a) -> std::optional<IntersectablePair> {
    const Subset& x = m.Flat(a);
    for (int b = a + 1; b < m.NumFlats(); ++b) {
      const Subset& y = m.Flat(b);
      if (x.IsSubsetOf(y) || y.IsSubsetOf(x)) continue;
      int d = ModularDefect(m, x, y);
      if (d > 0 && IsIntersectable(m, x, y)) return IntersectablePair{x, y, d};
    }
    return std::nullopt;
  };
  int64_t row = ParallelFindFirst(m.NumFlats(), threads,
                                  [&](int64_t a) { return first_in_row(a).has_value(); });
  if (row < 0) return std::nullopt;
  return first_in_row(static_cast<int>(row));
}

inline std::vector<IntersectablePair> AllIntersectablePairs(const Matroid& m) {
  std::vector<IntersectablePair> out;
  for (const auto& p : internal::NonModularPairs(m)) {
    if (IsIntersectable(m, p.x, p.y)) out.push_back(p);
  }
  return out;
}

struct OteCheck {
  bool holds = true;
  std::optional<IntersectablePair> witness;
};

// OTE test by pair intersectability: no non-modular flat pair is
// intersectable.
inline OteCheck CheckOTE(const Matroid& m, int threads = 1) {
  auto w = FindIntersectablePair(m, threads);
  return {!w.has_value(), w};
}

inline bool IsOTE(const Matroid& m, int threads = 1) { return CheckOTE(m, threads).holds; }

// An intersectable pair of least defect with X of least and Y of greatest
// rank; X is then minimal in the cut generated by (X, Y) and Y is a
// hyperplane, both re-checked before returning.
inline IntersectablePair MinMaxPair(const Matroid& m) {
  std::vector<IntersectablePair> candidates;
  for (auto p : internal::NonModularPairs(m)) {
    candidates.push_back(p);
    candidates.push_back({p.y, p.x, p.defect});
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](const IntersectablePair& a, const IntersectablePair& b) {
                     return std::make_tuple(a.defect, m.Rank(a.x), -m.Rank(a.y)) <
                            std::make_tuple(b.defect, m.Rank(b.x), -m.Rank(b.y));
                   });
  for (const auto& c : candidates) {
    if (!IsIntersectable(m, c.x, c.y)) continue;
    if (m.Rank(c.y) != m.rank() - 1) {
      internal::Precondition("least pair has a non-hyperplane second member");
    }
    for (const Subset& f : GenerateCut(m, {c.x, c.y}).Flats()) {
      if (f != c.x && f.IsSubsetOf(c.x)) {
        internal::Precondition("least pair has a non-minimal first member");
      }
    }
    return c;
  }
  throw MatroidError(ErrorKind::kIsOTE, "no intersectable non-modular pair");
}

inline constexpr int kDefaultCutEnumerationBound = 18;

// Every modular cut (including the empty one), by filtering all upward
// closed families of flats. Cuts are listed in increasing bitmask order.
inline std::vector<ModularCut> EnumerateModularCuts(
    const Matroid& m, int bound = kDefaultCutEnumerationBound) {
  const int num = m.NumFlats();
  if (num > bound) {
    throw MatroidError(ErrorKind::kTooLarge,
                       std::to_string(num) + " flats exceed the enumeration bound " +
                           std::to_string(bound));
  }
  std::vector<uint32_t> covers(num, 0);
  for (int f = 0; f < num; ++f) {
    for (int c : m.Covers(f)) covers[f] |= 1U << c;
  }
  struct Meet {
    int a, b, meet;
  };
  std::vector<Meet> modular;
  for (int a = 0; a < num; ++a) {
    for (int b = a + 1; b < num; ++b) {
      if (ModularDefect(m, m.Flat(a), m.Flat(b)) == 0) {
        modular.push_back({a, b, *m.FlatIndex(m.Flat(a) & m.Flat(b))});
      }
    }
  }
  std::vector<ModularCut> out;
  for (uint32_t mask = 0; mask < (1U << num); ++mask) {
    bool ok = true;
    for (int f = 0; f < num && ok; ++f) {
      if ((mask >> f & 1U) && (covers[f] & ~mask)) ok = false;
    }
    for (size_t i = 0; i < modular.size() && ok; ++i) {
      const Meet& mm = modular[i];
      if ((mask >> mm.a & 1U) && (mask >> mm.b & 1U) && !(mask >> mm.meet & 1U)) ok = false;
    }
    if (!ok) continue;
    ModularCut cut(m);
    for (int f = 0; f < num; ++f) {
      if (mask >> f & 1U) cut.Add(f);
    }
    out.push_back(std::move(cut));
  }
  return out;
}

// For disjoint coplanar lines in a hypermodular rank-4 matroid: absent when
// the pair is intersectable, otherwise lines completing a Vamos pattern.
inline std::optional<VamosPattern> VamosRestrictionSearch(const Matroid& m,
                                                          const Subset& l1,
                                                          const Subset& l2) {
  internal::RequireHypermodularRank4(m);
  internal::RequireDisjointCoplanarLines(m, l1, l2);
  if (IsIntersectable(m, l1, l2)) return std::nullopt;
  return FindVamosPattern(m, l1, l2);
}

}  // namespace matroid_lab

#endif  // MATROID_LAB_CUTS_HPP_
