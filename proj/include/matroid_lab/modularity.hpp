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

// Modular defect, (hyper)modularity, coplanar line configurations and the
// bundle condition.

#ifndef MATROID_LAB_MODULARITY_HPP_
#define MATROID_LAB_MODULARITY_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "matroid_lab/generators.hpp"
#include "matroid_lab/isomorphism.hpp"
#include "matroid_lab/matroid.hpp"
#include "matroid_lab/rank_table.hpp"

namespace matroid_lab {

struct FlatPair {
  Subset x;
  Subset y;
  int defect = 0;

  friend bool operator==(const FlatPair&, const FlatPair&) = default;
};

// r(X) + r(Y) - r(X u Y) - r(X n Y).
template <class RankFn>
int DefectOf(const RankFn& rank, const Subset& x, const Subset& y) {
  return rank(x) + rank(y) - rank(x | y) - rank(x & y);
}

inline int ModularDefect(const Matroid& m, const Subset& x, const Subset& y) {
  return m.Rank(x) + m.Rank(y) - m.Rank(x | y) - m.Rank(x & y);
}

// Result of a property check; `witness` is set when the property fails.
struct PairCheck {
  bool holds = true;
  std::optional<FlatPair> witness;
};

// All flat pairs; the first non-modular pair in index order is the witness.
inline PairCheck CheckModular(const Matroid& m) {
  for (int a = 0; a < m.NumFlats(); ++a) {
    for (int b = a + 1; b < m.NumFlats(); ++b) {
      int d = ModularDefect(m, m.Flat(a), m.Flat(b));
      if (d > 0) return {false, FlatPair{m.Flat(a), m.Flat(b), d}};
    }
  }
  return {};
}

inline bool IsModular(const Matroid& m) { return CheckModular(m).holds; }

inline std::span<const Subset> Hyperplanes(const Matroid& m) {
  if (m.rank() == 0) return {};
  return m.Flats(m.rank() - 1);
}

inline PairCheck CheckHypermodular(const Matroid& m) {
  auto hyperplanes = Hyperplanes(m);
  for (size_t a = 0; a < hyperplanes.size(); ++a) {
    for (size_t b = a + 1; b < hyperplanes.size(); ++b) {
      int d = ModularDefect(m, hyperplanes[a], hyperplanes[b]);
      if (d > 0) return {false, FlatPair{hyperplanes[a], hyperplanes[b], d}};
    }
  }
  return {};
}

inline bool IsHypermodular(const Matroid& m) { return CheckHypermodular(m).holds; }

inline std::span<const Subset> Lines(const Matroid& m) {
  if (m.rank() < 2) return {};
  return m.Flats(2);
}

// Disjoint lines spanning a plane, in (index, index) order.
inline std::vector<FlatPair> CoplanarDisjointLinePairs(const Matroid& m) {
  std::vector<FlatPair> out;
  auto lines = Lines(m);
  for (size_t a = 0; a < lines.size(); ++a) {
    for (size_t b = a + 1; b < lines.size(); ++b) {
      if (lines[a].Intersects(lines[b])) continue;
      if (m.Rank(lines[a] | lines[b]) == 3) {
        out.push_back(FlatPair{lines[a], lines[b], 1});
      }
    }
  }
  return out;
}

// Three pairwise coplanar lines, not in a common plane, where l1 and l2 meet
// in a point not on l3.
struct EscherViolation {
  Subset l1;
  Subset l2;
  Subset l3;

  friend bool operator==(const EscherViolation&, const EscherViolation&) = default;
};

// Scans an explicit line list under an arbitrary (possibly non-matroidal)
// rank function.
template <class RankFn>
std::vector<EscherViolation> EscherScan(const std::vector<Subset>& lines,
                                        const RankFn& rank) {
  const size_t n = lines.size();
  std::vector<std::vector<char>> coplanar(n, std::vector<char>(n, 0));
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = a + 1; b < n; ++b) {
      coplanar[a][b] = coplanar[b][a] = rank(lines[a] | lines[b]) <= 3;
    }
  }
  std::vector<EscherViolation> out;
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = a + 1; b < n; ++b) {
      if (!coplanar[a][b]) continue;
      Subset meet = lines[a] & lines[b];
      if (meet.Empty() || rank(meet) != 1) continue;
      Subset ab = lines[a] | lines[b];
      for (size_t c = 0; c < n; ++c) {
        if (c == a || c == b || !coplanar[a][c] || !coplanar[b][c]) continue;
        if (meet.IsSubsetOf(lines[c])) continue;
        if (rank(ab | lines[c]) < 4) continue;
        out.push_back({lines[a], lines[b], lines[c]});
      }
    }
  }
  return out;
}

inline std::vector<EscherViolation> CheckEscher(const Matroid& m) {
  auto lines = Lines(m);
  return EscherScan(std::vector<Subset>(lines.begin(), lines.end()),
                    [&](const Subset& s) { return m.Rank(s); });
}

// Lines of a raw table are its closed sets of rank 2.
// With `min_points` > 2 only lines of at least that many elements are
// scanned; a configuration drawn with long lines then counts once instead
// of together with the configurations its planes force on 2-point lines.
inline std::vector<EscherViolation> CheckEscher(const RankTable& t, int min_points = 2) {
  std::vector<Subset> lines;
  for (const Subset& l : TableFlats(t, 2)) {
    if (l.Count() >= min_points) lines.push_back(l);
  }
  return EscherScan(lines, [&](const Subset& s) { return t(s); });
}

struct LinePartition {
  Subset l1;
  Subset l2;
  Subset plane;               // cl(l1 u l2)
  std::vector<Subset> delta;  // lines (l1 v p) ^ (l2 v p), p off the plane
  Subset pivot;               // the chosen member of delta
  std::vector<Subset> sigma;  // lines plane ^ (pivot v r)
  std::vector<Subset> lines;  // l1, l2, sigma, delta; sorted

  // Empty when the partition invariants hold, else a description.
  std::optional<std::string> Verify(const Matroid& m) const {
    Subset seen;
    bool has1 = false, has2 = false;
    for (const Subset& l : lines) {
      auto idx = m.FlatIndex(l);
      if (!idx || m.FlatRank(*idx) != 2) return "{" + m.Format(l) + "} is not a line";
      if (l.Intersects(seen)) return "{" + m.Format(l) + "} overlaps another line";
      seen |= l;
      has1 |= l == l1;
      has2 |= l == l2;
      if (l != l1 && m.Rank(l | l1) != 3) return "{" + m.Format(l) + "} not coplanar with l1";
      if (l != l2 && m.Rank(l | l2) != 3) return "{" + m.Format(l) + "} not coplanar with l2";
    }
    if (!has1 || !has2) return std::string("l1 or l2 missing");
    if (seen != m.All()) return std::string("lines do not cover E");
    return std::nullopt;
  }
};

namespace internal {

[[noreturn]] inline void Precondition(const std::string& message) {
  throw MatroidError(ErrorKind::kPreconditionFailed, message);
}

inline void RequireDisjointCoplanarLines(const Matroid& m, const Subset& l1,
                                         const Subset& l2) {
  for (const Subset* l : {&l1, &l2}) {
    auto idx = m.FlatIndex(*l);
    if (!idx || m.FlatRank(*idx) != 2) {
      Precondition("{" + m.Format(*l) + "} is not a line");
    }
  }
  if (l1.Intersects(l2)) Precondition("lines are not disjoint");
  if (m.Rank(l1 | l2) != 3) Precondition("lines are not coplanar");
}

inline void RequireHypermodularRank4(const Matroid& m) {
  if (m.rank() != 4) Precondition("rank is " + std::to_string(m.rank()) + ", need 4");
  auto check = CheckHypermodular(m);
  if (!check.holds) {
    Precondition("not hypermodular: hyperplanes {" + m.Format(check.witness->x) +
                 "} and {" + m.Format(check.witness->y) + "} have defect " +
                 std::to_string(check.witness->defect));
  }
}

}  // namespace internal

// Partition of E into l1, l2 and lines coplanar with both. `pivot_index`
// selects the pivot among the sorted delta lines.
inline LinePartition LinePartitionOf(const Matroid& m, const Subset& l1,
                                     const Subset& l2, int pivot_index = 0) {
  internal::RequireHypermodularRank4(m);
  internal::RequireDisjointCoplanarLines(m, l1, l2);
  LinePartition part;
  part.l1 = l1;
  part.l2 = l2;
  part.plane = m.Closure(l1 | l2);
  std::vector<Subset> delta;
  (m.All() - part.plane).ForEach([&](int p) {
    Subset lp = m.Closure(l1.With(p)) & m.Closure(l2.With(p));
    if (std::find(delta.begin(), delta.end(), lp) == delta.end()) delta.push_back(lp);
  });
  std::sort(delta.begin(), delta.end());
  if (pivot_index < 0 || pivot_index >= static_cast<int>(delta.size())) {
    throw MatroidError(ErrorKind::kOutOfRange, "pivot index out of range");
  }
  part.delta = delta;
  part.pivot = delta[pivot_index];
  Subset covered = l1 | l2;
  (part.plane - covered).ForEach([&](int r) {
    if (covered.Contains(r)) return;
    Subset lr = part.plane & m.Closure(part.pivot.With(r));
    part.sigma.push_back(lr);
    covered |= lr;
  });
  part.lines = {l1, l2};
  part.lines.insert(part.lines.end(), part.sigma.begin(), part.sigma.end());
  part.lines.insert(part.lines.end(), part.delta.begin(), part.delta.end());
  std::sort(part.lines.begin(), part.lines.end());
  if (auto problem = part.Verify(m)) {
    internal::Precondition("line partition failed: " + *problem);
  }
  return part;
}

// Four pairwise disjoint lines, no three coplanar, with exactly one
// non-coplanar pair (l3, l4).
struct BundleQuad {
  Subset l1;
  Subset l2;
  Subset l3;
  Subset l4;

  friend bool operator==(const BundleQuad&, const BundleQuad&) = default;
};

inline constexpr int64_t kDefaultBundleCap = 10'000'000;

inline std::vector<BundleQuad> BundleViolations(const Matroid& m,
                                                int64_t cap = kDefaultBundleCap) {
  std::vector<BundleQuad> out;
  if (m.rank() < 4) return out;
  auto lines = Lines(m);
  const size_t n = lines.size();
  // 0: meeting, 1: disjoint coplanar, 2: disjoint skew.
  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = a + 1; b < n; ++b) {
      if (lines[a].Intersects(lines[b])) continue;
      rel[a][b] = rel[b][a] = m.Rank(lines[a] | lines[b]) == 3 ? 1 : 2;
    }
  }
  int64_t examined = 0;
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = a + 1; b < n; ++b) {
      if (rel[a][b] != 2) continue;
      std::vector<size_t> both;
      for (size_t c = 0; c < n; ++c) {
        if (rel[a][c] == 1 && rel[b][c] == 1) both.push_back(c);
      }
      for (size_t i = 0; i < both.size(); ++i) {
        for (size_t j = i + 1; j < both.size(); ++j) {
          if (++examined > cap) {
            throw MatroidError(ErrorKind::kTooLarge,
                               "bundle scan exceeded " + std::to_string(cap) +
                                   " quadruples");
          }
          size_t c = both[i], d = both[j];
          if (rel[c][d] != 1) continue;
          const Subset &la = lines[a], &lb = lines[b], &lc = lines[c], &ld = lines[d];
          if (m.Rank(la | lc | ld) < 4 || m.Rank(lb | lc | ld) < 4 ||
              m.Rank(la | lb | lc) < 4 || m.Rank(la | lb | ld) < 4) {
            continue;
          }
          out.push_back({lc, ld, la, lb});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const BundleQuad& x, const BundleQuad& y) {
    return std::tie(x.l1, x.l2, x.l3, x.l4) < std::tie(y.l1, y.l2, y.l3, y.l4);
  });
  return out;
}

// Lines l3, l4 completing disjoint coplanar l1, l2 to the configuration of
// a Vamos restriction.
struct VamosPattern {
  Subset l3;
  Subset l4;
  // True when two points from each of the four lines restrict to a matroid
  // isomorphic to V8.
  bool restriction_is_vamos = false;
};

// First (l3, l4) in line-index order; no hypermodularity assumption.
inline std::optional<VamosPattern> FindVamosPattern(const Matroid& m,
                                                    const Subset& l1,
                                                    const Subset& l2) {
  internal::RequireDisjointCoplanarLines(m, l1, l2);
  if (m.rank() < 4) return std::nullopt;
  auto lines = Lines(m);
  std::vector<size_t> candidates;
  for (size_t c = 0; c < lines.size(); ++c) {
    const Subset& l = lines[c];
    if (l.Intersects(l1 | l2)) continue;
    if (m.Rank(l | l1) != 3 || m.Rank(l | l2) != 3) continue;
    if (m.Rank(l | l1 | l2) != 4) continue;
    candidates.push_back(c);
  }
  for (size_t i = 0; i < candidates.size(); ++i) {
    for (size_t j = i + 1; j < candidates.size(); ++j) {
      const Subset& l3 = lines[candidates[i]];
      const Subset& l4 = lines[candidates[j]];
      if (l3.Intersects(l4) || m.Rank(l3 | l4) != 4) continue;
      if (m.Rank(l1 | l3 | l4) != 4 || m.Rank(l2 | l3 | l4) != 4) continue;
      VamosPattern pattern{l3, l4, false};
      Subset pick;
      for (const Subset* l : {&l1, &l2, &l3, &l4}) {
        int first = l->First();
        pick.Insert(first);
        pick.Insert(l->NextFrom(first + 1));
      }
      pattern.restriction_is_vamos = AreIsomorphic(Restrict(m, pick), Vamos());
      return pattern;
    }
  }
  return std::nullopt;
}

}  // namespace matroid_lab

#endif  // MATROID_LAB_MODULARITY_HPP_
