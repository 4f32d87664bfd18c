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

#ifndef MATROID_LAB_MATROID_HPP_
#define MATROID_LAB_MATROID_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "matroid_lab/error.hpp"
#include "matroid_lab/subset.hpp"

namespace matroid_lab {

enum class Validation {
  // Cover-partition and grading checks only (always performed).
  kStructure,
  // Additionally checks that flats are closed under intersection.
  kFull,
};

using RankFunction = std::function<int(const Subset&)>;

// Immutable finite matroid stored as its lattice of flats, grouped by rank.
//
// Flats are kept sorted by (rank, lexicographic) and indexed densely. For
// every flat F and element e the index of cl(F + e) is precomputed, so
// rank and closure are a walk up the lattice of at most rank() steps.
// Copies share the underlying data.
class Matroid {
 public:
  // The empty matroid U(0,0).
  Matroid() : Matroid(FromFlats(GroundSet(), {{Subset()}})) {}

  static Matroid FromFlats(GroundSet ground,
                           std::vector<std::vector<Subset>> flats_by_rank,
                           std::string name = {},
                           Validation validation = Validation::kStructure);

  // Builds the lattice of flats of an arbitrary rank function by closing
  // covers level by level. Throws NotAMatroid when the function produces an
  // inconsistent lattice.
  static Matroid FromRankFunction(GroundSet ground, const RankFunction& rank,
                                  std::string name = {},
                                  Validation validation = Validation::kFull);

  const GroundSet& ground() const { return data_->ground; }
  int size() const { return data_->ground.size(); }
  int rank() const { return data_->rank; }
  const std::string& name() const { return data_->name; }
  Subset All() const { return data_->ground.All(); }

  Matroid WithName(std::string name) const {
    auto data = std::make_shared<Data>(*data_);
    data->name = std::move(name);
    return Matroid(std::move(data));
  }

  int NumFlats() const { return static_cast<int>(data_->flats.size()); }
  const Subset& Flat(int index) const { return data_->flats[index]; }
  int FlatRank(int index) const { return data_->flat_rank[index]; }
  int FlatBegin(int k) const { return data_->rank_begin[k]; }
  int FlatEnd(int k) const { return data_->rank_begin[k + 1]; }
  int BottomIndex() const { return 0; }
  int TopIndex() const { return NumFlats() - 1; }
  std::span<const int> Covers(int index) const { return data_->covers[index]; }

  std::span<const Subset> Flats(int k) const {
    if (k < 0 || k > rank()) {
      throw MatroidError(ErrorKind::kOutOfRange,
                         "flat rank " + std::to_string(k) + " outside 0.." +
                             std::to_string(rank()));
    }
    return std::span<const Subset>(data_->flats.data() + FlatBegin(k),
                                   FlatEnd(k) - FlatBegin(k));
  }

  std::optional<int> FlatIndex(const Subset& s) const {
    auto it = data_->index.find(s);
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
  }
  bool IsFlat(const Subset& s) const { return data_->index.count(s) != 0; }

  // Index of the smallest flat containing x.
  int ClosureIndex(const Subset& x) const {
    const int n = size();
    int idx = 0;
    while (true) {
      int e = (x - data_->flats[idx]).First();
      if (e < 0) return idx;
      idx = data_->up[static_cast<size_t>(idx) * n + e];
    }
  }
  int Rank(const Subset& x) const { return FlatRank(ClosureIndex(x)); }
  Subset Closure(const Subset& x) const { return Flat(ClosureIndex(x)); }
  Subset Loops() const { return Flat(0); }

  // Index of cl(F + e) for a flat index F.
  int Up(int flat_index, int element) const {
    return data_->up[static_cast<size_t>(flat_index) * size() + element];
  }

  std::string Format(const Subset& s) const { return ground().Format(s); }

 private:
  struct Data {
    GroundSet ground;
    std::string name;
    int rank = 0;
    std::vector<Subset> flats;
    std::vector<int> flat_rank;
    std::vector<int> rank_begin;
    std::vector<std::vector<int>> covers;
    std::vector<int32_t> up;
    std::unordered_map<Subset, int, SubsetHash> index;
  };

  explicit Matroid(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

namespace internal {

[[noreturn]] inline void NotAMatroid(const std::string& message) {
  throw MatroidError(ErrorKind::kNotAMatroid, message);
}

}  // namespace internal

inline Matroid Matroid::FromFlats(GroundSet ground,
                                  std::vector<std::vector<Subset>> by_rank,
                                  std::string name, Validation validation) {
  const int n = ground.size();
  const Subset all = ground.All();
  if (by_rank.empty()) internal::NotAMatroid("no flats given");
  const int r = static_cast<int>(by_rank.size()) - 1;
  if (by_rank[0].size() != 1) {
    internal::NotAMatroid("expected exactly one rank-0 flat, got " +
                          std::to_string(by_rank[0].size()));
  }
  if (by_rank[r].size() != 1 || by_rank[r][0] != all) {
    internal::NotAMatroid("the ground set must be the unique flat of rank " +
                          std::to_string(r));
  }

  auto data = std::make_shared<Data>();
  data->ground = ground;
  data->name = std::move(name);
  data->rank = r;
  data->rank_begin.push_back(0);
  for (int k = 0; k <= r; ++k) {
    auto& level = by_rank[k];
    for (const Subset& f : level) {
      if (!f.IsSubsetOf(all)) internal::NotAMatroid("flat outside ground set");
    }
    std::sort(level.begin(), level.end());
    for (const Subset& f : level) {
      if (!data->index.emplace(f, static_cast<int>(data->flats.size())).second) {
        internal::NotAMatroid("flat {" + ground.Format(f) + "} listed twice");
      }
      data->flats.push_back(f);
      data->flat_rank.push_back(k);
    }
    data->rank_begin.push_back(static_cast<int>(data->flats.size()));
  }

  const int num = static_cast<int>(data->flats.size());
  data->covers.assign(num, {});
  data->up.assign(static_cast<size_t>(num) * n, -1);
  std::vector<char> reached(num, 0);
  reached[0] = 1;
  for (int k = 0; k < r; ++k) {
    for (int lo = data->rank_begin[k]; lo < data->rank_begin[k + 1]; ++lo) {
      const Subset& f = data->flats[lo];
      for (int hi = data->rank_begin[k + 1]; hi < data->rank_begin[k + 2];
           ++hi) {
        const Subset& g = data->flats[hi];
        if (!f.IsSubsetOf(g) || f == g) continue;
        data->covers[lo].push_back(hi);
        reached[hi] = 1;
        bool overlap = false;
        (g - f).ForEach([&](int e) {
          int32_t& slot = data->up[static_cast<size_t>(lo) * n + e];
          if (slot >= 0) overlap = true;
          slot = hi;
        });
        if (overlap) {
          internal::NotAMatroid("covers of flat {" + ground.Format(f) +
                                "} overlap outside it");
        }
      }
      f.ForEach([&](int e) { data->up[static_cast<size_t>(lo) * n + e] = lo; });
      for (int e = 0; e < n; ++e) {
        if (data->up[static_cast<size_t>(lo) * n + e] < 0) {
          internal::NotAMatroid("element " + ground.label(e) +
                                " lies in no cover of flat {" +
                                ground.Format(f) + "}");
        }
      }
    }
  }
  for (int e = 0; e < n; ++e) data->up[static_cast<size_t>(num - 1) * n + e] = num - 1;
  for (int i = 0; i < num; ++i) {
    if (!reached[i]) {
      internal::NotAMatroid("flat {" + ground.Format(data->flats[i]) +
                            "} covers no flat of the rank below");
    }
  }

  if (validation == Validation::kFull) {
    // Intersection closure; sampled when the lattice is large.
    auto check = [&](int a, int b) {
      Subset meet = data->flats[a] & data->flats[b];
      if (!data->index.count(meet)) {
        internal::NotAMatroid("intersection of {" +
                              ground.Format(data->flats[a]) + "} and {" +
                              ground.Format(data->flats[b]) +
                              "} is not a flat");
      }
    };
    if (static_cast<int64_t>(num) * num <= 8'000'000) {
      for (int a = 0; a < num; ++a) {
        for (int b = a + 1; b < num; ++b) check(a, b);
      }
    } else {
      std::mt19937_64 rng(1);
      std::uniform_int_distribution<int> pick(0, num - 1);
      for (int i = 0; i < 1'000'000; ++i) check(pick(rng), pick(rng));
    }
  }
  return Matroid(std::move(data));
}

inline Matroid Matroid::FromRankFunction(GroundSet ground,
                                         const RankFunction& rank,
                                         std::string name,
                                         Validation validation) {
  const int n = ground.size();
  const Subset all = ground.All();
  auto closure = [&](const Subset& x, int rx) {
    Subset c = x;
    (all - x).ForEach([&](int e) {
      if (rank(x.With(e)) == rx) c.Insert(e);
    });
    return c;
  };
  if (rank(Subset()) != 0) internal::NotAMatroid("rank of the empty set is not 0");

  std::vector<std::vector<Subset>> levels;
  levels.push_back({closure(Subset(), 0)});
  while (true) {
    const int k = static_cast<int>(levels.size()) - 1;
    std::vector<Subset> next;
    std::unordered_set<Subset, SubsetHash> seen;
    for (const Subset& f : levels[k]) {
      Subset covered = f;
      for (int e = 0; e < n; ++e) {
        if (covered.Contains(e)) continue;
        Subset g0 = f.With(e);
        int rg = rank(g0);
        if (rg != k + 1) {
          internal::NotAMatroid("adding " + ground.label(e) + " to flat {" +
                                ground.Format(f) + "} changes rank by " +
                                std::to_string(rg - k));
        }
        Subset g = closure(g0, rg);
        covered |= g;
        if (seen.insert(g).second) next.push_back(g);
      }
    }
    if (next.empty()) break;
    if (static_cast<int>(levels.size()) > n + 1) {
      internal::NotAMatroid("rank function exceeds cardinality bound");
    }
    levels.push_back(std::move(next));
  }
  return FromFlats(std::move(ground), std::move(levels), std::move(name),
                   validation);
}

// Label-based equality: same label set and the same flats.
inline bool SameMatroid(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank() ||
      a.NumFlats() != b.NumFlats()) {
    return false;
  }
  std::vector<int> to_b(a.size());
  for (int i = 0; i < a.size(); ++i) {
    auto j = b.ground().IndexOf(a.ground().label(i));
    if (!j) return false;
    to_b[i] = *j;
  }
  for (int f = 0; f < a.NumFlats(); ++f) {
    Subset image;
    a.Flat(f).ForEach([&](int e) { image.Insert(to_b[e]); });
    auto idx = b.FlatIndex(image);
    if (!idx || b.FlatRank(*idx) != a.FlatRank(f)) return false;
  }
  return true;
}

// First flat of `a` (label-mapped) that is not a flat of `b` with the same
// rank, formatted for diagnostics; empty when the matroids agree.
inline std::optional<std::string> FirstFlatDifference(const Matroid& a,
                                                      const Matroid& b) {
  if (a.size() != b.size()) return std::string("ground sets differ in size");
  std::vector<int> to_b(a.size());
  for (int i = 0; i < a.size(); ++i) {
    auto j = b.ground().IndexOf(a.ground().label(i));
    if (!j) return "label " + a.ground().label(i) + " missing";
    to_b[i] = *j;
  }
  for (int f = 0; f < a.NumFlats(); ++f) {
    Subset image;
    a.Flat(f).ForEach([&](int e) { image.Insert(to_b[e]); });
    auto idx = b.FlatIndex(image);
    if (!idx || b.FlatRank(*idx) != a.FlatRank(f)) {
      return "flat {" + a.Format(a.Flat(f)) + "} of rank " +
             std::to_string(a.FlatRank(f));
    }
  }
  if (a.NumFlats() != b.NumFlats()) return std::string("flat counts differ");
  return std::nullopt;
}

// M|S, with the kept elements in their original order.
inline Matroid Restrict(const Matroid& m, const Subset& keep) {
  std::vector<int> old_of_new;
  std::vector<int> new_of_old(m.size(), -1);
  (keep & m.All()).ForEach([&](int e) {
    new_of_old[e] = static_cast<int>(old_of_new.size());
    old_of_new.push_back(e);
  });
  std::vector<std::string> labels;
  for (int e : old_of_new) labels.push_back(m.ground().label(e));
  auto reindex = [&](const Subset& s) {
    Subset out;
    (s & keep).ForEach([&](int e) { out.Insert(new_of_old[e]); });
    return out;
  };
  const int r = m.Rank(keep);
  std::vector<std::unordered_set<Subset, SubsetHash>> seen(r + 1);
  std::vector<std::vector<Subset>> levels(r + 1);
  for (int f = 0; f < m.NumFlats(); ++f) {
    Subset trace = m.Flat(f) & keep;
    int k = m.Rank(trace);
    Subset image = reindex(trace);
    if (seen[k].insert(image).second) levels[k].push_back(image);
  }
  return Matroid::FromFlats(GroundSet(std::move(labels)), std::move(levels),
                            m.name().empty() ? "" : m.name() + "|S");
}

inline Matroid Delete(const Matroid& m, const Subset& removed) {
  return Restrict(m, m.All() - removed);
}

// M/C: flats are F - C for flats F containing cl(C), rank r(F) - r(C).
inline Matroid Contract(const Matroid& m, const Subset& contracted) {
  const Subset base = m.Closure(contracted);
  const int rc = m.Rank(contracted);
  const Subset keep = m.All() - contracted;
  std::vector<int> new_of_old(m.size(), -1);
  std::vector<std::string> labels;
  keep.ForEach([&](int e) {
    new_of_old[e] = static_cast<int>(labels.size());
    labels.push_back(m.ground().label(e));
  });
  std::vector<std::vector<Subset>> levels(m.rank() - rc + 1);
  for (int f = 0; f < m.NumFlats(); ++f) {
    if (!base.IsSubsetOf(m.Flat(f))) continue;
    Subset image;
    (m.Flat(f) & keep).ForEach([&](int e) { image.Insert(new_of_old[e]); });
    levels[m.FlatRank(f) - rc].push_back(image);
  }
  return Matroid::FromFlats(GroundSet(std::move(labels)), std::move(levels),
                            m.name().empty() ? "" : m.name() + "/C");
}

inline Matroid Minor(const Matroid& m, const Subset& deleted,
                     const Subset& contracted) {
  if (deleted.Intersects(contracted)) {
    throw MatroidError(ErrorKind::kOverlap,
                       "deletion and contraction sets overlap in {" +
                           m.Format(deleted & contracted) + "}");
  }
  Matroid c = Contract(m, contracted);
  Subset del;
  for (const std::string& label : m.ground().Labels(deleted)) {
    del.Insert(*c.ground().IndexOf(label));
  }
  return Delete(c, del);
}

// Subset of `to` with the same labels as `s` in `from`; labels missing from
// `to` are dropped.
inline Subset TranslateSubset(const GroundSet& from, const Subset& s,
                              const GroundSet& to) {
  Subset out;
  s.ForEach([&](int e) {
    if (auto j = to.IndexOf(from.label(e))) out.Insert(*j);
  });
  return out;
}

// Restriction to the elements of `m` whose labels appear in `labels`, keeping
// the order of `labels`.
inline Matroid RestrictToLabels(const Matroid& m,
                                const std::vector<std::string>& labels) {
  Subset keep;
  for (const std::string& label : labels) {
    auto idx = m.ground().IndexOf(label);
    if (!idx) {
      throw MatroidError(ErrorKind::kPreconditionFailed,
                         "label '" + label + "' not in matroid");
    }
    keep.Insert(*idx);
  }
  Matroid r = Restrict(m, keep);
  // Reorder to the requested label order.
  GroundSet ordered(labels);
  std::vector<std::vector<Subset>> levels(r.rank() + 1);
  for (int f = 0; f < r.NumFlats(); ++f) {
    levels[r.FlatRank(f)].push_back(TranslateSubset(r.ground(), r.Flat(f), ordered));
  }
  return Matroid::FromFlats(ordered, std::move(levels), r.name());
}

}  // namespace matroid_lab

#endif  // MATROID_LAB_MATROID_HPP_
