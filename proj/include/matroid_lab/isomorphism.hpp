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

#ifndef MATROID_LAB_ISOMORPHISM_HPP_
#define MATROID_LAB_ISOMORPHISM_HPP_

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "matroid_lab/matroid.hpp"

namespace matroid_lab {

inline constexpr int kDefaultIsomorphismBound = 20;

namespace internal {

// Per-element invariant: for each rank, the sorted sizes of the flats
// through the element.
inline std::vector<std::vector<int>> ElementSignature(const Matroid& m, int e) {
  std::vector<std::vector<int>> sig(m.rank() + 1);
  for (int f = 0; f < m.NumFlats(); ++f) {
    if (m.Flat(f).Contains(e)) sig[m.FlatRank(f)].push_back(m.Flat(f).Count());
  }
  for (auto& v : sig) std::sort(v.begin(), v.end());
  return sig;
}

inline bool MapsFlatsToFlats(const Matroid& a, const Matroid& b,
                             const std::vector<int>& map) {
  for (int f = 0; f < a.NumFlats(); ++f) {
    Subset image;
    a.Flat(f).ForEach([&](int e) { image.Insert(map[e]); });
    auto idx = b.FlatIndex(image);
    if (!idx || b.FlatRank(*idx) != a.FlatRank(f)) return false;
  }
  return true;
}

}  // namespace internal

// A bijection map[i] = index in `b` of the image of element i of `a`, or
// nullopt. Deterministic backtracking: elements of `a` are assigned in order,
// candidates tried in index order, pruned by element signatures and by rank
// preservation on traces of flats.
inline std::optional<std::vector<int>> FindIsomorphism(
    const Matroid& a, const Matroid& b, int bound = kDefaultIsomorphismBound) {
  if (a.size() > bound || b.size() > bound) {
    throw MatroidError(ErrorKind::kTooLarge,
                       "isomorphism search is limited to " +
                           std::to_string(bound) + " elements");
  }
  if (a.size() != b.size() || a.rank() != b.rank() ||
      a.NumFlats() != b.NumFlats()) {
    return std::nullopt;
  }
  for (int k = 0; k <= a.rank(); ++k) {
    if (a.FlatEnd(k) - a.FlatBegin(k) != b.FlatEnd(k) - b.FlatBegin(k)) {
      return std::nullopt;
    }
  }
  const int n = a.size();
  std::vector<std::vector<std::vector<int>>> sig_a(n), sig_b(n);
  for (int e = 0; e < n; ++e) {
    sig_a[e] = internal::ElementSignature(a, e);
    sig_b[e] = internal::ElementSignature(b, e);
  }
  std::vector<std::vector<int>> flats_through(n);
  for (int f = 0; f < a.NumFlats(); ++f) {
    a.Flat(f).ForEach([&](int e) { flats_through[e].push_back(f); });
  }

  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  Subset assigned;
  auto consistent = [&](int x) {
    for (int f : flats_through[x]) {
      Subset trace = a.Flat(f) & assigned;
      Subset image;
      trace.ForEach([&](int e) { image.Insert(map[e]); });
      if (a.Rank(trace) != b.Rank(image)) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, int x) -> bool {
    if (x == n) return internal::MapsFlatsToFlats(a, b, map);
    for (int y = 0; y < n; ++y) {
      if (used[y] || sig_a[x] != sig_b[y]) continue;
      map[x] = y;
      used[y] = 1;
      assigned.Insert(x);
      if (consistent(x) && self(self, x + 1)) return true;
      assigned.Erase(x);
      used[y] = 0;
      map[x] = -1;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return map;
}

inline bool AreIsomorphic(const Matroid& a, const Matroid& b,
                          int bound = kDefaultIsomorphismBound) {
  return FindIsomorphism(a, b, bound).has_value();
}

}  // namespace matroid_lab

#endif  // MATROID_LAB_ISOMORPHISM_HPP_
