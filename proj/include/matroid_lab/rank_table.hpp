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

#ifndef MATROID_LAB_RANK_TABLE_HPP_
#define MATROID_LAB_RANK_TABLE_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "matroid_lab/matroid.hpp"

namespace matroid_lab {

inline constexpr int kMaxRankTableElements = 20;

// Explicit rank of every subset, indexed by bitmask. Used as an interchange
// format and as an unvalidated form for would-be matroids.
struct RankTable {
  GroundSet ground;
  std::vector<int> rank;

  int size() const { return ground.size(); }
  int operator()(uint32_t mask) const { return rank[mask]; }
  int operator()(const Subset& s) const {
    return rank[static_cast<uint32_t>(s.LowWord())];
  }
};

inline RankTable RankTableOf(const Matroid& m) {
  if (m.size() > kMaxRankTableElements) {
    throw MatroidError(ErrorKind::kTooLarge,
                       "rank table needs |E| <= " +
                           std::to_string(kMaxRankTableElements));
  }
  RankTable table{m.ground(), std::vector<int>(size_t{1} << m.size())};
  for (uint32_t mask = 0; mask < table.rank.size(); ++mask) {
    table.rank[mask] = m.Rank(Subset::FromLowWord(mask));
  }
  return table;
}

// A rank-axiom failure with the sets that witness it.
struct AxiomViolation {
  std::string axiom;  // "R1", "R2" or "R3"
  Subset x;
  Subset y;
  std::string Describe(const GroundSet& g) const {
    return axiom + " fails for X={" + g.Format(x) + "}, Y={" + g.Format(y) + "}";
  }
};

namespace internal {

template <class RankFn>
std::optional<AxiomViolation> CheckPair(const RankFn& rank, const Subset& x,
                                        const Subset& y) {
  int rx = rank(x), ry = rank(y);
  if (rx < 0 || rx > x.Count()) return AxiomViolation{"R1", x, x};
  if (x.IsSubsetOf(y) && rx > ry) return AxiomViolation{"R2", x, y};
  if (y.IsSubsetOf(x) && ry > rx) return AxiomViolation{"R2", y, x};
  if (rx + ry < rank(x | y) + rank(x & y)) return AxiomViolation{"R3", x, y};
  return std::nullopt;
}

}  // namespace internal

// R1 (0 <= r(X) <= |X|), R2 (monotone) and R3 (submodular) over all pairs.
inline std::optional<AxiomViolation> CheckRankAxioms(const RankTable& t) {
  const uint32_t count = static_cast<uint32_t>(t.rank.size());
  for (uint32_t x = 0; x < count; ++x) {
    if (t(x) < 0 || t(x) > std::popcount(x)) {
      return AxiomViolation{"R1", Subset::FromLowWord(x), Subset::FromLowWord(x)};
    }
  }
  // Local forms are equivalent to the global axioms on a finite set:
  // r(X) <= r(X+e) and r(X+a) + r(X+b) >= r(X+a+b) + r(X).
  const int n = t.size();
  for (uint32_t x = 0; x < count; ++x) {
    for (int a = 0; a < n; ++a) {
      uint32_t xa = x | (1U << a);
      if (xa == x) continue;
      if (t(x) > t(xa)) {
        return AxiomViolation{"R2", Subset::FromLowWord(x), Subset::FromLowWord(xa)};
      }
      for (int b = a + 1; b < n; ++b) {
        uint32_t xb = x | (1U << b);
        if (xb == x) continue;
        if (t(xa) + t(xb) < t(xa | xb) + t(x)) {
          return AxiomViolation{"R3", Subset::FromLowWord(xa),
                                Subset::FromLowWord(xb)};
        }
      }
    }
  }
  return std::nullopt;
}

// Checks the derived rank function of `m`: exhaustively over all pairs of
// subsets when |E| <= exhaustive_limit, otherwise over `samples` random
// pairs drawn from a generator seeded with `seed`.
inline std::optional<AxiomViolation> CheckMatroidAxioms(
    const Matroid& m, uint64_t seed = 1, int samples = 100'000,
    int exhaustive_limit = 10) {
  auto rank = [&](const Subset& s) { return m.Rank(s); };
  const int n = m.size();
  if (n <= exhaustive_limit) {
    const uint64_t count = uint64_t{1} << n;
    for (uint64_t x = 0; x < count; ++x) {
      for (uint64_t y = x; y < count; ++y) {
        auto v = internal::CheckPair(rank, Subset::FromLowWord(x),
                                     Subset::FromLowWord(y));
        if (v) return v;
      }
    }
    return std::nullopt;
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<int> density(1, 9);
  for (int i = 0; i < samples; ++i) {
    // Vary the density so small and near-spanning sets both get exercised.
    std::bernoulli_distribution px(density(rng) / 10.0);
    std::bernoulli_distribution py(density(rng) / 10.0);
    Subset x, y;
    for (int e = 0; e < n; ++e) {
      if (px(rng)) x.Insert(e);
      if (py(rng)) y.Insert(e);
    }
    if (coin(rng)) y |= x;  // exercise monotonicity on nested pairs
    auto v = internal::CheckPair(rank, x, y);
    if (v) return v;
  }
  return std::nullopt;
}

// Closure in a raw rank table: X plus every e with r(X + e) = r(X).
inline uint32_t TableClosure(const RankTable& t, uint32_t x) {
  uint32_t c = x;
  for (int e = 0; e < t.size(); ++e) {
    uint32_t xe = x | (1U << e);
    if (xe != x && t(xe) == t(x)) c |= 1U << e;
  }
  return c;
}

// Closed sets of the given rank in a raw rank table.
inline std::vector<Subset> TableFlats(const RankTable& t, int k) {
  std::vector<Subset> out;
  for (uint32_t x = 0; x < t.rank.size(); ++x) {
    if (t(x) == k && TableClosure(t, x) == x) out.push_back(Subset::FromLowWord(x));
  }
  return out;
}

}  // namespace matroid_lab

#endif  // MATROID_LAB_RANK_TABLE_HPP_
