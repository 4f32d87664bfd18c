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

// Named matroid families with fixed labelings.
//
//   Uniform(r, n), Free(n): elements a, b, c, ... (e1, e2, ... when n > 26).
//   Vamos(): a1 a2 b1 b2 c1 c2 d1 d2; the five nonbases are the unions of
//     the pairs {a,b}, {a,c}, {a,d}, {b,c}, {b,d} of the four lines.
//   ProjectiveSpace3(q), q in {2,3,4}: points of PG(3,q) labelled by their
//     normalized coordinate vector (first non-zero entry 1) written as four
//     digits; GF(4) = {0,1,2,3} with 2 = x, 3 = x + 1, x^2 = x + 1.

#ifndef MATROID_LAB_GENERATORS_HPP_
#define MATROID_LAB_GENERATORS_HPP_

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "matroid_lab/matroid.hpp"

namespace matroid_lab {

inline std::vector<std::string> LetterLabels(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    labels.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i))
                             : "e" + std::to_string(i + 1));
  }
  return labels;
}

inline Matroid Uniform(int r, int n) {
  if (n < 0 || r < 0 || r > n) {
    throw MatroidError(ErrorKind::kUnsupportedParam,
                       "uniform(" + std::to_string(r) + "," + std::to_string(n) +
                           ") needs 0 <= r <= n");
  }
  if (n > kMaxElements) {
    throw MatroidError(ErrorKind::kCapacityExceeded, "too many elements");
  }
  // Flats are the sets of size < r plus E.
  double total = 0, binom = 1;
  for (int k = 0; k < r; ++k) {
    total += binom;
    binom = binom * (n - k) / (k + 1);
  }
  if (total > 2e6) {
    throw MatroidError(ErrorKind::kTooLarge, "uniform matroid has too many flats");
  }
  std::vector<std::vector<Subset>> levels(r + 1);
  std::vector<int> pick;
  // Depth-first enumeration of k-subsets in lexicographic order.
  auto emit = [&](auto&& self, int start, int k) -> void {
    if (static_cast<int>(pick.size()) == k) {
      Subset s;
      for (int i : pick) s.Insert(i);
      levels[k].push_back(s);
      return;
    }
    for (int i = start; i < n; ++i) {
      pick.push_back(i);
      self(self, i + 1, k);
      pick.pop_back();
    }
  };
  for (int k = 0; k < r; ++k) emit(emit, 0, k);
  levels[r].push_back(Subset::Range(n));
  return Matroid::FromFlats(GroundSet(LetterLabels(n)), std::move(levels),
                            "U" + std::to_string(r) + "," + std::to_string(n));
}

inline Matroid Free(int n) { return Uniform(n, n).WithName("free" + std::to_string(n)); }

inline Matroid Vamos() {
  GroundSet g({"a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2"});
  auto line = [](int i) { return Subset{2 * i, 2 * i + 1}; };
  const std::array<std::pair<int, int>, 5> pairs = {
      std::pair{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
  std::vector<Subset> nonbases;
  for (auto [i, j] : pairs) nonbases.push_back(line(i) | line(j));
  auto rank = [nonbases](const Subset& x) {
    int c = x.Count();
    if (c == 4) {
      for (const Subset& nb : nonbases) {
        if (x == nb) return 3;
      }
    }
    return std::min(c, 4);
  };
  return Matroid::FromRankFunction(g, rank, "V8");
}

// Arithmetic in GF(q) for q in {2, 3, 4}.
class SmallField {
 public:
  explicit SmallField(int q) : q_(q) {
    if (q != 2 && q != 3 && q != 4) {
      throw MatroidError(ErrorKind::kUnsupportedParam,
                         "field order " + std::to_string(q) + " not in {2,3,4}");
    }
  }
  int order() const { return q_; }
  int Add(int a, int b) const { return q_ == 4 ? (a ^ b) : (a + b) % q_; }
  int Neg(int a) const { return q_ == 4 ? a : (q_ - a) % q_; }
  int Mul(int a, int b) const {
    if (q_ != 4) return (a * b) % q_;
    static constexpr int kTable[4][4] = {
        {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    return kTable[a][b];
  }
  int Inv(int a) const {
    for (int b = 1; b < q_; ++b) {
      if (Mul(a, b) == 1) return b;
    }
    throw MatroidError(ErrorKind::kOutOfRange, "zero has no inverse");
  }

 private:
  int q_;
};

using Vec4 = std::array<int, 4>;

// Rank of a list of vectors by Gaussian elimination.
inline int VectorRank(const SmallField& f, std::vector<Vec4> rows) {
  int rank = 0;
  for (int col = 0; col < 4 && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    int inv = f.Inv(rows[rank][col]);
    for (int& v : rows[rank]) v = f.Mul(v, inv);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      int factor = f.Neg(rows[i][col]);
      for (int c = 0; c < 4; ++c) {
        rows[i][c] = f.Add(rows[i][c], f.Mul(factor, rows[rank][c]));
      }
    }
    ++rank;
  }
  return rank;
}

// Normalized representatives of the points of PG(3,q), in lexicographic order
// of their coordinates.
inline std::vector<Vec4> ProjectivePoints(int q) {
  std::vector<Vec4> points;
  for (int code = 1; code < q * q * q * q; ++code) {
    Vec4 v{};
    int c = code;
    for (int i = 3; i >= 0; --i) {
      v[i] = c % q;
      c /= q;
    }
    int lead = 0;
    while (v[lead] == 0) ++lead;
    if (v[lead] == 1) points.push_back(v);
  }
  return points;
}

inline Matroid ProjectiveSpace3(int q) {
  SmallField field(q);
  std::vector<Vec4> points = ProjectivePoints(q);
  std::vector<std::string> labels;
  for (const Vec4& v : points) {
    std::string label;
    for (int x : v) label += static_cast<char>('0' + x);
    labels.push_back(label);
  }
  auto rank = [&](const Subset& x) {
    std::vector<Vec4> rows;
    x.ForEach([&](int i) { rows.push_back(points[i]); });
    return VectorRank(field, std::move(rows));
  };
  return Matroid::FromRankFunction(GroundSet(std::move(labels)), rank,
                                   "PG(3," + std::to_string(q) + ")",
                                   Validation::kStructure);
}

// PG(3,q) with the point 0001 deleted.
inline Matroid ProjectiveSpace3MinusPoint(int q) {
  Matroid pg = ProjectiveSpace3(q);
  Matroid m = Delete(pg, Subset::Single(*pg.ground().IndexOf("0001")));
  return m.WithName("PG(3," + std::to_string(q) + ")-0001");
}

}  // namespace matroid_lab

#endif  // MATROID_LAB_GENERATORS_HPP_
