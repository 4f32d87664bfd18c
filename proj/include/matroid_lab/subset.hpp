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

#ifndef MATROID_LAB_SUBSET_HPP_
#define MATROID_LAB_SUBSET_HPP_

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "matroid_lab/error.hpp"

namespace matroid_lab {

inline constexpr int kMaxElements = 256;

// Fixed-capacity set of element indices. Ordering is lexicographic on the
// ascending member lists, so {0,1} < {0,2} < {1}.
class Subset {
 public:
  static constexpr int kWords = kMaxElements / 64;

  constexpr Subset() = default;

  Subset(std::initializer_list<int> members) {
    for (int i : members) Insert(i);
  }

  static Subset Range(int n) {
    Subset s;
    for (int w = 0; w < kWords && n > 0; ++w, n -= 64) {
      s.words_[w] = n >= 64 ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
    }
    return s;
  }

  static Subset Single(int i) {
    Subset s;
    s.Insert(i);
    return s;
  }

  bool Contains(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void Insert(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  void Erase(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

  Subset With(int i) const {
    Subset s = *this;
    s.Insert(i);
    return s;
  }
  Subset Without(int i) const {
    Subset s = *this;
    s.Erase(i);
    return s;
  }

  int Count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool Empty() const {
    for (uint64_t w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  bool IsSubsetOf(const Subset& other) const {
    for (int w = 0; w < kWords; ++w) {
      if (words_[w] & ~other.words_[w]) return false;
    }
    return true;
  }

  bool Intersects(const Subset& other) const {
    for (int w = 0; w < kWords; ++w) {
      if (words_[w] & other.words_[w]) return true;
    }
    return false;
  }

  // Smallest member, or -1.
  int First() const { return NextFrom(0); }

  // Smallest member >= i, or -1.
  int NextFrom(int i) const {
    if (i >= kMaxElements) return -1;
    int w = i >> 6;
    uint64_t bits = words_[w] & (~uint64_t{0} << (i & 63));
    while (true) {
      if (bits != 0) return (w << 6) + std::countr_zero(bits);
      if (++w == kWords) return -1;
      bits = words_[w];
    }
  }

  // Largest member, or -1.
  int Last() const {
    for (int w = kWords - 1; w >= 0; --w) {
      if (words_[w] != 0) return (w << 6) + 63 - std::countl_zero(words_[w]);
    }
    return -1;
  }

  template <class F>
  void ForEach(F&& f) const {
    for (int w = 0; w < kWords; ++w) {
      uint64_t bits = words_[w];
      while (bits != 0) {
        f((w << 6) + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> Members() const {
    std::vector<int> out;
    ForEach([&](int i) { out.push_back(i); });
    return out;
  }

  // Low 64 bits; only meaningful when every member is < 64.
  uint64_t LowWord() const { return words_[0]; }
  static Subset FromLowWord(uint64_t bits) {
    Subset s;
    s.words_[0] = bits;
    return s;
  }

  Subset& operator|=(const Subset& o) {
    for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  Subset& operator&=(const Subset& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  // Set difference.
  Subset& operator-=(const Subset& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

  friend bool operator==(const Subset& a, const Subset& b) = default;

  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
    // The first differing index m decides: the set holding m is smaller
    // unless the other set has nothing beyond m.
    Subset diff;
    for (int w = 0; w < kWords; ++w) diff.words_[w] = a.words_[w] ^ b.words_[w];
    int m = diff.First();
    if (m < 0) return std::strong_ordering::equal;
    const Subset& holder = a.Contains(m) ? a : b;
    const Subset& other = a.Contains(m) ? b : a;
    bool holder_smaller = other.NextFrom(m + 1) >= 0;
    bool a_smaller = (&holder == &a) == holder_smaller;
    return a_smaller ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  size_t Hash() const {
    uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (uint64_t w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
  }

 private:
  std::array<uint64_t, kWords> words_{};
};

struct SubsetHash {
  size_t operator()(const Subset& s) const { return s.Hash(); }
};

// Ordered, immutable list of distinct element labels.
class GroundSet {
 public:
  GroundSet() : data_(std::make_shared<Data>()) {}

  explicit GroundSet(std::vector<std::string> labels) {
    auto data = std::make_shared<Data>();
    if (static_cast<int>(labels.size()) > kMaxElements) {
      throw MatroidError(ErrorKind::kCapacityExceeded,
                         "ground set of " + std::to_string(labels.size()) +
                             " elements exceeds capacity " +
                             std::to_string(kMaxElements));
    }
    for (size_t i = 0; i < labels.size(); ++i) {
      const std::string& label = labels[i];
      if (!IsValidLabel(label)) {
        throw MatroidError(ErrorKind::kParse,
                           "invalid element label '" + label + "'");
      }
      if (!data->index.emplace(label, static_cast<int>(i)).second) {
        throw MatroidError(ErrorKind::kParse,
                           "duplicate element label '" + label + "'");
      }
    }
    data->labels = std::move(labels);
    data_ = std::move(data);
  }

  static bool IsValidLabel(std::string_view label) {
    if (label.empty()) return false;
    for (char c : label) {
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
          c == '\f' || c == '#' || c == ';' || c == ':' || c == '=') {
        return false;
      }
    }
    return true;
  }

  int size() const { return static_cast<int>(data_->labels.size()); }
  const std::string& label(int i) const { return data_->labels[i]; }
  const std::vector<std::string>& labels() const { return data_->labels; }

  std::optional<int> IndexOf(std::string_view label) const {
    auto it = data_->index.find(std::string(label));
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
  }

  bool Contains(std::string_view label) const {
    return IndexOf(label).has_value();
  }

  Subset All() const { return Subset::Range(size()); }

  GroundSet Extended(const std::string& label) const {
    if (Contains(label)) {
      throw MatroidError(ErrorKind::kLabelClash,
                         "label '" + label + "' already in ground set");
    }
    std::vector<std::string> labels = data_->labels;
    labels.push_back(label);
    return GroundSet(std::move(labels));
  }

  // Whitespace-separated labels; unknown labels are a parse error.
  Subset Parse(std::string_view text) const {
    Subset s;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
      auto idx = IndexOf(token);
      if (!idx) {
        throw MatroidError(ErrorKind::kParse, "unknown element '" + token + "'");
      }
      s.Insert(*idx);
    }
    return s;
  }

  std::vector<std::string> Labels(const Subset& s) const {
    std::vector<std::string> out;
    s.ForEach([&](int i) { out.push_back(label(i)); });
    return out;
  }

  std::string Format(const Subset& s) const {
    std::string out;
    s.ForEach([&](int i) {
      if (!out.empty()) out += ' ';
      out += label(i);
    });
    return out;
  }

  // First label of the form prefix+N (N = 1, 2, ...) not yet used.
  std::string FreshLabel(std::string_view prefix) const {
    for (int n = 1;; ++n) {
      std::string candidate = std::string(prefix) + std::to_string(n);
      if (!Contains(candidate)) return candidate;
    }
  }

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.data_ == b.data_ || a.data_->labels == b.data_->labels;
  }

 private:
  struct Data {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;
  };
  std::shared_ptr<const Data> data_;
};

}  // namespace matroid_lab

#endif  // MATROID_LAB_SUBSET_HPP_
