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

// Line-oriented matroid file format.
//
//   # comment
//   name: U24
//   elements: a b c d
//   rank: 2                       (optional, validated)
//   representation: bases         (bases|nonbases|circuits|flats|ranktable)
//   a b
//   a c
//   ...
//
// flats records read `k: e1 e2 ...`; ranktable records read
// `e1 e2 ... = k` and must cover every subset. A record consisting of `{}`
// denotes the empty set. Serialization always emits the flats form, ranks
// ascending, elements in declaration order.

#ifndef MATROID_LAB_IO_HPP_
#define MATROID_LAB_IO_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "matroid_lab/matroid.hpp"
#include "matroid_lab/rank_table.hpp"

namespace matroid_lab {

enum class Representation { kBases, kNonbases, kCircuits, kFlats, kRankTable };

namespace internal {

inline std::string Trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] inline void ParseFail(int line, const std::string& message) {
  throw MatroidError(ErrorKind::kParse,
                     "line " + std::to_string(line) + ": " + message);
}

struct RawFile {
  std::string name;
  std::optional<std::vector<std::string>> elements;
  std::optional<int> rank;
  std::optional<Representation> representation;
  std::vector<std::pair<int, std::string>> records;  // (line number, text)
};

inline int ParseInt(int line, const std::string& text) {
  try {
    size_t used = 0;
    int v = std::stoi(text, &used);
    if (used != text.size()) ParseFail(line, "expected an integer, got '" + text + "'");
    return v;
  } catch (const std::logic_error&) {
    ParseFail(line, "expected an integer, got '" + text + "'");
  }
}

inline RawFile ReadRaw(std::string_view text) {
  RawFile raw;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::string t = Trim(line);
    if (t.empty()) continue;
    if (raw.representation) {
      raw.records.emplace_back(number, t);
      continue;
    }
    auto colon = t.find(':');
    if (colon == std::string::npos) ParseFail(number, "expected 'key: value'");
    std::string key = Trim(std::string_view(t).substr(0, colon));
    std::string value = Trim(std::string_view(t).substr(colon + 1));
    if (key == "name") {
      raw.name = value;
    } else if (key == "elements") {
      std::istringstream vs(value);
      std::vector<std::string> labels;
      std::string token;
      while (vs >> token) labels.push_back(token);
      raw.elements = std::move(labels);
    } else if (key == "rank") {
      raw.rank = ParseInt(number, value);
    } else if (key == "representation") {
      if (value == "bases") raw.representation = Representation::kBases;
      else if (value == "nonbases") raw.representation = Representation::kNonbases;
      else if (value == "circuits") raw.representation = Representation::kCircuits;
      else if (value == "flats") raw.representation = Representation::kFlats;
      else if (value == "ranktable") raw.representation = Representation::kRankTable;
      else ParseFail(number, "unknown representation '" + value + "'");
    } else {
      ParseFail(number, "unknown key '" + key + "'");
    }
  }
  if (!raw.elements) throw MatroidError(ErrorKind::kParse, "missing 'elements:' line");
  if (!raw.representation) {
    throw MatroidError(ErrorKind::kParse, "missing 'representation:' line");
  }
  return raw;
}

inline Subset ParseRecordSet(const GroundSet& g, int line, const std::string& text) {
  if (text == "{}") return Subset();
  try {
    return g.Parse(text);
  } catch (const MatroidError& e) {
    ParseFail(line, e.what());
  }
}

inline std::vector<Subset> ParseSetRecords(const GroundSet& g, const RawFile& raw) {
  std::vector<Subset> sets;
  std::set<Subset> seen;
  for (const auto& [line, text] : raw.records) {
    Subset s = ParseRecordSet(g, line, text);
    if (!seen.insert(s).second) ParseFail(line, "duplicate record {" + text + "}");
    sets.push_back(s);
  }
  return sets;
}

inline RankFunction BasisRank(std::vector<Subset> bases) {
  return [bases = std::move(bases)](const Subset& x) {
    int best = 0;
    for (const Subset& b : bases) best = std::max(best, (x & b).Count());
    return best;
  };
}

inline void CheckBasisExchange(const GroundSet& g, const std::vector<Subset>& bases) {
  if (bases.empty()) NotAMatroid("no bases given");
  std::set<Subset> lookup(bases.begin(), bases.end());
  const int r = bases[0].Count();
  for (const Subset& b : bases) {
    if (b.Count() != r) {
      NotAMatroid("bases {" + g.Format(bases[0]) + "} and {" + g.Format(b) +
                  "} differ in size");
    }
  }
  for (const Subset& b1 : bases) {
    for (const Subset& b2 : bases) {
      bool ok = true;
      (b1 - b2).ForEach([&](int x) {
        if (!ok) return;
        bool found = false;
        (b2 - b1).ForEach([&](int y) {
          if (!found && lookup.count(b1.Without(x).With(y))) found = true;
        });
        if (!found) ok = false;
      });
      if (!ok) {
        NotAMatroid("basis exchange fails for {" + g.Format(b1) + "} and {" +
                    g.Format(b2) + "}");
      }
    }
  }
}

inline void CheckCircuitAxioms(const GroundSet& g, const std::vector<Subset>& circuits) {
  for (const Subset& c : circuits) {
    if (c.Empty()) NotAMatroid("the empty set is listed as a circuit");
  }
  for (const Subset& c1 : circuits) {
    for (const Subset& c2 : circuits) {
      if (c1 == c2) continue;
      if (c1.IsSubsetOf(c2)) {
        NotAMatroid("circuit {" + g.Format(c1) + "} is contained in {" +
                    g.Format(c2) + "}");
      }
      bool ok = true;
      (c1 & c2).ForEach([&](int e) {
        if (!ok) return;
        Subset pool = (c1 | c2).Without(e);
        ok = std::any_of(circuits.begin(), circuits.end(),
                         [&](const Subset& c3) { return c3.IsSubsetOf(pool); });
      });
      if (!ok) {
        NotAMatroid("circuit elimination fails for {" + g.Format(c1) + "} and {" +
                    g.Format(c2) + "}");
      }
    }
  }
}

}  // namespace internal

// Parses a rank table without checking the rank axioms.
inline RankTable ParseRankTable(std::string_view text) {
  internal::RawFile raw = internal::ReadRaw(text);
  if (*raw.representation != Representation::kRankTable) {
    throw MatroidError(ErrorKind::kParse, "representation is not ranktable");
  }
  GroundSet g(*raw.elements);
  if (g.size() > kMaxRankTableElements) {
    throw MatroidError(ErrorKind::kTooLarge, "rank tables need |E| <= 20");
  }
  RankTable table{g, std::vector<int>(size_t{1} << g.size(), -1)};
  for (const auto& [line, text_line] : raw.records) {
    auto eq = text_line.find('=');
    if (eq == std::string::npos) internal::ParseFail(line, "expected '<labels> = <rank>'");
    std::string lhs = internal::Trim(std::string_view(text_line).substr(0, eq));
    std::string rhs = internal::Trim(std::string_view(text_line).substr(eq + 1));
    Subset s = lhs.empty() ? Subset() : internal::ParseRecordSet(g, line, lhs);
    uint32_t mask = static_cast<uint32_t>(s.LowWord());
    if (table.rank[mask] >= 0) internal::ParseFail(line, "subset listed twice");
    table.rank[mask] = internal::ParseInt(line, rhs);
  }
  for (uint32_t mask = 0; mask < table.rank.size(); ++mask) {
    if (table.rank[mask] < 0) {
      throw MatroidError(ErrorKind::kParse,
                         "rank table misses subset {" +
                             g.Format(Subset::FromLowWord(mask)) + "}");
    }
  }
  return table;
}

inline Matroid MatroidFromRankTable(const RankTable& table, std::string name = {}) {
  if (auto v = CheckRankAxioms(table)) {
    internal::NotAMatroid(v->Describe(table.ground));
  }
  return Matroid::FromRankFunction(
      table.ground, [&](const Subset& s) { return table(s); }, std::move(name));
}

inline Matroid ParseMatroid(std::string_view text) {
  internal::RawFile raw = internal::ReadRaw(text);
  GroundSet g(*raw.elements);
  Matroid m;
  switch (*raw.representation) {
    case Representation::kBases: {
      auto bases = internal::ParseSetRecords(g, raw);
      internal::CheckBasisExchange(g, bases);
      m = Matroid::FromRankFunction(g, internal::BasisRank(bases), raw.name);
      break;
    }
    case Representation::kNonbases: {
      if (!raw.rank) {
        throw MatroidError(ErrorKind::kParse, "nonbases representation needs 'rank:'");
      }
      const int r = *raw.rank;
      const int n = g.size();
      if (r < 0 || r > n) throw MatroidError(ErrorKind::kParse, "rank out of range");
      auto nonbases = internal::ParseSetRecords(g, raw);
      std::set<Subset> excluded;
      for (const Subset& s : nonbases) {
        if (s.Count() != r) {
          throw MatroidError(ErrorKind::kParse,
                             "nonbasis {" + g.Format(s) + "} is not of size " +
                                 std::to_string(r));
        }
        excluded.insert(s);
      }
      // Enumerate r-subsets in lexicographic order.
      std::vector<Subset> bases;
      std::vector<int> pick(r);
      for (int i = 0; i < r; ++i) pick[i] = i;
      while (true) {
        Subset s;
        for (int i : pick) s.Insert(i);
        if (!excluded.count(s)) bases.push_back(s);
        if (bases.size() > 2'000'000) {
          throw MatroidError(ErrorKind::kTooLarge, "too many bases");
        }
        int i = r - 1;
        while (i >= 0 && pick[i] == n - r + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
      }
      internal::CheckBasisExchange(g, bases);
      m = Matroid::FromRankFunction(g, internal::BasisRank(bases), raw.name);
      break;
    }
    case Representation::kCircuits: {
      auto circuits = internal::ParseSetRecords(g, raw);
      internal::CheckCircuitAxioms(g, circuits);
      auto rank = [&](const Subset& x) {
        Subset independent;
        x.ForEach([&](int e) {
          Subset trial = independent.With(e);
          bool dependent = std::any_of(
              circuits.begin(), circuits.end(),
              [&](const Subset& c) { return c.IsSubsetOf(trial); });
          if (!dependent) independent = trial;
        });
        return independent.Count();
      };
      m = Matroid::FromRankFunction(g, rank, raw.name);
      break;
    }
    case Representation::kFlats: {
      std::vector<std::vector<Subset>> levels;
      for (const auto& [line, text_line] : raw.records) {
        auto colon = text_line.find(':');
        if (colon == std::string::npos) internal::ParseFail(line, "expected 'k: labels'");
        int k = internal::ParseInt(line, internal::Trim(std::string_view(text_line).substr(0, colon)));
        if (k < 0 || k > g.size()) internal::ParseFail(line, "flat rank out of range");
        std::string rest = internal::Trim(std::string_view(text_line).substr(colon + 1));
        Subset s = rest.empty() ? Subset() : internal::ParseRecordSet(g, line, rest);
        if (static_cast<int>(levels.size()) <= k) levels.resize(k + 1);
        levels[k].push_back(s);
      }
      for (size_t k = 0; k < levels.size(); ++k) {
        if (levels[k].empty()) {
          internal::NotAMatroid("no flats of rank " + std::to_string(k));
        }
      }
      m = Matroid::FromFlats(g, std::move(levels), raw.name, Validation::kFull);
      break;
    }
    case Representation::kRankTable: {
      m = MatroidFromRankTable(ParseRankTable(text), raw.name);
      break;
    }
  }
  if (raw.rank && *raw.rank != m.rank()) {
    internal::NotAMatroid("declared rank " + std::to_string(*raw.rank) +
                          " but the data has rank " + std::to_string(m.rank()));
  }
  return m;
}

inline std::string SerializeMatroid(const Matroid& m) {
  std::ostringstream out;
  if (!m.name().empty()) out << "name: " << m.name() << "\n";
  out << "elements:";
  for (const std::string& label : m.ground().labels()) out << ' ' << label;
  out << "\nrank: " << m.rank() << "\nrepresentation: flats\n";
  for (int f = 0; f < m.NumFlats(); ++f) {
    out << m.FlatRank(f) << ":";
    std::string body = m.Format(m.Flat(f));
    if (!body.empty()) out << ' ' << body;
    out << "\n";
  }
  return out.str();
}

inline std::string SerializeRankTable(const RankTable& t) {
  std::ostringstream out;
  out << "elements:";
  for (const std::string& label : t.ground.labels()) out << ' ' << label;
  out << "\nrepresentation: ranktable\n";
  for (uint32_t mask = 0; mask < t.rank.size(); ++mask) {
    std::string lhs = t.ground.Format(Subset::FromLowWord(mask));
    out << lhs << (lhs.empty() ? "= " : " = ") << t.rank[mask] << "\n";
  }
  return out.str();
}

}  // namespace matroid_lab

#endif  // MATROID_LAB_IO_HPP_
