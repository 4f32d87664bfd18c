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


#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "matroid_lab/matroid_lab.hpp"
#include "matroid_lab/testing/oracles.hpp"

namespace matroid_lab {
namespace {

using ::matroid_lab::testing::BruteBasisCount;
using ::matroid_lab::testing::BruteIsomorphic;
using ::matroid_lab::testing::ContractionMatches;
using ::matroid_lab::testing::GaussianBinomial;

template <class F>
ErrorKind KindOf(F&& f) {
  try {
    f();
  } catch (const MatroidError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no MatroidError thrown";
  return ErrorKind::kParse;
}

TEST(SubsetTest, SetOperations) {
  Subset a{0, 3, 200};
  Subset b{3, 5};
  EXPECT_EQ((a | b).Count(), 4);
  EXPECT_EQ(a & b, Subset{3});
  EXPECT_EQ(a - b, (Subset{0, 200}));
  EXPECT_TRUE(Subset{3}.IsSubsetOf(a));
  EXPECT_EQ(a.Last(), 200);
  EXPECT_EQ(a.Members(), (std::vector<int>{0, 3, 200}));
  EXPECT_TRUE(Subset().Empty());
  EXPECT_LT(Subset({0, 1}), Subset({0, 2}));
}

TEST(GroundSetTest, RejectsBadLabels) {
  EXPECT_EQ(KindOf([] { GroundSet({"a", "a"}); }), ErrorKind::kParse);
  EXPECT_EQ(KindOf([] { GroundSet({"a b"}); }), ErrorKind::kParse);
  EXPECT_EQ(KindOf([] { GroundSet({""}); }), ErrorKind::kParse);
  std::vector<std::string> many;
  for (int i = 0; i < 257; ++i) many.push_back("e" + std::to_string(i));
  EXPECT_EQ(KindOf([&] { GroundSet g(many); }), ErrorKind::kCapacityExceeded);
}

TEST(GroundSetTest, FreshLabelsAndExtension) {
  GroundSet g({"a", "_p1"});
  EXPECT_EQ(g.FreshLabel("_p"), "_p2");
  EXPECT_EQ(g.Extended("x").size(), 3);
  EXPECT_EQ(KindOf([&] { g.Extended("a"); }), ErrorKind::kLabelClash);
  EXPECT_EQ(KindOf([&] { g.Parse("a zz"); }), ErrorKind::kParse);
}

TEST(MatroidTest, UniformBasics) {
  Matroid u = Uniform(2, 4);
  EXPECT_EQ(u.rank(), 2);
  EXPECT_EQ(u.Rank(Subset{0, 1, 2}), 2);
  EXPECT_EQ(u.Rank(Subset{}), 0);
  EXPECT_EQ(u.Flats(1).size(), 4u);
  EXPECT_EQ(u.NumFlats(), 6);
  EXPECT_EQ(KindOf([&] { u.Flats(3); }), ErrorKind::kOutOfRange);
  EXPECT_EQ(KindOf([] { Uniform(3, 2); }), ErrorKind::kUnsupportedParam);
}

TEST(MatroidTest, EmptyMatroid) {
  Matroid m;
  EXPECT_EQ(m.size(), 0);
  EXPECT_EQ(m.rank(), 0);
  EXPECT_EQ(m.NumFlats(), 1);
}

TEST(MatroidTest, ClosureExamples) {
  Matroid u36 = Uniform(3, 6);
  EXPECT_EQ(u36.Closure(Subset{0, 1}), (Subset{0, 1}));
  EXPECT_EQ(u36.Closure(Subset{0, 1, 2}), u36.All());
  Matroid pg = ProjectiveSpace3(2);
  // The line through two points of PG(3,2) also holds their binary sum.
  GroundSet g = pg.ground();
  Subset line = pg.Closure(g.Parse("0001 0010"));
  EXPECT_EQ(line, g.Parse("0001 0010 0011"));
}

TEST(MatroidTest, ProjectiveCountsMatchSubspaceOracle) {
  for (int q : {2, 3, 4}) {
    Matroid pg = ProjectiveSpace3(q);
    EXPECT_EQ(pg.rank(), 4);
    for (int k = 1; k <= 3; ++k) {
      EXPECT_EQ(static_cast<int64_t>(pg.Flats(k).size()), GaussianBinomial(4, k, q))
          << "q=" << q << " k=" << k;
    }
  }
  Matroid pg2 = ProjectiveSpace3(2);
  for (const Subset& line : pg2.Flats(2)) EXPECT_EQ(line.Count(), 3);
}

TEST(MatroidTest, VamosStructure) {
  Matroid v = Vamos();
  EXPECT_EQ(v.size(), 8);
  EXPECT_EQ(v.rank(), 4);
  EXPECT_EQ(BruteBasisCount(v), 65);
  EXPECT_EQ(v.Flats(3).size(), 41u);
  int four_element_planes = 0;
  for (const Subset& p : v.Flats(3)) four_element_planes += p.Count() == 4;
  EXPECT_EQ(four_element_planes, 5);
  EXPECT_EQ(v.Rank(v.ground().Parse("a1 a2 b1 b2")), 3);
}

TEST(MatroidTest, CoverPartitionInvariant) {
  for (const Matroid& m : {Vamos(), ProjectiveSpace3(2), Uniform(3, 6)}) {
    for (int f = 0; f < m.NumFlats(); ++f) {
      if (f == m.TopIndex()) continue;
      Subset seen;
      for (int c : m.Covers(f)) {
        Subset part = m.Flat(c) - m.Flat(f);
        EXPECT_FALSE(part.Intersects(seen));
        seen |= part;
      }
      EXPECT_EQ(seen, m.All() - m.Flat(f));
    }
  }
}

TEST(MatroidTest, MinorsAndOracle) {
  Matroid pg = ProjectiveSpace3(2);
  Matroid d = Delete(pg, Subset{0});
  EXPECT_EQ(d.size(), 14);
  EXPECT_EQ(d.rank(), 4);
  Matroid c = Contract(pg, Subset{0});
  EXPECT_EQ(c.rank(), 3);
  EXPECT_TRUE(ContractionMatches(pg, Subset{0}, c));
  Matroid v = Vamos();
  Matroid vc = Contract(v, Subset{0});
  EXPECT_EQ(vc.size(), 7);
  EXPECT_EQ(vc.rank(), 3);
  EXPECT_TRUE(ContractionMatches(v, Subset{0}, vc));
  EXPECT_EQ(KindOf([&] { Minor(v, Subset{0}, Subset{0, 1}); }), ErrorKind::kOverlap);
}

TEST(MatroidTest, RestrictToLabelsKeepsOrder) {
  Matroid u = Uniform(2, 4);
  Matroid r = RestrictToLabels(u, {"c", "a"});
  EXPECT_EQ(r.ground().labels(), (std::vector<std::string>{"c", "a"}));
  EXPECT_EQ(r.rank(), 2);
  EXPECT_EQ(KindOf([&] { RestrictToLabels(u, {"zz"}); }), ErrorKind::kPreconditionFailed);
}

TEST(IoTest, ParsesAllRepresentations) {
  Matroid bases = ParseMatroid("elements: a b c d\nrepresentation: bases\na b\na c\na d\nb c\nb d\nc d\n");
  EXPECT_TRUE(SameMatroid(bases, Uniform(2, 4)));
  Matroid circuits = ParseMatroid("elements: a b c\nrepresentation: circuits\na b c\n");
  EXPECT_TRUE(SameMatroid(circuits, Uniform(2, 3)));
  Matroid nonbases = ParseMatroid(
      "elements: a1 a2 b1 b2 c1 c2 d1 d2\nrank: 4\nrepresentation: nonbases\n"
      "a1 a2 b1 b2\na1 a2 c1 c2\na1 a2 d1 d2\nb1 b2 c1 c2\nb1 b2 d1 d2\n");
  EXPECT_TRUE(SameMatroid(nonbases, Vamos()));
  Matroid table = ParseMatroid(
      "elements: a b\nrepresentation: ranktable\n= 0\na = 1\nb = 1\na b = 1\n");
  EXPECT_EQ(table.rank(), 1);
  EXPECT_EQ(table.Flats(1).size(), 1u);
}

TEST(IoTest, RoundTripIsIdentity) {
  for (const Matroid& m : {Vamos(), ProjectiveSpace3(2), Uniform(3, 6), Free(0)}) {
    Matroid again = ParseMatroid(SerializeMatroid(m));
    EXPECT_TRUE(SameMatroid(again, m)) << m.name();
    EXPECT_EQ(again.name(), m.name());
  }
}

TEST(IoTest, ErrorPaths) {
  EXPECT_EQ(KindOf([] { ParseMatroid("representation: bases\n"); }), ErrorKind::kParse);
  EXPECT_EQ(KindOf([] { ParseMatroid("elements: a\n"); }), ErrorKind::kParse);
  EXPECT_EQ(KindOf([] { ParseMatroid("elements: a\nrepresentation: magic\n"); }),
            ErrorKind::kParse);
  EXPECT_EQ(KindOf([] { ParseMatroid("elements: a b\nrepresentation: bases\na z\n"); }),
            ErrorKind::kParse);
  EXPECT_EQ(KindOf([] {
              ParseMatroid("elements: a b c d\nrepresentation: bases\na b\nc d\n");
            }),
            ErrorKind::kNotAMatroid);
  EXPECT_EQ(KindOf([] {
              ParseMatroid("elements: a b c d\nrank: 3\nrepresentation: bases\na b\n");
            }),
            ErrorKind::kNotAMatroid);
  EXPECT_EQ(KindOf([] {
              ParseMatroid("elements: a b\nrepresentation: ranktable\n= 0\na = 1\n");
            }),
            ErrorKind::kParse);
  EXPECT_EQ(KindOf([] {
              ParseMatroid("elements: a b\nrepresentation: ranktable\n= 0\na = 1\nb = 1\na b = 3\n");
            }),
            ErrorKind::kNotAMatroid);
  try {
    ParseMatroid("elements: a b c d\nrepresentation: bases\na b\nc d\n");
  } catch (const MatroidError& e) {
    EXPECT_NE(std::string(e.what()).find("{a b}"), std::string::npos);
  }
}

TEST(IsomorphismTest, AgreesWithPermutationOracle) {
  Matroid u = Uniform(2, 4);
  Matroid relabeled = RestrictToLabels(u, {"d", "b", "a", "c"});
  EXPECT_TRUE(AreIsomorphic(u, relabeled));
  EXPECT_FALSE(AreIsomorphic(Uniform(3, 6), Vamos()));
  EXPECT_TRUE(BruteIsomorphic(Vamos(), RestrictToLabels(Vamos(), {"b1", "b2", "a1", "a2",
                                                                  "d1", "d2", "c1", "c2"})));
  // V8 against a different sparse paving matroid with five circuit-hyperplanes.
  Matroid other = ParseMatroid(
      "elements: a1 a2 b1 b2 c1 c2 d1 d2\nrank: 4\nrepresentation: nonbases\n"
      "a1 a2 b1 b2\na1 a2 c1 c2\na1 a2 d1 d2\nb1 b2 c1 c2\nc1 c2 d1 d2\n");
  EXPECT_EQ(AreIsomorphic(Vamos(), other), BruteIsomorphic(Vamos(), other));
  Matroid pg = ProjectiveSpace3(2);
  EXPECT_EQ(KindOf([&] { FindIsomorphism(pg, pg, 10); }), ErrorKind::kTooLarge);
}

TEST(GeneratorTest, NamedFamilies) {
  EXPECT_TRUE(SameMatroid(GenNamed("uniform", {2, 4}), Uniform(2, 4)));
  EXPECT_EQ(GenNamed("free", {3}).NumFlats(), 8);
  EXPECT_EQ(GenNamed("pg3", {2}).Flats(2).size(), 35u);
  EXPECT_EQ(GenNamed("figure1-erection", {}).size(), 10);
  EXPECT_EQ(KindOf([] { GenNamed("nope", {}); }), ErrorKind::kUnknownFamily);
  EXPECT_EQ(KindOf([] { GenNamed("pg3", {5}); }), ErrorKind::kUnsupportedParam);
  EXPECT_EQ(KindOf([] { GenNamed("uniform", {2}); }), ErrorKind::kUnsupportedParam);
}

TEST(AxiomTest, CheckerFlagsBadTables) {
  RankTable t{GroundSet({"a", "b"}), {0, 1, 1, 3}};
  auto v = CheckRankAxioms(t);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->axiom, "R1");
  RankTable mono{GroundSet({"a", "b"}), {0, 1, 1, 0}};
  ASSERT_TRUE(CheckRankAxioms(mono).has_value());
  EXPECT_EQ(CheckRankAxioms(mono)->axiom, "R2");
  EXPECT_FALSE(CheckMatroidAxioms(ProjectiveSpace3(3), 7, 2000).has_value());
}

}  // namespace
}  // namespace matroid_lab
