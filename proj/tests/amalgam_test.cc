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

#include <vector>

#include "matroid_lab/matroid_lab.hpp"
#include "matroid_lab/testing/oracles.hpp"

namespace matroid_lab {
namespace {

using ::matroid_lab::testing::BruteXi;

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

TEST(ContextTest, GroundOrderAndLattice) {
  Matroid u = Uniform(2, 4);
  AmalgamContext ctx =
      AmalgamContext::Build(AddFreeOnFlat(u, u.All(), "x"), AddFreeOnFlat(u, Subset{0}, "y"));
  EXPECT_EQ(ctx.ground().Format(ctx.ground().All()), "a b c d x y");
  EXPECT_EQ(ctx.t(), (Subset{0, 1, 2, 3}));
  EXPECT_TRUE(ctx.InLattice(ctx.ground().All()));
  for (const Subset& x : ctx.Lattice()) {
    EXPECT_TRUE(ctx.InLattice(x));
    EXPECT_EQ(ctx.LeastLatticeSuperset(x), x);
  }
  // E is in L and xi(E) is the rank of the union.
  EXPECT_EQ(ctx.Xi(ctx.ground().All()), 2);
}

TEST(ContextTest, Preconditions) {
  Matroid u = Uniform(2, 3);
  Matroid other = RestrictToLabels(Uniform(2, 4), {"d"});
  EXPECT_EQ(KindOf([&] { AmalgamContext::Build(u, other); }), ErrorKind::kPreconditionFailed);
  Matroid parallel = AddFreeOnFlat(Uniform(2, 3), Subset{0}, "x");
  Matroid mismatched = RestrictToLabels(Uniform(1, 4), {"a", "b", "c", "d"});
  EXPECT_EQ(KindOf([&] { ProperAmalgam(parallel, mismatched); }),
            ErrorKind::kRestrictionMismatch);
}

TEST(XiTest, EqualsSupersetMinimumOracle) {
  Matroid u = Uniform(3, 6);
  Matroid f3 = Free(3);
  const std::vector<std::pair<Matroid, Matroid>> pairs = {
      {CrapoExtend(GenerateCut(u, {Subset{0, 1}, Subset{2, 3}}), "x"),
       CrapoExtend(GenerateCut(u, {Subset{0, 2}, Subset{1, 3}}), "y")},
      {AddFreeOnFlat(f3, Subset{0, 1}, "x"), AddColoop(f3, "y")},
      {AddFreeOnFlat(Uniform(2, 4), Subset{0}, "x"),
       AddFreeOnFlat(Uniform(2, 4), Subset{0}, "y")},
  };
  for (const auto& [m1, m2] : pairs) {
    AmalgamContext ctx = AmalgamContext::Build(m1, m2);
    std::vector<int> brute = BruteXi(ctx);
    for (uint32_t mask = 0; mask < brute.size(); ++mask) {
      ASSERT_EQ(ctx.Xi(Subset::FromLowWord(mask)), brute[mask])
          << ctx.ground().Format(Subset::FromLowWord(mask));
    }
  }
}

TEST(AmalgamTest, ParallelPointsAmalgamate) {
  Matroid u = Uniform(2, 4);
  Matroid m1 = AddFreeOnFlat(u, Subset{0}, "x");
  Matroid m2 = AddFreeOnFlat(u, Subset{0}, "y");
  SubmodularityReport r = ProperAmalgam(m1, m2, {.brute_check = true});
  ASSERT_EQ(r.status, AmalgamStatus::kExists);
  ASSERT_TRUE(r.amalgam.has_value());
  EXPECT_TRUE(r.brute_checked);
  EXPECT_TRUE(VerifyAmalgam(*r.amalgam, m1, m2));
  // x and y are both parallel to a, so they are parallel to each other.
  EXPECT_EQ(r.amalgam->Rank(r.amalgam->ground().Parse("x y")), 1);
  EXPECT_EQ(AmalgamStatusName(r.status), "exists");
}

TEST(AmalgamTest, FreeExtensionsAmalgamateFreely) {
  Matroid u = Uniform(3, 5);
  Matroid m1 = AddColoop(u, "x");
  Matroid m2 = AddFreeOnFlat(u, Subset{0, 1}, "y");
  SubmodularityReport r = ProperAmalgam(m1, m2, {.threads = 2});
  ASSERT_EQ(r.status, AmalgamStatus::kExists);
  EXPECT_EQ(r.amalgam->rank(), 4);
  EXPECT_FALSE(r.unexpected_for_rank4_ote);
}

TEST(AmalgamTest, IntersectionPointAgainstErectionFails) {
  SubmodularityReport r = ProperAmalgam(U36IntersectionPoint(), U36Erection());
  ASSERT_EQ(r.status, AmalgamStatus::kFails);
  EXPECT_EQ(r.ground.size(), 11);
  ASSERT_TRUE(r.violation.has_value());
  EXPECT_LT(r.violation->Slack(), 0);
  EXPECT_FALSE(r.amalgam.has_value());
  // Rank-3 common restriction: no existence claim, so no flag.
  EXPECT_FALSE(r.unexpected_for_rank4_ote);
}

TEST(AmalgamTest, BruteCheckSkippedAboveBound) {
  Matroid u = Uniform(3, 6);
  Matroid m1 = AddFreeOnFlat(u, Subset{0, 1}, "x");
  Matroid m2 = AddFreeOnFlat(u, Subset{2, 3}, "y");
  SubmodularityReport r = ProperAmalgam(m1, m2, {.brute_check = true, .brute_bound = 4});
  EXPECT_EQ(r.status, AmalgamStatus::kExists);
  EXPECT_FALSE(r.brute_checked);
  EXPECT_NE(r.note.find("skipped"), std::string::npos);
}

TEST(AmalgamTest, ExtensionsOfProjectiveSpaceAmalgamate) {
  Matroid pg = ProjectiveSpace3(2);
  Matroid m1 = AddFreeOnFlat(pg, pg.Flats(2)[0], "x");
  Matroid m2 = AddFreeOnFlat(pg, pg.Flats(3)[0], "y");
  SubmodularityReport r = ProperAmalgam(m1, m2);
  ASSERT_EQ(r.status, AmalgamStatus::kExists);
  EXPECT_TRUE(VerifyAmalgam(*r.amalgam, m1, m2));
}

TEST(EtaTest, TraceClassification) {
  Matroid pg = ProjectiveSpace3MinusPoint(2);
  auto pairs = CoplanarDisjointLinePairs(pg);
  ASSERT_FALSE(pairs.empty());
  EXPECT_EQ(ClassifyTracePair(pg, pairs[0].x, pairs[0].y), "lines");
  EXPECT_EQ(ClassifyTracePair(pg, pairs[0].x, pairs[0].x), "other");
  for (const Subset& plane : pg.Flats(3)) {
    if (!plane.Intersects(pairs[0].x)) {
      EXPECT_EQ(ClassifyTracePair(pg, pairs[0].x, plane), "line-plane");
      break;
    }
  }
}

TEST(EtaTest, ErectionContextViolationsSatisfyIdentity) {
  AmalgamContext ctx = AmalgamContext::Build(U36IntersectionPoint(), U36Erection());
  auto v = AnalyzeEtaViolations(ctx);
  ASSERT_FALSE(v.empty());
  for (const auto& e : v) {
    EXPECT_LT(ctx.Eta(e.x) + ctx.Eta(e.y), ctx.Eta(e.x & e.y) + ctx.Eta(e.x | e.y));
  }
}

TEST(ExclusionTest, ProjectiveExtensionsAreVacuous) {
  // In a projective space coplanar lines meet and every line meets every
  // plane, so no candidate shape exists and nothing is examined.
  Matroid pg = ProjectiveSpace3(2);
  ASSERT_TRUE(CoplanarDisjointLinePairs(pg).empty());
  const std::vector<Matroid> exts = {
      AddFreeOnFlat(pg, pg.Flats(2)[0], "x"),
      AddFreeOnFlat(pg, pg.Flats(3)[0], "x"),
      AddColoop(pg, "x"),
  };
  for (const Matroid& ext : exts) {
    ExclusionReport r = ModularPairExclusionCheck(pg, ext, {.samples = 2000, .seed = 3});
    EXPECT_EQ(r.examined, 0);
    EXPECT_TRUE(r.violations.empty());
  }
}

TEST(ExclusionTest, Preconditions) {
  Matroid v = Vamos();
  EXPECT_EQ(KindOf([&] { ModularPairExclusionCheck(v, AddColoop(v, "x")); }),
            ErrorKind::kPreconditionFailed);
  Matroid u = Uniform(3, 6);
  EXPECT_EQ(KindOf([&] { ModularPairExclusionCheck(u, u); }), ErrorKind::kPreconditionFailed);
  Matroid pg = ProjectiveSpace3(2);
  EXPECT_EQ(KindOf([&] { ModularPairExclusionCheck(pg, Delete(pg, Subset{0})); }),
            ErrorKind::kPreconditionFailed);
}

}  // namespace
}  // namespace matroid_lab
