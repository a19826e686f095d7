#include <gtest/gtest.h>

#include <random>

#include "burling/construction.hpp"
#include "burling/error.hpp"
#include "burling/relations.hpp"
#include "builders.hpp"
#include "oracles.hpp"

using namespace burling;
using tb::frame_shape;

namespace {

const Shape kA = frame_shape("A", 4, 12, 2, 8);
const Shape kB = frame_shape("B", 0, 10, 0, 10);
const Shape kSmall = frame_shape("C", 1, 2, 1, 2);

Family family_of(std::vector<Shape> s) {
  Family f{std::move(s), std::nullopt};
  f.base = Shape("base", tb::frame(0, 3, 0, 3));
  return f;
}

}  // namespace

TEST(Prec, Examples) {
  EXPECT_TRUE(prec(kSmall, kB));
  EXPECT_FALSE(prec(kSmall, kSmall));
  EXPECT_FALSE(prec(kA, kB));
  EXPECT_FALSE(prec(kB, kSmall));
}

TEST(Arrow, Examples) {
  EXPECT_TRUE(arrow(kA, kB));
  EXPECT_FALSE(arrow(kB, kA));
  EXPECT_FALSE(arrow(kA, frame_shape("far", 20, 30, 0, 10)));
  EXPECT_FALSE(arrow(kA, kA));
}

TEST(Comparable, Examples) {
  EXPECT_TRUE(comparable(kA, kB));
  EXPECT_TRUE(comparable(kSmall, kB));
  EXPECT_FALSE(comparable(kSmall, frame_shape("far", 20, 30, 0, 10)));
}

TEST(Constraints, Singleton) {
  const auto rep = check_constraints(family_of({frame_shape("s", 0, 3, 0, 3)}));
  EXPECT_TRUE(rep.pass());
  for (int k = 1; k <= 6; ++k) EXPECT_TRUE(rep.c(k).checked);
}

TEST(Constraints, ArrowPairPassesC1) {
  const auto rep = check_constraints(family_of({kA, kB}));
  EXPECT_TRUE(rep.c(1).pass);
  EXPECT_TRUE(rep.pass());
}

TEST(Constraints, ThreeCrossingFramesFailC5) {
  const Shape a = frame_shape("a", 0, 10, 0, 10);
  const Shape b = frame_shape("b", 4, 12, 2, 8);
  const Shape c = frame_shape("c", 8, 14, 3, 7);
  const auto rep = check_constraints(family_of({a, b, c}));
  EXPECT_FALSE(rep.c(5).pass);
  ASSERT_EQ(rep.c(5).violations.size(), 1u);
  EXPECT_EQ(rep.c(5).violations[0], (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(rep.c(5).violation_count, 1u);
}

TEST(Constraints, UnorientedIntersectionFailsC1) {
  // a plus-sign crossing: neither frame's left edge lies in the other's territory
  const Shape a = frame_shape("a", 0, 10, 4, 6);
  const Shape b = frame_shape("b", 4, 6, 0, 10);
  const Family f = family_of({a, b});
  EXPECT_FALSE(check_constraints(f).c(1).pass);
  try {
    oriented_intersection_graph(f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "not-c1");
  }
}

TEST(Constraints, DisjointInTerritoryNeedsPrec) {
  // small frame partly inside the big frame's territory but sticking out
  const Shape big = frame_shape("big", 0, 10, 0, 10);
  const Shape half_in = frame_shape("h", 1, 2, 9, 11);
  const auto rep = check_constraints(family_of({big, half_in}));
  EXPECT_FALSE(rep.c(1).pass);  // they meet on the top edge

  const Shape nested = frame_shape("n", 1, 2, 1, 2);
  const auto ok = check_constraints(family_of({big, nested}));
  EXPECT_TRUE(ok.c(2).pass);
}

TEST(Constraints, C3NestedInTwoTerritories) {
  const Shape a = frame_shape("a", 0, 10, 0, 10);
  const Shape b = frame_shape("b", 4, 12, 2, 8);
  const Shape c = frame_shape("c", 5, 6, 4, 5);
  const auto rep = check_constraints(family_of({a, b, c}));
  EXPECT_FALSE(rep.c(3).pass);
  EXPECT_EQ(rep.c(3).violations.at(0), (std::vector<std::string>{"a", "b", "c"}));
}

TEST(Constraints, C6RejectsOtherShapes) {
  const Shape l("l", Region({Rect{0, 1, 0, 3}, Rect{0, 3, 0, 1}}));
  Family f{{strongify(l).shape}, l};
  EXPECT_TRUE(check_constraints(f).c(6).pass);
  f.shapes.push_back(Shape("g", Region({Rect{10, 11, 0, 3}, Rect{10, 13, 0, 1}})));
  EXPECT_FALSE(check_constraints(f).c(6).pass);
  f.base.reset();
  try {
    check_constraints(f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "no-base");
  }
  CheckOptions no6;
  no6.check_c6 = false;
  EXPECT_FALSE(check_constraints(f, no6).c(6).checked);
}

TEST(Constraints, ReportIsCapped) {
  std::vector<Shape> stack;
  for (int i = 0; i < 12; ++i) stack.push_back(frame_shape("f" + std::to_string(i), Rat(i), Rat(i + 20), 0, 10));
  const auto rep = check_constraints(family_of(stack));
  EXPECT_GT(rep.c(5).violation_count, ConstraintReport::kMaxReported);
  EXPECT_EQ(rep.c(5).violations.size(), ConstraintReport::kMaxReported);
}

TEST(OrientedGraph, ArrowPair) {
  const OGraph g = oriented_intersection_graph(family_of({kA, kB}));
  EXPECT_EQ(g.vertices, (std::vector<std::string>{"A", "B"}));
  EXPECT_EQ(g.arcs, (std::vector<std::pair<size_t, size_t>>{{0, 1}}));
  EXPECT_TRUE(oriented_intersection_graph(family_of({kA})).arcs.empty());
}

TEST(OrientedGraph, F2HasOneArcAndAnIsolatedVertex) {
  const Scene sc = burling_sequence(named_shape("frame"), 2);
  const OGraph g = oriented_intersection_graph(sc.family);
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g.arcs.size(), 1u);
}

TEST(Relations, OrderPropertiesOnGeneratedFamilies) {
  for (const char* name : {"frame", "gamma"}) {
    const Scene sc = burling_sequence(named_shape(name), 4);
    const auto& s = sc.family.shapes;
    const auto rel = PairwiseRelations::compute(s);
    for (size_t i = 0; i < s.size(); ++i)
      for (size_t j = 0; j < s.size(); ++j) {
        if (i == j) continue;
        if (rel.prec_at(i, j)) {
          EXPECT_LT(s[i].bounds().r, s[j].bounds().r);
          EXPECT_LE(s[i].bounds().height(), s[j].bounds().height());
          EXPECT_FALSE(oracle::regions_meet(s[i].region(), s[j].region()));
        }
        if (rel.arrow_at(i, j)) EXPECT_FALSE(rel.arrow_at(j, i));
        EXPECT_EQ(rel.meets_at(i, j), oracle::regions_meet(s[i].region(), s[j].region()));
      }
  }
}

TEST(Relations, TerritoriesMeetOnlyForComparablePairs) {
  const Scene sc = burling_sequence(named_shape("frame"), 3);
  const auto& s = sc.family.shapes;
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j) {
      bool meet = false;
      std::vector<Rect> extra = s[j].region().rects();
      for (const auto& p : oracle::sample_points(s[i].region(), extra))
        if (oracle::in_territory(s[i].region(), p) && oracle::in_territory(s[j].region(), p)) meet = true;
      if (meet) EXPECT_TRUE(comparable(s[i], s[j])) << s[i].id() << " " << s[j].id();
    }
}

TEST(Relations, PositiveTransformsPreserveEverything) {
  std::mt19937_64 rng(4);
  const Scene sc = burling_sequence(named_shape("gamma"), 3);
  for (int round = 0; round < 5; ++round) {
    const Transform t(Rat(static_cast<long>(rng() % 7 + 1), 3), Rat(static_cast<long>(rng() % 5 + 1), 2),
                      Rat(static_cast<long>(rng() % 11) - 5), Rat(static_cast<long>(rng() % 11) - 5));
    Family moved{{}, sc.family.base};
    for (const auto& s : sc.family.shapes) moved.shapes.push_back(s.transformed(t, s.id()));
    const auto a = PairwiseRelations::compute(sc.family.shapes);
    const auto b = PairwiseRelations::compute(moved.shapes);
    EXPECT_EQ(a.prec, b.prec);
    EXPECT_EQ(a.arrow, b.arrow);
    EXPECT_TRUE(check_constraints(moved).pass());
  }
}

TEST(Constraints, SampledModeFindsPlantedViolation) {
  const Shape a = frame_shape("a", 0, 10, 0, 10);
  const Shape b = frame_shape("b", 4, 12, 2, 8);
  const Shape c = frame_shape("c", 8, 14, 3, 7);
  CheckOptions opts;
  opts.samples = 500;
  const auto rep = check_constraints(family_of({a, b, c}), opts);
  EXPECT_TRUE(rep.sampled);
  EXPECT_FALSE(rep.c(5).pass);
}
