#include <gtest/gtest.h>

#include <random>

#include "burling/arrangement.hpp"
#include "burling/error.hpp"
#include "burling/geometry.hpp"
#include "builders.hpp"
#include "oracles.hpp"
#include "random_shapes.hpp"

using namespace burling;
using tb::frame;

TEST(Rect, MakeValidatesOrder) {
  EXPECT_NO_THROW(Rect::make(0, 0, 1, 1));
  try {
    Rect::make(2, 1, 0, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "bad-rect");
  }
}

TEST(Rect, Intersect) {
  EXPECT_EQ(*intersect(Rect{0, 2, 0, 2}, Rect{1, 3, 1, 3}), (Rect{1, 2, 1, 2}));
  EXPECT_EQ(*intersect(Rect{0, 1, 0, 1}, Rect{1, 2, 1, 2}), (Rect{1, 1, 1, 1}));
  EXPECT_FALSE(intersect(Rect{0, 1, 0, 1}, Rect{2, 3, 0, 1}));
}

TEST(Region, Bounds) {
  const Bounds b = bounds(Region({Rect{0, 3, 0, 0}, Rect{0, 0, 0, 3}}));
  EXPECT_EQ(b, (Bounds{0, 3, 0, 3}));
  EXPECT_EQ(bounds(Region(Rect{1, 2, 1, 2})), (Bounds{1, 2, 1, 2}));
  EXPECT_EQ(bounds(frame(0, 10, 0, 10)), (Bounds{0, 10, 0, 10}));
  try {
    bounds(Region());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "empty-region");
  }
}

TEST(Region, CanonicalFormIsSetEquality) {
  const Region a({Rect{0, 2, 0, 1}, Rect{1, 3, 0, 1}});
  const Region b({Rect{0, 3, 0, 1}});
  const Region c({Rect{0, 1, 0, 1}, Rect{1, 2, 0, 1}, Rect{2, 3, 0, 1}, Rect{1, 2, 0, 1}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(b, c);
  // an L written two ways
  EXPECT_EQ(Region({Rect{0, 1, 0, 3}, Rect{0, 3, 0, 1}}),
            Region({Rect{0, 1, 1, 3}, Rect{0, 3, 0, 1}}));
  EXPECT_NE(Region({Rect{0, 1, 0, 3}}), Region({Rect{0, 1, 0, 2}}));
  EXPECT_EQ(Region(a.rects()), a);
}

TEST(Region, CanonicalRectsSorted) {
  const Region f = frame(0, 3, 0, 3);
  EXPECT_TRUE(std::is_sorted(f.rects().begin(), f.rects().end()));
  EXPECT_EQ(f.rects().size(), 4u);
}

TEST(Region, ContainsRect) {
  EXPECT_FALSE(contains_rect(frame(0, 3, 0, 3), Rect{1, 2, 1, 2}));
  EXPECT_TRUE(contains_rect(frame(0, 3, 0, 3), Rect{3, 3, 1, 2}));
  EXPECT_TRUE(contains_rect(Region({Rect{0, 2, 0, 1}, Rect{1, 3, 0, 1}}), Rect{0, 3, 0, 1}));
  EXPECT_FALSE(contains_rect(Region({Rect{0, 1, 0, 1}, Rect{2, 3, 0, 1}}), Rect{0, 3, 0, 1}));
  EXPECT_TRUE(contains(frame(0, 3, 0, 3), Point{3, 1}));
}

TEST(Region, Connectivity) {
  EXPECT_TRUE(is_connected(Region({Rect{0, 1, 0, 1}, Rect{1, 2, 0, 1}})));
  EXPECT_FALSE(is_connected(Region({Rect{0, 1, 0, 1}, Rect{2, 3, 0, 1}})));
  EXPECT_TRUE(is_connected(Region({Rect{0, 1, 0, 1}, Rect{1, 2, 1, 2}})));
  EXPECT_TRUE(is_connected(frame(0, 3, 0, 3)));
  EXPECT_FALSE(is_connected(Region()));
  // crossing segments
  EXPECT_TRUE(is_connected(Region({Rect{0, 2, 1, 1}, Rect{1, 1, 0, 2}})));
  // parallel segments one unit apart
  EXPECT_FALSE(is_connected(Region({Rect{0, 2, 1, 1}, Rect{0, 2, 2, 2}})));
}

TEST(Transform, Apply) {
  const Region r(Rect{1, 2, 0, 3});
  EXPECT_EQ(Transform::identity()(r), r);
  EXPECT_EQ(Transform(2, 1, 0, 0)(r), Region(Rect{2, 4, 0, 3}));
  EXPECT_EQ(Transform::horizontal_reflection()(Region(Rect{1, 2, 0, 1})), Region(Rect{-2, -1, 0, 1}));
  EXPECT_THROW(Transform(0, 1, 0, 0), Error);
}

TEST(Transform, GroupLaws) {
  const Transform t(2, 5, 3, -1);
  EXPECT_EQ(compose(t, Transform::identity()), t);
  const Transform inv = invert(Transform(2, 1, 3, 0));
  EXPECT_EQ(inv.a(), Rat(1, 2));
  EXPECT_EQ(inv.c(), Rat(-3, 2));
  EXPECT_EQ(compose(t, invert(t)), Transform::identity());
  EXPECT_EQ(compose(invert(t), t), Transform::identity());
  EXPECT_FALSE(is_positive(Transform(-1, 1, 0, 0)));
  EXPECT_TRUE(is_positive(t));

  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const Transform a = testgen::random_positive(rng), b = testgen::random_positive(rng), c = testgen::random_positive(rng);
    EXPECT_EQ(compose(a, compose(b, c)), compose(compose(a, b), c));
    EXPECT_TRUE(is_positive(compose(a, b)));
    EXPECT_TRUE(is_positive(invert(a)));
    const Point p{Rat(i, 7), Rat(-i, 3)};
    EXPECT_EQ(compose(a, b)(p), a(b(p)));
  }
}

TEST(Transform, Matching) {
  const Rect from{0, 3, 0, 3}, to{1, 3, Rat(5, 3), 2};
  const Transform t = Transform::matching(from, to);
  EXPECT_EQ(t(from), to);
  EXPECT_TRUE(is_positive(t));
}

TEST(Transform, BoxCommutesWithPositiveTransforms) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const Region r = testgen::random_pouna(rng);
    const Transform t = testgen::random_positive(rng);
    EXPECT_EQ(bounding_box(t(r)), t(bounding_box(r)));
  }
}

TEST(Region, MembershipAgreesWithOracle) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const Region a = testgen::random_pouna(rng), b = testgen::random_pouna(rng);
    const Region u = union_of(a, b);
    EXPECT_EQ(Region(u.rects()), u);
    const Point p{Rat(static_cast<long>(rng() % 33), 4), Rat(static_cast<long>(rng() % 33), 4)};
    EXPECT_EQ(contains(u, p), oracle::in_region(a, p) || oracle::in_region(b, p));
    EXPECT_EQ(contains(intersection(a, b), p), oracle::in_region(a, p) && oracle::in_region(b, p));
    EXPECT_EQ(intersects(a, b), oracle::regions_meet(a, b));
  }
}

TEST(Region, EqualityAgreesWithSampling) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Region a = testgen::random_pouna(rng), b = testgen::random_pouna(rng);
    bool same = true;
    for (const auto& p : oracle::sample_points(a, b.rects()))
      if (oracle::in_region(a, p) != oracle::in_region(b, p)) same = false;
    EXPECT_EQ(a == b, same);
    EXPECT_EQ(contains_region(union_of(a, b), a), true);
  }
}

TEST(Arrangement, HalfIndices) {
  const Arrangement arr = ArrangementBuilder().add(Rect{0, 2, 0, 1}).add(Point{1, 3}).build();
  EXPECT_EQ(arr.cols(), 5);
  EXPECT_EQ(arr.rows(), 5);
  EXPECT_EQ(arr.x_rep(1), Rat(1, 2));
  EXPECT_EQ(arr.hx_of(2), 4);
  EXPECT_EQ(arr.face(1, 2), (Rect{0, 1, 1, 1}));
  EXPECT_THROW(arr.hx_of(Rat(1, 3)), Error);
}
