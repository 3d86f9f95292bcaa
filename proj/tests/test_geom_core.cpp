#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "loci/geom_core.hpp"
#include "test_support.hpp"

using namespace loci;

TEST(GeomCore, DistanceExamples) {
  EXPECT_DOUBLE_EQ(dist({0, 0}, {3, 4}), 5.0);
  EXPECT_EQ(dist({2, 2}, {2, 2}), 0.0);
  // 9^2 + 6^2 = 117
  EXPECT_NEAR(dist({0, 0}, {9, 6}), std::sqrt(117.0), 1e-15);
  EXPECT_NEAR(dist({0, 0}, {9, 6}), 10.8166538, 1e-7);
}

TEST(GeomCore, MidpointExamples) {
  EXPECT_EQ(midpoint({0, 0}, {4, 0}), Point(2, 0));
  EXPECT_EQ(midpoint({0, 0}, {5, 0}), Point(2.5, 0));
  EXPECT_EQ(midpoint({1, 1}, {3, 5}), Point(2, 3));
}

TEST(GeomCore, FootOfPerpendicular) {
  // 3x + 4y = 12 through (4,0) and (0,3); foot from the origin is
  // t (3,4) with 25 t = 12.
  const Line line = Line::through({4, 0}, {0, 3});
  const Point foot = foot_of_perpendicular(line, {0, 0});
  EXPECT_NEAR(foot.x(), 1.44, 1e-15);
  EXPECT_NEAR(foot.y(), 1.92, 1e-15);
  EXPECT_NEAR(dot(foot - Point(0, 0), line.direction()), 0.0, 1e-15);

  const Point on = line.at(2.5);
  const Point same = foot_of_perpendicular(line, on);
  EXPECT_NEAR(same.x(), on.x(), 1e-15);
  EXPECT_NEAR(same.y(), on.y(), 1e-15);

  const Line axis(Point(-1, 0), Vec2{1, 0});
  EXPECT_EQ(foot_of_perpendicular(axis, {3, 7}), Point(3, 0));
}

TEST(GeomCore, ApproxEqExamples) {
  const ToleranceProfile tol;
  EXPECT_TRUE(approx_eq(1.0, 1.0 + 1e-12, 1.0, tol));
  EXPECT_FALSE(approx_eq(1.0, 1.1, 1.0, tol));
  // 5e-8 <= 1e-9 * 100 + 1e-9 * 100
  EXPECT_TRUE(approx_eq(100.0, 100.0 + 5e-8, 100.0, tol));
  EXPECT_FALSE(approx_eq(100.0, 100.0 + 5e-7, 100.0, tol));
  EXPECT_THROW(approx_eq(1.0, 1.0, 0.0, tol), std::invalid_argument);
}

TEST(GeomCore, RejectsNonFiniteAndDegenerateInput) {
  const double inf = std::numeric_limits<double>::infinity();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(Point(inf, 0), GeometryError);
  EXPECT_THROW(Point(0, nan), GeometryError);
  try {
    Segment({1, 1}, {1, 1});
    FAIL() << "expected DegenerateSegment";
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateSegment);
  }
  EXPECT_THROW(Line(Point(0, 0), Vec2{0, 0}), GeometryError);
  EXPECT_THROW(Circle(Point(0, 0), 0.0), GeometryError);
  EXPECT_THROW(Circle(Point(0, 0), -1.0), GeometryError);
  EXPECT_THROW(ToleranceProfile(0.0, 1e-9, 1e-12), GeometryError);
  EXPECT_THROW(ToleranceProfile(1e-13, 1e-9, 1e-12), GeometryError);
  EXPECT_NO_THROW(ToleranceProfile(1e-6, 1e-6, 1e-9));
}

TEST(GeomCore, LineDirectionIsUnit) {
  const Line l(Point(1, 2), Vec2{3e5, -4e5});
  EXPECT_NEAR(norm(l.direction()), 1.0, 1e-12);
}

TEST(GeomCore, ClipToBox) {
  const Line vertical(Point(3, 100), Vec2{0, 1});
  const auto span = clip_to_box(vertical, {0, 0}, {10, 5});
  ASSERT_TRUE(span);
  EXPECT_NEAR(vertical.at(span->first).y(), 0.0, 1e-12);
  EXPECT_NEAR(vertical.at(span->second).y(), 5.0, 1e-12);
  EXPECT_FALSE(clip_to_box(Line(Point(20, 0), Vec2{0, 1}), {0, 0}, {10, 5}));
  EXPECT_FALSE(clip_to_box(Line(Point(0, 20), Vec2{1, 1}), {0, 0}, {10, 5}));
}

TEST(GeomCoreProperty, MetricAxioms) {
  loci::testing::Generator gen(11);
  const ToleranceProfile tol;
  for (int i = 0; i < 2000; ++i) {
    const Point p = gen.point(100);
    const Point q = gen.point(100);
    const Point r = gen.point(100);
    EXPECT_EQ(dist(p, q), dist(q, p));
    EXPECT_EQ(dist(p, p), 0.0);
    EXPECT_GT(dist(p, q), 0.0);
    EXPECT_LE(dist(p, r), dist(p, q) + dist(q, r) + tol.abs_eps());
  }
}

TEST(GeomCoreProperty, FootIsIdempotentAndOrthogonal) {
  loci::testing::Generator gen(12);
  const ToleranceProfile tol;
  for (int i = 0; i < 2000; ++i) {
    const auto [a, b] = gen.segment();
    const Line line = Line::through(a, b);
    const Point p = gen.point(20);
    const Point f = foot_of_perpendicular(line, p);
    const Point ff = foot_of_perpendicular(line, f);
    EXPECT_LE(dist(f, ff), 1e-12 * (1.0 + norm(f - Point())));
    EXPECT_LE(std::abs(dot(p - f, line.direction())), tol.abs_eps() * (1.0 + dist(p, a)));
    EXPECT_LE(std::abs(signed_distance(line, f)), 1e-12 * (1.0 + dist(p, a)));
  }
}

TEST(GeomCoreProperty, IntersectMatchesCramer) {
  loci::testing::Generator gen(13);
  for (int i = 0; i < 500; ++i) {
    const Point p = gen.point();
    const Point q = gen.point();
    const Vec2 u{gen.uniform(-1, 1), gen.uniform(-1, 1)};
    const Vec2 v{gen.uniform(-1, 1), gen.uniform(-1, 1)};
    if (std::abs(cross(u, v)) < 0.1 * norm(u) * norm(v)) continue;
    const Point x = intersect(Line(p, u), Line(q, v));
    const Point y = loci::testing::cramer_intersection(p, u.x, u.y, q, v.x, v.y);
    EXPECT_NEAR(x.x(), y.x(), 1e-9);
    EXPECT_NEAR(x.y(), y.y(), 1e-9);
  }
  EXPECT_THROW(intersect(Line(Point(0, 0), Vec2{1, 0}), Line(Point(0, 1), Vec2{2, 0})), GeometryError);
}
