#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "loci/loci.hpp"
#include "test_support.hpp"

using namespace loci;
using loci::testing::d;
using loci::testing::d2;
using loci::testing::Generator;

namespace {

void expect_point(Point p, double x, double y, double eps = 1e-12) {
  EXPECT_NEAR(p.x(), x, eps);
  EXPECT_NEAR(p.y(), y, eps);
}

// Points on a locus for round-trip checks.
std::vector<Point> samples(const Locus& locus, double ab) {
  std::vector<Point> out;
  if (const auto* c = std::get_if<Circle>(&locus)) {
    for (int i = 0; i < 360; ++i) out.push_back(c->at_angle(2.0 * std::numbers::pi * i / 360.0));
  } else if (const auto* l = std::get_if<Line>(&locus)) {
    for (int i = 0; i < 100; ++i) out.push_back(l->at(-10.0 * ab + 20.0 * ab * i / 99.0));
  } else if (const auto* s = std::get_if<SinglePoint>(&locus)) {
    out.push_back(s->point);
  }
  return out;
}

// Residuals computed by hand, independent of membership_residual.
double apollonius_residual(Point a, Point b, double lambda, Point x) { return d(x, a) - lambda * d(x, b); }
double sumsq_residual(Point a, Point b, double k2, Point x) { return d2(x, a) + d2(x, b) - k2; }
double diffsq_residual(Point a, Point b, double c, Point x) { return d2(x, a) - d2(x, b) - c; }

}  // namespace

TEST(Apollonius, Examples) {
  const Point a(0, 0), b(5, 0);
  const auto r = apollonius_locus(a, b, Ratio::from_integers(3, 2));
  const auto& c = std::get<Circle>(r.locus);
  expect_point(c.center(), 9, 0);
  EXPECT_NEAR(c.radius(), 6, 1e-12);
  EXPECT_NEAR(r.radius, 6, 1e-12);
  EXPECT_NEAR(r.center_offset_AO, 9, 1e-12);
  EXPECT_NEAR(r.center_offset_OB, 4, 1e-12);
  ASSERT_TRUE(r.conjugates);
  expect_point(r.conjugates->internal, 3, 0);
  expect_point(r.conjugates->external, 15, 0);
  // Circle through P and Q measured by hand.
  EXPECT_NEAR(d(c.center(), {3, 0}), 6, 1e-12);
  EXPECT_NEAR(d(c.center(), {15, 0}), 6, 1e-12);

  const auto unit = apollonius_locus(a, b, Ratio::from_integers(1, 1));
  const auto& l = std::get<Line>(unit.locus);
  EXPECT_NEAR(l.anchor().x(), 2.5, 1e-12);
  EXPECT_NEAR(std::abs(l.direction().y), 1.0, 1e-12);
  EXPECT_FALSE(unit.conjugates);
  EXPECT_TRUE(std::isinf(unit.radius));

  const auto inv = apollonius_locus(a, b, Ratio::from_integers(2, 3));
  const auto& ci = std::get<Circle>(inv.locus);
  expect_point(ci.center(), -4, 0);
  EXPECT_NEAR(ci.radius(), 6, 1e-12);
  for (const Point& x : samples(inv.locus, 5)) EXPECT_NEAR(apollonius_residual(a, b, 2.0 / 3.0, x), 0, 1e-9 * 5);

  EXPECT_THROW(apollonius_locus(a, a, Ratio(2, 1)), GeometryError);
}

TEST(SumSquares, Examples) {
  const Point a(0, 0), b(4, 0);
  const auto c20 = std::get<Circle>(sum_squares_locus(a, b, 20));
  expect_point(c20.center(), 2, 0);
  EXPECT_NEAR(c20.radius(), std::sqrt(6.0), 1e-12);
  EXPECT_NEAR(sumsq_residual(a, b, 20, {2, std::sqrt(6.0)}), 0, 1e-12);

  const auto single = std::get<SinglePoint>(sum_squares_locus(a, b, 8));
  expect_point(single.point, 2, 0);

  const auto c16 = std::get<Circle>(sum_squares_locus(a, b, 16));
  expect_point(c16.center(), 2, 0);
  EXPECT_NEAR(c16.radius(), 2, 1e-12);

  EXPECT_TRUE(std::holds_alternative<EmptyLocus>(sum_squares_locus(a, b, 4)));
  try {
    sum_squares_locus(a, b, -1);
    FAIL() << "expected NegativeConstant";
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NegativeConstant);
  }
}

TEST(DiffSquares, Examples) {
  const Point a(0, 0), b(4, 0);
  for (const auto& [c, x] : {std::pair{8.0, 3.0}, {16.0, 4.0}, {0.0, 2.0}, {-8.0, 1.0}}) {
    const Line l = diff_squares_locus(a, b, c);
    EXPECT_NEAR(l.anchor().x(), x, 1e-12) << "c=" << c;
    EXPECT_NEAR(std::abs(l.direction().y), 1.0, 1e-12);
    for (double y : {-7.0, 0.0, 3.0}) EXPECT_NEAR(diffsq_residual(a, b, c, {x, y}), 0, 1e-12);
  }
}

TEST(Residual, Examples) {
  const Point a(0, 0);
  EXPECT_NEAR(membership_residual(ApolloniusSpec{Ratio::from_integers(3, 2)}, a, {5, 0}, {9, 6}), 0, 1e-12 * 5);
  EXPECT_NEAR(membership_residual(SumSquaresSpec{20}, a, {4, 0}, {2, 0}), -12, 1e-12);
  EXPECT_NEAR(membership_residual(DiffSquaresSpec{8}, a, {4, 0}, {3, 5}), 0, 1e-12);
  EXPECT_DOUBLE_EQ(residual_scale(ApolloniusSpec{Ratio(2, 1)}, a, {3, 4}), 5);
  EXPECT_DOUBLE_EQ(residual_scale(SumSquaresSpec{1}, a, {3, 4}), 25);
}

TEST(Contains, Examples) {
  const ToleranceProfile tol;
  EXPECT_TRUE(locus_contains(Circle({9, 0}, 6), {9, 6}, tol, 5));
  EXPECT_FALSE(locus_contains(EmptyLocus{}, {0, 0}, tol, 5));
  const Line x3(Point(3, 0), Vec2{0, 1});
  EXPECT_TRUE(locus_contains(x3, {3 + 1e-12, 42}, tol, 4));
  EXPECT_FALSE(locus_contains(x3, {3.001, 42}, tol, 4));
  EXPECT_TRUE(locus_contains(SinglePoint{{2, 0}}, {2, 0}, tol, 4));
  EXPECT_FALSE(locus_contains(SinglePoint{{2, 0}}, {2, 0.1}, tol, 4));
  EXPECT_TRUE(std::isinf(distance_to_locus(EmptyLocus{}, {0, 0})));
}

TEST(LociProperty, ConstructorMatchesPredicate) {
  Generator gen(31);
  for (int i = 0; i < 300; ++i) {
    const auto [a, b] = gen.segment();
    const double ab = d(a, b);
    const Ratio r(gen.uniform(0.1, 10.0), 1.0);
    const auto ap = apollonius_locus(a, b, r);
    for (const Point& x : samples(ap.locus, ab)) {
      ASSERT_LE(std::abs(apollonius_residual(a, b, r.value(), x)), 1e-9 * ab);
    }
    const double k2 = gen.uniform(0.0, 4.0) * ab * ab;
    for (const Point& x : samples(sum_squares_locus(a, b, k2), ab)) {
      ASSERT_LE(std::abs(sumsq_residual(a, b, k2, x)), 1e-9 * ab * ab);
    }
    const double c = gen.uniform(-3.0, 3.0) * ab * ab;
    for (const Point& x : samples(diff_squares_locus(a, b, c), ab)) {
      ASSERT_LE(std::abs(diffsq_residual(a, b, c, x)), 1e-9 * ab * ab);
    }
  }
}

TEST(LociProperty, ClosedFormsForIntegerRatios) {
  for (double ab : {1.0, 3.0, 7.5}) {
    const Point a(-1.0, 2.0);
    const Point b(-1.0 + ab * 0.6, 2.0 + ab * 0.8);
    for (int m = 1; m <= 100; ++m) {
      for (int n = 1; n <= 100; ++n) {
        if (m == n) continue;
        const double den = std::abs(double(m) * m - double(n) * n);
        const auto res = apollonius_locus(a, b, Ratio::from_integers(m, n));
        const auto& c = std::get<Circle>(res.locus);
        ASSERT_LE(std::abs(c.radius() - m * n * ab / den), 1e-12 * ab) << m << "/" << n;
        ASSERT_LE(std::abs(res.center_offset_AO - double(m) * m * ab / den), 1e-12 * ab) << m << "/" << n;
        ASSERT_LE(std::abs(res.center_offset_OB - double(n) * n * ab / den), 1e-12 * ab) << m << "/" << n;
      }
    }
  }
}

TEST(LociProperty, AnalyticEquationInLocalFrame) {
  Generator gen(32);
  for (int i = 0; i < 500; ++i) {
    const auto [a, b] = gen.segment();
    const int m = gen.integer(1, 30);
    const int n = gen.integer(1, 30);
    if (m == n) continue;
    const double ab = d(a, b);
    const Circle c = std::get<Circle>(apollonius_locus(a, b, Ratio::from_integers(m, n)).locus);
    // Local frame: origin A, x along A -> B.
    const double ux = (b.x() - a.x()) / ab;
    const double uy = (b.y() - a.y()) / ab;
    const double cx = (c.center().x() - a.x()) * ux + (c.center().y() - a.y()) * uy;
    const double cy = -(c.center().x() - a.x()) * uy + (c.center().y() - a.y()) * ux;
    const double den = double(m) * m - double(n) * n;
    const double h = double(m) * m * ab / den;
    const double rr = m * n * ab / den;
    // x^2 + y^2 - 2 h x + (h^2 - r^2) = 0
    const double scale = std::max(1.0, std::abs(h));
    EXPECT_LE(std::abs(-2.0 * cx - (-2.0 * h)), 1e-9 * scale);
    EXPECT_LE(std::abs(cy), 1e-9 * scale);
    EXPECT_LE(std::abs((cx * cx + cy * cy - c.radius() * c.radius()) - (h * h - rr * rr)), 1e-9 * scale * scale);
  }
}

TEST(LociProperty, SwapSymmetry) {
  Generator gen(33);
  const ToleranceProfile tol;
  for (int i = 0; i < 500; ++i) {
    const auto [a, b] = gen.segment();
    const Ratio r(gen.uniform(0.1, 10.0), 1.0);
    if (r.is_unit(tol)) continue;
    const Circle x = std::get<Circle>(apollonius_locus(a, b, r).locus);
    const Circle y = std::get<Circle>(apollonius_locus(b, a, r.inverse()).locus);
    const double scale = std::max(d(a, b), x.radius());
    EXPECT_LE(d(x.center(), y.center()), 1e-11 * scale);
    EXPECT_LE(std::abs(x.radius() - y.radius()), 1e-11 * scale);
  }
}

TEST(LociProperty, SumSquaresTrichotomy) {
  Generator gen(34);
  const ToleranceProfile tol;
  for (int i = 0; i < 500; ++i) {
    const auto [a, b] = gen.segment();
    const double ab2 = d2(a, b);
    const double k2 = gen.uniform(0.0, 2.0) * ab2;
    const double disc = k2 / 2.0 - ab2 / 4.0;
    const Locus l = sum_squares_locus(a, b, k2);
    if (std::abs(disc) <= tol.abs_eps() * ab2) {
      EXPECT_TRUE(std::holds_alternative<SinglePoint>(l));
    } else if (disc > 0) {
      EXPECT_TRUE(std::holds_alternative<Circle>(l));
    } else {
      EXPECT_TRUE(std::holds_alternative<EmptyLocus>(l));
    }
  }
  const Point a(1, 1), b(4, 5);
  EXPECT_TRUE(std::holds_alternative<SinglePoint>(sum_squares_locus(a, b, 12.5 + 1e-10)));
  EXPECT_TRUE(std::holds_alternative<Circle>(sum_squares_locus(a, b, 12.5 + 1e-6)));
  EXPECT_TRUE(std::holds_alternative<EmptyLocus>(sum_squares_locus(a, b, 12.5 - 1e-6)));
}

TEST(LociProperty, DiffSquaresReflection) {
  Generator gen(35);
  for (int i = 0; i < 500; ++i) {
    const auto [a, b] = gen.segment();
    const double ab = d(a, b);
    const double c = gen.uniform(-3.0, 3.0) * ab * ab;
    const Line plus = diff_squares_locus(a, b, c);
    const Line minus = diff_squares_locus(a, b, -c);
    const Point o = midpoint(a, b);
    for (double t : {-5.0, 0.0, 2.5}) {
      const Point p = plus.at(t * ab);
      const Point mirrored(2.0 * o.x() - p.x(), 2.0 * o.y() - p.y());
      EXPECT_LE(distance_to_locus(minus, mirrored), 1e-9 * ab);
    }
  }
}

TEST(LociProperty, RigidMotionEquivariance) {
  Generator gen(36);
  for (int i = 0; i < 300; ++i) {
    const auto [a, b] = gen.segment();
    const auto motion = gen.motion();
    const Point a2 = motion.apply(a);
    const Point b2 = motion.apply(b);
    const double ab = d(a, b);
    const LocusSpec specs[] = {
        ApolloniusSpec{Ratio(gen.uniform(0.2, 5.0), 1.0)},
        ApolloniusSpec{Ratio::from_integers(1, 1)},
        SumSquaresSpec{gen.uniform(0.6, 3.0) * ab * ab},
        DiffSquaresSpec{gen.uniform(-2.0, 2.0) * ab * ab},
    };
    for (const auto& spec : specs) {
      const Locus before = construct_locus(spec, a, b);
      const Locus after = construct_locus(spec, a2, b2);
      ASSERT_EQ(before.index(), after.index());
      double extent = ab;
      if (const auto* c = std::get_if<Circle>(&before)) extent = std::max(extent, c->radius());
      for (const Point& x : samples(before, ab)) {
        EXPECT_LE(distance_to_locus(after, motion.apply(x)), 1e-9 * extent);
      }
    }
  }
}
