#include <gtest/gtest.h>

#include <random>

#include "cesaro/errors.hpp"
#include "cesaro/hull.hpp"
#include "oracles.hpp"

namespace cesaro {
namespace {

using rational::frac;

TEST(Hull, MidpointOfSegment) {
  Space space(1);
  FinitePointSet M({Point{Rational(0)}, Point{Rational(1)}});
  auto w = hull_contains(space, M, Point{frac(1, 2)}, Rational(0));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->coeffs, (std::vector<Rational>{frac(1, 2), frac(1, 2)}));
  EXPECT_TRUE(verify_witness(space, M, Point{frac(1, 2)}, Rational(0), *w));
}

TEST(Hull, OutsideSegment) {
  Space space(1);
  FinitePointSet M({Point{Rational(0)}, Point{Rational(1)}});
  EXPECT_FALSE(hull_contains(space, M, Point{Rational(2)}, Rational(0)).has_value());
}

TEST(Hull, ScaledSquare) {
  Space space(2);
  FinitePointSet corners = cube_corners(GroundSet::lattice(2, Rational(1)), Rational(1)).scaled(Rational(3));
  const Point x{Rational(2), Rational(-2)};
  auto w = hull_contains(space, corners, x, Rational(0));
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(verify_witness(space, corners, x, Rational(0), *w));
  EXPECT_FALSE(hull_contains(space, corners, Point{Rational(4), Rational(0)}, Rational(0)).has_value());
}

TEST(Hull, SlackAbsorbsSmallGap) {
  Space space(1);
  FinitePointSet M({Point{Rational(0)}, Point{Rational(1)}});
  const Point x{frac(101, 100)};
  auto w = hull_contains(space, M, x, frac(1, 10));
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(verify_witness(space, M, x, frac(1, 10), *w));
  EXPECT_TRUE(hull_contains(space, M, Point{Rational(50)}, Rational(1)).has_value());
}

TEST(Hull, RejectsBadInput) {
  Space space(1);
  EXPECT_THROW(hull_contains(space, FinitePointSet(), Point{Rational(0)}, Rational(0)), PreconditionError);
  FinitePointSet M({Point{Rational(0)}});
  EXPECT_THROW(hull_contains(space, M, Point{Rational(0)}, Rational(-1)), PreconditionError);
  Space big(5);
  FinitePointSet M5({Point(5)});
  EXPECT_THROW(hull_contains(big, M5, Point(5), Rational(0)), BudgetExceeded);
}

TEST(Hull, AgreesWithFourierMotzkin) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coord(-6, 6);
  std::uniform_int_distribution<int> den(1, 3);
  int contained = 0;
  int rejected = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = 1 + static_cast<std::size_t>(trial) % 3;
    const std::size_t p = 1 + static_cast<std::size_t>(trial / 3) % 4;
    std::vector<Rational> weights;
    for (std::size_t i = 0; i < d; ++i) weights.push_back(frac(1 + trial % 2, 1 + (trial / 2) % 2));
    Space space(weights);
    FinitePointSet M;
    while (M.size() < p) {
      std::vector<Rational> c;
      for (std::size_t i = 0; i < d; ++i) c.push_back(Rational(coord(rng)));
      M.insert(Point(std::move(c)));
    }
    std::vector<Rational> xc;
    for (std::size_t i = 0; i < d; ++i) xc.push_back(frac(coord(rng), den(rng)));
    const Point x(xc);
    const Rational slack = trial % 4 == 0 ? Rational(0) : frac(1, 2 + trial % 9);
    const Rational s = inscribed_box_halfwidth(slack);
    std::vector<Rational> halfwidth;
    for (std::size_t i = 0; i < d; ++i) halfwidth.push_back(s / weights[i]);
    std::vector<Point> pts(M.points().begin(), M.points().end());
    const bool expected = oracle::box_hull_feasible(pts, x, halfwidth);
    auto w = hull_contains(space, M, x, slack);
    ASSERT_EQ(w.has_value(), expected) << "trial " << trial << " x=" << x.to_string();
    if (w) {
      EXPECT_TRUE(verify_witness(space, M, x, slack, *w));
      ++contained;
    } else {
      ++rejected;
    }
  }
  EXPECT_GT(contained, 30);
  EXPECT_GT(rejected, 30);
}

}  // namespace
}  // namespace cesaro
