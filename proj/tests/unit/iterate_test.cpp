#include <gtest/gtest.h>

#include <random>

#include "cesaro/iterate.hpp"
#include "oracles.hpp"

namespace cesaro {
namespace {

using rational::frac;

TEST(IterateTracker, TracksEveryOrderAtEveryLength) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> num(-9, 9);
  std::vector<Point> terms;
  for (int i = 0; i < 40; ++i) terms.push_back(Point{frac(num(rng), 1 + i % 4), Rational(num(rng))});
  IterateTracker tracker(4, 2);
  for (std::size_t n = 1; n <= terms.size(); ++n) {
    tracker.push(terms[n - 1]);
    ASSERT_EQ(tracker.length(), n);
    EXPECT_EQ(tracker.value(0), terms[n - 1]);
    for (unsigned j = 1; j <= 4; ++j) ASSERT_EQ(tracker.value(j), oracle::averaged(j, terms, n)) << j << ' ' << n;
  }
}

TEST(IterateTracker, PushAllMatchesPush) {
  std::vector<Point> terms{Point{Rational(1)}, Point{Rational(0)}, Point{Rational(0)}};
  IterateTracker a(2, 1);
  a.push_all(terms);
  EXPECT_EQ(a.value(2), Point{frac(11, 18)});
  EXPECT_EQ(a.k(), 2u);
}

}  // namespace
}  // namespace cesaro
