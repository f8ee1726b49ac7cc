#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cesaro/point.hpp"
#include "cesaro/rational.hpp"
#include "cesaro/space.hpp"

namespace cesaro {

inline constexpr std::size_t kMaxHullDimension = 4;

/// x = sum_j coeffs[j] * M_j + residual, coeffs >= 0 summing to 1, and
/// metric(residual, 0) <= slack.
struct HullWitness {
  std::vector<Rational> coeffs;
  Point residual;
};

/// Decides whether x lies in conv(M) + B(0, slack). The metric ball is replaced
/// by the coordinate box inscribed in it, so a returned witness is always
/// valid, and "not contained" is exact for slack = 0.
///
/// If M contains a full set of cube corners (+-R, ..., +-R) the answer is
/// first tried by clamping x to the cube; otherwise an exact phase-one simplex
/// with Bland's rule decides the feasibility problem.
std::optional<HullWitness> hull_contains(const Space& space, const FinitePointSet& M, const Point& x,
                                         const Rational& slack);

/// Validates a witness exactly: coefficient signs and sum, reconstruction,
/// and the residual bound.
bool verify_witness(const Space& space, const FinitePointSet& M, const Point& x, const Rational& slack,
                    const HullWitness& witness);

}  // namespace cesaro
