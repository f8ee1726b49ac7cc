#include "cesaro/hull.hpp"

#include <algorithm>

#include "cesaro/errors.hpp"

namespace cesaro {
namespace {

struct Cube {
  Rational radius;
  std::vector<std::size_t> corner_index;  // indexed by sign mask, bit (d-1-i) set means +R in coord i
};

std::optional<Cube> largest_cube(const FinitePointSet& M, std::size_t d) {
  std::optional<Cube> best;
  const std::size_t count = std::size_t{1} << d;
  for (const auto& p : M.points()) {
    Rational r = rational::abs(p[0]);
    if (r == 0 || (best && r <= best->radius)) continue;
    Cube cube{r, std::vector<std::size_t>(count, M.size())};
    bool complete = true;
    for (std::size_t mask = 0; mask < count && complete; ++mask) {
      Point corner(d);
      for (std::size_t i = 0; i < d; ++i) corner[i] = ((mask >> (d - 1 - i)) & 1U) ? r : Rational(-r);
      auto it = std::find(M.points().begin(), M.points().end(), corner);
      if (it == M.points().end()) {
        complete = false;
      } else {
        cube.corner_index[mask] = static_cast<std::size_t>(it - M.points().begin());
      }
    }
    if (complete) best = std::move(cube);
  }
  return best;
}

std::optional<HullWitness> box_clamp(const Space& space, const FinitePointSet& M, const Cube& cube,
                                     const Point& x, const Rational& halfwidth) {
  const std::size_t d = space.dimension();
  Point y(d);
  for (std::size_t i = 0; i < d; ++i) {
    y[i] = x[i];
    if (y[i] > cube.radius) y[i] = cube.radius;
    if (y[i] < -cube.radius) y[i] = -cube.radius;
  }
  Point residual = x - y;
  if (!within_box(space, residual, halfwidth)) return std::nullopt;

  HullWitness w{std::vector<Rational>(M.size(), Rational(0)), residual};
  const std::size_t count = std::size_t{1} << d;
  for (std::size_t mask = 0; mask < count; ++mask) {
    Rational c = 1;
    for (std::size_t i = 0; i < d; ++i) {
      bool positive = (mask >> (d - 1 - i)) & 1U;
      Rational t = y[i] / cube.radius;
      c *= (positive ? Rational(1 + t) : Rational(1 - t)) / 2;
    }
    w.coeffs[cube.corner_index[mask]] = c;
  }
  return w;
}

// Phase-one simplex on  A z = b, z >= 0 with b >= 0. Returns a feasible z or
// nothing. Dense tableau, Bland's rule (lowest index enters and leaves).
std::optional<std::vector<Rational>> feasible_point(std::vector<std::vector<Rational>> A,
                                                    std::vector<Rational> b) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows ? A[0].size() : 0;
  const std::size_t total = cols + rows;  // structural + artificial

  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(total + 1));
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) t[r][c] = A[r][c];
    t[r][cols + r] = 1;
    t[r][total] = b[r];
    basis[r] = cols + r;
  }
  // objective row: minimize sum of artificials, stored as reduced costs
  std::vector<Rational> obj(total + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) obj[c] -= t[r][c];
    obj[total] -= t[r][total];
  }

  while (true) {
    std::size_t enter = total;
    for (std::size_t c = 0; c < total; ++c) {
      if (obj[c] < 0) {
        enter = c;
        break;
      }
    }
    if (enter == total) break;

    std::size_t leave = rows;
    Rational best_ratio;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][enter] <= 0) continue;
      Rational ratio = t[r][total] / t[r][enter];
      if (leave == rows || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == rows) break;  // unbounded direction cannot occur in phase one

    Rational pivot = t[leave][enter];
    for (auto& v : t[leave]) v /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      Rational f = t[r][enter];
      for (std::size_t c = 0; c <= total; ++c) t[r][c] -= f * t[leave][c];
    }
    if (obj[enter] != 0) {
      Rational f = obj[enter];
      for (std::size_t c = 0; c <= total; ++c) obj[c] -= f * t[leave][c];
    }
    basis[leave] = enter;
  }

  if (obj[total] != 0) return std::nullopt;
  std::vector<Rational> z(cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] < cols) z[basis[r]] = t[r][total];
  }
  return z;
}

std::optional<HullWitness> simplex(const Space& space, const FinitePointSet& M, const Point& x,
                                   const Rational& halfwidth) {
  const std::size_t d = space.dimension();
  const std::size_t mu = M.size();
  // variables: g_1..g_mu, then per coordinate t_i in [0, 2 b_i] with r_i = t_i - b_i,
  // and slacks u_i so that t_i + u_i = 2 b_i. Coordinates with b_i = 0 get none.
  std::vector<Rational> bound(d);
  std::vector<std::size_t> boxed;
  for (std::size_t i = 0; i < d; ++i) {
    bound[i] = halfwidth / space.weights()[i];
    if (bound[i] > 0) boxed.push_back(i);
  }
  const std::size_t cols = mu + 2 * boxed.size();
  const std::size_t rows = d + 1 + boxed.size();
  std::vector<std::vector<Rational>> A(rows, std::vector<Rational>(cols));
  std::vector<Rational> b(rows);

  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < mu; ++j) A[i][j] = M[j][i];
    b[i] = x[i] + bound[i];
  }
  for (std::size_t j = 0; j < mu; ++j) A[d][j] = 1;
  b[d] = 1;
  for (std::size_t s = 0; s < boxed.size(); ++s) {
    std::size_t i = boxed[s];
    A[i][mu + s] = 1;
    A[d + 1 + s][mu + s] = 1;
    A[d + 1 + s][mu + boxed.size() + s] = 1;
    b[d + 1 + s] = 2 * bound[i];
  }
  for (std::size_t r = 0; r < rows; ++r) {
    if (b[r] < 0) {
      for (auto& v : A[r]) v = -v;
      b[r] = -b[r];
    }
  }

  auto z = feasible_point(std::move(A), std::move(b));
  if (!z) return std::nullopt;

  HullWitness w{std::vector<Rational>(z->begin(), z->begin() + static_cast<std::ptrdiff_t>(mu)), Point(d)};
  Point hull_point(d);
  for (std::size_t j = 0; j < mu; ++j) {
    if (w.coeffs[j] != 0) hull_point.add_scaled(w.coeffs[j], M[j]);
  }
  w.residual = x - hull_point;
  return w;
}

}  // namespace

std::optional<HullWitness> hull_contains(const Space& space, const FinitePointSet& M, const Point& x,
                                         const Rational& slack) {
  const std::size_t d = space.dimension();
  if (d > kMaxHullDimension) {
    throw BudgetExceeded("hull_contains supports dimension <= " + std::to_string(kMaxHullDimension));
  }
  if (M.empty()) throw PreconditionError("hull_contains needs a nonempty point set");
  if (x.dimension() != d || M[0].dimension() != d) throw PreconditionError("hull_contains dimension mismatch");
  if (slack < 0) throw PreconditionError("hull_contains needs a nonnegative slack");

  if (slack >= 1) {
    // every point is within metric distance < 1 of every other
    HullWitness w{std::vector<Rational>(M.size(), Rational(0)), x - M[0]};
    w.coeffs[0] = 1;
    return w;
  }

  const Rational halfwidth = inscribed_box_halfwidth(slack);
  if (auto cube = largest_cube(M, d)) {
    if (auto w = box_clamp(space, M, *cube, x, halfwidth)) return w;
  }
  return simplex(space, M, x, halfwidth);
}

bool verify_witness(const Space& space, const FinitePointSet& M, const Point& x, const Rational& slack,
                    const HullWitness& witness) {
  if (witness.coeffs.size() != M.size()) return false;
  Rational sum = 0;
  Point rebuilt = witness.residual;
  for (std::size_t j = 0; j < M.size(); ++j) {
    if (witness.coeffs[j] < 0) return false;
    sum += witness.coeffs[j];
    rebuilt.add_scaled(witness.coeffs[j], M[j]);
  }
  return sum == 1 && rebuilt == x && space.norm_to_zero(witness.residual) <= slack;
}

}  // namespace cesaro
