#include <algorithm>
#include <numeric>

#include "cesaro/construct.hpp"
#include "cesaro/errors.hpp"
#include "cesaro/iterate.hpp"

namespace cesaro {

void validate_witness(const ConvexWitness& witness, const GroundSet& ground) {
  if (witness.empty()) throw PreconditionError("convex witness has no atoms");
  Rational sum = 0;
  for (const auto& atom : witness) {
    if (atom.coefficient <= 0 || atom.coefficient > 1) {
      throw PreconditionError("convex coefficient " + rational::to_string(atom.coefficient) +
                              " outside (0, 1]");
    }
    if (!ground.contains(atom.point)) {
      throw PreconditionError("atom " + atom.point.to_string() + " is not in the ground set");
    }
    sum += atom.coefficient;
  }
  if (sum != 1) throw PreconditionError("convex coefficients sum to " + rational::to_string(sum));
}

std::vector<std::size_t> round_counts(std::span<const Rational> lambdas, std::size_t m) {
  const Rational mq(static_cast<unsigned long>(m));
  std::vector<std::size_t> counts(lambdas.size());
  std::vector<Rational> fractional(lambdas.size());
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    Rational scaled = lambdas[i] * mq;
    Integer f = rational::floor(scaled);
    counts[i] = f.get_ui();
    fractional[i] = scaled - Rational(f);
    assigned += counts[i];
  }
  if (assigned > m) throw PreconditionError("coefficients sum above 1");
  std::vector<std::size_t> order(lambdas.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return fractional[a] > fractional[b]; });
  for (std::size_t r = 0; r < m - assigned; ++r) ++counts[order[r % order.size()]];
  return counts;
}

ExtendResult extend_to_target(const Space& space, std::span<const Point> prefix,
                              const ConvexWitness& target, const Rational& epsilon, unsigned k,
                              std::size_t term_cap) {
  if (epsilon <= 0) throw PreconditionError("epsilon must be positive");
  if (k < 1) throw PreconditionError("iterate order must be >= 1");
  if (target.empty()) throw PreconditionError("convex witness has no atoms");
  require_dimension(prefix, space.dimension());

  Point x(space.dimension());
  std::vector<Rational> lambdas;
  Rational sum = 0;
  for (const auto& atom : target) {
    if (atom.coefficient <= 0) throw PreconditionError("convex coefficients must be positive");
    x.add_scaled(atom.coefficient, atom.point);
    lambdas.push_back(atom.coefficient);
    sum += atom.coefficient;
  }
  if (sum != 1) throw PreconditionError("convex coefficients must sum to 1");

  const Rational third = epsilon / 3;
  const std::size_t important = space.active(n_epsilon(third));
  const Rational v(static_cast<unsigned long>(target.size()));

  // smallest m with ||A_i||_j / m < eps/(3v)
  Rational need = 0;
  for (const auto& atom : target) {
    for (std::size_t j = 1; j <= important; ++j) {
      need = std::max<Rational>(need, space.seminorm(j, atom.point) * v / third);
    }
  }
  Integer m_big = rational::smallest_natural_above(need);
  if (m_big > static_cast<unsigned long>(term_cap)) {
    throw BudgetExceeded("tuple length " + m_big.get_str() + " exceeds the term cap " +
                         std::to_string(term_cap));
  }

  ExtendResult out;
  out.m = m_big.get_ui();
  out.counts = round_counts(lambdas, out.m);
  out.x_prime = Point(space.dimension());
  const Rational mq(static_cast<unsigned long>(out.m));
  for (std::size_t i = 0; i < target.size(); ++i) {
    Rational share = Rational(static_cast<unsigned long>(out.counts[i])) / mq;
    if (rational::abs(lambdas[i] - share) > 1 / mq) {
      throw CertificationFailure("rounded count for atom " + std::to_string(i + 1) + " is off by more than 1/m");
    }
    out.x_prime.add_scaled(share, target[i].point);
  }
  out.rounding_distance = space.metric(x, out.x_prime);

  std::vector<Point> tuple;
  tuple.reserve(out.m);
  for (std::size_t i = 0; i < target.size(); ++i) {
    for (std::size_t r = 0; r < out.counts[i]; ++r) tuple.push_back(target[i].point);
  }

  IterateTracker tracker(k, space.dimension());
  tracker.push_all(prefix);
  std::size_t cursor = 0;
  while (true) {
    if (out.terms.size() >= term_cap) {
      throw BudgetExceeded("no certified index within " + std::to_string(term_cap) + " appended terms");
    }
    out.terms.push_back(tuple[cursor]);
    tracker.push(tuple[cursor]);
    cursor = (cursor + 1) % tuple.size();
    if (space.metric(tracker.value(k), out.x_prime) < third) break;
  }
  out.n0 = tracker.length();
  out.distance_prime = space.metric(tracker.value(k), out.x_prime);
  out.distance = space.metric(tracker.value(k), x);
  if (!(out.distance < epsilon)) {
    throw CertificationFailure("extension reached distance " + rational::to_string(out.distance) +
                               " which is not below " + rational::to_string(epsilon));
  }
  return out;
}

}  // namespace cesaro
