#include <algorithm>

#include "cesaro/construct.hpp"
#include "cesaro/errors.hpp"
#include "cesaro/hull.hpp"

namespace cesaro {

MChain build_m_chain(const Space& space, const GroundSet& ground, const FinitePointSet& m0,
                     const Rational& epsilon, unsigned k) {
  if (epsilon <= 0 || epsilon >= Rational(1, 2)) throw PreconditionError("chain needs 0 < eps < 1/2");
  if (k < 1) throw PreconditionError("chain needs k >= 1");
  if (m0.empty()) throw PreconditionError("M^0 must be nonempty");
  if (!ground.is_lattice()) {
    throw PreconditionError("chain construction needs a lattice ground set to place cube corners");
  }
  for (const auto& p : m0.points()) {
    if (!ground.contains(p)) throw PreconditionError("M^0 point " + p.to_string() + " is not in the ground set");
  }
  const std::size_t important = space.active(n_epsilon(epsilon / 3));
  for (std::size_t rho = 1; rho <= important; ++rho) {
    if (m0.norm(space, rho) < 1) {
      throw PreconditionError("||M^0||_" + std::to_string(rho) + " must be at least 1");
    }
  }

  MChain chain;
  chain.epsilon = epsilon;
  chain.k = k;
  chain.sets.push_back(m0);
  const Rational kq(static_cast<unsigned long>(k));
  const Rational slack = delta(epsilon / 6) / 4;

  for (unsigned i = 1; i <= k; ++i) {
    const FinitePointSet& prev = chain.sets.back();
    const Rational norm_max = prev.max_norm(space, important);
    const unsigned power = k + 1 - i;

    Rational scale = rational::pow(kq / epsilon * (10 * norm_max + 2), power) *
                     Rational(rational::factorial(power));
    Rational radius = scale * 2 * prev.sup_norm();

    FinitePointSet next = cube_corners(ground, radius);
    for (const auto& p : prev.points()) next.insert(p);

    for (const auto& p : prev.points()) {
      for (int sign : {1, -1}) {
        Point extreme = p * (scale * 2 * sign);
        auto w = hull_contains(space, next, extreme, slack);
        if (!w || !verify_witness(space, next, extreme, slack, *w)) {
          throw CertificationFailure("covering of " + extreme.to_string() + " by M^" + std::to_string(i) +
                                     " failed");
        }
      }
    }

    chain.intervals.emplace_back(epsilon / kq / (10 * norm_max + 2), epsilon / kq / (5 * norm_max + 1));
    chain.radii.push_back(radius);
    chain.scales.push_back(scale);
    chain.sets.push_back(std::move(next));
  }

  Rational total = 0;
  for (std::size_t i = 0; i < chain.intervals.size(); ++i) {
    const auto& [c, d] = chain.intervals[i];
    if (!(0 < c && c < d && d < 1)) throw CertificationFailure("interval " + std::to_string(i + 1) + " is malformed");
    if (i > 0) {
      const auto& [pc, pd] = chain.intervals[i - 1];
      if (pd - pc < d - c) throw CertificationFailure("interval widths are not nonincreasing");
    }
    total += d;
  }
  if (!(total < epsilon)) throw CertificationFailure("interval upper ends do not sum below eps");
  return chain;
}

std::size_t Partition::block_end(std::size_t i) const {
  std::size_t end = v;
  for (std::size_t j = 0; j < i; ++j) end += lambdas[j];
  return end;
}

Integer partition_threshold(const Space& space, const MChain& chain, std::size_t v1) {
  if (chain.intervals.empty()) throw PreconditionError("empty chain");
  const std::size_t important = space.active(n_epsilon(chain.epsilon / 3));
  const FinitePointSet& top = chain.sets.back();
  const Rational count(static_cast<unsigned long>(top.size()));
  const Rational norm = top.max_norm(space, important);
  const auto& [ck, dk] = chain.intervals.back();

  Rational upper_sum = 0;
  for (const auto& interval : chain.intervals) upper_sum += interval.second;

  Rational bound = 2 / (dk - ck);
  bound = std::max<Rational>(bound, Rational(2 * static_cast<unsigned long>(v1)));
  bound = std::max<Rational>(bound, Rational(8) * count * norm);
  bound = std::max<Rational>(bound, 12 * count * norm / chain.epsilon / (1 - upper_sum));
  return rational::smallest_natural_above(bound);
}

Partition choose_partition(std::size_t m, std::span<const std::pair<Rational, Rational>> intervals) {
  if (intervals.empty()) throw PreconditionError("no intervals");
  const auto& [ck, dk] = intervals.back();
  const Rational mq(static_cast<unsigned long>(m));
  if (!(mq > 2 / (dk - ck))) {
    throw PreconditionError("m = " + std::to_string(m) + " must exceed 2/(d_k - c_k) = " +
                            rational::to_string(2 / (dk - ck)));
  }
  Partition part;
  part.m = m;
  part.lambdas.assign(intervals.size(), 0);
  std::size_t remainder = m;
  for (std::size_t idx = intervals.size(); idx-- > 0;) {
    const auto& [c, d] = intervals[idx];
    const Rational r(static_cast<unsigned long>(remainder));
    Integer lambda = rational::ceil(c * r);
    if (lambda < 1) lambda = 1;
    if (Rational(lambda) > d * r) {
      throw PreconditionError("no block length fits interval " + std::to_string(idx + 1) + " at remainder " +
                              std::to_string(remainder));
    }
    part.lambdas[idx] = lambda.get_ui();
    remainder -= part.lambdas[idx];
  }
  part.v = remainder;
  if (!(2 * part.v > m)) throw PreconditionError("partition leaves v <= m/2");
  return part;
}

Rational partition_gamma(const Partition& part, std::size_t i) {
  if (i < 1 || i > part.lambdas.size()) throw PreconditionError("block index out of range");
  return rational::frac(static_cast<unsigned long>(part.lambdas[i - 1]),
                        static_cast<unsigned long>(part.block_end(i)));
}

}  // namespace cesaro
