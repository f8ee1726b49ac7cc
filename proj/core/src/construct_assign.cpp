#include <algorithm>

#include "cesaro/construct.hpp"
#include "cesaro/errors.hpp"
#include "cesaro/hull.hpp"
#include "cesaro/iterate.hpp"
#include "cesaro/kernel.hpp"

namespace cesaro {
namespace {

void certify_prefix(const Space& space, const MChain& chain, const IterateTracker& tracker,
                    std::span<const Point> targets, const Rational& epsilon) {
  const unsigned k = chain.k;
  const Rational base = delta(epsilon / 6) / 4;
  const FinitePointSet& m0 = chain.sets.front();
  const Rational kq(static_cast<unsigned long>(k));

  auto covered = [&](const Point& p, const Rational& slack) {
    auto w = hull_contains(space, m0, p, slack);
    return w && verify_witness(space, m0, p, slack, *w);
  };
  if (!covered(space.origin(), base)) throw PreconditionError("0 is not covered by M^0");
  for (const auto& x : targets) {
    if (!covered(x, base)) throw PreconditionError("target " + x.to_string() + " is not covered by M^0");
  }
  for (unsigned i = 1; i <= k; ++i) {
    if (!covered(tracker.value(i), base / kq)) {
      throw PreconditionError("prefix iterate of order " + std::to_string(i) + " is not close enough to M^0");
    }
  }
}

std::size_t choose_rounds(const Space& space, const FinitePointSet& mi, const Rational& phi, std::size_t mu,
                          std::size_t v, std::size_t important) {
  const Rational norm = mi.max_norm(space, important);
  Rational room = Rational(1, 3) / norm - Rational(2 * static_cast<unsigned long>(mu)) /
                                             Rational(static_cast<unsigned long>(v));
  if (room <= 0) {
    throw CertificationFailure("no round count N exists: 2 mu / v is already at least 1/(3 ||M^i||)");
  }
  return rational::smallest_natural_above(phi / room).get_ui();
}

}  // namespace

AssignResult assign_blocks(const Space& space, std::span<const Point> prefix, const MChain& chain,
                           const Partition& part, std::span<const Point> targets, const Rational& epsilon) {
  const unsigned k = chain.k;
  if (targets.size() != k) throw PreconditionError("need exactly k targets");
  if (part.lambdas.size() != k) throw PreconditionError("partition has the wrong number of blocks");
  if (prefix.size() != part.v) throw PreconditionError("prefix length must equal v");
  require_dimension(prefix, space.dimension());
  require_dimension(targets, space.dimension());

  const std::size_t important = space.active(n_epsilon(epsilon / 3));
  const Rational vq(static_cast<unsigned long>(part.v));
  const Rational step_bound = 2 / vq;

  {
    const FinitePointSet& top = chain.sets.back();
    const Rational count(static_cast<unsigned long>(top.size()));
    for (std::size_t rho = 1; rho <= important; ++rho) {
      if (!(2 * top.norm(space, rho) / vq < epsilon / (6 * count))) {
        throw PreconditionError("v = " + std::to_string(part.v) + " is too small for the top covering set");
      }
    }
  }

  IterateTracker tracker(k, space.dimension());
  tracker.push_all(prefix);
  certify_prefix(space, chain, tracker, targets, epsilon);

  std::vector<Point> theta(prefix.begin(), prefix.end());
  AssignResult out;

  for (unsigned i = 1; i <= k; ++i) {
    StageRecord st;
    st.stage = i;
    st.order = k + 1 - i;
    st.start = part.block_end(i - 1);
    st.end = part.block_end(i);
    st.target = targets[st.order - 1];
    const std::size_t lambda = st.end - st.start;

    KernelRow row = iterate_row(st.order, st.end);
    st.phi = 0;
    for (std::size_t j = st.start; j < st.end; ++j) st.phi += row[j];
    st.partial_sum = Point(space.dimension());
    for (std::size_t j = 0; j < st.start; ++j) st.partial_sum.add_scaled(row[j], theta[j]);

    const FinitePointSet& mi = chain.sets[i];
    auto w = hull_contains(space, mi.scaled(st.phi), st.target - st.partial_sum, delta(epsilon / 6));
    if (!w) {
      throw CertificationFailure("stage " + std::to_string(i) + ": target minus partial sum is not covered by " +
                                 "phi * M^" + std::to_string(i));
    }
    st.x_prime = st.target - w->residual;
    for (std::size_t j = 0; j < mi.size(); ++j) {
      if (w->coeffs[j] > 0) {
        st.atoms.push_back(mi[j]);
        st.g.push_back(w->coeffs[j]);
      }
    }
    const std::size_t mu = st.atoms.size();
    st.rounds = choose_rounds(space, mi, st.phi, mu, part.v, important);

    std::vector<Rational> goal(mu);
    for (std::size_t t = 0; t < mu; ++t) goal[t] = st.g[t] * st.phi;

    st.gamma.assign(mu, Rational(0));
    std::vector<std::size_t> chosen;
    chosen.reserve(lambda);
    auto assign = [&](std::size_t t) {
      st.gamma[t] += row[st.start + chosen.size()];
      chosen.push_back(t);
    };
    const Rational nq(static_cast<unsigned long>(st.rounds));
    for (std::size_t L = 1; L < st.rounds && chosen.size() < lambda; ++L) {
      const Rational frac_done = Rational(static_cast<unsigned long>(L)) / nq;
      for (std::size_t t = 0; t < mu; ++t) {
        const Rational quota = goal[t] * frac_done;
        while (chosen.size() < lambda && st.gamma[t] <= quota) assign(t);
      }
    }
    for (std::size_t t = 0; t < mu; ++t) {
      while (chosen.size() < lambda && st.gamma[t] + row[st.start + chosen.size()] <= goal[t]) assign(t);
    }
    while (chosen.size() < lambda) {
      std::size_t best = 0;
      for (std::size_t t = 1; t < mu; ++t) {
        if (goal[t] - st.gamma[t] > goal[best] - st.gamma[best]) best = t;
      }
      assign(best);
    }

    for (std::size_t t : chosen) {
      if (st.runs.empty() || st.runs.back().atom != t) st.runs.push_back({t, 0});
      ++st.runs.back().count;
    }

    Rational gamma_sum = 0;
    for (std::size_t t = 0; t < mu; ++t) {
      st.residuals.push_back(st.gamma[t] - goal[t]);
      gamma_sum += st.gamma[t];
      if (!(rational::abs(st.residuals.back()) < step_bound)) {
        throw CertificationFailure("stage " + std::to_string(i) + ": coefficient residual " +
                                   rational::to_string(st.residuals.back()) + " of atom " + std::to_string(t + 1) +
                                   " is not below 2/v");
      }
    }
    if (gamma_sum != st.phi) throw CertificationFailure("stage coefficients do not sum to phi");

    const FinitePointSet& prev = chain.sets[i - 1];
    for (std::size_t rho = 1; rho <= important; ++rho) {
      st.block_bound.push_back(5 * prev.norm(space, rho) + 1);
      st.block_peak.emplace_back(0);
    }
    for (std::size_t j = 0; j < lambda; ++j) {
      const Point& term = st.atoms[chosen[j]];
      theta.push_back(term);
      out.terms.push_back(term);
      tracker.push(term);
      const Point& value = tracker.value(st.order);
      for (std::size_t rho = 1; rho <= important; ++rho) {
        Rational s = space.seminorm(rho, value);
        if (s > st.block_peak[rho - 1]) st.block_peak[rho - 1] = s;
        if (s > st.block_bound[rho - 1]) {
          throw CertificationFailure("stage " + std::to_string(i) + ": in-block iterate at index " +
                                     std::to_string(st.start + j + 1) + " has seminorm " + rational::to_string(s) +
                                     " above " + rational::to_string(st.block_bound[rho - 1]));
        }
      }
    }

    st.end_value = tracker.value(st.order);
    for (std::size_t rho = 1; rho <= important; ++rho) {
      Rational s = space.seminorm(rho, st.end_value - st.target);
      st.end_seminorm_distances.push_back(s);
      if (!(s < epsilon / 3)) {
        throw CertificationFailure("stage " + std::to_string(i) + ": endpoint seminorm distance " +
                                   rational::to_string(s) + " is not below eps/3");
      }
    }
    out.stages.push_back(std::move(st));
  }
  return out;
}

}  // namespace cesaro
