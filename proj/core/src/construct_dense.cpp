#include "cesaro/construct.hpp"
#include "cesaro/errors.hpp"

namespace cesaro {

Growth unit_growth() {
  return [](std::size_t) { return Integer(1); };
}

Growth linear_growth() {
  return [](std::size_t n) { return Integer(static_cast<unsigned long>(n)); };
}

Growth power_growth(unsigned long base) {
  return [base](std::size_t n) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, static_cast<unsigned long>(n));
    return out;
  };
}

Growth tower_growth() {
  return [](std::size_t n) {
    Integer out;
    unsigned long e = static_cast<unsigned long>(n) * n * n;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(n), e);
    return out;
  };
}

std::vector<Rational> signed_calkin_wilf(std::size_t count) {
  std::vector<Rational> out;
  out.reserve(count);
  if (count == 0) return out;
  out.emplace_back(0);
  Rational q = 1;
  while (out.size() < count) {
    out.push_back(q);
    if (out.size() < count) out.push_back(-q);
    // next Calkin-Wilf value: 1 / (2 floor(q) - q + 1)
    Rational f(rational::floor(q));
    q = 1 / (2 * f - q + 1);
  }
  return out;
}

DenseSequence::DenseSequence(std::vector<Rational> enumeration, Growth growth)
    : enumeration_(std::move(enumeration)), growth_(std::move(growth)) {
  if (enumeration_.empty()) throw PreconditionError("dense sequence needs a nonempty enumeration");
  for (std::size_t i = 0; i < enumeration_.size(); ++i) {
    for (std::size_t j = i + 1; j < enumeration_.size(); ++j) {
      if (enumeration_[i] == enumeration_[j]) {
        throw PreconditionError("enumeration repeats " + rational::to_string(enumeration_[i]));
      }
    }
  }
  Integer previous = 0;
  for (std::size_t j = 1; j <= enumeration_.size() && j <= 8; ++j) {
    Integer g = growth_(j);
    if (g < 1 || g < previous) throw PreconditionError("growth must be nondecreasing and >= 1");
    previous = g;
  }
}

SeqPrefix DenseSequence::prefix(std::size_t length) const {
  SeqPrefix out;
  out.reserve(length);
  std::size_t block = 0;
  while (out.size() < length) {
    if (block >= enumeration_.size()) {
      throw PreconditionError("enumeration exhausted after " + std::to_string(out.size()) + " terms");
    }
    Integer g = growth_(block + 1);
    Integer room = static_cast<unsigned long>(length - out.size());
    std::size_t take = (g < room ? g : room).get_ui();
    for (std::size_t r = 0; r < take; ++r) out.push_back(Point{enumeration_[block]});
    ++block;
  }
  return out;
}

std::pair<std::size_t, Rational> DenseSequence::block_of(std::size_t n) const {
  if (n == 0) throw PreconditionError("terms are indexed from 1");
  Integer seen = 0;
  for (std::size_t block = 0; block < enumeration_.size(); ++block) {
    seen += growth_(block + 1);
    if (seen >= static_cast<unsigned long>(n)) return {block + 1, enumeration_[block]};
  }
  throw PreconditionError("term " + std::to_string(n) + " lies past the enumeration");
}

}  // namespace cesaro
