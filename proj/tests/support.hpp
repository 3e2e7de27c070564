#pragma once

#include <random>
#include <vector>

#include "qseries/algebraic.hpp"
#include "qseries/puiseux.hpp"

namespace qseries::testing {

inline AlgebraicNumber alg(long a, long b = 0) { return {Rational(a), Rational(b)}; }

/// sum coeffs[i] q^i, known below `trunc`.
inline PuiseuxSeries poly(const std::vector<long>& coeffs, const Rational& trunc) {
  PuiseuxSeries::Terms t;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) t.emplace(Rational(static_cast<long>(i)), AlgebraicNumber(coeffs[i]));
  }
  return {t, trunc};
}

inline Rational random_rational(std::mt19937& gen, long bound = 20) {
  const long num = static_cast<long>(gen() % (2 * bound + 1)) - bound;
  const long den = static_cast<long>(gen() % 7) + 1;
  return {num, den};
}

inline AlgebraicNumber random_alg(std::mt19937& gen) { return {random_rational(gen), random_rational(gen)}; }

/// Series on the grid step*Z starting at `lead`, `count` terms, truncated after the last.
inline PuiseuxSeries random_series(std::mt19937& gen, const Rational& lead, const Rational& step, int count,
                                   bool unit_lead = false) {
  PuiseuxSeries::Terms t;
  for (int i = 0; i < count; ++i) {
    const AlgebraicNumber c = i == 0 && unit_lead ? AlgebraicNumber(1) : random_alg(gen);
    if (!c.is_zero()) t.emplace(lead + step * Rational(i), c);
  }
  if (!unit_lead && t.find(lead) == t.end()) t.emplace(lead, AlgebraicNumber(1));
  return {t, lead + step * Rational(count)};
}

}  // namespace qseries::testing
