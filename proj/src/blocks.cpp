#include "qseries/blocks.hpp"

#include <string>

#include "qseries/error.hpp"

namespace qseries {

namespace {

void check_k(int k) {
  if (k < 1 || k > 3) throw DomainError("index k must be 1, 2 or 3, got " + std::to_string(k));
}

long parity(const mpz_class& x) { return mpz_odd_p(x.get_mpz_t()) ? 1 : 0; }

}  // namespace

Rational EtaQuotient::leading_exponent() const {
  Rational sum(0);
  for (const auto& f : factors) sum += f.power * f.multiplier;
  return sum / Rational(24);
}

PuiseuxSeries pochhammer(const PochSpec& spec, const Rational& order) {
  if (spec.offset.sign() <= 0 || spec.step.sign() <= 0) {
    throw DomainError("pochhammer needs positive offset and step, got " + spec.offset.str() + ", " + spec.step.str());
  }
  if (order.sign() <= 0) return PuiseuxSeries(order);

  // Every exponent of the product lies on the grid g*Z with g = gcd(offset, step).
  const Rational g = gcd(spec.offset, spec.step);
  const std::size_t n = ceil(order / g).get_ui();
  std::vector<mpz_class> c(n);
  c[0] = 1;
  const int sign = to_int(spec.sign);
  for (Rational e = spec.offset; e < order; e += spec.step) {
    const std::size_t shift = (e / g).to_long();
    for (std::size_t i = n; i-- > shift;) {
      if (sign > 0) {
        c[i] += c[i - shift];
      } else {
        c[i] -= c[i - shift];
      }
    }
  }
  PuiseuxSeries::Terms terms;
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i] != 0) terms.emplace_hint(terms.end(), g * Rational(static_cast<long>(i)), Rational(mpq_class(c[i])));
  }
  return PuiseuxSeries(std::move(terms), order);
}

PuiseuxSeries theta_f_sum(const ThetaSpec& spec, const Rational& order) {
  const Rational width = spec.a + spec.b;
  if (width.sign() <= 0) throw DomainError("theta function f needs a + b > 0");

  // Term j sits at E(j) = a j(j+1)/2 + b j(j-1)/2 = (a+b) j^2/2 + (a-b) j/2, a convex parabola
  // with vertex at v = (b-a) / (2(a+b)). Walking outward from floor(v) in each direction the
  // exponent only grows, so each walk stops at the first j with E(j) >= order.
  const auto exponent = [&](const mpz_class& j) {
    const Rational jr{mpq_class(j)};
    return spec.a * jr * (jr + Rational(1)) / Rational(2) + spec.b * jr * (jr - Rational(1)) / Rational(2);
  };
  const auto coefficient = [&](const mpz_class& j) {
    const mpz_class up = j * (j + 1) / 2;
    const mpz_class down = j * (j - 1) / 2;
    int c = 1;
    if (spec.sign1 == Sign::Minus && parity(up)) c = -c;
    if (spec.sign2 == Sign::Minus && parity(down)) c = -c;
    return c;
  };

  PuiseuxSeries::Terms terms;
  const auto add = [&](const mpz_class& j, const Rational& e) {
    auto [it, inserted] = terms.try_emplace(e, AlgebraicNumber(coefficient(j)));
    if (!inserted) it->second += AlgebraicNumber(coefficient(j));
  };
  const mpz_class start = floor((spec.b - spec.a) / (Rational(2) * width));
  for (mpz_class j = start + 1;; ++j) {
    const Rational e = exponent(j);
    if (e >= order) break;
    add(j, e);
  }
  for (mpz_class j = start;; --j) {
    const Rational e = exponent(j);
    if (e >= order) break;
    add(j, e);
  }
  return PuiseuxSeries(std::move(terms), order);
}

PuiseuxSeries theta_f_prod(const ThetaSpec& spec, const Rational& order) {
  if (spec.a.sign() <= 0 || spec.b.sign() <= 0) {
    throw DomainError("product form of f needs a > 0 and b > 0");
  }
  const Rational base = spec.a + spec.b;
  return pochhammer({spec.sign1, spec.a, base}, order) * pochhammer({spec.sign2, spec.b, base}, order) *
         pochhammer({Sign::Minus, base, base}, order);
}

PuiseuxSeries eta_quotient(const EtaQuotient& quotient, const Rational& order) {
  const Rational lead = quotient.leading_exponent();
  const Rational unit_order = order - lead;
  if (unit_order.sign() <= 0) return PuiseuxSeries(order);

  PuiseuxSeries unit = PuiseuxSeries::one(unit_order);
  for (const auto& f : quotient.factors) {
    if (f.multiplier.sign() <= 0) throw DomainError("eta multiplier must be positive");
    const PuiseuxSeries base = pochhammer({Sign::Minus, f.multiplier, f.multiplier}, unit_order);
    PuiseuxSeries term = pow(base, f.power.numerator().get_si());
    if (!f.power.is_integer()) term = nth_root(term, f.power.denominator().get_si());
    unit = unit * term;
  }
  return shift(unit, lead);
}

AlgebraicNumber two_cos(int k) {
  check_k(k);
  switch (k) {
    case 1:
      return AlgebraicNumber::sqrt2();
    case 2:
      return AlgebraicNumber(0);
    default:
      return -AlgebraicNumber::sqrt2();
  }
}

AlgebraicNumber beta(int k) { return -two_cos(k); }

PuiseuxSeries gamma_k(int k, const Rational& order, const Rational& scale) {
  check_k(k);
  if (scale.sign() <= 0) throw DomainError("scale must be positive");
  const Rational base_order = order / scale;
  if (base_order.sign() <= 0) return PuiseuxSeries(order);

  const std::size_t n = ceil(base_order).get_ui();
  const AlgebraicNumber b = beta(k);
  std::vector<AlgebraicNumber> c(n);
  c[0] = AlgebraicNumber(1);
  for (std::size_t m = 1; m < n; ++m) {
    // multiply by 1 + b q^m + q^{2m}, highest index first
    for (std::size_t i = n; i-- > m;) {
      if (!b.is_zero() && !c[i - m].is_zero()) c[i] += b * c[i - m];
      if (i >= 2 * m && !c[i - 2 * m].is_zero()) c[i] += c[i - 2 * m];
    }
  }
  PuiseuxSeries::Terms terms;
  for (std::size_t i = 0; i < n; ++i) {
    if (!c[i].is_zero()) terms.emplace_hint(terms.end(), Rational(static_cast<long>(i)), c[i]);
  }
  return substitute(PuiseuxSeries(std::move(terms), base_order), scale);
}

SineRatioTable sine_ratio_table(int k, int last) {
  check_k(k);
  SineRatioTable table{k, {}};
  if (last < 0) return table;
  // sin((2j+3)z) = 2cos(2z) sin((2j+1)z) - sin((2j-1)z), with r_{-1} = -1.
  const AlgebraicNumber c = two_cos(k);
  table.values.push_back(AlgebraicNumber(1));
  AlgebraicNumber previous(-1);
  for (int j = 1; j <= last; ++j) {
    AlgebraicNumber next = c * table.values.back() - previous;
    previous = table.values.back();
    table.values.push_back(std::move(next));
  }
  return table;
}

PuiseuxSeries theta1_normalized(int k, const Rational& order) {
  check_k(k);
  int last = -1;
  while (Rational(static_cast<long>(last + 1) * (last + 2) / 2) < order) ++last;
  const SineRatioTable table = sine_ratio_table(k, last);
  PuiseuxSeries::Terms terms;
  for (int j = 0; j <= last; ++j) {
    const AlgebraicNumber& r = table.values[j];
    terms.emplace(Rational(static_cast<long>(j) * (j + 1) / 2), j % 2 == 0 ? r : -r);
  }
  return PuiseuxSeries(std::move(terms), order);
}

PuiseuxSeries sine_ratio_series(int k, const Rational& order) {
  check_k(k);
  int last = -1;
  while (Rational(last + 1) < order) ++last;
  const SineRatioTable table = sine_ratio_table(k, last);
  PuiseuxSeries::Terms terms;
  for (int j = 0; j <= last; ++j) terms.emplace(Rational(j), table.values[j]);
  return PuiseuxSeries(std::move(terms), order);
}

PuiseuxSeries h_series(const Rational& order, const Rational& scale) {
  if (scale.sign() <= 0) throw DomainError("scale must be positive");
  const Rational half(1, 2);
  const Rational unit_order = order / scale - half;
  if (unit_order.sign() <= 0) return PuiseuxSeries(order);
  const PuiseuxSeries num = theta_f_prod({Sign::Minus, Rational(1), Sign::Minus, Rational(7)}, unit_order);
  const PuiseuxSeries den = theta_f_prod({Sign::Minus, Rational(3), Sign::Minus, Rational(5)}, unit_order);
  return substitute(shift(num * inverse(den), half), scale);
}

PuiseuxSeries i_series(const Rational& order, const Rational& scale) {
  if (scale.sign() <= 0) throw DomainError("scale must be positive");
  const Rational base_order = order / scale;
  if (base_order.sign() <= 0) return PuiseuxSeries(order);
  const PuiseuxSeries num = theta_f_prod({Sign::Minus, Rational(1), Sign::Minus, Rational(3)}, base_order);
  const PuiseuxSeries den = theta_f_prod({Sign::Minus, Rational(2), Sign::Minus, Rational(2)}, base_order);
  return substitute(num * inverse(den), scale);
}

PuiseuxSeries phi(const Rational& scale, const Rational& order) {
  if (scale.sign() <= 0) throw DomainError("scale must be positive");
  return theta_f_sum({Sign::Plus, scale, Sign::Plus, scale}, order);
}

PuiseuxSeries psi(const Rational& scale, const Rational& order) {
  if (scale.sign() <= 0) throw DomainError("scale must be positive");
  return theta_f_sum({Sign::Plus, scale, Sign::Plus, Rational(3) * scale}, order);
}

}  // namespace qseries
