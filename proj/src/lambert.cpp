#include "qseries/lambert.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "qseries/blocks.hpp"
#include "qseries/error.hpp"

namespace qseries {

namespace {

bool is_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

long power_mod(long base, long exp, long mod) {
  long result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

long weight_of(const LambertWeight& w, long m) {
  switch (w.kind) {
    case LambertWeight::Kind::Unit:
      return 1;
    case LambertWeight::Kind::Linear:
      return m;
    case LambertWeight::Kind::Legendre:
      return legendre_symbol(m, w.prime);
  }
  return 0;
}

void check_bilateral(const BilateralSpec& spec) {
  if (spec.base.sign() <= 0) throw DomainError("1psi1 base exponent must be positive");
  if (spec.x_exponent.sign() <= 0 || spec.x_exponent >= spec.base) {
    throw DomainError("1psi1 needs 0 < x exponent < base");
  }
  if (spec.z_exponent.sign() <= 0 || spec.z_exponent >= spec.base) {
    throw DomainError("1psi1 needs 0 < z exponent < base (the |q| < |z| < 1 window)");
  }
}

// Adds sign * sum_{t>=0} q^{start + step*t} for exponents below order.
void add_geometric(PuiseuxSeries::Terms& terms, int sign, Rational start, const Rational& step, const Rational& order) {
  for (; start < order; start += step) {
    auto [it, inserted] = terms.try_emplace(start, AlgebraicNumber(sign));
    if (!inserted) it->second += AlgebraicNumber(sign);
  }
}

void add_term(PuiseuxSeries::Terms& terms, const BilateralSpec& spec, long j, const Rational& order) {
  const Rational jr(j);
  if (j >= 0) {
    // z^j / (1 - x q^{s j}) = sum_t q^{j beta + (alpha + s j) t}
    add_geometric(terms, 1, jr * spec.z_exponent, spec.x_exponent + spec.base * jr, order);
  } else {
    // j = -j':  q^{-j' beta} / (1 - q^{-(s j' - alpha)}) = -q^{-j' beta} q^{s j' - alpha} sum_t q^{(s j' - alpha) t}
    const Rational step = spec.base * (-jr) - spec.x_exponent;
    add_geometric(terms, -1, jr * spec.z_exponent + step, step, order);
  }
}

}  // namespace

int legendre_symbol(long m, long p) {
  if (!is_odd_prime(p)) throw DomainError("Legendre symbol needs an odd prime, got " + std::to_string(p));
  const long r = ((m % p) + p) % p;
  if (r == 0) return 0;
  return power_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

PuiseuxSeries lambert_sum(const LambertSpec& spec, const Rational& order) {
  if (spec.modulus < 1) throw DomainError("Lambert modulus must be positive");
  if (spec.denom_exponent < 1) throw DomainError("Lambert denominator exponent must be positive");
  if (spec.numerators.empty()) throw DomainError("Lambert sum needs at least one numerator");
  long smallest = spec.numerators.front().exponent;
  for (const auto& n : spec.numerators) {
    if (n.exponent < 1) throw DomainError("Lambert numerator exponents must be positive");
    if (n.coefficient != 1 && n.coefficient != -1) throw DomainError("Lambert numerator coefficients must be +-1");
    smallest = std::min(smallest, n.exponent);
  }
  if (spec.weight.kind == LambertWeight::Kind::Legendre) legendre_symbol(1, spec.weight.prime);

  const long residue = ((spec.residue % spec.modulus) + spec.modulus) % spec.modulus;
  std::map<long, mpz_class> coeffs;
  for (long m = 1; Rational(smallest * m) < order; ++m) {
    if (m % spec.modulus != residue) continue;
    const long w = weight_of(spec.weight, m);
    if (w == 0) continue;
    const long step = spec.denom_exponent * m;
    for (const auto& n : spec.numerators) {
      for (long e = n.exponent * m; Rational(e) < order; e += step) coeffs[e] += w * n.coefficient;
    }
  }
  PuiseuxSeries::Terms terms;
  for (const auto& [e, c] : coeffs) {
    if (c != 0) terms.emplace_hint(terms.end(), Rational(e), Rational(mpq_class(c)));
  }
  return PuiseuxSeries(std::move(terms), order);
}

PuiseuxSeries bilateral_term(const BilateralSpec& spec, long j, const Rational& order) {
  check_bilateral(spec);
  PuiseuxSeries::Terms terms;
  add_term(terms, spec, j, order);
  return PuiseuxSeries(std::move(terms), order);
}

PuiseuxSeries bilateral_1psi1_lhs(const BilateralSpec& spec, const Rational& order) {
  check_bilateral(spec);
  PuiseuxSeries::Terms terms;
  // j >= 0 starts at j*beta; j = -j' <= -1 starts at j'(s - beta) - alpha. Both grow with |j|.
  for (long j = 0; Rational(j) * spec.z_exponent < order; ++j) add_term(terms, spec, j, order);
  for (long jp = 1; Rational(jp) * (spec.base - spec.z_exponent) - spec.x_exponent < order; ++jp) {
    add_term(terms, spec, -jp, order);
  }
  return PuiseuxSeries(std::move(terms), order);
}

PuiseuxSeries bilateral_1psi1_rhs(const BilateralSpec& spec, const Rational& order) {
  check_bilateral(spec);
  const Rational& s = spec.base;
  const Rational& x = spec.x_exponent;
  const Rational& z = spec.z_exponent;
  const auto poch = [&](const Rational& offset) {
    if (offset.sign() <= 0) throw DomainError("1psi1 product offset " + offset.str() + " is not positive");
    return pochhammer({Sign::Minus, offset, s}, order);
  };
  const PuiseuxSeries top = poch(x + z) * poch(s - x - z) * poch(s) * poch(s);
  const PuiseuxSeries bottom = poch(x) * poch(s - x) * poch(z) * poch(s - z);
  return top * inverse(bottom);
}

}  // namespace qseries
