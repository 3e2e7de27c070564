#pragma once

#include <vector>

#include "qseries/puiseux.hpp"
#include "qseries/rational.hpp"

namespace qseries {

/// Weight w(m) applied to the m-th term of a Lambert sum.
struct LambertWeight {
  enum class Kind { Unit, Linear, Legendre };
  Kind kind = Kind::Unit;
  long prime = 0;  // only for Legendre

  static LambertWeight unit() { return {}; }
  static LambertWeight linear() { return {Kind::Linear, 0}; }
  static LambertWeight legendre(long p) { return {Kind::Legendre, p}; }
  friend bool operator==(const LambertWeight&, const LambertWeight&) = default;
};

struct LambertNumerator {
  int coefficient = 1;  // +1 or -1
  long exponent = 1;
  friend bool operator==(const LambertNumerator&, const LambertNumerator&) = default;
};

/// sum over m >= 1, m = residue (mod modulus) of w(m) * (sum_i c_i q^{a_i m}) / (1 - q^{b m}).
struct LambertSpec {
  long modulus = 1;
  long residue = 0;
  std::vector<LambertNumerator> numerators;
  long denom_exponent = 1;
  LambertWeight weight;
  friend bool operator==(const LambertSpec&, const LambertSpec&) = default;
};

/// Ramanujan's 1psi1 sum specialized to base q^base, x = q^x_exponent, z = q^z_exponent.
struct BilateralSpec {
  Rational base;
  Rational x_exponent;
  Rational z_exponent;
  friend bool operator==(const BilateralSpec&, const BilateralSpec&) = default;
};

/// (m | p) by Euler's criterion. Throws DomainError unless p is an odd prime.
int legendre_symbol(long m, long p);

PuiseuxSeries lambert_sum(const LambertSpec& spec, const Rational& order);

/// The single term z^j / (1 - x q^{base j}) of the bilateral sum as a series.
PuiseuxSeries bilateral_term(const BilateralSpec& spec, long j, const Rational& order);

/// sum_j z^j / (1 - x q^{base j}); needs 0 < x_exponent < base and 0 < z_exponent < base.
PuiseuxSeries bilateral_1psi1_lhs(const BilateralSpec& spec, const Rational& order);

/// (xz, Q/xz, Q, Q; Q)_inf / (x, Q/x, z, Q/z; Q)_inf with Q = q^base; every offset must be positive.
PuiseuxSeries bilateral_1psi1_rhs(const BilateralSpec& spec, const Rational& order);

}  // namespace qseries
