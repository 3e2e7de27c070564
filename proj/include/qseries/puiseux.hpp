#pragma once

#include <map>
#include <optional>
#include <string>

#include "qseries/algebraic.hpp"
#include "qseries/rational.hpp"

namespace qseries {

/// Truncated formal series sum c_e q^e with exact rational exponents and coefficients in Q(sqrt 2).
///
/// The series is known exactly for every exponent below trunc() and unknown at or above it.
/// Zero coefficients are never stored, and every stored exponent is below trunc().
class PuiseuxSeries {
 public:
  using Terms = std::map<Rational, AlgebraicNumber>;

  /// The zero series, known below `trunc`.
  explicit PuiseuxSeries(Rational trunc) : trunc_(std::move(trunc)) {}
  /// Drops zero coefficients and anything at or above `trunc`.
  PuiseuxSeries(Terms terms, Rational trunc);

  /// c*q^e known below `trunc`. Rejects trunc <= e when c != 0.
  static PuiseuxSeries monomial(const AlgebraicNumber& c, const Rational& e, const Rational& trunc);
  static PuiseuxSeries one(const Rational& trunc) { return monomial(AlgebraicNumber(1), Rational(0), trunc); }

  const Terms& terms() const { return terms_; }
  const Rational& trunc() const { return trunc_; }
  bool is_zero() const { return terms_.empty(); }

  /// Least stored exponent; trunc() for the zero series.
  Rational leading_exponent() const;
  /// Coefficient of the least term. Throws DomainError for the zero series.
  const AlgebraicNumber& leading_coefficient() const;
  /// Coefficient of q^e (zero if absent). Throws InsufficientPrecision for e >= trunc().
  AlgebraicNumber coefficient(const Rational& e) const;

  /// Same series with a (not larger) truncation bound.
  PuiseuxSeries truncated(const Rational& trunc) const;

  PuiseuxSeries& operator+=(const PuiseuxSeries& other);
  PuiseuxSeries& operator-=(const PuiseuxSeries& other);

  friend PuiseuxSeries operator+(PuiseuxSeries a, const PuiseuxSeries& b) { return a += b; }
  friend PuiseuxSeries operator-(PuiseuxSeries a, const PuiseuxSeries& b) { return a -= b; }
  friend PuiseuxSeries operator-(const PuiseuxSeries& a);
  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);

  friend bool operator==(const PuiseuxSeries&, const PuiseuxSeries&) = default;

 private:
  Terms terms_;
  Rational trunc_;
};

PuiseuxSeries scale(const PuiseuxSeries& s, const AlgebraicNumber& c);

/// q^e * s.
PuiseuxSeries shift(const PuiseuxSeries& s, const Rational& e);

/// q -> q^r for r > 0: every exponent and the truncation bound are multiplied by r.
PuiseuxSeries substitute(const PuiseuxSeries& s, const Rational& r);

/// Multiplicative inverse. Throws ZeroSeries for the zero series.
PuiseuxSeries inverse(const PuiseuxSeries& s);

/// s^n for any integer n (negative n inverts first).
PuiseuxSeries pow(const PuiseuxSeries& s, long n);

/// The n-th root whose leading term is q^{m/n}. Requires leading coefficient exactly 1
/// (RootLeadingCoefficient otherwise).
PuiseuxSeries nth_root(const PuiseuxSeries& s, long n);

struct Mismatch {
  Rational exponent;
  AlgebraicNumber lhs;
  AlgebraicNumber rhs;
};

struct Comparison {
  bool equal = true;
  std::optional<Mismatch> first_mismatch;
};

/// Compares every coefficient with exponent below `order`. Throws InsufficientPrecision when
/// either series is not known that far.
Comparison compare_to_order(const PuiseuxSeries& a, const PuiseuxSeries& b, const Rational& order);

/// Numeric value of the truncated sum at real q > 0.
double evaluate(const PuiseuxSeries& s, double q);

/// One line per term, "exponent<TAB>a+b*sqrt2", exponents ascending.
std::string dump(const PuiseuxSeries& s);

}  // namespace qseries
