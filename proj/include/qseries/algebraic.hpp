#pragma once

#include <string>
#include <string_view>

#include "qseries/rational.hpp"

namespace qseries {

/// Element a + b*sqrt(2) of the real quadratic field Q(sqrt 2).
///
/// Every coefficient that appears in the identities (beta_1 = -sqrt 2, beta_3 = sqrt 2,
/// the 2*sqrt 2 prefactors, sine-ratio tables) lives here. The representation is unique, so
/// equality is componentwise.
class AlgebraicNumber {
 public:
  AlgebraicNumber() = default;
  AlgebraicNumber(long value) : rat_(value) {}  // NOLINT(google-explicit-constructor)
  AlgebraicNumber(Rational rat) : rat_(std::move(rat)) {}  // NOLINT(google-explicit-constructor)
  AlgebraicNumber(Rational rat, Rational irr) : rat_(std::move(rat)), irr_(std::move(irr)) {}

  static AlgebraicNumber sqrt2() { return {Rational(0), Rational(1)}; }

  /// Parses the rendering produced by str(): "a+b*sqrt2", "a-b*sqrt2", or a bare rational.
  static AlgebraicNumber parse(std::string_view text);

  /// Renders as "a+b*sqrt2" (or "a-b*sqrt2"), both parts always present.
  std::string str() const;

  const Rational& rat() const { return rat_; }
  const Rational& irr() const { return irr_; }

  bool is_zero() const { return rat_.is_zero() && irr_.is_zero(); }
  bool is_one() const { return irr_.is_zero() && rat_ == Rational(1); }
  bool is_rational() const { return irr_.is_zero(); }

  /// a^2 - 2 b^2; zero only for the zero element.
  Rational norm() const { return rat_ * rat_ - Rational(2) * irr_ * irr_; }
  AlgebraicNumber conjugate() const { return {rat_, -irr_}; }
  double to_double() const;

  AlgebraicNumber& operator+=(const AlgebraicNumber& other);
  AlgebraicNumber& operator-=(const AlgebraicNumber& other);
  AlgebraicNumber& operator*=(const AlgebraicNumber& other);

  friend AlgebraicNumber operator+(AlgebraicNumber a, const AlgebraicNumber& b) { return a += b; }
  friend AlgebraicNumber operator-(AlgebraicNumber a, const AlgebraicNumber& b) { return a -= b; }
  friend AlgebraicNumber operator*(AlgebraicNumber a, const AlgebraicNumber& b) { return a *= b; }
  friend AlgebraicNumber operator-(const AlgebraicNumber& a) { return {-a.rat_, -a.irr_}; }
  friend bool operator==(const AlgebraicNumber&, const AlgebraicNumber&) = default;

 private:
  Rational rat_;
  Rational irr_;
};

/// Throws DivisionByZero for x = 0.
AlgebraicNumber inverse(const AlgebraicNumber& x);
AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b);

}  // namespace qseries
