#pragma once

#include <vector>

#include "qseries/algebraic.hpp"
#include "qseries/puiseux.hpp"
#include "qseries/rational.hpp"

namespace qseries {

enum class Sign : int { Minus = -1, Plus = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign operator-(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline Sign operator*(Sign a, Sign b) { return a == b ? Sign::Plus : Sign::Minus; }

/// Infinite product prod_{j>=0} (1 + sign*q^{offset + j*step}).
///
/// `sign` is the operator inside each factor, so {Minus, a, b} is (q^a; q^b)_inf and
/// {Plus, a, b} is (-q^a; q^b)_inf.
struct PochSpec {
  Sign sign = Sign::Minus;
  Rational offset;
  Rational step;
  friend bool operator==(const PochSpec&, const PochSpec&) = default;
};

/// Ramanujan's theta function f(sign1*q^a, sign2*q^b).
struct ThetaSpec {
  Sign sign1 = Sign::Plus;
  Rational a;
  Sign sign2 = Sign::Plus;
  Rational b;
  friend bool operator==(const ThetaSpec&, const ThetaSpec&) = default;
};

/// One factor eta(multiplier * tau)^power.
struct EtaFactor {
  Rational multiplier;
  Rational power;
  friend bool operator==(const EtaFactor&, const EtaFactor&) = default;
};

struct EtaQuotient {
  std::vector<EtaFactor> factors;
  /// sum of power*multiplier/24
  Rational leading_exponent() const;
  friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;
};

/// r_j = sin((2j+1) k pi/8) / sin(k pi/8) for j = 0..J, exact in Q(sqrt 2).
struct SineRatioTable {
  int k = 1;
  std::vector<AlgebraicNumber> values;
};

PuiseuxSeries pochhammer(const PochSpec& spec, const Rational& order);

/// Bilateral sum form of f.
PuiseuxSeries theta_f_sum(const ThetaSpec& spec, const Rational& order);
/// Triple product form of f; needs a > 0 and b > 0.
PuiseuxSeries theta_f_prod(const ThetaSpec& spec, const Rational& order);

/// prod of eta(m tau)^p realized as q^{m/24} (q^m; q^m)_inf raised to p.
PuiseuxSeries eta_quotient(const EtaQuotient& quotient, const Rational& order);

/// 2 cos(2 k pi / 8) for k = 1, 2, 3; equals -beta_k.
AlgebraicNumber two_cos(int k);
/// beta_k = -2 cos(2 k pi / 8): -sqrt2, 0, sqrt2.
AlgebraicNumber beta(int k);

/// Gamma_k(q^scale) = prod_{n>=1} (1 + beta_k q^{n scale} + q^{2 n scale}).
PuiseuxSeries gamma_k(int k, const Rational& order, const Rational& scale = Rational(1));

/// Entries r_0..r_last via the three-term recurrence.
SineRatioTable sine_ratio_table(int k, int last);

/// theta_1(k pi/8 | tau) / (2 q^{1/8} sin(k pi/8)) = sum_{j>=0} (-1)^j r_j q^{j(j+1)/2}.
PuiseuxSeries theta1_normalized(int k, const Rational& order);

/// Generating series sum_{j>=0} r_j q^j of the sine ratios.
PuiseuxSeries sine_ratio_series(int k, const Rational& order);

/// Goellnitz-Gordon continued fraction h(q^scale) = q^{scale/2} f(-q,-q^7)/f(-q^3,-q^5).
PuiseuxSeries h_series(const Rational& order, const Rational& scale = Rational(1));
/// Order-four continued fraction i(q^scale) = f(-q,-q^3)/f(-q^2,-q^2).
PuiseuxSeries i_series(const Rational& order, const Rational& scale = Rational(1));

PuiseuxSeries phi(const Rational& scale, const Rational& order);
PuiseuxSeries psi(const Rational& scale, const Rational& order);

}  // namespace qseries
