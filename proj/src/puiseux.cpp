#include "qseries/puiseux.hpp"

#include <cmath>
#include <sstream>
#include <utility>
#include <vector>

#include "qseries/error.hpp"

namespace qseries {

namespace {

// A unit series 1 + (terms with positive exponents) laid out densely on the grid g*Z.
struct DenseUnit {
  Rational step;
  Rational trunc;
  std::vector<AlgebraicNumber> coeffs;             // coeffs[i] multiplies q^{i*step}
  std::vector<std::size_t> nonzero;                // indices i >= 1 with coeffs[i] != 0
};

DenseUnit to_dense(const PuiseuxSeries& unit) {
  DenseUnit d;
  d.trunc = unit.trunc();
  Rational step(0);
  for (const auto& [e, c] : unit.terms()) {
    if (!e.is_zero()) step = gcd(step, e);
  }
  if (step.is_zero()) step = unit.trunc();
  d.step = step;
  const mpz_class n = ceil(unit.trunc() / step);
  d.coeffs.assign(n.get_ui(), AlgebraicNumber());
  for (const auto& [e, c] : unit.terms()) {
    const std::size_t i = (e / step).to_long();
    d.coeffs[i] = c;
    if (i > 0) d.nonzero.push_back(i);
  }
  return d;
}

PuiseuxSeries from_dense(const Rational& step, const std::vector<AlgebraicNumber>& coeffs, const Rational& trunc) {
  PuiseuxSeries::Terms terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) terms.emplace_hint(terms.end(), step * Rational(static_cast<long>(i)), coeffs[i]);
  }
  return PuiseuxSeries(std::move(terms), trunc);
}

}  // namespace

PuiseuxSeries::PuiseuxSeries(Terms terms, Rational trunc) : terms_(std::move(terms)), trunc_(std::move(trunc)) {
  std::erase_if(terms_, [this](const auto& kv) { return kv.second.is_zero() || kv.first >= trunc_; });
}

PuiseuxSeries PuiseuxSeries::monomial(const AlgebraicNumber& c, const Rational& e, const Rational& trunc) {
  if (c.is_zero()) return PuiseuxSeries(trunc);
  if (trunc <= e) {
    throw DomainError("monomial exponent " + e.str() + " is not below truncation " + trunc.str());
  }
  return PuiseuxSeries(Terms{{e, c}}, trunc);
}

Rational PuiseuxSeries::leading_exponent() const { return terms_.empty() ? trunc_ : terms_.begin()->first; }

const AlgebraicNumber& PuiseuxSeries::leading_coefficient() const {
  if (terms_.empty()) throw DomainError("zero series has no leading coefficient");
  return terms_.begin()->second;
}

AlgebraicNumber PuiseuxSeries::coefficient(const Rational& e) const {
  if (e >= trunc_) {
    throw InsufficientPrecision("coefficient of q^" + e.str() + " requested, series known below q^" + trunc_.str());
  }
  auto it = terms_.find(e);
  return it == terms_.end() ? AlgebraicNumber() : it->second;
}

PuiseuxSeries PuiseuxSeries::truncated(const Rational& trunc) const {
  return PuiseuxSeries(terms_, min(trunc, trunc_));
}

PuiseuxSeries& PuiseuxSeries::operator+=(const PuiseuxSeries& other) {
  trunc_ = min(trunc_, other.trunc_);
  for (const auto& [e, c] : other.terms_) {
    if (e >= trunc_) break;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) it->second += c;
  }
  std::erase_if(terms_, [this](const auto& kv) { return kv.second.is_zero() || kv.first >= trunc_; });
  return *this;
}

PuiseuxSeries& PuiseuxSeries::operator-=(const PuiseuxSeries& other) { return *this += -other; }

PuiseuxSeries operator-(const PuiseuxSeries& a) {
  PuiseuxSeries out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  const Rational trunc = min(a.trunc_ + b.leading_exponent(), b.trunc_ + a.leading_exponent());
  PuiseuxSeries::Terms out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Rational e = ea + eb;
      if (e >= trunc) break;
      auto [it, inserted] = out.try_emplace(std::move(e), ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  return PuiseuxSeries(std::move(out), trunc);
}

PuiseuxSeries scale(const PuiseuxSeries& s, const AlgebraicNumber& c) {
  PuiseuxSeries::Terms out;
  for (const auto& [e, v] : s.terms()) out.emplace_hint(out.end(), e, v * c);
  return PuiseuxSeries(std::move(out), s.trunc());
}

PuiseuxSeries shift(const PuiseuxSeries& s, const Rational& e) {
  PuiseuxSeries::Terms out;
  for (const auto& [k, v] : s.terms()) out.emplace_hint(out.end(), k + e, v);
  return PuiseuxSeries(std::move(out), s.trunc() + e);
}

PuiseuxSeries substitute(const PuiseuxSeries& s, const Rational& r) {
  if (r.sign() <= 0) throw DomainError("substitution q -> q^r needs r > 0, got " + r.str());
  PuiseuxSeries::Terms out;
  for (const auto& [k, v] : s.terms()) out.emplace_hint(out.end(), k * r, v);
  return PuiseuxSeries(std::move(out), s.trunc() * r);
}

PuiseuxSeries inverse(const PuiseuxSeries& s) {
  if (s.is_zero()) throw ZeroSeries("inverse of the zero series (known below q^" + s.trunc().str() + ")");
  const Rational m = s.leading_exponent();
  const AlgebraicNumber c_inv = inverse(s.leading_coefficient());
  const PuiseuxSeries unit = scale(shift(s, -m), c_inv);
  const DenseUnit u = to_dense(unit);

  // r_0 = 1, r_k = -sum_{j>=1} u_j r_{k-j}
  std::vector<AlgebraicNumber> r(u.coeffs.size());
  r[0] = AlgebraicNumber(1);
  for (std::size_t k = 1; k < r.size(); ++k) {
    AlgebraicNumber acc;
    for (std::size_t j : u.nonzero) {
      if (j > k) break;
      if (!r[k - j].is_zero()) acc += u.coeffs[j] * r[k - j];
    }
    r[k] = -acc;
  }
  return shift(scale(from_dense(u.step, r, u.trunc), c_inv), -m);
}

PuiseuxSeries pow(const PuiseuxSeries& s, long n) {
  if (n < 0) return pow(inverse(s), -n);
  // Exact 1, known as far as the base determines anything.
  PuiseuxSeries result = PuiseuxSeries::one(max(s.trunc(), Rational(1)) + abs(s.leading_exponent()) * Rational(n));
  PuiseuxSeries base = s;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

PuiseuxSeries nth_root(const PuiseuxSeries& s, long n) {
  if (n <= 0) throw DomainError("root degree must be positive");
  if (s.is_zero()) throw ZeroSeries("root of the zero series (known below q^" + s.trunc().str() + ")");
  if (!s.leading_coefficient().is_one()) {
    throw RootLeadingCoefficient("root needs leading coefficient 1, got " + s.leading_coefficient().str());
  }
  if (n == 1) return s;
  const Rational m = s.leading_exponent();
  const DenseUnit u = to_dense(shift(s, -m));

  // r = u^alpha with alpha = 1/n:  k r_k = sum_{j>=1} (alpha j - (k - j)) u_j r_{k-j}
  const Rational alpha(1, n);
  std::vector<AlgebraicNumber> r(u.coeffs.size());
  r[0] = AlgebraicNumber(1);
  for (std::size_t k = 1; k < r.size(); ++k) {
    AlgebraicNumber acc;
    for (std::size_t j : u.nonzero) {
      if (j > k) break;
      if (r[k - j].is_zero()) continue;
      const Rational weight = alpha * Rational(static_cast<long>(j)) - Rational(static_cast<long>(k - j));
      acc += AlgebraicNumber(weight) * u.coeffs[j] * r[k - j];
    }
    r[k] = acc * AlgebraicNumber(Rational(1, static_cast<long>(k)));
  }
  return shift(from_dense(u.step, r, u.trunc), m / Rational(n));
}

Comparison compare_to_order(const PuiseuxSeries& a, const PuiseuxSeries& b, const Rational& order) {
  if (a.trunc() < order || b.trunc() < order) {
    throw InsufficientPrecision("comparison to q^" + order.str() + " needs both sides known that far (have q^" +
                                a.trunc().str() + " and q^" + b.trunc().str() + ")");
  }
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  const auto ea = a.terms().end();
  const auto eb = b.terms().end();
  while (ia != ea || ib != eb) {
    const bool take_a = ib == eb || (ia != ea && ia->first <= ib->first);
    const bool take_b = ia == ea || (ib != eb && ib->first <= ia->first);
    const Rational& e = take_a ? ia->first : ib->first;
    if (e >= order) break;
    const AlgebraicNumber ca = take_a ? ia->second : AlgebraicNumber();
    const AlgebraicNumber cb = take_b ? ib->second : AlgebraicNumber();
    if (!(ca == cb)) return {false, Mismatch{e, ca, cb}};
    if (take_a) ++ia;
    if (take_b) ++ib;
  }
  return {};
}

double evaluate(const PuiseuxSeries& s, double q) {
  double sum = 0.0;
  for (const auto& [e, c] : s.terms()) sum += c.to_double() * std::pow(q, e.to_double());
  return sum;
}

std::string dump(const PuiseuxSeries& s) {
  std::ostringstream out;
  for (const auto& [e, c] : s.terms()) out << e.str() << '\t' << c.str() << '\n';
  return out.str();
}

}  // namespace qseries
