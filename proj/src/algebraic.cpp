#include "qseries/algebraic.hpp"

#include <cmath>
#include <numbers>

#include "qseries/error.hpp"

namespace qseries {

namespace {

constexpr std::string_view kSqrt2Suffix = "*sqrt2";

std::string trim(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c != ' ' && c != '\t') out.push_back(c);
  }
  return out;
}

}  // namespace

AlgebraicNumber AlgebraicNumber::parse(std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) throw ParseError("empty algebraic number", 1, 1);

  if (s.size() < kSqrt2Suffix.size() || s.compare(s.size() - kSqrt2Suffix.size(), kSqrt2Suffix.size(), kSqrt2Suffix) != 0) {
    return AlgebraicNumber(Rational::parse(s));
  }

  // Split "a(+|-)b*sqrt2" at the last sign that is not the leading character.
  const std::string_view body = std::string_view(s).substr(0, s.size() - kSqrt2Suffix.size());
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != '+' && body[i - 1] != '-') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) {
    // Pure irrational part, e.g. "3*sqrt2".
    return {Rational(0), Rational::parse(body)};
  }
  Rational a = Rational::parse(body.substr(0, split));
  std::string_view b_text = body.substr(split);
  // Accept "a+-b*sqrt2" as well as "a-b*sqrt2".
  if (b_text.size() > 1 && b_text[0] == '+' && b_text[1] == '-') b_text.remove_prefix(1);
  return {a, Rational::parse(b_text)};
}

std::string AlgebraicNumber::str() const {
  std::string out = rat_.str();
  if (irr_.sign() < 0) {
    out += "-" + (-irr_).str();
  } else {
    out += "+" + irr_.str();
  }
  out += kSqrt2Suffix;
  return out;
}

double AlgebraicNumber::to_double() const { return rat_.to_double() + irr_.to_double() * std::numbers::sqrt2; }

AlgebraicNumber& AlgebraicNumber::operator+=(const AlgebraicNumber& other) {
  rat_ += other.rat_;
  irr_ += other.irr_;
  return *this;
}

AlgebraicNumber& AlgebraicNumber::operator-=(const AlgebraicNumber& other) {
  rat_ -= other.rat_;
  irr_ -= other.irr_;
  return *this;
}

AlgebraicNumber& AlgebraicNumber::operator*=(const AlgebraicNumber& other) {
  // (a + b r)(c + d r) = (ac + 2bd) + (ad + bc) r
  Rational a = rat_ * other.rat_ + Rational(2) * irr_ * other.irr_;
  Rational b = rat_ * other.irr_ + irr_ * other.rat_;
  rat_ = std::move(a);
  irr_ = std::move(b);
  return *this;
}

AlgebraicNumber inverse(const AlgebraicNumber& x) {
  const Rational n = x.norm();
  if (n.is_zero()) throw DivisionByZero();
  return {x.rat() / n, -x.irr() / n};
}

AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a * inverse(b); }

}  // namespace qseries
