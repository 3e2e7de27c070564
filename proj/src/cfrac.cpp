#include "qseries/cfrac.hpp"

#include <cmath>

#include "qseries/blocks.hpp"
#include "qseries/error.hpp"
#include "qseries/puiseux.hpp"

namespace qseries {

namespace {

void require_unit_interval(double q) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("continued fraction needs 0 < q < 1");
}

}  // namespace

CFEvaluation evaluate_cf(double b0, const std::function<double(int)>& partial_numerator,
                         const std::function<double(int)>& partial_denominator, double tol, int max_depth,
                         const std::function<double(double)>& transform) {
  const auto apply = [&](double f) { return transform ? transform(f) : f; };
  CFEvaluation out;
  double f = b0;
  if (std::abs(f) < kTinyFloor) {
    f = kTinyFloor;
    out.floored = true;
  }
  double c = f;
  double d = 0.0;
  double previous = apply(f);
  out.value = previous;
  out.residual = INFINITY;
  for (int n = 1; n <= max_depth; ++n) {
    const double a = partial_numerator(n);
    const double b = partial_denominator(n);
    d = b + a * d;
    if (std::abs(d) < kTinyFloor) {
      d = kTinyFloor;
      out.floored = true;
    }
    c = b + a / c;
    if (std::abs(c) < kTinyFloor) {
      c = kTinyFloor;
      out.floored = true;
    }
    d = 1.0 / d;
    f *= c * d;
    const double value = apply(f);
    out.value = value;
    out.residual = std::abs(value - previous);
    out.depth_used = n;
    previous = value;
    if (out.residual <= tol) {
      out.converged = true;
      break;
    }
  }
  return out;
}

CFEvaluation eval_general_cf(double k, double l, double q, double tol, int max_depth) {
  if (!(std::abs(k * l) < 1.0) || !(std::abs(q) < 1.0)) throw DomainError("general continued fraction needs |kl| < 1 and |q| < 1");
  const double head = 1.0 - k * l;
  const auto numerator = [=](int n) {
    const double p = std::pow(q, 2 * n - 1);
    return (k - l * p) * (l - k * p);
  };
  const auto denominator = [=](int n) { return head * (std::pow(q, 2 * n) + 1.0); };
  return evaluate_cf(head, numerator, denominator, tol, max_depth, [](double f) { return 1.0 / f; });
}

CFEvaluation eval_h_cf(double q, double tol, int max_depth) {
  require_unit_interval(q);
  const double root = std::sqrt(q);
  return evaluate_cf(
      1.0 + q, [=](int n) { return std::pow(q, 2 * n); }, [=](int n) { return 1.0 + std::pow(q, 2 * n + 1); }, tol,
      max_depth, [=](double f) { return root / f; });
}

CFEvaluation eval_i_cf(double q, double tol, int max_depth) {
  require_unit_interval(q);
  // Numerators run q, q^2+q, q^3, q^4+q^2, ...: q^n, plus q^{n/2} when n is even.
  const auto numerator = [=](int n) { return std::pow(q, n) + (n % 2 == 0 ? std::pow(q, n / 2) : 0.0); };
  return evaluate_cf(
      1.0, numerator, [](int) { return 1.0; }, tol, max_depth, [](double f) { return 1.0 / f; });
}

double general_cf_product(double k, double l, double q, int factors) {
  const auto poch = [&](double a) {
    double p = 1.0;
    double qj = 1.0;
    for (int j = 0; j < factors; ++j) {
      p *= 1.0 - a * qj;
      qj *= q * q * q * q;
    }
    return p;
  };
  const double q3 = q * q * q;
  return poch(k * k * q3) * poch(l * l * q3) / (poch(k * k * q) * poch(l * l * q));
}

double h_series_value(double q, int order) { return evaluate(h_series(Rational(order)), q); }

double i_series_value(double q, int order) { return evaluate(i_series(Rational(order)), q); }

}  // namespace qseries
