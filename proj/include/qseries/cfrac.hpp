#pragma once

#include <functional>

namespace qseries {

struct CFEvaluation {
  double value = 0.0;
  int depth_used = 0;
  bool converged = false;
  /// |difference of the last two convergents|
  double residual = 0.0;
  /// A vanishing denominator was replaced by kTinyFloor during evaluation.
  bool floored = false;
};

inline constexpr double kTinyFloor = 1e-30;

/// Modified Lentz evaluation of b0 + a1/(b1 + a2/(b2 + ...)).
///
/// `transform` maps each convergent of the fraction to the reported quantity; convergence is
/// judged on transformed values. Runs until successive values differ by at most `tol` or
/// `max_depth` partial quotients have been consumed.
CFEvaluation evaluate_cf(double b0, const std::function<double(int)>& partial_numerator,
                         const std::function<double(int)>& partial_denominator, double tol, int max_depth,
                         const std::function<double(double)>& transform = {});

/// 1 / ((1-kl) + (k-lq)(l-kq) / ((1-kl)(q^2+1) + (k-lq^3)(l-kq^3) / ((1-kl)(q^4+1) + ...))).
/// Needs |kl| < 1 and |q| < 1.
CFEvaluation eval_general_cf(double k, double l, double q, double tol = 1e-15, int max_depth = 500);

/// q^{1/2} / (1+q + q^2/(1+q^3 + q^4/(1+q^5 + ...))). Needs 0 < q < 1.
CFEvaluation eval_h_cf(double q, double tol = 1e-15, int max_depth = 500);

/// 1 / (1 + q/(1 + (q^2+q)/(1 + q^3/(1 + (q^4+q^2)/(1 + ...))))). Needs 0 < q < 1.
CFEvaluation eval_i_cf(double q, double tol = 1e-15, int max_depth = 500);

/// (k^2 q^3; q^4)(l^2 q^3; q^4) / ((k^2 q; q^4)(l^2 q; q^4)) with `factors` factors per product.
double general_cf_product(double k, double l, double q, int factors = 400);

/// h(q) and i(q) from their theta-quotient forms, expanded to q^order and summed numerically.
double h_series_value(double q, int order = 64);
double i_series_value(double q, int order = 64);

}  // namespace qseries
