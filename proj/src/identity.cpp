#include "qseries/identity.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "qseries/blocks.hpp"
#include "qseries/error.hpp"
#include "qseries/lambert.hpp"

namespace qseries {

namespace {

constexpr int kMaxRetries = 3;

// Exact objects (q-powers, constants) carry a truncation far enough past the leaf order that it
// never limits anything they are combined with.
Rational exact_trunc(const Rational& leaf_order, const Rational& exponent) {
  return Rational(2) * abs(leaf_order) + abs(exponent) + Rational(1);
}

struct Evaluator {
  const Rational& order;

  PuiseuxSeries operator()(const node::QPow& n) const {
    return PuiseuxSeries::monomial(AlgebraicNumber(1), n.exponent, exact_trunc(order, n.exponent));
  }
  PuiseuxSeries operator()(const node::Const& n) const {
    return PuiseuxSeries::monomial(n.value, Rational(0), exact_trunc(order, Rational(0)));
  }
  PuiseuxSeries operator()(const node::Eta& n) const { return eta_quotient(n.quotient, order); }
  PuiseuxSeries operator()(const node::Theta& n) const { return theta_f_sum(n.spec, order); }
  PuiseuxSeries operator()(const node::Phi& n) const { return phi(n.scale, order); }
  PuiseuxSeries operator()(const node::Psi& n) const { return psi(n.scale, order); }
  PuiseuxSeries operator()(const node::H& n) const { return h_series(order, n.scale); }
  PuiseuxSeries operator()(const node::I& n) const { return i_series(order, n.scale); }
  PuiseuxSeries operator()(const node::Gamma& n) const { return gamma_k(n.k, order, n.scale); }
  PuiseuxSeries operator()(const node::Theta1N& n) const { return theta1_normalized(n.k, order); }
  PuiseuxSeries operator()(const node::SineRatios& n) const { return sine_ratio_series(n.k, order); }
  PuiseuxSeries operator()(const node::Poch& n) const { return pochhammer(n.spec, order); }
  PuiseuxSeries operator()(const node::Lambert& n) const { return lambert_sum(n.spec, order); }
  PuiseuxSeries operator()(const node::Psi11Lhs& n) const { return bilateral_1psi1_lhs(n.spec, order); }
  PuiseuxSeries operator()(const node::Psi11Rhs& n) const { return bilateral_1psi1_rhs(n.spec, order); }

  PuiseuxSeries operator()(const node::Binary& n) const {
    PuiseuxSeries lhs = evaluate_at_depth(*n.lhs, order);
    PuiseuxSeries rhs = evaluate_at_depth(*n.rhs, order);
    switch (n.op) {
      case node::BinaryOp::Add:
        return lhs + rhs;
      case node::BinaryOp::Sub:
        return lhs - rhs;
      case node::BinaryOp::Mul:
        return lhs * rhs;
      case node::BinaryOp::Div:
        return lhs * inverse(rhs);
    }
    throw Error("unknown binary operator");
  }
  PuiseuxSeries operator()(const node::PowInt& n) const { return pow(evaluate_at_depth(*n.base, order), n.exponent); }
  PuiseuxSeries operator()(const node::Root& n) const { return nth_root(evaluate_at_depth(*n.base, order), n.degree); }
  PuiseuxSeries operator()(const node::Subst& n) const {
    if (n.factor.sign() <= 0) throw DomainError("substitution factor must be positive");
    return substitute(evaluate_at_depth(*n.base, order / n.factor), n.factor);
  }
};

}  // namespace

const char* to_string(Status status) {
  switch (status) {
    case Status::Verified:
      return "verified";
    case Status::VerifiedWithSignFlip:
      return "verified_with_sign_flip";
    case Status::Mismatch:
      return "mismatch";
    case Status::InsufficientPrecision:
      return "insufficient_precision";
  }
  return "unknown";
}

PuiseuxSeries evaluate_at_depth(const Expr& expr, const Rational& leaf_order) {
  return std::visit(Evaluator{leaf_order}, expr.node);
}

PuiseuxSeries evaluate(const Expr& expr, const Rational& order) {
  if (order.sign() <= 0) throw DomainError("evaluation order must be positive");
  Rational leaf_order = order + Rational(1);
  std::string last_problem;
  for (int attempt = 0; attempt <= kMaxRetries; ++attempt) {
    try {
      PuiseuxSeries result = evaluate_at_depth(expr, leaf_order);
      if (result.trunc() >= order) return result;
      last_problem = "result known only below q^" + result.trunc().str();
      leaf_order += order - result.trunc() + Rational(1);
    } catch (const InsufficientPrecision& e) {
      // Typically a quotient or root whose operand had no known term yet.
      last_problem = e.what();
      leaf_order = leaf_order * Rational(2);
    }
  }
  throw InsufficientPrecision("could not reach q^" + order.str() + " after " + std::to_string(kMaxRetries) +
                              " retries: " + last_problem);
}

VerificationReport verify(const Identity& identity, const Rational& order) {
  VerificationReport report;
  report.id = identity.id;
  report.paper_ref = identity.paper_ref;
  report.order = order;
  const auto start = std::chrono::steady_clock::now();
  try {
    const PuiseuxSeries lhs = evaluate(*identity.lhs, order);
    const PuiseuxSeries rhs = evaluate(*identity.rhs, order);
    const Comparison direct = compare_to_order(lhs, rhs, order);
    if (direct.equal) {
      report.status = Status::Verified;
      report.resolved_sign = 1;
    } else if (identity.sign_tolerant && compare_to_order(lhs, -rhs, order).equal) {
      report.status = Status::VerifiedWithSignFlip;
      report.resolved_sign = -1;
    } else {
      report.status = Status::Mismatch;
      report.first_mismatch = direct.first_mismatch;
    }
  } catch (const Error& e) {
    report.status = Status::InsufficientPrecision;
    report.message = e.what();
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<VerificationReport> verify_all(const std::vector<Identity>& identities,
                                           const std::optional<Rational>& order_override, unsigned jobs) {
  std::vector<VerificationReport> reports(identities.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, std::max<std::size_t>(identities.size(), 1));

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < identities.size(); i = next++) {
      const Identity& idy = identities[i];
      reports[i] = verify(idy, order_override.value_or(idy.default_order));
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();  // joins
  return reports;
}

}  // namespace qseries
