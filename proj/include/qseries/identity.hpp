#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qseries/ast.hpp"
#include "qseries/puiseux.hpp"

namespace qseries {

struct Identity {
  std::string id;
  ExprPtr lhs;
  ExprPtr rhs;
  Rational default_order{20};
  std::string paper_ref;
  /// Certify lhs = +-rhs and record which sign holds.
  bool sign_tolerant = false;
};

enum class Status { Verified, VerifiedWithSignFlip, Mismatch, InsufficientPrecision };

const char* to_string(Status status);

struct VerificationReport {
  std::string id;
  std::string paper_ref;
  Rational order;
  Status status = Status::Mismatch;
  /// +1, -1, or empty when neither sign holds.
  std::optional<int> resolved_sign;
  std::optional<Mismatch> first_mismatch;
  double elapsed_ms = 0.0;
  /// Evaluation error text for InsufficientPrecision.
  std::string message;

  bool ok() const { return status == Status::Verified || status == Status::VerifiedWithSignFlip; }
};

/// Evaluates `expr` so that the result is known below q^order. Leaf expansions are padded and
/// retried (at most three times) when truncation losses leave the result short; throws
/// InsufficientPrecision if that is still not enough.
PuiseuxSeries evaluate(const Expr& expr, const Rational& order);

/// Evaluates with every leaf expanded to exactly `leaf_order`; no padding.
PuiseuxSeries evaluate_at_depth(const Expr& expr, const Rational& leaf_order);

VerificationReport verify(const Identity& identity, const Rational& order);
inline VerificationReport verify(const Identity& identity) { return verify(identity, identity.default_order); }

/// Verifies every identity (on up to `jobs` threads). Reports come back in input order.
/// Each identity uses `order_override` when given, its default order otherwise.
std::vector<VerificationReport> verify_all(const std::vector<Identity>& identities,
                                           const std::optional<Rational>& order_override, unsigned jobs = 0);

}  // namespace qseries
