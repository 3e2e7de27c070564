#pragma once

#include <memory>
#include <variant>

#include "qseries/algebraic.hpp"
#include "qseries/blocks.hpp"
#include "qseries/lambert.hpp"
#include "qseries/rational.hpp"

namespace qseries {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

namespace node {

struct QPow {
  Rational exponent;
  friend bool operator==(const QPow&, const QPow&) = default;
};
struct Const {
  AlgebraicNumber value;
  friend bool operator==(const Const&, const Const&) = default;
};
struct Eta {
  EtaQuotient quotient;
  friend bool operator==(const Eta&, const Eta&) = default;
};
struct Theta {
  ThetaSpec spec;
  friend bool operator==(const Theta&, const Theta&) = default;
};
struct Phi {
  Rational scale;
  friend bool operator==(const Phi&, const Phi&) = default;
};
struct Psi {
  Rational scale;
  friend bool operator==(const Psi&, const Psi&) = default;
};
struct H {
  Rational scale;
  friend bool operator==(const H&, const H&) = default;
};
struct I {
  Rational scale;
  friend bool operator==(const I&, const I&) = default;
};
struct Gamma {
  int k = 1;
  Rational scale;
  friend bool operator==(const Gamma&, const Gamma&) = default;
};
struct Theta1N {
  int k = 1;
  friend bool operator==(const Theta1N&, const Theta1N&) = default;
};
/// sum_j r_j q^j over the sine ratios of index k.
struct SineRatios {
  int k = 1;
  friend bool operator==(const SineRatios&, const SineRatios&) = default;
};
struct Poch {
  PochSpec spec;
  friend bool operator==(const Poch&, const Poch&) = default;
};
struct Lambert {
  LambertSpec spec;
  friend bool operator==(const Lambert&, const Lambert&) = default;
};
struct Psi11Lhs {
  BilateralSpec spec;
  friend bool operator==(const Psi11Lhs&, const Psi11Lhs&) = default;
};
struct Psi11Rhs {
  BilateralSpec spec;
  friend bool operator==(const Psi11Rhs&, const Psi11Rhs&) = default;
};

enum class BinaryOp { Add, Sub, Mul, Div };

struct Binary {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};
struct PowInt {
  ExprPtr base;
  long exponent;
};
struct Root {
  ExprPtr base;
  long degree;
};
struct Subst {
  ExprPtr base;
  Rational factor;
};

}  // namespace node

/// Immutable expression tree over series-valued primitives.
struct Expr {
  using Node = std::variant<node::QPow, node::Const, node::Eta, node::Theta, node::Phi, node::Psi, node::H, node::I,
                            node::Gamma, node::Theta1N, node::SineRatios, node::Poch, node::Lambert, node::Psi11Lhs,
                            node::Psi11Rhs, node::Binary, node::PowInt, node::Root, node::Subst>;
  Node node;
};

/// Deep structural equality.
bool operator==(const Expr& a, const Expr& b);

template <typename T>
ExprPtr make_expr(T node) {
  return std::make_shared<const Expr>(Expr{Expr::Node(std::move(node))});
}

ExprPtr make_binary(node::BinaryOp op, ExprPtr lhs, ExprPtr rhs);

}  // namespace qseries
