#include "qseries/ast.hpp"

namespace qseries {

namespace {

bool same(const ExprPtr& a, const ExprPtr& b) { return a && b ? *a == *b : a == b; }

struct EqualVisitor {
  const Expr::Node& other;

  bool operator()(const node::Binary& a) const {
    const auto& b = std::get<node::Binary>(other);
    return a.op == b.op && same(a.lhs, b.lhs) && same(a.rhs, b.rhs);
  }
  bool operator()(const node::PowInt& a) const {
    const auto& b = std::get<node::PowInt>(other);
    return a.exponent == b.exponent && same(a.base, b.base);
  }
  bool operator()(const node::Root& a) const {
    const auto& b = std::get<node::Root>(other);
    return a.degree == b.degree && same(a.base, b.base);
  }
  bool operator()(const node::Subst& a) const {
    const auto& b = std::get<node::Subst>(other);
    return a.factor == b.factor && same(a.base, b.base);
  }
  template <typename Leaf>
  bool operator()(const Leaf& a) const {
    return a == std::get<Leaf>(other);
  }
};

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(EqualVisitor{b.node}, a.node);
}

ExprPtr make_binary(node::BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
  return make_expr(node::Binary{op, std::move(lhs), std::move(rhs)});
}

}  // namespace qseries
