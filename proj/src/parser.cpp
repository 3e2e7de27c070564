#include "qseries/parser.hpp"

#include <cctype>
#include <sstream>

#include "qseries/error.hpp"

namespace qseries {

namespace {

enum class Tok {
  Ident,
  Number,
  Constant,
  Name,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Colon,
  Equal,
  SignEqual,
  End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

const char* describe(Tok kind) {
  switch (kind) {
    case Tok::Ident:
      return "identifier";
    case Tok::Number:
      return "number";
    case Tok::Constant:
      return "constant";
    case Tok::Name:
      return "@name";
    case Tok::Plus:
      return "'+'";
    case Tok::Minus:
      return "'-'";
    case Tok::Star:
      return "'*'";
    case Tok::Slash:
      return "'/'";
    case Tok::Caret:
      return "'^'";
    case Tok::LParen:
      return "'('";
    case Tok::RParen:
      return "')'";
    case Tok::LBracket:
      return "'['";
    case Tok::RBracket:
      return "']'";
    case Tok::Comma:
      return "','";
    case Tok::Colon:
      return "':'";
    case Tok::Equal:
      return "'=='";
    case Tok::SignEqual:
      return "'~='";
    case Tok::End:
      return "end of input";
  }
  return "token";
}

bool ends_operand(Tok kind) {
  return kind == Tok::Ident || kind == Tok::Number || kind == Tok::Constant || kind == Tok::RParen ||
         kind == Tok::RBracket;
}

bool is_binary_operator(Tok kind) {
  return kind == Tok::Plus || kind == Tok::Minus || kind == Tok::Star || kind == Tok::Slash || kind == Tok::Caret;
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  std::size_t line = 1;
  std::size_t col = 1;
  const auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  const auto digit_at = [&](std::size_t p) { return p < src.size() && std::isdigit(static_cast<unsigned char>(src[p])); };

  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const std::size_t start_line = line;
    const std::size_t start_col = col;
    const auto emit = [&](Tok kind, std::size_t len) {
      out.push_back({kind, std::string(src.substr(i, len)), start_line, start_col});
      advance(len);
    };

    const bool negative_literal = c == '-' && digit_at(i + 1) && (out.empty() || !ends_operand(out.back().kind));
    if (std::isdigit(static_cast<unsigned char>(c)) || negative_literal) {
      std::size_t j = i + (negative_literal ? 1 : 0);
      while (digit_at(j)) ++j;
      if (j < src.size() && src[j] == '/' && digit_at(j + 1)) {
        ++j;
        while (digit_at(j)) ++j;
      }
      emit(Tok::Number, j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      emit(Tok::Ident, j - i);
      continue;
    }
    if (c == '@') {
      std::size_t j = i + 1;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '-' || src[j] == '.')) {
        ++j;
      }
      if (j == i + 1) throw ParseError("empty identity name after '@'", start_line, start_col);
      out.push_back({Tok::Name, std::string(src.substr(i + 1, j - i - 1)), start_line, start_col});
      advance(j - i);
      continue;
    }
    if (c == '{') {
      const std::size_t close = src.find('}', i);
      if (close == std::string_view::npos) throw ParseError("unterminated '{' constant", start_line, start_col);
      out.push_back({Tok::Constant, std::string(src.substr(i + 1, close - i - 1)), start_line, start_col});
      advance(close - i + 1);
      continue;
    }
    if (c == '=' && i + 1 < src.size() && src[i + 1] == '=') {
      emit(Tok::Equal, 2);
      continue;
    }
    if (c == '~' && i + 1 < src.size() && src[i + 1] == '=') {
      emit(Tok::SignEqual, 2);
      continue;
    }
    switch (c) {
      case '+':
        emit(Tok::Plus, 1);
        continue;
      case '-':
        emit(Tok::Minus, 1);
        continue;
      case '*':
        emit(Tok::Star, 1);
        continue;
      case '/':
        emit(Tok::Slash, 1);
        continue;
      case '^':
        emit(Tok::Caret, 1);
        continue;
      case '(':
        emit(Tok::LParen, 1);
        continue;
      case ')':
        emit(Tok::RParen, 1);
        continue;
      case '[':
        emit(Tok::LBracket, 1);
        continue;
      case ']':
        emit(Tok::RBracket, 1);
        continue;
      case ',':
        emit(Tok::Comma, 1);
        continue;
      case ':':
        emit(Tok::Colon, 1);
        continue;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start_line, start_col);
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

  bool at_end() const { return peek().kind == Tok::End; }

  ExprPtr expression() {
    ExprPtr lhs = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const auto op = next().kind == Tok::Plus ? node::BinaryOp::Add : node::BinaryOp::Sub;
      lhs = make_binary(op, lhs, term());
    }
    return lhs;
  }

  Identity identity(const std::string& default_id) {
    Identity idy;
    idy.id = default_id;
    if (peek().kind == Tok::Name) idy.id = next().text;
    idy.lhs = expression();
    const Token& rel = peek();
    if (rel.kind != Tok::Equal && rel.kind != Tok::SignEqual) fail(rel, "expected '==' or '~='");
    idy.sign_tolerant = next().kind == Tok::SignEqual;
    idy.rhs = expression();
    return idy;
  }

  void expect_end() {
    if (!at_end()) fail(peek(), "unexpected " + std::string(describe(peek().kind)));
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    // A missing operand at the very end is reported at the dangling operator.
    if (at.kind == Tok::End && pos_ > 0 && is_binary_operator(tokens_[pos_ - 1].kind)) {
      const Token& op = tokens_[pos_ - 1];
      throw ParseError("expected operand after '" + op.text + "'", op.line, op.column);
    }
    throw ParseError(message, at.line, at.column);
  }

  const Token& expect(Tok kind) {
    if (peek().kind != kind) {
      fail(peek(), std::string("expected ") + describe(kind) + ", found " + describe(peek().kind));
    }
    return next();
  }

  Rational rational() {
    const Token& t = peek();
    if (t.kind != Tok::Number) fail(t, "expected a rational number");
    next();
    try {
      return Rational::parse(t.text);
    } catch (const ParseError& e) {
      throw ParseError("malformed rational: " + e.message(), t.line, t.column);
    }
  }

  long integer() {
    const Token& t = peek();
    const Rational r = rational();
    if (!r.is_integer() || !r.numerator().fits_slong_p()) throw ParseError("expected an integer", t.line, t.column);
    return r.to_long();
  }

  Sign sign() {
    const Token& t = peek();
    if (t.kind == Tok::Plus || t.kind == Tok::Minus) {
      next();
      return t.kind == Tok::Plus ? Sign::Plus : Sign::Minus;
    }
    fail(t, "expected sign '+' or '-'");
  }

  Rational power() {
    if (peek().kind == Tok::LParen) {
      next();
      Rational r = rational();
      expect(Tok::RParen);
      return r;
    }
    return rational();
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const auto op = next().kind == Tok::Star ? node::BinaryOp::Mul : node::BinaryOp::Div;
      lhs = make_binary(op, lhs, factor());
    }
    return lhs;
  }

  ExprPtr factor() {
    if (peek().kind == Tok::Minus) {
      next();
      return make_binary(node::BinaryOp::Mul, make_expr(node::Const{AlgebraicNumber(-1)}), factor());
    }
    ExprPtr base = atom();
    if (peek().kind == Tok::Caret) {
      const Token& caret = next();
      const Rational p = power();
      if (p.is_zero()) throw ParseError("zero exponent", caret.line, caret.column);
      if (!p.denominator().fits_slong_p() || !p.numerator().fits_slong_p()) {
        throw ParseError("exponent too large", caret.line, caret.column);
      }
      const long num = p.numerator().get_si();
      const long den = p.denominator().get_si();
      if (num != 1) base = make_expr(node::PowInt{base, num});
      if (den != 1) base = make_expr(node::Root{base, den});
    }
    return base;
  }

  // [sign] q [^ power]  inside f(...)
  std::pair<Sign, Rational> theta_argument() {
    Sign s = Sign::Plus;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) s = sign();
    const Token& t = expect(Tok::Ident);
    if (t.text != "q") fail(t, "expected 'q' in theta argument");
    Rational e(1);
    if (peek().kind == Tok::Caret) {
      next();
      e = power();
    }
    return {s, e};
  }

  LambertWeight weight() {
    const Token& t = expect(Tok::Ident);
    if (t.text == "unit") return LambertWeight::unit();
    if (t.text == "linear") return LambertWeight::linear();
    if (t.text == "legendre") {
      expect(Tok::LParen);
      const long p = integer();
      expect(Tok::RParen);
      return LambertWeight::legendre(p);
    }
    fail(t, "unknown Lambert weight '" + t.text + "'");
  }

  LambertNumerator lambert_numerator() {
    int coefficient = 1;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) coefficient = next().kind == Tok::Plus ? 1 : -1;
    const long e = integer();
    if (e < 0) return {-coefficient, -e};
    return {coefficient, e};
  }

  ExprPtr scaled(const std::string& name) {
    expect(Tok::LParen);
    const Rational r = rational();
    expect(Tok::RParen);
    if (name == "phi") return make_expr(node::Phi{r});
    if (name == "psi") return make_expr(node::Psi{r});
    if (name == "H") return make_expr(node::H{r});
    if (name == "I") return make_expr(node::I{r});
    return make_expr(node::Gamma{name[1] - '0', r});
  }

  int index_argument() {
    expect(Tok::LParen);
    const Token& t = peek();
    const long k = integer();
    if (k < 1 || k > 3) throw ParseError("index must be 1, 2 or 3", t.line, t.column);
    expect(Tok::RParen);
    return static_cast<int>(k);
  }

  BilateralSpec bilateral() {
    expect(Tok::LParen);
    BilateralSpec spec;
    spec.base = rational();
    expect(Tok::Comma);
    spec.x_exponent = rational();
    expect(Tok::Comma);
    spec.z_exponent = rational();
    expect(Tok::RParen);
    return spec;
  }

  ExprPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number:
        return make_expr(node::Const{AlgebraicNumber(rational())});
      case Tok::Constant: {
        next();
        try {
          return make_expr(node::Const{AlgebraicNumber::parse(t.text)});
        } catch (const ParseError& e) {
          throw ParseError("malformed constant: " + e.message(), t.line, t.column);
        }
      }
      case Tok::LParen: {
        next();
        ExprPtr inner = expression();
        expect(Tok::RParen);
        return inner;
      }
      case Tok::Ident:
        return function(next());
      default:
        fail(t, std::string("unexpected ") + describe(t.kind));
    }
  }

  ExprPtr function(const Token& t) {
    const std::string& name = t.text;
    if (name == "q") {
      Rational e(1);
      if (peek().kind == Tok::Caret) {
        next();
        e = power();
      }
      return make_expr(node::QPow{e});
    }
    if (name == "sqrt2") return make_expr(node::Const{AlgebraicNumber::sqrt2()});
    if (name == "eta") {
      expect(Tok::LParen);
      const Rational m = rational();
      expect(Tok::RParen);
      return make_expr(node::Eta{EtaQuotient{{{m, Rational(1)}}}});
    }
    if (name == "etaq") {
      expect(Tok::LParen);
      EtaQuotient quotient;
      do {
        const Rational m = rational();
        expect(Tok::Colon);
        const Rational p = rational();
        quotient.factors.push_back({m, p});
      } while (peek().kind == Tok::Comma && (next(), true));
      expect(Tok::RParen);
      return make_expr(node::Eta{quotient});
    }
    if (name == "poch") {
      expect(Tok::LParen);
      PochSpec spec;
      spec.sign = sign();
      expect(Tok::Comma);
      spec.offset = rational();
      expect(Tok::Comma);
      spec.step = rational();
      expect(Tok::RParen);
      return make_expr(node::Poch{spec});
    }
    if (name == "f") {
      expect(Tok::LParen);
      auto [s1, a] = theta_argument();
      expect(Tok::Comma);
      auto [s2, b] = theta_argument();
      expect(Tok::RParen);
      return make_expr(node::Theta{ThetaSpec{s1, a, s2, b}});
    }
    if (name == "phi" || name == "psi" || name == "H" || name == "I" || name == "G1" || name == "G2" || name == "G3") {
      return scaled(name);
    }
    if (name == "T1N") return make_expr(node::Theta1N{index_argument()});
    if (name == "R") return make_expr(node::SineRatios{index_argument()});
    if (name == "root" || name == "subst") {
      expect(Tok::LParen);
      ExprPtr inner = expression();
      expect(Tok::Comma);
      if (name == "root") {
        const Token& at = peek();
        const long n = integer();
        if (n < 1) throw ParseError("root degree must be positive", at.line, at.column);
        expect(Tok::RParen);
        return make_expr(node::Root{inner, n});
      }
      const Rational r = rational();
      expect(Tok::RParen);
      return make_expr(node::Subst{inner, r});
    }
    if (name == "lambert") {
      expect(Tok::LParen);
      LambertSpec spec;
      spec.modulus = integer();
      expect(Tok::Comma);
      spec.residue = integer();
      expect(Tok::Comma);
      spec.denom_exponent = integer();
      expect(Tok::Comma);
      spec.weight = weight();
      expect(Tok::Comma);
      expect(Tok::LBracket);
      do {
        spec.numerators.push_back(lambert_numerator());
      } while (peek().kind == Tok::Comma && (next(), true));
      expect(Tok::RBracket);
      expect(Tok::RParen);
      return make_expr(node::Lambert{spec});
    }
    if (name == "psi11l") return make_expr(node::Psi11Lhs{bilateral()});
    if (name == "psi11r") return make_expr(node::Psi11Rhs{bilateral()});
    throw ParseError("unknown function '" + name + "'", t.line, t.column);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// ---- rendering ----

constexpr int kPrecSum = 1;
constexpr int kPrecProduct = 2;
constexpr int kPrecAtom = 4;

const char* sign_text(Sign s) { return s == Sign::Plus ? "+" : "-"; }

std::string render_const(const AlgebraicNumber& c) {
  if (c.is_rational()) return c.rat().str();
  if (c.rat().is_zero() && c.irr() == Rational(1)) return "sqrt2";
  return "{" + c.str() + "}";
}

std::string render_weight(const LambertWeight& w) {
  switch (w.kind) {
    case LambertWeight::Kind::Unit:
      return "unit";
    case LambertWeight::Kind::Linear:
      return "linear";
    case LambertWeight::Kind::Legendre:
      return "legendre(" + std::to_string(w.prime) + ")";
  }
  return "unit";
}

std::string render_bilateral(const BilateralSpec& s) {
  return "(" + s.base.str() + ", " + s.x_exponent.str() + ", " + s.z_exponent.str() + ")";
}

struct Renderer {
  int& precedence;  // out: precedence of the rendered text

  std::string leaf(std::string text) const {
    precedence = kPrecAtom;
    return text;
  }

  std::string operator()(const node::QPow& n) const { return leaf("q^(" + n.exponent.str() + ")"); }
  std::string operator()(const node::Const& n) const { return leaf(render_const(n.value)); }
  std::string operator()(const node::Eta& n) const {
    const auto& fs = n.quotient.factors;
    if (fs.size() == 1 && fs[0].power == Rational(1)) return leaf("eta(" + fs[0].multiplier.str() + ")");
    std::string out = "etaq(";
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (i) out += ", ";
      out += fs[i].multiplier.str() + ":" + fs[i].power.str();
    }
    return leaf(out + ")");
  }
  std::string operator()(const node::Theta& n) const {
    return leaf(std::string("f(") + sign_text(n.spec.sign1) + "q^(" + n.spec.a.str() + "), " + sign_text(n.spec.sign2) +
                "q^(" + n.spec.b.str() + "))");
  }
  std::string operator()(const node::Phi& n) const { return leaf("phi(" + n.scale.str() + ")"); }
  std::string operator()(const node::Psi& n) const { return leaf("psi(" + n.scale.str() + ")"); }
  std::string operator()(const node::H& n) const { return leaf("H(" + n.scale.str() + ")"); }
  std::string operator()(const node::I& n) const { return leaf("I(" + n.scale.str() + ")"); }
  std::string operator()(const node::Gamma& n) const {
    return leaf("G" + std::to_string(n.k) + "(" + n.scale.str() + ")");
  }
  std::string operator()(const node::Theta1N& n) const { return leaf("T1N(" + std::to_string(n.k) + ")"); }
  std::string operator()(const node::SineRatios& n) const { return leaf("R(" + std::to_string(n.k) + ")"); }
  std::string operator()(const node::Poch& n) const {
    return leaf(std::string("poch(") + sign_text(n.spec.sign) + ", " + n.spec.offset.str() + ", " + n.spec.step.str() +
                ")");
  }
  std::string operator()(const node::Lambert& n) const {
    const LambertSpec& s = n.spec;
    std::string out = "lambert(" + std::to_string(s.modulus) + ", " + std::to_string(s.residue) + ", " +
                      std::to_string(s.denom_exponent) + ", " + render_weight(s.weight) + ", [";
    for (std::size_t i = 0; i < s.numerators.size(); ++i) {
      if (i) out += ", ";
      out += (s.numerators[i].coefficient > 0 ? "+" : "-") + std::to_string(s.numerators[i].exponent);
    }
    return leaf(out + "])");
  }
  std::string operator()(const node::Psi11Lhs& n) const { return leaf("psi11l" + render_bilateral(n.spec)); }
  std::string operator()(const node::Psi11Rhs& n) const { return leaf("psi11r" + render_bilateral(n.spec)); }

  std::string operator()(const node::Binary& n) const {
    const bool sum = n.op == node::BinaryOp::Add || n.op == node::BinaryOp::Sub;
    const int own = sum ? kPrecSum : kPrecProduct;
    const char* op = n.op == node::BinaryOp::Add   ? " + "
                     : n.op == node::BinaryOp::Sub ? " - "
                     : n.op == node::BinaryOp::Mul ? " * "
                                                   : " / ";
    // Left-associative: the right operand needs strictly higher precedence to avoid regrouping.
    std::string out = wrap(*n.lhs, own) + op + wrap(*n.rhs, own + 1);
    precedence = own;
    return out;
  }
  std::string operator()(const node::PowInt& n) const {
    return leaf(wrap(*n.base, kPrecAtom) + "^(" + std::to_string(n.exponent) + ")");
  }
  std::string operator()(const node::Root& n) const {
    return leaf("root(" + render(*n.base) + ", " + std::to_string(n.degree) + ")");
  }
  std::string operator()(const node::Subst& n) const {
    return leaf("subst(" + render(*n.base) + ", " + n.factor.str() + ")");
  }

  static std::string wrap(const Expr& e, int needed) {
    int prec = 0;
    std::string text = std::visit(Renderer{prec}, e.node);
    // A power of a negative literal would re-lex as a negated power; keep it atomic.
    return prec >= needed ? text : "(" + text + ")";
  }
};

}  // namespace

ExprPtr parse_expr(std::string_view text) {
  Parser p(text);
  ExprPtr e = p.expression();
  p.expect_end();
  return e;
}

Identity parse_identity(std::string_view text) {
  Parser p(text);
  Identity idy = p.identity("user");
  p.expect_end();
  return idy;
}

std::vector<Identity> parse_identities(std::string_view text) {
  Parser p(text);
  std::vector<Identity> out;
  while (!p.at_end()) out.push_back(p.identity("identity-" + std::to_string(out.size() + 1)));
  return out;
}

std::string render(const Expr& expr) {
  int prec = 0;
  return std::visit(Renderer{prec}, expr.node);
}

std::string render(const Identity& identity) {
  std::ostringstream out;
  if (!identity.id.empty()) out << '@' << identity.id << ' ';
  out << render(*identity.lhs) << (identity.sign_tolerant ? " ~= " : " == ") << render(*identity.rhs);
  return out.str();
}

}  // namespace qseries
