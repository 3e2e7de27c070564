#include "qseries/catalog.hpp"

#include <algorithm>
#include <cstdio>
#include <random>

#include "qseries/parser.hpp"

namespace qseries {

namespace {

std::string two_digits(int n) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "%02d", n);
  return buf;
}

// "q^(e)" with the exponent in a form the parser accepts.
std::string qp(const Rational& e) { return "q^(" + e.str() + ")"; }

std::string f(const std::string& s1, const Rational& a, const std::string& s2, const Rational& b) {
  return "f(" + s1 + qp(a) + ", " + s2 + qp(b) + ")";
}

class Builder {
 public:
  void add(std::string id, std::string paper_ref, const std::string& text, long order = 20) {
    Identity idy = parse_identity(text);
    idy.id = std::move(id);
    idy.paper_ref = std::move(paper_ref);
    idy.default_order = Rational(order);
    out_.push_back(std::move(idy));
  }

  std::vector<Identity> take() { return std::move(out_); }

 private:
  std::vector<Identity> out_;
};

void add_theta_family(Builder& b) {
  const auto pairs = random_monomial_pairs(kTripleProductSeed, 20, false);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [x, y] = pairs[i];
    // Both signs equal, so that the product base ab = q^{a+b} is a plain power of q.
    const std::string s1 = i % 2 ? "-" : "+";
    const std::string s2 = s1;
    const Rational step = x + y;
    b.add("triple-product-rand-" + two_digits(static_cast<int>(i + 1)),
          "Jacobi triple product: f(a,b) = (-a;ab)(-b;ab)(ab;ab)",
          f(s1, x, s2, y) + " == poch(" + s1 + ", " + x.str() + ", " + step.str() + ") * poch(" + s2 + ", " + y.str() +
              ", " + step.str() + ") * poch(-, " + step.str() + ", " + step.str() + ")",
          24);
  }
  b.add("f-sum-vs-prod", "f(-q,-q^7) as a sum equals (q;q^8)(q^7;q^8)(q^8;q^8)",
        "f(-q, -q^7) == poch(-, 1, 8) * poch(-, 7, 8) * poch(-, 8, 8)", 24);

  const auto lemma = random_monomial_pairs(kLemmaSeed, 10, false);
  for (std::size_t i = 0; i < lemma.size(); ++i) {
    const auto& [x, y] = lemma[i];
    b.add("lemma-f1-" + two_digits(static_cast<int>(i + 1)), "f(g,g d^2) f(d,g^2 d) = f(g,d) psi(g d)",
          f("", x, "", x + 2 * y) + " * " + f("", y, "", 2 * x + y) + " == " + f("", x, "", y) + " * psi(" +
              (x + y).str() + ")",
          24);
  }
  for (std::size_t i = 0; i < lemma.size(); ++i) {
    const auto& [x, y] = lemma[i];
    b.add("lemma-f2-" + two_digits(static_cast<int>(i + 1)), "f(g,d) + f(-g,-d) = 2 f(g^3 d, g d^3)",
          f("", x, "", y) + " + " + f("-", x, "-", y) + " == 2 * " + f("", 3 * x + y, "", x + 3 * y), 24);
  }
  const auto ordered = random_monomial_pairs(kLemmaSeed + 1, 10, true);
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    const auto& [x, y] = ordered[i];
    b.add("lemma-f3-" + two_digits(static_cast<int>(i + 1)), "f(g,d) - f(-g,-d) = 2 g f(d/g, g^5 d^3)",
          f("", x, "", y) + " - " + f("-", x, "-", y) + " == 2 * " + qp(x) + " * " + f("", y - x, "", 5 * x + 3 * y),
          24);
  }
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    const auto& [x, y] = ordered[i];
    b.add("lemma-f4-" + two_digits(static_cast<int>(i + 1)), "f(-g,-d) = f(g^3 d, g d^3) - g f(d/g, g^5 d^3)",
          f("-", x, "-", y) + " == " + f("", 3 * x + y, "", x + 3 * y) + " - " + qp(x) + " * " +
              f("", y - x, "", 5 * x + 3 * y),
          24);
  }
}

void add_continued_fractions(Builder& b) {
  b.add("hcf-minus", "1/h(q) - h(q) = phi(q^2)/(q^{1/2} psi(q^4))", "1 / H(1) - H(1) == phi(2) / (q^(1/2) * psi(4))");
  b.add("hcf-plus", "1/h(q) + h(q) = phi(q)/(q^{1/2} psi(q^4))", "1 / H(1) + H(1) == phi(1) / (q^(1/2) * psi(4))");
}

void add_theta1_family(Builder& b) {
  // The product form of theta_1 at z = k pi/8, divided by 2 q^{1/8} sin z, is (q;q) Gamma_k(q).
  for (int k = 1; k <= 3; ++k) {
    const std::string ks = std::to_string(k);
    b.add("theta1-norm-" + ks, "theta_1(k pi/8) / (2 q^{1/8} sin(k pi/8)) = (q;q) prod (1 + beta_k q^n + q^{2n})",
          "T1N(" + ks + ") == poch(-, 1, 1) * G" + ks + "(1)", 24);
  }
  b.add("ypoly-8", "(1-y)(1+y) prod_k (1 + beta_k y + y^2) = 1 - y^8",
        "(1 - q) * (1 + q) * (1 - sqrt2 * q + q^2) * (1 + q^2) * (1 + sqrt2 * q + q^2) == 1 - q^8");
  b.add("prodK", "Gamma_1 Gamma_2 Gamma_3 = q^{-1/4} eta(8 tau)/eta(2 tau)",
        "G1(1) * G2(1) * G3(1) == q^(-1/4) * eta(8) / eta(2)", 24);
  b.add("fab1", "f(-q^2,-q^14) = f(q^20,q^44) - q^2 f(q^12,q^52)",
        "f(-q^2, -q^14) == f(q^20, q^44) - q^2 * f(q^12, q^52)", 60);
  b.add("fab2", "f(-q^6,-q^10) = f(q^28,q^36) - q^6 f(q^4,q^60)",
        "f(-q^6, -q^10) == f(q^28, q^36) - q^6 * f(q^4, q^60)", 60);
}

void add_gamma_intermediates(Builder& b) {
  // Series side: sum_k (-1)^k B(k) q^{(2k+1)^2/8}, written through the normalized theta_1 values.
  b.add("bsum-311", "sum (-1)^k B_1(k) q^{(2k+1)^2/8} = 2 sqrt2 q^{9/8} (q^2 f(q^12,q^52) - f(q^20,q^44))",
        "q^(1/8) * (T1N(1) - T1N(3)) == {0+2*sqrt2} * q^(9/8) * (q^2 * f(q^12, q^52) - f(q^20, q^44))");
  b.add("bsum-312", "sum (-1)^k B_1(k) q^{(2k+1)^2/8} = 2 sqrt2 q^{9/8} f(-q^2,-q^14)",
        "q^(1/8) * (T1N(1) - T1N(3)) ~= {0+2*sqrt2} * q^(9/8) * f(-q^2, -q^14)");
  b.add("diff-313", "Gamma_1 - Gamma_3 = 2 sqrt2 q^{25/24} f(-q^2,-q^14) / eta(tau)",
        "G1(1) - G3(1) ~= {0+2*sqrt2} * q^(25/24) * f(-q^2, -q^14) / eta(1)");
  b.add("prod-314", "Gamma_1^2 Gamma_2 Gamma_3 - Gamma_1 Gamma_2 Gamma_3^2 = 2 sqrt2 q^{19/24} eta(8 tau) f(-q^2,-q^14) / (eta(tau) eta(2 tau))",
        "G1(1)^2 * G2(1) * G3(1) - G1(1) * G2(1) * G3(1)^2 ~= {0+2*sqrt2} * q^(19/24) * eta(8) * f(-q^2, -q^14) / (eta(1) * eta(2))");
  b.add("bsum-317", "sum (-1)^k B_2(k) q^{(2k+1)^2/8} = 2 sqrt2 q^{1/8} f(-q^6,-q^10)",
        "q^(1/8) * ({1+1*sqrt2} * T1N(3) - {1-1*sqrt2} * T1N(1)) == {0+2*sqrt2} * q^(1/8) * f(-q^6, -q^10)");
  b.add("sum-318", "(1+beta_3) Gamma_3 - (1+beta_1) Gamma_1 = 2 sqrt2 q^{1/24} f(-q^6,-q^10) / eta(tau)",
        "{1+1*sqrt2} * G3(1) - {1-1*sqrt2} * G1(1) == {0+2*sqrt2} * q^(1/24) * f(-q^6, -q^10) / eta(1)");
  b.add("prod-319",
        "Gamma_1 Gamma_2 Gamma_3 ((1+beta_3) Gamma_3 - (1+beta_1) Gamma_1) = 2 sqrt2 q^{-5/24} eta(8 tau) f(-q^6,-q^10) / (eta(tau) eta(2 tau))",
        "G1(1) * G2(1) * G3(1) * ({1+1*sqrt2} * G3(1) - {1-1*sqrt2} * G1(1)) == {0+2*sqrt2} * q^(-5/24) * eta(8) * "
        "f(-q^6, -q^10) / (eta(1) * eta(2))");
  b.add("bsum-3112", "sum (-1)^k B_3(k) q^{(2k+1)^2/8} = 2 sqrt2 q^{1/8} (f(-q^6,-q^10) - q f(-q^2,-q^14))",
        "q^(1/8) * (sqrt2 * T1N(3) + sqrt2 * T1N(1)) == {0+2*sqrt2} * q^(1/8) * (f(-q^6, -q^10) - q * f(-q^2, -q^14))");
  b.add("comb-3113", "beta_3 Gamma_3 - beta_1 Gamma_1 = 2 sqrt2 q^{1/24} (f(-q^6,-q^10) - q f(-q^2,-q^14)) / eta(tau)",
        "sqrt2 * G3(1) + sqrt2 * G1(1) ~= {0+2*sqrt2} * q^(1/24) * (f(-q^6, -q^10) - q * f(-q^2, -q^14)) / eta(1)");
  b.add("prod-3114",
        "Gamma_1 Gamma_2 Gamma_3 (beta_3 Gamma_3 - beta_1 Gamma_1) = 2 sqrt2 q^{-5/24} eta(8 tau) (f(-q^6,-q^10) - q f(-q^2,-q^14)) / (eta(tau) eta(2 tau))",
        "G1(1) * G2(1) * G3(1) * (sqrt2 * G3(1) + sqrt2 * G1(1)) ~= {0+2*sqrt2} * q^(-5/24) * eta(8) * "
        "(f(-q^6, -q^10) - q * f(-q^2, -q^14)) / (eta(1) * eta(2))");
}

void add_gamma_products(Builder& b) {
  const std::string A = "(G1(1/2)^2 * G3(1/2))";
  const std::string B = "(G1(1/2) * G3(1/2)^2)";
  const std::string E = "(q^(-3/32) * etaq(4:1/2, 1:1/4, 8:1, 1/2:-1, 2:-3/4))";
  const std::string P = "(root(H(1), 2) * root(I(1), 4))";
  const std::string Q = "(root(I(1), 4) / root(H(1), 2))";
  b.add("thm31-i", "Gamma_1^2 Gamma_3 - Gamma_1 Gamma_3^2 at q^{1/2} = 2 sqrt2 E sqrt(h) i^{1/4}",
        A + " - " + B + " ~= {0+2*sqrt2} * " + E + " * " + P);
  b.add("thm31-ii", "Gamma_1^2 Gamma_3 + Gamma_1 Gamma_3^2 at q^{1/2} = 2 E (i^{1/4}/sqrt(h) - sqrt(h) i^{1/4})",
        A + " + " + B + " ~= 2 * " + E + " * (" + Q + " - " + P + ")");
  b.add("thm31-iii", "(1+beta_3) Gamma_1 Gamma_3^2 - (1+beta_1) Gamma_1^2 Gamma_3 at q^{1/2} = 2 sqrt2 E i^{1/4}/sqrt(h)",
        "{1+1*sqrt2} * " + B + " - {1-1*sqrt2} * " + A + " ~= {0+2*sqrt2} * " + E + " * " + Q);
  b.add("thm31-iv", "(1+beta_1) Gamma_1^2 Gamma_3 + (1+beta_3) Gamma_1 Gamma_3^2 at q^{1/2} = 2 E (i^{1/4}/sqrt(h) + sqrt(h) i^{1/4})",
        "{1-1*sqrt2} * " + A + " + {1+1*sqrt2} * " + B + " ~= 2 * " + E + " * (" + Q + " + " + P + ")");
  b.add("thm31-v", "beta_3 Gamma_1 Gamma_3^2 - beta_1 Gamma_1^2 Gamma_3 at q^{1/2} = 2 sqrt2 E (i^{1/4}/sqrt(h) - sqrt(h) i^{1/4})",
        "sqrt2 * " + B + " + sqrt2 * " + A + " ~= {0+2*sqrt2} * " + E + " * (" + Q + " - " + P + ")");
  b.add("thm31-vi", "beta_1 Gamma_1^2 Gamma_3 + beta_3 Gamma_1 Gamma_3^2 at q^{1/2} = 4 E sqrt(h) i^{1/4}",
        "{0-1*sqrt2} * " + A + " + sqrt2 * " + B + " ~= 4 * " + E + " * " + P);
}

void add_tables(Builder& b) {
  // Generating series sum_k B(k) q^k; the tables are 8-periodic, so the right side is a
  // period polynomial over (1 - q^8). Default order 32 covers k = 8l + r for l = 0..3.
  b.add("btable-1", "B_1(8l+r) = 0, 2 sqrt2, 2 sqrt2, 0, 0, -2 sqrt2, -2 sqrt2, 0",
        "R(1) - R(3) == {0+2*sqrt2} * (q + q^2 - q^5 - q^6) / (1 - q^8)", 32);
  b.add("btable-2", "B_2(8l+r) = 2 sqrt2, 0, 0, 2 sqrt2, -2 sqrt2, 0, 0, -2 sqrt2",
        "{1+1*sqrt2} * R(3) - {1-1*sqrt2} * R(1) == {0+2*sqrt2} * (1 + q^3 - q^4 - q^7) / (1 - q^8)", 32);
  b.add("btable-3", "B_3(8l+r) = 2 sqrt2 for r < 4, -2 sqrt2 for r >= 4",
        "sqrt2 * R(3) + sqrt2 * R(1) == {0+2*sqrt2} * (1 + q + q^2 + q^3 - q^4 - q^5 - q^6 - q^7) / (1 - q^8)", 32);
}

void add_eisenstein(Builder& b) {
  const std::string e41 = "lambert(2, 1, 8, unit, [+1, +3, -5, -7])";
  b.add("e1-thm41", "sum_{m odd} (q^m+q^{3m})/(1-q^{8m}) - (q^{5m}+q^{7m})/(1-q^{8m}) = eta^4(16 tau)/eta^2(8 tau) (1/h(q^2) + h(q^2))",
        e41 + " == etaq(16:4, 8:-2) * (1 / H(2) + H(2))");
  b.add("e2-cor42", "same sum = eta^4(16 tau)/eta^2(8 tau) phi(q^2)/(q psi(q^8))",
        e41 + " == etaq(16:4, 8:-2) * phi(2) / (q * psi(8))");
  b.add("thm43-i", "sum_{m odd} (q^m-q^{3m}+q^{5m}-q^{7m})/(1-q^{8m}) = eta^4(16 tau)/eta^2(8 tau) phi(q^4)/(q psi(q^8))",
        "lambert(2, 1, 8, unit, [+1, -3, +5, -7]) == etaq(16:4, 8:-2) * phi(4) / (q * psi(8))");
  b.add("thm43-ii",
        "sum_{m=1 (4)} (q^m+q^{5m})/(1-q^{8m}) - sum_{m=3 (4)} (q^{3m}+q^{7m})/(1-q^{8m}) = eta^2(32 tau) eta(16 tau)/eta(8 tau) phi(q^4)/(q^2 psi(q^16))",
        "lambert(4, 1, 8, unit, [+1, +5]) - lambert(4, 3, 8, unit, [+3, +7]) == etaq(32:2, 16:1, 8:-1) * phi(4) / (q^2 * "
        "psi(16))");
  b.add("thm43-iii",
        "mod 8 residue sums = eta^2(16 tau) eta^2(64 tau)/(eta(8 tau) eta(32 tau)) phi(q^16)/(q^4 psi(q^32))",
        "lambert(8, 1, 8, unit, [+1, -5]) - lambert(8, 3, 8, unit, [+3, +7]) + lambert(8, 5, 8, unit, [+1, +5]) - "
        "lambert(8, 7, 8, unit, [+7, -3]) == etaq(16:2, 64:2, 8:-1, 32:-1) * phi(16) / (q^4 * psi(32))");
  b.add("thm44-i",
        "sum m (q^m-q^{3m}-q^{5m}+q^{7m})/(1-q^{8m}) = eta^4(8 tau) eta^2(4 tau)/eta^2(2 tau) phi(q)/(q^{1/2} psi(q^4))",
        "lambert(1, 0, 8, linear, [+1, -3, -5, +7]) == etaq(8:4, 4:2, 2:-2) * phi(1) / (q^(1/2) * psi(4))");
  b.add("thm44-ii",
        "sum (m|3) (q^m-q^{3m}-q^{5m}+q^{7m})/(1-q^{8m}) = eta(tau) eta^2(2 tau) eta(6 tau) eta^3(8 tau) eta(24 tau)/(eta(3 tau) eta^5(4 tau)) phi(q^2)/(q^{1/2} psi(q^4))",
        "lambert(1, 0, 8, legendre(3), [+1, -3, -5, +7]) == etaq(1:1, 2:2, 6:1, 8:3, 24:1, 3:-1, 4:-5) * phi(2) / "
        "(q^(1/2) * psi(4))");
}

void add_bilateral(Builder& b) {
  b.add("psi11-spec-a", "sum_j z^j/(1 - x q^j) = (xz, q/xz, q, q; q)/(x, q/x, z, q/z; q) at base q^16, x = q^8, z = q^2",
        "psi11l(16, 8, 2) == psi11r(16, 8, 2)", 48);
  b.add("psi11-spec-b", "sum_j z^j/(1 - x q^j) = (xz, q/xz, q, q; q)/(x, q/x, z, q/z; q) at base q^16, x = q^8, z = q^6",
        "psi11l(16, 8, 6) == psi11r(16, 8, 6)", 48);
  const std::string e41 = "lambert(2, 1, 8, unit, [+1, +3, -5, -7])";
  b.add("e2-bilateral", "one-sided sum = sum_m q^{2m+1}/(1-q^{16m+8}) + sum_m q^{6m+3}/(1-q^{16m+8})",
        e41 + " == q * psi11l(16, 8, 2) + q^3 * psi11l(16, 8, 6)", 48);
  b.add("e2-product",
        "one-sided sum = (q^16;q^16)^2/(q^8;q^16)^2 (q (q^6,q^10;q^16)/(q^2,q^14;q^16) + q^3 (q^2,q^14;q^16)/(q^6,q^10;q^16))",
        e41 + " == poch(-, 16, 16)^2 / poch(-, 8, 16)^2 * (q * poch(-, 6, 16) * poch(-, 10, 16) / (poch(-, 2, 16) * "
              "poch(-, 14, 16)) + q^3 * poch(-, 2, 16) * poch(-, 14, 16) / (poch(-, 6, 16) * poch(-, 10, 16)))",
        48);
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

}  // namespace

std::vector<std::pair<Rational, Rational>> random_monomial_pairs(std::uint32_t seed, int count, bool ordered) {
  // Raw engine output modulo 16 rather than a distribution, so the draw is identical across
  // standard libraries.
  std::mt19937 gen(seed);
  const auto draw = [&] { return Rational(static_cast<long>(gen() % 16) + 1, 2); };
  std::vector<std::pair<Rational, Rational>> out;
  while (static_cast<int>(out.size()) < count) {
    Rational a = draw();
    Rational b = draw();
    if (ordered && !(a < b)) continue;
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

const std::vector<Identity>& catalog() {
  static const std::vector<Identity> entries = [] {
    Builder b;
    add_theta_family(b);
    add_continued_fractions(b);
    add_theta1_family(b);
    add_gamma_intermediates(b);
    add_gamma_products(b);
    add_tables(b);
    add_eisenstein(b);
    add_bilateral(b);
    return b.take();
  }();
  return entries;
}

const Identity* find_identity(std::string_view id) {
  for (const Identity& idy : catalog()) {
    if (idy.id == id) return &idy;
  }
  return nullptr;
}

std::vector<std::string> near_matches(std::string_view id, std::size_t limit) {
  std::vector<std::pair<std::size_t, std::string>> scored;
  for (const Identity& idy : catalog()) {
    const bool prefix = !id.empty() && std::string_view(idy.id).substr(0, id.size()) == id;
    const std::size_t d = prefix ? 0 : edit_distance(id, idy.id);
    if (prefix || d <= std::max<std::size_t>(3, id.size() / 3)) scored.emplace_back(d, idy.id);
  }
  std::stable_sort(scored.begin(), scored.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::string> out;
  for (std::size_t i = 0; i < scored.size() && i < limit; ++i) out.push_back(scored[i].second);
  return out;
}

}  // namespace qseries
