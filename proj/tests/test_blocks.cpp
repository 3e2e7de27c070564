#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qseries/blocks.hpp"
#include "qseries/catalog.hpp"
#include "qseries/error.hpp"
#include "support.hpp"

using namespace qseries;
using qseries::testing::alg;
using qseries::testing::poly;

namespace {

PuiseuxSeries qq(const Rational& order) { return pochhammer({Sign::Minus, 1, 1}, order); }

ThetaSpec plain(const Rational& a, const Rational& b) { return {Sign::Plus, a, Sign::Plus, b}; }
ThetaSpec negated(const Rational& a, const Rational& b) { return {Sign::Minus, a, Sign::Minus, b}; }

PuiseuxSeries fs(const ThetaSpec& s, const Rational& order) { return theta_f_sum(s, order); }

}  // namespace

TEST_CASE("pochhammer") {
  CHECK(qq(16) == poly({1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1}, 16));
  CHECK(pochhammer({Sign::Plus, 1, 1}, 20) * qq(20) == pochhammer({Sign::Minus, 2, 2}, 20));

  const auto half = pochhammer({Sign::Minus, Rational(1, 2), Rational(1, 2)}, 6);
  CHECK(half.coefficient(Rational(1, 2)) == alg(-1));
  for (const auto& [e, c] : half.terms()) CHECK((e * 2).is_integer());

  CHECK_THROWS_AS(pochhammer({Sign::Minus, 0, 1}, 5), DomainError);
  CHECK_THROWS_AS(pochhammer({Sign::Minus, 1, -1}, 5), DomainError);
}

TEST_CASE("theta_f_sum") {
  CHECK(fs(plain(1, 1), 10) == poly({1, 2, 0, 0, 2, 0, 0, 0, 0, 2}, 10));
  CHECK(fs(plain(1, 3), 11) == poly({1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1}, 11));

  // f(-q^2, -q^14) by enumerating j in [-6, 6] directly.
  std::vector<long> direct(40, 0);
  for (long j = -6; j <= 6; ++j) {
    const long e = 2 * (j * (j + 1) / 2) + 14 * (j * (j - 1) / 2);
    const long sign = ((j * (j + 1) / 2 + j * (j - 1) / 2) % 2 == 0) ? 1 : -1;
    if (e < 40) direct[e] += sign;
  }
  const auto f = fs(negated(2, 14), 40);
  CHECK(f == poly(direct, 40));
  CHECK(f.coefficient(2) == alg(-1));
  CHECK(f.coefficient(14) == alg(-1));
}

TEST_CASE("theta_f_prod") {
  CHECK(theta_f_prod(plain(1, 1), 24) == fs(plain(1, 1), 24));
  CHECK(theta_f_prod(negated(1, 7), 30) == pochhammer({Sign::Minus, 1, 8}, 30) * pochhammer({Sign::Minus, 7, 8}, 30) *
                                               pochhammer({Sign::Minus, 8, 8}, 30));
  const auto q2q4 = pochhammer({Sign::Minus, 2, 4}, 30);
  CHECK(theta_f_prod(negated(2, 2), 30) == q2q4 * q2q4 * pochhammer({Sign::Minus, 4, 4}, 30));
  CHECK_THROWS_AS(theta_f_prod(plain(0, 1), 10), DomainError);
}

TEST_CASE("eta_q") {
  const EtaQuotient k{{{8, 1}, {2, -1}}};
  const auto lhs = shift(eta_quotient(k, 20), Rational(-1, 4));
  const auto rhs = pochhammer({Sign::Minus, 8, 8}, 20) * inverse(pochhammer({Sign::Minus, 2, 2}, 20));
  CHECK(compare_to_order(lhs, rhs, 19).equal);
  CHECK(lhs.leading_exponent() == 0);
  CHECK(lhs.leading_coefficient() == alg(1));

  const EtaQuotient e41{{{16, 4}, {8, -2}}};
  CHECK(e41.leading_exponent() == 2);
  CHECK(eta_quotient(e41, 10).leading_exponent() == 2);

  CHECK(eta_quotient({{{Rational(1, 2), 1}}}, 3).leading_exponent() == Rational(1, 48));
  // Fractional powers: (eta^{1/4})^4 = eta
  const auto quarter = eta_quotient({{{1, Rational(1, 4)}}}, 12);
  CHECK(compare_to_order(pow(quarter, 4), eta_quotient({{{1, 1}}}, 12), 11).equal);
}

TEST_CASE("gamma_k") {
  CHECK(gamma_k(2, 30) == pochhammer({Sign::Plus, 2, 2}, 30));
  const auto g1 = gamma_k(1, 10);
  CHECK(g1.coefficient(0) == alg(1));
  CHECK(g1.coefficient(1) == alg(0, -1));
  CHECK(g1.coefficient(2) == alg(1, -1));
  const auto prod = gamma_k(1, 24) * gamma_k(2, 24) * gamma_k(3, 24);
  CHECK(compare_to_order(prod, pochhammer({Sign::Minus, 8, 8}, 24) * inverse(pochhammer({Sign::Minus, 2, 2}, 24)), 24)
            .equal);
  CHECK(gamma_k(1, 10, Rational(1, 2)) == substitute(gamma_k(1, 20), Rational(1, 2)));
}

TEST_CASE("sine_ratio_table") {
  CHECK(sine_ratio_table(1, 1).values[1] == alg(1, 1));
  for (int k = 1; k <= 3; ++k) {
    const auto t = sine_ratio_table(k, 40);
    REQUIRE(t.values.size() == 41);
    CHECK(t.values[0] == alg(1));
    const double z = k * std::numbers::pi / 8;
    for (int j = 0; j <= 40; ++j) CHECK(std::abs(t.values[j].to_double() - std::sin((2 * j + 1) * z) / std::sin(z)) < 1e-10);
  }
  const auto r1 = sine_ratio_table(1, 31);
  const auto r3 = sine_ratio_table(3, 31);
  for (int l = 0; l < 4; ++l) CHECK(r1.values[8 * l + 1] - r3.values[8 * l + 1] == alg(0, 2));
  CHECK(alg(1, 1) * r3.values[0] - alg(1, -1) * r1.values[0] == alg(0, 2));
}

TEST_CASE("theta1_normalized") {
  // k = 2: r_j = 1, 1, -1, -1, ...
  std::vector<long> direct(30, 0);
  for (long j = 0; j * (j + 1) / 2 < 30; ++j) {
    const long r = (j % 4 < 2) ? 1 : -1;
    direct[j * (j + 1) / 2] += (j % 2 ? -r : r);
  }
  CHECK(theta1_normalized(2, 30) == poly(direct, 30));
  for (int k = 1; k <= 3; ++k) {
    CHECK(theta1_normalized(k, 24) == qq(24) * gamma_k(k, 24));
    CHECK(theta1_normalized(k, 5).coefficient(0) == alg(1));
  }
}

TEST_CASE("h and i") {
  const auto h = h_series(20);
  CHECK(h.leading_exponent() == Rational(1, 2));
  CHECK(h.leading_coefficient() == alg(1));
  CHECK(shift(h, Rational(-1, 2)).coefficient(1) == alg(-1));
  const auto i = i_series(20);
  CHECK(i.coefficient(0) == alg(1));
  CHECK(i.coefficient(1) == alg(-1));

  const auto hh = h_series(22);
  const auto den = inverse(shift(psi(4, 22), Rational(1, 2)));
  CHECK(compare_to_order(inverse(hh) - hh, phi(2, 22) * den, 20).equal);
  CHECK(compare_to_order(inverse(hh) + hh, phi(1, 22) * den, 20).equal);
}

TEST_CASE("phi and psi") {
  CHECK(phi(1, 10) == poly({1, 2, 0, 0, 2, 0, 0, 0, 0, 2}, 10));
  std::vector<long> p4(25, 0);
  p4[0] = p4[4] = p4[12] = p4[24] = 1;
  CHECK(psi(4, 25) == poly(p4, 25));
  const auto product = pochhammer({Sign::Minus, 2, 2}, 24) * inverse(pochhammer({Sign::Minus, 1, 2}, 24));
  CHECK(compare_to_order(psi(1, 24), product, 24).equal);
}

TEST_CASE("triple product on random monomial specs") {
  std::mt19937 gen(4242);
  for (int i = 0; i < 20; ++i) {
    const Rational a(static_cast<long>(gen() % 16) + 1, 2);
    const Rational b(static_cast<long>(gen() % 16) + 1, 2);
    const ThetaSpec s = i % 2 ? negated(a, b) : plain(a, b);
    CHECK(theta_f_sum(s, 24) == theta_f_prod(s, 24));
  }
}

TEST_CASE("theta sum identities on monomial instances") {
  const auto pairs = random_monomial_pairs(777, 10, true);
  for (const auto& [a, b] : pairs) {
    const Rational N = 24;
    CHECK(fs(plain(a, a + 2 * b), N) * fs(plain(b, 2 * a + b), N) == fs(plain(a, b), N) * psi(a + b, N));
    const auto even = fs(plain(3 * a + b, a + 3 * b), N);
    const auto odd = shift(fs(plain(b - a, 5 * a + 3 * b), N), a);
    CHECK(fs(plain(a, b), N) + fs(negated(a, b), N) == scale(even, 2));
    CHECK(compare_to_order(fs(plain(a, b), N) - fs(negated(a, b), N), scale(odd, 2), N).equal);
    CHECK(compare_to_order(fs(negated(a, b), N), even - odd, N).equal);
  }
}

TEST_CASE("fab identities to order 60") {
  CHECK(compare_to_order(fs(negated(2, 14), 60),
                         fs(plain(20, 44), 60) - shift(fs(plain(12, 52), 60), 2), 60)
            .equal);
  CHECK(compare_to_order(fs(negated(6, 10), 60), fs(plain(28, 36), 60) - shift(fs(plain(4, 60), 60), 6), 60).equal);
}

TEST_CASE("(1-y)(1+y) prod (1 + beta_k y + y^2) = 1 - y^8") {
  PuiseuxSeries p = poly({1, -1}, 100) * poly({1, 1}, 100);
  for (int k = 1; k <= 3; ++k) p = p * PuiseuxSeries({{0, alg(1)}, {1, beta(k)}, {2, alg(1)}}, 100);
  CHECK(p == poly({1, 0, 0, 0, 0, 0, 0, 0, -1}, p.trunc()));
  CHECK(p.trunc() == 100);
}

TEST_CASE("pentagonal sparsity to order 100") {
  const auto pent = oracles::generalized_pentagonals(100);
  const auto s = qq(100);
  for (long n = 0; n < 100; ++n) {
    const AlgebraicNumber c = s.coefficient(n);
    CHECK(c.is_rational());
    CHECK((c == alg(0) || c == alg(1) || c == alg(-1)));
    CHECK(c.is_zero() == (pent.count(n) == 0));
  }
}

TEST_CASE("sine product") {
  const double pi = std::numbers::pi;
  CHECK(std::abs(std::sin(pi / 8) * std::sin(2 * pi / 8) * std::sin(3 * pi / 8) - 0.25) <= 1e-12);
}
