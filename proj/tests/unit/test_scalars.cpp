#include "support.hpp"

using namespace testing;

namespace {

ZSeries poly(std::initializer_list<Rational> c, int order) {
  ZSeries s(order);
  int n = 0;
  for (const auto& q : c) s.set(n++, q);
  return s;
}

// c^n / n! computed without the library.
Rational exp_coefficient(const Rational& c, int n) {
  Rational q{1};
  for (int k = 1; k <= n; ++k) q = q * c / k;
  return q;
}

} // namespace

TEST_SUITE("scalars") {

TEST_CASE("rationals stay canonical") {
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(make_rational(3, -6) == make_rational(-1, 2));
  CHECK(to_string(make_rational(-4, 6)) == "-2/3");
  CHECK(to_string(make_rational(5)) == "5");
}

TEST_CASE("addition") {
  ZSeries one_plus_z = poly({1, 1}, 6);
  CHECK(one_plus_z + ZSeries(6) == one_plus_z);
  ZSeries half_z = ZSeries::monomial(make_rational(1, 2), 1, 6);
  CHECK(half_z + half_z == ZSeries::monomial(1, 1, 6));

  // (1 - e^{-z})/z + (e^{-z} - 1)/z, each expanded first
  ZSeries em = ZSeries::scalar_exp(-1, 7);
  ZSeries a = (ZSeries::constant(1, 7) - em).divided_by_z();
  ZSeries b = (em - ZSeries::constant(1, 7)).divided_by_z();
  CHECK((a + b).is_zero());
  CHECK(a.order() == 6);
  for (int n = 0; n <= 6; ++n) CHECK(a[n] == -exp_coefficient(-1, n + 1));
}

TEST_CASE("multiplication truncates") {
  ZSeries z1 = ZSeries::monomial(1, 1, 1);
  CHECK((z1 * z1).is_zero());
  ZSeries lhs = poly({1, make_rational(-1, 2)}, 2) * poly({1, make_rational(1, 2)}, 2);
  CHECK(lhs == poly({1, 0, make_rational(-1, 4)}, 2));
  CHECK(ZSeries::scalar_exp(1, 6) * ZSeries::scalar_exp(-1, 6) == ZSeries::constant(1, 6));
}

TEST_CASE("mixed orders keep the minimum") {
  ZSeries a = poly({1, 2, 3, 4}, 3), b = poly({1, 1, 1, 1, 1, 1}, 5);
  CHECK((a + b).order() == 3);
  CHECK((a * b).order() == 3);
  CHECK(multiply_truncated(a, b, 1).order() == 1);
  CHECK(equal_to_order(a, poly({1, 2, 7}, 2), 1));
  CHECK_FALSE(equal_to_order(a, poly({1, 2, 7}, 2), 2));
}

TEST_CASE("scalar exponential") {
  CHECK(ZSeries::scalar_exp(0, 5) == ZSeries::constant(1, 5));
  CHECK(ZSeries::scalar_exp(1, 3) ==
        poly({1, 1, make_rational(1, 2), make_rational(1, 6)}, 3));
  for (int n = 0; n <= 6; ++n) CHECK(ZSeries::scalar_exp(make_rational(-2, 3), 6)[n] ==
                                     exp_coefficient(make_rational(-2, 3), n));
  CHECK(ZSeries::scalar_exp(-1, 6) * ZSeries::scalar_exp(1, 6) == ZSeries::constant(1, 6));
}

TEST_CASE("inverse, shift and rescale") {
  ZSeries s = poly({2, 1, -3}, 4);
  CHECK(s * s.inverse() == ZSeries::constant(1, 4));
  CHECK(ZSeries::monomial(1, 1, 4).shifted_up(2) == ZSeries::monomial(1, 3, 4));
  CHECK(ZSeries::scalar_exp(1, 5).rescaled(2) == ZSeries::scalar_exp(2, 5));
  CHECK_THROWS(poly({1, 1}, 3).divided_by_z());
  CHECK_THROWS(ZSeries::monomial(1, 1, 3).inverse());
}

TEST_CASE("printing") {
  CHECK(to_string(ZSeries(3)) == "0");
  CHECK(to_string(poly({1, make_rational(-1, 2), 0, 2}, 3)) == "1 - 1/2*z + 2*z^3");
  CHECK(to_string(ZSeries::monomial(1, 1, 3), "zt") == "zt");
}

TEST_CASE("ring axioms on random series") {
  std::mt19937 rng(7);
  for (int k = 0; k <= 8; ++k)
    for (int trial = 0; trial < 20; ++trial) {
      ZSeries a = random_series(rng, k), b = random_series(rng, k), c = random_series(rng, k);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a + (-a) == ZSeries(k));
    }
}

TEST_CASE("truncation commutes with every operation") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int big = 8, k = std::uniform_int_distribution<int>(0, 7)(rng);
    ZSeries a = random_series(rng, big), b = random_series(rng, big);
    CHECK((a * b).truncated(k) == a.truncated(k) * b.truncated(k));
    CHECK((a + b).truncated(k) == a.truncated(k) + b.truncated(k));
    Rational c = random_rational(rng);
    CHECK(ZSeries::scalar_exp(c, big).truncated(k) == ZSeries::scalar_exp(c, k));
    if (a[0] != 0) CHECK(a.inverse().truncated(k) == a.truncated(k).inverse());
  }
}

TEST_CASE("exponential is additive") {
  std::mt19937 rng(3);
  for (int k = 0; k <= 8; ++k)
    for (int trial = 0; trial < 10; ++trial) {
      Rational a = random_rational(rng), b = random_rational(rng);
      CHECK(ZSeries::scalar_exp(a, k) * ZSeries::scalar_exp(b, k) == ZSeries::scalar_exp(a + b, k));
    }
}

}
