#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace hopfverify {

/// Exact rational number, always in lowest terms with a positive denominator.
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);
std::string to_string(const Rational& q);

/// Truncated formal power series c_0 + c_1 z + ... + c_K z^K with exact
/// rational coefficients.  K is the truncation order; every binary
/// operation on mixed orders truncates to the smaller one.
class ZSeries {
public:
  ZSeries() : coeffs_(1) {}
  explicit ZSeries(int order);

  static ZSeries constant(const Rational& c, int order);
  /// c * z^power (zero if power > order).
  static ZSeries monomial(const Rational& c, int power, int order);
  /// Sum over n of (c z)^n / n!.
  static ZSeries scalar_exp(const Rational& c, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of z^n; zero above the truncation order.
  const Rational& operator[](int n) const;
  void set(int n, const Rational& c);

  bool is_zero() const;
  /// Lowest power with a nonzero coefficient; order()+1 for the zero series.
  int valuation() const;
  /// True when every coefficient above z^0 vanishes.
  bool is_constant() const;

  ZSeries truncated(int order) const;
  /// Exact division by z.  Requires a vanishing constant term; the result
  /// has order one less than the input.
  ZSeries divided_by_z() const;
  /// Multiplication by z^k; keeps the truncation order.
  ZSeries shifted_up(int k) const;
  /// Substitution z -> lambda * z.
  ZSeries rescaled(const Rational& lambda) const;
  /// Multiplicative inverse; requires a nonzero constant term.
  ZSeries inverse() const;

  ZSeries& operator+=(const ZSeries& rhs);
  ZSeries& operator-=(const ZSeries& rhs);
  ZSeries& operator*=(const Rational& c);

  friend ZSeries operator+(ZSeries a, const ZSeries& b) { return a += b; }
  friend ZSeries operator-(ZSeries a, const ZSeries& b) { return a -= b; }
  friend ZSeries operator*(const ZSeries& a, const ZSeries& b);
  friend ZSeries multiply_truncated(const ZSeries& a, const ZSeries& b, int order);
  friend ZSeries operator*(ZSeries a, const Rational& c) { return a *= c; }
  friend ZSeries operator*(const Rational& c, ZSeries a) { return a *= c; }
  ZSeries operator-() const;

  /// Same truncation order and identical coefficients.
  friend bool operator==(const ZSeries& a, const ZSeries& b) = default;

  const std::vector<Rational>& coefficients() const { return coeffs_; }

private:
  std::vector<Rational> coeffs_;
};

/// Coefficient-wise equality after truncating both sides to order k.
bool equal_to_order(const ZSeries& a, const ZSeries& b, int k);

/// a * b truncated to `order` (which may be below both input orders).
ZSeries multiply_truncated(const ZSeries& a, const ZSeries& b, int order);

std::string to_string(const ZSeries& s, const std::string& parameter = "z");

} // namespace hopfverify
