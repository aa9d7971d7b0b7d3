#include "hopfverify/scalars.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hopfverify {

namespace {
const Rational kZero{0};
}

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

ZSeries::ZSeries(int order) {
  if (order < 0) throw std::domain_error("negative truncation order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

ZSeries ZSeries::constant(const Rational& c, int order) {
  ZSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

ZSeries ZSeries::monomial(const Rational& c, int power, int order) {
  ZSeries s(order);
  if (power >= 0 && power <= order) s.coeffs_[power] = c;
  return s;
}

ZSeries ZSeries::scalar_exp(const Rational& c, int order) {
  ZSeries s(order);
  Rational term{1};
  for (int n = 0; n <= order; ++n) {
    s.coeffs_[n] = term;
    term *= c;
    term /= n + 1;
  }
  return s;
}

const Rational& ZSeries::operator[](int n) const {
  if (n < 0 || n > order()) return kZero;
  return coeffs_[n];
}

void ZSeries::set(int n, const Rational& c) {
  if (n < 0 || n > order()) return;
  coeffs_[n] = c;
}

bool ZSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return sgn(c) == 0; });
}

int ZSeries::valuation() const {
  for (int n = 0; n <= order(); ++n)
    if (sgn(coeffs_[n]) != 0) return n;
  return order() + 1;
}

bool ZSeries::is_constant() const {
  for (int n = 1; n <= order(); ++n)
    if (sgn(coeffs_[n]) != 0) return false;
  return true;
}

ZSeries ZSeries::truncated(int order) const {
  if (order >= this->order()) return *this;
  ZSeries s(order);
  std::copy(coeffs_.begin(), coeffs_.begin() + order + 1, s.coeffs_.begin());
  return s;
}

ZSeries ZSeries::divided_by_z() const {
  if (sgn(coeffs_[0]) != 0)
    throw std::domain_error("division by z of a series with nonzero constant term");
  if (order() == 0) throw std::domain_error("division by z exhausts truncation order 0");
  ZSeries s(order() - 1);
  std::copy(coeffs_.begin() + 1, coeffs_.end(), s.coeffs_.begin());
  return s;
}

ZSeries ZSeries::shifted_up(int k) const {
  ZSeries s(order());
  for (int n = 0; n + k <= order(); ++n) s.coeffs_[n + k] = coeffs_[n];
  return s;
}

ZSeries ZSeries::rescaled(const Rational& lambda) const {
  ZSeries s(*this);
  Rational power{1};
  for (int n = 0; n <= order(); ++n) {
    s.coeffs_[n] *= power;
    power *= lambda;
  }
  return s;
}

ZSeries ZSeries::inverse() const {
  if (sgn(coeffs_[0]) == 0) throw std::domain_error("series with zero constant term is not invertible");
  // b_0 = 1/a_0, b_n = -(sum_{k=1..n} a_k b_{n-k}) / a_0
  ZSeries b(order());
  b.coeffs_[0] = 1 / coeffs_[0];
  for (int n = 1; n <= order(); ++n) {
    Rational acc{0};
    for (int k = 1; k <= n; ++k) acc += coeffs_[k] * b.coeffs_[n - k];
    b.coeffs_[n] = -acc / coeffs_[0];
  }
  return b;
}

ZSeries& ZSeries::operator+=(const ZSeries& rhs) {
  if (rhs.order() < order()) coeffs_.resize(rhs.coeffs_.size());
  for (int n = 0; n <= order(); ++n) coeffs_[n] += rhs.coeffs_[n];
  return *this;
}

ZSeries& ZSeries::operator-=(const ZSeries& rhs) {
  if (rhs.order() < order()) coeffs_.resize(rhs.coeffs_.size());
  for (int n = 0; n <= order(); ++n) coeffs_[n] -= rhs.coeffs_[n];
  return *this;
}

ZSeries& ZSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

ZSeries multiply_truncated(const ZSeries& a, const ZSeries& b, int order) {
  order = std::min({order, a.order(), b.order()});
  ZSeries out(order);
  const auto& ac = a.coefficients();
  const auto& bc = b.coefficients();
  for (int i = 0; i <= order; ++i) {
    if (sgn(ac[i]) == 0) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (sgn(bc[j]) == 0) continue;
      out.coeffs_[i + j] += ac[i] * bc[j];
    }
  }
  return out;
}

ZSeries operator*(const ZSeries& a, const ZSeries& b) {
  return multiply_truncated(a, b, std::min(a.order(), b.order()));
}

ZSeries ZSeries::operator-() const {
  ZSeries s(*this);
  for (auto& x : s.coeffs_) x = -x;
  return s;
}

bool equal_to_order(const ZSeries& a, const ZSeries& b, int k) {
  for (int n = 0; n <= k; ++n)
    if (a[n] != b[n]) return false;
  return true;
}

std::string to_string(const ZSeries& s, const std::string& parameter) {
  std::ostringstream os;
  bool first = true;
  for (int n = 0; n <= s.order(); ++n) {
    const Rational& c = s[n];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (n == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << parameter;
    if (n > 1) os << "^" << n;
  }
  if (first) os << "0";
  return os.str();
}

} // namespace hopfverify
