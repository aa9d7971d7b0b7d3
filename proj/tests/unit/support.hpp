#pragma once

#include "hopfverify/algfile.hpp"
#include "hopfverify/models.hpp"

#include <doctest.h>

#include <random>

namespace testing {

using namespace hopfverify;

/// Shared registries; building them is the slow part of most tests.
inline std::shared_ptr<const models::ModelRegistry> registry(int k) {
  static std::map<int, std::shared_ptr<const models::ModelRegistry>> cache;
  auto& slot = cache[k];
  if (!slot) slot = models::ModelRegistry::build(k);
  return slot;
}

inline Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
  return make_rational(num(rng), den(rng));
}

inline ZSeries random_series(std::mt19937& rng, int order) {
  ZSeries s(order);
  for (int n = 0; n <= order; ++n) s.set(n, random_rational(rng));
  return s;
}

/// Random element with up to `terms` monomials of degree <= `degree`.
inline Element random_element(std::mt19937& rng, const Algebra& A, int terms, int degree) {
  std::uniform_int_distribution<int> gen(0, static_cast<int>(A.alphabet().size()) - 1);
  std::uniform_int_distribution<int> deg(0, degree);
  Element out(A.order());
  for (int t = 0; t < terms; ++t) {
    Element m = A.one();
    for (int d = deg(rng); d > 0; --d) m = A.multiply(m, A.gen(static_cast<Rank>(gen(rng))));
    ZSeries c = ZSeries::monomial(random_rational(rng), std::uniform_int_distribution<int>(0, 2)(rng),
                                  A.order());
    out += m * c;
  }
  return out;
}

/// Parses and evaluates text in a presentation's own alphabet.
inline Element expr(const HopfPresentation& p, const std::string& text) {
  SymbolTable s;
  s.alphabet = p.alphabet();
  return as_element(evaluate(*parse_expression(text, s), p.algebra(), s));
}

inline TensorElement texpr(const HopfPresentation& p, const std::string& text) {
  SymbolTable s;
  s.alphabet = p.alphabet();
  return evaluate(*parse_expression(text, s), p.algebra(), s);
}

inline std::string show(const HopfPresentation& p, const Element& a) {
  return print_element(a, p.alphabet());
}

inline std::string show(const HopfPresentation& p, const TensorElement& a) {
  return print_tensor(a, p.alphabet());
}

} // namespace testing
