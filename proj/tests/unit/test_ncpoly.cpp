#include "support.hpp"

using namespace testing;
using namespace hopfverify::models::np;

namespace {

Rational signed_inverse_factorial(int n, int sign) {
  Rational q{1};
  for (int k = 2; k <= n; ++k) q /= k;
  return (n % 2 == 1 && sign < 0) ? Rational(-q) : q;
}

Monomial with_powers(int pplus, std::initializer_list<Rank> rest) {
  std::vector<Rank> r(static_cast<std::size_t>(pplus), Pp);
  r.insert(r.end(), rest);
  return Monomial::from_sorted(r);
}

/// sum_n (c z)^n/n! P+^n * m, written out term by term
Element exp_times(int sign, std::initializer_list<Rank> m, int k) {
  Element out(k);
  for (int n = 0; n <= k; ++n)
    out.add_term(with_powers(n, m), ZSeries::monomial(signed_inverse_factorial(n, sign), n, k));
  return out;
}

} // namespace

TEST_SUITE("ncpoly") {

TEST_CASE("monomial order is degree first, then lexicographic") {
  CHECK(Monomial{P1} < Monomial{Pp, Pp});
  CHECK(Monomial{Pp, F1} < Monomial{P1, P2});
  CHECK(Monomial{} < Monomial{Pp});
  CHECK(Monomial::power(Pp, 3).leading_power(Pp) == 3);
  CHECK(Monomial::concat(Monomial{Pp, P1}, Monomial{P1, F2}) == Monomial{Pp, P1, P1, F2});
}

TEST_CASE("unit law and commuting translations") {
  auto p = registry(6)->bicross;
  const Algebra& A = p->algebra();
  CHECK(A.multiply(A.one(), A.gen(F1)) == A.gen(F1));
  CHECK(A.multiply(A.gen(P1), A.gen(P2)) == Element::term(Monomial{P1, P2}, ZSeries::constant(1, 6)));
  CHECK(A.multiply(A.gen(P2), A.gen(P1)) == A.multiply(A.gen(P1), A.gen(P2)));
  CHECK(A.bracket(Pp, Pm).is_zero());
  CHECK(A.bracket(E1, E2).is_zero());
}

TEST_CASE("F1 P1 in the bicross basis") {
  const int k = 6;
  const Algebra& A = registry(k)->bicross->algebra();
  // -z P1^2 + e^{-zP+} P- + z/2 (P1^2 + P2^2)
  Element bracket = exp_times(-1, {Pm}, k);
  bracket.add_term(Monomial{P1, P1}, ZSeries::monomial(make_rational(-1, 2), 1, k));
  bracket.add_term(Monomial{P2, P2}, ZSeries::monomial(make_rational(1, 2), 1, k));
  CHECK(A.bracket(F1, P1) == bracket);
  Element expected = Element::term(Monomial{P1, F1}, ZSeries::constant(1, k)) + bracket;
  CHECK(A.multiply(A.gen(F1), A.gen(P1)) == expected);
}

TEST_CASE("[K3, P+] expands (1 - e^{-zP+})/z") {
  for (int k = 0; k <= 6; ++k) {
    const Algebra& A = registry(k)->bicross->algebra();
    // coefficient of z^n P+^{n+1} is (-1)^n/(n+1)!
    Element oracle(k);
    for (int n = 0; n <= k; ++n) {
      Rational c = signed_inverse_factorial(n + 1, 1);
      oracle.add_term(Monomial::power(Pp, n + 1), ZSeries::monomial(n % 2 ? Rational(-c) : c, n, k));
    }
    CHECK(A.bracket(K3, Pp) == oracle);
    CHECK(A.bracket(K3, Pp).classical_part() == A.gen(Pp).classical_part());
  }
}

TEST_CASE("reordering a word") {
  const Algebra& C = registry(6)->classical->algebra();
  CHECK(C.multiply(C.gen(F1), C.gen(E1)) ==
        Element::term(Monomial{E1, F1}, ZSeries::constant(1, 6)) - C.gen(K3));
  CHECK(C.normal_order({{{P2, P1}, ZSeries::constant(1, 6)}}) ==
        Element::term(Monomial{P1, P2}, ZSeries::constant(1, 6)));
}

TEST_CASE("exponentials") {
  const Algebra& A = registry(6)->bicross->algebra();
  CHECK(A.exp(Element(6)) == A.one());
  Element zp = A.gen(Pp) * ZSeries::monomial(1, 1, 6);
  CHECK(A.multiply(A.exp(-zp), A.exp(zp)) == A.one());
  CHECK(A.exp(-zp) == exp_times(-1, {}, 6));
  CHECK(A.exp_generator(Pp, -1) == exp_times(-1, {}, 6));
  CHECK(A.exp(zp).classical_part() == A.one().classical_part());
  CHECK_THROWS_AS(A.exp(A.gen(Pp)), NonTruncatingExponential);
}

TEST_CASE("fuel turns runaway rewriting into an error") {
  auto m = registry(4);
  const Algebra& T = m->tilde->algebra();
  AlgebraOptions tight;
  tight.fuel = 5;
  Algebra small(T.alphabet(), T.table(), 4, tight);
  CHECK_THROWS_AS(small.multiply({small.gen(F2), small.gen(F1), small.gen(K3), small.gen(Pm),
                                  small.gen(E2), small.gen(P1)}),
                  FuelExhausted);
}

TEST_CASE("multiplication is associative") {
  std::mt19937 rng(5);
  for (int k : {0, 3, 6}) {
    auto m = registry(k);
    for (const auto& p : {m->classical, m->tilde, m->bicross, m->kinematical}) {
      const Algebra& A = p->algebra();
      for (int trial = 0; trial < 6; ++trial) {
        Element a = random_element(rng, A, 2, 3), b = random_element(rng, A, 2, 3),
                c = random_element(rng, A, 2, 3);
        CHECK(A.multiply(A.multiply(a, b), c) == A.multiply(a, A.multiply(b, c)));
      }
    }
  }
}

TEST_CASE("commutators are antisymmetric") {
  auto m = registry(6);
  for (const auto& p : {m->classical, m->tilde, m->bicross, m->kinematical}) {
    const Algebra& A = p->algebra();
    for (Rank x = 0; x < 10; ++x)
      for (Rank y = 0; y < 10; ++y) {
        CHECK((A.commutator(A.gen(x), A.gen(y)) + A.commutator(A.gen(y), A.gen(x))).is_zero());
        CHECK(A.commutator(A.gen(x), A.gen(y)) == A.bracket(x, y));
      }
  }
}

TEST_CASE("Jacobi identity at every order") {
  for (int k = 0; k <= 6; ++k) {
    auto m = registry(k);
    for (const auto& p : {m->classical, m->tilde, m->bicross, m->kinematical}) {
      Report r = check_jacobi(*p);
      CHECK_MESSAGE(r.pass, p->name(), " K=", k, ": ", r.failed_case);
      CHECK(r.cases == 120);
    }
  }
}

TEST_CASE("basis change on generators") {
  auto m = registry(6);
  CHECK(m->ba->apply(m->bicross->algebra().gen(Pp)) == m->tilde->algebra().gen(Pp));
  CHECK(m->ba->apply(m->bicross->algebra().gen(K3)) ==
        expr(*m->tilde, "exp(-zt*P+~)*(K3~ - zt*E1~*P1~ - zt*E2~*P2~)"));
  CHECK(m->ma->apply(m->tilde->algebra().gen(Pm)) == expr(*m->bicross, "exp(z*P+/2)*P-"));
  CHECK(m->ma->apply(m->tilde->algebra().gen(F1)) ==
        expr(*m->bicross, "exp(z*P+/2)*(F1 + z*(E1*P- + J3*P2)/2)"));
  for (Rank r = 0; r < 10; ++r) {
    CHECK(m->ma->apply(m->ba->apply(m->bicross->algebra().gen(r))) == m->bicross->algebra().gen(r));
    CHECK(m->ba->apply(m->ma->apply(m->tilde->algebra().gen(r))) == m->tilde->algebra().gen(r));
  }
}

TEST_CASE("deformation parameters are related by z = 2 zt") {
  auto m = registry(6);
  Element z_one = m->bicross->algebra().one() * ZSeries::monomial(1, 1, 6);
  CHECK(m->ba->apply(z_one) == m->tilde->algebra().one() * ZSeries::monomial(2, 1, 6));
  CHECK(m->ma->apply(m->ba->apply(z_one)) == z_one);
}

TEST_CASE("deformed tables reduce to the classical one") {
  auto m = registry(6);
  const Algebra& C = m->classical->algebra();
  for (const auto& p : {m->tilde, m->bicross})
    for (Rank x = 0; x < 10; ++x)
      for (Rank y = 0; y < x; ++y)
        CHECK_MESSAGE(p->algebra().bracket(x, y).classical_part() == C.bracket(x, y).classical_part(),
                      p->name(), " ", int(x), " ", int(y));
}

TEST_CASE("table() rebuilds an equal algebra") {
  const Algebra& A = registry(4)->tilde->algebra();
  Algebra copy(A.alphabet(), A.table(), A.order());
  for (Rank x = 0; x < 10; ++x)
    for (Rank y = 0; y < 10; ++y) CHECK(copy.bracket(x, y) == A.bracket(x, y));
}

}
