#include "support.hpp"

using namespace testing;
using namespace hopfverify::models::np;

TEST_SUITE("tensorspace") {

TEST_CASE("leg-wise products") {
  auto p = registry(6)->bicross;
  const Algebra& A = p->algebra();
  Element em = A.exp_generator(Pp, -1);
  TensorElement t = tensor(em, A.gen(Pm)) + tensor(A.gen(F1), A.gen(P1));
  CHECK(tensor_mul(A, TensorElement::unit(2, 6), t) == t);
  CHECK(tensor_mul(A, t, TensorElement::unit(2, 6)) == t);
  CHECK(tensor_mul(A, tensor(em, A.gen(Pm)), tensor(A.gen(P1), A.one())) ==
        tensor(A.multiply(em, A.gen(P1)), A.gen(Pm)));
  CHECK(tensor_commutator(A, p->coproduct(A.gen(Pm)), p->coproduct(A.gen(P1))).is_zero());
}

TEST_CASE("legs never interact") {
  const Algebra& A = registry(6)->bicross->algebra();
  TensorElement f = tensor(A.gen(F1), A.one()), q = tensor(A.one(), A.gen(P1));
  CHECK(tensor_mul(A, f, q) == tensor(A.gen(F1), A.gen(P1)));
  CHECK(tensor_mul(A, q, f) == tensor(A.gen(F1), A.gen(P1)));
  CHECK(tensor_commutator(A, f, q).is_zero());
}

TEST_CASE("flip") {
  auto p = registry(6)->bicross;
  const Algebra& A = p->algebra();
  CHECK(flip(tensor(A.gen(K3), A.one())) == tensor(A.one(), A.gen(K3)));
  Element em = A.exp_generator(Pp, -1);
  CHECK(flip(p->coproduct_of(Pm)) == tensor(A.gen(Pm), em) + tensor(A.one(), A.gen(Pm)));
  CHECK(flip(flip(p->coproduct_of(F1))) == p->coproduct_of(F1));
}

TEST_CASE("embedding into the third tensor power") {
  const Algebra& A = registry(4)->bicross->algebra();
  Element x = A.gen(E1), y = A.gen(P2);
  CHECK(embed(tensor(x, y), LegPair::L12) == tensor(x, y, A.one()));
  CHECK(embed(tensor(x, y), LegPair::L13) == tensor(x, A.one(), y));
  CHECK(embed(tensor(x, y), LegPair::L23) == tensor(A.one(), x, y));
  for (auto legs : {LegPair::L12, LegPair::L13, LegPair::L23})
    CHECK(embed(TensorElement::unit(2, 4), legs) == TensorElement::unit(3, 4));
  CHECK(parse_leg_pair("13") == LegPair::L13);
}

TEST_CASE("embedding respects products") {
  auto p = registry(4)->tilde;
  const Algebra& A = p->algebra();
  TensorElement a = p->coproduct_of(K3), b = p->coproduct_of(F2);
  for (auto legs : {LegPair::L12, LegPair::L13, LegPair::L23})
    CHECK(embed(tensor_mul(A, a, b), legs) == tensor_mul(A, embed(a, legs), embed(b, legs)));
}

TEST_CASE("exp(-z P+) is group-like") {
  for (int k = 0; k <= 6; ++k) {
    auto p = registry(k)->bicross;
    const Algebra& A = p->algebra();
    Element em = A.exp_generator(Pp, -1);
    TensorElement d = p->coproduct(A.gen(Pp)) * ZSeries::monomial(-1, 1, k);
    CHECK(tensor_exp(A, d) == tensor(em, em));
    CHECK(p->coproduct(em) == tensor(em, em));
  }
}

TEST_CASE("maps on one leg") {
  auto p = registry(6)->bicross;
  const Algebra& A = p->algebra();
  auto eps = [&](const Monomial& m) { return p->counit(m); };
  for (Rank r = 0; r < 10; ++r) {
    CHECK(as_element(contract_leg(p->coproduct_of(r), 0, eps)) == A.gen(r));
    CHECK(as_element(contract_leg(p->coproduct_of(r), 1, eps)) == A.gen(r));
  }
  auto delta = [&](const Monomial& m) { return p->coproduct(m); };
  TensorElement left = apply_on_leg(p->coproduct_of(K3), 0, delta);
  CHECK(left.arity() == 3);
  CHECK(left == apply_on_leg(p->coproduct_of(K3), 1, delta));
  auto s = [&](const Monomial& m) { return p->antipode(m); };
  CHECK(multiply_legs(A, apply_on_leg(p->coproduct_of(F1), 0, s)).is_zero());
}

TEST_CASE("arity is enforced") {
  const Algebra& A = registry(2)->classical->algebra();
  TensorElement two = tensor(A.gen(P1), A.gen(P2));
  TensorElement three = tensor(A.gen(P1), A.gen(P2), A.one());
  CHECK_THROWS_AS(two + three, ArityMismatch);
  CHECK_THROWS_AS(tensor_mul(A, two, three), ArityMismatch);
}

TEST_CASE("morphisms act on every leg") {
  auto m = registry(4);
  const Algebra& B = m->bicross->algebra();
  TensorElement d = m->bicross->coproduct_of(Pm);
  TensorElement image = apply_morphism(*m->ba, d);
  TensorElement legwise = tensor(m->ba->apply(B.exp_generator(Pp, -1)), m->ba->apply(B.gen(Pm))) +
                          tensor(m->ba->apply(B.gen(Pm)), m->tilde->algebra().one());
  CHECK(image == legwise);
}

}
