#include "hopfverify/bicross.hpp"

#include "support.hpp"

using namespace testing;
using namespace hopfverify::models::np;
namespace bx = hopfverify::bicross;

namespace {

const bx::CrossedProduct& crossed(int k) {
  static std::map<int, std::unique_ptr<bx::CrossedProduct>> cache;
  auto& slot = cache[k];
  if (!slot) slot = std::make_unique<bx::CrossedProduct>(k);
  return *slot;
}

} // namespace

TEST_SUITE("bicross") {

TEST_CASE("generator classes") {
  for (Rank r : {Pp, P1, P2, Pm}) CHECK(bx::is_translation(r));
  for (Rank r : {E1, E2, J3, K3, F1, F2}) CHECK(bx::is_lorentz(r));
}

TEST_CASE("action table is the bracket table") {
  const auto& cp = crossed(6);
  const Algebra& B = registry(6)->bicross->algebra();
  for (Rank a : {Pp, P1, P2, Pm})
    for (Rank h : {E1, E2, J3, K3, F1, F2}) {
      CHECK(cp.action().entry(a, h) == B.bracket(a, h));
      CHECK(bx::in_translations(cp.action().entry(a, h)));
    }
}

TEST_CASE("action on products") {
  const auto& cp = crossed(6);
  const Algebra& A = cp.carrier();
  const auto& act = cp.action();
  Element p1 = A.gen(P1);
  Element leibniz = A.multiply(act.act(p1, E1), p1) + A.multiply(p1, act.act(p1, E1));
  CHECK(act.act(A.multiply(p1, p1), E1) == leibniz);
  CHECK(act.act(act.act(A.gen(Pm), E1), E2) == act.act(A.gen(Pm), Monomial{E1, E2}));
  CHECK(act.act(A.one(), K3).is_zero());
}

TEST_CASE("coaction values") {
  const auto& cp = crossed(6);
  const Algebra& A = cp.carrier();
  Element em = A.exp_generator(Pp, -1);
  ZSeries z = ZSeries::monomial(1, 1, 6);
  CHECK(cp.coaction().entry(F1) ==
        tensor(em, A.gen(F1)) - tensor(A.gen(Pm) * z, A.gen(E1)) - tensor(A.gen(P2) * z, A.gen(J3)));
  CHECK(cp.coaction().entry(K3) ==
        tensor(em, A.gen(K3)) - tensor(A.gen(P1) * z, A.gen(E1)) - tensor(A.gen(P2) * z, A.gen(E2)));
  CHECK(cp.coaction().entry(J3) == tensor(A.one(), A.gen(J3)));
  CHECK(cp.coaction().coact(Monomial{}) == TensorElement::unit(2, 6));
  CHECK_THROWS_AS(cp.coaction().coact(Monomial{E1, F1}), std::invalid_argument);
}

TEST_CASE("crossed product brackets") {
  const auto& cp = crossed(6);
  const Algebra& A = cp.carrier();
  TensorElement c = cp.commutator(cp.generator(Pm), cp.generator(E1));
  CHECK(c == tensor(A.one(), -A.gen(P1)));
  auto p = registry(6)->bicross;
  for (Rank x = 0; x < 10; ++x)
    for (Rank y = 0; y < x; ++y)
      CHECK(cp.commutator(cp.generator(x), cp.generator(y)) == cp.to_crossed(p->algebra().bracket(x, y)));
}

TEST_CASE("crossed form round trip") {
  const auto& cp = crossed(4);
  const Algebra& B = registry(4)->bicross->algebra();
  std::mt19937 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    Element a = random_element(rng, B, 3, 3);
    CHECK(cp.from_crossed(cp.to_crossed(a)) == a);
  }
}

TEST_CASE("Hopf structure of the crossed product") {
  const auto& cp = crossed(6);
  auto p = registry(6)->bicross;
  CHECK(bx::check_module_algebra(cp, *p).pass);
  CHECK(bx::check_comodule_coalgebra(cp).pass);
  CHECK(bx::check_action_coproduct_compat(cp).pass);
  Report r = bx::reconstruct(cp, *p);
  CHECK_MESSAGE(r.pass, r.failed_case);
  CHECK(compare_presentations(*cp.reconstructed(), *p).pass);
  CHECK(r.notes.size() == 1);
}

TEST_CASE("reconstruction notices a wrong presentation") {
  const auto& cp = crossed(3);
  auto p = registry(3)->bicross;
  auto sites = mutation_sites(*p);
  for (std::size_t i = 0; i < sites.size(); i += 17) {
    auto bad = apply_mutation(*p, sites[i]);
    CHECK_FALSE_MESSAGE(bx::reconstruct(cp, *bad).pass, sites[i].label(p->alphabet()));
  }
}

}
