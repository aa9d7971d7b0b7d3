#include "support.hpp"

using namespace testing;
using namespace hopfverify::models::np;

namespace {

/// Evaluates text written in bicross generators, raising the order for divisions by z.
Element bicross_text(const std::string& text, int k) {
  SymbolTable s;
  s.alphabet = models::null_plane_alphabet();
  return as_element(evaluate_text(text, s, k, [](int order) -> const Algebra& {
    return registry(order)->bicross->algebra();
  }));
}

// Pauli-Lubanski components and Casimirs as printed for the bicrossproduct basis.
const char* kM2 = "2*P-*(exp(z*P+) - 1)/z - (P1^2 + P2^2)*exp(z*P+)";
const char* kW13 = "K3*P1*exp(z*P+) + E1*P- - F1*(exp(z*P+) - 1)/z"
                   " + z/2*(E1*P1 + E2*P2)*P1*exp(z*P+) - J3*P2*(exp(z*P+) - 1)/2";
const char* kW23 = "K3*P2*exp(z*P+) + E2*P- - F2*(exp(z*P+) - 1)/z"
                   " + z/2*(E1*P1 + E2*P2)*P2*exp(z*P+) + J3*P1*(exp(z*P+) - 1)/2";
const char* kWm = "(F1*P2 - F2*P1)*exp(z*P+) + J3*P-*(exp(z*P+) + 1)/2"
                  " + z/2*(E1*P2 - E2*P1)*P-*exp(z*P+) + z/2*J3*(P1^2 + P2^2)*exp(z*P+)";
const char* kWp = "(E1*P2 - E2*P1)*exp(z*P+/2) + J3*(exp(z*P+/2) - exp(-z*P+/2))/z";

} // namespace

TEST_SUITE("models") {

TEST_CASE("kinematical basis") {
  auto m = registry(6);
  CHECK(check_jacobi(*m->kinematical).pass);
  CHECK(models::check_lie_homomorphism(m->aa).pass);
  CHECK(models::check_lie_homomorphism(m->aa_inverse).pass);
  CHECK(models::check_morphism_roundtrip(m->aa, m->aa_inverse).pass);
  CHECK(models::check_morphism_roundtrip(m->aa_inverse, m->aa).pass);
  const Algebra& T = m->kinematical->algebra();
  CHECK(m->aa->apply(m->classical->algebra().gen(Pm)) == T.gen("H") - T.gen("P3"));
}

TEST_CASE("bicross and tilde bases are isomorphic") {
  auto m = registry(6);
  CHECK(models::check_morphism_roundtrip(m->ba, m->ma).pass);
  CHECK(models::check_morphism_roundtrip(m->ma, m->ba).pass);
  Report r = models::check_hopf_isomorphism(*m);
  CHECK_MESSAGE(r.pass, r.failed_case);
  CHECK(models::check_w_plus_transport(*m).pass);

  // Delta of the image of P- in the tilde basis, pulled back
  const Algebra& B = m->bicross->algebra();
  Element image = m->ba->apply(B.gen(Pm));
  TensorElement back = apply_morphism(*m->ma, m->tilde->coproduct(image));
  CHECK(back == tensor(B.exp_generator(Pp, -1), B.gen(Pm)) + tensor(B.gen(Pm), B.one()));
  CHECK(apply_morphism(*m->ma, m->tilde->coproduct(m->ba->apply(B.gen(Pp)))) == m->bicross->coproduct_of(Pp));
}

TEST_CASE("mass Casimir matches its printed form") {
  for (int k : {0, 3, 6}) CHECK(models::mass_casimir(registry(k)->bicross->algebra()) == bicross_text(kM2, k));
  const Algebra& B = registry(6)->bicross->algebra();
  Element m2 = models::mass_casimir(B);
  CHECK(m2.classical_part() ==
        (B.multiply(B.gen(Pp), B.gen(Pm)) * Rational(2) - B.multiply(B.gen(P1), B.gen(P1)) -
         B.multiply(B.gen(P2), B.gen(P2)))
            .classical_part());
  CHECK(B.commutator(m2, B.gen(P1)).is_zero());
  CHECK(B.commutator(m2, B.gen(K3)).is_zero());
  CHECK(models::check_centrality("M2", m2, *registry(6)->bicross).pass);
}

TEST_CASE("Pauli-Lubanski components match their printed form") {
  for (int k : {0, 2, 4}) {
    auto w = models::pl_components(registry(k)->bicross->algebra());
    CHECK(w.w13 == bicross_text(kW13, k));
    CHECK(w.w23 == bicross_text(kW23, k));
    CHECK(w.wm == bicross_text(kWm, k));
    CHECK(w.wp == bicross_text(kWp, k));
  }
  const Algebra& B = registry(6)->bicross->algebra();
  CHECK(models::pl_components(B).wp.truncated(0) == bicross_text("E1*P2 - E2*P1 + J3*P+", 0));
}

TEST_CASE("W2 is central") {
  const int k = 3;
  const Algebra& B = registry(k)->bicross->algebra();
  Element w2 = models::pl_square(B);
  std::string text = std::string("(") + kW13 + ")^2 + (" + kW23 + ")^2 + (exp(z*P+/2) + exp(-z*P+/2))/2*((" +
                     kWp + ")*(" + kWm + ") + (" + kWm + ")*(" + kWp + ")) - z^2*(" + kM2 + ")*(" + kWp +
                     ")^2/4";
  CHECK(w2 == bicross_text(text, k));
  CHECK(B.commutator(w2, B.gen(F1)).is_zero());
  CHECK(models::check_centrality("W2", w2, *registry(k)->bicross).pass);
}

TEST_CASE("R-matrix") {
  auto p = registry(4)->bicross;
  CHECK(models::rmatrix_exponents(p->algebra()).size() == 6);
  TensorElement r = models::build_rmatrix(p->algebra());
  CHECK(r.classical_part() == TensorElement::unit(2, 4).classical_part());
  CHECK(tensor_mul(p->algebra(), r, models::build_rmatrix_inverse(p->algebra())) == TensorElement::unit(2, 4));
  CHECK(models::check_rmatrix_inverse(*p).pass);
  CHECK(models::check_intertwining(*p).pass);
  CHECK(models::check_triangularity(*p).pass);
  CHECK(models::check_qybe(*p).pass);

  const Algebra& A = p->algebra();
  TensorElement lhs = tensor_mul(A, tensor_mul(A, r, p->coproduct_of(F1)), models::build_rmatrix_inverse(A));
  CHECK(lhs == flip(p->coproduct_of(F1)));
}

TEST_CASE("classical limits") {
  for (int k : {0, 6}) CHECK(models::check_classical_limits(*registry(k)).pass);
}

TEST_CASE("truncated registries equal freshly built ones") {
  auto m = registry(6)->truncated(3);
  auto fresh = registry(3);
  CHECK(compare_presentations(*m->tilde, *fresh->tilde).pass);
  CHECK(compare_presentations(*m->bicross, *fresh->bicross).pass);
  CHECK(m->ba->apply(m->bicross->algebra().gen(F1)) == fresh->ba->apply(fresh->bicross->algebra().gen(F1)));
}

TEST_CASE("mutation sweep kills every mutant") {
  Report r = models::check_mutation_sweep(*registry(2));
  CHECK_MESSAGE(r.pass, r.failed_case);
  CHECK(r.cases > 500);
}

TEST_CASE("a corrupted bicross table breaks the isomorphism") {
  auto m = registry(3);
  auto sites = mutation_sites(*m->bicross);
  auto bad = apply_mutation(*m->bicross, sites.front());
  auto mutated = models::with_presentation(*m, "bicross", bad);
  bool caught = !models::check_hopf_isomorphism(*mutated).pass ||
                !models::check_morphism_roundtrip(mutated->ba, mutated->ma).pass;
  CHECK(caught);
}

}
