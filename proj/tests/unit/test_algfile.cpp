#include "support.hpp"

#include <fstream>
#include <sstream>

using namespace testing;
using namespace hopfverify::models::np;

namespace {

std::string fixture(const std::string& name) { return std::string(HOPFVERIFY_FIXTURE_DIR) + "/" + name; }

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

SymbolTable table(const Alphabet& a) {
  SymbolTable s;
  s.alphabet = a;
  return s;
}

/// Line and column of the rejection, or {0, 0} if the text parses.
std::pair<int, int> error_at(const std::string& text, const SymbolTable& s) {
  try {
    evaluate(*parse_expression(text, s), registry(3)->bicross->algebra(), s);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

std::pair<int, int> parse_error_at(const std::string& text, const SymbolTable& s) {
  try {
    parse_expression(text, s);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

std::pair<int, int> document_error_at(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

const char* kHeader = "algfile 1\ngenerators\n  A 0\n  B 1\nend\n";
const char* kMaps = "coproduct\n  A = A (x) 1 + 1 (x) A\n  B = B (x) 1 + 1 (x) B\nend\n"
                    "counit\n  A = 0\n  B = 0\nend\nantipode\n  A = -A\n  B = -B\nend\n";

} // namespace

TEST_SUITE("algfile") {

TEST_CASE("expressions") {
  auto p = registry(6)->bicross;
  CHECK(texpr(*p, "exp(-z*P+) (x) F1 - z*P- (x) E1 - z*P2 (x) J3 + F1 (x) 1") == p->coproduct_of(F1));
  CHECK(expr(*p, "1") == p->algebra().one());
  CHECK(expr(*p, "[K3, P+]") == p->algebra().bracket(K3, Pp));
  CHECK(expr(*p, "2^3*P1/4") == p->algebra().gen(P1) * Rational(2));
  CHECK(expr(*p, "(P1 + P2)^2") == expr(*p, "P1^2 + 2*P1*P2 + P2^2"));
}

TEST_CASE("printing") {
  auto m = registry(6);
  CHECK(print_element(Element(6), m->bicross->alphabet()) == "0");
  CHECK(show(*m->tilde, m->tilde->coproduct_of(Pm)) == "exp(-zt*P+~) (x) P-~ + P-~ (x) exp(zt*P+~)");
  CHECK(show(*m->tilde, m->tilde->algebra().bracket(K3, Pp)) ==
        "P+~ + 1/6*zt^2*P+~^3 + 1/120*zt^4*P+~^5 + 1/5040*zt^6*P+~^7");
  CHECK(show(*m->bicross, m->bicross->coproduct_of(F1)) ==
        "exp(-z*P+) (x) F1 - z*P2 (x) J3 - z*P- (x) E1 + F1 (x) 1");
  CHECK(print_series(ZSeries::monomial(-3, 2, 4), m->tilde->alphabet()) == "-3*zt^2");
}

TEST_CASE("printed values parse back") {
  std::mt19937 rng(13);
  auto m = registry(4);
  for (const auto& p : {m->bicross, m->tilde, m->kinematical})
    for (int trial = 0; trial < 10; ++trial) {
      Element a = random_element(rng, p->algebra(), 4, 3);
      CHECK(expr(*p, show(*p, a)) == a);
      TensorElement t = p->coproduct(a);
      CHECK(texpr(*p, show(*p, t)) == t);
    }
}

TEST_CASE("expression errors carry positions") {
  SymbolTable s = table(models::null_plane_alphabet());
  CHECK(error_at("P1 + Q7", s) == std::pair{1, 6});
  CHECK(error_at("P1 + $", s) == std::pair{1, 6});
  CHECK(error_at("exp(P+)", s).first == 1);
  CHECK(error_at("P+ (x) 1 + P1", s).first == 1);
  CHECK(error_at("(P1", s).first == 1);
  CHECK(error_at("[K3, P+", s).first == 1);
  CHECK(error_at("P1/P2", s).first == 1);
  CHECK(error_at("P1 + P2", s) == std::pair{0, 0});
  SymbolTable t = table(models::null_plane_alphabet("~", "zt"));
  CHECK(parse_error_at("P+~ + z", t) == std::pair{1, 7});
}

TEST_CASE("document errors carry positions") {
  std::string ok = std::string(kHeader) + "brackets\n  [B, A] = A\nend\n" + kMaps;
  CHECK(document_error_at(ok) == std::pair{0, 0});
  CHECK(document_error_at(std::string(kHeader) + "brackets\n  [B, C] = A\nend\n" + kMaps) == std::pair{7, 7});
  CHECK(document_error_at(std::string(kHeader) + "brackets\n  [B, A] = A\n  [A, B] = A\nend\n" + kMaps).first == 8);
  CHECK(document_error_at(std::string(kHeader) + "brackets\nend\n").first > 0);
  CHECK(document_error_at("algfile 2\n").first == 1);
  CHECK(document_error_at(std::string(kHeader) + "brackets\n  [B, A] = A\n" + kMaps).first > 0);
}

TEST_CASE("empty bracket section gives an abelian algebra") {
  auto p = instantiate(parse_document(std::string(kHeader) + "brackets\nend\n" + kMaps), 3);
  CHECK(p->algebra().bracket(1, 0).is_zero());
  CHECK(check_jacobi(*p).pass);
  for (const Report& r : run_hopf_suite(*p)) CHECK(r.pass);
}

TEST_CASE("shipped fixtures equal the built-in presentations") {
  auto m = registry(6);
  for (const auto& [file, p] : std::vector<std::pair<std::string, PresentationPtr>>{
           {"classical.alg", m->classical}, {"tilde.alg", m->tilde}, {"bicross.alg", m->bicross},
           {"kinematical.alg", m->kinematical}}) {
    auto doc = load_document(fixture(file));
    Report r = compare_presentations(*instantiate(doc), *p);
    CHECK_MESSAGE(r.pass, file, ": ", r.failed_case, " ", r.witness);
  }
}

TEST_CASE("named elements of the fixtures") {
  auto bicross = load_document(fixture("bicross.alg"));
  auto p = instantiate(bicross);
  SymbolTable s = bicross.symbols();
  CHECK(as_element(evaluate_text("M2", s, 6, [&](int k) -> const Algebra& {
          static std::map<int, PresentationPtr> keep;
          auto& slot = keep[k];
          if (!slot) slot = instantiate(bicross, k);
          return slot->algebra();
        })) == models::mass_casimir(registry(6)->bicross->algebra()));
  auto tilde = load_document(fixture("tilde.alg"));
  SymbolTable t = tilde.symbols();
  CHECK(as_element(evaluate(*parse_expression("Wt", t), registry(6)->tilde->algebra(), t))
            .truncated(5) == models::tilde_w_plus(registry(6)->tilde->algebra()).truncated(5));
}

TEST_CASE("print then parse is the identity on fixtures") {
  for (const char* file : {"classical.alg", "tilde.alg", "bicross.alg", "kinematical.alg", "broken.alg"}) {
    auto doc = load_document(fixture(file));
    std::string once = print_document(doc);
    auto again = parse_document(once);
    CHECK(print_document(again) == once);
    CHECK(compare_presentations(*instantiate(again), *instantiate(doc)).pass);
  }
}

TEST_CASE("built presentations print as loadable documents") {
  auto m = registry(3);
  for (const auto& p : {m->classical, m->tilde, m->bicross, m->kinematical}) {
    auto q = instantiate(parse_document(print_presentation(*p)));
    CHECK(compare_presentations(*q, *p).pass);
  }
}

TEST_CASE("the broken fixture loads and then fails Jacobi") {
  auto p = instantiate(load_document(fixture("broken.alg")));
  Report r = check_jacobi(*p);
  CHECK_FALSE(r.pass);
  CHECK(!r.witness.empty());
}

TEST_CASE("fuzzed input never escapes as anything but a parse error") {
  std::mt19937 rng(17);
  SymbolTable s = table(models::null_plane_alphabet());
  const std::vector<std::string> pieces = {"P+", "P1", "F1", "z", "(", ")", "[", "]", ",", "+", "-", "*",
                                           "/", "^", "2", "1/3", "exp", "(x)", " ", "~", "#", "K3"};
  auto p = registry(3)->bicross;
  for (int trial = 0; trial < 2000; ++trial) {
    std::string text;
    for (int n = std::uniform_int_distribution<int>(0, 12)(rng); n > 0; --n)
      text += pieces[std::uniform_int_distribution<std::size_t>(0, pieces.size() - 1)(rng)];
    try {
      auto e = parse_expression(text, s);
      evaluate(*e, p->algebra(), s);
    } catch (const ParseError&) {
    } catch (const std::exception& e) {
      FAIL_CHECK("'" << text << "' threw " << e.what());
    }
  }
  std::string base = read(fixture("bicross.alg"));
  for (int trial = 0; trial < 300; ++trial) {
    std::string text = base;
    for (int cut = 0; cut < 3; ++cut) {
      std::size_t at = std::uniform_int_distribution<std::size_t>(0, text.size() - 1)(rng);
      text.erase(at, std::uniform_int_distribution<std::size_t>(1, 8)(rng));
    }
    try {
      parse_document(text);
    } catch (const ParseError&) {
    } catch (const std::exception& e) {
      FAIL_CHECK("mutated document threw " << e.what());
    }
  }
}

}
