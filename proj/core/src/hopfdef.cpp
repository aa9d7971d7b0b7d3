#include "hopfverify/hopfdef.hpp"

#include "hopfverify/algfile.hpp"

#include <chrono>
#include <mutex>
#include <random>

namespace hopfverify {

HopfPresentation::HopfPresentation(std::string name, AlgebraPtr algebra,
                                   std::vector<TensorElement> coproduct,
                                   std::vector<ZSeries> counit, std::vector<Element> antipode)
    : name_(std::move(name)),
      algebra_(std::move(algebra)),
      coproduct_(std::move(coproduct)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)) {
  std::size_t n = algebra_->alphabet().size();
  if (coproduct_.size() != n || counit_.size() != n || antipode_.size() != n)
    throw std::invalid_argument("presentation '" + name_ +
                                "': structure maps must be given on every generator");
  int k = algebra_->order();
  for (auto& d : coproduct_) {
    if (d.arity() != 2) throw ArityMismatch("coproduct values must have arity 2");
    for (const auto& [legs, c] : d.terms())
      for (const auto& m : legs)
        for (Rank r : m.ranks())
          if (r >= n) throw std::out_of_range("coproduct references unknown generator");
    d = d.truncated(k);
  }
  for (auto& e : counit_) e = e.truncated(k);
  for (auto& s : antipode_) {
    check_alphabet(s, algebra_->alphabet());
    s = s.truncated(k);
  }
}

TensorElement HopfPresentation::coproduct(const Monomial& m) const {
  if (m.empty()) return TensorElement::unit(2, order());
  if (m.degree() == 1) return coproduct_[m[0]];
  {
    std::shared_lock lock(mutex_);
    if (auto it = delta_cache_.find(m.key()); it != delta_cache_.end()) return *it->second;
  }
  auto value = std::make_shared<const TensorElement>(
      tensor_mul(*algebra_, coproduct(m.without_last()), coproduct_[m.back()]));
  std::unique_lock lock(mutex_);
  return *delta_cache_.emplace(m.key(), std::move(value)).first->second;
}

TensorElement HopfPresentation::coproduct(const Element& a) const {
  TensorElement out(2, std::min(a.order(), order()));
  for (const auto& [m, c] : a.terms()) out.add_scaled(coproduct(m), c);
  return out;
}

ZSeries HopfPresentation::counit(const Monomial& m) const {
  ZSeries s = ZSeries::constant(1, order());
  for (Rank r : m.ranks()) s = s * counit_[r];
  return s;
}

ZSeries HopfPresentation::counit(const Element& a) const {
  ZSeries s(std::min(a.order(), order()));
  for (const auto& [m, c] : a.terms()) s += multiply_truncated(counit(m), c, s.order());
  return s;
}

Element HopfPresentation::antipode(const Monomial& m) const {
  if (m.empty()) return algebra_->one();
  if (m.degree() == 1) return antipode_[m[0]];
  {
    std::shared_lock lock(mutex_);
    if (auto it = gamma_cache_.find(m.key()); it != gamma_cache_.end()) return *it->second;
  }
  auto value = std::make_shared<const Element>(
      algebra_->multiply(antipode_[m.back()], antipode(m.without_last())));
  std::unique_lock lock(mutex_);
  return *gamma_cache_.emplace(m.key(), std::move(value)).first->second;
}

Element HopfPresentation::antipode(const Element& a) const {
  Element out(std::min(a.order(), order()));
  for (const auto& [m, c] : a.terms()) out.add_scaled(antipode(m), c);
  return out;
}

std::shared_ptr<const HopfPresentation> HopfPresentation::truncated(int order) const {
  if (order > this->order())
    throw std::domain_error("cannot raise the truncation order of a built presentation");
  auto algebra = std::make_shared<const Algebra>(alphabet(), algebra_->table(), order,
                                                 algebra_->options());
  std::vector<TensorElement> d;
  std::vector<ZSeries> e;
  std::vector<Element> s;
  for (const auto& x : coproduct_) d.push_back(x.truncated(order));
  for (const auto& x : counit_) e.push_back(x.truncated(order));
  for (const auto& x : antipode_) s.push_back(x.truncated(order));
  return std::make_shared<const HopfPresentation>(name_, std::move(algebra), std::move(d),
                                                  std::move(e), std::move(s));
}

std::shared_ptr<const HopfPresentation> HopfPresentation::renamed(std::string name) const {
  return std::make_shared<const HopfPresentation>(std::move(name), algebra_, coproduct_, counit_,
                                                  antipode_);
}

// ------------------------------------------------------------------ checks

double seconds_now() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

CaseRecorder::CaseRecorder(std::string id, const std::string& presentation, int order,
                           const CheckOptions& options)
    : stop_early_(options.stop_at_first_failure), start_(seconds_now()) {
  report_.id = std::move(id);
  report_.presentation = presentation;
  report_.order = order;
}

bool CaseRecorder::record(const std::string& label, bool ok,
                          const std::function<std::string()>& witness) {
  ++report_.cases;
  if (ok) return true;
  ++report_.failures;
  if (report_.pass) {
    report_.pass = false;
    report_.failed_case = label;
    report_.witness = witness();
  }
  if (stop_early_) stopped_ = true;
  return !stopped_;
}

Report CaseRecorder::finish() {
  report_.seconds = seconds_now() - start_;
  return report_;
}

std::string case_label(const Alphabet& alphabet, std::initializer_list<Rank> ranks) {
  std::string s = "(";
  bool first = true;
  for (Rank r : ranks) {
    if (!first) s += ", ";
    first = false;
    s += alphabet[r].name;
  }
  return s + ")";
}

std::vector<std::pair<std::string, Element>> sample_elements(const HopfPresentation& p,
                                                             const CheckOptions& options) {
  const Algebra& A = p.algebra();
  const Alphabet& alpha = p.alphabet();
  std::vector<std::pair<std::string, Element>> out;
  for (Rank r = 0; r < alpha.size(); ++r) out.emplace_back(alpha[r].name, A.gen(r));
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(alpha.size()) - 1);
  for (int i = 0; i < options.samples; ++i) {
    auto x = static_cast<Rank>(pick(rng));
    auto y = static_cast<Rank>(pick(rng));
    out.emplace_back(alpha[x].name + "*" + alpha[y].name, A.multiply(A.gen(x), A.gen(y)));
  }
  return out;
}

namespace {

int common_order(int a, int b) { return std::min(a, b); }

bool same(const Element& a, const Element& b) {
  int k = common_order(a.order(), b.order());
  return equal_to_order(a, b, k);
}

bool same(const TensorElement& a, const TensorElement& b) {
  int k = common_order(a.order(), b.order());
  return equal_to_order(a, b, k);
}

} // namespace

Report check_jacobi(const HopfPresentation& p, const CheckOptions& options) {
  const Algebra& A = p.algebra();
  const Alphabet& alpha = p.alphabet();
  CaseRecorder rec("jacobi", p.name(), p.order(), options);
  auto n = static_cast<Rank>(alpha.size());
  for (Rank i = 0; i < n && !rec.stopped(); ++i)
    for (Rank j = i + 1; j < n && !rec.stopped(); ++j)
      for (Rank k = j + 1; k < n && !rec.stopped(); ++k) {
        Element x = A.gen(i), y = A.gen(j), z = A.gen(k);
        Element r = A.commutator(A.bracket(i, j), z) + A.commutator(A.bracket(j, k), x) +
                    A.commutator(A.bracket(k, i), y);
        rec.record(case_label(alpha, {i, j, k}), r.is_zero(),
                   [&] { return print_element(r, alpha); });
      }
  return rec.finish();
}

Report check_coproduct_homomorphism(const HopfPresentation& p, const CheckOptions& options) {
  const Algebra& A = p.algebra();
  const Alphabet& alpha = p.alphabet();
  CaseRecorder rec("coproduct_homomorphism", p.name(), p.order(), options);
  auto n = static_cast<Rank>(alpha.size());
  for (Rank hi = 1; hi < n && !rec.stopped(); ++hi)
    for (Rank lo = 0; lo < hi && !rec.stopped(); ++lo) {
      TensorElement lhs = p.coproduct(A.bracket_entry(hi, lo));
      TensorElement rhs = tensor_commutator(A, p.coproduct_of(hi), p.coproduct_of(lo));
      rec.record(case_label(alpha, {hi, lo}), same(lhs, rhs),
                 [&] { return print_tensor(lhs - rhs, alpha); });
    }
  return rec.finish();
}

Report check_coassociativity(const HopfPresentation& p, const CheckOptions& options) {
  const Alphabet& alpha = p.alphabet();
  CaseRecorder rec("coassociativity", p.name(), p.order(), options);
  TensorMap delta = [&p](const Monomial& m) { return p.coproduct(m); };
  for (const auto& [label, x] : sample_elements(p, options)) {
    TensorElement d = p.coproduct(x);
    TensorElement left = apply_on_leg(d, 0, delta);
    TensorElement right = apply_on_leg(d, 1, delta);
    if (!rec.record(label, same(left, right), [&] { return print_tensor(left - right, alpha); }))
      break;
  }
  return rec.finish();
}

Report check_counit(const HopfPresentation& p, const CheckOptions& options) {
  const Algebra& A = p.algebra();
  const Alphabet& alpha = p.alphabet();
  CaseRecorder rec("counit", p.name(), p.order(), options);
  auto eps = [&p](const Monomial& m) { return p.counit(m); };
  for (const auto& [label, x] : sample_elements(p, options)) {
    TensorElement d = p.coproduct(x);
    Element left = as_element(contract_leg(d, 0, eps));
    Element right = as_element(contract_leg(d, 1, eps));
    if (!rec.record("(eps x id) " + label, same(left, x),
                    [&] { return print_element(left - x, alpha); }))
      break;
    if (!rec.record("(id x eps) " + label, same(right, x),
                    [&] { return print_element(right - x, alpha); }))
      break;
  }
  auto n = static_cast<Rank>(alpha.size());
  for (Rank hi = 1; hi < n && !rec.stopped(); ++hi)
    for (Rank lo = 0; lo < hi && !rec.stopped(); ++lo) {
      ZSeries e = p.counit(A.bracket_entry(hi, lo));
      rec.record("eps" + case_label(alpha, {hi, lo}), e.is_zero(),
                 [&] { return to_string(e, alpha.parameter()); });
    }
  return rec.finish();
}

Report check_antipode(const HopfPresentation& p, const CheckOptions& options) {
  const Algebra& A = p.algebra();
  const Alphabet& alpha = p.alphabet();
  CaseRecorder rec("antipode", p.name(), p.order(), options);
  ElementMap gamma = [&p](const Monomial& m) { return p.antipode(m); };
  for (const auto& [label, x] : sample_elements(p, options)) {
    TensorElement d = p.coproduct(x);
    Element expected = Element::scalar(p.counit(x));
    Element left = multiply_legs(A, apply_on_leg(d, 0, gamma));
    Element right = multiply_legs(A, apply_on_leg(d, 1, gamma));
    if (!rec.record("m(S x id) " + label, same(left, expected),
                    [&] { return print_element(left - expected, alpha); }))
      break;
    if (!rec.record("m(id x S) " + label, same(right, expected),
                    [&] { return print_element(right - expected, alpha); }))
      break;
  }
  auto n = static_cast<Rank>(alpha.size());
  for (Rank hi = 1; hi < n && !rec.stopped(); ++hi)
    for (Rank lo = 0; lo < hi && !rec.stopped(); ++lo) {
      Element lhs = p.antipode(A.bracket_entry(hi, lo));
      Element rhs = A.commutator(p.antipode_of(lo), p.antipode_of(hi));
      rec.record("S" + case_label(alpha, {hi, lo}), same(lhs, rhs),
                 [&] { return print_element(lhs - rhs, alpha); });
    }
  return rec.finish();
}

std::vector<Report> run_hopf_suite(const HopfPresentation& p, const CheckOptions& options) {
  return {check_jacobi(p, options), check_coproduct_homomorphism(p, options),
          check_coassociativity(p, options), check_counit(p, options),
          check_antipode(p, options)};
}

// --------------------------------------------------------------- mutations

std::string Mutation::label(const Alphabet& alphabet) const {
  static const char* kinds[] = {"negate", "double", "set 1"};
  std::string where;
  switch (table) {
    case Table::Bracket:
      where = "[" + alphabet[x].name + ", " + alphabet[y].name + "]";
      break;
    case Table::Coproduct: where = "coproduct(" + alphabet[x].name + ")"; break;
    case Table::Counit: where = "counit(" + alphabet[x].name + ")"; break;
    case Table::Antipode: where = "antipode(" + alphabet[x].name + ")"; break;
  }
  std::string term;
  for (const auto& m : legs) {
    if (!term.empty()) term += " (x) ";
    std::string t;
    for (Rank r : m.ranks()) t += (t.empty() ? "" : "*") + alphabet[r].name;
    term += t.empty() ? "1" : t;
  }
  if (power > 0) term = alphabet.parameter() + "^" + std::to_string(power) + " " + term;
  return std::string(kinds[static_cast<int>(kind)]) + " " + where + (term.empty() ? "" : " at " + term);
}

std::vector<Mutation> mutation_sites(const HopfPresentation& p) {
  using T = Mutation::Table;
  using K = Mutation::Kind;
  std::vector<Mutation> out;
  auto add_series = [&out](T table, Rank x, Rank y, const TensorElement::Legs& legs,
                           const ZSeries& c) {
    for (int n = 0; n <= c.order(); ++n)
      if (sgn(c[n]) != 0)
        for (K kind : {K::Negate, K::Double}) out.push_back({table, kind, x, y, legs, n});
  };
  const Algebra& A = p.algebra();
  auto n = static_cast<Rank>(p.alphabet().size());
  for (Rank hi = 1; hi < n; ++hi)
    for (Rank lo = 0; lo < hi; ++lo)
      for (const auto& [m, c] : A.bracket_entry(hi, lo).terms())
        add_series(T::Bracket, hi, lo, {m}, c);
  for (Rank r = 0; r < n; ++r)
    for (const auto& [legs, c] : p.coproduct_of(r).terms()) add_series(T::Coproduct, r, 0, legs, c);
  for (Rank r = 0; r < n; ++r)
    for (const auto& [m, c] : p.antipode_of(r).terms()) add_series(T::Antipode, r, 0, {m}, c);
  for (Rank r = 0; r < n; ++r) out.push_back({T::Counit, K::SetOne, r, 0, {}, 0});
  return out;
}

std::shared_ptr<const HopfPresentation> apply_mutation(const HopfPresentation& p,
                                                       const Mutation& m) {
  using T = Mutation::Table;
  int k = p.order();
  auto delta_for = [&](const ZSeries& c) {
    Rational old = m.power <= c.order() ? c[m.power] : Rational(0);
    Rational now = m.kind == Mutation::Kind::Negate ? -old
                   : m.kind == Mutation::Kind::Double ? 2 * old
                                                      : Rational(1);
    return ZSeries::monomial(now - old, m.power, k);
  };
  BracketTable table = p.algebra().table();
  std::vector<TensorElement> d = p.coproduct_table();
  std::vector<ZSeries> e = p.counit_table();
  std::vector<Element> s = p.antipode_table();
  switch (m.table) {
    case T::Bracket: {
      Element v = p.algebra().bracket_entry(m.x, m.y);
      v.add_term(m.legs.at(0), delta_for(v.coefficient(m.legs.at(0))));
      table.set(m.x, m.y, std::move(v));
      break;
    }
    case T::Coproduct: {
      TensorElement& v = d.at(m.x);
      auto it = v.terms().find(m.legs);
      v.add_term(m.legs, delta_for(it == v.terms().end() ? ZSeries(k) : it->second));
      break;
    }
    case T::Counit: e.at(m.x) = e.at(m.x) + delta_for(e.at(m.x)); break;
    case T::Antipode: {
      Element& v = s.at(m.x);
      v.add_term(m.legs.at(0), delta_for(v.coefficient(m.legs.at(0))));
      break;
    }
  }
  auto algebra = std::make_shared<const Algebra>(p.alphabet(), std::move(table), k,
                                                 p.algebra().options());
  return std::make_shared<const HopfPresentation>(p.name() + "[" + m.label(p.alphabet()) + "]",
                                                  std::move(algebra), std::move(d),
                                                  std::move(e), std::move(s));
}

} // namespace hopfverify
