#include "hopfverify/bicross.hpp"

#include "hopfverify/algfile.hpp"
#include "hopfverify/models.hpp"

namespace hopfverify::bicross {

using namespace models::np;

bool is_translation(Rank r) { return r <= Pm; }
bool is_lorentz(Rank r) { return r >= E1 && r <= F2; }

namespace {

bool letters_in(const Monomial& m, bool (*pred)(Rank)) {
  for (std::size_t i = 0; i < m.degree(); ++i)
    if (!pred(m[i])) return false;
  return true;
}

Element unit_term(const Monomial& m, int order) {
  return Element::term(m, ZSeries::constant(1, order));
}

TensorElement concat_legs(const TensorElement& a, const TensorElement& b) {
  int ord = std::min(a.order(), b.order());
  TensorElement out(a.arity() + b.arity(), ord);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      TensorElement::Legs legs = ka;
      legs.insert(legs.end(), kb.begin(), kb.end());
      out.add_term(legs, multiply_truncated(ca, cb, ord));
    }
  return out;
}

std::size_t action_index(Rank a, Rank h) { return a * 6 + (h - E1); }

} // namespace

bool in_translations(const Element& a) {
  for (const auto& [m, c] : a.terms())
    if (!letters_in(m, is_translation)) return false;
  return true;
}

bool in_lorentz(const Element& h) {
  for (const auto& [m, c] : h.terms())
    if (!letters_in(m, is_lorentz)) return false;
  return true;
}

// ------------------------------------------------------------------ action

ActionTable::ActionTable(AlgebraPtr carrier) : A_(std::move(carrier)), table_(24) {
  const Algebra& A = *A_;
  int k = A.order();
  for (auto& e : table_) e = Element(k);
  models::Series s(A, Pp);
  Element em1 = s.expm1_over_z(-1);  // (e^{-zP+} - 1)/z
  Element em = s.exp(-1);
  Element half_sq = A.multiply(s.z(Rational(1, 2)),
                               A.multiply(A.gen(P1), A.gen(P1)) + A.multiply(A.gen(P2), A.gen(P2)));
  auto set = [this](Rank a, Rank h, Element v) { table_[action_index(a, h)] = std::move(v); };

  set(Pp, K3, em1);
  set(Pm, K3, A.gen(Pm) + half_sq);
  for (Rank i : {P1, P2}) set(i, K3, A.multiply(A.one() - em, A.gen(i)));
  set(P1, J3, A.gen(P2));
  set(P2, J3, -A.gen(P1));
  set(Pm, E1, -A.gen(P1));
  set(Pm, E2, -A.gen(P2));
  set(P1, E1, em1);
  set(P2, E2, em1);
  set(Pp, F1, -A.gen(P1));
  set(Pp, F2, -A.gen(P2));
  set(Pm, F1, A.multiply({s.z(), A.gen(P1), A.gen(Pm)}));
  set(Pm, F2, A.multiply({s.z(), A.gen(P2), A.gen(Pm)}));
  Element diag = A.multiply(em, A.gen(Pm)) + half_sq;
  for (Rank i : {P1, P2})
    for (Rank j : {F1, F2}) {
      Rank jj = j == F1 ? P1 : P2;
      Element v = A.multiply({s.z(), A.gen(i), A.gen(jj)});
      if (i == jj) v -= diag;
      set(i, j, v);
    }
}

const Element& ActionTable::entry(Rank a, Rank h) const {
  if (!is_translation(a) || !is_lorentz(h))
    throw std::invalid_argument("action is defined on (translation, Lorentz) pairs");
  return table_[action_index(a, h)];
}

Element ActionTable::act(const Monomial& a, Rank h) const {
  if (!letters_in(a, is_translation))
    throw std::invalid_argument("action operand outside the translation subalgebra");
  if (!is_lorentz(h)) throw std::invalid_argument("action by a non-Lorentz generator");
  std::string key = a.key() + static_cast<char>(h);
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  // A is commutative: d(r^k m') = k r^(k-1) m' d(r) summed over letters.
  const Algebra& A = *A_;
  Element out(A.order());
  std::vector<Rank> letters = a.ranks();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i > 0 && letters[i] == letters[i - 1]) continue;
    int mult = 0;
    for (Rank r : letters) mult += r == letters[i];
    std::vector<Rank> rest = letters;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    Element term = A.multiply(unit_term(Monomial::from_sorted(rest), A.order()),
                              table_[action_index(letters[i], h)]);
    out += term * Rational(mult);
  }
  std::lock_guard lock(mutex_);
  cache_.emplace(key, out);
  return out;
}

Element ActionTable::act(const Element& a, Rank h) const {
  Element out(a.order());
  for (const auto& [m, c] : a.terms()) out.add_scaled(act(m, h), c);
  return out;
}

Element ActionTable::act(const Element& a, const Monomial& h) const {
  if (!letters_in(h, is_lorentz))
    throw std::invalid_argument("action by an element outside the Lorentz subalgebra");
  Element out = a;
  for (std::size_t i = 0; i < h.degree(); ++i) out = act(out, h[i]);
  return out;
}

Element ActionTable::act(const Element& a, const Element& h) const {
  Element out(std::min(a.order(), h.order()));
  for (const auto& [m, c] : h.terms()) out.add_scaled(act(a, m), c);
  return out;
}

// ---------------------------------------------------------------- coaction

CoactionTable::CoactionTable(AlgebraPtr carrier) : A_(std::move(carrier)), table_(6) {
  const Algebra& A = *A_;
  models::Series s(A, Pp);
  Element em = s.exp(-1), one = A.one(), z = s.z();
  auto g = [&A](Rank r) { return A.gen(r); };
  auto zt = [&](Rank r) { return A.multiply(z, g(r)); };
  table_[J3 - E1] = tensor(one, g(J3));
  table_[E1 - E1] = tensor(one, g(E1));
  table_[E2 - E1] = tensor(one, g(E2));
  table_[F1 - E1] = tensor(em, g(F1)) - tensor(zt(Pm), g(E1)) - tensor(zt(P2), g(J3));
  table_[F2 - E1] = tensor(em, g(F2)) - tensor(zt(Pm), g(E2)) + tensor(zt(P1), g(J3));
  table_[K3 - E1] = tensor(em, g(K3)) - tensor(zt(P1), g(E1)) - tensor(zt(P2), g(E2));
}

const TensorElement& CoactionTable::entry(Rank h) const {
  if (!is_lorentz(h)) throw std::invalid_argument("coaction of a non-Lorentz generator");
  return table_[h - E1];
}

TensorElement CoactionTable::coact(const Monomial& h) const {
  if (h.empty()) return TensorElement::unit(2, A_->order());
  if (h.degree() == 1) return entry(h[0]);
  throw std::invalid_argument("coaction is tabulated on generators only");
}

TensorElement CoactionTable::coact(const Element& h) const {
  TensorElement out(2, std::min(h.order(), A_->order()));
  for (const auto& [m, c] : h.terms()) out.add_scaled(coact(m), c);
  return out;
}

// --------------------------------------------------------- crossed product

CrossedProduct::CrossedProduct(int order, AlgebraOptions options)
    : order_(order),
      classical_(models::build_classical(order, options)),
      A_(classical_->algebra_ptr()),
      action_(A_),
      coaction_(A_) {
  const Algebra& A = *A_;
  models::Series s(A, Pp);
  Element em = s.exp(-1), ep = s.exp(1);
  translation_delta_.resize(4);
  translation_gamma_.resize(4);
  translation_delta_[Pp] = tensor(A.gen(Pp), A.one()) + tensor(A.one(), A.gen(Pp));
  translation_gamma_[Pp] = -A.gen(Pp);
  for (Rank y : {P1, P2, Pm}) {
    translation_delta_[y] = tensor(em, A.gen(y)) + tensor(A.gen(y), A.one());
    translation_gamma_[y] = -A.multiply(ep, A.gen(y));
  }
}

TensorElement CrossedProduct::translation_coproduct(const Monomial& a) const {
  if (!letters_in(a, is_translation))
    throw std::invalid_argument("translation coproduct of a non-translation monomial");
  if (a.empty()) return TensorElement::unit(2, order_);
  if (a.degree() == 1) return translation_delta_[a[0]];
  {
    std::lock_guard lock(mutex_);
    if (auto it = delta_a_cache_.find(a.key()); it != delta_a_cache_.end()) return it->second;
  }
  TensorElement v =
      tensor_mul(*A_, translation_coproduct(a.without_last()), translation_delta_[a.back()]);
  std::lock_guard lock(mutex_);
  return delta_a_cache_.emplace(a.key(), std::move(v)).first->second;
}

TensorElement CrossedProduct::translation_coproduct(const Element& a) const {
  TensorElement out(2, std::min(a.order(), order_));
  for (const auto& [m, c] : a.terms()) out.add_scaled(translation_coproduct(m), c);
  return out;
}

ZSeries CrossedProduct::translation_counit(const Element& a) const {
  if (!in_translations(a)) throw std::invalid_argument("translation counit of a non-translation");
  return a.scalar_part();
}

Element CrossedProduct::translation_antipode(const Monomial& a) const {
  if (!letters_in(a, is_translation))
    throw std::invalid_argument("translation antipode of a non-translation monomial");
  Element out = A_->one();
  for (std::size_t i = 0; i < a.degree(); ++i)
    out = A_->multiply(translation_gamma_[a[i]], out);
  return out;
}

TensorElement CrossedProduct::lorentz_coproduct(const Monomial& h) const {
  if (!letters_in(h, is_lorentz))
    throw std::invalid_argument("Lorentz coproduct of a non-Lorentz monomial");
  return classical_->coproduct(h);
}

TensorElement CrossedProduct::lorentz_coproduct(const Element& h) const {
  if (!in_lorentz(h)) throw std::invalid_argument("Lorentz coproduct of a non-Lorentz element");
  return classical_->coproduct(h);
}

ZSeries CrossedProduct::lorentz_counit(const Element& h) const {
  if (!in_lorentz(h)) throw std::invalid_argument("Lorentz counit of a non-Lorentz element");
  return classical_->counit(h);
}

TensorElement CrossedProduct::generator(Rank r) const {
  TensorElement out(2, order_);
  Monomial g{r};
  out.add_term(is_lorentz(r) ? TensorElement::Legs{g, {}} : TensorElement::Legs{{}, g},
               ZSeries::constant(1, order_));
  return out;
}

TensorElement CrossedProduct::multiply(const TensorElement& x, const TensorElement& y) const {
  if (x.arity() != 2 || y.arity() != 2) throw ArityMismatch("crossed product values have arity 2");
  const Algebra& A = *A_;
  TensorElement out(2, std::min(x.order(), y.order()));
  for (const auto& [hx, c] : x.terms())
    for (const auto& [gy, d] : y.terms()) {
      ZSeries cd = c * d;
      Element a = unit_term(hx[1], order_);
      Element b = unit_term(gy[1], order_);
      for (auto delta_g = lorentz_coproduct(gy[0]); const auto& [split, e] : delta_g.terms()) {
        Element left = A.monomial_product(hx[0], split[0]);
        Element right = A.multiply(action_.act(a, split[1]), b);
        out.add_scaled(tensor(left, right), cd * e);
      }
    }
  return out;
}

TensorElement CrossedProduct::commutator(const TensorElement& x, const TensorElement& y) const {
  return multiply(x, y) - multiply(y, x);
}

TensorElement CrossedProduct::coproduct_of(Rank r) const {
  TensorElement out(4, order_);
  if (is_translation(r)) {
    for (const auto& [legs, c] : translation_delta_[r].terms())
      out.add_term({{}, legs[0], {}, legs[1]}, c);
    return out;
  }
  for (auto delta_h = lorentz_coproduct(Monomial{r}); const auto& [split, e] : delta_h.terms())
    for (auto coacted = coaction_.coact(split[1]); const auto& [beta, f] : coacted.terms())
      out.add_term({split[0], beta[0], beta[1], {}}, e * f);
  return out;
}

TensorElement CrossedProduct::antipode_of(Rank r) const {
  TensorElement out(2, order_);
  if (is_translation(r)) {
    for (const auto& [m, c] : translation_gamma_[r].terms()) out.add_term({{}, m}, c);
    return out;
  }
  // S(h (x) 1) = sum (1 (x) S(h^(-1))) (S(h^(0)) (x) 1)
  for (const auto& coacted = coaction_.entry(r); const auto& [beta, f] : coacted.terms()) {
    TensorElement left(2, order_), right(2, order_);
    for (auto inverse = translation_antipode(beta[0]); const auto& [m, c] : inverse.terms()) left.add_term({{}, m}, c);
    ZSeries sign = ZSeries::constant(beta[1].empty() ? 1 : -1, order_);
    right.add_term({beta[1], {}}, sign);
    out.add_scaled(multiply(left, right), f);
  }
  return out;
}

TensorElement CrossedProduct::to_crossed_monomial(const Monomial& m) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = to_cache_.find(m.key()); it != to_cache_.end()) return it->second;
  }
  std::vector<Rank> a, h;
  for (Rank r : m.ranks()) (is_translation(r) ? a : h).push_back(r);
  Monomial ma = Monomial::from_sorted(a), mh = Monomial::from_sorted(h);
  // (1 (x) a)(h (x) 1) = sum h_(1) (x) a <| h_(2)
  TensorElement out(2, order_);
  Element ea = unit_term(ma, order_);
  for (auto delta_h = lorentz_coproduct(mh); const auto& [split, e] : delta_h.terms())
    out.add_scaled(tensor(unit_term(split[0], order_), action_.act(ea, split[1])), e);
  std::lock_guard lock(mutex_);
  return to_cache_.emplace(m.key(), std::move(out)).first->second;
}

TensorElement CrossedProduct::to_crossed(const Element& x) const {
  TensorElement out(2, std::min(x.order(), order_));
  for (const auto& [m, c] : x.terms()) out.add_scaled(to_crossed_monomial(m), c);
  return out;
}

TensorElement CrossedProduct::to_crossed(const TensorElement& x) const {
  TensorElement out(2 * x.arity(), std::min(x.order(), order_));
  for (const auto& [legs, c] : x.terms()) {
    TensorElement t = to_crossed_monomial(legs[0]);
    for (std::size_t i = 1; i < legs.size(); ++i) t = concat_legs(t, to_crossed_monomial(legs[i]));
    out.add_scaled(t, c);
  }
  return out;
}

Element CrossedProduct::from_crossed_monomial(const Monomial& h, const Monomial& a) const {
  std::string key = h.key() + '|' + a.key();
  {
    std::lock_guard lock(mutex_);
    if (auto it = from_cache_.find(key); it != from_cache_.end()) return it->second;
  }
  // to_crossed(a h) = h (x) a + terms of lower Lorentz degree.
  Monomial ah = Monomial::concat(a, h);
  TensorElement rest = to_crossed_monomial(ah);
  TensorElement lead(2, order_);
  lead.add_term({h, a}, ZSeries::constant(1, order_));
  rest -= lead;
  Element out = unit_term(ah, order_) - from_crossed(rest);
  std::lock_guard lock(mutex_);
  return from_cache_.emplace(key, std::move(out)).first->second;
}

Element CrossedProduct::from_crossed(const TensorElement& t) const {
  if (t.arity() != 2) throw ArityMismatch("from_crossed expects arity 2");
  Element out(std::min(t.order(), order_));
  for (const auto& [legs, c] : t.terms()) out.add_scaled(from_crossed_monomial(legs[0], legs[1]), c);
  return out;
}

TensorElement CrossedProduct::from_crossed_pairs(const TensorElement& t) const {
  if (t.arity() % 2 != 0) throw ArityMismatch("from_crossed_pairs expects even arity");
  TensorElement out(t.arity() / 2, std::min(t.order(), order_));
  for (const auto& [legs, c] : t.terms()) {
    std::vector<Element> factors;
    for (std::size_t i = 0; i < legs.size(); i += 2)
      factors.push_back(from_crossed_monomial(legs[i], legs[i + 1]));
    out.add_scaled(TensorElement::product_of(factors), c);
  }
  return out;
}

PresentationPtr CrossedProduct::reconstructed() const {
  BracketTable table(10);
  for (Rank hi = 1; hi < 10; ++hi)
    for (Rank lo = 0; lo < hi; ++lo) {
      Element v = from_crossed(commutator(generator(hi), generator(lo)));
      if (!v.is_zero()) table.set(hi, lo, std::move(v));
    }
  auto A = std::make_shared<const Algebra>(alphabet(), std::move(table), order_, A_->options());
  std::vector<TensorElement> delta;
  std::vector<ZSeries> eps;
  std::vector<Element> gamma;
  for (Rank r = 0; r < 10; ++r) {
    delta.push_back(from_crossed_pairs(coproduct_of(r)));
    Element g = A_->gen(r);
    eps.push_back(is_translation(r) ? translation_counit(g) : lorentz_counit(g));
    gamma.push_back(from_crossed(antipode_of(r)));
  }
  return std::make_shared<const HopfPresentation>("bicross[reconstructed]", A, std::move(delta),
                                                  std::move(eps), std::move(gamma));
}

// ------------------------------------------------------------------ checks

namespace {

constexpr Rank kTranslations[] = {Pp, P1, P2, Pm};
constexpr Rank kLorentz[] = {E1, E2, J3, K3, F1, F2};

const char* kProductNote =
    "the condition on the coaction of products is not checked on its own; it is covered by "
    "the reconstruction";

} // namespace

Report check_module_algebra(const CrossedProduct& cp, const HopfPresentation& bicross,
                            const CheckOptions& options) {
  const Algebra& K = cp.carrier();
  const Algebra& B = bicross.algebra();
  const Alphabet& alpha = cp.alphabet();
  const ActionTable& act = cp.action();
  CaseRecorder rec("module_algebra", bicross.name(), cp.order(), options);
  for (Rank a : kTranslations)
    for (Rank h : kLorentz) {
      if (rec.stopped()) return rec.finish();
      const Element& e = act.entry(a, h);
      rec.record("closure" + case_label(alpha, {a, h}), in_translations(e),
                 [&] { return print_element(e, alpha); });
      Element br = B.bracket(a, h);
      rec.record("sign" + case_label(alpha, {a, h}), equal_to_order(e, br, cp.order()),
                 [&] { return print_element(e - br, alpha); });
    }
  for (Rank h : kLorentz) {
    if (rec.stopped()) return rec.finish();
    Element lhs = act.act(K.one(), h);
    Element rhs = Element::scalar(cp.lorentz_counit(K.gen(h)));
    rec.record("1 <| " + alpha[h].name, lhs == rhs, [&] { return print_element(lhs - rhs, alpha); });
  }
  // Leibniz extension against products in the presentation.
  for (Rank a : kTranslations)
    for (Rank b : kTranslations) {
      if (b < a) continue;
      for (Rank h : kLorentz) {
        if (rec.stopped()) return rec.finish();
        Element lhs = act.act(K.multiply(K.gen(a), K.gen(b)), h);
        Element rhs = B.commutator(B.multiply(B.gen(a), B.gen(b)), B.gen(h));
        rec.record("(ab) <| h" + case_label(alpha, {a, b, h}), equal_to_order(lhs, rhs, cp.order()),
                   [&] { return print_element(lhs - rhs, alpha); });
      }
    }
  // Right action: (a <| g) <| h = a <| (gh) with gh normal ordered in K.
  std::vector<std::pair<std::string, Element>> samples;
  for (Rank a : kTranslations) samples.emplace_back(alpha[a].name, K.gen(a));
  samples.emplace_back("P+*P-", K.multiply(K.gen(Pp), K.gen(Pm)));
  samples.emplace_back("P1*P2", K.multiply(K.gen(P1), K.gen(P2)));
  samples.emplace_back("P+^2", K.multiply(K.gen(Pp), K.gen(Pp)));
  for (const auto& [label, a] : samples)
    for (Rank g : kLorentz)
      for (Rank h : kLorentz) {
        if (g == h) continue;
        if (rec.stopped()) return rec.finish();
        Element lhs = act.act(act.act(a, g), h);
        Element rhs = act.act(a, K.multiply(K.gen(g), K.gen(h)));
        rec.record("(" + label + " <| " + alpha[g].name + ") <| " + alpha[h].name, lhs == rhs,
                   [&] { return print_element(lhs - rhs, alpha); });
      }
  return rec.finish();
}

Report check_comodule_coalgebra(const CrossedProduct& cp, const CheckOptions& options) {
  const Algebra& K = cp.carrier();
  const Alphabet& alpha = cp.alphabet();
  const CoactionTable& beta = cp.coaction();
  CaseRecorder rec("comodule_coalgebra", "bicross", cp.order(), options);
  TensorMap delta_a = [&cp](const Monomial& m) { return cp.translation_coproduct(m); };
  TensorMap delta_k = [&cp](const Monomial& m) { return cp.lorentz_coproduct(m); };
  TensorMap coact = [&beta](const Monomial& m) { return beta.coact(m); };
  auto eps_a = [&cp](const Monomial& m) { return m.empty() ? ZSeries::constant(1, cp.order()) : ZSeries(cp.order()); };
  auto eps_k = eps_a;
  for (Rank h : kLorentz) {
    if (rec.stopped()) break;
    const std::string name = alpha[h].name;
    const TensorElement& b = beta.entry(h);
    bool closed = true;
    for (const auto& [legs, c] : b.terms())
      closed = closed && letters_in(legs[0], is_translation) && letters_in(legs[1], is_lorentz) &&
               legs[1].degree() <= 1;
    rec.record("closure " + name, closed, [&] { return print_tensor(b, alpha); });

    TensorElement lhs = apply_on_leg(b, 0, delta_a);
    TensorElement rhs = apply_on_leg(b, 1, coact);
    rec.record("coaction " + name, lhs == rhs, [&] { return print_tensor(lhs - rhs, alpha); });

    Element counit = as_element(contract_leg(b, 0, eps_a));
    rec.record("(eps x id) " + name, counit == K.gen(h),
               [&] { return print_element(counit - K.gen(h), alpha); });

    TensorElement left = apply_on_leg(b, 1, delta_k);
    TensorElement right(3, cp.order());
    for (auto delta_h = cp.lorentz_coproduct(Monomial{h}); const auto& [split, e] : delta_h.terms())
      for (auto coacted_x = beta.coact(split[0]); const auto& [bx, f] : coacted_x.terms())
        for (auto coacted_y = beta.coact(split[1]); const auto& [by, g] : coacted_y.terms()) {
          Element ab = K.monomial_product(bx[0], by[0]);
          right.add_scaled(tensor(ab, unit_term(bx[1], cp.order()), unit_term(by[1], cp.order())),
                           e * f * g);
        }
    rec.record("(id x Delta) " + name, left == right,
               [&] { return print_tensor(left - right, alpha); });

    Element ek = as_element(contract_leg(b, 1, eps_k));
    Element expect = Element::scalar(cp.lorentz_counit(K.gen(h)));
    rec.record("(id x eps) " + name, ek == expect, [&] { return print_element(ek - expect, alpha); });
  }
  rec.note(kProductNote);
  return rec.finish();
}

Report check_action_coproduct_compat(const CrossedProduct& cp, const CheckOptions& options) {
  const Algebra& K = cp.carrier();
  const Alphabet& alpha = cp.alphabet();
  const ActionTable& act = cp.action();
  CaseRecorder rec("action_coproduct_compat", "bicross", cp.order(), options);
  for (Rank a : kTranslations)
    for (Rank h : kLorentz) {
      if (rec.stopped()) return rec.finish();
      std::string label = case_label(alpha, {a, h});
      Element x = act.act(K.gen(a), h);
      ZSeries e = cp.translation_counit(x);
      ZSeries expect = cp.translation_counit(K.gen(a)) * cp.lorentz_counit(K.gen(h));
      rec.record("eps" + label, e == expect,
                 [&] { return to_string(e - expect, alpha.parameter()); });

      TensorElement lhs = cp.translation_coproduct(x);
      TensorElement rhs(2, cp.order());
      for (auto delta_a = cp.translation_coproduct(Monomial{a}); const auto& [da, c] : delta_a.terms())
        for (auto delta_h = cp.lorentz_coproduct(Monomial{h}); const auto& [dh, f] : delta_h.terms())
          for (auto coacted = cp.coaction().coact(dh[1]); const auto& [bt, g] : coacted.terms()) {
            Element l = K.multiply(act.act(unit_term(da[0], cp.order()), dh[0]),
                                   unit_term(bt[0], cp.order()));
            Element r = act.act(unit_term(da[1], cp.order()), bt[1]);
            rhs.add_scaled(tensor(l, r), c * f * g);
          }
      rec.record("Delta" + label, lhs == rhs, [&] { return print_tensor(lhs - rhs, alpha); });
    }
  return rec.finish();
}

Report reconstruct(const CrossedProduct& cp, const HopfPresentation& bicross,
                   const CheckOptions& options) {
  const Algebra& B = bicross.algebra();
  const Alphabet& alpha = cp.alphabet();
  CaseRecorder rec("bicross_reconstruction", bicross.name(), cp.order(), options);
  for (Rank hi = 1; hi < 10; ++hi)
    for (Rank lo = 0; lo < hi; ++lo) {
      if (rec.stopped()) return rec.finish();
      TensorElement lhs = cp.commutator(cp.generator(hi), cp.generator(lo));
      TensorElement rhs = cp.to_crossed(B.bracket_entry(hi, lo));
      rec.record("bracket" + case_label(alpha, {hi, lo}), equal_to_order(lhs, rhs, cp.order()),
                 [&] { return print_tensor(lhs - rhs, alpha); });
    }
  for (Rank r = 0; r < 10; ++r) {
    if (rec.stopped()) return rec.finish();
    const std::string name = alpha[r].name;
    TensorElement d = cp.coproduct_of(r);
    TensorElement dref = cp.to_crossed(bicross.coproduct_of(r));
    rec.record("coproduct(" + name + ")", equal_to_order(d, dref, cp.order()),
               [&] { return print_tensor(d - dref, alpha); });
    ZSeries e(cp.order());  // eps(h (x) a) = eps(h) eps(a) vanishes on generators
    rec.record("counit(" + name + ")", bicross.counit_of(r).truncated(cp.order()) == e,
               [&] { return to_string(bicross.counit_of(r), alpha.parameter()); });
    TensorElement s = cp.antipode_of(r);
    TensorElement sref = cp.to_crossed(bicross.antipode_of(r));
    rec.record("antipode(" + name + ")", equal_to_order(s, sref, cp.order()),
               [&] { return print_tensor(s - sref, alpha); });
  }
  if (rec.stopped()) return rec.finish();
  PresentationPtr rebuilt = cp.reconstructed();
  Report same = compare_presentations(*rebuilt, bicross);
  rec.record("reconstructed == " + bicross.name(), same.pass,
             [&] { return same.failed_case + ": " + same.witness; });
  for (const Report& r : run_hopf_suite(*rebuilt, options)) {
    if (rec.stopped()) break;
    rec.record("reconstructed " + r.id, r.pass,
               [&] { return r.failed_case + ": " + r.witness; });
  }
  rec.note(kProductNote);
  return rec.finish();
}

} // namespace hopfverify::bicross
