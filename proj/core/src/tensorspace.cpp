#include "hopfverify/tensorspace.hpp"

#include <algorithm>
#include <unordered_map>

namespace hopfverify {

TensorElement::TensorElement(int arity, int order) : arity_(arity), order_(order) {
  if (arity < 1) throw ArityMismatch("tensor arity must be positive");
}

TensorElement TensorElement::unit(int arity, int order) {
  TensorElement t(arity, order);
  t.add_term(Legs(static_cast<std::size_t>(arity)), ZSeries::constant(1, order));
  return t;
}

TensorElement TensorElement::product_of(const std::vector<Element>& legs) {
  int order = legs.empty() ? 0 : legs.front().order();
  for (const auto& l : legs) order = std::min(order, l.order());
  TensorElement out(static_cast<int>(legs.size()), order);
  // Cartesian product of the leg term lists.
  std::vector<Element::TermMap::const_iterator> it;
  for (const auto& l : legs) {
    if (l.is_zero()) return out;
    it.push_back(l.terms().begin());
  }
  Legs key(legs.size());
  while (true) {
    ZSeries c = ZSeries::constant(1, order);
    for (std::size_t i = 0; i < legs.size(); ++i) {
      key[i] = it[i]->first;
      c = multiply_truncated(c, it[i]->second, order);
    }
    out.add_term(key, c);
    std::size_t i = legs.size();
    while (i > 0) {
      --i;
      if (++it[i] != legs[i].terms().end()) break;
      it[i] = legs[i].terms().begin();
      if (i == 0) return out;
    }
  }
}

int TensorElement::valuation() const {
  int v = order_ + 1;
  for (const auto& [k, c] : terms_) v = std::min(v, c.valuation());
  return v;
}

void TensorElement::lower_order(int order) {
  if (order >= order_) return;
  order_ = order;
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second = it->second.truncated(order);
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
}

void TensorElement::add_term(const Legs& legs, const ZSeries& c) {
  if (static_cast<int>(legs.size()) != arity_) throw ArityMismatch("term arity mismatch");
  if (c.order() < order_) lower_order(c.order());
  auto it = terms_.find(legs);
  if (it == terms_.end()) {
    ZSeries t = c.truncated(order_);
    if (!t.is_zero()) terms_.emplace(legs, std::move(t));
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void TensorElement::add_scaled(const TensorElement& other, const ZSeries& c) {
  check_arity(other);
  int ord = std::min({order_, other.order_, c.order()});
  lower_order(ord);
  int vc = c.valuation();
  if (vc > ord) return;
  for (const auto& [k, s] : other.terms_) {
    if (vc + s.valuation() > ord) continue;
    add_term(k, multiply_truncated(s, c, ord));
  }
}

void TensorElement::check_arity(const TensorElement& other) const {
  if (other.arity_ != arity_)
    throw ArityMismatch("tensor arity mismatch: " + std::to_string(arity_) + " vs " +
                        std::to_string(other.arity_));
}

TensorElement TensorElement::truncated(int order) const {
  TensorElement t(*this);
  t.lower_order(order);
  return t;
}

TensorElement TensorElement::classical_part() const {
  TensorElement t(arity_, order_);
  for (const auto& [k, c] : terms_) t.add_term(k, ZSeries::constant(c[0], order_));
  return t;
}

TensorElement TensorElement::rescaled(const Rational& lambda) const {
  TensorElement t(arity_, order_);
  for (const auto& [k, c] : terms_) t.add_term(k, c.rescaled(lambda));
  return t;
}

TensorElement& TensorElement::operator+=(const TensorElement& rhs) {
  check_arity(rhs);
  lower_order(rhs.order_);
  for (const auto& [k, c] : rhs.terms_) add_term(k, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& rhs) {
  check_arity(rhs);
  lower_order(rhs.order_);
  for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
  return *this;
}

TensorElement& TensorElement::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, s] : terms_) s *= c;
  return *this;
}

TensorElement& TensorElement::operator*=(const ZSeries& c) {
  TensorElement out(arity_, std::min(order_, c.order()));
  out.add_scaled(*this, c);
  *this = std::move(out);
  return *this;
}

TensorElement TensorElement::operator-() const {
  TensorElement t(*this);
  for (auto& [k, s] : t.terms_) s = -s;
  return t;
}

bool equal_to_order(const TensorElement& a, const TensorElement& b, int k) {
  return a.arity() == b.arity() && a.truncated(k).terms() == b.truncated(k).terms();
}

TensorElement tensor(const Element& a, const Element& b) {
  return TensorElement::product_of({a, b});
}

TensorElement tensor(const Element& a, const Element& b, const Element& c) {
  return TensorElement::product_of({a, b, c});
}

namespace {

// Leg products are cached per call: the same monomial pairs recur many
// times in products of exponentials.
class LegProducts {
public:
  explicit LegProducts(const Algebra& algebra) : algebra_(algebra) {}

  const Element& get(const Monomial& a, const Monomial& b) {
    std::string key = a.key();
    key.push_back('\xff');
    key += b.key();
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(std::move(key), algebra_.monomial_product(a, b)).first->second;
  }

private:
  const Algebra& algebra_;
  std::unordered_map<std::string, Element> cache_;
};

void expand_legs(TensorElement& out, std::vector<const Element*>& legs, std::size_t i,
                 TensorElement::Legs& key, const ZSeries& c, int ord) {
  if (i == legs.size()) {
    out.add_term(key, c);
    return;
  }
  int vc = c.valuation();
  if (vc > ord) return;
  for (const auto& [m, s] : legs[i]->terms()) {
    if (vc + s.valuation() > ord) continue;
    key[i] = m;
    expand_legs(out, legs, i + 1, key, multiply_truncated(c, s, ord), ord);
  }
}

} // namespace

TensorElement tensor_mul(const Algebra& algebra, const TensorElement& a, const TensorElement& b) {
  if (a.arity() != b.arity()) throw ArityMismatch("tensor_mul: arity mismatch");
  int ord = std::min({a.order(), b.order(), algebra.order()});
  TensorElement out(a.arity(), ord);
  LegProducts products(algebra);
  std::vector<const Element*> legs(static_cast<std::size_t>(a.arity()));
  TensorElement::Legs key(static_cast<std::size_t>(a.arity()));
  for (const auto& [ka, ca] : a.terms()) {
    int va = ca.valuation();
    for (const auto& [kb, cb] : b.terms()) {
      if (va + cb.valuation() > ord) continue;
      ZSeries c = multiply_truncated(ca, cb, ord);
      for (std::size_t i = 0; i < legs.size(); ++i) legs[i] = &products.get(ka[i], kb[i]);
      expand_legs(out, legs, 0, key, c, ord);
    }
  }
  return out;
}

TensorElement tensor_commutator(const Algebra& algebra, const TensorElement& a,
                                const TensorElement& b) {
  return tensor_mul(algebra, a, b) - tensor_mul(algebra, b, a);
}

TensorElement tensor_exp(const Algebra& algebra, const TensorElement& t) {
  if (t.valuation() < 1)
    throw NonTruncatingExponential("exponential of a tensor with a z^0 term does not truncate");
  int ord = std::min(t.order(), algebra.order());
  TensorElement result = TensorElement::unit(t.arity(), ord);
  TensorElement term = result;
  for (int n = 1; n <= ord; ++n) {
    term = tensor_mul(algebra, term, t);
    term *= Rational(1, n);
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

TensorElement flip(const TensorElement& a) {
  if (a.arity() != 2) throw ArityMismatch("flip requires arity 2");
  TensorElement out(2, a.order());
  for (const auto& [k, c] : a.terms()) out.add_term({k[1], k[0]}, c);
  return out;
}

TensorElement embed(const TensorElement& a, LegPair legs) {
  if (a.arity() != 2) throw ArityMismatch("embed requires arity 2");
  TensorElement out(3, a.order());
  for (const auto& [k, c] : a.terms()) {
    switch (legs) {
      case LegPair::L12: out.add_term({k[0], k[1], Monomial{}}, c); break;
      case LegPair::L13: out.add_term({k[0], Monomial{}, k[1]}, c); break;
      case LegPair::L23: out.add_term({Monomial{}, k[0], k[1]}, c); break;
    }
  }
  return out;
}

LegPair parse_leg_pair(std::string_view text) {
  if (text == "12") return LegPair::L12;
  if (text == "13") return LegPair::L13;
  if (text == "23") return LegPair::L23;
  throw std::invalid_argument("bad leg selector '" + std::string(text) + "'");
}

TensorElement apply_on_leg(const TensorElement& a, int leg, const ElementMap& map) {
  if (leg < 0 || leg >= a.arity()) throw std::out_of_range("leg index out of range");
  TensorElement out(a.arity(), a.order());
  std::unordered_map<std::string, Element> images;
  for (const auto& [k, c] : a.terms()) {
    const Monomial& m = k[static_cast<std::size_t>(leg)];
    auto it = images.find(m.key());
    if (it == images.end()) it = images.emplace(m.key(), map(m)).first;
    TensorElement::Legs key = k;
    for (const auto& [mi, ci] : it->second.terms()) {
      key[static_cast<std::size_t>(leg)] = mi;
      out.add_term(key, multiply_truncated(c, ci, std::min(c.order(), ci.order())));
    }
    if (it->second.order() < out.order()) out = out.truncated(it->second.order());
  }
  return out;
}

TensorElement apply_on_leg(const TensorElement& a, int leg, const TensorMap& map) {
  if (leg < 0 || leg >= a.arity()) throw std::out_of_range("leg index out of range");
  std::unordered_map<std::string, TensorElement> images;
  std::optional<TensorElement> out;
  for (const auto& [k, c] : a.terms()) {
    const Monomial& m = k[static_cast<std::size_t>(leg)];
    auto it = images.find(m.key());
    if (it == images.end()) it = images.emplace(m.key(), map(m)).first;
    const TensorElement& img = it->second;
    if (!out) out.emplace(a.arity() + img.arity() - 1, a.order());
    for (const auto& [ki, ci] : img.terms()) {
      TensorElement::Legs key;
      key.reserve(static_cast<std::size_t>(out->arity()));
      key.insert(key.end(), k.begin(), k.begin() + leg);
      key.insert(key.end(), ki.begin(), ki.end());
      key.insert(key.end(), k.begin() + leg + 1, k.end());
      out->add_term(key, multiply_truncated(c, ci, std::min(c.order(), ci.order())));
    }
    if (img.order() < out->order()) *out = out->truncated(img.order());
  }
  if (!out) {
    // No terms: arity follows the map's image of the unit.
    TensorElement probe = map(Monomial{});
    out.emplace(a.arity() + probe.arity() - 1, a.order());
  }
  return *out;
}

TensorElement contract_leg(const TensorElement& a, int leg,
                           const std::function<ZSeries(const Monomial&)>& map) {
  if (leg < 0 || leg >= a.arity()) throw std::out_of_range("leg index out of range");
  if (a.arity() < 2) throw ArityMismatch("contract_leg needs arity at least 2");
  TensorElement out(a.arity() - 1, a.order());
  for (const auto& [k, c] : a.terms()) {
    ZSeries s = map(k[static_cast<std::size_t>(leg)]);
    TensorElement::Legs key = k;
    key.erase(key.begin() + leg);
    out.add_term(key, multiply_truncated(c, s, std::min(c.order(), s.order())));
  }
  return out;
}

Element multiply_legs(const Algebra& algebra, const TensorElement& a) {
  if (a.arity() != 2) throw ArityMismatch("multiply_legs requires arity 2");
  int ord = std::min(a.order(), algebra.order());
  Element out(ord);
  for (const auto& [k, c] : a.terms()) out.add_scaled(algebra.monomial_product(k[0], k[1]), c);
  return out;
}

TensorElement as_tensor(const Element& a) {
  TensorElement t(1, a.order());
  for (const auto& [m, c] : a.terms()) t.add_term({m}, c);
  return t;
}

Element as_element(const TensorElement& a) {
  if (a.arity() != 1) throw ArityMismatch("expected an arity-1 value");
  Element e(a.order());
  for (const auto& [k, c] : a.terms()) e.add_term(k[0], c);
  return e;
}

TensorElement apply_morphism(const AlgebraMorphism& map, const TensorElement& a) {
  TensorElement out = a.rescaled(map.parameter_scale());
  ElementMap leg = [&map](const Monomial& m) { return map.apply(m); };
  for (int i = 0; i < a.arity(); ++i) out = apply_on_leg(out, i, leg);
  return out;
}

} // namespace hopfverify
