#include "hopfverify/ncpoly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace hopfverify {

// ---------------------------------------------------------------- Alphabet

Alphabet::Alphabet(std::vector<Generator> generators, std::string parameter)
    : generators_(std::move(generators)), parameter_(std::move(parameter)) {
  if (generators_.size() > 255) throw std::invalid_argument("alphabet larger than 255 generators");
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (generators_[i].name == generators_[j].name)
        throw std::invalid_argument("duplicate generator name '" + generators_[i].name + "'");
}

std::optional<Rank> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return static_cast<Rank>(i);
  return std::nullopt;
}

Rank Alphabet::rank(std::string_view name) const {
  if (auto r = find(name)) return *r;
  throw std::out_of_range("unknown generator '" + std::string(name) + "'");
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::initializer_list<Rank> ranks) {
  word_.reserve(ranks.size());
  for (Rank r : ranks) {
    if (!word_.empty() && static_cast<Rank>(word_.back()) > r)
      throw std::invalid_argument("monomial letters must be in non-decreasing rank");
    word_.push_back(static_cast<char>(r));
  }
}

Monomial Monomial::from_sorted(const std::vector<Rank>& ranks) {
  Monomial m;
  for (Rank r : ranks) {
    if (!m.word_.empty() && static_cast<Rank>(m.word_.back()) > r)
      throw std::invalid_argument("monomial letters must be in non-decreasing rank");
    m.word_.push_back(static_cast<char>(r));
  }
  return m;
}

Monomial Monomial::power(Rank r, int n) {
  Monomial m;
  m.word_.assign(static_cast<std::size_t>(std::max(n, 0)), static_cast<char>(r));
  return m;
}

int Monomial::leading_power(Rank r) const {
  int k = 0;
  while (k < static_cast<int>(word_.size()) && static_cast<Rank>(word_[k]) == r) ++k;
  return k;
}

Monomial Monomial::without_last() const {
  Monomial m;
  m.word_ = word_.substr(0, word_.size() - 1);
  return m;
}

Monomial Monomial::without_leading(int count) const {
  Monomial m;
  m.word_ = word_.substr(static_cast<std::size_t>(count));
  return m;
}

Monomial Monomial::appended(Rank r) const {
  Monomial m(*this);
  m.word_.push_back(static_cast<char>(r));
  return m;
}

Monomial Monomial::concat(const Monomial& a, const Monomial& b) {
  Monomial m(a);
  m.word_ += b.word_;
  return m;
}

Monomial Monomial::subword(std::uint64_t mask) const {
  Monomial m;
  for (std::size_t i = 0; i < word_.size(); ++i)
    if (mask & (std::uint64_t{1} << i)) m.word_.push_back(word_[i]);
  return m;
}

std::vector<Rank> Monomial::ranks() const {
  std::vector<Rank> out;
  out.reserve(word_.size());
  for (char c : word_) out.push_back(static_cast<Rank>(c));
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.word_.size() <=> b.word_.size(); c != 0) return c;
  int c = a.word_.compare(b.word_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// ----------------------------------------------------------------- Element

Element Element::unit(int order) { return term(Monomial{}, ZSeries::constant(1, order)); }

Element Element::scalar(const ZSeries& s) { return term(Monomial{}, s); }

Element Element::generator(Rank r, int order) {
  return term(Monomial{r}, ZSeries::constant(1, order));
}

Element Element::term(const Monomial& m, const ZSeries& c) {
  Element e(c.order());
  e.add_term(m, c);
  return e;
}

int Element::valuation() const {
  int v = order_ + 1;
  for (const auto& [m, c] : terms_) v = std::min(v, c.valuation());
  return v;
}

bool Element::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

ZSeries Element::scalar_part() const { return coefficient(Monomial{}); }

ZSeries Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ZSeries(order_) : it->second;
}

std::size_t Element::degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void Element::lower_order(int order) {
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

void Element::add_term(const Monomial& m, const ZSeries& c) {
  if (c.order() < order_) lower_order(c.order());
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    ZSeries t = c.truncated(order_);
    if (!t.is_zero()) terms_.emplace(m, std::move(t));
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void Element::add_scaled(const Element& other, const ZSeries& c) {
  int ord = std::min({order_, other.order_, c.order()});
  lower_order(ord);
  int vc = c.valuation();
  if (vc > ord) return;
  for (const auto& [m, s] : other.terms_) {
    if (vc + s.valuation() > ord) continue;
    add_term(m, multiply_truncated(s, c, ord));
  }
}

Element Element::truncated(int order) const {
  Element e(*this);
  e.lower_order(order);
  return e;
}

Element Element::classical_part() const {
  Element e(order_);
  for (const auto& [m, c] : terms_) e.add_term(m, ZSeries::constant(c[0], order_));
  return e;
}

Element Element::rescaled(const Rational& lambda) const {
  Element e(order_);
  for (const auto& [m, c] : terms_) e.add_term(m, c.rescaled(lambda));
  return e;
}

Element Element::divided_by_z() const {
  if (order_ == 0) throw std::domain_error("division by z exhausts truncation order 0");
  Element e(order_ - 1);
  for (const auto& [m, c] : terms_) e.add_term(m, c.divided_by_z());
  return e;
}

Element& Element::operator+=(const Element& rhs) {
  lower_order(rhs.order_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  lower_order(rhs.order_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, s] : terms_) s *= c;
  return *this;
}

Element& Element::operator*=(const ZSeries& c) {
  Element out(std::min(order_, c.order()));
  out.add_scaled(*this, c);
  *this = std::move(out);
  return *this;
}

Element Element::operator-() const {
  Element e(*this);
  for (auto& [m, s] : e.terms_) s = -s;
  return e;
}

bool equal_to_order(const Element& a, const Element& b, int k) {
  return a.truncated(k).terms() == b.truncated(k).terms();
}

void check_alphabet(const Element& a, const Alphabet& alphabet) {
  for (const auto& [m, c] : a.terms())
    for (std::size_t i = 0; i < m.degree(); ++i)
      if (m[i] >= alphabet.size())
        throw std::out_of_range("element references a generator outside the alphabet");
}

// ------------------------------------------------------------ BracketTable

BracketTable::BracketTable(std::size_t generators)
    : n_(generators), entries_(generators * generators) {}

BracketTable::Entry& BracketTable::slot(Rank x, Rank y, bool& swapped) {
  if (x >= n_ || y >= n_) throw std::out_of_range("bracket references unknown generator");
  if (x == y) throw std::invalid_argument("bracket of a generator with itself is fixed to zero");
  swapped = x < y;
  Rank hi = swapped ? y : x;
  Rank lo = swapped ? x : y;
  return entries_[static_cast<std::size_t>(hi) * n_ + lo];
}

void BracketTable::set(Rank x, Rank y, Element value) {
  bool swapped = false;
  Entry& e = slot(x, y, swapped);
  e.value = swapped ? -value : std::move(value);
  e.thunk = nullptr;
  e.negate = false;
}

void BracketTable::set(Rank x, Rank y, Thunk thunk) {
  bool swapped = false;
  Entry& e = slot(x, y, swapped);
  e.value.reset();
  e.thunk = std::move(thunk);
  e.negate = swapped;
}

void BracketTable::clear(Rank x, Rank y) {
  bool swapped = false;
  Entry& e = slot(x, y, swapped);
  e = Entry{};
}

// ----------------------------------------------------------------- Algebra

namespace {
constexpr int kMaxRewriteDepth = 2000;
}

void Algebra::Fuel::burn() {
  if (left == 0) throw FuelExhausted("rewrite fuel exhausted while normal ordering");
  --left;
}

Algebra::Algebra(Alphabet alphabet, BracketTable table, int order, AlgebraOptions options)
    : alphabet_(std::move(alphabet)),
      order_(order),
      options_(options),
      n_(alphabet_.size()),
      unit_coeff_(ZSeries::constant(1, order)) {
  if (order < 0) throw std::domain_error("negative truncation order");
  if (table.generators() != n_)
    throw std::invalid_argument("bracket table size does not match alphabet");
  entries_ = std::move(table.entries_);
  state_.assign(entries_.size(), 2);
  for (std::size_t hi = 0; hi < n_; ++hi) {
    for (std::size_t lo = 0; lo < n_; ++lo) {
      std::size_t i = hi * n_ + lo;
      auto& e = entries_[i];
      if (lo >= hi) {
        e = BracketTable::Entry{Element(order_), nullptr, false};
        continue;
      }
      if (e.value) {
        check_alphabet(*e.value, alphabet_);
        e.value = e.value->truncated(order_);
      } else if (e.thunk) {
        state_[i] = 0;
      } else {
        e.value = Element(order_);
      }
    }
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) force(i);
}

void Algebra::force(std::size_t index) const {
  if (state_[index] == 2) return;
  if (state_[index] == 1)
    throw std::logic_error("bracket table entry depends on itself");
  state_[index] = 1;
  Element v = entries_[index].thunk(*this);
  check_alphabet(v, alphabet_);
  if (entries_[index].negate) v = -v;
  entries_[index].value = v.truncated(order_);
  entries_[index].thunk = nullptr;
  state_[index] = 2;
}

const Element& Algebra::bracket_entry(Rank hi, Rank lo) const {
  std::size_t i = static_cast<std::size_t>(hi) * n_ + lo;
  if (state_[i] != 2) force(i);
  return *entries_[i].value;
}

Element Algebra::bracket(Rank x, Rank y) const {
  if (x == y) return Element(order_);
  if (x > y) return bracket_entry(x, y);
  return -bracket_entry(y, x);
}

BracketTable Algebra::table() const {
  BracketTable t(n_);
  for (std::size_t hi = 0; hi < n_; ++hi)
    for (std::size_t lo = 0; lo < hi; ++lo) {
      const Element& v = bracket_entry(static_cast<Rank>(hi), static_cast<Rank>(lo));
      if (!v.is_zero()) t.set(static_cast<Rank>(hi), static_cast<Rank>(lo), v);
    }
  return t;
}

std::size_t Algebra::cache_size() const {
  std::shared_lock lock(cache_mutex_);
  return cache_.size();
}

Algebra::ProductPtr Algebra::reorder(const Monomial& m, Rank g, Fuel& fuel) const {
  std::string key = m.key();
  key.push_back(static_cast<char>(g));
  {
    std::shared_lock lock(cache_mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  fuel.burn();
  struct DepthGuard {
    int& d;
    explicit DepthGuard(int& depth) : d(depth) {
      if (++d > kMaxRewriteDepth) throw FuelExhausted("rewrite recursion too deep while normal ordering");
    }
    ~DepthGuard() { --d; }
  } guard(fuel.depth);
  // m = head x with x > g:  m g = (head g) x + head [x, g]
  Rank x = m.back();
  Monomial head = m.without_last();
  auto product = std::make_shared<Element>(order_);
  Element head_g(order_);
  mono_times_gen_into(head_g, head, g, unit_coeff_, fuel);
  for (const auto& [t, c] : head_g.terms()) mono_times_gen_into(*product, t, x, c, fuel);
  for (const auto& [t, c] : bracket_entry(x, g).terms())
    mono_times_mono_into(*product, head, t, c, fuel);

  std::unique_lock lock(cache_mutex_);
  auto [it, inserted] = cache_.emplace(std::move(key), std::move(product));
  return it->second;
}

void Algebra::mono_times_gen_into(Element& out, const Monomial& m, Rank g, const ZSeries& c,
                                  Fuel& fuel) const {
  if (m.empty() || m.back() <= g) {
    out.add_term(m.appended(g), c);
    return;
  }
  out.add_scaled(*reorder(m, g, fuel), c);
}

void Algebra::mono_times_mono_into(Element& out, const Monomial& a, const Monomial& b,
                                   const ZSeries& c, Fuel& fuel) const {
  if (a.empty() || b.empty() || a.back() <= b.front()) {
    out.add_term(Monomial::concat(a, b), c);
    return;
  }
  Element current = Element::term(a, c);
  if (current.order() > order_) current = current.truncated(order_);
  for (std::size_t i = 0; i < b.degree(); ++i) {
    Element next(current.order());
    for (const auto& [t, tc] : current.terms()) mono_times_gen_into(next, t, b[i], tc, fuel);
    current = std::move(next);
  }
  out += current;
}

Element Algebra::monomial_product(const Monomial& a, const Monomial& b) const {
  Element out(order_);
  Fuel fuel{options_.fuel};
  mono_times_mono_into(out, a, b, unit_coeff_, fuel);
  return out;
}

Element Algebra::multiply(const Element& a, const Element& b) const {
  int ord = std::min({a.order(), b.order(), order_});
  Element out(ord);
  Fuel fuel{options_.fuel};
  for (const auto& [ma, ca] : a.terms()) {
    int va = ca.valuation();
    for (const auto& [mb, cb] : b.terms()) {
      if (va + cb.valuation() > ord) continue;
      mono_times_mono_into(out, ma, mb, multiply_truncated(ca, cb, ord), fuel);
    }
  }
  return out;
}

Element Algebra::multiply(std::initializer_list<Element> factors) const {
  Element out = one();
  for (const auto& f : factors) out = multiply(out, f);
  return out;
}

Element Algebra::commutator(const Element& a, const Element& b) const {
  return multiply(a, b) - multiply(b, a);
}

Element Algebra::power(const Element& a, int n) const {
  Element out = one().truncated(a.order());
  for (int i = 0; i < n; ++i) out = multiply(out, a);
  return out;
}

Element Algebra::exp(const Element& a) const {
  if (a.valuation() < 1)
    throw NonTruncatingExponential("exponential of an element with a z^0 term does not truncate");
  int ord = std::min(a.order(), order_);
  Element result = Element::unit(ord);
  Element term = Element::unit(ord);
  for (int n = 1; n <= ord; ++n) {
    term = multiply(term, a);
    term *= Rational(1, n);
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

Element Algebra::normal_order(const RawPoly& raw) const {
  Element out(order_);
  Fuel fuel{options_.fuel};
  for (const auto& t : raw) {
    for (Rank r : t.word)
      if (r >= n_) throw std::out_of_range("word references unknown generator");
    Element current = Element::term(Monomial{}, t.coefficient.truncated(order_));
    for (Rank r : t.word) {
      Element next(current.order());
      for (const auto& [m, c] : current.terms()) mono_times_gen_into(next, m, r, c, fuel);
      current = std::move(next);
    }
    out += current;
  }
  return out;
}

Element Algebra::generator_series(Rank g, const std::function<Rational(int)>& coeff,
                                  int z_shift) const {
  Element out(order_);
  for (int n = 0; n < z_shift; ++n)
    if (sgn(coeff(n)) != 0)
      throw std::domain_error("generator series has a negative power of z");
  for (int n = z_shift; n <= order_ + z_shift; ++n) {
    Rational q = coeff(n);
    if (sgn(q) == 0) continue;
    out.add_term(Monomial::power(g, n), ZSeries::monomial(q, n - z_shift, order_));
  }
  return out;
}

Element Algebra::exp_generator(Rank g, const Rational& c) const {
  return generator_series(g, [&c](int n) {
    Rational q{1};
    for (int k = 1; k <= n; ++k) q = q * c / k;
    return q;
  });
}

// --------------------------------------------------------- AlgebraMorphism

AlgebraMorphism::AlgebraMorphism(std::string name, AlgebraPtr source, AlgebraPtr target,
                                 std::vector<Element> images, Rational parameter_scale)
    : name_(std::move(name)),
      source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)),
      scale_(std::move(parameter_scale)) {
  if (images_.size() != source_->alphabet().size())
    throw std::invalid_argument("morphism '" + name_ + "' must give an image for every generator");
  for (const auto& img : images_) {
    try {
      check_alphabet(img, target_->alphabet());
    } catch (const std::out_of_range&) {
      throw std::out_of_range("morphism '" + name_ + "': image references unknown generator");
    }
  }
}

Element AlgebraMorphism::apply(const Monomial& m) const {
  if (m.empty()) return target_->one();
  if (m.degree() == 1) return images_.at(m[0]).truncated(target_->order());
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(m.key()); it != cache_.end()) return *it->second;
  }
  auto value = std::make_shared<Element>(
      target_->multiply(apply(m.without_last()), images_.at(m.back())));
  std::unique_lock lock(mutex_);
  auto [it, inserted] = cache_.emplace(m.key(), std::move(value));
  return *it->second;
}

Element AlgebraMorphism::apply(const Element& a) const {
  Element out(std::min(a.order(), target_->order()));
  for (const auto& [m, c] : a.terms()) out.add_scaled(apply(m), c.rescaled(scale_));
  return out;
}

} // namespace hopfverify
