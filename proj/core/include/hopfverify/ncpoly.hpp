#pragma once

#include "hopfverify/scalars.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hopfverify {

/// Position of a generator in the fixed PBW order of its alphabet.
using Rank = std::uint8_t;

struct Generator {
  std::string name;
  /// 0 for translations, 1 for Lorentz generators.
  int lorentz_degree = 0;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Ordered generator set plus the name of the deformation parameter.
/// Rank i is the i-th generator; ranks fix the normal order.
class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Generator> generators, std::string parameter = "z");

  std::size_t size() const { return generators_.size(); }
  const Generator& operator[](Rank r) const { return generators_.at(r); }
  const std::vector<Generator>& generators() const { return generators_; }
  const std::string& parameter() const { return parameter_; }

  std::optional<Rank> find(std::string_view name) const;
  /// Throws std::out_of_range for unknown names.
  Rank rank(std::string_view name) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
  std::vector<Generator> generators_;
  std::string parameter_ = "z";
};

/// Sorted word of generator ranks; the empty word is the unit.
/// Stored as a byte string so short words stay inline.
class Monomial {
public:
  Monomial() = default;
  Monomial(std::initializer_list<Rank> ranks);
  /// Builds from an arbitrary rank sequence that must already be sorted.
  static Monomial from_sorted(const std::vector<Rank>& ranks);
  static Monomial power(Rank r, int n);

  std::size_t degree() const { return word_.size(); }
  bool empty() const { return word_.empty(); }
  Rank operator[](std::size_t i) const { return static_cast<Rank>(word_[i]); }
  Rank front() const { return static_cast<Rank>(word_.front()); }
  Rank back() const { return static_cast<Rank>(word_.back()); }
  /// Number of leading letters equal to rank r.
  int leading_power(Rank r) const;

  Monomial without_last() const;
  Monomial without_leading(int count) const;
  /// Requires back() <= r.
  Monomial appended(Rank r) const;
  /// Requires a.back() <= b.front().
  static Monomial concat(const Monomial& a, const Monomial& b);
  /// Letters whose bit is set in mask, in order.
  Monomial subword(std::uint64_t mask) const;

  std::vector<Rank> ranks() const;
  const std::string& key() const { return word_; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Degree first, then lexicographic by rank.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

private:
  std::string word_;
};

/// Normal-ordered noncommutative polynomial with ZSeries coefficients.
/// Zero coefficients are never stored, so equal values have equal maps.
class Element {
public:
  using TermMap = std::map<Monomial, ZSeries>;

  explicit Element(int order = 0) : order_(order) {}

  static Element unit(int order);
  static Element scalar(const ZSeries& s);
  static Element generator(Rank r, int order);
  static Element term(const Monomial& m, const ZSeries& c);

  int order() const { return order_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Minimum z-valuation over all terms; order()+1 for zero.
  int valuation() const;
  bool is_scalar() const;
  /// Coefficient of the unit monomial.
  ZSeries scalar_part() const;
  /// Coefficient of m, zero series if absent.
  ZSeries coefficient(const Monomial& m) const;
  /// Largest monomial degree present.
  std::size_t degree() const;

  /// Adds c*m.  A lower-order coefficient lowers the order of the element.
  void add_term(const Monomial& m, const ZSeries& c);
  /// this += c * other.
  void add_scaled(const Element& other, const ZSeries& c);

  Element truncated(int order) const;
  /// Keeps only z^0 coefficients.
  Element classical_part() const;
  /// Substitution z -> lambda * z in every coefficient.
  Element rescaled(const Rational& lambda) const;
  Element divided_by_z() const;

  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(const Rational& c);
  Element& operator*=(const ZSeries& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Rational& c) { return a *= c; }
  friend Element operator*(const Rational& c, Element a) { return a *= c; }
  friend Element operator*(Element a, const ZSeries& c) { return a *= c; }
  friend Element operator*(const ZSeries& c, Element a) { return a *= c; }
  Element operator-() const;

  friend bool operator==(const Element&, const Element&) = default;

private:
  void lower_order(int order);

  int order_ = 0;
  TermMap terms_;
};

/// Equality after truncating both sides to order k.
bool equal_to_order(const Element& a, const Element& b, int k);

/// Word in arbitrary order with a coefficient; input to normal ordering.
struct RawTerm {
  std::vector<Rank> word;
  ZSeries coefficient;
};
using RawPoly = std::vector<RawTerm>;

class Algebra;

/// Brackets [X,Y] for rank(X) > rank(Y).  Entries can be given eagerly or
/// as thunks evaluated once by the owning Algebra, so right-hand sides may
/// use the algebra they define (e.g. products that need reordering).
class BracketTable {
public:
  using Thunk = std::function<Element(const Algebra&)>;

  explicit BracketTable(std::size_t generators = 0);

  std::size_t generators() const { return n_; }
  /// Sets [x, y]; the antisymmetric partner is implied.
  void set(Rank x, Rank y, Element value);
  void set(Rank x, Rank y, Thunk thunk);
  void clear(Rank x, Rank y);

private:
  friend class Algebra;
  struct Entry {
    std::optional<Element> value;
    Thunk thunk;
    bool negate = false;
  };
  Entry& slot(Rank x, Rank y, bool& swapped);

  std::size_t n_ = 0;
  std::vector<Entry> entries_;
};

class FuelExhausted : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NonTruncatingExponential : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

struct AlgebraOptions {
  /// Rewrite steps allowed per top-level product.
  std::uint64_t fuel = 1'000'000;
};

/// Enveloping-type algebra given by generators and a bracket table,
/// truncated at a fixed order in the deformation parameter.  Products are
/// normal ordered by rewriting YX -> XY + [Y,X] for rank(Y) > rank(X);
/// products of a monomial with a generator are memoized.
class Algebra {
public:
  Algebra(Alphabet alphabet, BracketTable table, int order, AlgebraOptions options = {});
  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  const Alphabet& alphabet() const { return alphabet_; }
  int order() const { return order_; }
  const AlgebraOptions& options() const { return options_; }

  /// Normalized table entry [hi, lo], hi > lo.
  const Element& bracket_entry(Rank hi, Rank lo) const;
  /// [x, y] for any pair of generators.
  Element bracket(Rank x, Rank y) const;
  /// The table as explicit values (for copying or mutating a presentation).
  BracketTable table() const;

  Element one() const { return Element::unit(order_); }
  Element gen(Rank r) const { return Element::generator(r, order_); }
  Element gen(std::string_view name) const { return gen(alphabet_.rank(name)); }

  Element multiply(const Element& a, const Element& b) const;
  Element multiply(std::initializer_list<Element> factors) const;
  Element commutator(const Element& a, const Element& b) const;
  Element power(const Element& a, int n) const;
  /// Sum of a^n/n!; every term of a must carry at least one power of z.
  Element exp(const Element& a) const;
  Element normal_order(const RawPoly& raw) const;
  Element monomial_product(const Monomial& a, const Monomial& b) const;

  /// Sum over n of coeff(n) z^(n - z_shift) g^n, for n from z_shift up to
  /// order + z_shift.  Requires coeff(n) = 0 for n < z_shift.  Used for the
  /// functions of a single generator that appear in the structure maps.
  Element generator_series(Rank g, const std::function<Rational(int)>& coeff,
                           int z_shift = 0) const;
  /// exp(c z g), expanded.
  Element exp_generator(Rank g, const Rational& c) const;

  std::size_t cache_size() const;

  struct Fuel {
    std::uint64_t left;
    int depth = 0;
    void burn();
  };

private:
  using ProductPtr = std::shared_ptr<const Element>;

  void force(std::size_t index) const;
  void mono_times_gen_into(Element& out, const Monomial& m, Rank g, const ZSeries& c,
                           Fuel& fuel) const;
  void mono_times_mono_into(Element& out, const Monomial& a, const Monomial& b,
                            const ZSeries& c, Fuel& fuel) const;
  ProductPtr reorder(const Monomial& m, Rank g, Fuel& fuel) const;

  Alphabet alphabet_;
  int order_;
  AlgebraOptions options_;
  std::size_t n_;
  ZSeries unit_coeff_;

  // Table forcing state: 0 pending, 1 in progress, 2 done.
  mutable std::vector<BracketTable::Entry> entries_;
  mutable std::vector<int> state_;
  std::vector<bool> commuting_;

  mutable std::shared_mutex cache_mutex_;
  mutable std::unordered_map<std::string, ProductPtr> cache_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Generator-image map extended multiplicatively and linearly.  The
/// deformation parameters are related by z_source = scale * z_target.
class AlgebraMorphism {
public:
  AlgebraMorphism(std::string name, AlgebraPtr source, AlgebraPtr target,
                  std::vector<Element> images, Rational parameter_scale);

  const std::string& name() const { return name_; }
  const AlgebraPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }
  const Element& image(Rank r) const { return images_.at(r); }
  const Rational& parameter_scale() const { return scale_; }

  Element apply(const Element& a) const;
  Element apply(const Monomial& m) const;

private:
  std::string name_;
  AlgebraPtr source_, target_;
  std::vector<Element> images_;
  Rational scale_;

  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<std::string, std::shared_ptr<const Element>> cache_;
};

/// Unit and generators are strictly below rank limits of the alphabet.
void check_alphabet(const Element& a, const Alphabet& alphabet);

} // namespace hopfverify
