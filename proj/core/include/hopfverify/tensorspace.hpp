#pragma once

#include "hopfverify/ncpoly.hpp"

#include <functional>
#include <map>
#include <vector>

namespace hopfverify {

/// Element of the 2nd or 3rd tensor power: each term is one normal-ordered
/// monomial per leg with a ZSeries coefficient.  Legs are never reordered
/// against each other.
class TensorElement {
public:
  using Legs = std::vector<Monomial>;
  using TermMap = std::map<Legs, ZSeries>;

  TensorElement() : TensorElement(2, 0) {}
  TensorElement(int arity, int order);

  /// 1 (x) 1 (x) ... with the given arity.
  static TensorElement unit(int arity, int order);
  /// a_1 (x) a_2 (x) ... ; arity is the number of factors.
  static TensorElement product_of(const std::vector<Element>& legs);

  int arity() const { return arity_; }
  int order() const { return order_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  int valuation() const;

  void add_term(const Legs& legs, const ZSeries& c);
  void add_scaled(const TensorElement& other, const ZSeries& c);

  TensorElement truncated(int order) const;
  TensorElement classical_part() const;
  TensorElement rescaled(const Rational& lambda) const;

  TensorElement& operator+=(const TensorElement& rhs);
  TensorElement& operator-=(const TensorElement& rhs);
  TensorElement& operator*=(const Rational& c);
  TensorElement& operator*=(const ZSeries& c);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(TensorElement a, const Rational& c) { return a *= c; }
  friend TensorElement operator*(const Rational& c, TensorElement a) { return a *= c; }
  friend TensorElement operator*(TensorElement a, const ZSeries& c) { return a *= c; }
  TensorElement operator-() const;

  friend bool operator==(const TensorElement&, const TensorElement&) = default;

private:
  void check_arity(const TensorElement& other) const;
  void lower_order(int order);

  int arity_;
  int order_;
  TermMap terms_;
};

class ArityMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

bool equal_to_order(const TensorElement& a, const TensorElement& b, int k);

/// a (x) b for two algebra elements.
TensorElement tensor(const Element& a, const Element& b);
TensorElement tensor(const Element& a, const Element& b, const Element& c);

/// Leg-wise product (x (x) y)(u (x) v) = xu (x) yv, normal ordered in each leg.
TensorElement tensor_mul(const Algebra& algebra, const TensorElement& a, const TensorElement& b);
TensorElement tensor_commutator(const Algebra& algebra, const TensorElement& a,
                                const TensorElement& b);
/// Sum of t^n/n!; every term of t must carry at least one power of z.
TensorElement tensor_exp(const Algebra& algebra, const TensorElement& t);

/// Exchanges the two legs of an arity-2 tensor.
TensorElement flip(const TensorElement& a);

enum class LegPair { L12, L13, L23 };
/// Arity-2 -> arity-3 by inserting the unit in the omitted leg.
TensorElement embed(const TensorElement& a, LegPair legs);
LegPair parse_leg_pair(std::string_view text);

/// Linear maps given by their value on a monomial.
using ElementMap = std::function<Element(const Monomial&)>;
using TensorMap = std::function<TensorElement(const Monomial&)>;

/// Applies an algebra-valued linear map to one leg (0-based).
TensorElement apply_on_leg(const TensorElement& a, int leg, const ElementMap& map);
/// Applies a tensor-valued map to one leg; the arity grows by arity(map)-1.
TensorElement apply_on_leg(const TensorElement& a, int leg, const TensorMap& map);
/// Applies a scalar-valued map (e.g. a counit) to one leg and drops it.
/// Arity-2 input yields an arity-1 tensor.
TensorElement contract_leg(const TensorElement& a, int leg,
                           const std::function<ZSeries(const Monomial&)>& map);

/// m(x (x) y) = xy for arity 2.
Element multiply_legs(const Algebra& algebra, const TensorElement& a);

/// Arity-1 tensors and algebra elements are the same thing.
TensorElement as_tensor(const Element& a);
Element as_element(const TensorElement& a);

/// Applies the morphism to every leg, rescaling coefficients once.
TensorElement apply_morphism(const AlgebraMorphism& map, const TensorElement& a);

} // namespace hopfverify
