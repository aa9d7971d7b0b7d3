#pragma once

#include "hopfverify/hopfdef.hpp"

#include <map>
#include <mutex>
#include <string>
#include <unordered_map>

namespace hopfverify::bicross {

/// Translation generators P+, P1, P2, P- span A; the Lorentz generators
/// span K.  Both live in the null-plane alphabet.
bool is_translation(Rank r);
bool is_lorentz(Rank r);
bool in_translations(const Element& a);
bool in_lorentz(const Element& h);

/// Right action of K on A, a <| h := [a, h] on generators, extended by
/// Leibniz in a and as a right action in h.
class ActionTable {
public:
  /// `carrier` multiplies translation elements (any null-plane algebra).
  explicit ActionTable(AlgebraPtr carrier);

  const Element& entry(Rank a, Rank h) const;
  Element act(const Monomial& a, Rank h) const;
  Element act(const Element& a, Rank h) const;
  /// h is applied letter by letter, left to right.
  Element act(const Element& a, const Monomial& h) const;
  Element act(const Element& a, const Element& h) const;

private:
  AlgebraPtr A_;
  std::vector<Element> table_;  // 4 x 6
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::string, Element> cache_;
};

/// Left coaction of A on K, tabulated on the Lorentz generators.
class CoactionTable {
public:
  explicit CoactionTable(AlgebraPtr carrier);

  const TensorElement& entry(Rank h) const;
  /// Defined on the unit and on single generators only.
  TensorElement coact(const Monomial& h) const;
  TensorElement coact(const Element& h) const;

private:
  AlgebraPtr A_;
  std::vector<TensorElement> table_;
};

/// K (x) A with the bicrossproduct product and coproduct.  Values are
/// arity-2 tensors (Lorentz leg, translation leg); coproducts have arity 4.
class CrossedProduct {
public:
  explicit CrossedProduct(int order, AlgebraOptions options = {});

  int order() const { return order_; }
  const Algebra& carrier() const { return *A_; }
  const Alphabet& alphabet() const { return A_->alphabet(); }
  const ActionTable& action() const { return action_; }
  const CoactionTable& coaction() const { return coaction_; }

  /// Hopf structure of the translation subalgebra.
  TensorElement translation_coproduct(const Monomial& a) const;
  TensorElement translation_coproduct(const Element& a) const;
  ZSeries translation_counit(const Element& a) const;
  Element translation_antipode(const Monomial& a) const;
  /// Undeformed Lorentz Hopf structure (primitive coproduct).
  TensorElement lorentz_coproduct(const Monomial& h) const;
  TensorElement lorentz_coproduct(const Element& h) const;
  ZSeries lorentz_counit(const Element& h) const;

  /// h (x) 1 or 1 (x) a for a generator.
  TensorElement generator(Rank r) const;
  /// (h (x) a)(g (x) b) = sum h g_(1) (x) (a <| g_(2)) b
  TensorElement multiply(const TensorElement& x, const TensorElement& y) const;
  TensorElement commutator(const TensorElement& x, const TensorElement& y) const;
  /// Delta(h (x) a) = sum (h_(1) (x) h_(2)^(-1) a_(1)) (x) (h_(2)^(0) (x) a_(2)).
  TensorElement coproduct_of(Rank r) const;
  TensorElement antipode_of(Rank r) const;

  /// Normal-ordered element a*h of the null-plane alphabet to K (x) A.
  TensorElement to_crossed(const Element& x) const;
  TensorElement to_crossed(const TensorElement& x) const;  // leg-wise, arity doubles
  /// Inverse of to_crossed; even arity in, half arity out.
  Element from_crossed(const TensorElement& t) const;
  TensorElement from_crossed_pairs(const TensorElement& t) const;

  /// Presentation assembled from the crossed product alone.
  PresentationPtr reconstructed() const;

private:
  TensorElement to_crossed_monomial(const Monomial& m) const;
  Element from_crossed_monomial(const Monomial& h, const Monomial& a) const;

  int order_;
  PresentationPtr classical_;
  AlgebraPtr A_;
  ActionTable action_;
  CoactionTable coaction_;
  std::vector<TensorElement> translation_delta_;
  std::vector<Element> translation_gamma_;

  mutable std::mutex mutex_;
  mutable std::unordered_map<std::string, TensorElement> to_cache_;
  mutable std::unordered_map<std::string, Element> from_cache_;
  mutable std::unordered_map<std::string, TensorElement> delta_a_cache_;
};

/// Table (action) against [X, Y] of the given presentation, closure of A,
/// Leibniz against products in the presentation, and (a <| g) <| h = a <| (gh).
Report check_module_algebra(const CrossedProduct& cp, const HopfPresentation& bicross,
                            const CheckOptions& options = {});
/// Coaction and counit axioms, and compatibility with the Lorentz coproduct.
Report check_comodule_coalgebra(const CrossedProduct& cp, const CheckOptions& options = {});
/// eps(a <| h) = eps(a) eps(h) and Delta(a <| h) on all generator pairs.
Report check_action_coproduct_compat(const CrossedProduct& cp,
                                     const CheckOptions& options = {});
/// Brackets, coproducts, counit and antipode of the crossed product against
/// the presentation, then the Hopf suite on the reconstructed presentation.
Report reconstruct(const CrossedProduct& cp, const HopfPresentation& bicross,
                   const CheckOptions& options = {});

} // namespace hopfverify::bicross
