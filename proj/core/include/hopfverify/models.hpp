#pragma once

#include "hopfverify/hopfdef.hpp"

#include <memory>
#include <string>
#include <vector>

namespace hopfverify::models {

/// Null-plane ranks, shared by the classical, tilde and bicross alphabets.
namespace np {
inline constexpr Rank Pp = 0, P1 = 1, P2 = 2, Pm = 3, E1 = 4, E2 = 5, J3 = 6, K3 = 7, F1 = 8,
                      F2 = 9;
}

/// Kinematical ranks.
namespace kin {
inline constexpr Rank H = 0, P1 = 1, P2 = 2, P3 = 3, K1 = 4, K2 = 5, K3 = 6, J1 = 7, J2 = 8,
                      J3 = 9;
}

/// P+, P1, P2, P-, E1, E2, J3, K3, F1, F2 with an optional name suffix ("~").
Alphabet null_plane_alphabet(const std::string& suffix = "", const std::string& parameter = "z");
Alphabet kinematical_alphabet();

PresentationPtr build_classical(int order, AlgebraOptions options = {});
/// The antipode is conjugation by exp(c zt P+~); c = 3 is the printed form.
PresentationPtr build_tilde(int order, int antipode_exponent = 3, AlgebraOptions options = {});
PresentationPtr build_bicross(int order, AlgebraOptions options = {});
/// Undeformed Poincare algebra in the basis H, P_l, K_l, J_l.
PresentationPtr build_kinematical(int order, AlgebraOptions options = {});

using MorphismPtr = std::shared_ptr<const AlgebraMorphism>;

/// Null-plane generators as kinematical elements, and the inverse.
MorphismPtr build_kinematical_map(const PresentationPtr& classical,
                                  const PresentationPtr& kinematical);
MorphismPtr build_kinematical_inverse(const PresentationPtr& kinematical,
                                      const PresentationPtr& classical);
/// Bicross generators as tilde elements (z = 2 zt).
MorphismPtr build_basis_change(const PresentationPtr& bicross, const PresentationPtr& tilde);
/// Tilde generators as bicross elements (zt = z/2).
MorphismPtr build_inverse(const PresentationPtr& tilde, const PresentationPtr& bicross);

/// Functions of one generator g used throughout the structure maps.
class Series {
public:
  Series(const Algebra& algebra, Rank g) : A_(algebra), g_(g) {}
  /// exp(c z g)
  Element exp(const Rational& c) const;
  /// sinh(c z g) / (c z)
  Element sinh_over(const Rational& c) const;
  /// sinh(c z g)
  Element sinh(const Rational& c) const;
  /// cosh(c z g)
  Element cosh(const Rational& c) const;
  /// (exp(c z g) - 1) / z
  Element expm1_over_z(const Rational& c) const;
  /// c z as a scalar element.
  Element z(const Rational& c = 1, int power = 1) const;

private:
  const Algebra& A_;
  Rank g_;
};

Element tilde_w_plus(const Algebra& tilde);

struct PauliLubanski {
  Element w13, w23, wm, wp;
};

Element mass_casimir(const Algebra& bicross);
PauliLubanski pl_components(const Algebra& bicross);
Element pl_square(const Algebra& bicross);

/// The six exponent tensors of the R-matrix, left to right.
std::vector<TensorElement> rmatrix_exponents(const Algebra& bicross);
TensorElement build_rmatrix(const Algebra& bicross);
TensorElement build_rmatrix_inverse(const Algebra& bicross);

/// Everything at one truncation order.
struct ModelRegistry {
  int order = 0;
  PresentationPtr classical, tilde, bicross, kinematical;
  MorphismPtr aa, aa_inverse, ba, ma;

  static std::shared_ptr<const ModelRegistry> build(int order, AlgebraOptions options = {});
  /// Presentations truncated to a lower order, morphisms rebuilt on them.
  std::shared_ptr<const ModelRegistry> truncated(int order) const;
};

Report check_morphism_roundtrip(const MorphismPtr& forward, const MorphismPtr& backward,
                                const CheckOptions& options = {});
/// [phi X, phi Y], Delta(phi X) and S(phi X) computed in the tilde basis and
/// pulled back to the bicross basis.
Report check_hopf_isomorphism(const ModelRegistry& models, const CheckOptions& options = {});
/// Source brackets map to target brackets.
Report check_lie_homomorphism(const MorphismPtr& map, const CheckOptions& options = {});
Report check_w_plus_transport(const ModelRegistry& models, const CheckOptions& options = {});

Report check_centrality(const std::string& id, const Element& c, const HopfPresentation& p,
                        const CheckOptions& options = {});

Report check_rmatrix_inverse(const HopfPresentation& bicross, const CheckOptions& options = {});
Report check_intertwining(const HopfPresentation& bicross, const CheckOptions& options = {});
Report check_triangularity(const HopfPresentation& bicross, const CheckOptions& options = {});
Report check_qybe(const HopfPresentation& bicross, const CheckOptions& options = {});

/// z^0 parts of the deformed tables and distinguished elements.
Report check_classical_limits(const ModelRegistry& models, const CheckOptions& options = {});

/// Antipode check on the tilde basis.  The verdict for conjugation by
/// exp(zt P+~) instead of exp(3 zt P+~) is added as a note.
Report check_tilde_antipode(const HopfPresentation& tilde, const CheckOptions& options = {});

/// Copy of the registry with one presentation replaced ("classical",
/// "tilde", "bicross" or "kinematical"); the morphisms are rebuilt.
std::shared_ptr<const ModelRegistry> with_presentation(const ModelRegistry& models,
                                                       const std::string& role,
                                                       PresentationPtr p);

/// Runs every single-coefficient mutant of the four presentations through
/// the checks that involve it.  Each surviving mutant is a failed case.
Report check_mutation_sweep(const ModelRegistry& models, const CheckOptions& options = {});

} // namespace hopfverify::models
