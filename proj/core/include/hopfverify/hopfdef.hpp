#pragma once

#include "hopfverify/tensorspace.hpp"

#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace hopfverify {

/// Algebra plus coproduct, counit and antipode on generators.  Delta and
/// epsilon extend multiplicatively, the antipode anti-multiplicatively.
class HopfPresentation {
public:
  HopfPresentation(std::string name, AlgebraPtr algebra, std::vector<TensorElement> coproduct,
                   std::vector<ZSeries> counit, std::vector<Element> antipode);
  HopfPresentation(const HopfPresentation&) = delete;
  HopfPresentation& operator=(const HopfPresentation&) = delete;

  const std::string& name() const { return name_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const Algebra& algebra() const { return *algebra_; }
  const Alphabet& alphabet() const { return algebra_->alphabet(); }
  int order() const { return algebra_->order(); }

  const TensorElement& coproduct_of(Rank r) const { return coproduct_.at(r); }
  const ZSeries& counit_of(Rank r) const { return counit_.at(r); }
  const Element& antipode_of(Rank r) const { return antipode_.at(r); }
  const std::vector<TensorElement>& coproduct_table() const { return coproduct_; }
  const std::vector<ZSeries>& counit_table() const { return counit_; }
  const std::vector<Element>& antipode_table() const { return antipode_; }

  TensorElement coproduct(const Monomial& m) const;
  TensorElement coproduct(const Element& a) const;
  ZSeries counit(const Monomial& m) const;
  ZSeries counit(const Element& a) const;
  Element antipode(const Monomial& m) const;
  Element antipode(const Element& a) const;

  /// Same structure maps rebuilt over an algebra truncated at a lower order.
  std::shared_ptr<const HopfPresentation> truncated(int order) const;
  /// Same data under another label.
  std::shared_ptr<const HopfPresentation> renamed(std::string name) const;

private:
  std::string name_;
  AlgebraPtr algebra_;
  std::vector<TensorElement> coproduct_;
  std::vector<ZSeries> counit_;
  std::vector<Element> antipode_;

  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<std::string, std::shared_ptr<const TensorElement>> delta_cache_;
  mutable std::unordered_map<std::string, std::shared_ptr<const Element>> gamma_cache_;
};

using PresentationPtr = std::shared_ptr<const HopfPresentation>;

/// Outcome of one check.  The witness is the first nonzero residual, printed
/// in .alg syntax.
struct Report {
  std::string id;
  std::string presentation;
  int order = 0;
  bool pass = true;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string failed_case;
  std::string witness;
  std::vector<std::string> notes;
  double seconds = 0;
};

struct CheckOptions {
  /// Return at the first failing case (used by the mutation sweep).
  bool stop_at_first_failure = false;
  std::uint64_t seed = 1;
  /// Number of random degree-2 products checked on top of the generators.
  int samples = 6;
  /// Worker threads for checks that split into independent jobs.
  unsigned jobs = 1;
};

/// Records case outcomes into a Report and times the whole check.
class CaseRecorder {
public:
  CaseRecorder(std::string id, const std::string& presentation, int order,
               const CheckOptions& options);
  /// Returns false when the check should stop.
  bool record(const std::string& label, bool ok, const std::function<std::string()>& witness);
  bool stopped() const { return stopped_; }
  void note(std::string text) { report_.notes.push_back(std::move(text)); }
  Report finish();

private:
  Report report_;
  bool stop_early_;
  bool stopped_ = false;
  double start_;
};

double seconds_now();

/// Label "(X, Y, Z)" from generator names.
std::string case_label(const Alphabet& alphabet, std::initializer_list<Rank> ranks);

/// Generators plus a seeded sample of degree-2 products XY.
std::vector<std::pair<std::string, Element>> sample_elements(const HopfPresentation& p,
                                                             const CheckOptions& options);

Report check_jacobi(const HopfPresentation& p, const CheckOptions& options = {});
Report check_coproduct_homomorphism(const HopfPresentation& p, const CheckOptions& options = {});
Report check_coassociativity(const HopfPresentation& p, const CheckOptions& options = {});
/// (eps (x) id) Delta = id = (id (x) eps) Delta, plus eps vanishing on brackets.
Report check_counit(const HopfPresentation& p, const CheckOptions& options = {});
/// m(S (x) id) Delta = eps 1 = m(id (x) S) Delta, plus S([X,Y]) = [S(Y), S(X)].
Report check_antipode(const HopfPresentation& p, const CheckOptions& options = {});

/// Jacobi, homomorphism, coassociativity, counit and antipode in that order.
std::vector<Report> run_hopf_suite(const HopfPresentation& p, const CheckOptions& options = {});

/// A single-coefficient change in one structure table.
struct Mutation {
  enum class Table { Bracket, Coproduct, Counit, Antipode };
  enum class Kind { Negate, Double, SetOne };
  Table table = Table::Bracket;
  Kind kind = Kind::Negate;
  /// Bracket [x, y] with x > y, or the generator x for the maps.
  Rank x = 0, y = 0;
  /// Monomials of the changed term, one per leg (empty for the counit).
  TensorElement::Legs legs;
  int power = 0;

  std::string label(const Alphabet& alphabet) const;
};

/// Negation and doubling of every nonzero coefficient of the bracket,
/// coproduct and antipode tables, and eps(X) = 1 for every generator.
std::vector<Mutation> mutation_sites(const HopfPresentation& p);
std::shared_ptr<const HopfPresentation> apply_mutation(const HopfPresentation& p,
                                                       const Mutation& m);

} // namespace hopfverify
