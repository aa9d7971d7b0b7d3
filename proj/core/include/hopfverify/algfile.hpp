#pragma once

#include "hopfverify/hopfdef.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hopfverify {

/// Rejection with a 1-based source position.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, int column, const std::string& reason);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& reason() const { return reason_; }

private:
  int line_, column_;
  std::string reason_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Number, Param, Symbol, Neg, Add, Sub, Mul, Div, Tensor, Pow, Exp, Bracket };
  Kind kind;
  int line = 1, column = 1;
  Rational number;     // Number
  std::string name;    // Symbol
  int exponent = 0;    // Pow
  ExprPtr lhs, rhs;    // unary operand in lhs
};

/// Names an expression may refer to besides generators and the parameter.
struct SymbolTable {
  Alphabet alphabet;
  /// Named expressions, inlined where referenced.
  std::map<std::string, ExprPtr, std::less<>> macros;
  /// Named values computed on demand in the evaluation algebra.
  std::map<std::string, std::function<Element(const Algebra&)>, std::less<>> values;

  bool knows(std::string_view name) const;
};

/// Parses one expression.  Line and column of errors are relative to
/// (line, column) of the first character.
ExprPtr parse_expression(std::string_view text, const SymbolTable& symbols, int line = 1,
                         int column = 1);

/// Upper bound on how many powers of z divisions in the expression can
/// consume.
int division_depth(const Expr& e, const SymbolTable& symbols);

/// Evaluates in the given algebra.  Arity 1 values are algebra elements.
TensorElement evaluate(const Expr& e, const Algebra& algebra, const SymbolTable& symbols);

/// Parses and evaluates, raising the working order so divisions by z do not
/// lose accuracy.  `build` returns the algebra to use at a requested order.
TensorElement evaluate_text(std::string_view text, const SymbolTable& symbols, int order,
                            const std::function<const Algebra&(int)>& build);

/// Canonical text of an expression tree (minimal parentheses).
std::string print_expr(const Expr& e, const Alphabet& alphabet);

/// Deterministic, re-parseable rendering; exp(c*z*X) is factored out of
/// runs of the rank-0 generator where that shortens the output.
std::string print_element(const Element& a, const Alphabet& alphabet);
std::string print_tensor(const TensorElement& a, const Alphabet& alphabet);
std::string print_series(const ZSeries& s, const Alphabet& alphabet);

struct Definition {
  std::string target;   // generator or element name
  std::string second;   // second bracket argument
  ExprPtr expr;
  int line = 0;
};

/// Parsed .alg file.
struct AlgebraDocument {
  int version = 1;
  std::string name;
  std::string parameter = "z";
  std::optional<int> order;
  std::vector<Generator> generators;
  std::vector<Definition> brackets;
  std::vector<Definition> coproduct, counit, antipode;
  std::vector<Definition> elements;

  Alphabet alphabet() const { return Alphabet(generators, parameter); }
  SymbolTable symbols() const;
};

AlgebraDocument parse_document(std::string_view text);
AlgebraDocument load_document(const std::string& path);
std::string print_document(const AlgebraDocument& doc);

/// Builds the presentation at the given order (or the document's own).
PresentationPtr instantiate(const AlgebraDocument& doc, std::optional<int> order = {},
                            AlgebraOptions options = {});

/// Renders a built presentation as a document with expanded values.
std::string print_presentation(const HopfPresentation& p);

/// Entry-by-entry comparison of tables and structure maps.
Report compare_presentations(const HopfPresentation& a, const HopfPresentation& b);

} // namespace hopfverify
