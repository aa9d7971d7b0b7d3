#include "hopfverify/algfile.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace hopfverify {

ParseError::ParseError(int line, int column, const std::string& reason)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + reason),
      line_(line),
      column_(column),
      reason_(reason) {}

bool SymbolTable::knows(std::string_view name) const {
  return alphabet.find(name).has_value() || name == alphabet.parameter() ||
         macros.find(name) != macros.end() || values.find(name) != values.end();
}

// ------------------------------------------------------------------- lexer

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, LBracket,
                 RBracket, Comma, Tensor, End };

struct Token {
  Tok kind;
  std::string text;
  int line, column;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool suffix_char(char c) { return c == '+' || c == '-' || c == '~'; }

class Lexer {
public:
  Lexer(std::string_view text, const SymbolTable& symbols, int line, int column)
      : text_(text), symbols_(symbols), line_(line), column_(column) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      int line = line_, col = column_;
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", line, col});
        return out;
      }
      char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
          advance(1);
        out.push_back({Tok::Number, std::string(text_.substr(start, pos_ - start)), line, col});
        continue;
      }
      if (ident_start(c)) {
        out.push_back(identifier(line, col));
        continue;
      }
      if (text_.substr(pos_, 3) == "(x)") {
        advance(3);
        out.push_back({Tok::Tensor, "(x)", line, col});
        continue;
      }
      Tok kind;
      switch (c) {
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '/': kind = Tok::Slash; break;
        case '^': kind = Tok::Caret; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case '[': kind = Tok::LBracket; break;
        case ']': kind = Tok::RBracket; break;
        case ',': kind = Tok::Comma; break;
        default:
          throw ParseError(line, col, std::string("unexpected character '") + c + "'");
      }
      advance(1);
      out.push_back({kind, std::string(1, c), line, col});
    }
  }

private:
  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      advance(1);
  }

  // Longest match of identifier plus +, -, ~ suffixes against known names.
  Token identifier(int line, int col) {
    std::size_t start = pos_, end = pos_;
    while (end < text_.size() && ident_char(text_[end])) ++end;
    std::size_t bare = end;
    while (end < text_.size() && suffix_char(text_[end])) ++end;
    for (std::size_t len = end - start; len >= bare - start; --len) {
      std::string_view cand = text_.substr(start, len);
      if (symbols_.knows(cand) || (len == bare - start && cand == "exp")) {
        advance(len);
        return {Tok::Ident, std::string(cand), line, col};
      }
      if (len == bare - start) break;
    }
    throw ParseError(line, col, "unknown symbol '" + std::string(text_.substr(start, end - start)) + "'");
  }

  std::string_view text_;
  const SymbolTable& symbols_;
  std::size_t pos_ = 0;
  int line_, column_;
};

// ------------------------------------------------------------------ parser

class Parser {
public:
  Parser(std::vector<Token> tokens, const SymbolTable& symbols)
      : toks_(std::move(tokens)), symbols_(symbols) {}

  ExprPtr parse_all() {
    ExprPtr e = sum();
    if (peek().kind != Tok::End) fail(peek(), "unexpected '" + peek().text + "'");
    return e;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const Token& t, const std::string& why) const {
    throw ParseError(t.line, t.column, t.kind == Tok::End ? why + " (at end of input)" : why);
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) fail(peek(), std::string("expected ") + what);
  }

  static ExprPtr node(Expr::Kind k, const Token& at, ExprPtr l = nullptr, ExprPtr r = nullptr) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->line = at.line;
    e->column = at.column;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
  }

  ExprPtr sum() {
    ExprPtr e = tensor();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token& op = take();
      e = node(op.kind == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Sub, op, e, tensor());
    }
    return e;
  }

  ExprPtr tensor() {
    ExprPtr e = product();
    while (peek().kind == Tok::Tensor) {
      const Token& op = take();
      e = node(Expr::Kind::Tensor, op, e, product());
    }
    return e;
  }

  ExprPtr product() {
    ExprPtr e = unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token& op = take();
      e = node(op.kind == Tok::Star ? Expr::Kind::Mul : Expr::Kind::Div, op, e, unary());
    }
    return e;
  }

  ExprPtr unary() {
    if (peek().kind == Tok::Minus) {
      const Token& op = take();
      return node(Expr::Kind::Neg, op, unary());
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (peek().kind == Tok::Caret) {
      const Token& op = take();
      const Token& n = peek();
      if (n.kind != Tok::Number) fail(n, "expected a non-negative integer exponent");
      take();
      if (n.text.size() > 4) fail(n, "exponent too large");
      auto e = std::make_shared<Expr>(*node(Expr::Kind::Pow, op, base));
      e->exponent = std::stoi(n.text);
      return e;
    }
    return base;
  }

  ExprPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        take();
        auto e = std::make_shared<Expr>(*node(Expr::Kind::Number, t));
        e->number = Rational(t.text);
        return e;
      }
      case Tok::Ident: {
        take();
        if (t.text == "exp" && !symbols_.knows("exp")) {
          expect(Tok::LParen, "'(' after exp");
          ExprPtr arg = sum();
          expect(Tok::RParen, "')'");
          return node(Expr::Kind::Exp, t, arg);
        }
        if (t.text == symbols_.alphabet.parameter()) return node(Expr::Kind::Param, t);
        auto e = std::make_shared<Expr>(*node(Expr::Kind::Symbol, t));
        e->name = t.text;
        return e;
      }
      case Tok::LParen: {
        take();
        ExprPtr e = sum();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::LBracket: {
        take();
        ExprPtr a = sum();
        expect(Tok::Comma, "',' in bracket");
        ExprPtr b = sum();
        expect(Tok::RBracket, "']'");
        return node(Expr::Kind::Bracket, t, a, b);
      }
      default:
        fail(t, t.kind == Tok::End ? "expected an expression" : "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  const SymbolTable& symbols_;
  std::size_t pos_ = 0;
};

} // namespace

ExprPtr parse_expression(std::string_view text, const SymbolTable& symbols, int line,
                         int column) {
  Lexer lex(text, symbols, line, column);
  Parser p(lex.run(), symbols);
  return p.parse_all();
}

// ---------------------------------------------------------- division depth

namespace {

int z_bound(const Expr& e, const SymbolTable& s, int guard) {
  if (guard > 64) return 0;
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Param: return 1;
    case K::Number: case K::Exp: case K::Bracket: return 0;
    case K::Symbol: {
      auto it = s.macros.find(e.name);
      return it == s.macros.end() ? 0 : z_bound(*it->second, s, guard + 1);
    }
    case K::Neg: return z_bound(*e.lhs, s, guard);
    case K::Pow: return z_bound(*e.lhs, s, guard) * e.exponent;
    case K::Mul: case K::Tensor:
      return z_bound(*e.lhs, s, guard) + z_bound(*e.rhs, s, guard);
    case K::Div: return z_bound(*e.lhs, s, guard);
    case K::Add: case K::Sub:
      return std::max(z_bound(*e.lhs, s, guard), z_bound(*e.rhs, s, guard));
  }
  return 0;
}

int depth(const Expr& e, const SymbolTable& s, int guard) {
  if (guard > 64) return 0;
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Number: case K::Param: return 0;
    case K::Symbol: {
      auto it = s.macros.find(e.name);
      return it == s.macros.end() ? 0 : depth(*it->second, s, guard + 1);
    }
    case K::Neg: case K::Exp: return depth(*e.lhs, s, guard);
    case K::Pow: return depth(*e.lhs, s, guard);
    case K::Div:
      return depth(*e.lhs, s, guard) + depth(*e.rhs, s, guard) + z_bound(*e.rhs, s, guard);
    default:
      return std::max(depth(*e.lhs, s, guard), depth(*e.rhs, s, guard));
  }
}

} // namespace

int division_depth(const Expr& e, const SymbolTable& symbols) { return depth(e, symbols, 0); }

// --------------------------------------------------------------- evaluator

namespace {

bool is_scalar(const TensorElement& t) {
  if (t.arity() != 1) return false;
  for (const auto& [legs, c] : t.terms())
    if (!legs[0].empty()) return false;
  return true;
}

ZSeries scalar_of(const TensorElement& t) {
  ZSeries s(t.order());
  for (const auto& [legs, c] : t.terms()) s += c;
  return s;
}

TensorElement scalar_value(const ZSeries& s) { return as_tensor(Element::scalar(s)); }

TensorElement concat(const TensorElement& a, const TensorElement& b) {
  int ord = std::min(a.order(), b.order());
  TensorElement out(a.arity() + b.arity(), ord);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      TensorElement::Legs legs = ka;
      legs.insert(legs.end(), kb.begin(), kb.end());
      if (ca.valuation() + cb.valuation() > ord) continue;
      out.add_term(legs, multiply_truncated(ca, cb, ord));
    }
  return out;
}

TensorElement tensor_divided_by_z(const TensorElement& a) {
  if (a.order() == 0) throw std::domain_error("division by z exhausts the truncation order");
  TensorElement out(a.arity(), a.order() - 1);
  for (const auto& [k, c] : a.terms()) out.add_term(k, c.divided_by_z());
  return out;
}

class Evaluator {
public:
  Evaluator(const Algebra& A, const SymbolTable& S) : A_(A), S_(S) {}

  TensorElement eval(const Expr& e) {
    try {
      return eval_inner(e);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& ex) {
      throw ParseError(e.line, e.column, ex.what());
    }
  }

private:
  TensorElement mul(const Expr& at, const TensorElement& a, const TensorElement& b) {
    if (a.arity() == b.arity()) {
      if (a.arity() == 1) return as_tensor(A_.multiply(as_element(a), as_element(b)));
      return tensor_mul(A_, a, b);
    }
    if (is_scalar(a)) return b * scalar_of(a);
    if (is_scalar(b)) return a * scalar_of(b);
    throw ParseError(at.line, at.column,
                     "arity mismatch: " + std::to_string(a.arity()) + " vs " +
                         std::to_string(b.arity()));
  }

  void same_arity(const Expr& at, const TensorElement& a, const TensorElement& b) {
    if (a.arity() != b.arity())
      throw ParseError(at.line, at.column,
                       "arity mismatch: " + std::to_string(a.arity()) + " vs " +
                           std::to_string(b.arity()));
  }

  TensorElement eval_inner(const Expr& e) {
    using K = Expr::Kind;
    int k = A_.order();
    switch (e.kind) {
      case K::Number: return scalar_value(ZSeries::constant(e.number, k));
      case K::Param: return scalar_value(ZSeries::monomial(1, 1, k));
      case K::Symbol: {
        if (auto r = S_.alphabet.find(e.name)) return as_tensor(A_.gen(*r));
        if (auto it = S_.macros.find(e.name); it != S_.macros.end()) {
          if (std::find(stack_.begin(), stack_.end(), e.name) != stack_.end())
            throw ParseError(e.line, e.column, "element '" + e.name + "' refers to itself");
          stack_.push_back(e.name);
          TensorElement v = eval(*it->second);
          stack_.pop_back();
          return v;
        }
        if (auto it = S_.values.find(e.name); it != S_.values.end())
          return as_tensor(it->second(A_));
        throw ParseError(e.line, e.column, "unknown symbol '" + e.name + "'");
      }
      case K::Neg: return -eval(*e.lhs);
      case K::Add: case K::Sub: {
        TensorElement a = eval(*e.lhs), b = eval(*e.rhs);
        same_arity(e, a, b);
        return e.kind == K::Add ? a + b : a - b;
      }
      case K::Mul: return mul(e, eval(*e.lhs), eval(*e.rhs));
      case K::Div: {
        TensorElement a = eval(*e.lhs), b = eval(*e.rhs);
        if (!is_scalar(b))
          throw ParseError(e.rhs->line, e.rhs->column, "divisor must be a scalar series");
        ZSeries s = scalar_of(b);
        if (s.is_zero()) throw ParseError(e.rhs->line, e.rhs->column, "division by zero");
        int v = s.valuation();
        for (int i = 0; i < v; ++i) s = s.divided_by_z();
        // divide first: the unit part of the divisor must not truncate a early
        for (int i = 0; i < v; ++i) {
          try {
            a = tensor_divided_by_z(a);
          } catch (const std::domain_error&) {
            throw ParseError(e.line, e.column, "division by z leaves a negative power of z");
          }
        }
        a *= s.inverse();
        return a;
      }
      case K::Tensor: return concat(eval(*e.lhs), eval(*e.rhs));
      case K::Pow: {
        TensorElement base = eval(*e.lhs);
        TensorElement out = TensorElement::unit(base.arity(), base.order());
        for (int i = 0; i < e.exponent; ++i) out = mul(e, out, base);
        return out;
      }
      case K::Exp: {
        TensorElement a = eval(*e.lhs);
        if (a.valuation() < 1)
          throw ParseError(e.line, e.column,
                           "non-truncating exponential: argument has a z^0 term");
        if (a.arity() == 1) return as_tensor(A_.exp(as_element(a)));
        return tensor_exp(A_, a);
      }
      case K::Bracket: {
        TensorElement a = eval(*e.lhs), b = eval(*e.rhs);
        return mul(e, a, b) - mul(e, b, a);
      }
    }
    throw std::logic_error("unhandled expression kind");
  }

  const Algebra& A_;
  const SymbolTable& S_;
  std::vector<std::string> stack_;
};

} // namespace

TensorElement evaluate(const Expr& e, const Algebra& algebra, const SymbolTable& symbols) {
  Evaluator ev(algebra, symbols);
  return ev.eval(e);
}

TensorElement evaluate_text(std::string_view text, const SymbolTable& symbols, int order,
                            const std::function<const Algebra&(int)>& build) {
  ExprPtr e = parse_expression(text, symbols);
  int extra = division_depth(*e, symbols);
  for (int attempt = 0; attempt < 4; ++attempt) {
    TensorElement v = evaluate(*e, build(order + extra), symbols);
    if (v.order() >= order) return v.truncated(order);
    extra += order - v.order();
  }
  throw ParseError(e->line, e->column, "could not reach the requested truncation order");
}

// ---------------------------------------------------------- expression text

namespace {

int precedence(Expr::Kind k) {
  using K = Expr::Kind;
  switch (k) {
    case K::Add: case K::Sub: return 1;
    case K::Tensor: return 2;
    case K::Mul: case K::Div: return 3;
    case K::Neg: return 4;
    case K::Pow: return 5;
    default: return 6;
  }
}

void print_expr_into(std::string& out, const Expr& e, const Alphabet& alpha) {
  using K = Expr::Kind;
  auto child = [&](const Expr& c, int min_prec) {
    bool paren = precedence(c.kind) < min_prec;
    if (paren) out += "(";
    print_expr_into(out, c, alpha);
    if (paren) out += ")";
  };
  switch (e.kind) {
    case K::Number: out += e.number.get_str(); break;
    case K::Param: out += alpha.parameter(); break;
    case K::Symbol: out += e.name; break;
    case K::Neg:
      out += "-";
      child(*e.lhs, precedence(K::Neg));
      break;
    case K::Add: case K::Sub:
      child(*e.lhs, 1);
      out += e.kind == K::Add ? " + " : " - ";
      child(*e.rhs, 2);
      break;
    case K::Tensor:
      child(*e.lhs, 2);
      out += " (x) ";
      child(*e.rhs, 3);
      break;
    case K::Mul: case K::Div:
      child(*e.lhs, 3);
      out += e.kind == K::Mul ? "*" : "/";
      child(*e.rhs, 4);
      break;
    case K::Pow:
      child(*e.lhs, 6);
      out += "^" + std::to_string(e.exponent);
      break;
    case K::Exp:
      out += "exp(";
      print_expr_into(out, *e.lhs, alpha);
      out += ")";
      break;
    case K::Bracket:
      out += "[";
      print_expr_into(out, *e.lhs, alpha);
      out += ", ";
      print_expr_into(out, *e.rhs, alpha);
      out += "]";
      break;
  }
}

} // namespace

std::string print_expr(const Expr& e, const Alphabet& alphabet) {
  std::string out;
  print_expr_into(out, e, alphabet);
  return out;
}

// ------------------------------------------------------------ value printer

namespace {

struct Atom {
  std::vector<Monomial> rest;
  std::vector<std::optional<Rational>> exps;
  int zpow;
  Rational c;
};

std::string atom_key(const Atom& a, int base) {
  std::string k;
  for (std::size_t i = 0; i < a.rest.size(); ++i) {
    k += a.rest[i].key();
    k += '\xfe';
    k += a.exps[i] ? a.exps[i]->get_str() : "-";
    k += '\xfd';
  }
  return k + std::to_string(base);
}

// Replaces runs c*(lam z X0)^n/n! on one leg by a single exp factor.
void factor_leg(std::vector<Atom>& atoms, std::size_t leg, int order) {
  std::map<std::string, std::vector<std::size_t>> groups;
  std::vector<int> power(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    Atom& a = atoms[i];
    if (a.exps[leg]) continue;
    int n = a.rest[leg].leading_power(0);
    power[i] = n;
    Atom probe = a;
    probe.rest[leg] = a.rest[leg].without_leading(n);
    groups[atom_key(probe, a.zpow - n)].push_back(i);
  }
  std::vector<bool> drop(atoms.size(), false);
  std::vector<Atom> added;
  for (auto& [key, idx] : groups) {
    std::map<int, std::size_t> by_n;
    for (std::size_t i : idx) by_n[power[i]] = i;
    if (by_n.size() < 2 || by_n.size() != idx.size() || !by_n.count(0) || !by_n.count(1))
      continue;
    const Atom& a0 = atoms[by_n[0]];
    int top = order - a0.zpow;
    if (top < 1 || static_cast<int>(by_n.size()) != top + 1) continue;
    Rational lam = atoms[by_n[1]].c / a0.c;
    Rational expect = a0.c;
    bool ok = true;
    for (int n = 1; n <= top && ok; ++n) {
      expect = expect * lam / n;
      auto it = by_n.find(n);
      ok = it != by_n.end() && atoms[it->second].c == expect;
    }
    if (!ok) continue;
    for (std::size_t i : idx) drop[i] = true;
    Atom f = a0;
    f.exps[leg] = lam;
    added.push_back(std::move(f));
  }
  std::vector<Atom> out;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    if (!drop[i]) out.push_back(std::move(atoms[i]));
  for (auto& a : added) out.push_back(std::move(a));
  atoms = std::move(out);
}

std::string exp_text(const Rational& lam, const Alphabet& alpha) {
  std::string arg = alpha.parameter() + "*" + alpha[0].name;
  if (lam == 1) return "exp(" + arg + ")";
  if (lam == -1) return "exp(-" + arg + ")";
  return "exp(" + lam.get_str() + "*" + arg + ")";
}

std::string monomial_text(const Monomial& m, const Alphabet& alpha) {
  std::string out;
  std::size_t i = 0;
  while (i < m.degree()) {
    std::size_t j = i;
    while (j < m.degree() && m[j] == m[i]) ++j;
    if (!out.empty()) out += "*";
    out += alpha[m[i]].name;
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string leg_text(const Atom& a, std::size_t leg, const Alphabet& alpha) {
  std::string out;
  if (a.exps[leg]) out = exp_text(*a.exps[leg], alpha);
  std::string m = monomial_text(a.rest[leg], alpha);
  if (!m.empty()) out += (out.empty() ? "" : "*") + m;
  return out.empty() ? "1" : out;
}

bool atom_less(const Atom& a, const Atom& b) {
  for (std::size_t i = 0; i < a.rest.size(); ++i) {
    if (a.rest[i] != b.rest[i]) return a.rest[i] < b.rest[i];
    if (a.exps[i] != b.exps[i]) {
      if (!a.exps[i]) return true;
      if (!b.exps[i]) return false;
      return *a.exps[i] < *b.exps[i];
    }
  }
  if (a.zpow != b.zpow) return a.zpow < b.zpow;
  return a.c < b.c;
}

} // namespace

std::string print_tensor(const TensorElement& t, const Alphabet& alpha) {
  std::vector<Atom> atoms;
  auto arity = static_cast<std::size_t>(t.arity());
  for (const auto& [legs, c] : t.terms())
    for (int p = 0; p <= c.order(); ++p)
      if (sgn(c[p]) != 0)
        atoms.push_back({legs, std::vector<std::optional<Rational>>(arity), p, c[p]});
  if (atoms.empty()) return "0";
  if (alpha.size() > 0)
    for (std::size_t leg = 0; leg < arity; ++leg) factor_leg(atoms, leg, t.order());
  std::sort(atoms.begin(), atoms.end(), atom_less);

  std::string out;
  bool first = true;
  for (const auto& a : atoms) {
    bool neg = sgn(a.c) < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    std::string prefix;
    Rational mag = abs(a.c);
    if (mag != 1) prefix = mag.get_str();
    if (a.zpow > 0) {
      if (!prefix.empty()) prefix += "*";
      prefix += alpha.parameter();
      if (a.zpow > 1) prefix += "^" + std::to_string(a.zpow);
    }
    std::string l0 = leg_text(a, 0, alpha);
    if (prefix.empty())
      out += l0;
    else if (l0 == "1")
      out += prefix;
    else
      out += prefix + "*" + l0;
    for (std::size_t leg = 1; leg < arity; ++leg) out += " (x) " + leg_text(a, leg, alpha);
  }
  return out;
}

std::string print_element(const Element& a, const Alphabet& alphabet) {
  return print_tensor(as_tensor(a), alphabet);
}

std::string print_series(const ZSeries& s, const Alphabet& alphabet) {
  return print_element(Element::scalar(s), alphabet);
}

// ---------------------------------------------------------------- documents

SymbolTable AlgebraDocument::symbols() const {
  SymbolTable s;
  s.alphabet = alphabet();
  for (const auto& d : elements) s.macros[d.target] = d.expr;
  return s;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

bool valid_name(std::string_view s) {
  if (s.empty() || !ident_start(s[0])) return false;
  std::size_t i = 0;
  while (i < s.size() && ident_char(s[i])) ++i;
  while (i < s.size() && suffix_char(s[i])) ++i;
  return i == s.size() && s != "exp";
}

struct Line {
  int number;
  std::string raw;   // comment stripped
  std::string text;  // trimmed
};

const std::set<std::string>& section_names() {
  static const std::set<std::string> names = {"generators", "brackets", "coproduct",
                                              "counit",     "antipode", "elements"};
  return names;
}

struct Assignment {
  std::string lhs;
  std::size_t rhs_pos;
};

Assignment split_assignment(const Line& l) {
  std::size_t eq = l.raw.find('=');
  if (eq == std::string::npos) throw ParseError(l.number, 1, "expected 'name = expression'");
  return {trim(std::string_view(l.raw).substr(0, eq)), eq + 1};
}

void check_element_cycles(const AlgebraDocument& doc) {
  std::map<std::string, std::vector<std::string>> deps;
  std::map<std::string, int> line_of;
  std::function<void(const Expr&, std::vector<std::string>&)> collect =
      [&](const Expr& e, std::vector<std::string>& out) {
        if (e.kind == Expr::Kind::Symbol) out.push_back(e.name);
        if (e.lhs) collect(*e.lhs, out);
        if (e.rhs) collect(*e.rhs, out);
      };
  for (const auto& d : doc.elements) {
    collect(*d.expr, deps[d.target]);
    line_of[d.target] = d.line;
  }
  std::map<std::string, int> state;
  std::function<void(const std::string&)> visit = [&](const std::string& n) {
    if (!deps.count(n)) return;
    if (state[n] == 2) return;
    if (state[n] == 1) throw ParseError(line_of[n], 1, "element '" + n + "' refers to itself");
    state[n] = 1;
    for (const auto& m : deps[n]) visit(m);
    state[n] = 2;
  };
  for (const auto& d : doc.elements) visit(d.target);
}

} // namespace

AlgebraDocument parse_document(std::string_view text) {
  std::vector<Line> lines;
  {
    std::size_t start = 0;
    int number = 1;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string raw(text.substr(start, end - start));
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      std::string t = trim(raw);
      if (!t.empty()) lines.push_back({number, raw, t});
      if (end == text.size()) break;
      start = end + 1;
      ++number;
    }
  }
  if (lines.empty()) throw ParseError(1, 1, "empty document; expected header 'algfile 1'");

  AlgebraDocument doc;
  {
    std::istringstream hs(lines[0].text);
    std::string word;
    int version = 0;
    if (!(hs >> word) || word != "algfile")
      throw ParseError(lines[0].number, 1, "expected header 'algfile 1'");
    if (!(hs >> version)) throw ParseError(lines[0].number, 9, "missing format version");
    if (version != 1)
      throw ParseError(lines[0].number, 9, "unsupported format version " + std::to_string(version));
    doc.version = version;
  }

  std::map<std::string, std::vector<Line>> sections;
  std::map<std::string, int> section_line;
  std::size_t i = 1;
  while (i < lines.size()) {
    const Line& l = lines[i];
    std::istringstream ls(l.text);
    std::string key, value, extra;
    ls >> key;
    if (section_names().count(key)) {
      if (l.text != key) throw ParseError(l.number, 1, "section keyword must stand alone");
      if (sections.count(key)) throw ParseError(l.number, 1, "duplicate section '" + key + "'");
      section_line[key] = l.number;
      auto& body = sections[key];
      ++i;
      while (i < lines.size() && lines[i].text != "end") {
        if (section_names().count(lines[i].text))
          throw ParseError(lines[i].number, 1, "section '" + key + "' is missing 'end'");
        body.push_back(lines[i]);
        ++i;
      }
      if (i == lines.size())
        throw ParseError(l.number, 1, "section '" + key + "' is missing 'end'");
      ++i;
      continue;
    }
    if (!(ls >> value) || (ls >> extra))
      throw ParseError(l.number, 1, "expected 'key value' or a section keyword");
    if (key == "name") {
      doc.name = value;
    } else if (key == "parameter") {
      if (!valid_name(value)) throw ParseError(l.number, 1, "bad parameter name '" + value + "'");
      doc.parameter = value;
    } else if (key == "order") {
      try {
        std::size_t used = 0;
        int k = std::stoi(value, &used);
        if (used != value.size() || k < 0) throw std::invalid_argument("order");
        doc.order = k;
      } catch (const std::exception&) {
        throw ParseError(l.number, 1, "order must be a non-negative integer");
      }
    } else {
      throw ParseError(l.number, 1, "unknown header key '" + key + "'");
    }
    ++i;
  }

  if (!sections.count("generators")) throw ParseError(lines[0].number, 1, "missing section 'generators'");
  for (const auto& l : sections["generators"]) {
    std::istringstream gs(l.text);
    std::string name, extra;
    int degree = -1;
    if (!(gs >> name >> degree) || (gs >> extra) || (degree != 0 && degree != 1))
      throw ParseError(l.number, 1, "expected 'name degree' with degree 0 or 1");
    if (!valid_name(name) || name == doc.parameter)
      throw ParseError(l.number, 1, "bad generator name '" + name + "'");
    for (const auto& g : doc.generators)
      if (g.name == name) throw ParseError(l.number, 1, "duplicate generator '" + name + "'");
    doc.generators.push_back({name, degree});
  }
  if (doc.generators.empty()) throw ParseError(section_line["generators"], 1, "no generators declared");
  if (doc.generators.size() > 250) throw ParseError(section_line["generators"], 1, "too many generators");

  Alphabet alpha = doc.alphabet();
  SymbolTable symbols;
  symbols.alphabet = alpha;

  // Element names first so every section can refer to them.
  std::vector<std::pair<Line, Assignment>> element_lines;
  for (const auto& l : sections["elements"]) {
    Assignment a = split_assignment(l);
    std::size_t lhs_col = l.raw.find_first_not_of(" \t") + 1;
    if (!valid_name(a.lhs) || alpha.find(a.lhs) || a.lhs == doc.parameter)
      throw ParseError(l.number, static_cast<int>(lhs_col), "bad element name '" + a.lhs + "'");
    if (symbols.macros.count(a.lhs))
      throw ParseError(l.number, static_cast<int>(lhs_col), "duplicate definition of element '" + a.lhs + "'");
    symbols.macros[a.lhs] = nullptr;
    element_lines.emplace_back(l, a);
  }
  auto parse_rhs = [&](const Line& l, std::size_t pos) {
    return parse_expression(std::string_view(l.raw).substr(pos), symbols, l.number,
                            static_cast<int>(pos) + 1);
  };
  for (const auto& [l, a] : element_lines)
    doc.elements.push_back({a.lhs, "", parse_rhs(l, a.rhs_pos), l.number});
  for (const auto& d : doc.elements) symbols.macros[d.target] = d.expr;
  check_element_cycles(doc);

  auto gen_at = [&](const Line& l, const std::string& name, std::size_t col) {
    if (!alpha.find(name))
      throw ParseError(l.number, static_cast<int>(col), "undeclared generator '" + name + "'");
    return name;
  };

  std::set<std::pair<std::string, std::string>> seen_pairs;
  for (const auto& l : sections["brackets"]) {
    std::size_t open = l.raw.find('[');
    std::size_t close = l.raw.find(']');
    std::size_t comma = l.raw.find(',');
    if (open == std::string::npos || close == std::string::npos || comma == std::string::npos ||
        !(open < comma && comma < close) || trim(std::string_view(l.raw).substr(0, open)) != "")
      throw ParseError(l.number, 1, "expected '[X, Y] = expression'");
    std::string x = trim(std::string_view(l.raw).substr(open + 1, comma - open - 1));
    std::string y = trim(std::string_view(l.raw).substr(comma + 1, close - comma - 1));
    gen_at(l, x, l.raw.find(x, open + 1) + 1);
    gen_at(l, y, l.raw.find(y, comma + 1) + 1);
    if (x == y) throw ParseError(l.number, static_cast<int>(open + 1), "bracket of a generator with itself");
    auto key = std::minmax(x, y);
    if (!seen_pairs.insert({key.first, key.second}).second)
      throw ParseError(l.number, static_cast<int>(open + 1), "duplicate definition of [" + x + ", " + y + "]");
    std::size_t eq = l.raw.find('=', close);
    if (eq == std::string::npos || trim(std::string_view(l.raw).substr(close + 1, eq - close - 1)) != "")
      throw ParseError(l.number, static_cast<int>(close + 2), "expected '=' after bracket");
    doc.brackets.push_back({x, y, parse_rhs(l, eq + 1), l.number});
  }

  auto map_section = [&](const std::string& name, std::vector<Definition>& out) {
    if (!sections.count(name))
      throw ParseError(lines.back().number, 1, "missing section '" + name + "'");
    std::set<std::string> seen;
    for (const auto& l : sections[name]) {
      Assignment a = split_assignment(l);
      std::size_t lhs_col = l.raw.find_first_not_of(" \t") + 1;
      gen_at(l, a.lhs, lhs_col);
      if (!seen.insert(a.lhs).second)
        throw ParseError(l.number, static_cast<int>(lhs_col), "duplicate definition of " + name + "(" + a.lhs + ")");
      out.push_back({a.lhs, "", parse_rhs(l, a.rhs_pos), l.number});
    }
    for (const auto& g : doc.generators)
      if (!seen.count(g.name))
        throw ParseError(section_line[name], 1, name + ": no value for generator '" + g.name + "'");
  };
  map_section("coproduct", doc.coproduct);
  map_section("counit", doc.counit);
  map_section("antipode", doc.antipode);
  return doc;
}

AlgebraDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string print_document(const AlgebraDocument& doc) {
  Alphabet alpha = doc.alphabet();
  std::ostringstream os;
  os << "algfile " << doc.version << "\n";
  if (!doc.name.empty()) os << "name " << doc.name << "\n";
  os << "parameter " << doc.parameter << "\n";
  if (doc.order) os << "order " << *doc.order << "\n";
  os << "\ngenerators\n";
  for (const auto& g : doc.generators) os << "  " << g.name << " " << g.lorentz_degree << "\n";
  os << "end\n";
  if (!doc.elements.empty()) {
    os << "\nelements\n";
    for (const auto& d : doc.elements) os << "  " << d.target << " = " << print_expr(*d.expr, alpha) << "\n";
    os << "end\n";
  }
  os << "\nbrackets\n";
  for (const auto& d : doc.brackets)
    os << "  [" << d.target << ", " << d.second << "] = " << print_expr(*d.expr, alpha) << "\n";
  os << "end\n";
  for (const auto& [title, defs] : {std::pair<const char*, const std::vector<Definition>*>{"coproduct", &doc.coproduct},
                                    {"counit", &doc.counit},
                                    {"antipode", &doc.antipode}}) {
    os << "\n" << title << "\n";
    for (const auto& d : *defs) os << "  " << d.target << " = " << print_expr(*d.expr, alpha) << "\n";
    os << "end\n";
  }
  return os.str();
}

PresentationPtr instantiate(const AlgebraDocument& doc, std::optional<int> order,
                            AlgebraOptions options) {
  int k = order ? *order : doc.order.value_or(6);
  if (k < 0) throw std::domain_error("negative truncation order");
  Alphabet alpha = doc.alphabet();
  auto symbols = std::make_shared<const SymbolTable>(doc.symbols());
  int extra = 0;
  auto consider = [&](const std::vector<Definition>& defs) {
    for (const auto& d : defs) extra = std::max(extra, division_depth(*d.expr, *symbols));
  };
  consider(doc.brackets);
  consider(doc.coproduct);
  consider(doc.counit);
  consider(doc.antipode);

  auto checked = [](const Definition& d, TensorElement v, int arity, const char* what) {
    if (v.arity() != arity)
      throw ParseError(d.line, d.expr->column,
                       std::string(what) + " must have arity " + std::to_string(arity) +
                           ", got " + std::to_string(v.arity()));
    return v;
  };

  for (int attempt = 0; attempt < 4; ++attempt) {
    int w = k + extra;
    BracketTable table(alpha.size());
    for (const auto& d : doc.brackets) {
      Definition def = d;
      table.set(alpha.rank(d.target), alpha.rank(d.second),
                BracketTable::Thunk([def, symbols, checked](const Algebra& A) {
                  return as_element(checked(def, evaluate(*def.expr, A, *symbols), 1, "bracket"));
                }));
    }
    std::shared_ptr<const Algebra> A;
    try {
      A = std::make_shared<const Algebra>(alpha, std::move(table), w, options);
    } catch (const ParseError&) {
      throw;
    } catch (const std::logic_error& e) {
      throw ParseError(doc.brackets.empty() ? 1 : doc.brackets.front().line, 1, e.what());
    }
    std::vector<TensorElement> delta(alpha.size());
    std::vector<ZSeries> eps(alpha.size());
    std::vector<Element> gamma(alpha.size());
    int reached = w;
    for (const auto& d : doc.coproduct) {
      auto v = checked(d, evaluate(*d.expr, *A, *symbols), 2, "coproduct");
      reached = std::min(reached, v.order());
      delta[alpha.rank(d.target)] = std::move(v);
    }
    for (const auto& d : doc.counit) {
      auto v = checked(d, evaluate(*d.expr, *A, *symbols), 1, "counit");
      if (!is_scalar(v)) throw ParseError(d.line, d.expr->column, "counit must be a scalar");
      reached = std::min(reached, v.order());
      eps[alpha.rank(d.target)] = scalar_of(v);
    }
    for (const auto& d : doc.antipode) {
      auto v = checked(d, evaluate(*d.expr, *A, *symbols), 1, "antipode");
      reached = std::min(reached, v.order());
      gamma[alpha.rank(d.target)] = as_element(v);
    }
    for (Rank hi = 1; hi < alpha.size(); ++hi)
      for (Rank lo = 0; lo < hi; ++lo) reached = std::min(reached, A->bracket_entry(hi, lo).order());
    if (reached >= k) {
      HopfPresentation full(doc.name, A, std::move(delta), std::move(eps), std::move(gamma));
      return full.truncated(k);
    }
    extra += k - reached;
  }
  throw ParseError(1, 1, "could not reach truncation order " + std::to_string(k));
}

std::string print_presentation(const HopfPresentation& p) {
  const Alphabet& alpha = p.alphabet();
  const Algebra& A = p.algebra();
  std::ostringstream os;
  os << "algfile 1\n";
  os << "name " << p.name() << "\n";
  os << "parameter " << alpha.parameter() << "\n";
  os << "order " << p.order() << "\n";
  os << "\ngenerators\n";
  for (const auto& g : alpha.generators()) os << "  " << g.name << " " << g.lorentz_degree << "\n";
  os << "end\n\nbrackets\n";
  for (Rank hi = 1; hi < alpha.size(); ++hi)
    for (Rank lo = 0; lo < hi; ++lo) {
      const Element& v = A.bracket_entry(hi, lo);
      if (v.is_zero()) continue;
      os << "  [" << alpha[hi].name << ", " << alpha[lo].name << "] = " << print_element(v, alpha)
         << "\n";
    }
  os << "end\n\ncoproduct\n";
  for (Rank r = 0; r < alpha.size(); ++r)
    os << "  " << alpha[r].name << " = " << print_tensor(p.coproduct_of(r), alpha) << "\n";
  os << "end\n\ncounit\n";
  for (Rank r = 0; r < alpha.size(); ++r)
    os << "  " << alpha[r].name << " = " << print_series(p.counit_of(r), alpha) << "\n";
  os << "end\n\nantipode\n";
  for (Rank r = 0; r < alpha.size(); ++r)
    os << "  " << alpha[r].name << " = " << print_element(p.antipode_of(r), alpha) << "\n";
  os << "end\n";
  return os.str();
}

Report compare_presentations(const HopfPresentation& a, const HopfPresentation& b) {
  CaseRecorder rec("presentation_equality", a.name() + " vs " + b.name(),
                   std::min(a.order(), b.order()), CheckOptions{});
  const Alphabet& alpha = a.alphabet();
  rec.record("alphabet", a.alphabet() == b.alphabet(), [] { return std::string("alphabets differ"); });
  if (a.alphabet() != b.alphabet() || a.order() != b.order()) {
    if (a.order() != b.order()) rec.record("order", false, [&] {
      return std::to_string(a.order()) + " vs " + std::to_string(b.order());
    });
    return rec.finish();
  }
  for (Rank hi = 1; hi < alpha.size(); ++hi)
    for (Rank lo = 0; lo < hi; ++lo) {
      const Element& x = a.algebra().bracket_entry(hi, lo);
      const Element& y = b.algebra().bracket_entry(hi, lo);
      rec.record("bracket" + case_label(alpha, {hi, lo}), x == y,
                 [&] { return print_element(x - y, alpha); });
    }
  for (Rank r = 0; r < alpha.size(); ++r) {
    rec.record("coproduct(" + alpha[r].name + ")", a.coproduct_of(r) == b.coproduct_of(r),
               [&] { return print_tensor(a.coproduct_of(r) - b.coproduct_of(r), alpha); });
    rec.record("counit(" + alpha[r].name + ")", a.counit_of(r) == b.counit_of(r),
               [&] { return print_series(a.counit_of(r) - b.counit_of(r), alpha); });
    rec.record("antipode(" + alpha[r].name + ")", a.antipode_of(r) == b.antipode_of(r),
               [&] { return print_element(a.antipode_of(r) - b.antipode_of(r), alpha); });
  }
  return rec.finish();
}

} // namespace hopfverify
