#pragma once

#include "lieinv/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lieinv {

// Canonical variable order: coordinate < theta < parameter < aux < log < atan < cos < sin.
// Exp is never a factor symbol; a monomial carries at most one merged exp(u).
enum class SymKind : std::uint8_t { Coord, Theta, Param, Aux, Log, Atan, Cos, Sin, Exp };

class Expr;
struct Interned;

class Symbol {
 public:
  Symbol() = default;
  static Symbol coord(int i);  // x_i, 1-based
  static Symbol theta(int i);  // theta_i, 1-based
  static Symbol param(std::string_view name);
  static Symbol aux(int i);  // scratch unknowns used during elimination
  static Symbol generator(const Interned* node);

  SymKind kind() const { return kind_; }
  int index() const { return index_; }
  const Interned* node() const { return node_; }
  bool is_variable() const { return kind_ <= SymKind::Aux; }
  bool is_generator() const { return !is_variable(); }
  const std::string& name() const;  // parameter name
  const Expr& argument() const;     // generators only
  std::string str() const;

  friend bool operator==(const Symbol& a, const Symbol& b) {
    return a.kind_ == b.kind_ && a.index_ == b.index_ && a.node_ == b.node_;
  }
  friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b);

 private:
  Symbol(SymKind k, int i, const Interned* n) : kind_(k), index_(i), node_(n) {}
  SymKind kind_ = SymKind::Coord;
  int index_ = 0;
  const Interned* node_ = nullptr;
};

using Variable = Symbol;

struct Monomial {
  std::vector<std::pair<Symbol, int>> factors;  // ascending symbols, exponents > 0
  const Interned* exp = nullptr;                // merged exp(u); null when absent
  int degree = 0;

  bool is_one() const { return factors.empty() && !exp; }
  int exponent_of(const Symbol& s) const;
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exp == b.exp && a.factors == b.factors;
  }
};

// graded lex; positive when a sorts before b
int compare(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Rational coef;
};

class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rational& c);
  static Poly symbol(const Symbol& s, int e = 1);
  static Poly exp_unit(const Interned* node, const Rational& c = Rational(1));
  static Poly from_terms(std::vector<Term> terms);  // sorts and merges
  static Poly from_sorted(std::vector<Term> terms);  // already ordered, merged, nonzero

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coef.is_one(); }
  Rational constant_value() const;  // requires is_constant
  const Term& lead() const { return terms_.front(); }
  bool has_exp() const;
  bool has_generators() const;  // any log/atan/cos/sin/exp
  int degree_in(const Symbol& s) const;
  void collect_symbols(std::set<Symbol>& out, bool descend) const;
  void collect_exps(std::set<const Interned*>& out) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rational& c) const;
  Poly times_monomial(const Monomial& m, const Rational& c) const;
  friend bool operator==(const Poly& a, const Poly& b);

 private:
  std::vector<Term> terms_;  // sorted, leading term first
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
Poly reduce_trig(const Poly& p);  // sin^2 -> 1 - cos^2
std::optional<Poly> exact_divide(const Poly& a, const Poly& b);
Poly poly_gcd(const Poly& a, const Poly& b);  // generators treated as free symbols

class Expr {
 public:
  Expr() : den_(Rational(1)) {}
  Expr(int v) : Expr(Rational(v)) {}
  Expr(long v) : Expr(Rational(v)) {}
  Expr(long num, long den) : Expr(Rational(num, den)) {}
  Expr(const Rational& v);
  Expr(const Symbol& s);
  static Expr coord(int i) { return Expr(Symbol::coord(i)); }
  static Expr theta(int i) { return Expr(Symbol::theta(i)); }
  static Expr param(std::string_view name) { return Expr(Symbol::param(name)); }
  static Expr fraction(Poly num, Poly den);  // canonicalizes

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  std::optional<Rational> constant_value() const;
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_transcendental_free() const { return !num_.has_generators() && !den_.has_generators(); }
  // all variables, including those inside generator arguments
  std::set<Symbol> variables() const;
  // variables and generators appearing directly as factors
  std::set<Symbol> symbols() const;
  std::set<const Interned*> exps() const;
  bool depends_on(const Symbol& v) const;
  bool has_kind(SymKind k) const;  // variable kind anywhere (e.g. Theta)

  Expr operator-() const;
  Expr& operator+=(const Expr& o);
  Expr& operator-=(const Expr& o);
  Expr& operator*=(const Expr& o);
  Expr& operator/=(const Expr& o);
  friend Expr operator+(Expr a, const Expr& b) { return a += b; }
  friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
  friend Expr operator*(Expr a, const Expr& b) { return a *= b; }
  friend Expr operator/(Expr a, const Expr& b) { return a /= b; }
  // structural equality of canonical forms
  friend bool operator==(const Expr& a, const Expr& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string str() const;
  std::string latex() const;

 private:
  Poly num_, den_;
};

Expr pow(const Expr& base, long e);
// integer exponents multiply out; anything else becomes exp(e*log(base))
Expr power(const Expr& base, const Expr& exponent);
Expr exp(const Expr& u);
Expr log(const Expr& u);
Expr atan(const Expr& u);
Expr cos(const Expr& u);
Expr sin(const Expr& u);

bool is_zero(const Expr& f);
Expr differentiate(const Expr& f, const Symbol& v);

struct Substitution {
  std::map<Symbol, Expr> vars;
  // generator-level: exp(w) -> value; rewrites exp(k*w + rest) to value^k * exp(rest)
  std::vector<std::pair<Expr, Expr>> exps;
  // generator-level on any of log/atan/cos/sin: node -> value
  std::map<const Interned*, Expr> generators;
};
Expr substitute(const Expr& f, const Substitution& s);
Expr substitute(const Expr& f, const Symbol& v, const Expr& value);

struct Point {
  std::map<Symbol, Rational> vars;
  std::map<const Interned*, Rational> generators;  // values for exp/log/atan/cos/sin nodes
};
Rational evaluate(const Expr& f, const std::map<Symbol, Rational>& point);
Rational evaluate(const Expr& f, const Point& point);

// structural total order on canonical forms
int compare(const Expr& a, const Expr& b);

struct Interned {
  SymKind kind;
  std::string key;                   // parameter name, or canonical text of the argument
  std::shared_ptr<const Expr> arg;   // generators only
  std::vector<Symbol> vars;          // free variables of the argument
  const Interned* partner = nullptr; // cos <-> sin of the same argument
  std::string tex;                   // latex of the argument
  // exp only: integer multiples of logs split off the argument, and the remaining exp (may be null)
  std::vector<std::pair<const Interned*, long>> int_logs;
  const Interned* rest = nullptr;
};

// coordinate/theta helpers, 1-based
inline Expr x(int i) { return Expr::coord(i); }
inline Expr th(int i) { return Expr::theta(i); }

}  // namespace lieinv
