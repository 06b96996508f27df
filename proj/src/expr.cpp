#include "internal.hpp"

#include "lieinv/error.hpp"

namespace lieinv {

namespace detail {

Expr from_poly(const Poly& p) { return Expr::fraction(p, Poly(Rational(1))); }

}  // namespace detail

namespace {

bool needs_log_split(const Poly& p) {
  for (const Term& t : p.terms())
    if (t.mono.exp && !t.mono.exp->int_logs.empty()) return true;
  return false;
}

// exp(k*log(p) + rest) -> p^k * exp(rest), term by term
Expr split_logs(const Poly& p) {
  Expr out;
  for (const Term& t : p.terms()) {
    Monomial m = t.mono;
    const Interned* e = m.exp;
    if (!e || e->int_logs.empty()) {
      out += Expr::fraction(Poly::from_sorted({t}), Poly(Rational(1)));
      continue;
    }
    m.exp = e->rest;
    Expr term = Expr::fraction(Poly::from_terms({Term{m, t.coef}}), Poly(Rational(1)));
    for (const auto& [node, k] : e->int_logs) term *= pow(*node->arg, k);
    out += term;
  }
  return out;
}

Monomial exp_monomial(const Interned* node) {
  Monomial m;
  m.exp = node;
  return m;
}

}  // namespace

Expr::Expr(const Rational& v) : num_(v), den_(Rational(1)) {}

Expr::Expr(const Symbol& s) : num_(Poly::symbol(s)), den_(Rational(1)) {}

Expr Expr::fraction(Poly num, Poly den) {
  if (den.is_zero()) throw DivisionByZero();
  num = reduce_trig(num);
  den = reduce_trig(den);
  if (den.is_zero()) throw DivisionByZero();
  Expr r;
  if (num.is_zero()) return r;
  if (needs_log_split(num) || needs_log_split(den)) return split_logs(num) / split_logs(den);
  if (den.is_constant()) {
    r.num_ = num.scaled(den.constant_value().inverse());
    return r;
  }
  Poly g = poly_gcd(num, den);
  if (!g.is_constant()) {
    num = *exact_divide(num, g);
    den = *exact_divide(den, g);
  }
  const Term& lt = den.lead();
  Rational c = lt.coef.inverse();
  if (lt.mono.exp) {
    const Interned* inv = detail::intern_generator(SymKind::Exp, -*lt.mono.exp->arg);
    Monomial u = exp_monomial(inv);
    num = num.times_monomial(u, c);
    den = den.times_monomial(u, c);
  } else {
    num = num.scaled(c);
    den = den.scaled(c);
  }
  if (den.is_constant()) {
    r.num_ = num.scaled(den.constant_value().inverse());
    return r;
  }
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

std::optional<Rational> Expr::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return num_.constant_value() / den_.constant_value();
}

std::set<Symbol> Expr::variables() const {
  std::set<Symbol> all, out;
  num_.collect_symbols(all, true);
  den_.collect_symbols(all, true);
  for (const Symbol& s : all)
    if (s.is_variable()) out.insert(s);
  return out;
}

std::set<Symbol> Expr::symbols() const {
  std::set<Symbol> out;
  num_.collect_symbols(out, false);
  den_.collect_symbols(out, false);
  return out;
}

std::set<const Interned*> Expr::exps() const {
  std::set<const Interned*> out;
  num_.collect_exps(out);
  den_.collect_exps(out);
  return out;
}

bool Expr::depends_on(const Symbol& v) const { return variables().count(v) > 0; }

bool Expr::has_kind(SymKind k) const {
  for (const Symbol& s : variables())
    if (s.kind() == k) return true;
  return false;
}

Expr Expr::operator-() const {
  Expr r = *this;
  r.num_ = -r.num_;
  return r;
}

Expr& Expr::operator+=(const Expr& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    if (den_.is_one()) {
      num_ = reduce_trig(num_ + o.num_);
      if (needs_log_split(num_)) *this = fraction(num_, den_);
      return *this;
    }
    return *this = fraction(num_ + o.num_, den_);
  }
  if (den_.is_one()) return *this = fraction(num_ * o.den_ + o.num_, o.den_);
  if (o.den_.is_one()) return *this = fraction(num_ + o.num_ * den_, den_);
  Poly g = poly_gcd(den_, o.den_);
  if (g.is_constant()) return *this = fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  Poly d1 = *exact_divide(den_, g), d2 = *exact_divide(o.den_, g);
  return *this = fraction(num_ * d2 + o.num_ * d1, d1 * o.den_);
}

Expr& Expr::operator-=(const Expr& o) { return *this += -o; }

Expr& Expr::operator*=(const Expr& o) {
  if (is_zero() || o.is_zero()) return *this = Expr();
  if (o.is_constant()) {
    num_ = num_.scaled(*o.constant_value());
    return *this;
  }
  if (is_constant()) {
    Rational c = *constant_value();
    *this = o;
    num_ = num_.scaled(c);
    return *this;
  }
  if (den_.is_one() && o.den_.is_one()) {
    num_ = reduce_trig(num_ * o.num_);
    if (needs_log_split(num_)) *this = fraction(num_, den_);
    return *this;
  }
  return *this = fraction(num_ * o.num_, den_ * o.den_);
}

Expr& Expr::operator/=(const Expr& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (o.is_constant()) {
    num_ = num_.scaled(o.constant_value()->inverse());
    return *this;
  }
  return *this = fraction(num_ * o.den_, den_ * o.num_);
}

Expr pow(const Expr& base, long e) {
  if (e < 0) return Expr(1) / pow(base, -e);
  Expr r(1), b = base;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

namespace {

void require_plain(const Expr& u, const char* head) {
  if (!u.is_transcendental_free())
    throw NestingError(std::string("nested transcendental inside ") + head + ": " + u.str());
}

bool leading_negative(const Expr& u) { return !u.num().is_zero() && u.num().lead().coef.sign() < 0; }

}  // namespace

Expr exp(const Expr& u) {
  if (u.is_zero()) return Expr(1);
  for (const Symbol& s : u.symbols())
    if (s.kind() == SymKind::Cos || s.kind() == SymKind::Sin)
      throw NestingError("nested transcendental inside exp: " + u.str());
  if (!u.exps().empty()) throw NestingError("nested transcendental inside exp: " + u.str());
  const Interned* node = detail::intern_generator(SymKind::Exp, u);
  return Expr::fraction(Poly::exp_unit(node), Poly(Rational(1)));
}

Expr log(const Expr& u) {
  require_plain(u, "log");
  if (u.is_zero()) throw Error("log of zero");
  if (u.is_one()) return Expr();
  if (u.num().is_one()) return -log(detail::from_poly(u.den()));
  return Expr(Symbol::generator(detail::intern_generator(SymKind::Log, u)));
}

Expr atan(const Expr& u) {
  require_plain(u, "atan");
  if (u.is_zero()) return Expr();
  if (leading_negative(u)) return -atan(-u);
  return Expr(Symbol::generator(detail::intern_generator(SymKind::Atan, u)));
}

Expr cos(const Expr& u) {
  require_plain(u, "cos");
  if (u.is_zero()) return Expr(1);
  if (leading_negative(u)) return cos(-u);
  return Expr(Symbol::generator(detail::intern_generator(SymKind::Cos, u)));
}

Expr sin(const Expr& u) {
  require_plain(u, "sin");
  if (u.is_zero()) return Expr();
  if (leading_negative(u)) return -sin(-u);
  return Expr(Symbol::generator(detail::intern_generator(SymKind::Sin, u)));
}

Expr power(const Expr& base, const Expr& exponent) {
  if (auto c = exponent.constant_value(); c && c->fits_long()) return pow(base, c->to_long());
  if (base.is_zero()) throw Error("non-integer power of zero");
  return exp(exponent * log(base));
}

bool is_zero(const Expr& f) { return f.is_zero(); }

int compare(const Expr& a, const Expr& b) {
  auto cmp_poly = [](const Poly& p, const Poly& q) {
    std::size_t n = std::min(p.size(), q.size());
    for (std::size_t i = 0; i < n; ++i) {
      int c = compare(p.terms()[i].mono, q.terms()[i].mono);
      if (c) return c;
      if (!(p.terms()[i].coef == q.terms()[i].coef)) return p.terms()[i].coef < q.terms()[i].coef ? -1 : 1;
    }
    if (p.size() != q.size()) return p.size() < q.size() ? -1 : 1;
    return 0;
  };
  if (int c = cmp_poly(a.num(), b.num())) return c;
  return cmp_poly(a.den(), b.den());
}

}  // namespace lieinv
