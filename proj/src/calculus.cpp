#include "internal.hpp"

#include "lieinv/error.hpp"

namespace lieinv {

namespace {

Expr monomial_expr(const Monomial& m, const Rational& c) {
  return detail::from_poly(Poly::from_terms({Term{m, c}}));
}

Expr generator_derivative(const Symbol& g, const Symbol& v) {
  const Expr& u = g.argument();
  Expr du = differentiate(u, v);
  if (du.is_zero()) return Expr();
  switch (g.kind()) {
    case SymKind::Log: return du / u;
    case SymKind::Atan: return du / (Expr(1) + u * u);
    case SymKind::Cos: return -Expr(Symbol::generator(g.node()->partner)) * du;
    case SymKind::Sin: return Expr(Symbol::generator(g.node()->partner)) * du;
    default: throw Error("not a generator");
  }
}

Expr poly_derivative(const Poly& p, const Symbol& v, std::map<Symbol, Expr>& cache,
                     std::map<const Interned*, Expr>& exp_cache) {
  Expr out;
  for (const Term& t : p.terms()) {
    for (std::size_t i = 0; i < t.mono.factors.size(); ++i) {
      const auto& [s, e] = t.mono.factors[i];
      Expr ds;
      if (s.is_variable()) {
        if (!(s == v)) continue;
        ds = Expr(1);
      } else {
        auto it = cache.find(s);
        if (it == cache.end()) it = cache.emplace(s, generator_derivative(s, v)).first;
        ds = it->second;
        if (ds.is_zero()) continue;
      }
      Monomial m = t.mono;
      if (--m.factors[i].second == 0) m.factors.erase(m.factors.begin() + static_cast<long>(i));
      m.degree -= 1;
      out += monomial_expr(m, t.coef * Rational(e)) * ds;
    }
    if (t.mono.exp) {
      auto it = exp_cache.find(t.mono.exp);
      if (it == exp_cache.end()) it = exp_cache.emplace(t.mono.exp, differentiate(*t.mono.exp->arg, v)).first;
      if (!it->second.is_zero()) out += monomial_expr(t.mono, t.coef) * it->second;
    }
  }
  return out;
}

}  // namespace

Expr differentiate(const Expr& f, const Symbol& v) {
  if (!f.depends_on(v)) return Expr();
  std::map<Symbol, Expr> cache;
  std::map<const Interned*, Expr> exp_cache;
  Expr dn = poly_derivative(f.num(), v, cache, exp_cache);
  Expr den = detail::from_poly(f.den());
  if (f.den().is_constant()) return dn / den;
  Expr dd = poly_derivative(f.den(), v, cache, exp_cache);
  Expr num = detail::from_poly(f.num());
  return (dn * den - num * dd) / (den * den);
}

namespace {

struct Substituter {
  const Substitution& s;
  std::map<Symbol, Expr> sym_cache;
  std::map<const Interned*, Expr> exp_cache;

  Expr symbol_value(const Symbol& sym) {
    auto it = sym_cache.find(sym);
    if (it != sym_cache.end()) return it->second;
    Expr val;
    if (sym.is_variable()) {
      auto b = s.vars.find(sym);
      val = b == s.vars.end() ? Expr(sym) : b->second;
    } else if (auto g = s.generators.find(sym.node()); g != s.generators.end()) {
      val = g->second;
    } else {
      Expr arg = run(sym.argument());
      if (arg == sym.argument()) {
        val = Expr(sym);
      } else {
        switch (sym.kind()) {
          case SymKind::Log: val = log(arg); break;
          case SymKind::Atan: val = atan(arg); break;
          case SymKind::Cos: val = cos(arg); break;
          case SymKind::Sin: val = sin(arg); break;
          default: throw Error("unexpected generator");
        }
      }
    }
    sym_cache.emplace(sym, val);
    return val;
  }

  Expr exp_value(const Interned* node) {
    auto it = exp_cache.find(node);
    if (it != exp_cache.end()) return it->second;
    Expr u = *node->arg;
    Expr val;
    bool bound = false;
    for (const auto& [w, g] : s.exps) {
      std::vector<Symbol> targets;
      for (const Symbol& v : w.variables())
        if (v.kind() == SymKind::Theta) targets.push_back(v);
      if (targets.empty())
        for (const Symbol& v : w.variables()) targets.push_back(v);
      if (targets.empty()) continue;
      Expr du = differentiate(u, targets[0]);
      if (du.is_zero()) continue;
      Expr k = du / differentiate(w, targets[0]);
      if (!k.variables().empty() && k.has_kind(SymKind::Coord))
        throw NestingError("exp binding does not divide " + u.str());
      for (const Symbol& v : k.variables())
        if (v.kind() == SymKind::Theta || v.kind() == SymKind::Aux)
          throw NestingError("exp binding does not divide " + u.str());
      Expr rest = u - k * w;
      for (const Symbol& t : targets)
        if (rest.depends_on(t)) throw NestingError("exp binding leaves " + t.str() + " inside exp(" + u.str() + ")");
      val = power(g, k) * exp(run(rest));
      bound = true;
      break;
    }
    if (!bound) {
      Expr nu = run(u);
      val = nu == u ? detail::from_poly(Poly::exp_unit(node)) : exp(nu);
    }
    exp_cache.emplace(node, val);
    return val;
  }

  Expr run_poly(const Poly& p) {
    Expr out;
    for (const Term& t : p.terms()) {
      Expr term(t.coef);
      for (const auto& [sym, e] : t.mono.factors) term *= pow(symbol_value(sym), e);
      if (t.mono.exp) term *= exp_value(t.mono.exp);
      out += term;
    }
    return out;
  }

  Expr run(const Expr& f) {
    if (f.den().is_constant()) return run_poly(f.num()) / Expr(f.den().constant_value());
    return run_poly(f.num()) / run_poly(f.den());
  }
};

bool touches(const Expr& f, const Substitution& s) {
  if (!s.exps.empty() && !f.exps().empty()) return true;
  if (!s.generators.empty()) {
    std::set<Symbol> all;
    f.num().collect_symbols(all, true);
    f.den().collect_symbols(all, true);
    for (const Symbol& sym : all)
      if (sym.is_generator() && s.generators.count(sym.node())) return true;
  }
  for (const Symbol& v : f.variables())
    if (s.vars.count(v)) return true;
  return false;
}

}  // namespace

Expr substitute(const Expr& f, const Substitution& s) {
  if (!touches(f, s)) return f;
  Substituter sub{s, {}, {}};
  return sub.run(f);
}

Expr substitute(const Expr& f, const Symbol& v, const Expr& value) {
  Substitution s;
  s.vars.emplace(v, value);
  return substitute(f, s);
}

namespace {

Rational eval_poly(const Poly& p, const Point& pt) {
  Rational out;
  for (const Term& t : p.terms()) {
    Rational term = t.coef;
    for (const auto& [sym, e] : t.mono.factors) {
      if (sym.is_variable()) {
        auto it = pt.vars.find(sym);
        if (it == pt.vars.end()) throw Error("evaluate: no value for " + sym.str());
        term *= pow(it->second, e);
      } else {
        auto it = pt.generators.find(sym.node());
        if (it == pt.generators.end()) throw Error("evaluate: expression is not transcendental-free: " + sym.str());
        term *= pow(it->second, e);
      }
    }
    if (t.mono.exp) {
      auto it = pt.generators.find(t.mono.exp);
      if (it == pt.generators.end()) throw Error("evaluate: expression is not transcendental-free");
      term *= it->second;
    }
    out += term;
  }
  return out;
}

}  // namespace

Rational evaluate(const Expr& f, const Point& point) {
  Rational d = eval_poly(f.den(), point);
  if (d.is_zero()) throw ResampleError();
  return eval_poly(f.num(), point) / d;
}

Rational evaluate(const Expr& f, const std::map<Symbol, Rational>& point) {
  Point p;
  p.vars = point;
  return evaluate(f, p);
}

}  // namespace lieinv
