#include "internal.hpp"

#include <set>

namespace lieinv {

namespace {

std::string body_text(const Monomial& m) {
  std::string s;
  for (const auto& [sym, e] : m.factors) {
    if (!s.empty()) s += '*';
    s += sym.str();
    if (e > 1) s += '^' + std::to_string(e);
  }
  if (m.exp) {
    if (!s.empty()) s += '*';
    s += "exp(" + m.exp->key + ")";
  }
  return s;
}

std::string poly_text(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const Term& t : p.terms()) {
    bool neg = t.coef.sign() < 0;
    Rational c = t.coef.abs();
    if (first) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      s += c.str();
    } else if (c.is_one()) {
      s += body_text(t.mono);
    } else {
      s += c.str() + "*" + body_text(t.mono);
    }
  }
  return s;
}

bool simple_denominator(const Poly& d) {
  if (d.size() != 1) return false;
  const Term& t = d.lead();
  return t.coef.is_one() && t.mono.factors.size() + (t.mono.exp ? 1 : 0) == 1;
}

const std::set<std::string>& greek() {
  static const std::set<std::string> g = {"alpha", "beta",  "gamma", "delta", "epsilon", "zeta", "eta",
                                          "theta", "iota",  "kappa", "lambda", "mu",     "nu",   "xi",
                                          "pi",    "rho",   "sigma", "tau",   "phi",     "chi",  "psi", "omega"};
  return g;
}

std::string param_tex(const std::string& name) {
  std::size_t split = name.size();
  while (split > 0 && std::isdigit(static_cast<unsigned char>(name[split - 1]))) --split;
  std::string stem = name.substr(0, split), idx = name.substr(split);
  if (greek().count(stem)) stem = "\\" + stem;
  if (!idx.empty() && !stem.empty()) return stem + "_{" + idx + "}";
  return stem.empty() ? name : stem;
}

std::string symbol_tex(const Symbol& s) {
  switch (s.kind()) {
    case SymKind::Coord: return "x_{" + std::to_string(s.index()) + "}";
    case SymKind::Theta: return "\\theta_{" + std::to_string(s.index()) + "}";
    case SymKind::Aux: return "z_{" + std::to_string(s.index()) + "}";
    case SymKind::Param: return param_tex(s.name());
    case SymKind::Log: return "\\ln\\left(" + s.node()->tex + "\\right)";
    case SymKind::Atan: return "\\arctan\\left(" + s.node()->tex + "\\right)";
    case SymKind::Cos: return "\\cos\\left(" + s.node()->tex + "\\right)";
    case SymKind::Sin: return "\\sin\\left(" + s.node()->tex + "\\right)";
    default: return "";
  }
}

std::string rational_tex(const Rational& c) {
  if (c.is_integer()) return c.str();
  return "\\frac{" + c.num().get_str() + "}{" + c.den().get_str() + "}";
}

std::string poly_tex(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const Term& t : p.terms()) {
    bool neg = t.coef.sign() < 0;
    Rational c = t.coef.abs();
    if (first) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    std::string body;
    for (const auto& [sym, e] : t.mono.factors) {
      if (!body.empty()) body += ' ';
      body += symbol_tex(sym);
      if (e > 1) body += "^{" + std::to_string(e) + "}";
    }
    if (t.mono.exp) {
      if (!body.empty()) body += ' ';
      body += "\\exp\\left(" + t.mono.exp->tex + "\\right)";
    }
    if (body.empty()) {
      s += rational_tex(c);
    } else if (c.is_one()) {
      s += body;
    } else {
      s += rational_tex(c) + " " + body;
    }
  }
  return s;
}

}  // namespace

std::string Expr::str() const {
  if (den_.is_one()) return poly_text(num_);
  std::string n = poly_text(num_);
  if (num_.size() > 1) n = "(" + n + ")";
  std::string d = poly_text(den_);
  if (!simple_denominator(den_)) d = "(" + d + ")";
  return n + "/" + d;
}

std::string Expr::latex() const {
  if (den_.is_one()) return poly_tex(num_);
  return "\\frac{" + poly_tex(num_) + "}{" + poly_tex(den_) + "}";
}

}  // namespace lieinv
