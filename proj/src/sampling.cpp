#include "lieinv/sampling.hpp"

#include "lieinv/error.hpp"

#include <map>
#include <string>

namespace lieinv {

namespace {

// exp(q*b) for every base b; bases are thetas, log/atan nodes, and the
// monic-normalized remainder of the argument
struct Decomp {
  std::vector<std::pair<std::string, Rational>> bases;
};

// argument = sum q_b * b + remainder, b in {theta, log(.), atan(.)}
Decomp decompose(const Expr& arg) {
  Decomp d;
  auto add_rest = [&d](const Expr& r) {
    Rational c = r.num().lead().coef;
    d.bases.emplace_back("r:" + (r / Expr(c)).str(), c);
  };
  if (!arg.den().is_constant()) {
    add_rest(arg);
    return d;
  }
  Rational den = arg.den().constant_value();
  Expr rest;
  for (const Term& t : arg.num().terms()) {
    bool base = !t.mono.exp && t.mono.factors.size() == 1 && t.mono.factors[0].second == 1;
    if (base) {
      SymKind k = t.mono.factors[0].first.kind();
      base = k == SymKind::Theta || k == SymKind::Log || k == SymKind::Atan;
    }
    if (base)
      d.bases.emplace_back("s:" + t.mono.factors[0].first.str(), t.coef / den);
    else
      rest += Expr::fraction(Poly::from_sorted({t}), Poly(den));
  }
  if (!rest.is_zero()) add_rest(rest);
  return d;
}

std::map<const Interned*, Decomp>& decomp_cache() {
  thread_local std::map<const Interned*, Decomp> cache;
  return cache;
}

const Decomp& decomposition(const Interned* node) {
  auto& c = decomp_cache();
  auto it = c.find(node);
  if (it == c.end()) it = c.emplace(node, decompose(*node->arg)).first;
  return it->second;
}

Rational positive_small(RationalSampler& rng) {
  return Rational(rng.next_int(1, 40), rng.next_int(1, 40));
}

}  // namespace

PointSampler::PointSampler(const std::vector<Expr>& exprs) {
  for (const Expr& e : exprs) scan(e);
}

void PointSampler::scan(const Expr& e) {
  for (const Symbol& s : e.variables()) vars_.insert(s);
  for (const Symbol& s : e.symbols()) {
    if (!s.is_generator()) continue;
    if (s.kind() == SymKind::Cos) trig_.insert(s.node());
    else if (s.kind() == SymKind::Sin) trig_.insert(s.node()->partner);
    else if (!free_nodes_.count(s.node())) {
      free_nodes_.insert(s.node());
      scan(s.argument());
    }
  }
  for (const Interned* n : e.exps()) {
    if (exps_.count(n)) continue;
    exps_.insert(n);
    scan(*n->arg);
    const Decomp& d = decomposition(n);
    for (const auto& [b, q] : d.bases) {
      bases_.insert(b);
      mpz_lcm(lcm_.get_mpz_t(), lcm_.get_mpz_t(), q.den().get_mpz_t());
    }
  }
}

Point PointSampler::next(RationalSampler& rng, const std::map<Symbol, Rational>& fixed) const {
  Point p;
  for (const Symbol& v : vars_) {
    auto it = fixed.find(v);
    p.vars[v] = it != fixed.end() ? it->second : rng.next();
  }
  for (const Interned* n : free_nodes_) p.generators[n] = rng.next();
  for (const Interned* c : trig_) {
    Rational u = rng.next(), w = Rational(1) + u * u;
    p.generators[c] = (Rational(1) - u * u) / w;
    p.generators[c->partner] = Rational(2) * u / w;
  }
  std::map<std::string, Rational> base_val;
  for (const auto& b : bases_) base_val[b] = positive_small(rng);
  if (!lcm_.fits_slong_p()) throw Error("sampling: exponent denominators too large");
  long L = lcm_.get_si();
  for (const Interned* n : exps_) {
    const Decomp& d = decomposition(n);
    Rational v(1);
    for (const auto& [b, q] : d.bases) {
      Rational e = q * Rational(L);
      v *= pow(base_val.at(b), e.to_long());
    }
    p.generators[n] = v;
  }
  return p;
}

}  // namespace lieinv
