// Multivariate gcd over Z. Polynomials are mapped onto dense exponent vectors
// with every symbol and every distinct exp node as an independent variable.
#include "internal.hpp"

#include "lieinv/error.hpp"

#include <algorithm>
#include <random>

namespace lieinv {

namespace {

using Exps = std::vector<int>;

struct IPoly {
  std::map<Exps, mpz_class, std::greater<>> t;  // lex, leading first

  bool zero() const { return t.empty(); }
  bool constant() const {
    if (t.empty()) return true;
    if (t.size() != 1) return false;
    for (int e : t.begin()->first)
      if (e) return false;
    return true;
  }
  void add(const Exps& e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, fresh] = t.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) t.erase(it);
    }
  }
};

IPoly constant_poly(std::size_t nv, const mpz_class& c) {
  IPoly p;
  p.add(Exps(nv, 0), c);
  return p;
}

IPoly sub(const IPoly& a, const IPoly& b) {
  IPoly r = a;
  for (const auto& [e, c] : b.t) r.add(e, -c);
  return r;
}

IPoly mul(const IPoly& a, const IPoly& b) {
  IPoly r;
  for (const auto& [ea, ca] : a.t)
    for (const auto& [eb, cb] : b.t) {
      Exps e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add(e, ca * cb);
    }
  return r;
}

IPoly scale(const IPoly& a, const mpz_class& c) {
  IPoly r;
  if (c == 0) return r;
  for (const auto& [e, v] : a.t) r.t.emplace(e, v * c);
  return r;
}

IPoly divexact_int(const IPoly& a, const mpz_class& c) {
  IPoly r;
  for (const auto& [e, v] : a.t) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    r.t.emplace(e, q);
  }
  return r;
}

std::optional<IPoly> divide(IPoly a, const IPoly& b) {
  if (b.zero()) throw DivisionByZero();
  IPoly q;
  const auto& [lb, cb] = *b.t.begin();
  while (!a.zero()) {
    const auto& [la, ca] = *a.t.begin();
    Exps e(la.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = la[i] - lb[i];
      if (e[i] < 0) return std::nullopt;
    }
    if (!mpz_divisible_p(ca.get_mpz_t(), cb.get_mpz_t())) return std::nullopt;
    mpz_class c = ca / cb;
    IPoly m;
    m.add(e, c);
    q.add(e, c);
    a = sub(a, mul(m, b));
  }
  return q;
}

mpz_class content(const IPoly& a) {
  mpz_class g = 0;
  for (const auto& [e, c] : a.t) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

int degree(const IPoly& a, std::size_t v) {
  int d = -1;
  for (const auto& [e, c] : a.t) d = std::max(d, e[v]);
  return d;
}

std::vector<IPoly> coefficients(const IPoly& a, std::size_t v) {
  std::vector<IPoly> out(static_cast<std::size_t>(std::max(degree(a, v), 0)) + 1);
  for (const auto& [e, c] : a.t) {
    Exps f = e;
    f[v] = 0;
    out[static_cast<std::size_t>(e[v])].add(f, c);
  }
  return out;
}

IPoly from_coefficients(const std::vector<IPoly>& cs, std::size_t v) {
  IPoly r;
  for (std::size_t d = 0; d < cs.size(); ++d)
    for (const auto& [e, c] : cs[d].t) {
      Exps f = e;
      f[v] = static_cast<int>(d);
      r.add(f, c);
    }
  return r;
}

IPoly normalize_sign(IPoly a) {
  if (!a.zero() && a.t.begin()->second < 0) a = scale(a, -1);
  return a;
}

std::vector<bool> used_vars(const IPoly& a, std::size_t nv) {
  std::vector<bool> u(nv, false);
  for (const auto& [e, c] : a.t)
    for (std::size_t i = 0; i < nv; ++i)
      if (e[i]) u[i] = true;
  return u;
}

// degree of gcd of univariate images in v; -1 when no usable point was found
int image_gcd_degree(const IPoly& a, const IPoly& b, std::size_t v, std::size_t nv, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-60, 60);
  auto image = [&](const IPoly& p, const std::vector<mpz_class>& pt) {
    std::vector<mpq_class> u(static_cast<std::size_t>(degree(p, v)) + 1);
    for (const auto& [e, c] : p.t) {
      mpz_class val = c;
      for (std::size_t i = 0; i < nv; ++i) {
        if (i == v || e[i] == 0) continue;
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), pt[i].get_mpz_t(), static_cast<unsigned long>(e[i]));
        val *= pw;
      }
      u[static_cast<std::size_t>(e[v])] += val;
    }
    return u;
  };
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<mpz_class> pt(nv);
    for (auto& p : pt) {
      long r = 0;
      while (r == 0) r = dist(rng);
      p = r;
    }
    auto ua = image(a, pt);
    auto ub = image(b, pt);
    if (ua.back() == 0 || ub.back() == 0) continue;
    // Euclid over Q
    while (!(ub.size() == 1 && ub[0] == 0)) {
      if (ub.size() == 1) return 0;
      while (ua.size() >= ub.size()) {
        mpq_class f = ua.back() / ub.back();
        std::size_t shift = ua.size() - ub.size();
        for (std::size_t j = 0; j < ub.size(); ++j) ua[j + shift] -= f * ub[j];
        while (ua.size() > 1 && ua.back() == 0) ua.pop_back();
        if (ua.size() == 1 && ua[0] == 0) break;
        if (ua.size() < ub.size()) break;
      }
      std::swap(ua, ub);
    }
    return static_cast<int>(ua.size()) - 1;
  }
  return -1;
}

IPoly gcd(const IPoly& a, const IPoly& b, std::size_t nv, std::mt19937_64& rng);

IPoly gcd_list(const std::vector<IPoly>& ps, IPoly g, std::size_t nv, std::mt19937_64& rng) {
  for (const IPoly& p : ps) {
    if (p.zero()) continue;
    g = gcd(g, p, nv, rng);
    if (!g.zero() && g.constant() && abs(g.t.begin()->second) == 1) break;
  }
  return g;
}

std::vector<IPoly> prem(std::vector<IPoly> r, const std::vector<IPoly>& b) {
  std::size_t db = b.size() - 1;
  const IPoly& lb = b.back();
  while (r.size() - 1 >= db && !(r.size() == 1 && r[0].zero())) {
    IPoly lr = r.back();
    std::size_t shift = r.size() - 1 - db;
    for (auto& c : r) c = mul(c, lb);
    for (std::size_t j = 0; j <= db; ++j) r[j + shift] = sub(r[j + shift], mul(lr, b[j]));
    while (r.size() > 1 && r.back().zero()) r.pop_back();
    if (r.size() - 1 < db || r.size() == 1) {
      if (db == 0) r = {IPoly{}};
      break;
    }
  }
  return r;
}

// a, b: integer content 1, no monomial content
IPoly gcd_primitive(const IPoly& a, const IPoly& b, std::size_t nv, std::mt19937_64& rng) {
  if (a.constant() || b.constant()) return constant_poly(nv, 1);
  if (a.t == b.t) return normalize_sign(a);
  if (a.t.size() >= b.t.size()) {
    if (divide(a, b)) return normalize_sign(b);
  } else if (divide(b, a)) {
    return normalize_sign(a);
  }
  auto ua = used_vars(a, nv), ub = used_vars(b, nv);
  for (std::size_t v = 0; v < nv; ++v) {
    if (ua[v] && !ub[v]) return normalize_sign(gcd_list(coefficients(a, v), b, nv, rng));
    if (ub[v] && !ua[v]) return normalize_sign(gcd_list(coefficients(b, v), a, nv, rng));
  }
  std::size_t best = nv;
  int best_deg = 0;
  for (std::size_t v = 0; v < nv; ++v) {
    if (!ua[v]) continue;
    int d = image_gcd_degree(a, b, v, nv, rng);
    if (d == 0) {
      auto cs = coefficients(a, v);
      auto cb = coefficients(b, v);
      cs.insert(cs.end(), cb.begin(), cb.end());
      IPoly g = cs.front();
      return normalize_sign(gcd_list(cs, g, nv, rng));
    }
    int m = std::min(degree(a, v), degree(b, v));
    if (best == nv || m < best_deg) best = v, best_deg = m;
  }
  std::size_t v = best;
  auto ca = coefficients(a, v), cb = coefficients(b, v);
  IPoly conta = gcd_list(ca, ca.back(), nv, rng);
  IPoly contb = gcd_list(cb, cb.back(), nv, rng);
  IPoly cont = gcd(conta, contb, nv, rng);
  auto pa = coefficients(*divide(a, conta), v);
  auto pb = coefficients(*divide(b, contb), v);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  for (;;) {
    auto r = prem(pa, pb);
    if (r.size() == 1 && r[0].zero()) break;
    if (r.size() == 1) {
      pb = {constant_poly(nv, 1)};
      break;
    }
    pa = pb;
    IPoly rp = from_coefficients(r, v);
    IPoly rc = gcd_list(r, r.back(), nv, rng);
    pb = coefficients(*divide(rp, rc), v);
  }
  IPoly g = from_coefficients(pb, v);
  auto cg = coefficients(g, v);
  IPoly gc = gcd_list(cg, cg.back(), nv, rng);
  g = *divide(g, gc);
  return normalize_sign(mul(g, cont));
}

IPoly gcd(const IPoly& a, const IPoly& b, std::size_t nv, std::mt19937_64& rng) {
  if (a.zero()) return normalize_sign(b);
  if (b.zero()) return normalize_sign(a);
  Exps ma(nv, 1 << 30), mb(nv, 1 << 30);
  for (const auto& [e, c] : a.t)
    for (std::size_t i = 0; i < nv; ++i) ma[i] = std::min(ma[i], e[i]);
  for (const auto& [e, c] : b.t)
    for (std::size_t i = 0; i < nv; ++i) mb[i] = std::min(mb[i], e[i]);
  auto shift = [&](const IPoly& p, const Exps& m) {
    IPoly r;
    for (const auto& [e, c] : p.t) {
      Exps f = e;
      for (std::size_t i = 0; i < nv; ++i) f[i] -= m[i];
      r.t.emplace(f, c);
    }
    return r;
  };
  IPoly sa = shift(a, ma), sb = shift(b, mb);
  mpz_class ca = content(sa), cb = content(sb), cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  IPoly core = gcd_primitive(divexact_int(sa, ca), divexact_int(sb, cb), nv, rng);
  Exps mg(nv);
  for (std::size_t i = 0; i < nv; ++i) mg[i] = std::min(ma[i], mb[i]);
  IPoly mono;
  mono.add(mg, cg);
  return mul(core, mono);
}

struct Mapping {
  std::vector<Symbol> syms;
  std::vector<const Interned*> exps;
  std::size_t nv() const { return syms.size() + exps.size(); }
};

Mapping mapping_for(const Poly& a, const Poly& b) {
  std::set<Symbol> s;
  std::set<const Interned*> e;
  for (const Poly* p : {&a, &b}) {
    p->collect_symbols(s, false);
    p->collect_exps(e);
  }
  Mapping m;
  m.syms.assign(s.begin(), s.end());
  m.exps.assign(e.begin(), e.end());
  std::sort(m.exps.begin(), m.exps.end(), [](const Interned* x, const Interned* y) { return x->key < y->key; });
  return m;
}

// returns p * den so that all coefficients are integers
IPoly to_ipoly(const Poly& p, const Mapping& m, mpz_class& den) {
  den = 1;
  for (const Term& t : p.terms()) den = lcm_den(t.coef, den);
  IPoly r;
  for (const Term& t : p.terms()) {
    Exps e(m.nv(), 0);
    for (const auto& [s, k] : t.mono.factors)
      e[static_cast<std::size_t>(std::lower_bound(m.syms.begin(), m.syms.end(), s) - m.syms.begin())] = k;
    if (t.mono.exp) {
      auto it = std::find(m.exps.begin(), m.exps.end(), t.mono.exp);
      e[m.syms.size() + static_cast<std::size_t>(it - m.exps.begin())] = 1;
    }
    mpq_class c = t.coef.get() * den;
    r.add(e, c.get_num());
  }
  return r;
}

Poly from_ipoly(const IPoly& p, const Mapping& m) {
  std::vector<Term> out;
  for (const auto& [e, c] : p.t) {
    Monomial mono;
    for (std::size_t i = 0; i < m.syms.size(); ++i)
      if (e[i]) {
        mono.factors.emplace_back(m.syms[i], e[i]);
        mono.degree += e[i];
      }
    for (std::size_t i = 0; i < m.exps.size(); ++i)
      if (int k = e[m.syms.size() + i]) mono.exp = detail::exp_product(mono.exp, detail::exp_power(m.exps[i], k));
    out.push_back(Term{std::move(mono), Rational(c)});
  }
  return Poly::from_terms(std::move(out));
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_constant() || b.is_constant()) return Poly(Rational(1));
  Mapping m = mapping_for(a, b);
  mpz_class da, db;
  IPoly ia = to_ipoly(a, m, da), ib = to_ipoly(b, m, db);
  std::mt19937_64 rng(0x5eed);
  IPoly g = gcd(ia, ib, m.nv(), rng);
  return from_ipoly(g, m);
}

std::optional<Poly> exact_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return Poly();
  if (b.is_constant()) return a.scaled(b.constant_value().inverse());
  Mapping m = mapping_for(a, b);
  mpz_class da, db;
  IPoly ia = to_ipoly(a, m, da), ib = to_ipoly(b, m, db);
  // a/b = (ia/da)/(ib/db); dividing by the primitive part keeps everything integral
  mpz_class cb = content(ib);
  auto q = divide(ia, divexact_int(ib, cb));
  if (!q) return std::nullopt;
  return from_ipoly(*q, m).scaled(Rational(db, mpz_class(da * cb)));
}

}  // namespace lieinv
