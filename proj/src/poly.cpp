#include "internal.hpp"

#include "lieinv/error.hpp"

#include <algorithm>

namespace lieinv {

int Monomial::exponent_of(const Symbol& s) const {
  for (const auto& [t, e] : factors)
    if (t == s) return e;
  return 0;
}

int compare(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree > b.degree ? 1 : -1;
  std::size_t i = 0, j = 0;
  while (i < a.factors.size() && j < b.factors.size()) {
    const auto& [sa, ea] = a.factors[i];
    const auto& [sb, eb] = b.factors[j];
    if (sa == sb) {
      if (ea != eb) return ea > eb ? 1 : -1;
      ++i, ++j;
    } else {
      return sa < sb ? 1 : -1;
    }
  }
  if (i < a.factors.size()) return 1;
  if (j < b.factors.size()) return -1;
  if (a.exp == b.exp) return 0;
  if (!a.exp) return 1;
  if (!b.exp) return -1;
  return a.exp->key < b.exp->key ? 1 : -1;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.factors.reserve(a.factors.size() + b.factors.size());
  std::size_t i = 0, j = 0;
  while (i < a.factors.size() || j < b.factors.size()) {
    if (j == b.factors.size() || (i < a.factors.size() && a.factors[i].first < b.factors[j].first)) {
      m.factors.push_back(a.factors[i++]);
    } else if (i == a.factors.size() || b.factors[j].first < a.factors[i].first) {
      m.factors.push_back(b.factors[j++]);
    } else {
      m.factors.emplace_back(a.factors[i].first, a.factors[i].second + b.factors[j].second);
      ++i, ++j;
    }
  }
  m.degree = a.degree + b.degree;
  m.exp = detail::exp_product(a.exp, b.exp);
  return m;
}

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) terms_.push_back(Term{Monomial{}, c});
}

Poly Poly::symbol(const Symbol& s, int e) {
  Poly p;
  Monomial m;
  m.factors.emplace_back(s, e);
  m.degree = e;
  p.terms_.push_back(Term{std::move(m), Rational(1)});
  return p;
}

Poly Poly::exp_unit(const Interned* node, const Rational& c) {
  Poly p;
  if (c.is_zero()) return p;
  Monomial m;
  m.exp = node;
  p.terms_.push_back(Term{std::move(m), c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return compare(a.mono, b.mono) > 0; });
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef.is_zero()) p.terms_.pop_back();
    } else if (!t.coef.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Poly Poly::from_sorted(std::vector<Term> terms) {
  Poly p;
  p.terms_ = std::move(terms);
  return p;
}

Rational Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw Error("polynomial is not constant");
  return terms_[0].coef;
}

bool Poly::has_exp() const {
  for (const Term& t : terms_)
    if (t.mono.exp) return true;
  return false;
}

bool Poly::has_generators() const {
  for (const Term& t : terms_) {
    if (t.mono.exp) return true;
    for (const auto& f : t.mono.factors)
      if (f.first.is_generator()) return true;
  }
  return false;
}

int Poly::degree_in(const Symbol& s) const {
  int d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.exponent_of(s));
  return d;
}

void Poly::collect_symbols(std::set<Symbol>& out, bool descend) const {
  for (const Term& t : terms_) {
    for (const auto& f : t.mono.factors) {
      out.insert(f.first);
      if (descend && f.first.is_generator())
        for (const Symbol& v : f.first.node()->vars) out.insert(v);
    }
    if (descend && t.mono.exp)
      for (const Symbol& v : t.mono.exp->vars) out.insert(v);
  }
}

void Poly::collect_exps(std::set<const Interned*>& out) const {
  for (const Term& t : terms_)
    if (t.mono.exp) out.insert(t.mono.exp);
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (Term& t : p.terms_) t.coef = -t.coef;
  return p;
}

namespace {

Poly merge(const Poly& a, const Poly& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    int c = i == ta.size() ? -1 : j == tb.size() ? 1 : compare(ta[i].mono, tb[j].mono);
    if (c > 0) {
      out.push_back(ta[i++]);
    } else if (c < 0) {
      out.push_back(tb[j++]);
      if (subtract) out.back().coef = -out.back().coef;
    } else {
      Rational s = subtract ? ta[i].coef - tb[j].coef : ta[i].coef + tb[j].coef;
      if (!s.is_zero()) out.push_back(Term{ta[i].mono, s});
      ++i, ++j;
    }
  }
  return Poly::from_sorted(std::move(out));
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return merge(a, b, false);
}

Poly operator-(const Poly& a, const Poly& b) {
  if (b.is_zero()) return a;
  return merge(a, b, true);
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.is_constant()) return b.scaled(a.constant_value());
  if (b.is_constant()) return a.scaled(b.constant_value());
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const Term& s : a.terms())
    for (const Term& t : b.terms()) out.push_back(Term{mono_mul(s.mono, t.mono), s.coef * t.coef});
  return Poly::from_terms(std::move(out));
}

Poly Poly::scaled(const Rational& c) const {
  if (c.is_zero()) return Poly();
  Poly p = *this;
  for (Term& t : p.terms_) t.coef *= c;
  return p;
}

Poly Poly::times_monomial(const Monomial& m, const Rational& c) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back(Term{mono_mul(t.mono, m), t.coef * c});
  return from_terms(std::move(out));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].coef == b.terms_[i].coef) || !(a.terms_[i].mono == b.terms_[i].mono)) return false;
  return true;
}

Poly reduce_trig(const Poly& p) {
  bool needed = false;
  for (const Term& t : p.terms())
    for (const auto& [s, e] : t.mono.factors)
      if (s.kind() == SymKind::Sin && e >= 2) needed = true;
  if (!needed) return p;
  std::vector<Term> out;
  std::vector<Term> work(p.terms().begin(), p.terms().end());
  while (!work.empty()) {
    Term t = std::move(work.back());
    work.pop_back();
    auto it = std::find_if(t.mono.factors.begin(), t.mono.factors.end(),
                           [](const auto& f) { return f.first.kind() == SymKind::Sin && f.second >= 2; });
    if (it == t.mono.factors.end()) {
      out.push_back(std::move(t));
      continue;
    }
    // sin^e -> sin^(e-2) - sin^(e-2) cos^2
    Symbol c = Symbol::generator(it->first.node()->partner);
    it->second -= 2;
    if (it->second == 0) t.mono.factors.erase(it);
    t.mono.degree -= 2;
    work.push_back(t);
    Monomial c2;
    c2.factors.emplace_back(c, 2);
    c2.degree = 2;
    Term u{mono_mul(t.mono, c2), -t.coef};
    work.push_back(std::move(u));
  }
  return Poly::from_terms(std::move(out));
}

}  // namespace lieinv
