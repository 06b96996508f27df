#include "lieinv/verifier.hpp"

#include "lieinv/error.hpp"

#include <algorithm>

namespace lieinv {

InvariantCheck check_invariant(const LieAlgebra& g, const Expr& F) {
  if (F.has_kind(SymKind::Theta)) throw Error("check_invariant: expression depends on group parameters: " + F.str());
  for (const Symbol& s : F.variables())
    if (s.kind() == SymKind::Coord && s.index() > g.dim())
      throw Error("check_invariant: " + s.str() + " is outside the algebra of dimension " + std::to_string(g.dim()));
  InvariantCheck out;
  out.ok = true;
  for (const auto& field : coadjoint_fields(g)) {
    Expr r = field.apply(F);
    out.ok = out.ok && r.is_zero();
    out.residuals.push_back(std::move(r));
  }
  return out;
}

namespace {

void add_to(NCSum& s, const Word& w, const Expr& c) {
  if (c.is_zero()) return;
  auto it = s.find(w);
  if (it == s.end()) {
    s.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) s.erase(it);
}

bool ordered(const Word& w) { return std::is_sorted(w.begin(), w.end()); }

// longer words first so that corrections merge before they are rewritten
struct LongerFirst {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  }
};

}  // namespace

int PBWElement::degree() const {
  int d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
  return d;
}

std::string word_str(const Word& w, const LieAlgebra* g) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '*';
    s += g ? g->label(w[i]) : "e" + std::to_string(w[i] + 1);
  }
  return s;
}

std::string PBWElement::str(const LieAlgebra* g) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    if (c.is_one()) {
      s += word_str(w, g);
    } else {
      s += "(" + c.str() + ")";
      if (!w.empty()) s += "*" + word_str(w, g);
    }
  }
  return s;
}

bool operator==(const PBWElement& a, const PBWElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (auto i = a.terms_.begin(), j = b.terms_.begin(); i != a.terms_.end(); ++i, ++j)
    if (i->first != j->first || !(i->second == j->second)) return false;
  return true;
}

NCSum symmetrize(const Expr& F, const LieAlgebra& g, int degree_bound) {
  if (!F.is_polynomial() || !F.is_transcendental_free())
    throw Error("symmetrize: only polynomial invariants can be symmetrized: " + F.str());
  Rational den = F.den().constant_value();
  NCSum out;
  for (const Term& t : F.num().terms()) {
    Word w;
    Expr coef(t.coef / den);
    for (const auto& [s, e] : t.mono.factors) {
      if (s.kind() == SymKind::Coord) {
        if (s.index() > g.dim()) throw Error("symmetrize: " + s.str() + " outside the algebra");
        for (int k = 0; k < e; ++k) w.push_back(s.index() - 1);
      } else if (s.kind() == SymKind::Param) {
        coef *= pow(Expr(s), e);
      } else {
        throw Error("symmetrize: unexpected symbol " + s.str());
      }
    }
    if (static_cast<int>(w.size()) > degree_bound) throw DegreeBoundExceeded("symmetrize: degree bound exceeded");
    bool commuting = true;
    for (std::size_t i = 0; i < w.size() && commuting; ++i)
      for (std::size_t j = i + 1; j < w.size(); ++j)
        if (w[i] != w[j] && !g.bracket(w[i], w[j]).empty()) {
          commuting = false;
          break;
        }
    if (commuting) {
      add_to(out, w, coef);
      continue;
    }
    // every distinct arrangement of the multiset occurs equally often among the r! orderings
    std::vector<Word> perms;
    Word p = w;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    Expr share = coef / Expr(static_cast<long>(perms.size()));
    for (const Word& q : perms) add_to(out, q, share);
  }
  return out;
}

PBWElement pbw_normal_form(const NCSum& u, const LieAlgebra& g, int degree_bound) {
  std::map<Word, Expr, LongerFirst> work;
  for (const auto& [w, c] : u) {
    if (static_cast<int>(w.size()) > degree_bound) throw DegreeBoundExceeded("pbw: degree bound exceeded");
    if (!c.is_zero()) work[w] += c;
  }
  PBWElement out;
  while (!work.empty()) {
    auto it = work.begin();
    Word w = it->first;
    Expr c = it->second;
    work.erase(it);
    if (c.is_zero()) continue;
    if (ordered(w)) {
      add_to(out.terms_, w, c);
      continue;
    }
    std::size_t p = 0;
    while (w[p] <= w[p + 1]) ++p;
    // e_j e_i = e_i e_j + [e_j, e_i]
    Word swapped = w;
    std::swap(swapped[p], swapped[p + 1]);
    auto add = [&work](const Word& k, const Expr& v) {
      auto jt = work.find(k);
      if (jt == work.end()) {
        work.emplace(k, v);
        return;
      }
      jt->second += v;
      if (jt->second.is_zero()) work.erase(jt);
    };
    add(swapped, c);
    for (const auto& [k, v] : g.bracket(w[p], w[p + 1])) {
      Word shorter(w.begin(), w.begin() + static_cast<long>(p));
      shorter.push_back(k);
      shorter.insert(shorter.end(), w.begin() + static_cast<long>(p) + 2, w.end());
      add(shorter, c * v);
    }
  }
  return out;
}

bool is_central(const PBWElement& u, const LieAlgebra& g, int degree_bound) {
  for (int i = 0; i < g.dim(); ++i) {
    NCSum comm;
    for (const auto& [w, c] : u.terms()) {
      Word right = w, left{i};
      right.push_back(i);
      left.insert(left.end(), w.begin(), w.end());
      add_to(comm, right, c);
      add_to(comm, left, -c);
    }
    if (!pbw_normal_form(comm, g, degree_bound).is_zero()) return false;
  }
  return true;
}

}  // namespace lieinv
