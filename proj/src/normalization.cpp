#include "lieinv/normalization.hpp"

#include "lieinv/error.hpp"
#include "lieinv/matrix.hpp"
#include "lieinv/sampling.hpp"
#include "lieinv/verifier.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace lieinv {

namespace {

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, Recipe>& registry() {
  static std::map<std::string, Recipe> r;
  return r;
}

const Expr& slot_of(const LiftedSet& L, int i) {
  if (i < 0 || i >= L.dim()) throw Error("recipe: slot " + std::to_string(i + 1) + " out of range");
  return L.exprs[static_cast<std::size_t>(i)];
}

// single exp node shared by every numerator term, none in the denominator
const Interned* common_exp(const Expr& e) {
  if (e.is_zero() || e.den().has_exp()) return nullptr;
  const Interned* node = e.num().terms().front().mono.exp;
  if (!node) return nullptr;
  for (const Term& t : e.num().terms())
    if (t.mono.exp != node) return nullptr;
  return node;
}

std::set<int> thetas_of(const Expr& e) {
  std::set<int> out;
  for (const Symbol& s : e.variables())
    if (s.kind() == SymKind::Theta) out.insert(s.index());
  return out;
}

bool inside_generators(const Expr& e, const Symbol& v) {
  for (const Symbol& s : e.symbols())
    if (s.is_generator() && std::find(s.node()->vars.begin(), s.node()->vars.end(), v) != s.node()->vars.end())
      return true;
  for (const Interned* n : e.exps())
    if (std::find(n->vars.begin(), n->vars.end(), v) != n->vars.end()) return true;
  return false;
}

bool any_theta(const std::vector<Expr>& work, const std::vector<bool>& active, const std::set<int>& which) {
  for (std::size_t i = 0; i < work.size(); ++i) {
    if (!active[i]) continue;
    for (int t : thetas_of(work[i]))
      if (which.count(t)) return true;
  }
  return false;
}

std::string theta_name(int k) { return "theta" + std::to_string(k); }

struct Pivot {
  NormalizationStep step;
  Substitution subst;
  std::set<int> solved;  // thetas that must disappear
  Expr assumption;
};

// affine in theta after stripping a shared exp unit
std::optional<Pivot> theta_pivot(const Expr& e, int k) {
  Symbol t = Symbol::theta(k);
  Expr f = e;
  bool stripped = false;
  if (const Interned* n = common_exp(e)) {
    f = e * exp(-*n->arg);
    stripped = true;
  }
  if (!f.depends_on(t) || inside_generators(f, t)) return std::nullopt;
  Expr A = differentiate(f, t);
  if (A.is_zero() || A.depends_on(t)) return std::nullopt;
  Expr B = f - A * Expr(t);
  if (B.depends_on(t)) return std::nullopt;
  Rational c = stripped || !B.is_zero() ? Rational(0) : Rational(1);
  Pivot p;
  p.step.pivot = e;
  p.step.unknown = theta_name(k);
  p.step.constant = c;
  p.step.binding = (Expr(c) - B) / A;
  p.subst.vars[t] = p.step.binding;
  p.solved = {k};
  if (!A.is_constant()) p.assumption = A;
  return p;
}

// e = P * exp(w) with P theta-free: solve exp(w) = 1/P
std::vector<Pivot> exp_pivots(const Expr& e) {
  std::vector<Pivot> out;
  const Interned* n = common_exp(e);
  if (!n) return out;
  const Expr& w = *n->arg;
  std::set<int> ts = thetas_of(w);
  if (ts.empty()) return out;
  Expr P = e * exp(-w);
  if (P.has_kind(SymKind::Theta)) return out;
  Expr g = Expr(1) / P;
  Pivot gen;
  gen.step.pivot = e;
  gen.step.unknown = "exp(" + w.str() + ")";
  gen.step.constant = Rational(1);
  gen.step.binding = g;
  gen.subst.exps.emplace_back(w, g);
  gen.solved = ts;
  if (!P.is_constant()) gen.assumption = P;
  out.push_back(gen);
  if (ts.size() == 1) {
    Symbol t = Symbol::theta(*ts.begin());
    Expr q = differentiate(w, t);
    if (!q.depends_on(t) && (w - q * Expr(t)).is_zero() && !q.has_kind(SymKind::Coord)) {
      Pivot var = gen;
      var.subst = Substitution{};
      var.step.unknown = theta_name(t.index());
      var.step.binding = -log(P) / q;
      var.subst.vars[t] = var.step.binding;
      out.push_back(var);
    }
  }
  return out;
}

std::vector<Expr> gradient(const Expr& f, int dim) {
  std::vector<Expr> row;
  Expr scale(1);
  if (const Interned* n = common_exp(f)) scale = exp(-*n->arg);  // rescaling a row keeps the rank
  for (int j = 1; j <= dim; ++j) {
    Expr d = differentiate(f, Symbol::coord(j));
    row.push_back(scale.is_one() ? d : d * scale);
  }
  return row;
}

}  // namespace

Recipe register_recipe(const std::string& name, Combination combination) {
  std::lock_guard lock(registry_mutex());
  auto& r = registry();
  if (r.count(name)) throw Error("recipe name already registered: " + name);
  Recipe rec{name, std::move(combination)};
  r.emplace(name, rec);
  return rec;
}

std::optional<Recipe> find_recipe(const std::string& name) {
  std::lock_guard lock(registry_mutex());
  auto it = registry().find(name);
  if (it == registry().end()) return std::nullopt;
  return it->second;
}

Expr rotation_atan(const Expr& A, const Expr& B) {
  Expr q = B / A;
  if (q.is_transcendental_free()) return atan(q);
  const Interned* c = nullptr;
  for (const Expr* e : {&A, &B})
    for (const Symbol& s : e->symbols()) {
      if (c) break;
      if (s.kind() == SymKind::Cos) c = s.node();
      if (s.kind() == SymKind::Sin) c = s.node()->partner;
    }
  if (!c) return atan(q);  // throws with the nesting message
  const Interned* s = c->partner;
  auto coef = [&](const Expr& e, int cv, int sv) {
    Substitution sub;
    sub.generators[c] = Expr(cv);
    sub.generators[s] = Expr(sv);
    return substitute(e, sub);
  };
  Expr C(Symbol::generator(c)), S(Symbol::generator(s));
  Expr ac = coef(A, 1, 0), as = coef(A, 0, 1), bc = coef(B, 1, 0), bs = coef(B, 0, 1);
  if (!(A - ac * C - as * S).is_zero() || !(B - bc * C - bs * S).is_zero())
    throw Error("rotation_atan: ratio is not linear in cos/sin of " + c->key);
  const Expr& phi = *c->arg;
  if ((bc + as).is_zero() && (bs - ac).is_zero()) return rotation_atan(ac, bc) + phi;
  if ((bc - as).is_zero() && (bs + ac).is_zero()) return rotation_atan(ac, bc) - phi;
  throw Error("rotation_atan: pair is not a rotation in " + c->key);
}

namespace recipes {

Recipe identity() {
  return {"identity", [](const LiftedSet&) { return std::vector<std::pair<int, Expr>>{}; }};
}

Recipe sum_of_squares(int i, int j) {
  return {"sum_of_squares(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")", [i, j](const LiftedSet& L) {
            const Expr &a = slot_of(L, i), &b = slot_of(L, j);
            return std::vector<std::pair<int, Expr>>{{i, a * a + b * b}};
          }};
}

Recipe arctan_ratio(int i, int j, int slot) {
  return {"arctan_ratio(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(slot + 1) + ")", [i, j, slot](const LiftedSet& L) {
            return std::vector<std::pair<int, Expr>>{{slot, rotation_atan(slot_of(L, i), slot_of(L, j))}};
          }};
}

Recipe exp_arctan(int i, int j, const Expr& w, int slot) {
  return {"exp_arctan(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + w.str() + "," + std::to_string(slot + 1) + ")", [i, j, w, slot](const LiftedSet& L) {
            return std::vector<std::pair<int, Expr>>{{slot, exp(w * rotation_atan(slot_of(L, i), slot_of(L, j)))}};
          }};
}

Recipe rotation_pair(int i, int j, const Expr& w) {
  return {"rotation_pair(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + w.str() + ")", [i, j, w](const LiftedSet& L) {
            const Expr &a = slot_of(L, i), &b = slot_of(L, j);
            Expr ang = rotation_atan(a, b);
            return std::vector<std::pair<int, Expr>>{{i, a * a + b * b}, {j, w.is_zero() ? ang : exp(w * ang)}};
          }};
}

Recipe cross_ratio(int i1, int i2, int i3, int i4, int slot_a, int slot_b) {
  return {"cross_ratio(" + std::to_string(i1 + 1) + "," + std::to_string(i2 + 1) + "," + std::to_string(i3 + 1) + "," +
              std::to_string(i4 + 1) + "," + std::to_string(slot_a + 1) + "," + std::to_string(slot_b + 1) + ")",
          [=](const LiftedSet& L) {
            const Expr &a = slot_of(L, i1), &b = slot_of(L, i2), &c = slot_of(L, i3), &d = slot_of(L, i4);
            Expr s = a * a + b * b;
            return std::vector<std::pair<int, Expr>>{{slot_a, (a * c + b * d) / s}, {slot_b, (b * c - a * d) / s}};
          }};
}

Recipe ratio(int k, int i) {
  return {"ratio(" + std::to_string(k + 1) + "," + std::to_string(i + 1) + ")", [k, i](const LiftedSet& L) {
            return std::vector<std::pair<int, Expr>>{{k, slot_of(L, k) / slot_of(L, i)}};
          }};
}

}  // namespace recipes

InvariantSet eliminate(const LiftedSet& L, const EliminateOptions& opts) {
  std::vector<Expr> work = L.exprs;
  for (const Recipe& r : opts.recipes)
    for (auto& [slot, e] : r.combination(L)) {
      if (slot < 0 || slot >= L.dim()) throw Error("recipe " + r.name + " writes outside the lifted set");
      work[static_cast<std::size_t>(slot)] = e;
    }
  std::size_t n = work.size();
  std::vector<bool> active(n, true);
  std::vector<int> order;
  for (int h : opts.pivot_hints) {
    if (h < 0 || h >= static_cast<int>(n)) throw Error("pivot hint out of range");
    if (std::find(order.begin(), order.end(), h) == order.end()) order.push_back(h);
  }
  for (int i = 0; i < static_cast<int>(n); ++i)
    if (std::find(order.begin(), order.end(), i) == order.end()) order.push_back(i);

  InvariantSet out;
  out.assumptions = L.assumptions;
  for (bool progress = true; progress;) {
    progress = false;
    for (int slot : order) {
      std::size_t s = static_cast<std::size_t>(slot);
      if (!active[s]) continue;
      std::set<int> ts = thetas_of(work[s]);
      if (ts.empty()) continue;
      std::vector<Pivot> cands = exp_pivots(work[s]);
      for (int k : ts)
        if (auto p = theta_pivot(work[s], k)) cands.push_back(*p);
      for (Pivot& p : cands) {
        std::vector<Expr> next = work;
        try {
          for (std::size_t i = 0; i < n; ++i)
            if (active[i] && i != s) next[i] = substitute(work[i], p.subst);
        } catch (const Error&) {
          continue;
        }
        std::vector<bool> after = active;
        after[s] = false;
        if (any_theta(next, after, p.solved)) continue;
        work = std::move(next);
        active = std::move(after);
        p.step.slot = slot;
        if (!p.assumption.is_zero() && !p.assumption.is_constant()) out.assumptions.push_back(p.assumption);
        out.steps.push_back(std::move(p.step));
        progress = true;
        break;
      }
      if (progress) break;
    }
  }

  std::set<int> residual;
  for (std::size_t i = 0; i < n; ++i) {
    if (!active[i]) continue;
    std::set<int> ts = thetas_of(work[i]);
    if (!ts.empty()) {
      residual.insert(ts.begin(), ts.end());
      continue;
    }
    if (work[i].is_constant()) {
      out.notes.push_back("slot " + std::to_string(i + 1) + " reduced to a constant");
      continue;
    }
    out.exprs.push_back(work[i]);
    out.slots.push_back(static_cast<int>(i));
  }
  out.residual_thetas.assign(residual.begin(), residual.end());
  out.complete = residual.empty();
  if (!out.complete) {
    std::string msg = "elimination stuck; remaining parameters:";
    for (int t : residual) msg += " " + theta_name(t);
    out.notes.push_back(msg);
  }
  const LieAlgebra* g = opts.algebra ? opts.algebra : L.source.get();
  if (g) {
    out.verified = true;
    for (const Expr& e : out.exprs)
      if (!check_invariant(*g, e).ok) out.verified = false;
  }
  return out;
}

InvariantSet rescale_to_polynomial(const InvariantSet& S, const std::vector<Expr>& multipliers) {
  InvariantSet out = S;
  for (std::size_t idx = 0; idx < out.exprs.size(); ++idx) {
    Expr& f = out.exprs[idx];
    if (f.den().is_constant()) continue;
    Poly d = f.den();
    Expr factor(1);
    for (const Expr& m : multipliers) {
      if (!m.is_polynomial() || m.is_constant()) continue;
      Poly mp = m.num();
      for (;;) {
        auto q = exact_divide(d, mp);
        if (!q) break;
        d = *q;
        factor *= m;
      }
    }
    if (d.is_constant())
      f *= factor;
    else
      out.notes.push_back("survivor " + std::to_string(idx + 1) + ": denominator is not a product of the multipliers");
  }
  return out;
}

int functional_rank(const std::vector<Expr>& F, int dim, std::uint64_t seed, int trials) {
  if (F.empty()) return 0;
  std::vector<Expr> entries;
  for (const Expr& f : F) {
    auto row = gradient(f, dim);
    entries.insert(entries.end(), row.begin(), row.end());
  }
  PointSampler sampler(entries);
  RationalSampler rng(seed);
  std::size_t m = F.size(), d = static_cast<std::size_t>(dim);
  int best = 0, done = 0;
  for (int attempt = 0; done < trials && attempt < 4 * trials; ++attempt) {
    Point p = sampler.next(rng);
    Matrix<Rational> J(m, d);
    try {
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < d; ++j) J(i, j) = evaluate(entries[i * d + j], p);
    } catch (const ResampleError&) {
      continue;
    }
    ++done;
    best = std::max(best, rank(J));
  }
  return best;
}

bool functionally_equivalent(const std::vector<Expr>& A, const std::vector<Expr>& B, int dim, std::uint64_t seed,
                             int trials) {
  if (A.size() != B.size()) throw Error("functionally_equivalent: sets have different sizes");
  std::vector<Expr> AB = A;
  AB.insert(AB.end(), B.begin(), B.end());
  int ra = functional_rank(A, dim, seed, trials), rb = functional_rank(B, dim, seed, trials);
  int rab = functional_rank(AB, dim, seed, trials);
  return ra == rb && rab == ra;
}

bool functionally_equivalent(const InvariantSet& A, const InvariantSet& B, const LieAlgebra& g, std::uint64_t seed,
                             int trials) {
  return functionally_equivalent(A.exprs, B.exprs, g.dim(), seed, trials);
}

}  // namespace lieinv
