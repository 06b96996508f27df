#include "lieinv/moving_frame.hpp"

#include "lieinv/error.hpp"
#include "lieinv/sampling.hpp"

#include <algorithm>
#include <set>

namespace lieinv {

namespace {

using MatE = Matrix<Expr>;
using MatQ = Matrix<Rational>;

Rational factorial(long k) {
  Rational f(1);
  for (long i = 2; i <= k; ++i) f *= Rational(i);
  return f;
}

std::optional<int> nilpotency_index(const MatE& m) {
  MatE p = m;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    if (p.is_zero()) return static_cast<int>(k);
    p = p * m;
  }
  return std::nullopt;
}

MatE exp_nilpotent_known(const MatE& m, const Expr& t, int index) {
  std::size_t n = m.rows();
  MatE out = MatE::identity(n), p = MatE::identity(n);
  for (int k = 1; k < index; ++k) {
    p = p * m;
    out = out + p.scaled(pow(t, k) / Expr(factorial(k)));
  }
  return out;
}

// ---- sums of poly(t) * exp(rate t)

struct ETerm {
  Expr rate;
  std::vector<Expr> c;  // c[k] * t^k
};

struct EPoly {
  std::vector<ETerm> terms;

  void add(const Expr& rate, std::size_t k, const Expr& v) {
    if (v.is_zero()) return;
    auto it = std::find_if(terms.begin(), terms.end(), [&](const ETerm& e) { return e.rate == rate; });
    if (it == terms.end()) {
      terms.push_back(ETerm{rate, {}});
      it = std::prev(terms.end());
    }
    if (it->c.size() <= k) it->c.resize(k + 1);
    it->c[k] += v;
  }
  void add_scaled(const EPoly& o, const Expr& s) {
    if (s.is_zero()) return;
    for (const ETerm& e : o.terms)
      for (std::size_t k = 0; k < e.c.size(); ++k) add(e.rate, k, e.c[k] * s);
  }
  Expr to_expr(const Expr& t) const {
    Expr out;
    for (const ETerm& e : terms) {
      Expr p;
      for (std::size_t k = 0; k < e.c.size(); ++k)
        if (!e.c[k].is_zero()) p += e.c[k] * pow(t, static_cast<long>(k));
      if (!p.is_zero()) out += p * exp(e.rate * t);
    }
    return out;
  }
};

// e^{m t} * integral_0^t e^{-m s} f(s) ds
EPoly integrate_shifted(const EPoly& f, const Expr& m, std::vector<Expr>& assumptions) {
  EPoly out;
  for (const ETerm& e : f.terms) {
    Expr gamma = e.rate - m;
    for (std::size_t k = 0; k < e.c.size(); ++k) {
      const Expr& c = e.c[k];
      if (c.is_zero()) continue;
      if (gamma.is_zero()) {
        out.add(m, k + 1, c / Expr(static_cast<long>(k + 1)));
        continue;
      }
      if (!gamma.is_constant()) assumptions.push_back(gamma);
      // int_0^t s^k e^{gs} ds = e^{gt} sum_j (-1)^j k!/(k-j)! t^{k-j} / g^{j+1} - (-1)^k k! / g^{k+1}
      Rational kf = factorial(static_cast<long>(k));
      for (std::size_t j = 0; j <= k; ++j) {
        Rational coef = kf / factorial(static_cast<long>(k - j));
        if (j % 2) coef = -coef;
        out.add(e.rate, k - j, c * Expr(coef) / pow(gamma, static_cast<long>(j + 1)));
      }
      Rational last = k % 2 ? kf : -kf;
      out.add(m, 0, c * Expr(last) / pow(gamma, static_cast<long>(k + 1)));
    }
  }
  return out;
}

bool upper_triangular(const MatE& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

MatE exp_upper(const MatE& m, const Expr& t, std::vector<Expr>& assumptions) {
  std::size_t n = m.rows();
  std::vector<std::vector<EPoly>> E(n, std::vector<EPoly>(n));
  for (std::size_t i = 0; i < n; ++i) E[i][i].add(m(i, i), 0, Expr(1));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t ii = j; ii-- > 0;) {
      EPoly f;
      for (std::size_t k = ii + 1; k <= j; ++k)
        if (!m(ii, k).is_zero()) f.add_scaled(E[k][j], m(ii, k));
      if (!f.terms.empty()) E[ii][j] = integrate_shifted(f, m(ii, ii), assumptions);
    }
  MatE out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) out(i, j) = E[i][j].to_expr(t);
  return out;
}

// D + N with D built from scalar and rotation 2x2 blocks on the diagonal, N nilpotent, [D, N] = 0
std::optional<MatE> exp_split(const MatE& m, const Expr& t) {
  std::size_t n = m.rows();
  MatE D(n, n), ED(n, n);
  for (std::size_t i = 0; i < n;) {
    if (i + 1 < n && m(i, i) == m(i + 1, i + 1) && !m(i, i + 1).is_zero() && m(i, i + 1) == -m(i + 1, i)) {
      const Expr &mu = m(i, i), &w = m(i, i + 1);
      D(i, i) = D(i + 1, i + 1) = mu;
      D(i, i + 1) = w;
      D(i + 1, i) = -w;
      Expr e = exp(mu * t), c = cos(w * t), s = sin(w * t);
      ED(i, i) = ED(i + 1, i + 1) = e * c;
      ED(i, i + 1) = e * s;
      ED(i + 1, i) = -(e * s);
      i += 2;
    } else {
      D(i, i) = m(i, i);
      ED(i, i) = exp(m(i, i) * t);
      ++i;
    }
  }
  MatE N = m - D;
  auto idx = nilpotency_index(N);
  if (!idx) return std::nullopt;
  if (!(D * N - N * D).is_zero()) return std::nullopt;
  return ED * exp_nilpotent_known(N, t, *idx);
}

// ---- exact Jordan-Chevalley for rational matrices with rational spectrum

std::vector<Rational> char_poly(const MatQ& a) {
  // Faddeev-LeVerrier; c[k] is the coefficient of t^k
  std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = Rational(1);
  MatQ mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    MatQ next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = next;
    MatQ am = a * mk;
    Rational tr;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return c;
}

std::vector<mpz_class> divisors(mpz_class v) {
  if (v < 0) v = -v;
  if (v > mpz_class(1000000000000L)) throw NeedsRecipe("exp: characteristic polynomial coefficients too large for the rational root search");
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= v; ++d)
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  return out;
}

// divide by (t - r); returns the quotient when the remainder vanishes
std::optional<std::vector<Rational>> deflate(const std::vector<Rational>& p, const Rational& r) {
  std::size_t n = p.size() - 1;
  std::vector<Rational> q(n);
  Rational acc;
  for (std::size_t k = n + 1; k-- > 0;) {
    acc = acc * r + p[k];
    if (k > 0) q[k - 1] = acc;
  }
  if (!acc.is_zero()) return std::nullopt;
  return q;
}

std::vector<std::pair<Rational, int>> rational_roots(std::vector<Rational> p) {
  std::vector<std::pair<Rational, int>> roots;
  auto push = [&roots](const Rational& r) {
    for (auto& [v, m] : roots)
      if (v == r) {
        ++m;
        return;
      }
    roots.emplace_back(r, 1);
  };
  while (p.size() > 1 && p[0].is_zero()) {
    p.erase(p.begin());
    push(Rational(0));
  }
  for (bool progress = true; progress && p.size() > 1;) {
    progress = false;
    mpz_class l = 1;
    for (const Rational& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    mpz_class a0 = (p.front() * Rational(l)).num(), an = (p.back() * Rational(l)).num();
    for (const mpz_class& num : divisors(a0)) {
      for (const mpz_class& den : divisors(an)) {
        for (int s : {1, -1}) {
          Rational r(mpz_class(s * num), den);
          if (auto q = deflate(p, r)) {
            p = *q;
            push(r);
            progress = true;
            break;
          }
        }
        if (progress) break;
      }
      if (progress) break;
    }
  }
  if (p.size() > 1) throw NeedsRecipe("exp: eigenvalues are not all rational");
  return roots;
}

MatE exp_jordan(const MatQ& a, const Expr& t) {
  std::size_t n = a.rows();
  auto roots = rational_roots(char_poly(a));
  // basis of generalized eigenvectors, eigenvalue by eigenvalue
  MatQ P(n, n);
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  std::size_t col = 0;
  for (const auto& [lam, mult] : roots) {
    MatQ shifted = a;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lam;
    MatQ pw = MatQ::identity(n);
    for (int k = 0; k < mult; ++k) pw = pw * shifted;
    auto ns = nullspace(pw);
    if (static_cast<int>(ns.size()) != mult) throw Error("exp: generalized eigenspace has the wrong dimension");
    ranges.emplace_back(col, col + ns.size());
    for (const auto& v : ns) {
      for (std::size_t i = 0; i < n; ++i) P(i, col) = v[i];
      ++col;
    }
  }
  auto Pinv = inverse(P);
  if (!Pinv) throw Error("exp: generalized eigenvectors are dependent");
  MatQ blocks = *Pinv * a * P;
  MatE inner(n, n);
  for (std::size_t b = 0; b < ranges.size(); ++b) {
    auto [lo, hi] = ranges[b];
    std::size_t k = hi - lo;
    MatE N(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        Rational v = blocks(lo + i, lo + j);
        if (i == j) v -= roots[b].first;
        N(i, j) = Expr(v);
      }
    auto idx = nilpotency_index(N);
    MatE e = exp_nilpotent_known(N, t, *idx);
    Expr scale = exp(Expr(roots[b].first) * t);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) inner(lo + i, lo + j) = e(i, j) * scale;
  }
  auto lift = [](const MatQ& q) {
    MatE m(q.rows(), q.cols());
    for (std::size_t i = 0; i < q.rows(); ++i)
      for (std::size_t j = 0; j < q.cols(); ++j) m(i, j) = Expr(q(i, j));
    return m;
  };
  return lift(P) * inner * lift(*Pinv);
}

std::vector<Expr> flatten(const MatE& m) {
  std::vector<Expr> v;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

}  // namespace

Matrix<Expr> exp_nilpotent(const Matrix<Expr>& m, const Expr& t) {
  if (m.rows() != m.cols()) throw Error("exp_nilpotent: matrix is not square");
  auto idx = nilpotency_index(m);
  if (!idx) throw Error("exp_nilpotent: matrix is not nilpotent");
  return exp_nilpotent_known(m, t, *idx);
}

ExpResult exp_matrix(const Matrix<Expr>& m, const Expr& t) {
  if (m.rows() != m.cols()) throw Error("exp: matrix is not square");
  if (auto idx = nilpotency_index(m)) return {exp_nilpotent_known(m, t, *idx), "nilpotent", {}};
  if (auto s = exp_split(m, t)) return {*s, "split", {}};
  if (upper_triangular(m)) {
    ExpResult r{{}, "triangular", {}};
    r.matrix = exp_upper(m, t, r.assumptions);
    return r;
  }
  if (upper_triangular(m.transpose())) {
    ExpResult r{{}, "triangular", {}};
    r.matrix = exp_upper(m.transpose(), t, r.assumptions).transpose();
    return r;
  }
  bool constant = true;
  MatQ q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows() && constant; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto v = m(i, j).constant_value();
      if (!v) {
        constant = false;
        break;
      }
      q(i, j) = *v;
    }
  if (constant) return {exp_jordan(q, t), "jordan", {}};
  throw NeedsRecipe("exp: needs closed-form recipe (parametric matrix with no triangular or block structure)");
}

ExpResult exp_ad(const LieAlgebra& g, int i, const Expr& t, const ExpRecipes& recipes) {
  if (auto it = recipes.find(i); it != recipes.end()) return {it->second(t), "recipe", {}};
  try {
    return exp_matrix(ad_matrix(g, i), t);
  } catch (const NeedsRecipe& e) {
    throw NeedsRecipe(std::string(e.what()) + " for generator e" + std::to_string(i + 1));
  }
}

std::vector<FactorSpec> default_ordering(const LieAlgebra& g) { return default_ordering(g, {}); }

std::vector<FactorSpec> default_ordering(const LieAlgebra& g, const std::map<int, int>& signs) {
  std::vector<std::vector<Expr>> picked;
  std::vector<int> gens;
  for (int i = g.dim() - 1; i >= 0; --i) {
    auto v = flatten(ad_matrix(g, i));
    picked.push_back(v);
    if (span(picked, static_cast<int>(v.size())).size() == picked.size())
      gens.push_back(i);
    else
      picked.pop_back();
  }
  std::sort(gens.begin(), gens.end());
  std::vector<FactorSpec> out;
  for (int i : gens) {
    auto it = signs.find(i);
    out.push_back({i, i + 1, it == signs.end() ? 1 : it->second});
  }
  return out;
}

AutoMatrix automorphism_matrix(const LieAlgebra& g, const std::vector<FactorSpec>& ordering, const FrameOptions& opts) {
  std::set<int> gens, thetas;
  std::vector<std::vector<Expr>> vecs;
  std::size_t nsq = static_cast<std::size_t>(g.dim()) * static_cast<std::size_t>(g.dim());
  for (const auto& f : ordering) {
    if (f.generator < 0 || f.generator >= g.dim()) throw Error("frame: generator index out of range");
    if (f.sign != 1 && f.sign != -1) throw Error("frame: sign must be +1 or -1");
    if (f.theta < 1) throw Error("frame: theta index must be positive");
    if (!gens.insert(f.generator).second) throw Error("frame: generator listed twice");
    if (!thetas.insert(f.theta).second) throw Error("frame: theta listed twice");
    auto v = flatten(ad_matrix(g, f.generator));
    bool central = std::all_of(v.begin(), v.end(), [](const Expr& e) { return e.is_zero(); });
    if (central) {
      if (!opts.virtual_params) throw Error("frame: central generator e" + std::to_string(f.generator + 1) + " carries no parameter");
      continue;
    }
    vecs.push_back(std::move(v));
  }
  std::size_t r = static_cast<std::size_t>(g.dim()) - center(g).size();
  if (span(vecs, static_cast<int>(nsq)).size() != vecs.size() || vecs.size() != r)
    throw Error("frame: ordering must cover " + std::to_string(r) + " generators with independent adjoint matrices");
  AutoMatrix A;
  A.B = MatE::identity(static_cast<std::size_t>(g.dim()));
  A.factors = ordering;
  for (const auto& f : ordering) {
    ExpResult e = exp_ad(g, f.generator, Expr(f.sign) * th(f.theta), opts.recipes);
    A.B = A.B * e.matrix;
    A.methods.push_back(e.method);
    for (auto& a : e.assumptions) A.assumptions.push_back(std::move(a));
  }
  A.thetas.assign(thetas.begin(), thetas.end());
  A.source = std::make_shared<const LieAlgebra>(g);
  return A;
}

LiftedSet lifted_invariants(const AutoMatrix& B) {
  LiftedSet L;
  std::size_t n = B.B.rows();
  for (std::size_t k = 0; k < n; ++k) {
    Expr s;
    for (std::size_t j = 0; j < n; ++j)
      if (!B.B(j, k).is_zero()) s += x(static_cast<int>(j) + 1) * B.B(j, k);
    L.exprs.push_back(s);
  }
  L.thetas = B.thetas;
  L.assumptions = B.assumptions;
  L.source = B.source;
  return L;
}

LiftedSet lifted_invariants(const LieAlgebra& g, const std::vector<FactorSpec>& ordering, const FrameOptions& opts) {
  return lifted_invariants(automorphism_matrix(g, ordering, opts));
}

int jacobian_rank(const LiftedSet& L, std::uint64_t seed, int trials, const Specialization& spec) {
  if (trials <= 0) throw Error("jacobian_rank: trials must be positive");
  if (L.thetas.empty()) return 0;
  Substitution s;
  for (const auto& [name, v] : spec) s.vars[Symbol::param(name)] = Expr(v);
  std::vector<Expr> entries;
  for (const Expr& e : L.exprs) {
    Expr f = spec.empty() ? e : substitute(e, s);
    if (f.has_kind(SymKind::Param)) throw Error("jacobian_rank: unspecialized parameter in " + f.str());
    for (int t : L.thetas) entries.push_back(differentiate(f, Symbol::theta(t)));
  }
  PointSampler sampler(entries);
  RationalSampler rng(seed);
  std::size_t n = L.exprs.size(), r = L.thetas.size();
  int best = 0, done = 0;
  for (int attempt = 0; done < trials && attempt < 4 * trials; ++attempt) {
    Point p = sampler.next(rng);
    MatQ m(n, r);
    try {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < r; ++j) m(i, j) = evaluate(entries[i * r + j], p);
    } catch (const ResampleError&) {
      continue;
    }
    ++done;
    best = std::max(best, rank(m));
  }
  return best;
}

}  // namespace lieinv
