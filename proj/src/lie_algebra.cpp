#include "lieinv/lie_algebra.hpp"

#include "lieinv/error.hpp"

#include <algorithm>
#include <set>

namespace lieinv {

LieAlgebra::LieAlgebra(int dim, std::string name) : n_(dim), name_(std::move(name)) {
  if (dim < 0) throw Error("negative dimension");
}

void LieAlgebra::check_index(int i) const {
  if (i < 0 || i >= n_) throw Error("basis index " + std::to_string(i + 1) + " out of range 1.." + std::to_string(n_));
}

void LieAlgebra::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_) throw Error("label count does not match dimension");
  labels_ = std::move(labels);
}

std::string LieAlgebra::label(int i) const {
  check_index(i);
  return labels_.empty() ? "e" + std::to_string(i + 1) : labels_[static_cast<std::size_t>(i)];
}

void LieAlgebra::add_param(const std::string& name) {
  if (std::find(params_.begin(), params_.end(), name) == params_.end()) params_.push_back(name);
}

void LieAlgebra::set_bracket(int i, int j, const SparseVec& rhs) {
  check_index(i);
  check_index(j);
  if (i == j) throw Error("bracket of a basis element with itself is zero");
  SparseVec pos, neg;
  for (const auto& [k, v] : rhs) {
    check_index(k);
    if (v.is_zero()) continue;
    pos[k] = v;
    neg[k] = -v;
  }
  if (pos.empty()) {
    c_.erase({i, j});
    c_.erase({j, i});
  } else {
    c_[{i, j}] = pos;
    c_[{j, i}] = neg;
  }
}

void LieAlgebra::set_constant(int i, int j, int k, const Expr& v) {
  check_index(i);
  check_index(j);
  check_index(k);
  auto& row = c_[{i, j}];
  if (v.is_zero()) row.erase(k);
  else row[k] = v;
  if (row.empty()) c_.erase({i, j});
}

Expr LieAlgebra::constant(int i, int j, int k) const {
  auto it = c_.find({i, j});
  if (it == c_.end()) return Expr();
  auto jt = it->second.find(k);
  return jt == it->second.end() ? Expr() : jt->second;
}

SparseVec LieAlgebra::bracket(int i, int j) const {
  auto it = c_.find({i, j});
  return it == c_.end() ? SparseVec{} : it->second;
}

SparseVec LieAlgebra::bracket(const SparseVec& u, const SparseVec& v) const {
  SparseVec out;
  for (const auto& [i, a] : u)
    for (const auto& [j, b] : v) {
      auto it = c_.find({i, j});
      if (it == c_.end()) continue;
      Expr ab = a * b;
      for (const auto& [k, c] : it->second) out[k] += ab * c;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

LieAlgebra LieAlgebra::specialized(const Specialization& values) const {
  LieAlgebra g(n_, name_);
  g.labels_ = labels_;
  Substitution s;
  for (const auto& [name, v] : values) s.vars[Symbol::param(name)] = Expr(v);
  for (const auto& p : params_)
    if (!values.count(p)) g.add_param(p);
  for (const auto& [ij, row] : c_)
    for (const auto& [k, v] : row) g.set_constant(ij.first, ij.second, k, substitute(v, s));
  return g;
}

bool LieAlgebra::is_parametric() const {
  for (const auto& [ij, row] : c_)
    for (const auto& [k, v] : row)
      if (!v.is_constant()) return true;
  return false;
}

std::string Violation::describe() const {
  if (kind == Kind::Antisymmetry)
    return "antisymmetry: c(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ";" + std::to_string(k + 1) +
           ") + c(" + std::to_string(j + 1) + "," + std::to_string(i + 1) + ";" + std::to_string(k + 1) +
           ") = " + residual.str();
  return "jacobi: (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) +
         ") component " + std::to_string(l + 1) + " = " + residual.str();
}

ValidationReport validate(const LieAlgebra& g) {
  ValidationReport rep;
  int n = g.dim();
  for (const auto& [ij, row] : g.table()) {
    auto [i, j] = ij;
    if (i == j) {
      for (const auto& [k, v] : row) rep.violations.push_back({Violation::Kind::Antisymmetry, i, j, k, 0, v + v});
      continue;
    }
    if (i > j && g.table().count({j, i})) continue;  // reported from the other side
    std::set<int> ks;
    for (const auto& kv : row) ks.insert(kv.first);
    for (const auto& kv : g.bracket(j, i)) ks.insert(kv.first);
    int a = std::min(i, j), b = std::max(i, j);
    for (int k : ks) {
      Expr r = g.constant(a, b, k) + g.constant(b, a, k);
      if (!r.is_zero()) rep.violations.push_back({Violation::Kind::Antisymmetry, a, b, k, 0, r});
    }
  }
  // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] with the stored orientations
  auto term = [&](int a, int b, int c, SparseVec& acc) {
    for (const auto& [m, v] : g.bracket(a, b)) {
      for (const auto& [l, w] : g.bracket(m, c)) acc[l] += v * w;
    }
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        SparseVec acc;
        term(i, j, k, acc);
        term(j, k, i, acc);
        term(k, i, j, acc);
        for (const auto& [l, v] : acc)
          if (!v.is_zero()) rep.violations.push_back({Violation::Kind::Jacobi, i, j, k, l, v});
      }
  return rep;
}

Matrix<Expr> ad_matrix(const LieAlgebra& g, int i) {
  if (i < 0 || i >= g.dim()) throw Error("ad_matrix: index out of range");
  Matrix<Expr> m(static_cast<std::size_t>(g.dim()), static_cast<std::size_t>(g.dim()));
  for (int j = 0; j < g.dim(); ++j)
    for (const auto& [k, v] : g.bracket(i, j)) m(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) = v;
  return m;
}

Subspace span(const std::vector<std::vector<Expr>>& vectors, int dim) {
  Matrix<Expr> m(vectors.size(), static_cast<std::size_t>(dim));
  for (std::size_t r = 0; r < vectors.size(); ++r)
    for (int c = 0; c < dim; ++c) m(r, static_cast<std::size_t>(c)) = vectors[r][static_cast<std::size_t>(c)];
  auto piv = row_reduce(m);
  Subspace out;
  for (std::size_t r = 0; r < piv.size(); ++r) {
    std::vector<Expr> v(static_cast<std::size_t>(dim));
    for (int c = 0; c < dim; ++c) v[static_cast<std::size_t>(c)] = m(r, static_cast<std::size_t>(c));
    out.push_back(std::move(v));
  }
  return out;
}

Subspace center(const LieAlgebra& g) {
  // v central iff sum_i v_i c_ij^k = 0 for all j, k
  std::size_t n = static_cast<std::size_t>(g.dim());
  Matrix<Expr> m(n * n, n);
  for (const auto& [ij, row] : g.table())
    for (const auto& [k, v] : row)
      m(static_cast<std::size_t>(ij.second) * n + static_cast<std::size_t>(k), static_cast<std::size_t>(ij.first)) = v;
  return nullspace(m);
}

namespace {

SparseVec to_sparse(const std::vector<Expr>& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s[static_cast<int>(i)] = v[i];
  return s;
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  std::vector<std::vector<Expr>> vs;
  for (const auto& u : a)
    for (const auto& v : b) {
      SparseVec w = g.bracket(to_sparse(u), to_sparse(v));
      if (w.empty()) continue;
      std::vector<Expr> dense(static_cast<std::size_t>(g.dim()));
      for (const auto& [k, c] : w) dense[static_cast<std::size_t>(k)] = c;
      vs.push_back(std::move(dense));
    }
  return span(vs, g.dim());
}

}  // namespace

std::vector<Subspace> series(const LieAlgebra& g, SeriesKind kind) {
  Subspace whole;
  for (int i = 0; i < g.dim(); ++i) {
    std::vector<Expr> e(static_cast<std::size_t>(g.dim()));
    e[static_cast<std::size_t>(i)] = Expr(1);
    whole.push_back(std::move(e));
  }
  std::vector<Subspace> out{whole};
  for (;;) {
    const Subspace& last = out.back();
    if (last.empty()) break;
    Subspace next = kind == SeriesKind::Derived ? bracket_span(g, last, last) : bracket_span(g, whole, last);
    if (next.size() == last.size()) break;
    out.push_back(std::move(next));
  }
  return out;
}

bool is_nilpotent(const LieAlgebra& g) { return series(g, SeriesKind::LowerCentral).back().empty(); }
bool is_solvable(const LieAlgebra& g) { return series(g, SeriesKind::Derived).back().empty(); }

Expr CoadjointField::apply(const Expr& f) const {
  Expr out;
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    if (coefficients[j].is_zero()) continue;
    Symbol xj = Symbol::coord(static_cast<int>(j) + 1);
    if (!f.depends_on(xj)) continue;
    out += coefficients[j] * differentiate(f, xj);
  }
  return out;
}

std::vector<CoadjointField> coadjoint_fields(const LieAlgebra& g) {
  std::vector<CoadjointField> out;
  for (int i = 0; i < g.dim(); ++i) {
    CoadjointField f{i, std::vector<Expr>(static_cast<std::size_t>(g.dim()))};
    for (int j = 0; j < g.dim(); ++j)
      for (const auto& [k, v] : g.bracket(i, j)) f.coefficients[static_cast<std::size_t>(j)] += v * x(k + 1);
    out.push_back(std::move(f));
  }
  return out;
}

RankResult rank_coadjoint(const LieAlgebra& g, std::uint64_t seed, int trials, const Specialization& spec) {
  if (trials <= 0) throw Error("rank_coadjoint: trials must be positive");
  LieAlgebra h = spec.empty() ? g : g.specialized(spec);
  // constants as rationals
  std::map<std::pair<int, int>, std::vector<std::pair<int, Rational>>> c;
  for (const auto& [ij, row] : h.table())
    for (const auto& [k, v] : row) {
      auto cv = v.constant_value();
      if (!cv) throw Error("rank_coadjoint: parametric structure constant " + v.str() + " needs a specialization");
      c[ij].emplace_back(k, *cv);
    }
  std::size_t n = static_cast<std::size_t>(g.dim());
  RationalSampler sampler(seed);
  RankResult best;
  best.rank = -1;
  for (int t = 0; t < trials; ++t) {
    std::vector<Rational> pt(n);
    for (auto& v : pt) v = sampler.next();
    Matrix<Rational> m(n, n);
    for (const auto& [ij, row] : c)
      for (const auto& [k, v] : row)
        m(static_cast<std::size_t>(ij.first), static_cast<std::size_t>(ij.second)) += v * pt[static_cast<std::size_t>(k)];
    int r = rank(m);
    if (r > best.rank) {
      best.rank = r;
      best.witness = pt;
    }
  }
  return best;
}

int num_invariants(const LieAlgebra& g, std::uint64_t seed, int trials, const Specialization& spec) {
  return g.dim() - rank_coadjoint(g, seed, trials, spec).rank;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  LieAlgebra s(a.dim() + b.dim(), a.name() + "+" + b.name());
  for (const auto& p : a.params()) s.add_param(p);
  for (const auto& p : b.params()) s.add_param(p);
  for (const auto& [ij, row] : a.table())
    for (const auto& [k, v] : row) s.set_constant(ij.first, ij.second, k, v);
  int off = a.dim();
  // coordinates of the second summand shift by off
  Substitution shift;
  for (int i = 1; i <= b.dim(); ++i) shift.vars[Symbol::coord(i)] = x(i + off);
  for (const auto& [ij, row] : b.table())
    for (const auto& [k, v] : row) s.set_constant(ij.first + off, ij.second + off, k + off, v);
  if (!a.labels().empty() || !b.labels().empty()) {
    std::vector<std::string> labels;
    for (int i = 0; i < a.dim(); ++i) labels.push_back(a.label(i));
    for (int i = 0; i < b.dim(); ++i) labels.push_back(b.label(i) + "'");
    s.set_labels(labels);
  }
  return s;
}

}  // namespace lieinv
