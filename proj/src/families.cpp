#include "lieinv/families.hpp"

#include "lieinv/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace lieinv {

namespace {

Expr sq(const Expr& e) { return e * e; }

Expr factorial(int k) {
  Rational f(1);
  for (int i = 2; i <= k; ++i) f *= Rational(i);
  return Expr(f);
}

void declare_params(LieAlgebra& g, const std::vector<Expr>& exprs) {
  std::set<std::string> seen(g.params().begin(), g.params().end());
  for (const auto& e : exprs)
    for (const auto& v : e.variables())
      if (v.kind() == SymKind::Param && seen.insert(v.name()).second) g.add_param(v.name());
}

bool is_zero_const(const Expr& e) { return e.is_zero(); }

std::vector<int> block_offsets(const JSpec& spec) {
  std::vector<int> rho;
  int r = 0;
  for (const auto& b : spec.blocks) {
    rho.push_back(r);
    r += b.dim();
  }
  return rho;
}

// (x_{r+1} x_{r+3} + x_{r+2} x_{r+4}) / (x_{r+1}^2 + x_{r+2}^2)
Expr cross(int r) { return (x(r + 1) * x(r + 3) + x(r + 2) * x(r + 4)) / (sq(x(r + 1)) + sq(x(r + 2))); }
Expr angle(int r) { return atan(x(r + 2) / x(r + 1)); }
Expr shift_ratio(int r) { return x(r + 2) / x(r + 1); }

enum class Kind { Zero, Scale1, Scale, Rot1, Rot };

Kind kind_of(const JBlock& b) {
  if (b.real_pair) return b.size == 1 ? Kind::Rot1 : Kind::Rot;
  if (b.lambda.is_zero()) return Kind::Zero;
  return b.size == 1 ? Kind::Scale1 : Kind::Scale;
}

bool is_rot(Kind k) { return k == Kind::Rot1 || k == Kind::Rot; }

}  // namespace

LiftedSet FamilyInstance::lifted() const { return lifted_invariants(algebra, ordering, frame); }

InvariantSet FamilyInstance::eliminate() const {
  EliminateOptions opts;
  opts.recipes = recipes;
  opts.pivot_hints = pivot_hints;
  opts.algebra = &algebra;
  InvariantSet S = lieinv::eliminate(lifted(), opts);
  if (!multipliers.empty()) S = rescale_to_polynomial(S, multipliers);
  return S;
}

Expr xi(int k, int rho) {
  if (k < 1) throw Error("xi: index must be positive");
  if (k == 1) return x(rho + 1);
  Expr s;
  for (int j = 1; j <= k; ++j) {
    Expr t = Expr((k - j) % 2 ? -1 : 1) / factorial(k - j) * pow(x(rho + 2), k - j) * x(rho + j);
    s += j >= 2 ? t * pow(x(rho + 1), j - 2) : t / x(rho + 1);
  }
  return s;
}

// ---------------------------------------------------------------- J family

int JSpec::n() const {
  int s = 1;
  for (const auto& b : blocks) s += b.dim();
  return s;
}

std::string JSpec::str() const {
  std::ostringstream os;
  os << "J[";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    if (i) os << ";";
    if (b.real_pair)
      os << "(" << b.lambda.str() << "," << b.nu.str() << ")^" << b.size;
    else
      os << b.lambda.str() << "^" << b.size;
  }
  os << "]" << (field == Field::Real ? "R" : "");
  return os.str();
}

void validate_spec(const JSpec& spec) {
  if (spec.blocks.empty()) throw Error("J spec: no blocks");
  for (const auto& b : spec.blocks) {
    if (b.size < 1) throw Error("J spec: block size must be positive");
    if (b.real_pair) {
      if (spec.field != Field::Real) throw Error("J spec: real pair blocks need the real field");
      if (b.nu.is_zero()) throw Error("J spec: real pair needs nu != 0");
      if (b.nu.has_kind(SymKind::Coord) || b.lambda.has_kind(SymKind::Coord)) throw Error("J spec: bad eigenvalue");
    } else {
      if (b.lambda.is_zero() && b.size == 1) throw Error("J spec: block (0,1) makes the algebra decomposable");
      if (b.lambda.has_kind(SymKind::Coord)) throw Error("J spec: bad eigenvalue");
    }
  }
}

LieAlgebra j_algebra(const JSpec& spec) {
  validate_spec(spec);
  const int n = spec.n();
  LieAlgebra g(n);
  auto rho = block_offsets(spec);
  std::vector<Expr> used;
  for (std::size_t b = 0; b < spec.blocks.size(); ++b) {
    const auto& B = spec.blocks[b];
    const int r = rho[b];
    used.push_back(B.lambda);
    used.push_back(B.nu);
    if (!B.real_pair) {
      for (int q = 1; q <= B.size; ++q) {
        SparseVec v;
        if (!is_zero_const(B.lambda)) v[r + q - 1] += B.lambda;
        if (q > 1) v[r + q - 2] += Expr(1);
        if (!v.empty()) g.set_bracket(r + q - 1, n - 1, v);
      }
    } else {
      for (int k = 1; k <= B.size; ++k) {
        int o = r + 2 * k - 2;  // 0-based index of e_{rho+2k-1}
        SparseVec a, c;
        a[o] += B.lambda;
        a[o + 1] -= B.nu;
        c[o] += B.nu;
        c[o + 1] += B.lambda;
        if (k > 1) {
          a[o - 2] += Expr(1);
          c[o - 1] += Expr(1);
        }
        for (auto* s : {&a, &c})
          for (auto it = s->begin(); it != s->end();) it = it->second.is_zero() ? s->erase(it) : std::next(it);
        g.set_bracket(o, n - 1, a);
        g.set_bracket(o + 1, n - 1, c);
      }
    }
  }
  declare_params(g, used);
  g.set_name(spec.str());
  return g;
}

std::vector<Expr> block_invariants(const JSpec& spec, int b) {
  auto rho = block_offsets(spec);
  const auto& B = spec.blocks.at(static_cast<std::size_t>(b));
  const int r = rho[static_cast<std::size_t>(b)];
  std::vector<Expr> out;
  switch (kind_of(B)) {
    case Kind::Zero:
      out.push_back(x(r + 1));
      for (int k = 3; k <= B.size; ++k) out.push_back(xi(k, r));
      break;
    case Kind::Scale1: break;
    case Kind::Scale:
      out.push_back(x(r + 1) * exp(-B.lambda * shift_ratio(r)));
      for (int k = 3; k <= B.size; ++k) out.push_back(xi(k, r) / pow(x(r + 1), k - 1));
      break;
    case Kind::Rot1:
    case Kind::Rot: {
      Expr rr = sq(x(r + 1)) + sq(x(r + 2));
      out.push_back(rr * exp(Expr(-2) * B.lambda / B.nu * angle(r)));
      if (B.size >= 2) {
        out.push_back(B.nu * cross(r) - angle(r));
        out.push_back((x(r + 1) * x(r + 4) - x(r + 2) * x(r + 3)) / rr);
      }
      for (int k = 3; k <= B.size; ++k) {
        Expr odd, even, c = -cross(r);
        for (int j = 1; j <= k; ++j) {
          Expr w = pow(c, k - j) / factorial(k - j);
          odd += w * x(r + 2 * j - 1);
          even += w * x(r + 2 * j);
        }
        out.push_back((x(r + 1) * odd + x(r + 2) * even) / rr);
        out.push_back((x(r + 2) * odd - x(r + 1) * even) / rr);
      }
      break;
    }
  }
  return out;
}

Expr pair_invariant(const JSpec& spec, int i, int j) {
  auto rho = block_offsets(spec);
  const auto& Bi = spec.blocks.at(static_cast<std::size_t>(i));
  const auto& Bj = spec.blocks.at(static_cast<std::size_t>(j));
  Kind ki = kind_of(Bi), kj = kind_of(Bj);
  const int ri = rho[static_cast<std::size_t>(i)], rj = rho[static_cast<std::size_t>(j)];
  // put the Jordan block first, and among Jordan blocks the nonzero eigenvalue first
  auto rank = [](Kind k) { return k == Kind::Scale1 ? 0 : k == Kind::Scale ? 1 : k == Kind::Zero ? 2 : 3; };
  if (rank(kj) < rank(ki)) return pair_invariant(spec, j, i);

  if (!is_rot(ki) && !is_rot(kj)) {
    bool zi = ki == Kind::Zero, zj = kj == Kind::Zero;
    if (!zi && !zj) return power(x(ri + 1), -Bj.lambda) * power(x(rj + 1), Bi.lambda);
    if (zi && zj) return x(rj + 2) * x(ri + 1) - x(ri + 2) * x(rj + 1);
    // ki nonzero, kj zero
    if (ki == Kind::Scale) return shift_ratio(rj) - shift_ratio(ri);
    return x(ri + 1) * exp(-Bi.lambda * shift_ratio(rj));
  }
  if (!is_rot(ki)) {
    if (ki != Kind::Scale1 && kj == Kind::Rot) return cross(rj) - shift_ratio(ri);
    if (ki == Kind::Zero)  // zero block against a 2-dim rotation: both clocks are shifted by the flow
      return angle(rj) - Bj.nu * shift_ratio(ri);
    return x(ri + 1) * exp(-Bi.lambda / Bj.nu * angle(rj));
  }
  if (ki == Kind::Rot && kj == Kind::Rot) return cross(rj) - cross(ri);
  return Bi.nu * angle(rj) - Bj.nu * angle(ri);
}

bool polynomial_basis_predicate(const JSpec& spec) {
  validate_spec(spec);
  bool all_zero = true;
  for (const auto& b : spec.blocks)
    if (b.real_pair || !b.lambda.is_zero()) all_zero = false;
  if (all_zero) return true;
  const int s = static_cast<int>(spec.blocks.size());
  if (s != spec.n() - 1 || s <= 2) return false;
  const Expr& l1 = spec.blocks[0].lambda;
  for (const auto& b : spec.blocks) {
    if (b.real_pair || b.size != 1) return false;
    auto q = (b.lambda / l1).constant_value();
    if (!q || q->sign() <= 0) return false;
  }
  return true;
}

FamilyInstance make_J(const JSpec& spec) {
  FamilyInstance f;
  f.algebra = j_algebra(spec);
  f.name = spec.str();
  const int n = spec.n();
  auto rho = block_offsets(spec);
  for (std::size_t b = 0; b < spec.blocks.size(); ++b)
    for (auto& e : block_invariants(spec, static_cast<int>(b))) f.expected.push_back(e);
  for (std::size_t b = 1; b < spec.blocks.size(); ++b) f.expected.push_back(pair_invariant(spec, 0, static_cast<int>(b)));

  f.ordering = default_ordering(f.algebra, {{n - 1, -1}});
  // normalize on the first block; real blocks are first turned into modulus/angle/cross-ratio slots
  for (std::size_t b = 0; b < spec.blocks.size(); ++b) {
    const auto& B = spec.blocks[b];
    if (!B.real_pair) continue;
    int r = rho[b];
    f.recipes.push_back(recipes::rotation_pair(r, r + 1, Expr(-2) * B.lambda / B.nu));
    if (B.size >= 2) f.recipes.push_back(recipes::cross_ratio(r, r + 1, r + 2, r + 3, r + 2, r + 3));
  }
  const auto& B0 = spec.blocks[0];
  switch (kind_of(B0)) {
    case Kind::Zero:
    case Kind::Scale: f.pivot_hints = {1}; break;
    case Kind::Scale1: f.pivot_hints = {0}; break;
    case Kind::Rot: f.pivot_hints = {2}; break;
    case Kind::Rot1: f.pivot_hints = {B0.lambda.is_zero() ? 1 : 0}; break;
  }
  bool all_zero = std::all_of(spec.blocks.begin(), spec.blocks.end(),
                              [](const JBlock& b) { return !b.real_pair && b.lambda.is_zero(); });
  if (all_zero)
    for (std::size_t b = 0; b < spec.blocks.size(); ++b) f.multipliers.push_back(x(rho[b] + 1));
  return f;
}

// ---------------------------------------------------------------- s series

Expr s3_b(int m, int i, int n, const std::vector<Expr>& a) {
  // a[0] is a_3
  Expr total;
  std::vector<int> s(static_cast<std::size_t>(i), 3);
  std::function<void(int, int, Expr)> rec = [&](int pos, int sum, Expr prod) {
    if (pos == i) {
      if (sum == m + i) total += prod;
      return;
    }
    for (int v = 3; v <= n - 1 && sum + v <= m + i; ++v) {
      std::size_t idx = static_cast<std::size_t>(v - 3);
      if (idx >= a.size()) break;
      rec(pos + 1, sum + v, prod * a[idx]);
    }
  };
  rec(0, 0, Expr(1));
  return total;
}

FamilyInstance make_s(int series, int n, const SParams& params) {
  if (n < 4) throw Error("s series: n must be at least 4");
  if (series < 1 || series > 4) throw Error("s series: unknown series " + std::to_string(series));
  const int dim = series == 4 ? n + 2 : n + 1;
  LieAlgebra g(dim);
  std::vector<Expr> used;
  auto add = [&](int i, int j, SparseVec v) {
    for (auto it = v.begin(); it != v.end();) it = it->second.is_zero() ? v.erase(it) : std::next(it);
    if (!v.empty()) g.set_bracket(i - 1, j - 1, v);
  };
  // nilradical: [e_k, e_n] = e_{k-1}
  for (int k = 2; k <= n - 1; ++k) add(k, n, {{k - 2, Expr(1)}});

  FamilyInstance f;
  std::ostringstream name;
  name << "s" << series << "(n=" << n;
  Expr alpha = params.alpha, beta = params.beta;
  bool singular = false;

  if (series == 1) {
    auto ac = alpha.constant_value(), bc = beta.constant_value();
    bool ok = (ac && *ac == Rational(1)) || (ac && ac->is_zero() && bc && *bc == Rational(1));
    if (!ok) throw Error("s1: (alpha, beta) must be (1, beta) or (0, 1)");
    for (int k = 1; k <= n - 1; ++k) add(k, n + 1, {{k - 1, Expr(n - k - 1) * alpha + beta}});
    add(n, n + 1, {{n - 1, alpha}});
    used = {alpha, beta};
    singular = ac->is_one() && bc && *bc == Rational(2 - n);
    name << ", alpha=" << alpha.str() << ", beta=" << beta.str();
  } else if (series == 2) {
    for (int k = 1; k <= n - 1; ++k) add(k, n + 1, {{k - 1, Expr(n - k)}});
    // e_n + e_{n-1}: with e_{n+1} on the right the Jacobi identity fails on (e_k, e_n, e_{n+1})
    add(n, n + 1, {{n - 1, Expr(1)}, {n - 2, Expr(1)}});
    alpha = beta = Expr(1);
  } else if (series == 3) {
    if (static_cast<int>(params.a.size()) != n - 3) throw Error("s3: expected n-3 parameters a_3..a_{n-1}");
    if (std::all_of(params.a.begin(), params.a.end(), [](const Expr& e) { return e.is_zero(); }))
      throw Error("s3: some a_j must be nonzero");
    for (int k = 1; k <= n - 1; ++k) {
      SparseVec v{{k - 1, Expr(1)}};
      for (int i = 1; i <= k - 2; ++i) v[i - 1] += params.a[static_cast<std::size_t>(k - i + 1 - 3)];
      add(k, n + 1, v);
    }
    used = params.a;
    name << ", a=(";
    for (std::size_t i = 0; i < params.a.size(); ++i) name << (i ? "," : "") << params.a[i].str();
    name << ")";
  } else {
    for (int k = 1; k <= n - 1; ++k) {
      add(k, n + 1, {{k - 1, Expr(n - k - 1)}});
      add(k, n + 2, {{k - 1, Expr(1)}});
    }
    add(n, n + 1, {{n - 1, Expr(1)}});
  }
  name << ")";
  declare_params(g, used);
  g.set_name(name.str());
  f.algebra = g;
  f.name = name.str();

  std::map<int, int> signs{{n - 1, -1}, {n, -1}};
  if (series == 4) signs[n + 1] = -1;
  f.ordering = default_ordering(g, signs);

  if (series == 1 || series == 2) {
    if (singular) {
      f.expected.push_back(xi(1));
      for (int k = 4; k <= n - 1; ++k) f.expected.push_back(pow(xi(k), 2) / pow(xi(3), k - 1));
      f.pivot_hints = {1, 2};
      f.notes.push_back("singular member: normalized with I2 = 0, I3 = 1");
    } else {
      Expr q = (Expr(n - 3) * alpha + beta) / (Expr(n - 2) * alpha + beta);
      for (int k = 3; k <= n - 1; ++k) f.expected.push_back(power(xi(1), -Expr(k - 1) * q) * xi(k));
      f.pivot_hints = {0, 1};
    }
  } else if (series == 3) {
    Expr L = -log(xi(1));
    for (int k = 3; k <= n - 1; ++k) {
      Expr e = xi(k) / pow(xi(1), k - 1);
      for (int m = 2; m <= k - 1; ++m) {
        Expr inner;
        for (int i = 1; i <= m / 2; ++i) inner += s3_b(m, i, n, params.a) / factorial(i) * pow(L, i);
        // the k - m = 1 term takes the general xi sum at k = 1, which is 1, not x1
        e += k - m == 1 ? inner : xi(k - m) * inner / pow(xi(1), k - m - 1);
      }
      f.expected.push_back(e);
    }
    f.pivot_hints = {0, 1};
  } else {
    for (int k = 4; k <= n - 1; ++k) f.expected.push_back(pow(xi(k), 2) / pow(xi(3), k - 1));
    f.pivot_hints = {0, 1, 2};
  }
  return f;
}

// ---------------------------------------------------------------- t0(n)

int t0_index(int n, int i, int j) {
  if (!(1 <= i && i < j && j <= n)) throw Error("t0: index pair out of range");
  // ordered by decreasing height j - i, then by row
  int idx = 0;
  for (int h = n - 1; h > j - i; --h) idx += n - h;
  return idx + (i - 1);
}

FamilyInstance make_t0(int n) {
  if (n < 2) throw Error("t0: n must be at least 2");
  const int dim = n * (n - 1) / 2;
  LieAlgebra g(dim);
  std::vector<std::string> labels(static_cast<std::size_t>(dim));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) labels[static_cast<std::size_t>(t0_index(n, i, j))] = "e" + std::to_string(i) + std::to_string(j);
  g.set_labels(labels);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          int p = t0_index(n, i, j), q = t0_index(n, k, l);
          if (p >= q) continue;
          SparseVec v;
          if (j == k) v[t0_index(n, i, l)] += Expr(1);
          if (l == i) v[t0_index(n, k, j)] -= Expr(1);
          if (!v.empty()) g.set_bracket(p, q, v);
        }
  g.set_name("t0(" + std::to_string(n) + ")");
  FamilyInstance f;
  f.algebra = g;
  f.name = g.name();
  for (int k = 1; k <= n / 2; ++k) f.expected.push_back(t0_minor(n, k));
  f.ordering = default_ordering(g);
  return f;
}

namespace {
Matrix<Expr> t0_X(int n) {
  Matrix<Expr> X(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) X(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1)) = x(t0_index(n, i, j) + 1);
  return X;
}
}  // namespace

Expr t0_minor(int n, int k) {
  Matrix<Expr> X = t0_X(n);
  Matrix<Expr> m(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = X(static_cast<std::size_t>(n - k + r), static_cast<std::size_t>(c));
  return determinant(m);
}

Matrix<Expr> t0_lifted_matrix(int n) {
  auto N = static_cast<std::size_t>(n);
  Matrix<Expr> B = Matrix<Expr>::identity(N);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) B(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = Expr(Symbol::aux(t0_index(n, i, j) + 1));
  auto Binv = inverse(B);
  if (!Binv) throw Error("t0: unipotent matrix not invertible");
  return B * t0_X(n) * *Binv;
}

// ---------------------------------------------------------------- g6.38

ExpRecipe g638_exp_recipe(const LieAlgebra& g) {
  Matrix<Expr> M = ad_matrix(g, 5);
  // e1 scaled; (e2,e3) and (e4,e5) carry the same rotation A, coupled by a scalar c; e6 fixed
  Expr p = M(1, 1), q = M(1, 2), c = M(1, 3);
  auto fail = [] { throw NeedsRecipe("g6.38 recipe: ad(e6) does not have the expected block shape"); };
  if (!(M(2, 2) == p && M(2, 1) == -q && M(3, 3) == p && M(4, 4) == p && M(3, 4) == q && M(4, 3) == -q &&
        M(2, 4) == c && M(1, 4).is_zero() && M(2, 3).is_zero()))
    fail();
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      bool inside = (i == 0 && j == 0) || (i >= 1 && i <= 4 && j >= 1 && j <= 4 && !(i >= 3 && j <= 2));
      if (!inside && !M(i, j).is_zero()) fail();
    }
  Expr m00 = M(0, 0);
  return [=](const Expr& t) {
    Matrix<Expr> E = Matrix<Expr>::identity(6);
    E(0, 0) = exp(m00 * t);
    Expr s = exp(p * t), co = cos(q * t), si = sin(q * t);
    Expr R[2][2] = {{s * co, s * si}, {-s * si, s * co}};
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        E(1 + i, 1 + j) = R[i][j];
        E(3 + i, 3 + j) = R[i][j];
        E(1 + i, 3 + j) = c * t * R[i][j];
      }
    return E;
  };
}

FamilyInstance make_g638(const Expr& a) {
  LieAlgebra g(6);
  auto set = [&](int i, int j, SparseVec v) {
    for (auto it = v.begin(); it != v.end();) it = it->second.is_zero() ? v.erase(it) : std::next(it);
    if (!v.empty()) g.set_bracket(i - 1, j - 1, v);
  };
  set(4, 5, {{0, Expr(1)}});
  set(1, 6, {{0, Expr(2) * a}});
  set(2, 6, {{1, a}, {2, Expr(-1)}});
  set(3, 6, {{1, Expr(1)}, {2, a}});
  set(4, 6, {{1, Expr(1)}, {3, a}, {4, Expr(-1)}});
  set(5, 6, {{2, Expr(1)}, {3, Expr(1)}, {4, a}});
  declare_params(g, {a});
  g.set_name("g6.38(a=" + a.str() + ")");
  FamilyInstance f;
  f.algebra = g;
  f.name = g.name();
  f.frame.recipes[5] = g638_exp_recipe(g);
  f.ordering = default_ordering(g, {{5, -1}});
  f.recipes = {recipes::rotation_pair(1, 2, Expr(-2) * a)};
  Expr r = sq(x(2)) + sq(x(3));
  if (a.is_zero())
    f.expected = {x(1), r};
  else
    f.expected = {r / x(1), x(1) * exp(Expr(-2) * a * atan(x(3) / x(2)))};
  return f;
}

// ---------------------------------------------------------------- builtins

std::vector<FamilyInstance> builtin_instances() {
  std::vector<FamilyInstance> out;
  for (int n = 3; n <= 6; ++n) out.push_back(make_t0(n));
  for (int n = 4; n <= 7; ++n) out.push_back(make_J({{JBlock::jordan(Expr(0), n - 1)}}));
  for (int n = 4; n <= 6; ++n) out.push_back(make_J({{JBlock::jordan(Expr(1), n - 1)}}));
  out.push_back(make_J({{JBlock::pair(Expr(1), Expr(1), 2)}, Field::Real}));
  out.push_back(make_J({{JBlock::jordan(Expr(1), 1), JBlock::jordan(Expr(2), 1), JBlock::jordan(Expr(3), 1)}}));
  out.push_back(make_J({{JBlock::jordan(Expr(0), 2), JBlock::jordan(Expr(0), 3)}}));
  out.push_back(make_J({{JBlock::jordan(Expr(1), 2), JBlock::jordan(Expr(0), 2)}}));
  out.push_back(make_J({{JBlock::jordan(Expr(2), 1), JBlock::pair(Expr(1), Expr(1), 1)}, Field::Real}));
  for (int n = 5; n <= 6; ++n) {
    out.push_back(make_s(1, n, {Expr(1), Expr(1), {}}));
    out.push_back(make_s(1, n, {Expr(1), Expr(2 - n), {}}));
    out.push_back(make_s(2, n));
    std::vector<Expr> a(static_cast<std::size_t>(n - 3), Expr(0));
    a[0] = Expr(1);
    out.push_back(make_s(3, n, {Expr(1), Expr(0), a}));
    out.push_back(make_s(4, n));
  }
  out.push_back(make_g638(Expr(0)));
  out.push_back(make_g638(Expr(1)));
  out.push_back(make_g638(Expr::param("a")));
  return out;
}

}  // namespace lieinv
