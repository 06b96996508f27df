#pragma once

#include "lieinv/expr.hpp"
#include "lieinv/lie_algebra.hpp"

#include <initializer_list>
#include <map>

#include <random>

namespace lieinv::testing {

// random expressions over x1..x3, theta1, a; optionally with exp/cos/sin of linear arguments
inline Expr random_linear(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-3, 3), v(0, 4);
  Expr e;
  for (int i = 0; i < 2; ++i) {
    int k = v(rng);
    Expr s = k < 3 ? x(k + 1) : k == 3 ? th(1) : Expr::param("a");
    e += Expr(c(rng)) * s;
  }
  return e;
}

inline Expr random_expr(std::mt19937_64& rng, int depth, bool transcendental) {
  std::uniform_int_distribution<int> pick(0, transcendental ? 7 : 5), small(-4, 4);
  if (depth == 0) {
    int k = pick(rng) % 5;
    if (k == 0) return Expr(small(rng));
    if (k == 4) return th(1);
    return x(k);
  }
  switch (pick(rng)) {
    case 0: return random_expr(rng, depth - 1, transcendental) + random_expr(rng, depth - 1, transcendental);
    case 1: return random_expr(rng, depth - 1, transcendental) - random_expr(rng, depth - 1, transcendental);
    case 2:
    case 3: return random_expr(rng, depth - 1, transcendental) * random_expr(rng, depth - 1, transcendental);
    case 4: {
      Expr d = random_expr(rng, depth - 1, false);
      if (d.is_zero()) d = x(1);
      return random_expr(rng, depth - 1, transcendental) / d;
    }
    case 5: return random_linear(rng) + Expr(small(rng));
    case 6: return exp(random_linear(rng)) * random_expr(rng, depth - 1, false);
    default: {
      Expr u = random_linear(rng);
      if (u.is_zero()) u = th(1);
      return cos(u) * random_expr(rng, depth - 1, false) + sin(u) * sin(u);
    }
  }
}

struct Rel {
  int i, j;
  std::vector<std::pair<int, Expr>> rhs;  // 1-based
};

inline LieAlgebra algebra(int dim, std::initializer_list<Rel> rels) {
  LieAlgebra g(dim);
  for (const auto& r : rels) {
    SparseVec v;
    for (const auto& [k, c] : r.rhs) v[k - 1] += c;
    g.set_bracket(r.i - 1, r.j - 1, v);
  }
  return g;
}

inline LieAlgebra heisenberg() { return algebra(3, {{1, 2, {{3, Expr(1)}}}}); }

inline LieAlgebra nonabelian2() { return algebra(2, {{1, 2, {{1, Expr(1)}}}}); }

// [e_k, e_n] = lambda e_k + e_{k-1}
inline LieAlgebra jordan(int n, const Expr& lambda) {
  LieAlgebra g(n);
  for (int k = 1; k < n; ++k) {
    SparseVec v;
    if (!lambda.is_zero()) v[k - 1] = lambda;
    if (k > 1) v[k - 2] = Expr(1);
    g.set_bracket(k - 1, n - 1, v);
  }
  return g;
}


// upper unitriangular n x n matrices, basis E_ij (i<j), enumerated row by row
inline LieAlgebra t0_local(int n) {
  std::map<std::pair<int, int>, int> idx;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) idx[{i, j}] = static_cast<int>(idx.size());
  LieAlgebra g(static_cast<int>(idx.size()));
  for (auto [a, p] : idx)
    for (auto [b, q] : idx) {
      if (p >= q) continue;
      auto [i, j] = a;
      auto [k, l] = b;
      SparseVec v;
      if (j == k) v[idx.at({i, l})] += Expr(1);
      if (l == i) v[idx.at({k, j})] -= Expr(1);
      if (!v.empty()) g.set_bracket(p, q, v);
    }
  return g;
}

inline LieAlgebra g638_local() {
  Expr a = Expr::param("a");
  LieAlgebra g = algebra(6, {{4, 5, {{1, Expr(1)}}},
                             {1, 6, {{1, Expr(2) * a}}},
                             {2, 6, {{2, a}, {3, Expr(-1)}}},
                             {3, 6, {{2, Expr(1)}, {3, a}}},
                             {4, 6, {{2, Expr(1)}, {4, a}, {5, Expr(-1)}}},
                             {5, 6, {{3, Expr(1)}, {4, Expr(1)}, {5, a}}}});
  g.add_param("a");
  return g;
}

}  // namespace lieinv::testing
