#include "doctest.h"

#include "lieinv/error.hpp"
#include "lieinv/verifier.hpp"
#include "support.hpp"

#include <random>

using namespace lieinv;
using namespace lieinv::testing;

namespace {

// t0_local(4) enumerates e12, e13, e14, e23, e24, e34; the dual coordinates x_ij follow that order
Expr t0_minor() {
  // x13*x24 - x14*x23 (2x2 corner minor of the transposed coordinate matrix)
  return x(2) * x(5) - x(3) * x(4);
}

NCSum word(std::initializer_list<int> w, const Expr& c = Expr(1)) { return NCSum{{Word(w), c}}; }

}  // namespace

TEST_CASE("check invariant") {
  CHECK(check_invariant(t0_local(4), t0_minor()).ok);
  CHECK(check_invariant(t0_local(4), x(3)).ok);
  auto r = check_invariant(jordan(4, Expr(0)), x(2));
  CHECK_FALSE(r.ok);
  // only the field of e4 moves x2: X_4 = -x1 d/dx2 - ...
  CHECK(r.residuals[3] == -x(1));
  for (int i = 0; i < 3; ++i) CHECK(r.residuals[static_cast<std::size_t>(i)].is_zero());
  Expr a = Expr::param("a");
  CHECK(check_invariant(g638_local(), x(1) * exp(Expr(-2) * a * atan(x(3) / x(2)))).ok);
  CHECK(check_invariant(g638_local(), (x(2) * x(2) + x(3) * x(3)) / x(1)).ok);
  CHECK_FALSE(check_invariant(g638_local(), x(1)).ok);
  CHECK(check_invariant(g638_local().specialized({{"a", Rational(0)}}), x(1)).ok);
  CHECK_THROWS(check_invariant(heisenberg(), th(1) * x(3)));
  CHECK_THROWS(check_invariant(heisenberg(), x(4)));
}

TEST_CASE("invariants form an algebra") {
  // derivation property on products and sums of verified invariants
  std::vector<std::pair<LieAlgebra, std::vector<Expr>>> pools{
      {t0_local(4), {x(3), t0_minor()}},
      {g638_local(), {(x(2) * x(2) + x(3) * x(3)) / x(1), x(1) * exp(Expr(-2) * Expr::param("a") * atan(x(3) / x(2)))}},
      {jordan(5, Expr(0)), {x(1), x(1) * x(3) - x(2) * x(2) / Expr(2)}}};
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> c(-3, 3);
  int checked = 0;
  for (int t = 0; t < 50; ++t) {
    const auto& [g, inv] = pools[static_cast<std::size_t>(t) % pools.size()];
    Expr F = inv[rng() % inv.size()] * Expr(c(rng) == 0 ? 1 : c(rng));
    Expr G = inv[rng() % inv.size()] + Expr(c(rng));
    CHECK(check_invariant(g, F * G).ok);
    CHECK(check_invariant(g, F + G).ok);
    ++checked;
  }
  CHECK(checked == 50);
}

TEST_CASE("symmetrization") {
  LieAlgebra g = nonabelian2();
  NCSum s = symmetrize(x(1) * x(2), g);
  CHECK(s.size() == 2);
  CHECK(s.at({0, 1}) == Expr(1, 2));
  CHECK(s.at({1, 0}) == Expr(1, 2));
  NCSum m = symmetrize(t0_minor(), t0_local(4));
  CHECK(m.size() == 2);
  CHECK(m.at({1, 4}) == Expr(1));
  CHECK(m.at({2, 3}) == Expr(-1));
  NCSum j = symmetrize(x(1) * x(1) * x(3), jordan(4, Expr(0)));
  CHECK(j.size() == 1);
  CHECK(j.at({0, 0, 2}) == Expr(1));
  // x1^2 x2 in the 2-dim algebra: three arrangements, each 1/3
  NCSum k = symmetrize(x(1) * x(1) * x(2), g);
  CHECK(k.size() == 3);
  CHECK(k.at({0, 1, 0}) == Expr(1, 3));
  CHECK_THROWS(symmetrize(x(1) / x(2), g));
  CHECK_THROWS_AS(symmetrize(pow(x(1) * x(2), 4), g), DegreeBoundExceeded);
}

TEST_CASE("pbw normal form") {
  LieAlgebra g = nonabelian2();
  PBWElement p = pbw_normal_form(word({1, 0}), g);
  CHECK(p.terms().size() == 2);
  CHECK(p.terms().at({0, 1}) == Expr(1));
  CHECK(p.terms().at({0}) == Expr(-1));
  CHECK(pbw_normal_form(word({0, 1, 1}), g).terms().size() == 1);
  PBWElement h = pbw_normal_form(symmetrize(x(1) * x(2), g), g);
  CHECK(h.terms().at({0, 1}) == Expr(1));
  CHECK(h.terms().at({0}) == Expr(-1, 2));
  // idempotent and linear
  NCSum u = word({1, 1, 0});
  u[{1, 0, 0}] = Expr(3);
  PBWElement nf = pbw_normal_form(u, g);
  CHECK(pbw_normal_form(nf.terms(), g) == nf);
  NCSum u2 = u;
  for (auto& [w, c] : u2) c = c * Expr(2);
  PBWElement nf2 = pbw_normal_form(u2, g);
  for (const auto& [w, c] : nf.terms()) CHECK(nf2.terms().at(w) == c * Expr(2));
  CHECK_THROWS_AS(pbw_normal_form(word({1, 0, 1, 0, 1, 0, 1}), g), DegreeBoundExceeded);
}

TEST_CASE("centrality") {
  CHECK(is_central(pbw_normal_form(word({2}), heisenberg()), heisenberg()));
  CHECK_FALSE(is_central(pbw_normal_form(word({0}), nonabelian2()), nonabelian2()));
  LieAlgebra t4 = t0_local(4);
  CHECK(is_central(pbw_normal_form(symmetrize(t0_minor(), t4), t4), t4));
  CHECK_FALSE(is_central(pbw_normal_form(symmetrize(x(1) * x(5), t4), t4), t4));
  LieAlgebra j = jordan(5, Expr(0));
  Expr xi3 = x(1) * x(3) - x(2) * x(2) / Expr(2);
  CHECK(is_central(pbw_normal_form(symmetrize(xi3, j), j), j));
  // Sym of a polynomial invariant is central
  LieAlgebra g0 = g638_local().specialized({{"a", Rational(0)}});
  CHECK(is_central(pbw_normal_form(symmetrize(x(2) * x(2) + x(3) * x(3), g0), g0), g0));
}
