#pragma once

#include "lieinv/expr.hpp"
#include "lieinv/lie_algebra.hpp"

#include <map>
#include <string>
#include <vector>

namespace lieinv {

struct InvariantCheck {
  bool ok = false;
  std::vector<Expr> residuals;  // X_i F for every basis element
};

// exact test of X_i F = 0; throws if F depends on theta
InvariantCheck check_invariant(const LieAlgebra& g, const Expr& F);

using Word = std::vector<int>;  // 0-based basis indices, left to right
using NCSum = std::map<Word, Expr>;

constexpr int kDefaultDegreeBound = 6;

// combination of non-decreasing words
class PBWElement {
 public:
  PBWElement() = default;
  const NCSum& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  std::string str(const LieAlgebra* g = nullptr) const;
  friend bool operator==(const PBWElement& a, const PBWElement& b);

 private:
  friend PBWElement pbw_normal_form(const NCSum&, const LieAlgebra&, int);
  NCSum terms_;
};

// polynomial F in x; monomials with pairwise commuting factors map to a single ordered word
NCSum symmetrize(const Expr& F, const LieAlgebra& g, int degree_bound = kDefaultDegreeBound);
PBWElement pbw_normal_form(const NCSum& u, const LieAlgebra& g, int degree_bound = kDefaultDegreeBound);
bool is_central(const PBWElement& u, const LieAlgebra& g, int degree_bound = kDefaultDegreeBound);

std::string word_str(const Word& w, const LieAlgebra* g = nullptr);

}  // namespace lieinv
