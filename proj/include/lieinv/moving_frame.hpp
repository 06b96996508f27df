#pragma once

#include "lieinv/expr.hpp"
#include "lieinv/lie_algebra.hpp"
#include "lieinv/matrix.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace lieinv {

// throws if m is not nilpotent
Matrix<Expr> exp_nilpotent(const Matrix<Expr>& m, const Expr& t);

// closed form of exp(t * ad_{e_i}) supplied by a family
using ExpRecipe = std::function<Matrix<Expr>(const Expr& t)>;
using ExpRecipes = std::map<int, ExpRecipe>;  // keyed by 0-based generator

struct ExpResult {
  Matrix<Expr> matrix;
  std::string method;               // recipe, nilpotent, split, triangular, jordan
  std::vector<Expr> assumptions;    // expressions assumed nonzero
};

// exp(t*m) by the first strategy that applies; throws NeedsRecipe otherwise
ExpResult exp_matrix(const Matrix<Expr>& m, const Expr& t);
ExpResult exp_ad(const LieAlgebra& g, int i, const Expr& t, const ExpRecipes& recipes = {});

struct FactorSpec {
  int generator;  // 0-based
  int theta;      // 1-based
  int sign = 1;   // factor is exp(sign * theta * ad)
};

struct AutoMatrix {
  Matrix<Expr> B;
  std::vector<FactorSpec> factors;
  std::vector<int> thetas;  // ascending
  std::vector<std::string> methods;
  std::vector<Expr> assumptions;
  std::shared_ptr<const LieAlgebra> source;
};

// r = n - dim Z generators, picked greedily from the top down, listed ascending with theta_k on e_k
std::vector<FactorSpec> default_ordering(const LieAlgebra& g);
// sign overrides keyed by 0-based generator
std::vector<FactorSpec> default_ordering(const LieAlgebra& g, const std::map<int, int>& signs);

struct FrameOptions {
  ExpRecipes recipes;
  bool virtual_params = false;  // allow central generators to carry a theta
};

AutoMatrix automorphism_matrix(const LieAlgebra& g, const std::vector<FactorSpec>& ordering,
                               const FrameOptions& opts = {});

struct LiftedSet {
  std::vector<Expr> exprs;  // I_k = sum_j x_j B(j, k)
  std::vector<int> thetas;
  std::vector<Expr> assumptions;
  std::shared_ptr<const LieAlgebra> source;
  int dim() const { return static_cast<int>(exprs.size()); }
};

LiftedSet lifted_invariants(const AutoMatrix& B);
LiftedSet lifted_invariants(const LieAlgebra& g, const std::vector<FactorSpec>& ordering,
                            const FrameOptions& opts = {});

// generic rank of dI/dtheta; parameters must be specialized through spec
int jacobian_rank(const LiftedSet& L, std::uint64_t seed = 1, int trials = 8, const Specialization& spec = {});

}  // namespace lieinv
