#pragma once

#include "lieinv/expr.hpp"
#include "lieinv/lie_algebra.hpp"
#include "lieinv/moving_frame.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lieinv {

// replacement of working slots (0-based) computed from the original lifted set
using Combination = std::function<std::vector<std::pair<int, Expr>>(const LiftedSet&)>;

struct Recipe {
  std::string name;
  Combination combination;
};

// global registry; rejects a second registration under the same name
Recipe register_recipe(const std::string& name, Combination combination);
std::optional<Recipe> find_recipe(const std::string& name);

// atan(B/A), resolving A = k*P - s*Q, B = s*P + k*Q (k, s = cos, sin of phi) to atan(Q/P) + phi
Expr rotation_atan(const Expr& A, const Expr& B);

namespace recipes {
// slots are 0-based; names spell the call with 1-based slots, e.g. rotation_pair(2,3,-2*a)
Recipe identity();
Recipe sum_of_squares(int i, int j);                  // slot i <- I_i^2 + I_j^2
Recipe arctan_ratio(int i, int j, int slot);          // slot <- atan(I_j / I_i)
Recipe exp_arctan(int i, int j, const Expr& w, int slot);  // slot <- exp(w atan(I_j / I_i))
// slot i <- I_i^2 + I_j^2, slot j <- exp(w atan(I_j / I_i)), or the bare atan when w = 0
Recipe rotation_pair(int i, int j, const Expr& w);
// (I1 I3 + I2 I4)/(I1^2 + I2^2) into slot_a and (I2 I3 - I1 I4)/(I1^2 + I2^2) into slot_b
Recipe cross_ratio(int i1, int i2, int i3, int i4, int slot_a, int slot_b);
Recipe ratio(int k, int i);  // slot k <- I_k / I_i
}  // namespace recipes

struct NormalizationStep {
  int slot = -1;
  Expr pivot;            // working expression that was normalized
  std::string unknown;   // theta_k or exp(...)
  Rational constant;     // c in pivot = c
  Expr binding;          // value of the unknown
};

struct InvariantSet {
  std::vector<Expr> exprs;
  std::vector<int> slots;  // working slot each survivor came from
  std::vector<NormalizationStep> steps;
  std::vector<Expr> assumptions;  // nonvanishing conditions
  std::vector<std::string> notes;
  bool complete = false;   // every theta eliminated
  bool verified = false;
  std::vector<int> residual_thetas;
};

struct EliminateOptions {
  std::vector<Recipe> recipes;
  std::vector<int> pivot_hints;  // slots tried first, in this order
  const LieAlgebra* algebra = nullptr;  // defaults to the lifted set's source when present
};

InvariantSet eliminate(const LiftedSet& L, const EliminateOptions& opts = {});

// multiply rational survivors by the least power product of multipliers clearing the denominator
InvariantSet rescale_to_polynomial(const InvariantSet& S, const std::vector<Expr>& multipliers);

bool functionally_equivalent(const std::vector<Expr>& A, const std::vector<Expr>& B, int dim,
                             std::uint64_t seed = 1, int trials = 6);
bool functionally_equivalent(const InvariantSet& A, const InvariantSet& B, const LieAlgebra& g,
                             std::uint64_t seed = 1, int trials = 6);

// generic rank of d(F)/dx over x_1..x_dim
int functional_rank(const std::vector<Expr>& F, int dim, std::uint64_t seed = 1, int trials = 6);

}  // namespace lieinv
