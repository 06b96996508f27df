#pragma once

#include "lieinv/expr.hpp"
#include "lieinv/lie_algebra.hpp"
#include "lieinv/matrix.hpp"
#include "lieinv/moving_frame.hpp"
#include "lieinv/normalization.hpp"

#include <string>
#include <vector>

namespace lieinv {

// An algebra with its known invariant basis and the frame/normalization settings that reproduce it.
struct FamilyInstance {
  std::string name;
  LieAlgebra algebra;
  std::vector<Expr> expected;
  std::vector<FactorSpec> ordering;
  FrameOptions frame;
  std::vector<Recipe> recipes;
  std::vector<int> pivot_hints;
  std::vector<Expr> multipliers;  // for rescale_to_polynomial; empty keeps survivors as they are
  std::vector<std::string> notes;

  LiftedSet lifted() const;
  InvariantSet eliminate() const;  // eliminate + optional rescale, with this instance's settings
};

// --- algebras with a codimension-one abelian ideal, [e_k, e_n] = sum_l m_lk e_l ---

enum class Field { Complex, Real };

struct JBlock {
  bool real_pair = false;
  Expr lambda;  // eigenvalue, or mu for a real pair
  Expr nu;      // imaginary part, real pairs only
  int size = 1; // Jordan cells; a real pair occupies 2*size basis elements

  int dim() const { return real_pair ? 2 * size : size; }
  static JBlock jordan(const Expr& lambda, int size) { return {false, lambda, Expr(0), size}; }
  static JBlock pair(const Expr& mu, const Expr& nu, int size) { return {true, mu, nu, size}; }
};

struct JSpec {
  std::vector<JBlock> blocks;
  Field field = Field::Complex;
  int n() const;  // algebra dimension: 1 + sum of block dims
  std::string str() const;
};

void validate_spec(const JSpec& spec);  // throws InvalidArgument
LieAlgebra j_algebra(const JSpec& spec);
FamilyInstance make_J(const JSpec& spec);
bool polynomial_basis_predicate(const JSpec& spec);

// invariant tying block i to block j; the table of pair kinds, 0-based block indices
Expr pair_invariant(const JSpec& spec, int i, int j);
// invariants involving only the coordinates of block b
std::vector<Expr> block_invariants(const JSpec& spec, int b);

// xi_k over the zero block whose first coordinate is x_{rho+1}; xi_1 = x_{rho+1}, k >= 2
Expr xi(int k, int rho = 0);

// --- solvable extensions of the filiform ideal, n = dimension of that ideal ---

struct SParams {
  Expr alpha = Expr(1), beta = Expr(0);  // series 1
  std::vector<Expr> a;                   // series 3: a_3 .. a_{n-1}
};

FamilyInstance make_s(int series, int n, const SParams& params = {});
// b_{mi}: sum of a_{s1}...a_{si} over 3 <= s_l <= n-1 with s1 + ... + si = m + i
Expr s3_b(int m, int i, int n, const std::vector<Expr>& a);

// --- strictly upper triangular matrices ---

FamilyInstance make_t0(int n);
int t0_index(int n, int i, int j);  // 0-based basis position of e_ij, i < j (1-based indices)
// B X B^{-1} with B unipotent upper triangular (b_ij as aux symbols) and X_ji = x(e_ij)
Matrix<Expr> t0_lifted_matrix(int n);
Expr t0_minor(int n, int k);  // det X^{n-k+1..n}_{1..k}

// --- the six-dimensional algebra with a rotation block and parameter a ---

FamilyInstance make_g638(const Expr& a);
ExpRecipe g638_exp_recipe(const LieAlgebra& g);

// instances used by the CLI and the acceptance sweep
std::vector<FamilyInstance> builtin_instances();

}  // namespace lieinv
