#pragma once

#include "lieinv/expr.hpp"
#include "lieinv/matrix.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lieinv {

// basis index (0-based) -> coefficient
using SparseVec = std::map<int, Expr>;
using Specialization = std::map<std::string, Rational>;

class LieAlgebra {
 public:
  explicit LieAlgebra(int dim = 0, std::string name = {});

  int dim() const { return n_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  std::string label(int i) const;  // custom label or e<i+1>
  const std::vector<std::string>& params() const { return params_; }
  void add_param(const std::string& name);

  // [e_i, e_j] = rhs, stored together with [e_j, e_i] = -rhs (0-based)
  void set_bracket(int i, int j, const SparseVec& rhs);
  // a single orientation; lets callers build tensors that violate antisymmetry
  void set_constant(int i, int j, int k, const Expr& v);
  Expr constant(int i, int j, int k) const;
  SparseVec bracket(int i, int j) const;
  SparseVec bracket(const SparseVec& u, const SparseVec& v) const;
  const std::map<std::pair<int, int>, SparseVec>& table() const { return c_; }

  LieAlgebra specialized(const Specialization& values) const;
  bool is_parametric() const;

 private:
  void check_index(int i) const;
  int n_;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::string> params_;
  std::map<std::pair<int, int>, SparseVec> c_;
};

struct Violation {
  enum class Kind { Antisymmetry, Jacobi } kind;
  int i, j, k, l;  // 0-based; for antisymmetry l is unused
  Expr residual;
  std::string describe() const;  // 1-based
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const LieAlgebra& g);

// M(k, j) = c_ij^k, so that ad_{e_i} e_j = sum_k M(k, j) e_k
Matrix<Expr> ad_matrix(const LieAlgebra& g, int i);

using Subspace = std::vector<std::vector<Expr>>;  // independent basis vectors
Subspace span(const std::vector<std::vector<Expr>>& vectors, int dim);
Subspace center(const LieAlgebra& g);

enum class SeriesKind { Derived, LowerCentral };
// starts with the whole algebra and stops once a term repeats
std::vector<Subspace> series(const LieAlgebra& g, SeriesKind kind);
bool is_nilpotent(const LieAlgebra& g);
bool is_solvable(const LieAlgebra& g);

struct CoadjointField {
  int index;
  std::vector<Expr> coefficients;  // entry j = sum_k c_ij^k x_k
  Expr apply(const Expr& f) const;
};
std::vector<CoadjointField> coadjoint_fields(const LieAlgebra& g);

struct RankResult {
  int rank = 0;
  std::vector<Rational> witness;
};
RankResult rank_coadjoint(const LieAlgebra& g, std::uint64_t seed = 1, int trials = 8,
                          const Specialization& spec = {});
int num_invariants(const LieAlgebra& g, std::uint64_t seed = 1, int trials = 8, const Specialization& spec = {});

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

}  // namespace lieinv
