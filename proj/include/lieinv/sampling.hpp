#pragma once

#include "lieinv/expr.hpp"
#include "lieinv/rational.hpp"

#include <set>
#include <string>
#include <vector>

namespace lieinv {

// Random rational points for expressions with transcendental generators.
// Variables get independent values. exp nodes whose argument is a rational
// combination of thetas, logs and atans are sampled as products of powers of
// one positive value per base symbol, so algebraically dependent exps stay
// consistent. cos/sin pairs land on rational points of the unit circle.
class PointSampler {
 public:
  explicit PointSampler(const std::vector<Expr>& exprs);
  // fixed values take precedence over random ones (e.g. specialized parameters)
  Point next(RationalSampler& rng, const std::map<Symbol, Rational>& fixed = {}) const;

 private:
  void scan(const Expr& e);
  std::set<Symbol> vars_;
  std::set<const Interned*> free_nodes_;  // log/atan
  std::set<const Interned*> trig_;        // cos nodes (sin is the partner)
  std::set<const Interned*> exps_;
  std::set<std::string> bases_;
  mpz_class lcm_ = 1;
};

}  // namespace lieinv
