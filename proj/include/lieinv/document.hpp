#pragma once

#include "lieinv/error.hpp"
#include "lieinv/expr.hpp"
#include "lieinv/lie_algebra.hpp"
#include "lieinv/normalization.hpp"
#include "lieinv/parse.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lieinv {

struct BracketEntry {
  int i = 0, j = 0;                       // 1-based, i < j after parsing
  std::vector<std::pair<int, Expr>> rhs;  // (1-based k, coefficient), ascending k
  std::size_t line = 0;
};

// Text form, one statement per line (or separated by ';'), '#' starts a comment:
//   name <text>            note <text>
//   dim <n>                param <p> [<q> ...]        labels <l1> ... <ln>
//   [i,j] = <linear combination of basis labels>
// Optional pipeline hints:
//   sign <k> -1            pivot <slot> [...]          recipe <name>(<args>)
//   multiplier <expr>
struct AlgebraDocument {
  std::string name;
  std::vector<std::string> notes;
  int dim = 0;
  std::vector<std::string> params;
  std::vector<std::string> labels;  // empty: e1 .. en
  std::vector<BracketEntry> brackets;

  std::map<int, int> signs;         // 1-based generator -> -1
  std::vector<int> pivots;          // 1-based slots
  std::vector<std::string> recipes;
  std::vector<Expr> multipliers;

  std::string label(int k) const;  // 1-based
  ParseContext context(bool labels_as_coordinates) const;
};

class ValidationFailed : public Error {
 public:
  ValidationFailed(const std::string& msg, ValidationReport report) : Error(msg), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

AlgebraDocument parse_document(std::string_view text);
AlgebraDocument parse_document_json(std::string_view text);
// checks the Jacobi identity; violations name the lines of the brackets involved
LieAlgebra to_algebra(const AlgebraDocument& doc, bool validate_now = true);
// messages for each violation, with the source lines of the entries involved
std::vector<std::string> describe_violations(const AlgebraDocument& doc, const ValidationReport& report);
LieAlgebra parse_algebra(std::string_view text);

AlgebraDocument document_of(const LieAlgebra& g);
std::string render_document(const AlgebraDocument& doc);
std::string render_document_json(const AlgebraDocument& doc);

// recipe from its name, e.g. rotation_pair(2,3,-2*a); params resolve through ctx
Recipe parse_recipe(const std::string& text, const ParseContext& ctx = {});

}  // namespace lieinv
