#pragma once

#include "lieinv/expr.hpp"

#include <map>
#include <set>
#include <string>
#include <string_view>

namespace lieinv {

struct ParseContext {
  std::map<std::string, Symbol> names;  // extra identifiers, e.g. basis labels
  std::set<std::string> params;         // declared parameters
  bool strict_params = false;           // reject undeclared identifiers
  int dim = 0;                          // when > 0, coordinate indices must be <= dim
  std::size_t line = 1;                 // reported in errors
  std::size_t column = 1;
};

// x3, e3, theta2, _z1, declared parameters, integers, + - * / ^, parentheses,
// exp log ln atan arctan cos sin
Expr parse_expr(std::string_view text, const ParseContext& ctx = {});

}  // namespace lieinv
