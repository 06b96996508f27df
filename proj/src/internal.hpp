#pragma once

#include "lieinv/expr.hpp"

namespace lieinv::detail {

const Interned* intern_param(std::string_view name);
// generator node for head k and canonical argument; cos/sin get their partner interned too
const Interned* intern_generator(SymKind k, const Expr& arg);
// exp(u)*exp(v); null when the sum vanishes
const Interned* exp_product(const Interned* a, const Interned* b);
const Interned* exp_power(const Interned* a, long k);

Expr from_poly(const Poly& p);
// ordered generator heads
const char* head_name(SymKind k);

}  // namespace lieinv::detail
