#include "internal.hpp"

#include "lieinv/error.hpp"

#include <mutex>

namespace lieinv {

namespace {

// Nodes are allocated once and never freed, so raw pointers stay valid for
// the process lifetime and comparisons never need the lock.
struct Registry {
  std::mutex mu;
  std::map<std::pair<SymKind, std::string>, std::unique_ptr<Interned>> nodes;
  std::map<std::pair<const Interned*, const Interned*>, const Interned*> products;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

namespace detail {

const char* head_name(SymKind k) {
  switch (k) {
    case SymKind::Log: return "log";
    case SymKind::Atan: return "atan";
    case SymKind::Cos: return "cos";
    case SymKind::Sin: return "sin";
    case SymKind::Exp: return "exp";
    default: return "";
  }
}

const Interned* intern_param(std::string_view name) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  auto key = std::make_pair(SymKind::Param, std::string(name));
  auto it = r.nodes.find(key);
  if (it != r.nodes.end()) return it->second.get();
  auto node = std::make_unique<Interned>();
  node->kind = SymKind::Param;
  node->key = std::string(name);
  const Interned* p = node.get();
  r.nodes.emplace(key, std::move(node));
  return p;
}

namespace {

std::unique_ptr<Interned> make_node(SymKind k, const Expr& arg, const std::string& key, const std::string& tex) {
  auto node = std::make_unique<Interned>();
  node->kind = k;
  node->key = key;
  node->arg = std::make_shared<const Expr>(arg);
  node->tex = tex;
  for (const Symbol& s : arg.variables()) node->vars.push_back(s);
  return node;
}

// split integer multiples of log generators out of an exp argument
void split_logs(const Expr& u, std::vector<std::pair<const Interned*, long>>& logs, Expr& rest) {
  rest = u;
  if (!u.den().is_constant()) return;
  Rational d = u.den().constant_value();
  for (const Term& t : u.num().terms()) {
    if (t.mono.exp || t.mono.factors.size() != 1) continue;
    const auto& [s, e] = t.mono.factors[0];
    if (s.kind() != SymKind::Log || e != 1) continue;
    Rational c = t.coef / d;
    // truncate toward zero
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), c.get().get_num_mpz_t(), c.get().get_den_mpz_t());
    if (q == 0 || !q.fits_slong_p()) continue;
    long k = q.get_si();
    logs.emplace_back(s.node(), k);
    rest -= Expr(Rational(k)) * Expr(s);
  }
}

}  // namespace

const Interned* intern_generator(SymKind k, const Expr& arg) {
  std::string key = arg.str();
  auto& r = registry();
  {
    std::lock_guard lock(r.mu);
    auto it = r.nodes.find({k, key});
    if (it != r.nodes.end()) return it->second.get();
  }
  std::string tex = arg.latex();
  std::vector<std::pair<const Interned*, long>> logs;
  const Interned* rest = nullptr;
  if (k == SymKind::Exp) {
    Expr rem;
    split_logs(arg, logs, rem);
    if (!logs.empty() && !rem.is_zero()) rest = intern_generator(SymKind::Exp, rem);
  }
  std::lock_guard lock(r.mu);
  auto it = r.nodes.find({k, key});
  if (it != r.nodes.end()) return it->second.get();
  if (k == SymKind::Cos || k == SymKind::Sin) {
    auto c = make_node(SymKind::Cos, arg, key, tex);
    auto s = make_node(SymKind::Sin, arg, key, tex);
    c->partner = s.get();
    s->partner = c.get();
    const Interned* out = k == SymKind::Cos ? c.get() : s.get();
    r.nodes.emplace(std::make_pair(SymKind::Cos, key), std::move(c));
    r.nodes.emplace(std::make_pair(SymKind::Sin, key), std::move(s));
    return out;
  }
  auto node = make_node(k, arg, key, tex);
  node->int_logs = std::move(logs);
  node->rest = rest;
  const Interned* out = node.get();
  r.nodes.emplace(std::make_pair(k, key), std::move(node));
  return out;
}

const Interned* exp_product(const Interned* a, const Interned* b) {
  if (!a) return b;
  if (!b) return a;
  if (b < a) std::swap(a, b);
  auto& r = registry();
  {
    std::lock_guard lock(r.mu);
    auto it = r.products.find({a, b});
    if (it != r.products.end()) return it->second;
  }
  Expr sum = *a->arg + *b->arg;
  const Interned* out = sum.is_zero() ? nullptr : intern_generator(SymKind::Exp, sum);
  std::lock_guard lock(r.mu);
  r.products[{a, b}] = out;
  return out;
}

const Interned* exp_power(const Interned* a, long k) {
  if (!a || k == 0) return nullptr;
  if (k == 1) return a;
  return intern_generator(SymKind::Exp, Expr(Rational(k)) * *a->arg);
}

}  // namespace detail

Symbol Symbol::coord(int i) { return Symbol(SymKind::Coord, i, nullptr); }
Symbol Symbol::theta(int i) { return Symbol(SymKind::Theta, i, nullptr); }
Symbol Symbol::aux(int i) { return Symbol(SymKind::Aux, i, nullptr); }
Symbol Symbol::param(std::string_view name) { return Symbol(SymKind::Param, 0, detail::intern_param(name)); }
Symbol Symbol::generator(const Interned* node) { return Symbol(node->kind, 0, node); }

const std::string& Symbol::name() const {
  if (!node_) throw Error("symbol has no name");
  return node_->key;
}

const Expr& Symbol::argument() const {
  if (!node_ || !node_->arg) throw Error("symbol is not a generator");
  return *node_->arg;
}

std::string Symbol::str() const {
  switch (kind_) {
    case SymKind::Coord: return "x" + std::to_string(index_);
    case SymKind::Theta: return "theta" + std::to_string(index_);
    case SymKind::Aux: return "_z" + std::to_string(index_);
    case SymKind::Param: return node_->key;
    default: return std::string(detail::head_name(kind_)) + "(" + node_->key + ")";
  }
}

std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (a.node_ || b.node_) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    int c = a.node_->key.compare(b.node_->key);
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.index_ <=> b.index_;
}

}  // namespace lieinv
