#include "lieinv/parse.hpp"

#include "lieinv/error.hpp"

#include <cctype>

namespace lieinv {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ParseContext& ctx) : s_(text), ctx_(ctx) {}

  Expr parse() {
    Expr e = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  std::string_view s_;
  const ParseContext& ctx_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, ctx_.line, ctx_.column + pos_);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr sum() {
    Expr e = product();
    for (;;) {
      if (eat('+')) e += product();
      else if (eat('-')) e -= product();
      else return e;
    }
  }

  Expr product() {
    Expr e = unary();
    for (;;) {
      if (eat('*')) {
        e *= unary();
      } else if (eat('/')) {
        std::size_t at = pos_;
        Expr d = unary();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        e /= d;
      } else {
        return e;
      }
    }
  }

  Expr unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return powered();
  }

  Expr powered() {
    Expr base = primary();
    if (eat('^')) {
      Expr ex = unary();
      return power(base, ex);
    }
    return base;
  }

  Expr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = sum();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '.') fail("decimal numbers are not exact; write p/q");
      return Expr(Rational::parse(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string id(s_.substr(start, pos_ - start));
      skip();
      if (pos_ < s_.size() && s_[pos_] == '(') {
        static const std::set<std::string> funcs = {"exp", "log", "ln", "atan", "arctan", "cos", "sin"};
        if (funcs.count(id)) {
          ++pos_;
          Expr arg = sum();
          if (!eat(')')) fail("expected ')'");
          try {
            if (id == "exp") return exp(arg);
            if (id == "log" || id == "ln") return log(arg);
            if (id == "atan" || id == "arctan") return atan(arg);
            if (id == "cos") return cos(arg);
            return sin(arg);
          } catch (const NestingError& e) {
            pos_ = start;
            fail(e.what());
          }
        }
      }
      return identifier(id, start);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Expr identifier(const std::string& id, std::size_t start) {
    if (auto it = ctx_.names.find(id); it != ctx_.names.end()) return Expr(it->second);
    auto indexed = [&](const std::string& prefix) -> int {
      if (id.size() <= prefix.size() || id.compare(0, prefix.size(), prefix) != 0) return -1;
      for (std::size_t i = prefix.size(); i < id.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(id[i]))) return -1;
      if (id[prefix.size()] == '0') return -1;
      return std::stoi(id.substr(prefix.size()));
    };
    if (ctx_.params.count(id)) return Expr::param(id);
    int k;
    if ((k = indexed("x")) > 0 || (k = indexed("e")) > 0) {
      if (ctx_.dim > 0 && k > ctx_.dim) {
        pos_ = start;
        fail("index " + std::to_string(k) + " out of range");
      }
      return Expr::coord(k);
    }
    if ((k = indexed("theta")) > 0) return Expr::theta(k);
    if ((k = indexed("_z")) > 0) return Expr(Symbol::aux(k));
    if (ctx_.strict_params) {
      pos_ = start;
      fail("undeclared identifier '" + id + "'");
    }
    return Expr::param(id);
  }
};

}  // namespace

Expr parse_expr(std::string_view text, const ParseContext& ctx) {
  Parser p(text, ctx);
  return p.parse();
}

}  // namespace lieinv
