#include "lieinv/document.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <set>
#include <sstream>

namespace lieinv {

namespace {

using json = nlohmann::ordered_json;

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

const std::set<std::string>& reserved() {
  static const std::set<std::string> r{"exp", "log", "ln", "atan", "arctan", "cos", "sin"};
  return r;
}

int parse_int(const std::string& s, std::size_t line, std::size_t col, const char* what) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used == s.size()) return static_cast<int>(v);
  } catch (const std::exception&) {
  }
  throw ParseError(std::string("expected an integer ") + what + ", got '" + s + "'", line, col);
}

// basis index from "3" or a label
int basis_ref(const AlgebraDocument& doc, const std::string& s, std::size_t line, std::size_t col) {
  if (!s.empty() && std::isdigit(static_cast<unsigned char>(s[0]))) {
    int k = parse_int(s, line, col, "basis index");
    if (k < 1 || k > doc.dim)
      throw ParseError("basis index " + s + " out of range 1.." + std::to_string(doc.dim), line, col);
    return k;
  }
  for (int k = 1; k <= doc.dim; ++k)
    if (doc.label(k) == s) return k;
  throw ParseError("unknown basis element '" + s + "'", line, col);
}

// rhs as a linear combination of basis labels
std::vector<std::pair<int, Expr>> linear_rhs(const AlgebraDocument& doc, const std::string& text, std::size_t line,
                                             std::size_t col) {
  ParseContext ctx = doc.context(false);
  ctx.line = line;
  ctx.column = col;
  Expr e = parse_expr(text, ctx);
  std::vector<std::pair<int, Expr>> out;
  Substitution zero;
  for (int k = 1; k <= doc.dim; ++k) zero.vars[Symbol::aux(k)] = Expr(0);
  if (!substitute(e, zero).is_zero() || e.has_kind(SymKind::Coord) || e.has_kind(SymKind::Theta) ||
      !e.is_transcendental_free())
    throw ParseError("right-hand side must be a linear combination of basis elements", line, col);
  for (int k = 1; k <= doc.dim; ++k) {
    Expr c = differentiate(e, Symbol::aux(k));
    if (c.is_zero()) continue;
    if (c.has_kind(SymKind::Aux)) throw ParseError("right-hand side is not linear in the basis elements", line, col);
    out.emplace_back(k, c);
  }
  return out;
}

void add_bracket(AlgebraDocument& doc, BracketEntry b, std::size_t col) {
  if (b.i == b.j)
    throw ParseError("bracket of an element with itself must be zero: [" + std::to_string(b.i) + "," + std::to_string(b.j) + "]",
                     b.line, col);
  if (b.i > b.j) {
    std::swap(b.i, b.j);
    for (auto& [k, c] : b.rhs) c = -c;
  }
  for (const auto& o : doc.brackets)
    if (o.i == b.i && o.j == b.j)
      throw ParseError("duplicate bracket entry [" + std::to_string(b.i) + "," + std::to_string(b.j) + "] (first on line " +
                           std::to_string(o.line) + ")",
                       b.line, col);
  doc.brackets.push_back(std::move(b));
}

void set_labels(AlgebraDocument& doc, const std::vector<std::string>& labels, std::size_t line) {
  if (doc.dim == 0) throw ParseError("labels before dim", line, 1);
  if (static_cast<int>(labels.size()) != doc.dim) throw ParseError("label count does not match dim", line, 1);
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!is_identifier(l) || reserved().count(l)) throw ParseError("invalid label '" + l + "'", line, 1);
    if (!seen.insert(l).second) throw ParseError("duplicate label '" + l + "'", line, 1);
    if (std::find(doc.params.begin(), doc.params.end(), l) != doc.params.end())
      throw ParseError("label '" + l + "' clashes with a parameter", line, 1);
  }
  doc.labels = labels;
}

void add_param(AlgebraDocument& doc, const std::string& p, std::size_t line) {
  if (!is_identifier(p) || reserved().count(p) || p == "pi") throw ParseError("invalid parameter name '" + p + "'", line, 1);
  std::regex indexed("^(x|e|theta)[0-9]+$");
  if (std::regex_match(p, indexed)) throw ParseError("parameter name '" + p + "' is reserved for coordinates", line, 1);
  for (int k = 1; k <= doc.dim; ++k)
    if (doc.label(k) == p) throw ParseError("parameter '" + p + "' clashes with a basis label", line, 1);
  if (std::find(doc.params.begin(), doc.params.end(), p) != doc.params.end())
    throw ParseError("parameter '" + p + "' declared twice", line, 1);
  doc.params.push_back(p);
}

std::string term(const Expr& c, const std::string& label) {
  if (c.is_one()) return label;
  if ((-c).is_one()) return "-" + label;
  if (c.is_polynomial() && c.num().size() == 1 && c.den().is_one()) return c.str() + "*" + label;
  if (c.is_constant()) return c.str() + "*" + label;
  return "(" + c.str() + ")*" + label;
}

std::string render_rhs(const AlgebraDocument& doc, const std::vector<std::pair<int, Expr>>& rhs) {
  std::string out;
  for (const auto& [k, c] : rhs) {
    std::string t = term(c, doc.label(k));
    if (out.empty())
      out = t;
    else if (t[0] == '-')
      out += " - " + t.substr(1);
    else
      out += " + " + t;
  }
  return out.empty() ? "0" : out;
}

void statement(AlgebraDocument& doc, const std::string& stmt, const std::string& rest_of_line, std::size_t line,
               std::size_t col, bool& consumed_line) {
  static const std::regex bracket(R"(^\[\s*([^,\]\s]+)\s*,\s*([^\]\s]+)\s*\]\s*=\s*(.*)$)");
  std::smatch m;
  if (stmt[0] == '[') {
    if (!std::regex_match(stmt, m, bracket)) throw ParseError("malformed bracket entry", line, col);
    if (doc.dim == 0) throw ParseError("bracket entry before dim", line, col);
    BracketEntry b;
    b.i = basis_ref(doc, m[1].str(), line, col + static_cast<std::size_t>(m.position(1)));
    b.j = basis_ref(doc, m[2].str(), line, col + static_cast<std::size_t>(m.position(2)));
    b.line = line;
    std::string rhs = m[3].str();
    if (trim(rhs).empty()) throw ParseError("missing right-hand side", line, col + stmt.size());
    b.rhs = linear_rhs(doc, rhs, line, col + static_cast<std::size_t>(m.position(3)));
    add_bracket(doc, std::move(b), col);
    return;
  }
  auto w = words(stmt);
  const std::string& kw = w[0];
  auto rest_after_kw = [&](const std::string& s) { return trim(std::string_view(s).substr(kw.size())); };
  if (kw == "name" || kw == "note") {
    // free text: take the whole remainder of the physical line
    std::string text = rest_after_kw(rest_of_line);
    consumed_line = true;
    if (kw == "name")
      doc.name = text;
    else
      doc.notes.push_back(text);
  } else if (kw == "dim") {
    if (doc.dim != 0) throw ParseError("dim given twice", line, col);
    if (w.size() != 2) throw ParseError("dim takes one integer", line, col);
    int n = parse_int(w[1], line, col, "dimension");
    if (n < 1) throw ParseError("dimension must be positive", line, col);
    doc.dim = n;
  } else if (kw == "param") {
    if (w.size() < 2) throw ParseError("param needs a name", line, col);
    for (std::size_t i = 1; i < w.size(); ++i) add_param(doc, w[i], line);
  } else if (kw == "labels") {
    set_labels(doc, {w.begin() + 1, w.end()}, line);
  } else if (kw == "sign") {
    if (w.size() != 3) throw ParseError("sign takes a basis index and -1 or 1", line, col);
    if (doc.dim == 0) throw ParseError("sign before dim", line, col);
    int k = basis_ref(doc, w[1], line, col);
    int s = parse_int(w[2], line, col, "sign");
    if (s != 1 && s != -1) throw ParseError("sign must be 1 or -1", line, col);
    if (s == -1) doc.signs[k] = -1; else doc.signs.erase(k);
  } else if (kw == "pivot") {
    if (w.size() < 2) throw ParseError("pivot needs slot numbers", line, col);
    for (std::size_t i = 1; i < w.size(); ++i) {
      int s = parse_int(w[i], line, col, "slot");
      if (s < 1) throw ParseError("slots are 1-based", line, col);
      doc.pivots.push_back(s);
    }
  } else if (kw == "recipe") {
    std::string r = rest_after_kw(stmt);
    ParseContext ctx = doc.context(true);
    ctx.line = line;
    ctx.column = col;
    parse_recipe(r, ctx);  // reject unknown recipes early
    doc.recipes.push_back(r);
  } else if (kw == "multiplier") {
    ParseContext ctx = doc.context(true);
    ctx.line = line;
    ctx.column = col + kw.size();
    doc.multipliers.push_back(parse_expr(rest_after_kw(stmt), ctx));
  } else {
    throw ParseError("unknown statement '" + kw + "'", line, col);
  }
}

}  // namespace

std::string AlgebraDocument::label(int k) const {
  if (!labels.empty()) return labels.at(static_cast<std::size_t>(k - 1));
  return "e" + std::to_string(k);
}

ParseContext AlgebraDocument::context(bool labels_as_coordinates) const {
  ParseContext ctx;
  ctx.params.insert(params.begin(), params.end());
  ctx.strict_params = true;
  ctx.dim = dim;
  for (int k = 1; k <= dim; ++k)
    ctx.names[label(k)] = labels_as_coordinates ? Symbol::coord(k) : Symbol::aux(k);
  return ctx;
}

AlgebraDocument parse_document(std::string_view text) {
  AlgebraDocument doc;
  std::size_t line = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line;
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::size_t hash = raw.find('#');
    std::string_view body = raw.substr(0, hash);
    std::size_t seg = 0;
    while (seg <= body.size()) {
      std::size_t semi = body.find(';', seg);
      if (semi == std::string_view::npos) semi = body.size();
      std::string_view piece = body.substr(seg, semi - seg);
      std::size_t lead = 0;
      while (lead < piece.size() && std::isspace(static_cast<unsigned char>(piece[lead]))) ++lead;
      std::string stmt = trim(piece);
      bool consumed = false;
      if (!stmt.empty()) statement(doc, stmt, std::string(body.substr(seg + lead)), line, seg + lead + 1, consumed);
      if (consumed) break;
      seg = semi + 1;
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  if (doc.dim == 0) throw ParseError("missing dim", line, 1);
  for (const auto& [k, s] : doc.signs)
    if (k > doc.dim) throw ParseError("sign index out of range", line, 1);
  return doc;
}

AlgebraDocument parse_document_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') ++line, col = 1;
      else ++col;
    }
    throw ParseError(std::string("json: ") + e.what(), line, col);
  }
  auto fail = [](const std::string& msg) { throw ParseError("json: " + msg, 1, 1); };
  if (!j.is_object()) fail("top level must be an object");
  AlgebraDocument doc;
  try {
    if (!j.contains("dim") || !j["dim"].is_number_integer()) fail("missing integer 'dim'");
    doc.dim = j["dim"].get<int>();
    if (doc.dim < 1) fail("dimension must be positive");
    doc.name = j.value("name", std::string());
    if (j.contains("notes")) doc.notes = j["notes"].get<std::vector<std::string>>();
    if (j.contains("params"))
      for (const auto& p : j["params"].get<std::vector<std::string>>()) add_param(doc, p, 1);
    if (j.contains("labels") && !j["labels"].empty()) set_labels(doc, j["labels"].get<std::vector<std::string>>(), 1);
    if (j.contains("brackets")) {
      std::size_t idx = 0;
      for (const auto& b : j["brackets"]) {
        ++idx;
        BracketEntry e;
        e.line = idx;
        auto ref = [&](const json& v) {
          return v.is_number_integer() ? basis_ref(doc, std::to_string(v.get<int>()), idx, 1)
                                       : basis_ref(doc, v.get<std::string>(), idx, 1);
        };
        e.i = ref(b.at("i"));
        e.j = ref(b.at("j"));
        std::map<int, Expr> acc;
        ParseContext ctx = doc.context(false);
        ctx.line = idx;
        for (const auto& t : b.at("rhs")) {
          int k = t.at(0).is_number_integer() ? basis_ref(doc, std::to_string(t.at(0).get<int>()), idx, 1)
                                              : basis_ref(doc, t.at(0).get<std::string>(), idx, 1);
          Expr c = t.at(1).is_number_integer() ? Expr(static_cast<long>(t.at(1).get<long>()))
                                               : parse_expr(t.at(1).get<std::string>(), ctx);
          if (!c.variables().empty())
            for (const auto& v : c.variables())
              if (v.kind() != SymKind::Param) fail("coefficients may only contain parameters");
          acc[k] += c;
        }
        for (auto& [k, c] : acc)
          if (!c.is_zero()) e.rhs.emplace_back(k, c);
        add_bracket(doc, std::move(e), 1);
      }
    }
    if (j.contains("signs"))
      for (const auto& [k, v] : j["signs"].items()) {
        int s = v.get<int>();
        if (s != -1 && s != 1) fail("signs must be 1 or -1");
        int idx = basis_ref(doc, k, 1, 1);
        if (s == -1) doc.signs[idx] = -1;
      }
    if (j.contains("pivots")) doc.pivots = j["pivots"].get<std::vector<int>>();
    for (int s : doc.pivots)
      if (s < 1) fail("pivot slots are 1-based");
    if (j.contains("recipes"))
      for (const auto& r : j["recipes"].get<std::vector<std::string>>()) {
        parse_recipe(r, doc.context(true));
        doc.recipes.push_back(r);
      }
    if (j.contains("multipliers"))
      for (const auto& m : j["multipliers"].get<std::vector<std::string>>()) doc.multipliers.push_back(parse_expr(m, doc.context(true)));
  } catch (const json::exception& e) {
    fail(e.what());
  }
  return doc;
}

std::vector<std::string> describe_violations(const AlgebraDocument& doc, const ValidationReport& report) {
  std::vector<std::string> out;
  auto line_of = [&](int a, int b) -> std::size_t {
    if (a > b) std::swap(a, b);
    for (const auto& e : doc.brackets)
      if (e.i == a && e.j == b) return e.line;
    return 0;
  };
  for (const auto& v : report.violations) {
    std::string msg = v.describe();
    if (v.kind == Violation::Kind::Jacobi) {
      std::vector<std::size_t> lines;
      for (auto [a, b] : {std::pair{v.i, v.j}, std::pair{v.j, v.k}, std::pair{v.i, v.k}})
        if (std::size_t l = line_of(a + 1, b + 1)) lines.push_back(l);
      std::sort(lines.begin(), lines.end());
      lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
      if (!lines.empty()) {
        msg += " (lines";
        for (auto l : lines) msg += " " + std::to_string(l);
        msg += ")";
      }
    }
    out.push_back(msg);
  }
  return out;
}

LieAlgebra to_algebra(const AlgebraDocument& doc, bool validate_now) {
  LieAlgebra g(doc.dim, doc.name);
  if (!doc.labels.empty()) g.set_labels(doc.labels);
  for (const auto& p : doc.params) g.add_param(p);
  for (const auto& b : doc.brackets) {
    SparseVec v;
    for (const auto& [k, c] : b.rhs) v[k - 1] = c;
    g.set_bracket(b.i - 1, b.j - 1, v);
  }
  if (validate_now) {
    ValidationReport r = validate(g);
    if (!r.ok()) {
      std::string msg = "not a Lie algebra:";
      for (const auto& d : describe_violations(doc, r)) msg += "\n  " + d;
      throw ValidationFailed(msg, r);
    }
  }
  return g;
}

LieAlgebra parse_algebra(std::string_view text) { return to_algebra(parse_document(text)); }

AlgebraDocument document_of(const LieAlgebra& g) {
  AlgebraDocument doc;
  doc.name = g.name();
  doc.dim = g.dim();
  doc.params = g.params();
  doc.labels = g.labels();
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j) {
      SparseVec v = g.bracket(i, j);
      BracketEntry e;
      e.i = i + 1;
      e.j = j + 1;
      for (const auto& [k, c] : v)
        if (!c.is_zero()) e.rhs.emplace_back(k + 1, c);
      if (!e.rhs.empty()) doc.brackets.push_back(std::move(e));
    }
  return doc;
}

std::string render_document(const AlgebraDocument& doc) {
  std::ostringstream os;
  if (!doc.name.empty()) os << "name " << doc.name << "\n";
  for (const auto& n : doc.notes) os << "note " << n << "\n";
  os << "dim " << doc.dim << "\n";
  if (!doc.params.empty()) {
    os << "param";
    for (const auto& p : doc.params) os << " " << p;
    os << "\n";
  }
  if (!doc.labels.empty()) {
    os << "labels";
    for (const auto& l : doc.labels) os << " " << l;
    os << "\n";
  }
  for (const auto& [k, s] : doc.signs) os << "sign " << k << " " << s << "\n";
  if (!doc.pivots.empty()) {
    os << "pivot";
    for (int p : doc.pivots) os << " " << p;
    os << "\n";
  }
  for (const auto& r : doc.recipes) os << "recipe " << r << "\n";
  for (const auto& m : doc.multipliers) os << "multiplier " << m.str() << "\n";
  auto sorted = doc.brackets;
  std::sort(sorted.begin(), sorted.end(), [](const BracketEntry& a, const BracketEntry& b) {
    return std::pair{a.i, a.j} < std::pair{b.i, b.j};
  });
  for (const auto& b : sorted) os << "[" << b.i << "," << b.j << "] = " << render_rhs(doc, b.rhs) << "\n";
  return os.str();
}

std::string render_document_json(const AlgebraDocument& doc) {
  json j;
  j["name"] = doc.name;
  j["notes"] = doc.notes;
  j["dim"] = doc.dim;
  j["params"] = doc.params;
  j["labels"] = doc.labels;
  json br = json::array();
  auto sorted = doc.brackets;
  std::sort(sorted.begin(), sorted.end(), [](const BracketEntry& a, const BracketEntry& b) {
    return std::pair{a.i, a.j} < std::pair{b.i, b.j};
  });
  for (const auto& b : sorted) {
    json rhs = json::array();
    for (const auto& [k, c] : b.rhs) rhs.push_back({k, c.str()});
    br.push_back({{"i", b.i}, {"j", b.j}, {"rhs", rhs}});
  }
  j["brackets"] = br;
  json signs = json::object();
  for (const auto& [k, s] : doc.signs) signs[std::to_string(k)] = s;
  j["signs"] = signs;
  j["pivots"] = doc.pivots;
  j["recipes"] = doc.recipes;
  std::vector<std::string> ms;
  for (const auto& m : doc.multipliers) ms.push_back(m.str());
  j["multipliers"] = ms;
  return j.dump(2) + "\n";
}

Recipe parse_recipe(const std::string& text, const ParseContext& ctx) {
  if (auto r = find_recipe(text)) return *r;
  if (trim(text) == "identity") return recipes::identity();
  static const std::regex call(R"(^\s*([a-z_]+)\s*\((.*)\)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, call)) throw ParseError("malformed recipe '" + text + "'", ctx.line, ctx.column);
  std::string name = m[1].str();
  std::vector<std::string> args;
  {
    std::string a = m[2].str();
    std::size_t s = 0;
    while (s <= a.size()) {
      std::size_t c = a.find(',', s);
      if (c == std::string::npos) c = a.size();
      args.push_back(trim(std::string_view(a).substr(s, c - s)));
      s = c + 1;
    }
    if (args.size() == 1 && args[0].empty()) args.clear();
  }
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw ParseError("recipe " + name + " takes " + std::to_string(n) + " arguments", ctx.line, ctx.column);
  };
  auto slot = [&](std::size_t i) {
    int v = parse_int(args[i], ctx.line, ctx.column, "slot");
    if (v < 1) throw ParseError("recipe slots are 1-based", ctx.line, ctx.column);
    return v - 1;
  };
  auto expr = [&](std::size_t i) { return parse_expr(args[i], ctx); };
  if (name == "identity") return need(0), recipes::identity();
  if (name == "sum_of_squares") return need(2), recipes::sum_of_squares(slot(0), slot(1));
  if (name == "arctan_ratio") return need(3), recipes::arctan_ratio(slot(0), slot(1), slot(2));
  if (name == "exp_arctan") return need(4), recipes::exp_arctan(slot(0), slot(1), expr(2), slot(3));
  if (name == "rotation_pair") return need(3), recipes::rotation_pair(slot(0), slot(1), expr(2));
  if (name == "cross_ratio") return need(6), recipes::cross_ratio(slot(0), slot(1), slot(2), slot(3), slot(4), slot(5));
  if (name == "ratio") return need(2), recipes::ratio(slot(0), slot(1));
  throw ParseError("unknown recipe '" + name + "'", ctx.line, ctx.column);
}

}  // namespace lieinv
