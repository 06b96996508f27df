#include "lieinv/cli.hpp"

#include "lieinv/document.hpp"
#include "lieinv/families.hpp"
#include "lieinv/moving_frame.hpp"
#include "lieinv/normalization.hpp"
#include "lieinv/verifier.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace lieinv {

namespace {

using ojson = nlohmann::ordered_json;

struct Options {
  std::uint64_t seed = 1;
  int trials = 8;
  int degree_bound = kDefaultDegreeBound;
  bool latex = false;
  std::string format = "text";
  std::vector<std::string> set;  // param=value
};

struct UsageError : Error {
  using Error::Error;
};

std::string read_input(const std::string& file, std::istream& in) {
  std::ostringstream ss;
  if (file == "-") {
    ss << in.rdbuf();
  } else {
    std::ifstream f(file);
    if (!f) throw UsageError("cannot open " + file);
    ss << f.rdbuf();
  }
  return ss.str();
}

AlgebraDocument load_document(const std::string& file, std::istream& in) {
  std::string text = read_input(file, in);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_document_json(text);
  return parse_document(text);
}

std::string fmt(const Expr& e, const Options& o) { return o.latex ? e.latex() : e.str(); }

std::string combination(const std::vector<Expr>& v, const LieAlgebra& g, const Options& o) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    std::string c = fmt(v[k], o), l = g.label(static_cast<int>(k));
    std::string t = v[k].is_one() ? l : (-v[k]).is_one() ? "-" + l : "(" + c + ")*" + l;
    if (s.empty())
      s = t;
    else if (t[0] == '-')
      s += " - " + t.substr(1);
    else
      s += " + " + t;
  }
  return s.empty() ? "0" : s;
}

// values for every parameter: from --set, otherwise seeded random ones
Specialization parameter_values(const LieAlgebra& g, const Options& o, ojson& rep) {
  Specialization spec;
  for (const auto& kv : o.set) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw UsageError("--set expects name=value, got " + kv);
    std::string name = kv.substr(0, eq);
    if (std::find(g.params().begin(), g.params().end(), name) == g.params().end())
      throw UsageError("unknown parameter " + name);
    try {
      spec[name] = Rational::parse(kv.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("--set value for " + name + " must be a rational number");
    }
  }
  RationalSampler rng(o.seed ^ 0x5bd1e995u);
  bool generic = false;
  for (const auto& p : g.params())
    if (!spec.count(p)) {
      spec[p] = rng.next_nonzero();
      generic = true;
    }
  if (!g.params().empty()) {
    ojson vals = ojson::object();
    for (const auto& [p, v] : spec) vals[p] = v.str();
    rep["parameter_values"] = vals;
    rep["parameter_values_kind"] = generic ? "random generic values (seeded)" : "given";
  }
  return spec;
}

void legend(const AlgebraDocument& doc, ojson& rep) {
  if (doc.labels.empty()) return;
  std::string s;
  for (int k = 1; k <= doc.dim; ++k) s += (k > 1 ? " " : "") + ("x" + std::to_string(k)) + "=" + doc.label(k);
  rep["coordinates"] = s;
}

std::vector<FactorSpec> ordering_of(const AlgebraDocument& doc, const LieAlgebra& g) {
  std::map<int, int> signs;
  for (const auto& [k, s] : doc.signs) signs[k - 1] = s;
  return default_ordering(g, signs);
}

ojson factor_lines(const AutoMatrix& B, const LieAlgebra& g) {
  ojson out = ojson::array();
  for (std::size_t i = 0; i < B.factors.size(); ++i) {
    const auto& f = B.factors[i];
    std::string s = std::string("exp(") + (f.sign < 0 ? "-" : "") + "theta" + std::to_string(f.theta) + " ad " +
                    g.label(f.generator) + ")";
    if (i < B.methods.size()) s += " [" + B.methods[i] + "]";
    out.push_back(s);
  }
  return out;
}

ojson expr_list(const std::vector<Expr>& v, const Options& o) {
  ojson out = ojson::array();
  for (const auto& e : v) out.push_back(fmt(e, o));
  return out;
}

// "yes", "no", or why the check was skipped
std::string centrality(const Expr& F, const LieAlgebra& g, const Options& o) {
  if (!F.is_polynomial() || !F.is_transcendental_free() || F.is_constant()) return "n/a";
  try {
    return is_central(pbw_normal_form(symmetrize(F, g, o.degree_bound), g, o.degree_bound), g, o.degree_bound) ? "yes"
                                                                                                              : "no";
  } catch (const DegreeBoundExceeded&) {
    return "skipped (degree bound " + std::to_string(o.degree_bound) + ")";
  }
}

void print_scalar(const ojson& v, std::ostream& out) {
  if (v.is_string())
    out << v.get<std::string>();
  else if (v.is_boolean())
    out << (v.get<bool>() ? "yes" : "no");
  else
    out << v.dump();
}

void print_text(const ojson& j, std::ostream& out, const std::string& pad) {
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      out << pad << k << ":\n";
      print_text(v, out, pad + "  ");
    } else if (v.is_array()) {
      out << pad << k << ":";
      if (v.empty()) {
        out << " none\n";
        continue;
      }
      bool flat = std::all_of(v.begin(), v.end(), [](const ojson& e) { return e.is_number(); });
      if (flat) {
        for (const auto& e : v) out << " " << e.dump();
        out << "\n";
        continue;
      }
      out << "\n";
      for (const auto& e : v) {
        if (e.is_object()) {
          bool first = true;
          for (const auto& [ek, ev] : e.items()) {
            out << pad << (first ? "  - " : "    ") << ek << ": ";
            print_scalar(ev, out);
            out << "\n";
            first = false;
          }
        } else {
          out << pad << "  ";
          print_scalar(e, out);
          out << "\n";
        }
      }
    } else {
      out << pad << k << ": ";
      print_scalar(v, out);
      out << "\n";
    }
  }
}

void emit(const ojson& rep, const Options& o, std::ostream& out) {
  if (o.format == "json")
    out << rep.dump(2) << "\n";
  else
    print_text(rep, out, "");
}

int cmd_validate(const std::string& file, const Options& o, std::ostream& out, std::istream& in) {
  AlgebraDocument doc = load_document(file, in);
  LieAlgebra g = to_algebra(doc, false);
  ValidationReport r = validate(g);
  ojson rep;
  rep["name"] = doc.name;
  rep["dim"] = doc.dim;
  rep["valid"] = r.ok();
  rep["violations"] = describe_violations(doc, r);
  emit(rep, o, out);
  return r.ok() ? kExitOk : kExitVerification;
}

int cmd_info(const std::string& file, const Options& o, std::ostream& out, std::istream& in) {
  AlgebraDocument doc = load_document(file, in);
  LieAlgebra g = to_algebra(doc);
  ojson rep;
  rep["name"] = doc.name;
  rep["dim"] = g.dim();
  if (!g.params().empty()) rep["params"] = g.params();
  Specialization spec = parameter_values(g, o, rep);
  legend(doc, rep);
  Subspace z = center(g);
  ojson zb = ojson::array();
  for (const auto& v : z) zb.push_back(combination(v, g, o));
  rep["center_dim"] = z.size();
  rep["center"] = zb;
  ojson ds = ojson::array(), ls = ojson::array();
  for (const auto& s : series(g, SeriesKind::Derived)) ds.push_back(s.size());
  for (const auto& s : series(g, SeriesKind::LowerCentral)) ls.push_back(s.size());
  rep["derived_series"] = ds;
  rep["lower_central_series"] = ls;
  rep["nilpotent"] = is_nilpotent(g);
  rep["solvable"] = is_solvable(g);
  int rank = rank_coadjoint(g, o.seed, o.trials, spec).rank;
  rep["rank"] = rank;
  rep["num_invariants"] = g.dim() - rank;
  emit(rep, o, out);
  return kExitOk;
}

int cmd_lifted(const std::string& file, const Options& o, std::ostream& out, std::istream& in) {
  AlgebraDocument doc = load_document(file, in);
  LieAlgebra g = to_algebra(doc);
  AutoMatrix B = automorphism_matrix(g, ordering_of(doc, g));
  LiftedSet L = lifted_invariants(B);
  ojson rep;
  rep["name"] = doc.name;
  rep["dim"] = g.dim();
  legend(doc, rep);
  rep["factors"] = factor_lines(B, g);
  rep["assumptions"] = expr_list(B.assumptions, o);
  ojson lines = ojson::array();
  for (int k = 0; k < L.dim(); ++k) lines.push_back("I" + std::to_string(k + 1) + " = " + fmt(L.exprs[k], o));
  rep["lifted"] = lines;
  emit(rep, o, out);
  return kExitOk;
}

int cmd_invariants(const std::string& file, const Options& o, std::ostream& out, std::istream& in) {
  AlgebraDocument doc = load_document(file, in);
  LieAlgebra g = to_algebra(doc);
  ojson rep;
  rep["name"] = doc.name;
  rep["dim"] = g.dim();
  Specialization spec = parameter_values(g, o, rep);
  legend(doc, rep);
  int expected = num_invariants(g, o.seed, o.trials, spec);
  rep["num_invariants"] = expected;

  AutoMatrix B = automorphism_matrix(g, ordering_of(doc, g));
  LiftedSet L = lifted_invariants(B);
  rep["factors"] = factor_lines(B, g);

  EliminateOptions eo;
  eo.algebra = &g;
  for (int p : doc.pivots) eo.pivot_hints.push_back(p - 1);
  ParseContext ctx = doc.context(true);
  for (const auto& r : doc.recipes) eo.recipes.push_back(parse_recipe(r, ctx));
  InvariantSet S = eliminate(L, eo);
  std::vector<Expr> mult = doc.multipliers;
  if (mult.empty())
    for (const auto& e : S.exprs)
      if (e.is_polynomial() && e.is_transcendental_free() && !e.is_constant()) mult.push_back(e);
  if (!mult.empty()) S = rescale_to_polynomial(S, mult);

  ojson steps = ojson::array();
  for (const auto& st : S.steps)
    steps.push_back("I" + std::to_string(st.slot + 1) + " = " + st.constant.str() + ": " + st.unknown + " = " +
                    fmt(st.binding, o));
  rep["normalization"] = steps;
  std::vector<Expr> assumptions;
  for (const auto* src : {&B.assumptions, &S.assumptions})
    for (const auto& a : *src)
      if (std::none_of(assumptions.begin(), assumptions.end(),
                       [&](const Expr& b) { return (a - b).is_zero() || (a + b).is_zero(); }))
        assumptions.push_back(a);
  rep["assumptions_nonzero"] = expr_list(assumptions, o);

  bool failed = false;
  ojson inv = ojson::array();
  for (const auto& F : S.exprs) {
    ojson e;
    e["F"] = fmt(F, o);
    bool ok = false;
    try {
      ok = check_invariant(g, F).ok;
    } catch (const Error&) {
    }
    e["invariant"] = ok;
    std::string c = centrality(F, g, o);
    if (c != "n/a") e["central"] = c;
    failed = failed || !ok || c == "no";
    inv.push_back(e);
  }
  rep["complete"] = S.complete;
  if (!S.complete) {
    ojson rt = ojson::array();
    for (int t : S.residual_thetas) rt.push_back("theta" + std::to_string(t));
    rep["residual_thetas"] = rt;
  }
  rep["count"] = S.exprs.size();
  if (S.complete) {
    bool match = static_cast<int>(S.exprs.size()) == expected;
    rep["count_matches_num_invariants"] = match;
    failed = failed || !match;
  }
  rep["invariants"] = inv;
  std::vector<std::string> notes = doc.notes;
  notes.insert(notes.end(), S.notes.begin(), S.notes.end());
  rep["notes"] = notes;
  emit(rep, o, out);
  if (failed) return kExitVerification;
  return S.complete ? kExitOk : kExitPartial;
}

int cmd_verify(const std::string& file, const std::string& text, const Options& o, std::ostream& out,
               std::istream& in) {
  AlgebraDocument doc = load_document(file, in);
  LieAlgebra g = to_algebra(doc);
  Expr F = parse_expr(text, doc.context(true));
  InvariantCheck chk = check_invariant(g, F);
  ojson rep;
  rep["name"] = doc.name;
  legend(doc, rep);
  rep["F"] = fmt(F, o);
  rep["invariant"] = chk.ok;
  ojson res = ojson::array();
  for (std::size_t i = 0; i < chk.residuals.size(); ++i)
    if (!chk.residuals[i].is_zero())
      res.push_back("X_" + g.label(static_cast<int>(i)) + " F = " + fmt(chk.residuals[i], o));
  rep["residuals"] = res;
  bool central_fail = false;
  if (chk.ok) {
    std::string c = centrality(F, g, o);
    if (c != "n/a") rep["central"] = c;
    central_fail = c == "no";
  }
  emit(rep, o, out);
  return chk.ok && !central_fail ? kExitOk : kExitVerification;
}

struct FamilyArgs {
  int n = 0;
  std::string lambda, blocks, a, alpha, beta;
};

Expr family_expr(const std::string& s) { return parse_expr(s); }

JSpec parse_blocks(const std::string& text) {
  JSpec spec;
  std::size_t s = 0;
  while (s < text.size()) {
    std::size_t e = text.find(';', s);
    if (e == std::string::npos) e = text.size();
    std::string item = text.substr(s, e - s);
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    s = e + 1;
    if (item.empty()) continue;
    int size = 1;
    auto caret = item.rfind('^');
    if (caret != std::string::npos && item.find(')', caret) == std::string::npos) {
      try {
        size = std::stoi(item.substr(caret + 1));
      } catch (const std::exception&) {
        throw UsageError("bad block size in " + item);
      }
      item = item.substr(0, caret);
    }
    if (!item.empty() && item.front() == '(') {
      auto comma = item.find(',');
      if (item.back() != ')' || comma == std::string::npos) throw UsageError("real block must be (mu,nu)^size");
      spec.blocks.push_back(JBlock::pair(family_expr(item.substr(1, comma - 1)),
                                         family_expr(item.substr(comma + 1, item.size() - comma - 2)), size));
      spec.field = Field::Real;
    } else {
      spec.blocks.push_back(JBlock::jordan(family_expr(item), size));
    }
  }
  if (spec.blocks.empty()) throw UsageError("no blocks given");
  return spec;
}

FamilyInstance build_family(const std::string& name, const FamilyArgs& fa) {
  auto need_n = [&](int lo) {
    if (fa.n < lo) throw UsageError("family " + name + " needs --n >= " + std::to_string(lo));
  };
  if (name == "t0") {
    need_n(2);
    return make_t0(fa.n);
  }
  if (name == "J") {
    if (!fa.blocks.empty()) return make_J(parse_blocks(fa.blocks));
    need_n(3);
    Expr lambda = fa.lambda.empty() ? Expr(0) : family_expr(fa.lambda);
    return make_J({{JBlock::jordan(lambda, fa.n - 1)}});
  }
  if (name == "s1" || name == "s2" || name == "s3" || name == "s4") {
    need_n(4);
    SParams p;
    if (!fa.alpha.empty()) p.alpha = family_expr(fa.alpha);
    if (!fa.beta.empty()) p.beta = family_expr(fa.beta);
    if (name == "s3") {
      if (fa.a.empty()) {
        p.a.assign(static_cast<std::size_t>(fa.n - 3), Expr(0));
        p.a[0] = Expr(1);
      } else {
        std::stringstream ss(fa.a);
        for (std::string t; std::getline(ss, t, ',');) p.a.push_back(family_expr(t));
      }
    }
    return make_s(name[1] - '0', fa.n, p);
  }
  if (name == "g638") return make_g638(fa.a.empty() ? Expr::param("a") : family_expr(fa.a));
  throw UsageError("unknown family " + name + " (t0, J, s1, s2, s3, s4, g638)");
}

int cmd_family(const std::string& name, const FamilyArgs& fa, const Options& o, std::ostream& out) {
  FamilyInstance f = build_family(name, fa);
  AlgebraDocument doc = document_of(f.algebra);
  doc.name = f.name;
  doc.notes = f.notes;
  for (const auto& fs : f.ordering)
    if (fs.sign < 0) doc.signs[fs.generator + 1] = -1;
  for (int p : f.pivot_hints) doc.pivots.push_back(p + 1);
  for (const auto& r : f.recipes) doc.recipes.push_back(r.name);
  doc.multipliers = f.multipliers;

  ojson dummy;
  Specialization spec = parameter_values(f.algebra, o, dummy);
  int ng = num_invariants(f.algebra, o.seed, o.trials, spec);
  bool all_ok = true;
  std::vector<bool> ok;
  for (const auto& e : f.expected) {
    bool v = check_invariant(f.algebra, e).ok;
    ok.push_back(v);
    all_ok = all_ok && v;
  }
  bool count_ok = ng == static_cast<int>(f.expected.size());

  if (o.format == "json") {
    auto j = ojson::parse(render_document_json(doc));
    j["expected"] = expr_list(f.expected, o);
    j["expected_verified"] = ok;
    j["num_invariants"] = ng;
    j["count_matches"] = count_ok;
    out << j.dump(2) << "\n";
  } else {
    out << render_document(doc);
    out << "# expected invariants (" << f.expected.size() << "):\n";
    for (std::size_t i = 0; i < f.expected.size(); ++i)
      out << "#   " << fmt(f.expected[i], o) << (ok[i] ? "" : "   [NOT INVARIANT]") << "\n";
    out << "# verification: " << (all_ok ? "every expected invariant passes check_invariant" : "FAILED") << "\n";
    out << "# num_invariants: " << ng << (count_ok ? "" : " (does not match the expected count)") << "\n";
  }
  return all_ok && count_ok ? kExitOk : kExitVerification;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Invariants of Lie algebra coadjoint actions by moving frames", "lieinv"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "seed for randomized rank computations")->capture_default_str();
  app.add_option("--trials", o.trials, "random points per rank computation")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--degree-bound", o.degree_bound, "PBW straightening degree bound")->capture_default_str();
  app.add_flag("--latex", o.latex, "render expressions as LaTeX");
  app.add_option("--format", o.format, "report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--set", o.set, "parameter value, name=p/q (repeatable)");

  std::string file, expr, family;
  FamilyArgs fa;
  auto* validate_cmd = app.add_subcommand("validate", "check antisymmetry and the Jacobi identity");
  validate_cmd->add_option("file", file, "algebra file, - for stdin")->required();
  auto* info_cmd = app.add_subcommand("info", "center, series, coadjoint rank, number of invariants");
  info_cmd->add_option("file", file, "algebra file, - for stdin")->required();
  auto* lifted_cmd = app.add_subcommand("lifted", "lifted invariants x B(theta)");
  lifted_cmd->add_option("file", file, "algebra file, - for stdin")->required();
  auto* inv_cmd = app.add_subcommand("invariants", "full pipeline: frame, elimination, rescaling, verification");
  inv_cmd->add_option("file", file, "algebra file, - for stdin")->required();
  auto* verify_cmd = app.add_subcommand("verify", "check that an expression is an invariant");
  verify_cmd->add_option("file", file, "algebra file, - for stdin")->required();
  verify_cmd->add_option("--expr", expr, "expression in x1..xn or the basis labels")->required();
  auto* family_cmd = app.add_subcommand("family", "emit a built-in algebra with its expected invariants");
  family_cmd->add_option("name", family, "t0, J, s1, s2, s3, s4 or g638")->required();
  family_cmd->add_option("--n", fa.n, "dimension parameter");
  family_cmd->add_option("--lambda", fa.lambda, "eigenvalue of the single Jordan block (J)");
  family_cmd->add_option("--blocks", fa.blocks, "J blocks, e.g. \"1^2;0^3\" or \"2;(1,1)^1\"");
  family_cmd->add_option("--a", fa.a, "parameter a (g638), or a_3,...,a_{n-1} (s3)");
  family_cmd->add_option("--alpha", fa.alpha, "alpha (s1)");
  family_cmd->add_option("--beta", fa.beta, "beta (s1)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(file, o, out, in);
    if (*info_cmd) return cmd_info(file, o, out, in);
    if (*lifted_cmd) return cmd_lifted(file, o, out, in);
    if (*inv_cmd) return cmd_invariants(file, o, out, in);
    if (*verify_cmd) return cmd_verify(file, expr, o, out, in);
    if (*family_cmd) return cmd_family(family, fa, o, out);
  } catch (const NeedsRecipe& e) {
    err << "needs recipe: " << e.what() << "\n";
    return kExitPartial;
  } catch (const ValidationFailed& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lieinv
