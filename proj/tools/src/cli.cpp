#include "twistq_cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "twistq/twistq.hpp"

namespace twistq::cli {

namespace {

struct Options {
  std::string type = "A2-2";
  bool json = false;
  int depth = 6;
  int window = 12;
  std::string mu;
  std::string param = "1";
  std::string suite = "structural,g,pij,delta,rho";
  std::string type_positional;
  std::vector<std::string> exprs;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

Coweight parse_coweight(const std::string& s, const CartanData& cd) {
  if (s.empty()) throw InputError("--mu is required (comma-separated integers in I0 order)");
  Coweight mu;
  for (const auto& tok : split(s, ',')) {
    int v = 0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) throw InputError("bad coweight entry '" + tok + "'");
    mu.coeffs.push_back(v);
  }
  if (static_cast<int>(mu.coeffs.size()) != cd.rank())
    throw InputError("coweight needs " + std::to_string(cd.rank()) + " entries for " + cd.type.token());
  return mu;
}

std::vector<Unit> parse_weight(const std::string& s, const CartanData& cd) {
  std::vector<Unit> w;
  for (const auto& tok : split(s, ',')) w.push_back(parse_unit(tok, cd.L));
  if (static_cast<int>(w.size()) != cd.rank())
    throw InputError("weight needs " + std::to_string(cd.rank()) + " entries for " + cd.type.token());
  return w;
}

template <class T>
std::string join(const std::vector<T>& v, const std::function<std::string(const T&)>& f, const char* sep = " ") {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += sep;
    s += f(v[k]);
  }
  return s;
}

std::string ints(const std::vector<int>& v) {
  return join<int>(v, [](const int& x) { return std::to_string(x); });
}

std::string units(const std::vector<Unit>& v) {
  return join<Unit>(v, [](const Unit& u) { return format_unit(u); }, ", ");
}

// Everything a handler needs; output is written to out.
struct Ctx {
  const Options& opt;
  std::ostream& out;
  std::ostream& err;

  const CartanData& cd() const { return cartan_data_ref(TwistedType::parse(opt.type)); }
  const std::string& expr(std::size_t k) const {
    if (k >= opt.exprs.size()) throw InputError("missing expression argument");
    return opt.exprs[k];
  }
  LWeight lweight(std::size_t k) const { return lw_eval(cd(), parse_lweight(expr(k), cd())); }
  void emit(const Json& j) const { out << j.dump(2) << '\n'; }
};

// ------------------------------------------------------------------ handlers

int do_cartan(const Ctx& c) {
  const std::string tok = c.opt.type_positional.empty() ? c.opt.type : c.opt.type_positional;
  const CartanData cd = cartan_data(TwistedType::parse(tok));
  if (c.opt.json) {
    c.emit(to_json(cd));
    return kOk;
  }
  auto& o = c.out;
  o << "type         " << cd.type.token() << "  (folded finite part " << finite_type(cd) << ")\n";
  o << "I            " << ints(cd.I) << '\n';
  o << "I0           " << ints(cd.I0) << '\n';
  o << "sigma        " << ints(cd.sigma) << '\n';
  o << "d            " << join<Rational>(cd.d, [](const Rational& r) { return r.get_str(); }) << '\n';
  o << "marks        " << ints(cd.marks) << '\n';
  o << "N            " << ints(cd.N) << '\n';
  o << "iota         " << ints(cd.iota) << '\n';
  o << "zeta order   " << cd.L << '\n';
  o << "Csigma (rows 0.." << cd.rank() << ")\n";
  for (const auto& row : cd.Csigma) o << "  " << ints(row) << '\n';
  return kOk;
}

int do_eval(const Ctx& c) {
  const auto& cd = c.cd();
  const GenMonomial m = parse_lweight(c.expr(0), cd);
  const LWeight x = lw_eval(cd, m);
  if (c.opt.json) {
    c.emit(Json{{"monomial", to_json(m)}, {"lweight", to_json(x)}, {"pretty", format_lweight(x)}});
    return kOk;
  }
  c.out << "monomial  " << format_monomial(m) << '\n';
  c.out << "lweight   " << format_lweight(x) << '\n';
  return kOk;
}

int do_degree(const Ctx& c) {
  const LWeight x = c.lweight(0);
  const auto deg = lw_degree(x);
  const auto v0 = lw_value0(x);
  const auto vi = lw_value_inf(x);
  if (c.opt.json) {
    Json a = Json::array(), b = Json::array();
    for (const auto& u : v0) a.push_back(format_unit(u));
    for (const auto& u : vi) b.push_back(format_unit(u));
    c.emit(Json{{"degree", deg}, {"value0", a}, {"value_inf", b}});
    return kOk;
  }
  c.out << "degree     " << ints(deg) << '\n';
  c.out << "value0     " << units(v0) << '\n';
  c.out << "value_inf  " << units(vi) << '\n';
  return kOk;
}

std::string certificate_text(const Certificate& cert) {
  struct V {
    std::string operator()(const std::monostate&) const { return "-"; }
    std::string operator()(const GenMonomial& m) const { return format_monomial(m); }
    std::string operator()(const std::vector<Rational>& v) const {
      return "n = (" + join<Rational>(v, [](const Rational& r) { return r.get_str(); }, ", ") + ")";
    }
    std::string operator()(int node) const { return "node " + std::to_string(node); }
    std::string operator()(const Coweight& mu) const { return "mu = (" + ints(mu.coeffs) + ")"; }
  };
  return std::visit(V{}, cert);
}

int report(const Ctx& c, const ClassifyReport& r) {
  if (c.opt.json) {
    c.emit(to_json(r));
  } else {
    c.out << "verdict      " << (r.verdict ? "true" : "false") << '\n';
    c.out << "certificate  " << certificate_text(r.certificate) << '\n';
    if (r.scope) c.out << "scope        " << *r.scope << '\n';
    if (!r.notes.empty()) c.out << "notes        " << r.notes << '\n';
  }
  return r.verdict ? kOk : kVerdictFalse;
}

int do_classify_lambda(const Ctx& c) {
  const auto& cd = c.cd();
  const Coweight mu = parse_coweight(c.opt.mu, cd);
  ClassifyReport a = in_Lambda(cd, mu);
  ClassifyReport b = is_dominant_coweight(cd, mu);
  if (c.opt.json) {
    c.emit(Json{{"in_Lambda", to_json(a)}, {"dominant", to_json(b)}});
  } else {
    c.out << "in Lambda    " << (a.verdict ? "true" : "false") << "  " << certificate_text(a.certificate) << '\n';
    c.out << "dominant     " << (b.verdict ? "true" : "false") << "  " << certificate_text(b.certificate) << '\n';
  }
  return a.verdict ? kOk : kVerdictFalse;
}

int do_classify_dominant(const Ctx& c) { return report(c, is_dominant_lweight(c.cd(), c.lweight(0))); }

int do_classify_mu(const Ctx& c) { return report(c, mu_of(c.cd(), c.lweight(0))); }

int do_classify_rmu(const Ctx& c) {
  const auto& cd = c.cd();
  return report(c, in_r_mu(cd, c.lweight(0), parse_coweight(c.opt.mu, cd)));
}

int do_classify_order(const Ctx& c) {
  const auto& cd = c.cd();
  return report(c, leq_weight(cd, parse_weight(c.expr(0), cd), parse_weight(c.expr(1), cd)));
}

int do_classify_a22(const Ctx& c) {
  const auto& cd = c.cd();
  const A22Result r = factor_a22(cd, c.lweight(0));
  if (c.opt.json) {
    c.emit(to_json(r));
  } else if (!r.factorization) {
    c.out << "factorization  none (" << r.failure << ")\n";
  } else {
    const auto& f = *r.factorization;
    c.out << "gamma   " << format_unit(f.gamma) << '\n';
    for (const auto& p : f.pairs) {
      c.out << "pair    a=" << format_param(p.a) << "  b=" << format_param(p.b) << "  "
            << (p.finite ? "F, T=" + std::to_string(p.T) : std::string("J")) << '\n';
    }
    for (const auto& x : f.cs) c.out << "psi+    c=" << format_param(x) << '\n';
    c.out << "search  " << r.nodes_visited << " nodes\n";
  }
  return r.factorization ? kOk : kVerdictFalse;
}

int emit_qchar(const Ctx& c, const QCharacter& q) {
  if (c.opt.json) {
    c.emit(to_json(q).at("terms"));
    return kOk;
  }
  c.out << "# " << q.size() << " terms, depth " << (q.depth ? std::to_string(*q.depth) : std::string("exact"))
        << '\n';
  // Leading term first, then by grade.
  std::vector<const std::pair<const LWeight, QTerm>*> rows;
  for (const auto& kv : q.terms) rows.push_back(&kv);
  std::stable_sort(rows.begin(), rows.end(), [](auto* a, auto* b) { return a->second.grade < b->second.grade; });
  for (const auto* kv : rows) {
    c.out << kv->second.mult.get_str() << "  " << format_lweight(kv->first) << "   [" << format_monomial(kv->second.cert)
          << "]\n";
  }
  return kOk;
}

QCharacter simple_character(const Ctx& c, std::size_t k) {
  const auto& cd = c.cd();
  const LWeight x = c.lweight(k);
  if (cd.type.family == Family::AEven && cd.type.n == 1) {
    // gamma * Psi_c^{-1} has its own closed series.
    const auto& f = x.at(1);
    if (f.zpow() == 0 && f.factors().size() == 1 && f.factors().begin()->second == -1) {
      const QCharacter neg = qc_a22_neg_prefundamental(f.factors().begin()->first, c.opt.depth);
      return qc_mul(qc_class(LWeight::constant(cd.type, {f.constant()})), neg);
    }
    return qc_a22_simple(cd, x, c.opt.depth);
  }
  // Polynomial components give a one-dimensional module whose character is [x].
  if (one_dim_exists(x, c.opt.window).exists) return qc_class(x);
  throw UnsupportedError("closed q-character expansions are available only for A2-2 and one-dimensional modules");
}

int do_qchar_simple(const Ctx& c) { return emit_qchar(c, simple_character(c, 0)); }

int do_qchar_fuse(const Ctx& c) {
  return emit_qchar(c, qc_truncate(qc_mul(simple_character(c, 0), simple_character(c, 1)), c.opt.depth));
}

int do_borel(const Ctx& c) {
  const auto& cd = c.cd();
  const Coweight mu = parse_coweight(c.opt.mu, cd);
  std::vector<QCharacter> chi;
  for (int i : cd.I0) chi.push_back(placeholder_borel_chi(cd, i, c.opt.depth));
  c.err << "note: chi_i are placeholder series, not the Borel prefundamental characters\n";
  return emit_qchar(c, borel_qchar(cd, simple_character(c, 0), mu, chi, c.opt.depth));
}

int do_fuse(const Ctx& c) {
  const LWeight x = coproduct_hw(c.lweight(0), c.lweight(1));
  const LWeight s = specialize_u1(x);
  if (c.opt.json) {
    c.emit(Json{{"deformed", to_json(x)}, {"specialized", to_json(s)}, {"degree", lw_degree(s)}});
    return kOk;
  }
  c.out << "deformed     " << format_lweight(x) << '\n';
  c.out << "u = 1        " << format_lweight(s) << '\n';
  c.out << "degree       " << ints(lw_degree(s)) << '\n';
  return kOk;
}

int do_shift(const Ctx& c) {
  const auto& cd = c.cd();
  const LWeight in = c.lweight(0);
  const LWeight x = shift_lweight(cd, in, parse_coweight(c.opt.mu, cd), parse_param(c.opt.param, cd.L));
  if (c.opt.json) {
    c.emit(Json{{"lweight", to_json(x)}, {"degree_in", lw_degree(in)}, {"degree_out", lw_degree(x)}});
    return kOk;
  }
  c.out << "lweight      " << format_lweight(x) << '\n';
  c.out << "degree       " << ints(lw_degree(in)) << " -> " << ints(lw_degree(x)) << '\n';
  return kOk;
}

int do_check(const Ctx& c) {
  std::vector<std::string> scope;
  if (!c.opt.suite.empty())
    for (auto& s : split(c.opt.suite, ',')) scope.push_back(s);
  std::vector<TwistedType> fams;
  if (c.opt.type == "all") {
    fams = default_families();
  } else {
    for (const auto& t : split(c.opt.type, ',')) fams.push_back(TwistedType::parse(t));
  }
  const SuiteReport r = run_suite(scope, fams, c.opt.window);
  for (const auto& w : r.warnings) c.err << "warning: " << w << '\n';
  if (c.opt.json) {
    c.emit(to_json(r));
  } else {
    for (const auto& x : r.results) {
      c.out << (x.pass ? "PASS  " : "FAIL  ") << x.name << "  " << x.target << "  " << x.item;
      if (!x.pass && !x.detail.empty()) c.out << "  -- " << x.detail;
      c.out << '\n';
    }
    c.out << r.results.size() << " checks, " << r.failures() << " failures\n";
  }
  return r.pass() ? kOk : kVerdictFalse;
}

int guarded(const std::string& where, std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "twistq " << where << ": syntax error " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "twistq " << where << ": input error: " << e.what() << '\n';
    return kInputError;
  } catch (const UnsupportedError& e) {
    err << "twistq " << where << ": unsupported: " << e.what() << '\n';
    return kInputError;
  } catch (const InternalError& e) {
    err << "twistq " << where << ": internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::exception& e) {
    err << "twistq " << where << ": internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  std::string batch_file;
  std::function<int(const Ctx&)> handler;
  std::string where = "cli";

  CLI::App app{"Exact l-weight and q-character computations for shifted twisted quantum affine algebras", "twistq"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--type", opt.type, "Type token: A2-2, A4-2, A5-2, D5-2, E6-2, D4-3, ... (check also accepts 'all')");
  app.add_flag("--json", opt.json, "Emit JSON instead of text");
  app.add_option("--depth", opt.depth, "Truncation depth (A-letters)")->check(CLI::NonNegativeNumber);
  app.add_option("--window", opt.window, "Coefficient window for delta checks")->check(CLI::PositiveNumber);
  app.add_option("--mu", opt.mu, "Coweight as comma-separated integers in I0 order");

  auto bind = [&](CLI::App* sub, const std::string& name, std::function<int(const Ctx&)> h) {
    sub->callback([&, name, h] {
      where = name;
      handler = h;
    });
  };
  auto with_exprs = [&](CLI::App* sub, const std::string& what, int n) {
    sub->add_option("expr", opt.exprs, what)->required()->expected(n);
  };

  auto* cartan = app.add_subcommand("cartan", "Folded Cartan data of a type");
  cartan->add_option("type", opt.type_positional, "Type token");
  bind(cartan, "cartan", do_cartan);

  auto* eval = app.add_subcommand("eval", "Evaluate a generator monomial to its factored l-weight");
  with_exprs(eval, "l-weight expression", 1);
  bind(eval, "eval", do_eval);

  auto* degree = app.add_subcommand("degree", "Degree vector and values at 0 and infinity");
  with_exprs(degree, "l-weight expression", 1);
  bind(degree, "degree", do_degree);

  auto* classify = app.add_subcommand("classify", "Classification predicates");
  classify->require_subcommand(1);
  auto* c_lambda = classify->add_subcommand("lambda", "Lambda and Lambda+ membership of --mu");
  bind(c_lambda, "classify lambda", do_classify_lambda);
  auto* c_dom = classify->add_subcommand("dominant", "Dominance of an l-weight");
  with_exprs(c_dom, "l-weight expression", 1);
  bind(c_dom, "classify dominant", do_classify_dominant);
  auto* c_mu = classify->add_subcommand("mu", "The coweight mu with alpha_i(mu) = deg x_i");
  with_exprs(c_mu, "l-weight expression", 1);
  bind(c_mu, "classify mu", do_classify_mu);
  auto* c_rmu = classify->add_subcommand("rmu", "Membership of an l-weight in r_mu for --mu");
  with_exprs(c_rmu, "l-weight expression", 1);
  bind(c_rmu, "classify rmu", do_classify_rmu);
  auto* c_order = classify->add_subcommand("order", "Weight order w1 <= w2 (comma-separated unit tuples)");
  with_exprs(c_order, "weights w1 w2", 2);
  bind(c_order, "classify order", do_classify_order);
  auto* c_a22 = classify->add_subcommand("a22", "A2-2 factorization into pairs and positive prefundamentals");
  with_exprs(c_a22, "l-weight expression", 1);
  bind(c_a22, "classify a22", do_classify_a22);

  auto* qchar = app.add_subcommand("qchar", "q-characters");
  qchar->require_subcommand(1);
  auto* q_simple = qchar->add_subcommand("simple", "q-character of the simple module");
  with_exprs(q_simple, "l-weight expression", 1);
  bind(q_simple, "qchar simple", do_qchar_simple);
  auto* q_fuse = qchar->add_subcommand("fuse", "q-character of a fusion product");
  with_exprs(q_fuse, "two l-weight expressions", 2);
  bind(q_fuse, "qchar fuse", do_qchar_fuse);
  auto* q_borel = qchar->add_subcommand("borel", "Restriction identity with placeholder chi_i");
  with_exprs(q_borel, "l-weight expression", 1);
  bind(q_borel, "qchar borel", do_borel);

  auto* fuse = app.add_subcommand("fuse", "Highest l-weight of the deformed coproduct and its u = 1 value");
  with_exprs(fuse, "two l-weight expressions", 2);
  bind(fuse, "fuse", do_fuse);

  auto* shift = app.add_subcommand("shift", "Shift map by --mu (with -mu dominant) at --param");
  with_exprs(shift, "l-weight expression", 1);
  shift->add_option("--param", opt.param, "Spectral parameter a");
  bind(shift, "shift", do_shift);

  auto* borel = app.add_subcommand("borel", "Same as 'qchar borel'");
  with_exprs(borel, "l-weight expression", 1);
  bind(borel, "borel", do_borel);

  auto* check = app.add_subcommand("check", "Run the relation-check suite");
  check->add_option("--suite", opt.suite, "Comma-separated subset of structural,g,pij,delta,rho");
  bind(check, "check", [&](const Ctx& c) {
    // check defaults to every family unless --type was given explicitly.
    Options o = c.opt;
    if (app.count("--type") == 0) o.type = "all";
    return do_check(Ctx{o, c.out, c.err});
  });

  auto* run_cmd = app.add_subcommand("run", "Execute a TOML batch file");
  run_cmd->add_option("file", batch_file, "Batch file")->required()->check(CLI::ExistingFile);
  bind(run_cmd, "run", [&](const Ctx& c) { return run_batch(batch_file, c.out, c.err); });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  if (!handler) {
    err << app.help();
    return kInputError;
  }
  const Ctx ctx{opt, out, err};
  return guarded(where, err, [&] { return handler(ctx); });
}

}  // namespace twistq::cli
