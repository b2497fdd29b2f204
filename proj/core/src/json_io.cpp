#include "twistq/json_io.hpp"

#include "twistq/syntax.hpp"

namespace twistq {

namespace {

Json rational_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return r.get_str();
}

Json units_json(const std::vector<Unit>& us) {
  Json a = Json::array();
  for (const auto& u : us) a.push_back(format_unit(u));
  return a;
}

}  // namespace

Json to_json(const TwistedType& t) {
  static const char* names[] = {"A-even", "A-odd", "D", "E6", "D4-triple"};
  return Json{{"token", t.token()}, {"family", names[static_cast<int>(t.family)]}, {"n", t.n}, {"M", t.M}};
}

Json to_json(const CartanData& cd) {
  Json d = Json::array();
  for (const auto& x : cd.d) d.push_back(rational_json(x));
  return Json{{"type", to_json(cd.type)},
              {"I", cd.I},
              {"I0", cd.I0},
              {"sigma", cd.sigma},
              {"C", cd.C},
              {"Csigma", cd.Csigma},
              {"d", d},
              {"N", cd.N},
              {"iota", cd.iota},
              {"marks", cd.marks},
              {"zeta_order", cd.L},
              {"finite_type", finite_type(cd)}};
}

Json to_json(const SpectralParam& p) {
  return Json{{"eps", p.eps}, {"qexp", p.qexp.over_two()}, {"uexp", p.uexp}, {"text", format_param(p)}};
}

Json to_json(const RationalFn& f) {
  Json factors = Json::array();
  for (const auto& [a, m] : f.factors())
    factors.push_back(Json{{"eps", a.eps}, {"qexp", a.qexp.over_two()}, {"uexp", a.uexp}, {"mult", m}});
  Json j{{"constant", format_unit(f.constant())}, {"factors", factors}};
  if (f.zpow() != 0) j["zpow"] = f.zpow();
  return j;
}

Json to_json(const LWeight& x) {
  Json comps = Json::array();
  for (const auto& f : x.components()) comps.push_back(to_json(f));
  return Json{{"type", x.type().token()}, {"components", comps}};
}

Json to_json(const GenMonomial& m) {
  Json letters = Json::array();
  for (const auto& [k, e] : m.exps)
    letters.push_back(Json{{"gen", gen_symbol(k.kind)}, {"node", k.node}, {"param", format_param(k.param)}, {"exp", e}});
  Json j{{"text", format_monomial(m)}, {"letters", letters}};
  j["gamma"] = m.gamma_trivial() ? Json(nullptr) : units_json(m.gamma);
  return j;
}

Json to_json(const ClassifyReport& r) {
  Json j{{"verdict", r.verdict}, {"notes", r.notes}};
  j["scope"] = r.scope ? Json(*r.scope) : Json(nullptr);
  struct Visitor {
    Json& out;
    void operator()(const std::monostate&) const { out["certificate"] = nullptr; }
    void operator()(const GenMonomial& m) const { out["certificate"] = Json{{"kind", "monomial"}, {"value", to_json(m)}}; }
    void operator()(const std::vector<Rational>& v) const {
      Json a = Json::array();
      for (const auto& x : v) a.push_back(rational_json(x));
      out["certificate"] = Json{{"kind", "exponents"}, {"value", a}};
    }
    void operator()(int node) const { out["certificate"] = Json{{"kind", "violating_node"}, {"value", node}}; }
    void operator()(const Coweight& mu) const { out["certificate"] = Json{{"kind", "coweight"}, {"value", mu.coeffs}}; }
  };
  std::visit(Visitor{j}, r.certificate);
  return j;
}

Json to_json(const A22Result& r) {
  Json j{{"ok", r.factorization.has_value()}, {"nodes_visited", r.nodes_visited}};
  if (!r.factorization) {
    j["failure"] = r.failure;
    return j;
  }
  const auto& f = *r.factorization;
  Json pairs = Json::array();
  for (const auto& p : f.pairs) {
    Json q{{"a", format_param(p.a)}, {"b", format_param(p.b)}, {"set", p.finite ? "F" : "J"}};
    if (p.finite) q["T"] = p.T;
    pairs.push_back(q);
  }
  Json cs = Json::array();
  for (const auto& c : f.cs) cs.push_back(format_param(c));
  j["gamma"] = format_unit(f.gamma);
  j["pairs"] = pairs;
  j["psi_plus"] = cs;
  return j;
}

Json to_json(const QCharacter& c) {
  Json terms = Json::array();
  for (const auto& [x, t] : c.terms)
    terms.push_back(Json{{"lweight", to_json(x)},
                         {"pretty", format_lweight(x)},
                         {"multiplicity", t.mult.get_str()},
                         {"grade", t.grade},
                         {"a_certificate", format_monomial(t.cert)}});
  Json j{{"type", c.type.token()}, {"leading", to_json(c.leading)}, {"terms", terms}, {"size", c.terms.size()}};
  j["depth"] = c.depth ? Json(*c.depth) : Json("exact");
  return j;
}

Json to_json(const DeltaSupport& d) {
  Json coeffs = Json::object();
  for (const auto& [n, s] : d.coeffs) coeffs[std::to_string(n)] = format_scalar(s);
  Json support = Json::array();
  for (const auto& [a, k] : d.support) support.push_back(Json{{"param", format_param(a)}, {"order", k}});
  return Json{{"window", d.window}, {"coefficients", coeffs}, {"support", support},
              {"annihilated", d.annihilated}, {"minimal", d.minimal}};
}

Json to_json(const CheckResult& r) {
  return Json{{"check", r.name}, {"type", r.target}, {"item", r.item}, {"pass", r.pass}, {"detail", r.detail}};
}

Json to_json(const SuiteReport& r) {
  Json results = Json::array();
  for (const auto& c : r.results) results.push_back(to_json(c));
  return Json{{"pass", r.pass()}, {"failures", r.failures()}, {"results", results}, {"warnings", r.warnings}};
}

LWeight lweight_from_json(const Json& j, const TwistedType& t) {
  const int L = t.zeta_order();
  std::vector<RationalFn> comps;
  for (const auto& c : j.at("components")) {
    RationalFn f(parse_unit(c.at("constant").get<std::string>(), L));
    for (const auto& fa : c.at("factors")) {
      const std::string qe = fa.at("qexp").get<std::string>();
      const auto slash = qe.find('/');
      if (slash == std::string::npos || qe.substr(slash) != "/2") throw InputError("qexp must read p/2");
      const SpectralParam a(L, fa.at("eps").get<int>(), HalfInt::from_twice(std::stol(qe.substr(0, slash))),
                            fa.at("uexp").get<int>());
      f.mul_linear(a, fa.at("mult").get<int>());
    }
    if (c.contains("zpow")) throw InputError("components with a z-power are not accepted");
    comps.push_back(std::move(f));
  }
  return LWeight(t, std::move(comps));
}

}  // namespace twistq
