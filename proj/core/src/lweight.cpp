#include "twistq/lweight.hpp"

#include "twistq/error.hpp"

namespace twistq {

LWeight::LWeight(TwistedType t, std::vector<RationalFn> comps) : type_(t), comps_(std::move(comps)) {
  if (static_cast<int>(comps_.size()) != type_.rank())
    throw InputError("l-weight for " + type_.token() + " needs " + std::to_string(type_.rank()) + " components");
  for (const auto& c : comps_)
    if (c.order() != type_.zeta_order()) throw InternalError("component over the wrong scalar ring");
}

LWeight LWeight::one(const TwistedType& t) {
  return LWeight(t, std::vector<RationalFn>(static_cast<std::size_t>(t.rank()), RationalFn::one(t.zeta_order())));
}

LWeight LWeight::constant(const TwistedType& t, const std::vector<Unit>& gamma) {
  if (static_cast<int>(gamma.size()) != t.rank()) throw InputError("constant tuple has the wrong length");
  std::vector<RationalFn> comps;
  for (const auto& g : gamma) comps.emplace_back(g);
  return LWeight(t, std::move(comps));
}

bool LWeight::is_one() const {
  for (const auto& c : comps_)
    if (!c.is_one()) return false;
  return true;
}

std::strong_ordering LWeight::operator<=>(const LWeight& o) const {
  if (auto c = type_ <=> o.type_; c != 0) return c;
  if (auto c = comps_.size() <=> o.comps_.size(); c != 0) return c;
  for (std::size_t k = 0; k < comps_.size(); ++k)
    if (auto c = comps_[k] <=> o.comps_[k]; c != 0) return c;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- monomials

const char* gen_symbol(GenKind k) {
  switch (k) {
    case GenKind::Y: return "Y";
    case GenKind::Ytilde: return "Yt";
    case GenKind::Psi: return "P";
    case GenKind::A: return "A";
  }
  return "?";
}

SpectralParam canonical_param(const CartanData& cd, GenKind, int i, const SpectralParam& a) {
  cd.require_I0(i);
  if (a.L != cd.L) throw InputError("parameter lives over the wrong root-of-unity order");
  if (!cd.fixed(i)) return a;
  const int period = cd.L / cd.M();
  return SpectralParam(a.L, mod_floor(a.eps, period), a.qexp, a.uexp);
}

void GenMonomial::add(const CartanData& cd, GenKind k, int node, const SpectralParam& a, int e) {
  if (e == 0) return;
  GenKey key{k, node, canonical_param(cd, k, node, a)};
  auto [it, inserted] = exps.emplace(key, e);
  if (!inserted) {
    it->second += e;
    if (it->second == 0) exps.erase(it);
  }
}

bool GenMonomial::gamma_trivial() const {
  for (const auto& g : gamma)
    if (!g.is_one()) return false;
  return true;
}

void GenMonomial::mul_gamma(const std::vector<Unit>& g) {
  if (g.empty()) return;
  if (gamma.empty()) {
    gamma = g;
  } else {
    if (g.size() != gamma.size()) throw InternalError("constant tuple length mismatch");
    for (std::size_t k = 0; k < g.size(); ++k) gamma[k] = gamma[k] * g[k];
  }
  if (gamma_trivial()) gamma.clear();
}

std::size_t GenMonomial::letters() const {
  std::size_t n = 0;
  for (const auto& [k, e] : exps) n += static_cast<std::size_t>(e < 0 ? -e : e);
  return n;
}

GenMonomial GenMonomial::operator*(const GenMonomial& o) const {
  if (type != o.type) throw InputError("monomials of different types");
  GenMonomial r(*this);
  for (const auto& [k, e] : o.exps) {
    auto [it, inserted] = r.exps.emplace(k, e);
    if (!inserted) {
      it->second += e;
      if (it->second == 0) r.exps.erase(it);
    }
  }
  r.mul_gamma(o.gamma);
  return r;
}

GenMonomial GenMonomial::inverse() const { return pow(-1); }

GenMonomial GenMonomial::pow(int e) const {
  GenMonomial r{type, {}, {}};
  if (e == 0) return r;
  for (const auto& [k, x] : exps) r.exps.emplace(k, x * e);
  for (const auto& g : gamma) r.gamma.push_back(g.pow(e));
  if (r.gamma_trivial()) r.gamma.clear();
  return r;
}

bool GenMonomial::operator==(const GenMonomial& o) const {
  return type == o.type && exps == o.exps && gamma_trivial() == o.gamma_trivial() &&
         (gamma_trivial() || gamma == o.gamma);
}

// ---------------------------------------------------------------- generators

namespace {

LWeight single(const CartanData& cd, int i, RationalFn f) {
  LWeight x = LWeight::one(cd.type);
  x.at(cd.index_of(i) + 1) = std::move(f);
  return x;
}

RationalFn y_component(const CartanData& cd, int i, const SpectralParam& a, bool with_constant) {
  const int L = cd.L;
  if (cd.fixed(i)) {
    const int M = cd.M();
    RationalFn f(with_constant ? Unit::q_power(L, HalfInt(M)) : Unit::one(L));
    for (int s = 1; s <= M; ++s) {
      const SpectralParam b = a.times_root(M, s);
      f.mul_linear(b.shift(HalfInt(-1)), 1);
      f.mul_linear(b.shift(HalfInt(1)), -1);
    }
    return f;
  }
  RationalFn f(with_constant ? Unit::q_power(L, HalfInt(1)) : Unit::one(L));
  f.mul_linear(a.shift(HalfInt(-1)), 1);
  f.mul_linear(a.shift(HalfInt(1)), -1);
  return f;
}

}  // namespace

LWeight gen_Y(const CartanData& cd, int i, const SpectralParam& a) {
  return single(cd, i, y_component(cd, i, canonical_param(cd, GenKind::Y, i, a), true));
}

LWeight gen_Ytilde(const CartanData& cd, int i, const SpectralParam& a) {
  return single(cd, i, y_component(cd, i, canonical_param(cd, GenKind::Ytilde, i, a), false));
}

LWeight gen_Psi(const CartanData& cd, int i, const SpectralParam& a) {
  const SpectralParam c = canonical_param(cd, GenKind::Psi, i, a);
  const int iota = cd.iota_of(i);
  RationalFn f = RationalFn::one(cd.L);
  for (int s = 1; s <= iota; ++s) f.mul_linear(c.times_root(iota, s), 1);
  return single(cd, i, std::move(f));
}

GenMonomial A_as_Y(const CartanData& cd, int i, const SpectralParam& a) {
  cd.require_I0(i);
  GenMonomial m = GenMonomial::identity(cd.type);
  m.add(cd, GenKind::Y, i, a.shift(HalfInt(1)), 1);
  m.add(cd, GenKind::Y, i, a.shift(HalfInt(-1)), 1);
  const int self = cd.c(i, cd.sig(i));
  if (self == -1) m.add(cd, GenKind::Y, i, a.negated(), -1);
  for (int j : cd.neighbours(i)) {
    if (self == 2 && !cd.fixed(j)) {
      for (int s = 1; s <= cd.M(); ++s) m.add(cd, GenKind::Y, j, a.times_root(cd.M(), s), -1);
    } else {
      m.add(cd, GenKind::Y, j, a, -1);
    }
  }
  return m;
}

LWeight gen_A(const CartanData& cd, int i, const SpectralParam& a) { return lw_eval(cd, A_as_Y(cd, i, a)); }

LWeight gen(const CartanData& cd, GenKind k, int i, const SpectralParam& a) {
  switch (k) {
    case GenKind::Y: return gen_Y(cd, i, a);
    case GenKind::Ytilde: return gen_Ytilde(cd, i, a);
    case GenKind::Psi: return gen_Psi(cd, i, a);
    case GenKind::A: return gen_A(cd, i, a);
  }
  throw InternalError("unknown generator kind");
}

// ---------------------------------------------------------------- arithmetic

LWeight lw_mul(const LWeight& x, const LWeight& y) {
  if (x.type() != y.type()) throw InputError("l-weights of different types");
  std::vector<RationalFn> c;
  c.reserve(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) c.push_back(x.components()[k] * y.components()[k]);
  return LWeight(x.type(), std::move(c));
}

LWeight lw_inv(const LWeight& x) {
  std::vector<RationalFn> c;
  for (const auto& f : x.components()) c.push_back(f.inverse());
  return LWeight(x.type(), std::move(c));
}

LWeight lw_pow(const LWeight& x, int e) {
  std::vector<RationalFn> c;
  for (const auto& f : x.components()) c.push_back(f.pow(e));
  return LWeight(x.type(), std::move(c));
}

LWeight lw_eval(const CartanData& cd, const GenMonomial& m) {
  if (m.type != cd.type) throw InputError("monomial type differs from Cartan data");
  std::vector<RationalFn> comps(static_cast<std::size_t>(cd.rank()), RationalFn::one(cd.L));
  // Generators touch few components; multiply component-wise directly.
  for (const auto& [key, e] : m.exps) {
    if (key.kind == GenKind::A) {
      const LWeight a = lw_pow(gen_A(cd, key.node, key.param), e);
      for (std::size_t k = 0; k < comps.size(); ++k) comps[k] *= a.components()[k];
      continue;
    }
    const LWeight g = gen(cd, key.kind, key.node, key.param);
    const std::size_t k = static_cast<std::size_t>(cd.index_of(key.node));
    comps[k] *= g.components()[k].pow(e);
  }
  if (!m.gamma.empty()) {
    if (m.gamma.size() != comps.size()) throw InputError("constant tuple has the wrong length");
    for (std::size_t k = 0; k < comps.size(); ++k) comps[k].mul_constant(m.gamma[k]);
  }
  return LWeight(cd.type, std::move(comps));
}

std::vector<int> lw_degree(const LWeight& x) {
  std::vector<int> d;
  for (const auto& f : x.components()) d.push_back(f.degree());
  return d;
}

std::vector<Unit> lw_value0(const LWeight& x) {
  std::vector<Unit> v;
  for (const auto& f : x.components()) v.push_back(f.value_at_zero());
  return v;
}

std::vector<Unit> lw_value_inf(const LWeight& x) {
  std::vector<Unit> v;
  for (const auto& f : x.components()) v.push_back(f.leading_at_infinity());
  return v;
}

Series lw_expand(const LWeight& x, int i, Point at, int order) {
  if (i < 1 || i > static_cast<int>(x.size())) throw InputError("component index out of range");
  return at == Point::Zero ? x.at(i).expand_at_zero(order) : x.at(i).expand_at_infinity(order);
}

// ---------------------------------------------------------------- shifts

LWeight shift_lweight(const CartanData& cd, const LWeight& x, const Coweight& mu_prime, const SpectralParam& a) {
  if (x.type() != cd.type) throw InputError("l-weight type differs from Cartan data");
  LWeight out = x;
  for (int i : cd.I0) {
    const int alpha = pairing(cd, mu_prime, i);
    if (alpha > 0) throw InputError("shift coweight must be antidominant (alpha_" + std::to_string(i) + " > 0)");
    const int iota = cd.iota_of(i);
    if (alpha % iota != 0)
      throw InputError("iota_" + std::to_string(i) + " does not divide alpha_" + std::to_string(i) + "(mu')");
    const int n = -alpha / iota;
    if (n == 0) continue;
    RationalFn f = RationalFn::one(cd.L);
    for (int s = 1; s <= iota; ++s) f.mul_linear(a.times_root(iota, s), n);
    out.at(cd.index_of(i) + 1) *= f;
  }
  return out;
}

LWeight coproduct_hw(const LWeight& x, const LWeight& y) {
  if (x.type() != y.type()) throw InputError("l-weights of different types");
  const SpectralParam u(x.order(), 0, HalfInt(0), 1);
  std::vector<RationalFn> c;
  for (std::size_t k = 0; k < x.size(); ++k)
    c.push_back(x.components()[k] * y.components()[k].substitute_scaled(u));
  return LWeight(x.type(), std::move(c));
}

LWeight specialize_u1(const LWeight& x) {
  std::vector<RationalFn> c;
  for (const auto& f : x.components()) c.push_back(f.drop_u());
  return LWeight(x.type(), std::move(c));
}

Dictionary Dictionary::of(std::initializer_list<GenKind> ks) {
  Dictionary d;
  for (GenKind k : ks) {
    switch (k) {
      case GenKind::Y: d.Y = true; break;
      case GenKind::Ytilde: d.Ytilde = true; break;
      case GenKind::Psi: d.Psi = true; break;
      case GenKind::A: d.A = true; break;
    }
  }
  return d;
}

bool Dictionary::has(GenKind k) const {
  switch (k) {
    case GenKind::Y: return Y;
    case GenKind::Ytilde: return Ytilde;
    case GenKind::Psi: return Psi;
    case GenKind::A: return A;
  }
  return false;
}

}  // namespace twistq
