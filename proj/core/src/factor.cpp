#include <algorithm>
#include <tuple>

#include "twistq/error.hpp"
#include "twistq/lweight.hpp"

namespace twistq {

namespace {

// A q^2-chain: parameters sharing root-of-unity part, q-exponent class mod 2
// and u-exponent. Positions are floor(2 qexp / 4), so consecutive positions
// differ by a factor q^2.
struct ChainKey {
  int eps;
  int residue;  // twice(qexp) mod 4
  int uexp;
  auto operator<=>(const ChainKey&) const = default;
};

ChainKey chain_of(const SpectralParam& a) {
  return ChainKey{a.eps, static_cast<int>(mod_floor(a.qexp.twice(), 4)), a.uexp};
}

std::int64_t position_of(const SpectralParam& a) { return floor_div(a.qexp.twice(), 4); }

SpectralParam at_position(int L, const ChainKey& c, std::int64_t k) {
  return SpectralParam(L, c.eps, HalfInt::from_twice(4 * k + c.residue), c.uexp);
}

struct Failure {
  NotFactorable info;
};

// Multiplicities of one component after folding sigma-orbits at fixed nodes.
std::map<SpectralParam, int> fold_orbits(const CartanData& cd, int i, const RationalFn& f) {
  if (!cd.fixed(i)) return f.factors();
  const int M = cd.M();
  std::map<SpectralParam, int> out;
  for (const auto& [a, m] : f.factors()) {
    const SpectralParam rep = canonical_param(cd, GenKind::Y, i, a);
    for (int s = 1; s < M; ++s) {
      if (f.multiplicity(a.times_root(M, s)) != m)
        throw Failure{{i, a, "factor set is not closed under z -> zeta z at a sigma-fixed node"}};
    }
    out[rep] = m;
  }
  return out;
}

struct YPsi {
  std::map<SpectralParam, int> y;    // Y parameter -> exponent
  std::map<SpectralParam, int> psi;  // Psi parameter -> exponent
};

// Split folded multiplicities into Y and Psi exponents, chain by chain.
YPsi split_chains(int L, int i, const std::map<SpectralParam, int>& folded, bool use_y, bool use_psi) {
  YPsi out;
  if (!use_y) {
    if (!use_psi) {
      if (!folded.empty()) throw Failure{{i, folded.begin()->first, "no generator in the dictionary can produce this factor"}};
      return out;
    }
    out.psi = folded;
    return out;
  }
  std::map<ChainKey, std::map<std::int64_t, int>> chains;
  for (const auto& [a, m] : folded) chains[chain_of(a)][position_of(a)] += m;
  for (const auto& [key, xs] : chains) {
    std::vector<std::int64_t> pos;
    std::vector<long> S;
    long run = 0;
    for (const auto& [k, m] : xs) {
      run += m;
      pos.push_back(k);
      S.push_back(run);
    }
    const long T = run;
    if (!use_psi && T != 0)
      throw Failure{{i, at_position(L, key, xs.begin()->first), "chain has nonzero total degree and no Psi generator is available"}};
    // Canonical Psi staircase P_k: monotone from 0 to T, as close to S as possible.
    const std::size_t n = pos.size();
    std::vector<long> P(n);
    long suffix = T;
    for (std::size_t t = n; t-- > 0;) {
      suffix = T >= 0 ? std::min(suffix, S[t]) : std::max(suffix, S[t]);
      P[t] = T >= 0 ? std::max(0L, suffix) : std::min(0L, suffix);
    }
    // Positions between stored ones carry S and P constant, so y is constant
    // on each gap: emit every intermediate position.
    long prevP = 0;
    for (std::size_t t = 0; t < n; ++t) {
      if (P[t] != prevP) out.psi[at_position(L, key, pos[t])] += static_cast<int>(P[t] - prevP);
      prevP = P[t];
      const long y = S[t] - P[t];
      const std::int64_t until = t + 1 < n ? pos[t + 1] : pos[t] + 1;
      if (y == 0) continue;
      for (std::int64_t k = pos[t]; k < until; ++k)
        out.y[at_position(L, key, k).shift(HalfInt(1))] += static_cast<int>(y);
    }
    for (auto it = out.y.begin(); it != out.y.end();) it = it->second == 0 ? out.y.erase(it) : std::next(it);
  }
  return out;
}

struct NodeParam {
  int node;
  SpectralParam a;
  auto operator<=>(const NodeParam&) const = default;
};

// Peel A generators off a Y-exponent map from the top q-exponent down.
std::map<NodeParam, int> peel_A(const CartanData& cd, std::map<NodeParam, int> ys) {
  std::map<NodeParam, int> as;
  if (ys.empty()) return as;
  HalfInt floor = ys.begin()->first.a.qexp;
  for (const auto& [k, e] : ys) floor = std::min(floor, k.a.qexp);
  std::size_t guard = 0;
  while (!ys.empty()) {
    if (++guard > 200000) throw Failure{{0, std::nullopt, "A elimination exceeded its iteration bound"}};
    auto top = ys.begin();
    for (auto it = ys.begin(); it != ys.end(); ++it)
      if (it->first.a.qexp > top->first.a.qexp) top = it;
    const NodeParam key = top->first;
    const int e = top->second;
    const SpectralParam b = key.a.shift(HalfInt(-1));
    if (b.qexp - HalfInt(1) < floor)
      throw Failure{{key.node, key.a, "Y part is not a monomial in the A generators"}};
    as[{key.node, canonical_param(cd, GenKind::A, key.node, b)}] += e;
    for (const auto& [g, x] : A_as_Y(cd, key.node, b).exps) {
      NodeParam np{g.node, g.param};
      auto [it, inserted] = ys.emplace(np, -e * x);
      if (!inserted) {
        it->second -= e * x;
        if (it->second == 0) ys.erase(it);
      }
    }
  }
  for (auto it = as.begin(); it != as.end();) it = it->second == 0 ? as.erase(it) : std::next(it);
  return as;
}

}  // namespace

FactorResult lw_factor(const CartanData& cd, const LWeight& x, const Dictionary& dict) {
  if (x.type() != cd.type) throw InputError("l-weight type differs from Cartan data");
  const bool y_direct = dict.Y || dict.Ytilde;
  const bool use_y = y_direct || dict.A;
  const GenKind y_kind = dict.Y ? GenKind::Y : GenKind::Ytilde;
  try {
    GenMonomial m = GenMonomial::identity(cd.type);
    std::map<NodeParam, int> ys;
    for (int i : cd.I0) {
      const RationalFn& f = x.at(cd.index_of(i) + 1);
      if (f.zpow() != 0) throw Failure{{i, std::nullopt, "component has a zero or pole at z = 0"}};
      const YPsi parts = split_chains(cd.L, i, fold_orbits(cd, i, f), use_y, dict.Psi);
      for (const auto& [a, e] : parts.psi) m.add(cd, GenKind::Psi, i, a, e);
      for (const auto& [a, e] : parts.y) ys[{i, canonical_param(cd, GenKind::Y, i, a)}] += e;
    }
    if (y_direct) {
      for (const auto& [k, e] : ys) m.add(cd, y_kind, k.node, k.a, e);
    } else if (!ys.empty()) {
      for (const auto& [k, e] : peel_A(cd, ys)) m.add(cd, GenKind::A, k.node, k.a, e);
    }
    const LWeight ev = lw_eval(cd, m);
    std::vector<Unit> gamma;
    for (int i : cd.I0) {
      const RationalFn& want = x.at(cd.index_of(i) + 1);
      const RationalFn& got = ev.at(cd.index_of(i) + 1);
      if (want.factors() != got.factors() || want.zpow() != got.zpow())
        throw InternalError("factorization does not reproduce component " + std::to_string(i));
      gamma.push_back(want.constant() / got.constant());
    }
    m.mul_gamma(gamma);
    if (lw_eval(cd, m) != x) throw InternalError("factorization round-trip failed");
    return m;
  } catch (const Failure& f) {
    return f.info;
  }
}

}  // namespace twistq
