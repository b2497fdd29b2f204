#include "twistq/classify.hpp"

#include <algorithm>
#include <functional>

#include "twistq/error.hpp"

namespace twistq {

namespace {

void check_arity(const CartanData& cd, const Coweight& mu) {
  if (mu.coeffs.size() != cd.I0.size())
    throw InputError("coweight has " + std::to_string(mu.coeffs.size()) + " entries, expected " +
                     std::to_string(cd.I0.size()));
}

}  // namespace

ClassifyReport in_Lambda(const CartanData& cd, const Coweight& mu) {
  check_arity(cd, mu);
  for (int i : cd.I0) {
    const int a = pairing(cd, mu, i);
    if (cd.fixed(i) && a % cd.M() != 0)
      return {false, i, "M = " + std::to_string(cd.M()) + " does not divide alpha_" + std::to_string(i) + "(mu) = " + std::to_string(a), {}};
  }
  return {true, {}, "", {}};
}

ClassifyReport is_dominant_coweight(const CartanData& cd, const Coweight& mu) {
  check_arity(cd, mu);
  for (int i : cd.I0)
    if (pairing(cd, mu, i) < 0) return {false, i, "alpha_" + std::to_string(i) + "(mu) < 0", {}};
  return {true, {}, "", {}};
}

ClassifyReport mu_of(const CartanData& cd, const LWeight& x) {
  if (x.type() != cd.type) throw InputError("l-weight type differs from Cartan data");
  Coweight mu{lw_degree(x)};
  ClassifyReport lam = in_Lambda(cd, mu);
  if (!lam.verdict) {
    lam.notes = "degree vector not in Lambda: " + lam.notes;
    return lam;
  }
  return {true, mu, "", {}};
}

ClassifyReport in_r_mu(const CartanData& cd, const LWeight& x, const Coweight& mu) {
  check_arity(cd, mu);
  if (x.type() != cd.type) throw InputError("l-weight type differs from Cartan data");
  for (int i : cd.I0) {
    const int deg = x.at(cd.index_of(i) + 1).degree();
    const int a = pairing(cd, mu, i);
    if (deg != a)
      return {false, i, "deg x_" + std::to_string(i) + " = " + std::to_string(deg) + " but alpha_" + std::to_string(i) + "(mu) = " + std::to_string(a), {}};
  }
  ClassifyReport lam = in_Lambda(cd, mu);
  if (!lam.verdict) return lam;
  return {true, mu, "", {}};
}

ClassifyReport is_dominant_lweight(const CartanData& cd, const LWeight& x) {
  const FactorResult r = lw_factor(cd, x, Dictionary::of({GenKind::Y, GenKind::Psi}));
  std::optional<std::string> scope;
  if (cd.type.family == Family::AEven) scope = "within O+^sh";
  if (const auto* nf = std::get_if<NotFactorable>(&r)) return {false, nf->node, nf->reason, scope};
  const auto& m = std::get<GenMonomial>(r);
  for (const auto& [k, e] : m.exps)
    if (e < 0) return {false, m, std::string("negative exponent on ") + gen_symbol(k.kind) + "_" + std::to_string(k.node), scope};
  return {true, m, "L(x) is finite-dimensional", scope};
}

std::vector<Unit> alphabar(const CartanData& cd, int i) {
  cd.require_I0(i);
  std::vector<Unit> out;
  for (int j : cd.I0) {
    const Rational e = cd.d[static_cast<std::size_t>(i)] * cd.cs(i, j);
    out.push_back(Unit::q_power(cd.L, HalfInt::from_rational(e)));
  }
  return out;
}

namespace {

// Solve e = B^T n over Q, B_ij = d_i Csigma_ij on I0.
std::vector<Rational> solve_weight(const CartanData& cd, const std::vector<Unit>& ratio) {
  const std::size_t r = cd.I0.size();
  if (ratio.size() != r) throw InputError("weight tuple has the wrong length");
  std::vector<std::vector<Rational>> m(r, std::vector<Rational>(r + 1));
  for (std::size_t j = 0; j < r; ++j) {
    if (!ratio[j].is_pure() || ratio[j].u != 0)
      throw UnsupportedError("weight comparison needs pure q-power ratios (trivial root-of-unity part)");
    for (std::size_t i = 0; i < r; ++i) {
      const int ii = cd.I0[i];
      const int jj = cd.I0[j];
      m[j][i] = cd.d[static_cast<std::size_t>(ii)] * cd.cs(ii, jj);
    }
    m[j][r] = ratio[j].q.to_rational();
  }
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t p = c;
    while (p < r && m[p][c] == 0) ++p;
    if (p == r) throw InternalError("finite folded Cartan matrix is singular");
    std::swap(m[p], m[c]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t k = c; k <= r; ++k) m[i][k] -= f * m[c][k];
    }
  }
  std::vector<Rational> n(r);
  for (std::size_t i = 0; i < r; ++i) n[i] = m[i][r] / m[i][i];
  return n;
}

std::vector<Unit> ratio_of(const std::vector<Unit>& w1, const std::vector<Unit>& w2) {
  if (w1.size() != w2.size()) throw InputError("weight tuples of different lengths");
  std::vector<Unit> r;
  for (std::size_t k = 0; k < w1.size(); ++k) r.push_back(w2[k] / w1[k]);
  return r;
}

}  // namespace

ClassifyReport leq_weight(const CartanData& cd, const std::vector<Unit>& w1, const std::vector<Unit>& w2) {
  const std::vector<Rational> n = solve_weight(cd, ratio_of(w1, w2));
  for (std::size_t k = 0; k < n.size(); ++k) {
    if (n[k].get_den() != 1) return {false, n, "non-integral coefficient at node " + std::to_string(cd.I0[k]), {}};
    if (n[k] < 0) return {false, n, "negative coefficient at node " + std::to_string(cd.I0[k]), {}};
  }
  return {true, n, "", {}};
}

long height(const CartanData& cd, const std::vector<Unit>& ratio) {
  const std::vector<Rational> n = solve_weight(cd, ratio);
  long h = 0;
  for (const auto& x : n) {
    if (x.get_den() != 1 || x < 0) throw InputError("ratio is not a nonnegative integral combination of alphabar");
    h += x.get_num().get_si();
  }
  return h;
}

// ---------------------------------------------------------------- A_2^(2)

int a22_progression_index(const SpectralParam& a, const SpectralParam& b) {
  if (a.eps != b.eps || a.uexp != b.uexp) return -1;
  const std::int64_t diff = b.qexp.twice() - a.qexp.twice();  // 2 * (b - a) in q-exponent
  if (diff < 0 || diff % 4 != 0) return -1;
  return static_cast<int>(diff / 4);
}

bool a22_condition_holds(const A22Factorization& f, std::string* why) {
  for (const auto& c : f.cs)
    for (const auto& p : f.pairs) {
      const int t = a22_progression_index(c, p.b);
      const bool bad = p.finite ? (t >= 0 && t <= p.T - 1) : t >= 0;
      if (bad) {
        if (why) *why = "c lies in the excluded progression of a " + std::string(p.finite ? "finite" : "infinite") + " pair";
        return false;
      }
    }
  return true;
}

LWeight a22_product(const CartanData& cd, const A22Factorization& f) {
  RationalFn g(f.gamma);
  for (const auto& p : f.pairs) {
    g.mul_linear(p.a, 1);
    g.mul_linear(p.b, -1);
  }
  for (const auto& c : f.cs) g.mul_linear(c, 1);
  return LWeight(cd.type, {g});
}

A22Result factor_a22(const CartanData& cd, const LWeight& x, std::size_t node_budget) {
  if (cd.type != TwistedType::make(Family::AEven, 1)) throw InputError("factor_a22 needs type A2-2");
  if (x.type() != cd.type) throw InputError("l-weight type differs from Cartan data");
  const RationalFn& f = x.at(1);
  if (f.zpow() != 0) throw InputError("component has a zero or pole at z = 0");
  std::vector<SpectralParam> zeros, poles;
  for (const auto& [a, m] : f.factors()) {
    if (!a.qexp.is_integer() || a.uexp != 0) throw UnsupportedError("factor_a22 needs parameters in +-q^Z");
    for (int k = 0; k < (m > 0 ? m : -m); ++k) (m > 0 ? zeros : poles).push_back(a);
  }
  if (zeros.size() < poles.size()) throw InputError("negative degree: an unmatched pole, mu is not dominant");
  auto desc = [](const SpectralParam& p, const SpectralParam& q) {
    if (p.qexp != q.qexp) return p.qexp > q.qexp;
    return p.eps < q.eps;
  };
  std::sort(poles.begin(), poles.end(), desc);

  A22Result result;
  std::vector<int> used(zeros.size(), 0);
  std::vector<A22Pair> pairs;
  bool budget_hit = false;

  std::function<bool(std::size_t)> search = [&](std::size_t t) -> bool {
    if (++result.nodes_visited > node_budget) {
      budget_hit = true;
      return false;
    }
    if (t == poles.size()) {
      A22Factorization cand{f.constant(), pairs, {}};
      for (std::size_t k = 0; k < zeros.size(); ++k)
        if (!used[k]) cand.cs.push_back(zeros[k]);
      if (!a22_condition_holds(cand)) return false;
      result.factorization = std::move(cand);
      return true;
    }
    const SpectralParam& b = poles[t];
    // Candidate zeros: distinct values, progression-compatible first, each
    // group by descending q-exponent.
    std::vector<std::size_t> cands;
    for (std::size_t k = 0; k < zeros.size(); ++k) {
      if (used[k]) continue;
      bool dup = false;
      for (std::size_t c : cands) dup = dup || zeros[c] == zeros[k];
      if (!dup) cands.push_back(k);
    }
    std::stable_sort(cands.begin(), cands.end(), [&](std::size_t p, std::size_t q) {
      const bool fp = a22_progression_index(zeros[p], b) >= 0;
      const bool fq = a22_progression_index(zeros[q], b) >= 0;
      if (fp != fq) return fp;
      return desc(zeros[p], zeros[q]);
    });
    for (std::size_t k : cands) {
      const int T = a22_progression_index(zeros[k], b);
      used[k] = 1;
      pairs.push_back(A22Pair{zeros[k], b, T >= 0, T >= 0 ? T : 0});
      if (search(t + 1)) return true;
      pairs.pop_back();
      used[k] = 0;
      if (budget_hit) return false;
    }
    return false;
  };

  if (!search(0)) {
    result.failure = budget_hit ? "search budget exhausted before a valid pairing was found"
                                : "no pairing satisfies the progression condition";
    return result;
  }
  if (a22_product(cd, *result.factorization) != x) throw InternalError("factor_a22 certificate does not reproduce x");
  return result;
}

}  // namespace twistq
