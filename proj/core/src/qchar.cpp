#include "twistq/qchar.hpp"

#include "twistq/error.hpp"

namespace twistq {

namespace {

std::optional<int> min_depth(const std::optional<int>& a, const std::optional<int>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

const CartanData& a22() { return cartan_data_ref(TwistedType::make(Family::AEven, 1)); }

void insert(QCharacter& c, const LWeight& x, QTerm t) {
  auto [it, inserted] = c.terms.emplace(x, t);
  if (!inserted) {
    it->second.mult += t.mult;
    it->second.grade = std::min(it->second.grade, t.grade);
  }
}

}  // namespace

BigInt QCharacter::mult(const LWeight& x) const {
  auto it = terms.find(x);
  return it == terms.end() ? BigInt(0) : it->second.mult;
}

bool QCharacter::operator==(const QCharacter& o) const {
  if (type != o.type || leading != o.leading || depth != o.depth || terms.size() != o.terms.size()) return false;
  auto i = terms.begin();
  auto j = o.terms.begin();
  for (; i != terms.end(); ++i, ++j)
    if (i->first != j->first || i->second.mult != j->second.mult || i->second.grade != j->second.grade) return false;
  return true;
}

QCharacter qc_class(const LWeight& x) {
  QCharacter c{x.type(), x, {}, std::nullopt};
  c.terms.emplace(x, QTerm{1, 0, GenMonomial::identity(x.type())});
  return c;
}

QCharacter qc_one(const TwistedType& t) { return qc_class(LWeight::one(t)); }

QCharacter qc_mul(const QCharacter& c1, const QCharacter& c2) {
  if (c1.type != c2.type) throw InputError("q-characters of different types");
  QCharacter r{c1.type, lw_mul(c1.leading, c2.leading), {}, min_depth(c1.depth, c2.depth)};
  for (const auto& [x1, t1] : c1.terms)
    for (const auto& [x2, t2] : c2.terms) {
      const int g = t1.grade + t2.grade;
      if (r.depth && g > *r.depth) continue;
      insert(r, lw_mul(x1, x2), QTerm{t1.mult * t2.mult, g, t1.cert * t2.cert});
    }
  return r;
}

QCharacter qc_pow(const QCharacter& c, int e) {
  if (e < 0) throw InputError("negative power of a q-character");
  QCharacter r = qc_one(c.type);
  for (int k = 0; k < e; ++k) r = qc_mul(r, c);
  return r;
}

QCharacter qc_truncate(const QCharacter& c, int D) {
  QCharacter r{c.type, c.leading, {}, min_depth(c.depth, D)};
  for (const auto& [x, t] : c.terms)
    if (t.grade <= D) r.terms.emplace(x, t);
  return r;
}

QCharacter qc_add(const QCharacter& c1, const QCharacter& c2) {
  if (c1.type != c2.type) throw InputError("q-characters of different types");
  QCharacter r = c1;
  r.depth = min_depth(c1.depth, c2.depth);
  for (const auto& [x, t] : c2.terms) insert(r, x, t);
  return r;
}

bool nakajima_le(const CartanData& cd, const LWeight& x, const LWeight& y, GenMonomial* cert) {
  const FactorResult r = lw_factor(cd, lw_mul(y, lw_inv(x)), Dictionary::of({GenKind::A}));
  const auto* m = std::get_if<GenMonomial>(&r);
  if (!m || !m->gamma_trivial()) return false;
  for (const auto& [k, e] : m->exps)
    if (e < 0) return false;
  if (cert) *cert = *m;
  return true;
}

std::optional<LWeight> cone_violation(const CartanData& cd, const QCharacter& c) {
  for (const auto& [x, t] : c.terms)
    if (!nakajima_le(cd, x, c.leading)) return x;
  return std::nullopt;
}

// ---------------------------------------------------------------- A_2^(2)

namespace {

// (leading) * prod of A^{-1} over the given parameters.
void add_string_term(QCharacter& c, const std::vector<SpectralParam>& letters) {
  const CartanData& cd = a22();
  GenMonomial m = GenMonomial::identity(cd.type);
  for (const auto& p : letters) m.add(cd, GenKind::A, 1, p, -1);
  const LWeight x = lw_mul(c.leading, lw_eval(cd, m));
  insert(c, x, QTerm{1, static_cast<int>(letters.size()), m});
}

std::vector<SpectralParam> first_string(const SpectralParam& c, int m) {
  std::vector<SpectralParam> out;
  for (int t = 0; t < m; ++t) out.push_back(c.shift(HalfInt(-2 * t)));
  return out;
}

std::vector<SpectralParam> second_string(const SpectralParam& c, int k) {
  std::vector<SpectralParam> out;
  for (int t = 0; t < k; ++t) out.push_back(c.negated().shift(HalfInt(1 - 2 * t)));
  return out;
}

// 1 + sum_{m} string(m) + sum_{k <= m} string(m) string'(k), with m <= mmax and
// total letters <= D.
void fill_series(QCharacter& c, const SpectralParam& base, int mmax, std::optional<int> D) {
  add_string_term(c, {});
  for (int m = 1; m <= mmax; ++m) {
    if (D && m > *D) break;
    const auto s1 = first_string(base, m);
    add_string_term(c, s1);
    for (int k = 1; k <= m; ++k) {
      if (D && m + k > *D) break;
      auto s = s1;
      const auto s2 = second_string(base, k);
      s.insert(s.end(), s2.begin(), s2.end());
      add_string_term(c, s);
    }
  }
}

void require_a22_param(const SpectralParam& p) {
  if (p.L != 2) throw InputError("A2-2 parameters live over L = 2");
}

}  // namespace

QCharacter qc_a22_neg_prefundamental(const SpectralParam& c, int depth) {
  require_a22_param(c);
  if (depth < 0) throw InputError("depth must be nonnegative");
  const CartanData& cd = a22();
  QCharacter q{cd.type, lw_inv(gen_Psi(cd, 1, c)), {}, depth};
  fill_series(q, c, depth, depth);
  return q;
}

QCharacter qc_a22_kr(const SpectralParam& b, int T) {
  require_a22_param(b);
  if (T < 0) throw InputError("T must be nonnegative");
  const CartanData& cd = a22();
  QCharacter q{cd.type, lw_mul(gen_Psi(cd, 1, b.shift(HalfInt(-2 * T))), lw_inv(gen_Psi(cd, 1, b))), {}, std::nullopt};
  fill_series(q, b, T, std::nullopt);
  return q;
}

QCharacter qc_a22_simple(const CartanData& cd, const LWeight& x, int depth) {
  if (depth < 0) throw InputError("depth must be nonnegative");
  const A22Result r = factor_a22(cd, x);
  if (!r.factorization) throw UnsupportedError("factor_a22 failed: " + r.failure);
  const A22Factorization& f = *r.factorization;
  QCharacter out = qc_class(LWeight::constant(cd.type, {f.gamma}));
  for (const auto& p : f.pairs) {
    if (p.finite) {
      out = qc_mul(out, qc_a22_kr(p.b, p.T));
    } else {
      out = qc_mul(out, qc_mul(qc_class(gen_Psi(cd, 1, p.a)), qc_a22_neg_prefundamental(p.b, depth)));
    }
  }
  for (const auto& c : f.cs) out = qc_mul(out, qc_class(gen_Psi(cd, 1, c)));
  if (out.leading != x) throw InternalError("simple q-character leading term differs from x");
  if (auto bad = cone_violation(cd, out)) throw InternalError("simple q-character leaves the Nakajima cone");
  return out;
}

// ---------------------------------------------------------------- weights

WeightSum qc_project_weights(const QCharacter& c) {
  WeightSum out;
  for (const auto& [x, t] : c.terms) {
    auto [it, inserted] = out.emplace(lw_value0(x), t.mult);
    if (!inserted) it->second += t.mult;
  }
  return out;
}

WeightSum weight_sum_mul(const WeightSum& a, const WeightSum& b) {
  WeightSum out;
  for (const auto& [w1, m1] : a)
    for (const auto& [w2, m2] : b) {
      if (w1.size() != w2.size()) throw InputError("weight tuples of different lengths");
      std::vector<Unit> w;
      for (std::size_t k = 0; k < w1.size(); ++k) w.push_back(w1[k] * w2[k]);
      auto [it, inserted] = out.emplace(w, m1 * m2);
      if (!inserted) it->second += m1 * m2;
    }
  return out;
}

// ---------------------------------------------------------------- Borel

QCharacter borel_qchar(const CartanData& cd, const QCharacter& simple, const Coweight& mu,
                       const std::vector<QCharacter>& chi, int depth) {
  if (depth < 0) throw InputError("depth must be nonnegative");
  if (simple.type != cd.type) throw InputError("q-character type differs from Cartan data");
  QCharacter out = qc_truncate(simple, depth);
  for (int i : cd.I0) {
    const int a = pairing(cd, mu, i);
    const int iota = cd.iota_of(i);
    if (a < 0) throw InputError("alpha_" + std::to_string(i) + "(mu) must be nonnegative");
    if (a % iota != 0)
      throw InputError("iota_" + std::to_string(i) + " does not divide alpha_" + std::to_string(i) + "(mu)");
    const int e = a / iota;
    if (e == 0) continue;
    const auto k = static_cast<std::size_t>(cd.index_of(i));
    if (k >= chi.size()) throw InputError("missing chi series for node " + std::to_string(i));
    const QCharacter& ci = chi[k];
    if (ci.type != cd.type || !ci.leading.is_one() || ci.mult(ci.leading) != 1)
      throw InputError("chi_" + std::to_string(i) + " must have constant term 1");
    for (int t = 0; t < e; ++t) out = qc_truncate(qc_mul(out, ci), depth);
  }
  return out;
}

QCharacter placeholder_borel_chi(const CartanData& cd, int i, int depth) {
  if (depth < 0) throw InputError("depth must be nonnegative");
  const std::vector<Unit> ab = alphabar(cd, i);
  QCharacter c = qc_one(cd.type);
  c.depth = depth;
  for (int r = 1; r <= depth; ++r) {
    std::vector<Unit> w;
    for (const auto& u : ab) w.push_back(u.pow(-r));
    insert(c, LWeight::constant(cd.type, w), QTerm{1, r, GenMonomial::identity(cd.type)});
  }
  return c;
}

}  // namespace twistq
