#pragma once

// Independent reference arithmetic for the tests. Everything here works on
// dense coefficient vectors after specializing q^(1/2) and u to rationals, so
// it shares no code path with the factored representation under test.

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "twistq/cartan.hpp"
#include "twistq/rational_fn.hpp"

namespace oracle {

// Q(w) with w a primitive 6th root of unity, w^2 = w - 1. Every zeta_L with
// L | 6 embeds, which covers both scalar rings the library uses.
struct F6 {
  mpq_class a = 0, b = 0;

  static F6 rat(const mpq_class& r) { return F6{r, 0}; }
  static F6 root(int L, long k) {
    long e = ((k * (6 / L)) % 6 + 6) % 6;
    F6 x = rat(1);
    for (long t = 0; t < e; ++t) x = x * F6{0, 1};
    return x;
  }

  F6 operator+(const F6& o) const { return F6{a + o.a, b + o.b}; }
  F6 operator-(const F6& o) const { return F6{a - o.a, b - o.b}; }
  F6 operator-() const { return F6{-a, -b}; }
  // (a + b w)(c + d w) = ac + (ad + bc) w + bd (w - 1)
  F6 operator*(const F6& o) const { return F6{a * o.a - b * o.b, a * o.b + b * o.a + b * o.b}; }
  F6 inverse() const {
    // Conjugate a + b(1 - w); norm a^2 + ab + b^2.
    const mpq_class n = a * a + a * b + b * b;
    return F6{(a + b) / n, -b / n};
  }
  bool is_zero() const { return a == 0 && b == 0; }
  bool operator==(const F6& o) const { return a == o.a && b == o.b; }
};

inline F6 pow(F6 x, long e) {
  if (e < 0) {
    x = x.inverse();
    e = -e;
  }
  F6 r = F6::rat(1);
  for (long t = 0; t < e; ++t) r = r * x;
  return r;
}

// Specialization point: q^(1/2) and u.
struct Point {
  mpq_class q_half = 2;
  mpq_class u = 3;
};

inline F6 eval(const twistq::Cyclo& c) {
  F6 r;
  for (std::size_t k = 0; k < c.coords().size(); ++k) r = r + F6::rat(c.coords()[k]) * F6::root(c.order(), static_cast<long>(k));
  return r;
}

inline F6 eval(const twistq::Unit& x, const Point& p = {}) {
  return eval(x.coeff) * pow(F6::rat(p.q_half), x.q.twice()) * pow(F6::rat(p.u), x.u);
}

inline F6 eval(const twistq::SpectralParam& a, const Point& p = {}) {
  return F6::root(a.L, a.eps) * pow(F6::rat(p.q_half), a.qexp.twice()) * pow(F6::rat(p.u), a.uexp);
}

inline F6 q_pow(long twice, const Point& p = {}) { return pow(F6::rat(p.q_half), twice); }

// ---------------------------------------------------------------- dense polys

using Poly = std::vector<F6>;  // coefficient of z^k at index k

inline Poly trim(Poly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

inline Poly mul(const Poly& x, const Poly& y) {
  if (x.empty() || y.empty()) return {};
  Poly r(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] = r[i + j] + x[i] * y[j];
  return trim(r);
}

inline Poly scale(const Poly& x, const F6& c) {
  Poly r;
  for (const auto& v : x) r.push_back(v * c);
  return trim(r);
}

inline bool equal(const Poly& x, const Poly& y) { return trim(x) == trim(y); }

inline Poly constant(const F6& c) { return trim(Poly{c}); }

// 1 - c z^k
inline Poly one_minus(const F6& c, int k = 1) {
  Poly r(static_cast<std::size_t>(k) + 1);
  r[0] = F6::rat(1);
  r[static_cast<std::size_t>(k)] = -c;
  return trim(r);
}

// num / den as a rational function of z.
struct Rat {
  Poly num{F6::rat(1)};
  Poly den{F6::rat(1)};

  Rat operator*(const Rat& o) const { return Rat{mul(num, o.num), mul(den, o.den)}; }
  Rat inverse() const { return Rat{den, num}; }
  bool same_as(const Rat& o) const { return equal(mul(num, o.den), mul(o.num, den)); }
};

inline Rat pow(const Rat& x, int e) {
  Rat r;
  const Rat b = e < 0 ? x.inverse() : x;
  for (int t = 0; t < (e < 0 ? -e : e); ++t) r = r * b;
  return r;
}

// Dense image of a factored rational function.
inline Rat dense(const twistq::RationalFn& f, const Point& p = {}) {
  Rat r{constant(eval(f.constant(), p)), constant(F6::rat(1))};
  for (const auto& [a, m] : f.factors()) {
    const Poly lin = one_minus(eval(a, p));
    for (int t = 0; t < (m < 0 ? -m : m); ++t) (m > 0 ? r.num : r.den) = mul(m > 0 ? r.num : r.den, lin);
  }
  Poly zk(static_cast<std::size_t>(f.zpow() < 0 ? -f.zpow() : f.zpow()) + 1);
  zk.back() = F6::rat(1);
  if (f.zpow() > 0) r.num = mul(r.num, zk);
  if (f.zpow() < 0) r.den = mul(r.den, zk);
  return r;
}

// Taylor coefficients of num/den at z = 0 by long division (den(0) != 0).
inline std::vector<F6> taylor(const Rat& r, int order) {
  std::vector<F6> out;
  const F6 inv0 = r.den.at(0).inverse();
  Poly rem = r.num;
  rem.resize(static_cast<std::size_t>(order) + 1 + r.den.size());
  for (int k = 0; k <= order; ++k) {
    const F6 c = rem[static_cast<std::size_t>(k)] * inv0;
    out.push_back(c);
    for (std::size_t j = 0; j < r.den.size(); ++j) rem[static_cast<std::size_t>(k) + j] = rem[static_cast<std::size_t>(k) + j] - c * r.den[j];
  }
  return out;
}

// ---------------------------------------------------------------- generators

// The displayed formulas, built densely without factoring a^M z^M.
inline Rat Y(const twistq::CartanData& cd, int i, const twistq::SpectralParam& a, bool with_constant = true,
             const Point& p = {}) {
  const F6 av = eval(a, p);
  if (cd.fixed(i)) {
    const int M = cd.M();
    const F6 aM = pow(av, M);
    Rat r{one_minus(aM * q_pow(-2L * M, p), M), one_minus(aM * q_pow(2L * M, p), M)};
    if (with_constant) r.num = scale(r.num, q_pow(2L * M, p));
    return r;
  }
  Rat r{one_minus(av * q_pow(-2, p)), one_minus(av * q_pow(2, p))};
  if (with_constant) r.num = scale(r.num, q_pow(2, p));
  return r;
}

inline Rat Psi(const twistq::CartanData& cd, int i, const twistq::SpectralParam& a, const Point& p = {}) {
  const int iota = cd.fixed(i) ? cd.M() : 1;
  return Rat{one_minus(pow(eval(a, p), iota), iota), constant(F6::rat(1))};
}

// Tuple of components, indexed by position in I0.
using Tuple = std::vector<Rat>;

inline Tuple ones(const twistq::CartanData& cd) { return Tuple(static_cast<std::size_t>(cd.rank())); }

inline Tuple single(const twistq::CartanData& cd, int i, Rat r) {
  Tuple t = ones(cd);
  t[static_cast<std::size_t>(cd.index_of(i))] = std::move(r);
  return t;
}

inline Tuple times(const Tuple& x, const Tuple& y) {
  Tuple r;
  for (std::size_t k = 0; k < x.size(); ++k) r.push_back(x[k] * y[k]);
  return r;
}

inline Tuple inv(const Tuple& x) {
  Tuple r;
  for (const auto& v : x) r.push_back(v.inverse());
  return r;
}

inline twistq::SpectralParam zeta_times(const twistq::CartanData& cd, const twistq::SpectralParam& a, int s) {
  // zeta = exp(2 pi i / M) = zeta_L^(L / M)
  return twistq::SpectralParam(a.L, a.eps + static_cast<long>(s) * (cd.L / cd.M()), a.qexp, a.uexp);
}

inline Tuple Yt(const twistq::CartanData& cd, int i, const twistq::SpectralParam& a, const Point& p = {}) {
  return single(cd, i, Y(cd, i, a, true, p));
}

inline Tuple A(const twistq::CartanData& cd, int i, const twistq::SpectralParam& a, const Point& p = {}) {
  using twistq::HalfInt;
  Tuple r = times(Yt(cd, i, a.shift(HalfInt(1)), p), Yt(cd, i, a.shift(HalfInt(-1)), p));
  const int self = cd.c(i, cd.sig(i));
  if (self == -1) r = times(r, inv(Yt(cd, i, a.negated(), p)));
  for (int j : cd.I0) {
    if (j == i || cd.c(i, j) != -1) continue;
    if (self == 2 && !cd.fixed(j)) {
      for (int s = 1; s <= cd.M(); ++s) r = times(r, inv(Yt(cd, j, zeta_times(cd, a, s), p)));
    } else {
      r = times(r, inv(Yt(cd, j, a, p)));
    }
  }
  return r;
}

inline bool same(const Tuple& x, const Tuple& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!x[k].same_as(y[k])) return false;
  return true;
}

// g_ij(z) from its product display.
inline Rat g(const twistq::CartanData& cd, int i, int j, const Point& p = {}) {
  Rat r;
  for (int s = 1; s <= cd.M(); ++s) {
    int js = j;
    for (int t = 0; t < s; ++t) js = cd.sig(js);
    const F6 qc = q_pow(2L * cd.c(i, js), p);
    const F6 zs = F6::root(cd.L, static_cast<long>(s) * (cd.L / cd.M()));
    r.num = mul(r.num, Poly{qc, -zs});
    r.den = mul(r.den, one_minus(zs * qc));
  }
  return r;
}

// ---------------------------------------------------------------- linear algebra

// Unique solution of A x = b over Q, or nullopt when singular/inconsistent.
inline std::optional<std::vector<mpq_class>> solve(std::vector<std::vector<mpq_class>> A, std::vector<mpq_class> b) {
  const std::size_t n = A.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && A[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(A[piv], A[c]);
    std::swap(b[piv], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || A[r][c] == 0) continue;
      const mpq_class f = A[r][c] / A[c][c];
      for (std::size_t k = c; k < n; ++k) A[r][k] -= f * A[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<mpq_class> x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = b[k] / A[k][k];
  return x;
}

}  // namespace oracle
