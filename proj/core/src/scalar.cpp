#include "twistq/scalar.hpp"

#include <mutex>
#include <numeric>

#include "twistq/error.hpp"

namespace twistq {

std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(integer());
  return std::to_string(twice_) + "/2";
}

Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational HalfInt::to_rational() const { return make_rational(static_cast<long>(twice_), 2); }

std::string HalfInt::over_two() const { return std::to_string(twice_) + "/2"; }

HalfInt HalfInt::from_rational(const Rational& r) {
  Rational t = r * 2;
  t.canonicalize();
  if (t.get_den() != 1) throw InputError("exponent " + r.get_str() + " is not in (1/2)Z");
  if (!t.get_num().fits_slong_p()) throw InputError("exponent out of range");
  return from_twice(t.get_num().get_si());
}

// ---------------------------------------------------------------- cyclotomic

namespace {

std::vector<long> poly_div_exact(std::vector<long> num, const std::vector<long>& den) {
  // Both monic with integer coefficients.
  const std::size_t dn = den.size() - 1;
  std::vector<long> quo(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const long c = num[k];
    quo[k - dn] = c;
    for (std::size_t t = 0; t <= dn; ++t) num[k - dn + t] -= c * den[t];
  }
  for (long r : num)
    if (r != 0) throw InternalError("cyclotomic division left a remainder");
  return quo;
}

std::vector<long> compute_cyclotomic(int L) {
  std::vector<long> p(static_cast<std::size_t>(L) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(L)] = 1;
  for (int d = 1; d < L; ++d)
    if (L % d == 0) p = poly_div_exact(p, cyclotomic_polynomial(d));
  return p;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int L) {
  static std::mutex mu;
  static std::map<int, std::vector<long>> cache;
  if (L < 1) throw InputError("root of unity order must be positive");
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(L);
    if (it != cache.end()) return it->second;
  }
  std::vector<long> p = compute_cyclotomic(L);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(L, std::move(p)).first->second;
}

int euler_phi(int L) { return static_cast<int>(cyclotomic_polynomial(L).size()) - 1; }

Cyclo::Cyclo(int L) : L_(L), c_(static_cast<std::size_t>(euler_phi(L))) {}

Cyclo::Cyclo(int L, const Rational& r) : Cyclo(L) { c_[0] = r; }

namespace {

// Reduce a coefficient vector of arbitrary length modulo Phi_L.
std::vector<Rational> reduce(std::vector<Rational> v, int L) {
  const auto& phi = cyclotomic_polynomial(L);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = v.size(); k-- > deg;) {
    if (v[k] == 0) continue;
    const Rational c = v[k];
    for (std::size_t t = 0; t <= deg; ++t) v[k - deg + t] -= c * phi[t];
  }
  v.resize(deg);
  return v;
}

}  // namespace

Cyclo Cyclo::zeta_power(int L, std::int64_t k) {
  const auto e = static_cast<std::size_t>(mod_floor(k, L));
  std::vector<Rational> v(e + 1);
  v[e] = 1;
  Cyclo out(L);
  out.c_ = reduce(std::move(v), L);
  return out;
}

void Cyclo::check_same(const Cyclo& o) const {
  if (L_ != o.L_) throw InternalError("mixed cyclotomic orders");
}

bool Cyclo::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0) return false;
  return true;
}

bool Cyclo::is_one() const { return is_rational() && c_[0] == 1; }

int Cyclo::root_of_unity_index() const {
  for (int k = 0; k < L_; ++k)
    if (*this == zeta_power(L_, k)) return k;
  return -1;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
  check_same(o);
  Cyclo r(*this);
  for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] += o.c_[k];
  return r;
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
  check_same(o);
  Cyclo r(*this);
  for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] -= o.c_[k];
  return r;
}

Cyclo Cyclo::operator-() const {
  Cyclo r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
  check_same(o);
  if (c_.size() == 1) {
    Cyclo r(L_);
    r.c_[0] = c_[0] * o.c_[0];
    return r;
  }
  std::vector<Rational> v(2 * c_.size() - 1);
  for (std::size_t a = 0; a < c_.size(); ++a) {
    if (c_[a] == 0) continue;
    for (std::size_t b = 0; b < o.c_.size(); ++b) v[a + b] += c_[a] * o.c_[b];
  }
  Cyclo r(L_);
  r.c_ = reduce(std::move(v), L_);
  return r;
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw UnsupportedError("inverse of zero");
  const std::size_t n = c_.size();
  if (n == 1) {
    Cyclo r(L_);
    r.c_[0] = 1 / c_[0];
    return r;
  }
  // Solve (multiplication-by-*this) x = e_0 by Gaussian elimination.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t j = 0; j < n; ++j) {
    const Cyclo col = *this * zeta_power(L_, static_cast<std::int64_t>(j));
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col.c_[i];
  }
  m[0][n] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw InternalError("singular multiplication matrix in Q(zeta)");
    std::swap(m[piv], m[col]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      const Rational f = m[i][col] / m[col][col];
      for (std::size_t k = col; k <= n; ++k) m[i][k] -= f * m[col][k];
    }
  }
  Cyclo r(L_);
  for (std::size_t i = 0; i < n; ++i) r.c_[i] = m[i][n] / m[i][i];
  return r;
}

Cyclo Cyclo::pow(std::int64_t e) const {
  Cyclo base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Cyclo r(L_, 1);
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

bool Cyclo::operator==(const Cyclo& o) const { return L_ == o.L_ && c_ == o.c_; }

std::strong_ordering Cyclo::operator<=>(const Cyclo& o) const {
  if (auto c = L_ <=> o.L_; c != 0) return c;
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (auto c = compare(c_[k], o.c_[k]); c != 0) return c;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- Unit

Unit::Unit(Cyclo c, HalfInt qexp, int uexp) : coeff(std::move(c)), q(qexp), u(uexp) {
  if (coeff.is_zero()) throw InternalError("zero coefficient in monomial unit");
}

Unit Unit::of(const SpectralParam& p) {
  return Unit(Cyclo::zeta_power(p.L, p.eps), p.qexp, p.uexp);
}

bool Unit::is_one() const { return q.twice() == 0 && u == 0 && coeff.is_one(); }
bool Unit::is_pure() const { return coeff.is_one(); }

Unit Unit::operator*(const Unit& o) const { return Unit(coeff * o.coeff, q + o.q, u + o.u); }
Unit Unit::operator/(const Unit& o) const { return *this * o.inverse(); }
Unit Unit::operator-() const { return Unit(-coeff, q, u); }
Unit Unit::inverse() const { return Unit(coeff.inverse(), -q, -u); }
Unit Unit::pow(std::int64_t e) const {
  return Unit(coeff.pow(e), q * e, static_cast<int>(u * e));
}

std::strong_ordering Unit::operator<=>(const Unit& o) const {
  if (auto c = q <=> o.q; c != 0) return c;
  if (auto c = u <=> o.u; c != 0) return c;
  return coeff <=> o.coeff;
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(const Unit& m) : L_(m.order()) { terms_.emplace(Key{m.q, m.u}, m.coeff); }

Scalar Scalar::rational(int L, const Rational& r) {
  Scalar s(L);
  if (r != 0) s.terms_.emplace(Key{HalfInt(0), 0}, Cyclo(L, r));
  return s;
}

bool Scalar::is_unit() const { return terms_.size() == 1; }

Unit Scalar::to_unit() const {
  if (!is_unit()) throw UnsupportedError("scalar is not a monomial unit");
  const auto& [k, c] = *terms_.begin();
  return Unit(c, k.first, k.second);
}

void Scalar::add_term(const Key& k, const Cyclo& c) {
  if (c.order() != L_) throw InternalError("mixed cyclotomic orders");
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(k, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r(*this);
  r += o;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.L_ != L_) throw InternalError("mixed cyclotomic orders");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (o.L_ != L_) throw InternalError("mixed cyclotomic orders");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r(*this);
  r -= o;
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r(L_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (o.L_ != L_) throw InternalError("mixed cyclotomic orders");
  Scalar r(L_);
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_)
      r.add_term(Key{k1.first + k2.first, k1.second + k2.second}, c1 * c2);
  return r;
}

Scalar Scalar::pow(unsigned e) const {
  Scalar r = one(L_);
  Scalar b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    b = b * b;
    e >>= 1u;
  }
  return r;
}

Scalar Scalar::inv_if_monomial() const {
  if (!is_unit()) throw UnsupportedError("inverse of a non-monomial scalar");
  return Scalar(to_unit().inverse());
}

bool Scalar::operator==(const Scalar& o) const { return L_ == o.L_ && terms_ == o.terms_; }

// ---------------------------------------------------------------- SpectralParam

SpectralParam::SpectralParam(int order, std::int64_t e, HalfInt r, int ue)
    : L(order), eps(static_cast<int>(mod_floor(e, order))), qexp(r), uexp(ue) {}

SpectralParam SpectralParam::operator*(const SpectralParam& o) const {
  if (L != o.L) throw InternalError("mixed root-of-unity orders");
  return SpectralParam(L, eps + o.eps, qexp + o.qexp, uexp + o.uexp);
}

SpectralParam SpectralParam::inverse() const { return SpectralParam(L, -eps, -qexp, -uexp); }

SpectralParam SpectralParam::pow(std::int64_t k) const {
  return SpectralParam(L, eps * k, qexp * k, static_cast<int>(uexp * k));
}

SpectralParam SpectralParam::shift(HalfInt r) const { return SpectralParam(L, eps, qexp + r, uexp); }

SpectralParam SpectralParam::times_root(int m, std::int64_t s) const {
  if (m <= 0 || L % m != 0) throw UnsupportedError("zeta_" + std::to_string(m) + " is not in mu_L");
  return SpectralParam(L, eps + s * (L / m), qexp, uexp);
}

SpectralParam SpectralParam::negated() const { return times_root(2, 1); }

SpectralParam SpectralParam::with_u(int delta) const {
  return SpectralParam(L, eps, qexp, uexp + delta);
}

SpectralParam SpectralParam::from_unit(const Unit& m) {
  const int k = m.coeff.root_of_unity_index();
  if (k < 0) throw UnsupportedError("parameter is off the mu_L * q^(Z/2) * u^Z grid");
  return SpectralParam(m.order(), k, m.q, m.u);
}

}  // namespace twistq
