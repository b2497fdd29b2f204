#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "twistq/numbers.hpp"

namespace twistq {

// Element of Q(zeta_L), stored as coordinates on {1, zeta, ..., zeta^(phi(L)-1)}
// reduced modulo the L-th cyclotomic polynomial.
class Cyclo {
 public:
  Cyclo() : Cyclo(2) {}
  explicit Cyclo(int L);
  Cyclo(int L, const Rational& r);

  static Cyclo zeta_power(int L, std::int64_t k);

  int order() const { return L_; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Returns k when *this == zeta_L^k exactly, -1 otherwise.
  int root_of_unity_index() const;

  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator-() const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo inverse() const;
  Cyclo pow(std::int64_t e) const;

  bool operator==(const Cyclo& o) const;
  std::strong_ordering operator<=>(const Cyclo& o) const;

 private:
  void check_same(const Cyclo& o) const;
  int L_;
  std::vector<Rational> c_;
};

// Coefficients of Phi_L, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(int L);
int euler_phi(int L);

struct SpectralParam;

// Monomial unit c * q^r * u^e with c a nonzero element of Q(zeta_L).
struct Unit {
  Cyclo coeff;
  HalfInt q;
  int u = 0;

  Unit() : coeff(2, 1) {}
  Unit(Cyclo c, HalfInt qexp, int uexp = 0);
  static Unit one(int L) { return Unit(Cyclo(L, 1), HalfInt(0)); }
  static Unit q_power(int L, HalfInt r) { return Unit(Cyclo(L, 1), r); }
  static Unit of(const SpectralParam& p);

  int order() const { return coeff.order(); }
  bool is_one() const;
  // True when the coefficient is exactly 1 (pure q^r u^e).
  bool is_pure() const;

  Unit operator*(const Unit& o) const;
  Unit operator/(const Unit& o) const;
  Unit operator-() const;
  Unit inverse() const;
  Unit pow(std::int64_t e) const;

  bool operator==(const Unit& o) const = default;
  std::strong_ordering operator<=>(const Unit& o) const;
};

// Finite sum of c * q^r * u^e with coefficients in Q(zeta_L).
class Scalar {
 public:
  using Key = std::pair<HalfInt, int>;  // (q-exponent, u-exponent)

  Scalar() : Scalar(2) {}
  explicit Scalar(int L) : L_(L) {}
  Scalar(const Unit& m);  // NOLINT(google-explicit-constructor)
  static Scalar zero(int L) { return Scalar(L); }
  static Scalar one(int L) { return Scalar(Unit::one(L)); }
  static Scalar rational(int L, const Rational& r);

  int order() const { return L_; }
  const std::map<Key, Cyclo>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_unit() const;
  // Throws UnsupportedError unless is_unit().
  Unit to_unit() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar pow(unsigned e) const;
  Scalar inv_if_monomial() const;

  bool operator==(const Scalar& o) const;

  void add_term(const Key& k, const Cyclo& c);

 private:
  int L_;
  std::map<Key, Cyclo> terms_;
};

// zeta_L^eps * q^qexp * u^uexp.
struct SpectralParam {
  int L = 2;
  int eps = 0;
  HalfInt qexp;
  int uexp = 0;

  SpectralParam() = default;
  SpectralParam(int order, std::int64_t e, HalfInt r, int ue = 0);
  static SpectralParam q_power(int L, HalfInt r) { return SpectralParam(L, 0, r, 0); }

  SpectralParam operator*(const SpectralParam& o) const;
  SpectralParam inverse() const;
  SpectralParam pow(std::int64_t k) const;
  SpectralParam shift(HalfInt r) const;  // a * q^r
  SpectralParam times_root(int m, std::int64_t s) const;  // a * zeta_m^s, m | L
  SpectralParam negated() const;  // -a
  SpectralParam with_u(int delta) const;  // a * u^delta

  // Reads c * q^r * u^e back as a parameter; throws UnsupportedError when the
  // coefficient is not a root of unity in mu_L.
  static SpectralParam from_unit(const Unit& m);

  bool operator==(const SpectralParam&) const = default;
  auto operator<=>(const SpectralParam&) const = default;
};

}  // namespace twistq
