#pragma once

#include <compare>
#include <map>
#include <vector>

#include "twistq/scalar.hpp"

namespace twistq {

// Truncated Laurent series sum_k coeffs[k] z^(lowest + k) (at infinity the
// exponents run downwards: coeffs[k] multiplies z^(highest - k)).
struct Series {
  std::int64_t lead = 0;  // exponent of coeffs[0]
  int step = 1;           // +1 for expansions at 0, -1 at infinity
  std::vector<Scalar> coeffs;

  // Coefficient of z^e, zero outside the stored window.
  Scalar at(std::int64_t e, int L) const;
};

// c * z^zpow * prod_a (1 - a z)^m_a, reduced: every a appears once with m_a != 0.
class RationalFn {
 public:
  RationalFn() = default;
  explicit RationalFn(Unit constant) : constant_(std::move(constant)) {}
  static RationalFn one(int L) { return RationalFn(Unit::one(L)); }
  static RationalFn linear(const SpectralParam& a, int mult);  // (1 - a z)^mult

  int order() const { return constant_.order(); }
  const Unit& constant() const { return constant_; }
  int zpow() const { return zpow_; }
  const std::map<SpectralParam, int>& factors() const { return factors_; }
  int multiplicity(const SpectralParam& a) const;

  void mul_constant(const Unit& c) { constant_ = constant_ * c; }
  void mul_linear(const SpectralParam& a, int mult);

  RationalFn operator*(const RationalFn& o) const;
  RationalFn& operator*=(const RationalFn& o);
  RationalFn inverse() const;
  RationalFn pow(int e) const;

  // zpow + sum of multiplicities.
  int degree() const;
  bool is_one() const { return zpow_ == 0 && factors_.empty() && constant_.is_one(); }
  bool is_constant() const { return zpow_ == 0 && factors_.empty(); }
  bool is_polynomial() const;

  Unit value_at_zero() const;       // requires zpow == 0
  Unit leading_at_infinity() const; // c * prod (-a)^m
  RationalFn substitute_inverse() const;                 // f(1/z)
  RationalFn substitute_scaled(const SpectralParam& s) const;  // f(s z)
  RationalFn drop_u() const;                             // u -> 1 on every parameter

  // Taylor coefficients of z^0..z^order (requires zpow == 0).
  Series expand_at_zero(int order) const;
  // Coefficients of z^deg, z^(deg-1), ..., z^(-order).
  Series expand_at_infinity(int order) const;

  bool operator==(const RationalFn&) const = default;
  std::strong_ordering operator<=>(const RationalFn& o) const;

 private:
  Unit constant_;
  int zpow_ = 0;
  std::map<SpectralParam, int> factors_;
};

}  // namespace twistq
