#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace twistq {

using Rational = mpq_class;
using BigInt = mpz_class;

std::strong_ordering compare(const Rational& a, const Rational& b);

// num / den in lowest terms (the two-argument mpq_class constructor does not
// canonicalize).
Rational make_rational(long num, long den);

// Element of (1/2)Z, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr explicit HalfInt(std::int64_t n) : twice_(2 * n) {}
  static constexpr HalfInt from_twice(std::int64_t t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  // Valid only when is_integer().
  constexpr std::int64_t integer() const { return twice_ / 2; }
  Rational to_rational() const;

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
  constexpr HalfInt operator*(std::int64_t k) const { return from_twice(twice_ * k); }
  constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }

  constexpr auto operator<=>(const HalfInt&) const = default;

  // "3", "-1/2"
  std::string str() const;
  // "6/2", "-1/2": numerator over 2, used by the JSON form.
  std::string over_two() const;
  static HalfInt from_rational(const Rational& r);

 private:
  std::int64_t twice_ = 0;
};

constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t b) {
  return a - b * floor_div(a, b);
}

}  // namespace twistq
