#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "twistq/error.hpp"
#include "twistq/lweight.hpp"

namespace twistq {

class ParseError : public InputError {
 public:
  ParseError(std::size_t offset, const std::string& msg)
      : InputError("at byte " + std::to_string(offset) + ": " + msg), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Parameters: 1, q^3, q^(3/2), -q^2, z3*q^-1, u^1*q^2.
SpectralParam parse_param(std::string_view src, int L);
std::string format_param(const SpectralParam& p);

// Scalars: sums of terms like 3/2*z6*q^(1/2)*u^-1.
Scalar parse_scalar(std::string_view src, int L);
Unit parse_unit(std::string_view src, int L);
std::string format_unit(const Unit& u);
std::string format_scalar(const Scalar& s);

// lwexpr := factor {'*' factor}; factor := atom ['^' sint];
// atom := GEN '[' nat ',' param ']' | 'c' '[' scalar {',' scalar} ']' | '(' lwexpr ')'
GenMonomial parse_lweight(std::string_view src, const CartanData& cd);
std::string format_monomial(const GenMonomial& m);

// Human-readable factored form, e.g. q*(1-q^-1*z)/(1-q*z) per component.
std::string format_rational(const RationalFn& f);
std::string format_lweight(const LWeight& x);

}  // namespace twistq
