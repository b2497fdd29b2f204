#pragma once

#include "twistq/cartan.hpp"
#include "twistq/multipoly.hpp"
#include "twistq/rational_fn.hpp"

namespace twistq {

enum class Sign { Plus = 1, Minus = -1 };

// Which bullet of the P_{ij} / d_{ij} case list applies.
enum class PCase { SelfTwo, ZeroMoved, ZeroFixed, MinusOne };
PCase p_case(const CartanData& cd, int i, int j);

Rational d_ij(const CartanData& cd, int i, int j);

// P^{+-}_{ij}(u1, u2) as a polynomial in two variables; the quotient case is
// computed by exact division.
MultiPoly pij_polynomial(const CartanData& cd, int i, int j, Sign s);

// g_ij(z) = prod_s (q^{c_s} - zeta^s z) / prod_s (1 - zeta^s q^{c_s} z),
// c_s = C_{i, sigma^s(j)}, in reduced factored form.
RationalFn g_function(const CartanData& cd, int i, int j);

}  // namespace twistq
