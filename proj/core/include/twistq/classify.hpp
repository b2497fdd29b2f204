#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "twistq/lweight.hpp"

namespace twistq {

using Certificate = std::variant<std::monostate, GenMonomial, std::vector<Rational>, int, Coweight>;

struct ClassifyReport {
  bool verdict = false;
  Certificate certificate;
  std::string notes;
  std::optional<std::string> scope;  // set when the verdict holds only in a subcategory
};

// Lambda: M | alpha_i(mu) at sigma-fixed i. Certificate: first violating node.
ClassifyReport in_Lambda(const CartanData& cd, const Coweight& mu);
// Lambda+: alpha_i(mu) >= 0. Certificate: first violating node.
ClassifyReport is_dominant_coweight(const CartanData& cd, const Coweight& mu);

// mu with alpha_i(mu) = deg x_i; verdict false (certificate = node) when the
// degree vector is not in Lambda. On success the certificate is the Coweight.
ClassifyReport mu_of(const CartanData& cd, const LWeight& x);
ClassifyReport in_r_mu(const CartanData& cd, const LWeight& x, const Coweight& mu);

// Dominance: x = gamma * monomial in Y and Psi with nonnegative exponents.
// Certificate: the factorization (or the failing node).
ClassifyReport is_dominant_lweight(const CartanData& cd, const LWeight& x);

// w1 <= w2 iff w2 / w1 = prod alphabar_i^{n_i} with n in N^{I0}. Certificate:
// the exact solution n (also when it fails integrality or sign).
ClassifyReport leq_weight(const CartanData& cd, const std::vector<Unit>& w1, const std::vector<Unit>& w2);
// Sum of n for ratio = prod alphabar_i^{n_i}; throws InputError when ratio is
// not a nonnegative integral combination.
long height(const CartanData& cd, const std::vector<Unit>& ratio);
// alphabar_i(j) = q^{d_i Csigma_{ij}}.
std::vector<Unit> alphabar(const CartanData& cd, int i);

// ---- A_2^(2) factorization Psi = gamma * prod (Psi_a Psi_b^-1) * prod Psi_c

struct A22Pair {
  SpectralParam a;  // zero
  SpectralParam b;  // pole
  bool finite = false;  // a in b q^{-2N}
  int T = 0;            // b = a q^{2T} when finite
};

struct A22Factorization {
  Unit gamma;
  std::vector<A22Pair> pairs;
  std::vector<SpectralParam> cs;
};

struct A22Result {
  std::optional<A22Factorization> factorization;
  std::string failure;
  std::size_t nodes_visited = 0;
};

// Pairing check a in b q^{-2N}; returns T (b = a q^{2T}) or -1.
int a22_progression_index(const SpectralParam& a, const SpectralParam& b);
// Condition that no c_j lies in the excluded progression of any pair.
bool a22_condition_holds(const A22Factorization& f, std::string* why = nullptr);

// Throws InputError for the wrong type, off-grid parameters or negative degree.
A22Result factor_a22(const CartanData& cd, const LWeight& x, std::size_t node_budget = 10000);
LWeight a22_product(const CartanData& cd, const A22Factorization& f);

}  // namespace twistq
