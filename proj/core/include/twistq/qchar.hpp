#pragma once

#include <map>
#include <optional>
#include <vector>

#include "twistq/classify.hpp"
#include "twistq/lweight.hpp"

namespace twistq {

struct QTerm {
  BigInt mult;
  int grade = 0;        // number of A^{-1} letters relative to the leading term
  GenMonomial cert;     // term / leading as a monomial in A
};

// Formal N-combination of l-weight classes. depth == nullopt means exact.
struct QCharacter {
  TwistedType type;
  LWeight leading;
  std::map<LWeight, QTerm> terms;
  std::optional<int> depth;

  std::size_t size() const { return terms.size(); }
  // Multiplicity of x (0 when absent).
  BigInt mult(const LWeight& x) const;
  bool operator==(const QCharacter& o) const;
};

QCharacter qc_class(const LWeight& x);
QCharacter qc_one(const TwistedType& t);
QCharacter qc_mul(const QCharacter& c1, const QCharacter& c2);
QCharacter qc_pow(const QCharacter& c, int e);
// Drops terms of grade > D and sets depth to min(depth, D).
QCharacter qc_truncate(const QCharacter& c, int D);
// Adds c2 termwise (same leading required); used to build sums like [A] + [B].
QCharacter qc_add(const QCharacter& c1, const QCharacter& c2);

// x <= y: y x^{-1} is a monomial in the A_{i,a} with nonnegative exponents
// and trivial constant. The certificate is written to cert when given.
bool nakajima_le(const CartanData& cd, const LWeight& x, const LWeight& y, GenMonomial* cert = nullptr);
// First term violating the cone property, if any.
std::optional<LWeight> cone_violation(const CartanData& cd, const QCharacter& c);

// A_2^(2) series. Strings in c: A_c^-1 A_{cq^-2}^-1 ... (m letters), and the
// second strings A_{-cq}^-1 A_{-cq^-1}^-1 ... (k letters).
QCharacter qc_a22_neg_prefundamental(const SpectralParam& c, int depth);
QCharacter qc_a22_kr(const SpectralParam& b, int T);
// Throws UnsupportedError when factor_a22 fails.
QCharacter qc_a22_simple(const CartanData& cd, const LWeight& x, int depth);

// Formal sum over weight tuples.
using WeightSum = std::map<std::vector<Unit>, BigInt>;
WeightSum qc_project_weights(const QCharacter& c);
WeightSum weight_sum_mul(const WeightSum& a, const WeightSum& b);

// simple * prod_i chi_i^{alpha_i(mu) / iota_i}, truncated at D. chi holds one
// series per I0 node (constant term 1); unused entries may be empty.
QCharacter borel_qchar(const CartanData& cd, const QCharacter& simple, const Coweight& mu,
                       const std::vector<QCharacter>& chi, int depth);
// Placeholder input chi_i = sum_{r <= D} [alphabar_i^{-r}], grade r. Not the
// actual Borel prefundamental character.
QCharacter placeholder_borel_chi(const CartanData& cd, int i, int depth);

}  // namespace twistq
