#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "twistq/cartan.hpp"
#include "twistq/rational_fn.hpp"

namespace twistq {

// An I0-tuple of factored rational functions; components follow cd.I0 order.
class LWeight {
 public:
  LWeight() = default;
  LWeight(TwistedType t, std::vector<RationalFn> comps);
  static LWeight one(const TwistedType& t);
  // Constant l-weight with the given value tuple.
  static LWeight constant(const TwistedType& t, const std::vector<Unit>& gamma);

  const TwistedType& type() const { return type_; }
  int order() const { return type_.zeta_order(); }
  std::size_t size() const { return comps_.size(); }
  const std::vector<RationalFn>& components() const { return comps_; }
  // Component of node i in I0 (positions are 0-based; nodes coincide with
  // positions + 1 for every family).
  const RationalFn& at(int i) const { return comps_.at(static_cast<std::size_t>(i - 1)); }
  RationalFn& at(int i) { return comps_.at(static_cast<std::size_t>(i - 1)); }

  bool is_one() const;
  bool operator==(const LWeight&) const = default;
  std::strong_ordering operator<=>(const LWeight& o) const;

 private:
  TwistedType type_;
  std::vector<RationalFn> comps_;
};

enum class GenKind { Y, Ytilde, Psi, A };

struct GenKey {
  GenKind kind = GenKind::Y;
  int node = 1;
  SpectralParam param;
  auto operator<=>(const GenKey&) const = default;
};

// gamma * prod gen^e. gamma empty means trivial.
struct GenMonomial {
  TwistedType type;
  std::map<GenKey, int> exps;
  std::vector<Unit> gamma;

  static GenMonomial identity(const TwistedType& t) { return GenMonomial{t, {}, {}}; }
  // Canonicalizes the parameter and merges.
  void add(const CartanData& cd, GenKind k, int node, const SpectralParam& a, int e);
  void mul_gamma(const std::vector<Unit>& g);
  bool gamma_trivial() const;
  std::size_t letters() const;  // sum |e|

  GenMonomial operator*(const GenMonomial& o) const;
  GenMonomial inverse() const;
  GenMonomial pow(int e) const;
  bool operator==(const GenMonomial& o) const;
};

// Y_{i,a}, Ytilde_{i,a} and Psi_{i,a} at fixed nodes depend on a only through
// a^M (resp. a^iota); this picks the representative with eps < L / iota_i.
SpectralParam canonical_param(const CartanData& cd, GenKind k, int i, const SpectralParam& a);

LWeight gen_Y(const CartanData& cd, int i, const SpectralParam& a);
LWeight gen_Ytilde(const CartanData& cd, int i, const SpectralParam& a);
LWeight gen_Psi(const CartanData& cd, int i, const SpectralParam& a);
LWeight gen_A(const CartanData& cd, int i, const SpectralParam& a);
// A_{i,a} as a product of Y generators.
GenMonomial A_as_Y(const CartanData& cd, int i, const SpectralParam& a);
LWeight gen(const CartanData& cd, GenKind k, int i, const SpectralParam& a);

LWeight lw_mul(const LWeight& x, const LWeight& y);
LWeight lw_inv(const LWeight& x);
LWeight lw_pow(const LWeight& x, int e);
LWeight lw_eval(const CartanData& cd, const GenMonomial& m);

std::vector<int> lw_degree(const LWeight& x);
std::vector<Unit> lw_value0(const LWeight& x);
std::vector<Unit> lw_value_inf(const LWeight& x);

enum class Point { Zero, Infinity };
Series lw_expand(const LWeight& x, int i, Point at, int order);

// Generator dictionary for lw_factor.
struct Dictionary {
  bool Y = false, Ytilde = false, Psi = false, A = false;
  static Dictionary of(std::initializer_list<GenKind> ks);
  bool has(GenKind k) const;
};

struct NotFactorable {
  int node = 0;  // component where elimination failed
  std::optional<SpectralParam> witness;
  std::string reason;
};

using FactorResult = std::variant<GenMonomial, NotFactorable>;

// Canonical factorization x = gamma * prod gen^e over the dictionary. The
// result always satisfies lw_eval(result) == x (checked before returning).
FactorResult lw_factor(const CartanData& cd, const LWeight& x, const Dictionary& dict);

// Multiply component i by (1 - (a z)^iota_i)^{n_i}, n_i = -alpha_i(mu') / iota_i.
LWeight shift_lweight(const CartanData& cd, const LWeight& x, const Coweight& mu_prime, const SpectralParam& a);

// Component i = x_i(z) y_i(z u).
LWeight coproduct_hw(const LWeight& x, const LWeight& y);
LWeight specialize_u1(const LWeight& x);

const char* gen_symbol(GenKind k);

}  // namespace twistq
