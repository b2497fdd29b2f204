#pragma once

#include <map>
#include <string>
#include <vector>

#include "twistq/scalar.hpp"

namespace twistq {

// Laurent polynomial in a fixed number of variables with Scalar coefficients.
class MultiPoly {
 public:
  using Exps = std::vector<int>;

  MultiPoly(int L, int nvars) : L_(L), nvars_(nvars) {}
  static MultiPoly constant(int nvars, const Scalar& c);
  static MultiPoly variable(int L, int nvars, int v, int power = 1);

  int order() const { return L_; }
  int nvars() const { return nvars_; }
  const std::map<Exps, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exps& e, const Scalar& c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Scalar& c) const;
  MultiPoly pow(unsigned e) const;
  bool operator==(const MultiPoly& o) const = default;

  // Total degree if every monomial has the same total degree (weighted by
  // the given per-variable weights), otherwise nullopt-like flag false.
  bool is_homogeneous(const std::vector<int>& weights, int* degree) const;

  // Append a variable t and multiply each monomial by t^(sum w_v e_v).
  MultiPoly rescale(const std::vector<int>& weights) const;

  // Exact division by a divisor; throws InternalError on nonzero remainder.
  // Uses the lexicographically largest monomial as leading term.
  MultiPoly divide_exact(const MultiPoly& divisor) const;

 private:
  int L_;
  int nvars_;
  std::map<Exps, Scalar> terms_;
};

}  // namespace twistq
