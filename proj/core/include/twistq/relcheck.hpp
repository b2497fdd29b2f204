#pragma once

#include <map>
#include <string>
#include <vector>

#include "twistq/lweight.hpp"
#include "twistq/prefactor.hpp"

namespace twistq {

struct CheckResult {
  std::string name;    // check family, e.g. "structural"
  std::string target;  // type token
  std::string item;    // what was checked
  bool pass = true;
  std::string detail;  // witness on failure
};

struct SuiteReport {
  std::vector<CheckResult> results;
  std::vector<std::string> warnings;
  bool pass() const;
  std::size_t failures() const;
};

// Coefficients of (expansion at 0) - (expansion at infinity) on z^-W..z^W,
// with the pole structure certified by annihilating recurrences.
struct DeltaSupport {
  int window = 0;
  std::map<std::int64_t, Scalar> coeffs;   // nonzero entries only
  std::map<SpectralParam, int> support;    // pole parameter a (pole at 1/a) -> order
  bool annihilated = false;  // prod (S - a)^{k_a} kills the window
  bool minimal = false;      // dropping any single order leaves a nonzero result
  bool empty() const { return coeffs.empty(); }
};

DeltaSupport phi_delta_difference(const LWeight& x, int i, int window = 12);

struct OneDim {
  bool exists = false;
  std::string reason;
};
// Both the factored multiplicity signs and the delta window are consulted;
// disagreement raises InternalError.
OneDim one_dim_exists(const LWeight& x, int window = 12);

std::vector<CheckResult> check_structural(const CartanData& cd);
std::vector<CheckResult> check_g_reciprocity(const CartanData& cd);
std::vector<CheckResult> check_pij(const CartanData& cd);
std::vector<CheckResult> check_delta(const CartanData& cd, int window = 12);
std::vector<CheckResult> check_rho_u_homogeneity(const CartanData& cd);

// Names: structural, g, pij, delta, rho. Unknown names throw InputError; an
// empty scope passes vacuously with a warning.
SuiteReport run_suite(const std::vector<std::string>& scope, const std::vector<TwistedType>& families = default_families(),
                      int window = 12);
const std::vector<std::string>& suite_names();

}  // namespace twistq
