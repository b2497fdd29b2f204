#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "twistq/numbers.hpp"

namespace twistq {

enum class Family { AEven, AOdd, D, E6, D4Triple };

// One twisted affine family instance. n is the rank parameter of the folded
// diagram: A_{2n}^(2) (n=1 is A_2^(2)), A_{2n-1}^(2), D_{n+1}^(2), and the
// fixed n = 4 for E_6^(2), n = 2 for D_4^(3).
struct TwistedType {
  Family family = Family::AEven;
  int n = 1;
  int M = 2;

  // Throws InputError for inadmissible (family, n).
  static TwistedType make(Family f, int n);
  // Tokens: A2-2, A4-2, A5-2, D3-2, E6-2, D4-3, ...
  static TwistedType parse(std::string_view token);
  std::string token() const;

  int rank() const { return n; }               // |I0|
  int g_rank() const;                          // |I|
  int zeta_order() const { return M == 3 ? 6 : 2; }  // lcm(2, M)

  auto operator<=>(const TwistedType&) const = default;
};

// Folded-type constants. Nodes of g are labelled 1..|I|, nodes of I0 are the
// orbit minima, and the affine node of the folded diagram is 0.
struct CartanData {
  TwistedType type;
  std::vector<int> I;                   // 1..|I|
  std::vector<int> I0;                  // sorted representatives
  std::vector<int> sigma;               // sigma[i-1] = sigma(i)
  std::vector<std::vector<int>> C;      // C[i-1][j-1], Cartan matrix of g
  std::vector<std::vector<int>> Csigma; // Csigma[i][j], i, j in 0..r
  std::vector<Rational> d;              // d[i], i in 0..r
  std::vector<int> N;                   // N[k] for I0[k]
  std::vector<int> iota;                // iota[k] for I0[k]
  std::vector<int> marks;               // marks[i], i in 0..r
  int L = 2;

  int rank() const { return static_cast<int>(I0.size()); }
  int M() const { return type.M; }
  int sig(int i) const { return sigma.at(static_cast<std::size_t>(i - 1)); }
  int c(int i, int j) const {
    return C.at(static_cast<std::size_t>(i - 1)).at(static_cast<std::size_t>(j - 1));
  }
  int cs(int i, int j) const {
    return Csigma.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
  }
  bool fixed(int i) const { return sig(i) == i; }
  // Position of node i in I0, or -1.
  int index_of(int i) const;
  // Throws InputError if i is not in I0.
  void require_I0(int i) const;
  int iota_of(int i) const { require_I0(i); return fixed(i) ? type.M : 1; }
  // j in I0 with C_{i,j} = -1.
  std::vector<int> neighbours(int i) const;
  // C_{i, sigma^s(j)}.
  int c_sigma_pow(int i, int j, int s) const;
};

// Builds and validates (symmetrizability, marks relation, automorphism,
// representative rule); throws InternalError if the stored tables disagree.
CartanData cartan_data(const TwistedType& t);
// Cached reference for hot paths.
const CartanData& cartan_data_ref(const TwistedType& t);

// Name of the finite type with Cartan matrix Csigma restricted to I0 (A1, Bn,
// Cn, F4, G2), or "?".
std::string finite_type(const CartanData& cd);

// Orbit of i under sigma, starting at the I0 representative.
std::vector<int> sigma_orbit(const CartanData& cd, int i);

// mu = sum m_i omega_i^vee over I0, in I0 order.
struct Coweight {
  std::vector<int> coeffs;
  bool operator==(const Coweight&) const = default;
};

int pairing(const CartanData& cd, const Coweight& mu, int i);

// Minimal-rank instance of every family: A2-2, A4-2, A5-2, D3-2, E6-2, D4-3.
std::vector<TwistedType> default_families();

}  // namespace twistq
