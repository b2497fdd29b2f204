#include "twistq/cartan.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "twistq/error.hpp"

namespace twistq {

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix zeros(int n) { return Matrix(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0)); }

void link(Matrix& m, int i, int j, int cij, int cji) {
  m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cij;
  m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = cji;
}

void set_diagonal(Matrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] = 2;
}

// Simply-laced Cartan matrix from an edge list on nodes 1..n.
Matrix simply_laced(int n, const std::vector<std::pair<int, int>>& edges) {
  Matrix c = zeros(n);
  set_diagonal(c);
  for (auto [a, b] : edges) link(c, a - 1, b - 1, -1, -1);
  return c;
}

std::vector<std::pair<int, int>> chain(int from, int to) {
  std::vector<std::pair<int, int>> e;
  for (int i = from; i < to; ++i) e.emplace_back(i, i + 1);
  return e;
}

struct Tables {
  Matrix C;
  std::vector<int> sigma;
  Matrix Cs;
  std::vector<Rational> d;
  std::vector<int> marks;
};

Tables a_even(int n) {
  Tables t;
  const int g = 2 * n;
  t.C = simply_laced(g, chain(1, g));
  for (int i = 1; i <= g; ++i) t.sigma.push_back(g + 1 - i);
  t.Cs = zeros(n + 1);
  set_diagonal(t.Cs);
  if (n == 1) {
    link(t.Cs, 0, 1, -1, -4);
    t.d = {Rational(2), Rational(1, 2)};
    t.marks = {1, 2};
    return t;
  }
  link(t.Cs, 0, 1, -1, -2);
  for (int i = 1; i + 1 < n; ++i) link(t.Cs, i, i + 1, -1, -1);
  link(t.Cs, n - 1, n, -1, -2);
  t.d.assign(static_cast<std::size_t>(n + 1), Rational(1));
  t.d[0] = 2;
  t.d[static_cast<std::size_t>(n)] = Rational(1, 2);
  t.marks.assign(static_cast<std::size_t>(n + 1), 2);
  t.marks[0] = 1;
  return t;
}

Tables a_odd(int n) {
  Tables t;
  const int g = 2 * n - 1;
  t.C = simply_laced(g, chain(1, g));
  for (int i = 1; i <= g; ++i) t.sigma.push_back(2 * n - i);
  t.Cs = zeros(n + 1);
  set_diagonal(t.Cs);
  link(t.Cs, 0, 2, -1, -1);
  for (int i = 1; i + 1 < n; ++i) link(t.Cs, i, i + 1, -1, -1);
  link(t.Cs, n - 1, n, -2, -1);
  t.d.assign(static_cast<std::size_t>(n + 1), Rational(1));
  t.d[static_cast<std::size_t>(n)] = 2;
  t.marks.assign(static_cast<std::size_t>(n + 1), 2);
  t.marks[0] = 1;
  t.marks[1] = 1;
  t.marks[static_cast<std::size_t>(n)] = 1;
  return t;
}

Tables d_type(int n) {
  Tables t;
  const int g = n + 1;
  auto edges = chain(1, n - 1);
  edges.emplace_back(n - 1, n);
  edges.emplace_back(n - 1, n + 1);
  t.C = simply_laced(g, edges);
  for (int i = 1; i <= g; ++i) t.sigma.push_back(i);
  std::swap(t.sigma[static_cast<std::size_t>(n - 1)], t.sigma[static_cast<std::size_t>(n)]);
  t.Cs = zeros(n + 1);
  set_diagonal(t.Cs);
  link(t.Cs, 0, 1, -2, -1);
  for (int i = 1; i + 1 < n; ++i) link(t.Cs, i, i + 1, -1, -1);
  link(t.Cs, n - 1, n, -1, -2);
  t.d.assign(static_cast<std::size_t>(n + 1), Rational(2));
  t.d[0] = 1;
  t.d[static_cast<std::size_t>(n)] = 1;
  t.marks.assign(static_cast<std::size_t>(n + 1), 1);
  return t;
}

Tables e6() {
  Tables t;
  t.C = simply_laced(6, {{1, 2}, {2, 3}, {3, 5}, {5, 6}, {3, 4}});
  t.sigma = {6, 5, 3, 4, 2, 1};
  t.Cs = zeros(5);
  set_diagonal(t.Cs);
  link(t.Cs, 0, 1, -1, -1);
  link(t.Cs, 1, 2, -1, -1);
  link(t.Cs, 2, 3, -2, -1);
  link(t.Cs, 3, 4, -1, -1);
  t.d = {Rational(1), Rational(1), Rational(1), Rational(2), Rational(2)};
  t.marks = {1, 2, 3, 2, 1};
  return t;
}

Tables d4_triple() {
  Tables t;
  t.C = simply_laced(4, {{1, 2}, {2, 3}, {2, 4}});
  t.sigma = {3, 2, 4, 1};
  t.Cs = zeros(3);
  set_diagonal(t.Cs);
  link(t.Cs, 0, 1, -1, -1);
  link(t.Cs, 1, 2, -3, -1);
  t.d = {Rational(1), Rational(1), Rational(3)};
  t.marks = {1, 2, 1};
  return t;
}

std::string expected_finite_type(const TwistedType& t) {
  switch (t.family) {
    case Family::AEven: return t.n == 1 ? "A1" : "B" + std::to_string(t.n);
    case Family::AOdd: return "C" + std::to_string(t.n);
    case Family::D: return "B" + std::to_string(t.n);
    case Family::E6: return "F4";
    case Family::D4Triple: return "G2";
  }
  return "?";
}

void validate(const CartanData& cd) {
  const int r = cd.rank();
  const int g = static_cast<int>(cd.I.size());
  // sigma is a permutation of order M preserving C.
  std::vector<int> seen(static_cast<std::size_t>(g) + 1, 0);
  for (int i = 1; i <= g; ++i) {
    const int s = cd.sig(i);
    if (s < 1 || s > g || seen[static_cast<std::size_t>(s)]++) throw InternalError("sigma is not a permutation");
    int x = i;
    for (int k = 0; k < cd.type.M; ++k) x = cd.sig(x);
    if (x != i) throw InternalError("sigma does not have order M");
  }
  for (int i = 1; i <= g; ++i)
    for (int j = 1; j <= g; ++j)
      if (cd.c(i, j) != cd.c(cd.sig(i), cd.sig(j))) throw InternalError("sigma is not a diagram automorphism");
  for (int i : cd.I0) {
    int x = i;
    for (int k = 0; k < cd.type.M; ++k, x = cd.sig(x))
      if (x < i) throw InternalError("I0 representative is not an orbit minimum");
  }
  for (int i = 0; i <= r; ++i)
    for (int j = 0; j <= r; ++j)
      if (cd.d[static_cast<std::size_t>(i)] * cd.cs(i, j) != cd.d[static_cast<std::size_t>(j)] * cd.cs(j, i))
        throw InternalError("diag(d) Csigma is not symmetric for " + cd.type.token());
  if (cd.marks[0] != 1) throw InternalError("marks not normalised");
  for (int j = 0; j <= r; ++j) {
    Rational s = 0;
    for (int i = 0; i <= r; ++i) s += cd.marks[static_cast<std::size_t>(i)] * cd.d[static_cast<std::size_t>(i)] * cd.cs(i, j);
    if (s != 0) throw InternalError("marks relation fails for " + cd.type.token());
  }
  // Off-diagonal zero pattern of the finite part matches the folded diagram of g.
  for (int a = 1; a <= r; ++a)
    for (int b = 1; b <= r; ++b) {
      if (a == b) continue;
      const int i = cd.I0[static_cast<std::size_t>(a - 1)];
      const int j = cd.I0[static_cast<std::size_t>(b - 1)];
      bool adjacent = false;
      for (int s = 0; s < cd.type.M; ++s) adjacent = adjacent || cd.c_sigma_pow(i, j, s) != 0;
      if (adjacent != (cd.cs(a, b) != 0)) throw InternalError("folded matrix disagrees with the diagram of g");
    }
  if (finite_type(cd) != expected_finite_type(cd.type))
    throw InternalError("finite part of Csigma is " + finite_type(cd) + " for " + cd.type.token());
}

}  // namespace

TwistedType TwistedType::make(Family f, int n) {
  TwistedType t;
  t.family = f;
  t.n = n;
  t.M = 2;
  switch (f) {
    case Family::AEven:
      if (n < 1) throw InputError("A_{2n}^(2) needs n >= 1");
      break;
    case Family::AOdd:
      if (n < 3) throw InputError("A_{2n-1}^(2) needs n >= 3");
      break;
    case Family::D:
      if (n < 2) throw InputError("D_{n+1}^(2) needs n >= 2");
      break;
    case Family::E6:
      if (n != 4) throw InputError("E_6^(2) has rank 4");
      break;
    case Family::D4Triple:
      if (n != 2) throw InputError("D_4^(3) has rank 2");
      t.M = 3;
      break;
  }
  return t;
}

int TwistedType::g_rank() const {
  switch (family) {
    case Family::AEven: return 2 * n;
    case Family::AOdd: return 2 * n - 1;
    case Family::D: return n + 1;
    case Family::E6: return 6;
    case Family::D4Triple: return 4;
  }
  return 0;
}

std::string TwistedType::token() const {
  switch (family) {
    case Family::AEven: return "A" + std::to_string(2 * n) + "-2";
    case Family::AOdd: return "A" + std::to_string(2 * n - 1) + "-2";
    case Family::D: return "D" + std::to_string(n + 1) + "-2";
    case Family::E6: return "E6-2";
    case Family::D4Triple: return "D4-3";
  }
  return "?";
}

TwistedType TwistedType::parse(std::string_view tok) {
  auto fail = [&](const std::string& why) -> TwistedType {
    throw InputError("bad type token '" + std::string(tok) + "': " + why);
  };
  if (tok.size() < 4) return fail("expected e.g. A2-2");
  const char letter = tok[0];
  const auto dash = tok.find('-');
  if (dash == std::string_view::npos || dash < 2 || dash + 2 != tok.size()) return fail("expected <letter><rank>-<order>");
  int rank = 0;
  for (std::size_t k = 1; k < dash; ++k) {
    if (tok[k] < '0' || tok[k] > '9') return fail("rank is not a number");
    rank = rank * 10 + (tok[k] - '0');
    if (rank > 10000) return fail("rank too large");
  }
  const char order = tok[dash + 1];
  if (order == '3') {
    if (letter == 'D' && rank == 4) return make(Family::D4Triple, 2);
    return fail("only D4 admits a twist of order 3");
  }
  if (order != '2') return fail("twist order must be 2 or 3");
  switch (letter) {
    case 'A':
      if (rank < 2) return fail("A_1 has no diagram automorphism");
      if (rank % 2 == 0) return make(Family::AEven, rank / 2);
      if (rank < 5) return fail("A_3^(2) is D_3^(2); use D3-2");
      return make(Family::AOdd, (rank + 1) / 2);
    case 'D':
      if (rank < 3) return fail("D_{n+1}^(2) needs n >= 2");
      return make(Family::D, rank - 1);
    case 'E':
      if (rank == 6) return make(Family::E6, 4);
      return fail("only E6 admits a twist");
    default:
      return fail("unknown family letter");
  }
}

std::string finite_type(const CartanData& cd) {
  const int r = cd.rank();
  if (r == 1) return "A1";
  int bi = 0, bj = 0, bonds = 0;
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      if (i != j && cd.cs(i, j) < -1) {
        bi = i;
        bj = j;
        ++bonds;
      }
  if (bonds != 1) return "?";
  // bi is the short end of the multiple bond.
  const int lace = -cd.cs(bi, bj);
  if (lace == 3 && r == 2) return "G2";
  if (lace != 2) return "?";
  if (r == 4 && std::min(bi, bj) == 2 && std::max(bi, bj) == 3) return "F4";
  if (std::max(bi, bj) != r) return "?";
  return (bi == r ? "B" : "C") + std::to_string(r);
}

int CartanData::index_of(int i) const {
  auto it = std::find(I0.begin(), I0.end(), i);
  return it == I0.end() ? -1 : static_cast<int>(it - I0.begin());
}

void CartanData::require_I0(int i) const {
  if (index_of(i) < 0) throw InputError("node " + std::to_string(i) + " is not in I0 for " + type.token());
}

std::vector<int> CartanData::neighbours(int i) const {
  std::vector<int> out;
  for (int j : I0)
    if (j != i && c(i, j) == -1) out.push_back(j);
  return out;
}

int CartanData::c_sigma_pow(int i, int j, int s) const {
  int x = j;
  for (int k = 0; k < s; ++k) x = sig(x);
  return c(i, x);
}

CartanData cartan_data(const TwistedType& t) {
  const TwistedType checked = TwistedType::make(t.family, t.n);
  if (checked.M != t.M) throw InputError("twist order does not match family");
  Tables tab;
  switch (t.family) {
    case Family::AEven: tab = a_even(t.n); break;
    case Family::AOdd: tab = a_odd(t.n); break;
    case Family::D: tab = d_type(t.n); break;
    case Family::E6: tab = e6(); break;
    case Family::D4Triple: tab = d4_triple(); break;
  }
  CartanData cd;
  cd.type = checked;
  cd.C = std::move(tab.C);
  cd.sigma = std::move(tab.sigma);
  cd.Csigma = std::move(tab.Cs);
  cd.d = std::move(tab.d);
  cd.marks = std::move(tab.marks);
  cd.L = checked.zeta_order();
  const int g = checked.g_rank();
  for (int i = 1; i <= g; ++i) {
    cd.I.push_back(i);
    int m = i;
    for (int x = cd.sig(i); x != i; x = cd.sig(x)) m = std::min(m, x);
    if (m == i) cd.I0.push_back(i);
  }
  if (cd.rank() != checked.n) throw InternalError("orbit count differs from the folded rank");
  for (int i : cd.I0) {
    const int v = cd.fixed(i) ? checked.M : 1;
    cd.N.push_back(v);
    cd.iota.push_back(v);
  }
  validate(cd);
  return cd;
}

const CartanData& cartan_data_ref(const TwistedType& t) {
  static std::mutex mu;
  static std::map<TwistedType, CartanData> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, cartan_data(t)).first;
  return it->second;
}

std::vector<int> sigma_orbit(const CartanData& cd, int i) {
  if (i < 1 || i > static_cast<int>(cd.I.size()))
    throw InputError("node " + std::to_string(i) + " is not in I for " + cd.type.token());
  int rep = i;
  for (int x = cd.sig(i); x != i; x = cd.sig(x)) rep = std::min(rep, x);
  std::vector<int> out{rep};
  for (int x = cd.sig(rep); x != rep; x = cd.sig(x)) out.push_back(x);
  return out;
}

int pairing(const CartanData& cd, const Coweight& mu, int i) {
  cd.require_I0(i);
  if (mu.coeffs.size() != cd.I0.size())
    throw InputError("coweight has " + std::to_string(mu.coeffs.size()) + " entries, expected " +
                     std::to_string(cd.I0.size()));
  return mu.coeffs[static_cast<std::size_t>(cd.index_of(i))];
}

std::vector<TwistedType> default_families() {
  return {TwistedType::make(Family::AEven, 1), TwistedType::make(Family::AEven, 2),
          TwistedType::make(Family::AOdd, 3),  TwistedType::make(Family::D, 2),
          TwistedType::make(Family::E6, 4),    TwistedType::make(Family::D4Triple, 2)};
}

}  // namespace twistq
