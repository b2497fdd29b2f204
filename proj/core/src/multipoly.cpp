#include "twistq/multipoly.hpp"

#include <algorithm>

#include "twistq/error.hpp"

namespace twistq {

MultiPoly MultiPoly::constant(int nvars, const Scalar& c) {
  MultiPoly p(c.order(), nvars);
  p.add_term(Exps(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int L, int nvars, int v, int power) {
  MultiPoly p(L, nvars);
  Exps e(static_cast<std::size_t>(nvars), 0);
  e.at(static_cast<std::size_t>(v)) = power;
  p.add_term(e, Scalar::one(L));
  return p;
}

void MultiPoly::add_term(const Exps& e, const Scalar& c) {
  if (static_cast<int>(e.size()) != nvars_) throw InternalError("exponent arity mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw InternalError("variable count mismatch");
  MultiPoly r(L_, nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exps e(e1);
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += e2[k];
      r.add_term(e, c1 * c2);
    }
  return r;
}

MultiPoly MultiPoly::operator*(const Scalar& c) const {
  MultiPoly r(L_, nvars_);
  for (const auto& [e, x] : terms_) r.add_term(e, x * c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(nvars_, Scalar::one(L_));
  for (unsigned k = 0; k < e; ++k) r = r * *this;
  return r;
}

bool MultiPoly::is_homogeneous(const std::vector<int>& weights, int* degree) const {
  bool first = true;
  int deg = 0;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (std::size_t k = 0; k < e.size(); ++k) d += weights.at(k) * e[k];
    if (first) {
      deg = d;
      first = false;
    } else if (d != deg) {
      return false;
    }
  }
  if (degree) *degree = deg;
  return true;
}

MultiPoly MultiPoly::rescale(const std::vector<int>& weights) const {
  MultiPoly r(L_, nvars_ + 1);
  for (const auto& [e, c] : terms_) {
    Exps f(e);
    int d = 0;
    for (std::size_t k = 0; k < e.size(); ++k) d += weights.at(k) * e[k];
    f.push_back(d);
    r.add_term(f, c);
  }
  return r;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& divisor) const {
  if (divisor.is_zero()) throw InternalError("division by zero polynomial");
  const auto& [lead_e, lead_c] = *divisor.terms_.rbegin();
  const Scalar lead_inv = lead_c.inv_if_monomial();
  auto mins = [](const MultiPoly& p) {
    Exps m = p.terms_.begin()->first;
    for (const auto& [e, c] : p.terms_)
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = std::min(m[k], e[k]);
    return m;
  };
  MultiPoly rem(*this);
  MultiPoly quo(L_, nvars_);
  if (rem.is_zero()) return quo;
  // Any exact quotient has exponents at least these bounds, variable by variable.
  Exps floor = mins(*this);
  const Exps dmin = mins(divisor);
  for (std::size_t k = 0; k < floor.size(); ++k) floor[k] -= dmin[k];
  while (!rem.is_zero()) {
    const auto& [e, c] = *rem.terms_.rbegin();
    Exps shift(e);
    for (std::size_t k = 0; k < shift.size(); ++k) shift[k] -= lead_e[k];
    bool below = false;
    for (std::size_t k = 0; k < shift.size(); ++k) below = below || shift[k] < floor[k];
    if (below) break;
    MultiPoly t(L_, nvars_);
    t.add_term(shift, c * lead_inv);
    quo = quo + t;
    rem = rem - t * divisor;
  }
  if (!rem.is_zero()) throw InternalError("inexact polynomial division");
  return quo;
}

}  // namespace twistq
