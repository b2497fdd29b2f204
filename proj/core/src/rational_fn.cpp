#include "twistq/rational_fn.hpp"

#include "twistq/error.hpp"

namespace twistq {

Scalar Series::at(std::int64_t e, int L) const {
  const std::int64_t k = step > 0 ? e - lead : lead - e;
  if (k < 0 || k >= static_cast<std::int64_t>(coeffs.size())) return Scalar::zero(L);
  return coeffs[static_cast<std::size_t>(k)];
}

RationalFn RationalFn::linear(const SpectralParam& a, int mult) {
  RationalFn f = one(a.L);
  f.mul_linear(a, mult);
  return f;
}

int RationalFn::multiplicity(const SpectralParam& a) const {
  auto it = factors_.find(a);
  return it == factors_.end() ? 0 : it->second;
}

void RationalFn::mul_linear(const SpectralParam& a, int mult) {
  if (a.L != order()) throw InternalError("parameter ring differs from constant ring");
  if (mult == 0) return;
  auto [it, inserted] = factors_.emplace(a, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) factors_.erase(it);
  }
}

RationalFn& RationalFn::operator*=(const RationalFn& o) {
  constant_ = constant_ * o.constant_;
  zpow_ += o.zpow_;
  for (const auto& [a, m] : o.factors_) mul_linear(a, m);
  return *this;
}

RationalFn RationalFn::operator*(const RationalFn& o) const {
  RationalFn r(*this);
  r *= o;
  return r;
}

RationalFn RationalFn::inverse() const {
  RationalFn r(constant_.inverse());
  r.zpow_ = -zpow_;
  for (const auto& [a, m] : factors_) r.factors_.emplace(a, -m);
  return r;
}

RationalFn RationalFn::pow(int e) const {
  RationalFn r(constant_.pow(e));
  r.zpow_ = zpow_ * e;
  if (e != 0)
    for (const auto& [a, m] : factors_) r.factors_.emplace(a, m * e);
  return r;
}

int RationalFn::degree() const {
  int d = zpow_;
  for (const auto& [a, m] : factors_) d += m;
  return d;
}

bool RationalFn::is_polynomial() const {
  if (zpow_ < 0) return false;
  for (const auto& [a, m] : factors_)
    if (m < 0) return false;
  return true;
}

Unit RationalFn::value_at_zero() const {
  if (zpow_ != 0) throw UnsupportedError("value at zero of a function with a zero or pole at 0");
  return constant_;
}

Unit RationalFn::leading_at_infinity() const {
  Unit r = constant_;
  for (const auto& [a, m] : factors_) r = r * (-Unit::of(a)).pow(m);
  return r;
}

RationalFn RationalFn::substitute_inverse() const {
  // 1 - a/z = (-a) z^{-1} (1 - a^{-1} z)
  RationalFn r(constant_);
  r.zpow_ = -zpow_;
  for (const auto& [a, m] : factors_) {
    r.constant_ = r.constant_ * (-Unit::of(a)).pow(m);
    r.zpow_ -= m;
    r.mul_linear(a.inverse(), m);
  }
  return r;
}

RationalFn RationalFn::substitute_scaled(const SpectralParam& s) const {
  RationalFn r(constant_ * Unit::of(s).pow(zpow_));
  r.zpow_ = zpow_;
  for (const auto& [a, m] : factors_) r.mul_linear(a * s, m);
  return r;
}

RationalFn RationalFn::drop_u() const {
  RationalFn r(Unit(constant_.coeff, constant_.q, 0));
  r.zpow_ = zpow_;
  for (const auto& [a, m] : factors_) r.mul_linear(SpectralParam(a.L, a.eps, a.qexp, 0), m);
  return r;
}

namespace {

// Coefficients of (1 - b w)^m up to w^order.
std::vector<Scalar> binomial_series(const Unit& b, int m, int order) {
  const int L = b.order();
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(order) + 1);
  // Coefficient of w^k is binom(m, k) (-b)^k, with the generalized binomial.
  BigInt num = 1;
  BigInt den = 1;
  Unit power = Unit::one(L);
  const Unit minus_b = -b;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) {
      num *= (m - (k - 1));
      den *= k;
      power = power * minus_b;
    }
    if (num == 0) {
      out.resize(static_cast<std::size_t>(order) + 1, Scalar::zero(L));
      break;
    }
    Rational binom(num, den);
    binom.canonicalize();
    Unit term = power;
    term.coeff = term.coeff * Cyclo(L, binom);
    out.emplace_back(term);
  }
  return out;
}

std::vector<Scalar> truncated_mul(const std::vector<Scalar>& x, const std::vector<Scalar>& y, int order, int L) {
  std::vector<Scalar> r(static_cast<std::size_t>(order) + 1, Scalar::zero(L));
  for (std::size_t i = 0; i < x.size() && i <= static_cast<std::size_t>(order); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size() && i + j <= static_cast<std::size_t>(order); ++j) {
      if (y[j].is_zero()) continue;
      r[i + j] += x[i] * y[j];
    }
  }
  return r;
}

}  // namespace

Series RationalFn::expand_at_zero(int order) const {
  if (order < 0) throw InputError("expansion order must be nonnegative");
  if (zpow_ != 0) throw UnsupportedError("expansion at zero needs a function regular and nonzero at 0");
  const int L = this->order();
  std::vector<Scalar> acc(static_cast<std::size_t>(order) + 1, Scalar::zero(L));
  acc[0] = Scalar(constant_);
  for (const auto& [a, m] : factors_) acc = truncated_mul(acc, binomial_series(Unit::of(a), m, order), order, L);
  return Series{0, 1, std::move(acc)};
}

Series RationalFn::expand_at_infinity(int order) const {
  if (order < 0) throw InputError("expansion order must be nonnegative");
  // f(z) = leading * z^deg * prod (1 - a^{-1} z^{-1})^m.
  const int L = this->order();
  const int deg = degree();
  const int len = deg + order;
  Series s{deg, -1, {}};
  if (len < 0) return s;
  std::vector<Scalar> acc(static_cast<std::size_t>(len) + 1, Scalar::zero(L));
  acc[0] = Scalar(leading_at_infinity());
  for (const auto& [a, m] : factors_)
    acc = truncated_mul(acc, binomial_series(Unit::of(a.inverse()), m, len), len, L);
  s.coeffs = std::move(acc);
  return s;
}

std::strong_ordering RationalFn::operator<=>(const RationalFn& o) const {
  if (auto c = constant_ <=> o.constant_; c != 0) return c;
  if (auto c = zpow_ <=> o.zpow_; c != 0) return c;
  if (auto c = factors_.size() <=> o.factors_.size(); c != 0) return c;
  auto i = factors_.begin();
  auto j = o.factors_.begin();
  for (; i != factors_.end(); ++i, ++j) {
    if (auto c = i->first <=> j->first; c != 0) return c;
    if (auto c = i->second <=> j->second; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace twistq
