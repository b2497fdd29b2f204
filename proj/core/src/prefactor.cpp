#include "twistq/prefactor.hpp"

#include "twistq/error.hpp"

namespace twistq {

PCase p_case(const CartanData& cd, int i, int j) {
  cd.require_I0(i);
  cd.require_I0(j);
  switch (cd.c(i, cd.sig(i))) {
    case 2: return PCase::SelfTwo;
    case 0: return cd.fixed(j) ? PCase::ZeroFixed : PCase::ZeroMoved;
    case -1: return PCase::MinusOne;
    default: throw InternalError("C_{i,sigma(i)} outside {2, 0, -1}");
  }
}

Rational d_ij(const CartanData& cd, int i, int j) {
  switch (p_case(cd, i, j)) {
    case PCase::SelfTwo: return Rational(1, 2);
    case PCase::ZeroMoved: return Rational(1, 2 * cd.M());
    case PCase::ZeroFixed: return Rational(1, 2);
    case PCase::MinusOne: return Rational(1, 8);
  }
  return 0;
}

MultiPoly pij_polynomial(const CartanData& cd, int i, int j, Sign s) {
  const int L = cd.L;
  const int sg = static_cast<int>(s);
  const MultiPoly u1 = MultiPoly::variable(L, 2, 0);
  const MultiPoly u2 = MultiPoly::variable(L, 2, 1);
  switch (p_case(cd, i, j)) {
    case PCase::SelfTwo:
    case PCase::ZeroMoved:
      return MultiPoly::constant(2, Scalar::one(L));
    case PCase::ZeroFixed: {
      const int M = cd.M();
      const MultiPoly num = MultiPoly::variable(L, 2, 0, M) * Scalar(Unit::q_power(L, HalfInt(2 * M * sg))) -
                            MultiPoly::variable(L, 2, 1, M);
      const MultiPoly den = u1 * Scalar(Unit::q_power(L, HalfInt(2 * sg))) - u2;
      return num.divide_exact(den);
    }
    case PCase::MinusOne:
      return u1 * Scalar(Unit::q_power(L, HalfInt(sg))) + u2;
  }
  throw InternalError("unreachable P case");
}

RationalFn g_function(const CartanData& cd, int i, int j) {
  cd.require_I0(i);
  cd.require_I0(j);
  const int M = cd.M();
  const SpectralParam one(cd.L, 0, HalfInt(0));
  RationalFn g = RationalFn::one(cd.L);
  for (int s = 1; s <= M; ++s) {
    const int c = cd.c_sigma_pow(i, j, s);
    const SpectralParam zs = one.times_root(M, s);
    // q^c - zeta^s z = q^c (1 - zeta^s q^{-c} z)
    g.mul_constant(Unit::q_power(cd.L, HalfInt(c)));
    g.mul_linear(zs.shift(HalfInt(-c)), 1);
    g.mul_linear(zs.shift(HalfInt(c)), -1);
  }
  return g;
}

}  // namespace twistq
