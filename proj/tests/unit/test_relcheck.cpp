#include <gtest/gtest.h>

#include <algorithm>

#include "support/oracle.hpp"
#include "support/random.hpp"
#include "twistq/error.hpp"
#include "twistq/relcheck.hpp"
#include "twistq/syntax.hpp"

using namespace twistq;

namespace {

const CartanData& cd_of(const char* tok) { return cartan_data_ref(TwistedType::parse(tok)); }

SpectralParam P(int L, int eps, int twice) { return SpectralParam(L, eps, HalfInt::from_twice(twice), 0); }

oracle::F6 eval(const Scalar& s) {
  oracle::F6 out;
  for (const auto& [key, c] : s.terms()) out = out + oracle::eval(Unit(c, key.first, key.second));
  return out;
}

// Dense (expansion at 0) - (expansion at infinity) on z^-W..z^W.
std::map<long, oracle::F6> delta_oracle(const RationalFn& f, int W) {
  const oracle::Rat r = oracle::dense(f);
  std::map<long, oracle::F6> out;
  for (int m = -W; m <= W; ++m) out[m] = oracle::F6{};
  const auto zero = oracle::taylor(r, W);
  for (int m = 0; m <= W; ++m) out[m] = zero[static_cast<std::size_t>(m)];
  const oracle::Rat rev{oracle::Poly(r.num.rbegin(), r.num.rend()), oracle::Poly(r.den.rbegin(), r.den.rend())};
  const int deg = f.degree();
  const auto inf = oracle::taylor(rev, deg + W);
  for (int k = 0; k <= deg + W; ++k) {
    const long e = deg - k;
    if (e < -W || e > W) continue;
    out[e] = out[e] - inf[static_cast<std::size_t>(k)];
  }
  return out;
}

bool all_pass(const std::vector<CheckResult>& rs, std::string* first = nullptr) {
  for (const auto& r : rs)
    if (!r.pass) {
      if (first) *first = r.name + " " + r.target + " " + r.item + ": " + r.detail;
      return false;
    }
  return true;
}

}  // namespace

// ---------------------------------------------------------------- delta

TEST(Delta, PolynomialHasNoDifference) {
  const CartanData& cd = cd_of("A2-2");
  const DeltaSupport d = phi_delta_difference(gen_Psi(cd, 1, P(2, 0, 2)), 1, 8);
  EXPECT_TRUE(d.empty());
  EXPECT_TRUE(d.support.empty());
}

TEST(Delta, SimplePoleIsGeometric) {
  const CartanData& cd = cd_of("A2-2");
  const SpectralParam a = P(2, 1, 3);
  const DeltaSupport d = phi_delta_difference(lw_inv(gen_Psi(cd, 1, a)), 1, 6);
  EXPECT_EQ(d.window, 6);
  EXPECT_EQ(d.coeffs.size(), 13u);
  for (int m = -6; m <= 6; ++m) EXPECT_EQ(d.coeffs.at(m), Scalar(Unit::of(a.pow(m)))) << m;
  EXPECT_EQ(d.support, (std::map<SpectralParam, int>{{a, 1}}));
  EXPECT_TRUE(d.annihilated);
  EXPECT_TRUE(d.minimal);
}

TEST(Delta, YSupportedAtItsPoleOnly) {
  const CartanData& cd = cd_of("A2-2");
  const SpectralParam a = P(2, 0, 2);
  const DeltaSupport d = phi_delta_difference(gen_Y(cd, 1, a), 1, 12);
  EXPECT_EQ(d.support, (std::map<SpectralParam, int>{{a.shift(HalfInt(1)), 1}}));
  // Partial fractions: q (1 - a q^-1 z)/(1 - a q z) = q^-1 + (q - q^-1)/(1 - a q z).
  const oracle::F6 r = oracle::q_pow(2) - oracle::q_pow(-2);
  const oracle::F6 p = oracle::eval(a.shift(HalfInt(1)));
  for (int m = -12; m <= 12; ++m) EXPECT_EQ(eval(d.coeffs.at(m)), r * oracle::pow(p, m)) << m;
}

TEST(Delta, OtherComponentsAreEmpty) {
  const CartanData& cd = cd_of("A5-2");
  EXPECT_TRUE(phi_delta_difference(gen_Y(cd, 3, P(2, 0, 0)), 1).empty());
  EXPECT_FALSE(phi_delta_difference(gen_Y(cd, 3, P(2, 0, 0)), 3).empty());
}

TEST(Delta, MatchesDenseOracleRandomized) {
  gen::Rng rng(71);
  for (const auto& t : default_families()) {
    const CartanData& cd = cartan_data_ref(t);
    for (int k = 0; k < 12; ++k) {
      const LWeight x = gen::free_lweight(rng, cd, 3, {.qmin = -3, .qmax = 3});
      const int i = gen::node(rng, cd);
      const RationalFn& f = x.at(cd.index_of(i) + 1);
      const int W = 7;
      const DeltaSupport d = phi_delta_difference(x, i, W);
      const auto want = delta_oracle(f, W);
      for (int m = -W; m <= W; ++m) {
        const auto it = d.coeffs.find(m);
        const oracle::F6 got = it == d.coeffs.end() ? oracle::F6{} : eval(it->second);
        EXPECT_EQ(got, want.at(m)) << t.token() << " m=" << m << " " << format_rational(f);
      }
      // Supported exactly on the poles, with their orders.
      std::map<SpectralParam, int> poles;
      for (const auto& [a, e] : f.factors())
        if (e < 0) poles[a] = -e;
      EXPECT_EQ(d.support, poles) << format_rational(f);
      EXPECT_EQ(d.empty(), poles.empty());
      if (!poles.empty()) {
        EXPECT_TRUE(d.annihilated);
        EXPECT_TRUE(d.minimal);
      }
    }
  }
}

TEST(Delta, DegreeZeroGeneratorsSupportedOnPoleSet) {
  gen::Rng rng(72);
  for (const auto& t : default_families()) {
    const CartanData& cd = cartan_data_ref(t);
    for (int i : cd.I0)
      for (GenKind g : {GenKind::Y, GenKind::A}) {
        const LWeight x = twistq::gen(cd, g, i, gen::param(rng, cd.L));
        for (int j : cd.I0) {
          const RationalFn& f = x.at(cd.index_of(j) + 1);
          std::map<SpectralParam, int> poles;
          for (const auto& [a, e] : f.factors())
            if (e < 0) poles[a] = -e;
          EXPECT_EQ(phi_delta_difference(x, j, 12).support, poles);
        }
      }
  }
}

// ---------------------------------------------------------------- one-dimensional

TEST(OneDim, Examples) {
  const CartanData& cd = cd_of("A2-2");
  EXPECT_TRUE(one_dim_exists(gen_Psi(cd, 1, P(2, 0, 2))).exists);
  const OneDim neg = one_dim_exists(lw_inv(gen_Psi(cd, 1, P(2, 0, 2))));
  EXPECT_FALSE(neg.exists);
  EXPECT_FALSE(neg.reason.empty());
  EXPECT_TRUE(one_dim_exists(LWeight::constant(cd.type, {Unit::q_power(2, HalfInt(3))})).exists);
  EXPECT_FALSE(one_dim_exists(gen_Y(cd, 1, P(2, 0, 2))).exists);
}

TEST(OneDim, EquivalentToPolynomialityRandomized) {
  gen::Rng rng(73);
  for (const auto& t : default_families()) {
    const CartanData& cd = cartan_data_ref(t);
    for (int k = 0; k < 30; ++k) {
      const LWeight x = gen::free_lweight(rng, cd, 3);
      bool poly = true;
      for (const auto& f : x.components())
        for (const auto& [a, e] : f.factors()) poly = poly && e > 0;
      EXPECT_EQ(one_dim_exists(x).exists, poly) << format_lweight(x);
    }
  }
}

// ---------------------------------------------------------------- checks

TEST(Checks, AllFamiliesPass) {
  for (const auto& t : default_families()) {
    const CartanData& cd = cartan_data_ref(t);
    std::string why;
    EXPECT_TRUE(all_pass(check_structural(cd), &why)) << why;
    EXPECT_TRUE(all_pass(check_g_reciprocity(cd), &why)) << why;
    EXPECT_TRUE(all_pass(check_pij(cd), &why)) << why;
    EXPECT_TRUE(all_pass(check_delta(cd, 8), &why)) << why;
    EXPECT_TRUE(all_pass(check_rho_u_homogeneity(cd), &why)) << why;
    EXPECT_FALSE(check_rho_u_homogeneity(cd).empty());
  }
}

TEST(Checks, A22MarksVerified) {
  const auto rs = check_structural(cd_of("A2-2"));
  EXPECT_TRUE(std::any_of(rs.begin(), rs.end(), [](const CheckResult& r) {
    return r.item.find("marks") != std::string::npos && r.pass;
  }));
}

TEST(Checks, MutatedEntryIsReportedWithWitness) {
  CartanData cd = cartan_data(TwistedType::parse("A4-2"));
  cd.Csigma[1][2] = -3;
  const auto rs = check_structural(cd);
  const auto bad = std::find_if(rs.begin(), rs.end(), [](const CheckResult& r) { return !r.pass; });
  ASSERT_NE(bad, rs.end());
  EXPECT_NE(bad->detail.find("(1,2)"), std::string::npos) << bad->detail;
}

TEST(Checks, BadSymmetrizerIsolatedToStructural) {
  CartanData cd = cartan_data(TwistedType::parse("D4-3"));
  cd.d[1] = cd.d[1] * 2;
  EXPECT_FALSE(all_pass(check_structural(cd)));
}

TEST(Checks, InhomogeneousPCaseIsRecorded) {
  const auto rs = check_rho_u_homogeneity(cd_of("A5-2"));
  EXPECT_TRUE(all_pass(rs));
  EXPECT_GE(rs.size(), 3u);
}

// ---------------------------------------------------------------- suite

TEST(Suite, FullDefaultsPass) {
  const SuiteReport r = run_suite(suite_names());
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.failures(), 0u);
  EXPECT_TRUE(r.warnings.empty());
  for (const auto& n : suite_names())
    EXPECT_TRUE(std::any_of(r.results.begin(), r.results.end(), [&](const CheckResult& c) { return c.name == n; })) << n;
}

TEST(Suite, EmptyScopeWarns) {
  const SuiteReport r = run_suite({});
  EXPECT_TRUE(r.pass());
  EXPECT_TRUE(r.results.empty());
  EXPECT_EQ(r.warnings.size(), 1u);
}

TEST(Suite, UnknownNameIsRejected) {
  EXPECT_THROW(run_suite({"structural", "serre"}), InputError);
}

TEST(Suite, ResultsAreDeterministic) {
  const SuiteReport a = run_suite({"g", "pij"}), b = run_suite({"pij", "g"});
  ASSERT_EQ(a.results.size(), b.results.size());
  for (std::size_t k = 0; k < a.results.size(); ++k) {
    EXPECT_EQ(a.results[k].name, b.results[k].name);
    EXPECT_EQ(a.results[k].item, b.results[k].item);
  }
}
