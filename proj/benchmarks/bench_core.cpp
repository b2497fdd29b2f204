#include <benchmark/benchmark.h>

#include <random>

#include "twistq/twistq.hpp"

using namespace twistq;

namespace {

const CartanData& cd_of(const char* tok) { return cartan_data_ref(TwistedType::parse(tok)); }

// Deterministic monomial with `letters` generator letters over all kinds.
GenMonomial sample_monomial(const CartanData& cd, int letters, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> kind(0, 3), node(0, cd.rank() - 1), q(-8, 8), eps(0, cd.L - 1), e(-2, 2);
  GenMonomial m = GenMonomial::identity(cd.type);
  for (int k = 0; k < letters; ++k) {
    const int x = e(rng);
    m.add(cd, static_cast<GenKind>(kind(rng)), cd.I0[static_cast<std::size_t>(node(rng))],
          SpectralParam(cd.L, eps(rng), HalfInt::from_twice(q(rng)), 0), x == 0 ? 1 : x);
  }
  return m;
}

void BM_Eval(benchmark::State& st, const char* tok) {
  const CartanData& cd = cd_of(tok);
  const GenMonomial m = sample_monomial(cd, static_cast<int>(st.range(0)), 7);
  for (auto _ : st) benchmark::DoNotOptimize(lw_eval(cd, m));
}

void BM_FactorRoundTrip(benchmark::State& st, const char* tok) {
  const CartanData& cd = cd_of(tok);
  const LWeight x = lw_eval(cd, sample_monomial(cd, static_cast<int>(st.range(0)), 11));
  const Dictionary dict = Dictionary::of({GenKind::Y, GenKind::Psi});
  for (auto _ : st) benchmark::DoNotOptimize(lw_factor(cd, x, dict));
}

void BM_FactorOverA(benchmark::State& st, const char* tok) {
  const CartanData& cd = cd_of(tok);
  GenMonomial m = GenMonomial::identity(cd.type);
  for (int k = 0; k < st.range(0); ++k)
    m.add(cd, GenKind::A, cd.I0[static_cast<std::size_t>(k) % cd.I0.size()], SpectralParam(cd.L, 0, HalfInt(k), 0), -1);
  const LWeight x = lw_eval(cd, m);
  for (auto _ : st) benchmark::DoNotOptimize(lw_factor(cd, x, Dictionary::of({GenKind::A})));
}

void BM_KR(benchmark::State& st) {
  const SpectralParam b(2, 0, HalfInt(0), 0);
  for (auto _ : st) benchmark::DoNotOptimize(qc_a22_kr(b, static_cast<int>(st.range(0))));
}

void BM_NegPrefundamental(benchmark::State& st) {
  const SpectralParam c(2, 0, HalfInt(2), 0);
  for (auto _ : st) benchmark::DoNotOptimize(qc_a22_neg_prefundamental(c, static_cast<int>(st.range(0))));
}

void BM_QCharProduct(benchmark::State& st) {
  const QCharacter a = qc_a22_kr(SpectralParam(2, 0, HalfInt(0), 0), static_cast<int>(st.range(0)));
  const QCharacter b = qc_a22_kr(SpectralParam(2, 1, HalfInt(3), 0), static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(qc_mul(a, b));
}

void BM_ConeCheck(benchmark::State& st) {
  const CartanData& cd = cd_of("A2-2");
  const QCharacter q = qc_a22_kr(SpectralParam(2, 0, HalfInt(0), 0), static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(cone_violation(cd, q));
}

void BM_Parse(benchmark::State& st) {
  const CartanData& cd = cd_of("E6-2");
  const std::string s = format_monomial(sample_monomial(cd, 6, 3));
  for (auto _ : st) benchmark::DoNotOptimize(parse_lweight(s, cd));
}

void BM_DeltaWindow(benchmark::State& st) {
  const CartanData& cd = cd_of("D4-3");
  const LWeight x = lw_inv(lw_mul(gen_Psi(cd, 2, SpectralParam(6, 1, HalfInt(1), 0)), gen_Y(cd, 2, SpectralParam(6, 0, HalfInt(3), 0))));
  for (auto _ : st) benchmark::DoNotOptimize(phi_delta_difference(x, 2, static_cast<int>(st.range(0))));
}

void BM_Suite(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(run_suite(suite_names()));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Eval, A2_2, "A2-2")->Arg(2)->Arg(6);
BENCHMARK_CAPTURE(BM_Eval, E6_2, "E6-2")->Arg(2)->Arg(6);
BENCHMARK_CAPTURE(BM_FactorRoundTrip, A5_2, "A5-2")->Arg(2)->Arg(6);
BENCHMARK_CAPTURE(BM_FactorRoundTrip, D4_3, "D4-3")->Arg(2)->Arg(6);
BENCHMARK_CAPTURE(BM_FactorOverA, E6_2, "E6-2")->Arg(4)->Arg(16);
BENCHMARK(BM_KR)->DenseRange(2, 6, 2);
BENCHMARK(BM_NegPrefundamental)->Arg(4)->Arg(8);
BENCHMARK(BM_QCharProduct)->Arg(2)->Arg(4);
BENCHMARK(BM_ConeCheck)->Arg(3)->Arg(6);
BENCHMARK(BM_Parse);
BENCHMARK(BM_DeltaWindow)->Arg(12)->Arg(24);
BENCHMARK(BM_Suite)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
