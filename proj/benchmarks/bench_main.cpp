#include <benchmark/benchmark.h>

#include "loday/expression.hpp"
#include "loday/factories.hpp"

using namespace loday;

namespace {

std::vector<SuperPolynomial> samples(const ChartPtr& chart, std::size_t n, unsigned degree) {
  SamplerOptions o;
  o.max_degree = degree;
  PolynomialSampler s(chart, o, 1);
  std::vector<SuperPolynomial> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(s.sample());
  return out;
}

void BM_Multiply(benchmark::State& state) {
  const auto J = make_odd_contact(static_cast<unsigned>(state.range(0)));
  const auto xs = samples(J.chart(), 64, 3);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(xs[k % 64] * xs[(k + 1) % 64]);
    ++k;
  }
}
BENCHMARK(BM_Multiply)->Arg(1)->Arg(2)->Arg(3);

void BM_CanonicalPoisson(benchmark::State& state) {
  const auto J = make_odd_contact(static_cast<unsigned>(state.range(0)));
  const auto& ps = J.phase_space();
  const auto xs = samples(J.chart(), 64, 3);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_poisson(ps, J.S(), ps.embed(xs[k % 64])));
    ++k;
  }
}
BENCHMARK(BM_CanonicalPoisson)->Arg(1)->Arg(2)->Arg(3);

void BM_OddBracket(benchmark::State& state) {
  const auto J = make_odd_contact(static_cast<unsigned>(state.range(0)));
  const auto xs = samples(J.chart(), 64, 3);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(odd_jacobi_bracket(J, xs[k % 64], xs[(k + 7) % 64]));
    ++k;
  }
}
BENCHMARK(BM_OddBracket)->Arg(1)->Arg(2)->Arg(3);

void BM_LodayBracket(benchmark::State& state) {
  const auto J = make_odd_contact(static_cast<unsigned>(state.range(0)));
  const auto xs = samples(J.chart(), 64, 3);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(loday_bracket(J, xs[k % 64], xs[(k + 7) % 64]));
    ++k;
  }
}
BENCHMARK(BM_LodayBracket)->Arg(1)->Arg(2)->Arg(3);

void BM_VerifyIdentity(benchmark::State& state) {
  const auto J = make_odd_contact(1);
  const auto id = static_cast<IdentityId>(state.range(0));
  VerifyOptions o;
  o.trials = 20;
  for (auto _ : state) benchmark::DoNotOptimize(verify_identity(J, id, o));
  state.SetLabel(std::string(to_string(id)));
}
BENCHMARK(BM_VerifyIdentity)
    ->Arg(static_cast<int>(IdentityId::JacobiLoday))
    ->Arg(static_cast<int>(IdentityId::CartanTable))
    ->Arg(static_cast<int>(IdentityId::StarHam))
    ->Unit(benchmark::kMillisecond);

void BM_Parse(benchmark::State& state) {
  const auto J = make_odd_contact(2);
  const auto xs = samples(J.chart(), 16, 4);
  std::vector<std::string> text;
  for (const auto& f : xs) text.push_back(print_expr(f));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(parse_polynomial(text[k++ % text.size()], J.chart()));
}
BENCHMARK(BM_Parse);

}  // namespace

BENCHMARK_MAIN();
