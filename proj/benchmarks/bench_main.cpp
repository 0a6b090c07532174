#include <benchmark/benchmark.h>

#include <plektonlab/graded.hpp>
#include <plektonlab/lattice_oracle.hpp>
#include <plektonlab/wigner.hpp>

#include <random>
#include <vector>

using namespace plektonlab;

namespace {

AnyonModel z3() {
  AnyonModel m;
  m.group = ChargeGroup::cyclic(3);
  m.omega = CyclotomicPhase(1, 3);
  m.omega_sqrt = CyclotomicPhase(2, 3);
  m.spin = Rational(1, 3);
  return m;
}

CoveringLorentz element(double angle, double rapidity, double direction) {
  return cover_compose(cover_rotation(angle),
                       cover_compose(cover_rotation(direction), cover_compose(cover_boost1(rapidity), cover_rotation(-direction))));
}

std::vector<ConePath> fan(int n) {
  std::vector<ConePath> out;
  const double width = 2.0 * (kPi - 0.1) / n;
  for (int i = 0; i < n; ++i) out.push_back(ConePath::cone({}, -kPi + 0.1 + (i + 0.5) * width, 0.2 * width));
  return out;
}

void BM_CoverCompose(benchmark::State& state) {
  const CoveringLorentz a = element(7.0, 1.2, 0.4);
  const CoveringLorentz b = element(-3.0, 0.8, 2.1);
  for (auto _ : state) benchmark::DoNotOptimize(cover_compose(a, b));
}
BENCHMARK(BM_CoverCompose);

void BM_CausallySeparated(benchmark::State& state) {
  const ConePath a = ConePath::cone({}, 0.0, 0.3);
  const ConePath b = ConePath::cone({0.2, -0.1, 0.4}, 2.5, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(causally_separated(a, b));
}
BENCHMARK(BM_CausallySeparated);

void BM_RelativeWinding(benchmark::State& state) {
  const ConePath a = ConePath::cone({}, 0.0, 0.1);
  const ConePath b = ConePath::cone({}, -kPi, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(relative_winding(b, a));
}
BENCHMARK(BM_RelativeWinding);

void BM_ActBoost(benchmark::State& state) {
  const ConePath c = ConePath::cone({}, 0.5, 0.3);
  const CoveringPoincare g{{1, 2, 3}, element(4.0, 1.1, 0.7)};
  for (auto _ : state) benchmark::DoNotOptimize(act(g, c));
}
BENCHMARK(BM_ActBoost);

void BM_NormalForm(benchmark::State& state) {
  const AnyonModel m = z3();
  const auto sites = fan(static_cast<int>(state.range(0)));
  FieldWord w;
  for (auto it = sites.rbegin(); it != sites.rend(); ++it) w.factors.push_back({1, ObservableWord::atom("A"), *it, {}});
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(m, w));
}
BENCHMARK(BM_NormalForm)->Arg(2)->Arg(4)->Arg(6);

void BM_TwistedCommutator(benchmark::State& state) {
  const AnyonModel m = z3();
  const auto sites = fan(2);
  const FieldSymbol f2{2, ObservableWord::parse("A g^1(B*)"), sites[1], {}};
  const FieldSymbol f1{1, ObservableWord::parse("C"), sites[0], {}};
  for (auto _ : state) benchmark::DoNotOptimize(twisted_commutator(m, f2, f1).vanishes());
}
BENCHMARK(BM_TwistedCommutator);

void BM_LatticeOracle(benchmark::State& state) {
  const AnyonModel m = z3();
  const auto sites = fan(static_cast<int>(state.range(0)));
  FieldWord w;
  for (const auto& s : sites) w.factors.push_back({1, ObservableWord::atom("A"), s, {}});
  for (auto _ : state) benchmark::DoNotOptimize(lattice_oracle(m, w).ok());
}
BENCHMARK(BM_LatticeOracle)->Arg(2)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_WignerRotation(benchmark::State& state) {
  const CoveringLorentz g = element(5.0, 1.3, 0.2);
  const MassShellPoint p(1.0, 0.7, -1.4);
  for (auto _ : state) benchmark::DoNotOptimize(wigner_rotation(g, p));
}
BENCHMARK(BM_WignerRotation);

void BM_NormQuadrature(benchmark::State& state) {
  const WaveFunction psi = WaveFunction::gaussian_sum(1.0, {{{1.0, 0.0}, 0.2, -0.1, 0.8}});
  const WaveFunction moved = apply_rep(CoveringPoincare{{0.3, 0.1, 0.0}, element(1.0, 0.4, 0.3)}, 1.0 / 3.0, psi);
  const QuadratureSpec spec{8.0, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(norm_squared(moved, spec));
}
BENCHMARK(BM_NormQuadrature)->Arg(41)->Arg(81)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
