#include <gtest/gtest.h>

#include <plektonlab/errors.hpp>
#include <plektonlab/sector_model.hpp>
#include <plektonlab/wigner.hpp>

#include "generators.hpp"
#include "oracles.hpp"

#include <complex>
#include <vector>

using namespace plektonlab;

namespace {

constexpr double kMass = 1.3;
const std::complex<double> kI{0.0, 1.0};

std::vector<MassShellPoint> samples(gen::Rng& r, int n, double range = 3.0) {
  std::vector<MassShellPoint> out;
  for (int i = 0; i < n; ++i) out.emplace_back(kMass, r.uniform(-range, range), r.uniform(-range, range));
  return out;
}

WaveFunction test_function(gen::Rng& r) {
  std::vector<GaussianTerm> terms;
  for (int i = 0; i < 3; ++i) {
    terms.push_back({{r.uniform(-1, 1), r.uniform(-1, 1)}, r.uniform(-1, 1), r.uniform(-1, 1), r.uniform(0.6, 1.2)});
  }
  return WaveFunction::gaussian_sum(kMass, terms);
}

double max_diff(const WaveFunction& a, const WaveFunction& b, const std::vector<MassShellPoint>& ps) {
  double r = 0.0;
  for (const auto& p : ps) r = std::max(r, std::abs(a(p) - b(p)));
  return r;
}

}  // namespace

TEST(MassShellPoint, Validation) {
  EXPECT_THROW(MassShellPoint(0.0, 1.0, 0.0), InvalidArgument);
  const MassShellPoint p(kMass, 0.3, -0.4);
  EXPECT_NEAR(minkowski_inner(p.four(), p.four()), kMass * kMass, 1e-12);
  EXPECT_NO_THROW(MassShellPoint::from_four(p.four(), kMass));
  EXPECT_THROW(MassShellPoint::from_four({1.0, 0.3, -0.4}, kMass), InvalidArgument);
}

TEST(StandardBoost, Examples) {
  const LorentzMatrix rest = standard_boost(MassShellPoint(kMass, 0, 0));
  EXPECT_LT((rest.matrix() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff(), 1e-15);

  gen::Rng r(80);
  for (const auto& p : samples(r, 50, 5.0)) {
    const LorentzMatrix b = standard_boost(p);
    const MVec3 image = b.apply({kMass, 0, 0});
    const MVec3 target = p.four();
    EXPECT_NEAR(image.x0, target.x0, 1e-12 * target.x0);
    EXPECT_NEAR(image.x1, target.x1, 1e-12 * target.x0);
    EXPECT_NEAR(image.x2, target.x2, 1e-12 * target.x0);
    EXPECT_NEAR(polar_rotation_angle(b), 0.0, 1e-14);
    EXPECT_LT((b.matrix() - b.matrix().transpose()).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(WignerRotation, Examples) {
  const MassShellPoint rest(kMass, 0, 0);
  for (double phi : {0.4, -2.0, kPi, kTwoPi, 3 * kTwoPi + 0.5}) {
    EXPECT_NEAR(wigner_rotation(cover_rotation(phi), rest), phi, 1e-12);
  }
  for (double p1 : {-2.0, 0.0, 0.5, 3.0}) {
    EXPECT_NEAR(wigner_rotation(cover_boost1(0.8), MassShellPoint(kMass, p1, 0)), 0.0, 1e-12);
  }
  gen::Rng r(81);
  for (const auto& p : samples(r, 100)) EXPECT_NEAR(wigner_rotation(cover_rotation(kTwoPi), p), kTwoPi, 1e-9);
}

TEST(WignerRotation, AgreesWithFineStepOracle) {
  gen::Rng r(82);
  for (int i = 0; i < 40; ++i) {
    const CoveringLorentz g = gen::lorentz(r);
    const MassShellPoint p(kMass, r.uniform(-3, 3), r.uniform(-3, 3));
    const double fine = oracle::wigner_angle(g, kMass, p.p1(), p.p2(), 4000);
    const double finer = oracle::wigner_angle(g, kMass, p.p1(), p.p2(), 8000);
    EXPECT_LT(std::abs(fine - finer), 1e-10);
    EXPECT_NEAR(wigner_rotation(g, p), finer, 1e-9);
  }
}

TEST(ApplyRep, Examples) {
  gen::Rng r(83);
  const WaveFunction psi = test_function(r);
  const auto ps = samples(r, 60);
  EXPECT_LT(max_diff(apply_rep(CoveringPoincare{}, 0.3, psi), psi, ps), 1e-15);

  const MVec3 a{0.4, -1.0, 2.0};
  const WaveFunction t = apply_rep(cover_translation(a), 0.3, psi);
  for (const auto& p : ps) {
    EXPECT_LT(std::abs(t(p) - std::polar(1.0, minkowski_inner(a, p.four())) * psi(p)), 1e-14);
  }
}

TEST(ApplyRep, PreservesNorm) {
  gen::Rng r(84);
  const QuadratureSpec spec{9.0, 181};
  for (int i = 0; i < 6; ++i) {
    std::vector<GaussianTerm> terms{{{1.0, 0.5}, r.uniform(-0.5, 0.5), r.uniform(-0.5, 0.5), 0.7}};
    const WaveFunction psi = WaveFunction::gaussian_sum(kMass, terms);
    const CoveringPoincare g{gen::point(r), cover_compose(cover_rotation(r.uniform(-kTwoPi, kTwoPi)),
                                                           cover_compose(cover_rotation(r.uniform(-kPi, kPi)), cover_boost1(r.uniform(-0.6, 0.6))))};
    const double before = norm_squared(psi, spec);
    const double after = norm_squared(apply_rep(g, 1.0 / 3.0, psi), spec);
    EXPECT_NEAR(after / before, 1.0, 1e-6);
  }
}

TEST(ApplyRep, IsARepresentation) {
  gen::Rng r(85);
  const WaveFunction psi = test_function(r);
  const auto ps = samples(r, 40);
  for (int i = 0; i < 20; ++i) {
    const CoveringPoincare g = gen::poincare(r);
    const CoveringPoincare h = gen::poincare(r);
    const double s = r.uniform(-1.0, 1.0);
    EXPECT_LT(max_diff(apply_rep(g, s, apply_rep(h, s, psi)), apply_rep(cover_compose(g, h), s, psi), ps), 1e-8);
  }
}

TEST(ApplyJ, Examples) {
  gen::Rng r(86);
  const WaveFunction psi = test_function(r);
  const auto ps = samples(r, 60);
  EXPECT_EQ(max_diff(apply_j(apply_j(psi)), psi, ps), 0.0);

  const WaveFunction even = WaveFunction::gaussian_sum(kMass, {{{0.7, 0.0}, 0.3, 0.0, 0.9}});
  EXPECT_EQ(max_diff(apply_j(even), even, ps), 0.0);

  EXPECT_LT(max_diff(apply_j(kI * psi), -kI * apply_j(psi), ps), 1e-15);
}

TEST(Cocycle, Examples) {
  gen::Rng r(87);
  const auto ps = samples(r, 20);
  const CoveringLorentz g = gen::lorentz(r);
  EXPECT_LT(verify_cocycle(g, CoveringLorentz(), ps), 1e-12);
  EXPECT_LT(verify_cocycle(cover_rotation(1.1), cover_rotation(5.9), ps), 1e-12);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const MassShellPoint p(kMass, r.uniform(-3, 3), r.uniform(-3, 3));
    worst = std::max(worst, verify_cocycle(gen::lorentz(r), gen::lorentz(r), std::span(&p, 1)));
  }
  EXPECT_LT(worst, 1e-9);
}

TEST(JRelations, SpinValues) {
  gen::Rng r(88);
  const std::vector<WaveFunction> tests{test_function(r), test_function(r)};
  const auto ps = samples(r, 20);
  for (double s : {0.0, 0.5, 1.0 / 3.0, 0.71}) {
    for (int i = 0; i < 5; ++i) {
      const JRelationReport rep = verify_j_relations(gen::poincare(r), s, tests, ps);
      EXPECT_LT(rep.max(), 1e-8) << "spin " << s;
    }
  }
}

TEST(JRelations, FullRotationEigenvalue) {
  gen::Rng r(89);
  const WaveFunction psi = test_function(r);
  const auto ps = samples(r, 40);
  for (double s : {0.0, 0.5, 1.0 / 3.0}) {
    for (int k = 1; k <= 3; ++k) {
      const WaveFunction rotated = apply_rep(as_poincare(cover_rotation(kTwoPi * k)), s, psi);
      EXPECT_LT(max_diff(rotated, std::polar(1.0, kTwoPi * k * s) * psi, ps), 1e-9);
    }
  }
  const WaveFunction minus = apply_rep(as_poincare(cover_rotation(kTwoPi)), 0.5, psi);
  EXPECT_LT(max_diff(minus, -1.0 * psi, ps), 1e-9);
}

TEST(JRelations, SpinStatisticsAcrossModules) {
  const AnyonModel z3 = gen::zn_model(3, 1);
  const double s = boost::rational_cast<double>(z3.spin);
  gen::Rng r(90);
  const WaveFunction psi = test_function(r);
  const std::complex<double> expected = sector_phase(z3, 1).value();
  for (const auto& p : samples(r, 40)) {
    const std::complex<double> v = psi(p);
    if (std::abs(v) < 1e-3) continue;
    const std::complex<double> eigen = apply_rep(as_poincare(cover_rotation(kTwoPi)), s, psi)(p) / v;
    EXPECT_LT(std::abs(eigen - expected), 1e-9);
  }
}
