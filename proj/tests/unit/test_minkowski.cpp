#include <gtest/gtest.h>

#include <plektonlab/errors.hpp>
#include <plektonlab/minkowski.hpp>

#include "generators.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace plektonlab;

namespace {

double max_diff(const LorentzMatrix& a, const Eigen::Matrix3d& b) { return (a.matrix() - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST(MinkowskiInner, SignatureExamples) {
  EXPECT_EQ(minkowski_inner({1, 0, 0}, {1, 0, 0}), 1.0);
  EXPECT_EQ(minkowski_inner({0, 1, 0}, {0, 1, 0}), -1.0);
  EXPECT_EQ(minkowski_inner({1, 1, 0}, {1, 1, 0}), 0.0);
}

TEST(PolarRotationAngle, Examples) {
  EXPECT_EQ(polar_rotation_angle(LorentzMatrix()), 0.0);
  EXPECT_NEAR(polar_rotation_angle(rotation_matrix(kPi / 3)), kPi / 3, 1e-14);
  EXPECT_NEAR(polar_rotation_angle(boost_matrix(0.8, 0.0)), 0.0, 1e-14);
}

TEST(PolarRotationAngle, RejectsNonLorentz) {
  Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
  m(1, 1) = 2.0;
  EXPECT_THROW(LorentzMatrix::from(m), InvalidArgument);
  EXPECT_THROW(LorentzMatrix::from(-Eigen::Matrix3d::Identity()), InvalidArgument);
  Eigen::Matrix3d j = Eigen::Matrix3d::Identity();
  j(0, 0) = j(1, 1) = -1.0;
  EXPECT_THROW(LorentzMatrix::from(j), InvalidArgument);
}

TEST(PolarRotationAngle, AgreesWithEuclideanPolarOracle) {
  gen::Rng r(11);
  for (int i = 0; i < 200; ++i) {
    const CoveringLorentz g = gen::lorentz(r);
    EXPECT_NEAR(wrap_angle(polar_rotation_angle(g.matrix()) - oracle::polar(g.matrix().matrix()).angle), 0.0, 1e-10);
  }
}

TEST(CoverCompose, DoubleFullRotation) {
  const CoveringLorentz g = cover_compose(cover_rotation(kTwoPi), cover_rotation(kTwoPi));
  EXPECT_LT(max_diff(g.matrix(), Eigen::Matrix3d::Identity()), 1e-12);
  EXPECT_NEAR(g.lifted_angle(), 2 * kTwoPi, 1e-12);
}

TEST(CoverCompose, RightIdentity) {
  gen::Rng r(2);
  for (int i = 0; i < 50; ++i) {
    const CoveringLorentz g = gen::lorentz(r);
    const CoveringLorentz h = cover_compose(g, CoveringLorentz());
    EXPECT_NEAR(h.lifted_angle(), g.lifted_angle(), 1e-12);
    EXPECT_LT(max_diff(h.matrix(), g.matrix().matrix()), 1e-15);
  }
}

TEST(CoverCompose, HalfTurnConjugatesBoost) {
  const double t = 0.9;
  const CoveringLorentz g = cover_compose(cover_rotation(kPi), cover_compose(cover_boost1(t), cover_rotation(-kPi)));
  EXPECT_LT(max_diff(g.matrix(), cover_boost1(-t).matrix().matrix()), 1e-12);
  EXPECT_NEAR(g.lifted_angle(), 0.0, 1e-9);
}

TEST(CoverCompose, AgreesWithFineStepOracle) {
  gen::Rng r(3);
  for (int i = 0; i < 60; ++i) {
    const CoveringLorentz a = gen::lorentz(r);
    const CoveringLorentz b = gen::lorentz(r);
    EXPECT_NEAR(cover_compose(a, b).lifted_angle(), oracle::composed_angle(a, b), 1e-9);
  }
}

TEST(OneParameterSubgroups, Examples) {
  const CoveringLorentz full = cover_rotation(kTwoPi);
  EXPECT_LT(max_diff(full.matrix(), Eigen::Matrix3d::Identity()), 1e-12);
  EXPECT_EQ(full.lifted_angle(), kTwoPi);

  const double t = 0.7;
  const MVec3 x = cover_boost1(t).matrix().apply({0.3, -1.1, 2.0});
  EXPECT_NEAR(x.x0, std::cosh(t) * 0.3 + std::sinh(t) * -1.1, 1e-14);
  EXPECT_NEAR(x.x1, std::sinh(t) * 0.3 + std::cosh(t) * -1.1, 1e-14);
  EXPECT_NEAR(x.x2, 2.0, 1e-14);
  EXPECT_EQ(cover_boost1(t).lifted_angle(), 0.0);

  const CoveringLorentz zero = cover_rotation(0.0);
  EXPECT_LT(max_diff(zero.matrix(), Eigen::Matrix3d::Identity()), 1e-15);
  EXPECT_EQ(zero.lifted_angle(), 0.0);

  const CoveringPoincare tr = cover_translation({1, 2, 3});
  EXPECT_EQ(tr.apply({0, 0, 0}), (MVec3{1, 2, 3}));
}

TEST(CoveringLorentz, RejectsInconsistentLift) {
  EXPECT_THROW(CoveringLorentz(rotation_matrix(0.5), 0.4), InvalidArgument);
  EXPECT_NO_THROW(CoveringLorentz(rotation_matrix(0.5), 0.5 + 2 * kTwoPi));
}

TEST(ReflectConjugate, Examples) {
  const CoveringLorentz r = reflect_conjugate(cover_rotation(0.8));
  EXPECT_NEAR(r.lifted_angle(), -0.8, 1e-15);
  EXPECT_LT(max_diff(r.matrix(), rotation_matrix(-0.8).matrix()), 1e-14);

  const CoveringLorentz b = reflect_conjugate(cover_boost1(1.3));
  EXPECT_EQ(b.lifted_angle(), 0.0);
  EXPECT_LT(max_diff(b.matrix(), cover_boost1(1.3).matrix().matrix()), 1e-14);

  gen::Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    const CoveringPoincare g = gen::poincare(rng);
    const CoveringPoincare back = reflect_conjugate(reflect_conjugate(g));
    EXPECT_EQ(back.lorentz.lifted_angle(), g.lorentz.lifted_angle());
    EXPECT_EQ(back.translation, g.translation);
    EXPECT_LT(max_diff(back.lorentz.matrix(), g.lorentz.matrix().matrix()), 1e-15);
  }
}

TEST(CoveringProperties, Associativity) {
  gen::Rng r(5);
  for (int i = 0; i < 200; ++i) {
    const CoveringLorentz a = gen::lorentz(r);
    const CoveringLorentz b = gen::lorentz(r);
    const CoveringLorentz c = gen::lorentz(r);
    const CoveringLorentz left = cover_compose(cover_compose(a, b), c);
    const CoveringLorentz right = cover_compose(a, cover_compose(b, c));
    EXPECT_NEAR(left.lifted_angle(), right.lifted_angle(), kAngleTol);
    EXPECT_LT(max_diff(left.matrix(), right.matrix().matrix()), 1e-12);
  }
}

TEST(CoveringProperties, ProjectionIsHomomorphism) {
  gen::Rng r(6);
  for (int i = 0; i < 200; ++i) {
    const CoveringLorentz a = gen::lorentz(r);
    const CoveringLorentz b = gen::lorentz(r);
    EXPECT_LT(max_diff(cover_compose(a, b).matrix(), a.matrix().matrix() * b.matrix().matrix()), 1e-12);
  }
}

TEST(CoveringProperties, FullRotationsAreCentral) {
  gen::Rng r(7);
  for (int i = 0; i < 200; ++i) {
    const CoveringLorentz g = gen::lorentz(r);
    const int n = static_cast<int>(r.integer(-3, 3));
    const CoveringLorentz z = cover_rotation(kTwoPi * n);
    const CoveringLorentz zg = cover_compose(z, g);
    const CoveringLorentz gz = cover_compose(g, z);
    EXPECT_NEAR(zg.lifted_angle(), gz.lifted_angle(), kAngleTol);
    EXPECT_NEAR(zg.lifted_angle(), g.lifted_angle() + kTwoPi * n, kAngleTol);
    EXPECT_LT(max_diff(zg.matrix(), gz.matrix().matrix()), 1e-12);
  }
}

TEST(CoveringProperties, ReflectConjugateIsAutomorphism) {
  gen::Rng r(8);
  for (int i = 0; i < 200; ++i) {
    const CoveringPoincare a = gen::poincare(r);
    const CoveringPoincare b = gen::poincare(r);
    const CoveringPoincare lhs = reflect_conjugate(cover_compose(a, b));
    const CoveringPoincare rhs = cover_compose(reflect_conjugate(a), reflect_conjugate(b));
    EXPECT_NEAR(lhs.lorentz.lifted_angle(), rhs.lorentz.lifted_angle(), kAngleTol);
    EXPECT_LT(max_diff(lhs.lorentz.matrix(), rhs.lorentz.matrix().matrix()), 1e-12);
    const MVec3 d = lhs.translation - rhs.translation;
    EXPECT_LT(std::abs(d.x0) + std::abs(d.x1) + std::abs(d.x2), 1e-12);
  }
}

TEST(CoveringProperties, InverseCancels) {
  gen::Rng r(9);
  for (int i = 0; i < 100; ++i) {
    const CoveringPoincare g = gen::poincare(r);
    const CoveringPoincare e = cover_compose(g, cover_inverse(g));
    EXPECT_NEAR(e.lorentz.lifted_angle(), 0.0, kAngleTol);
    EXPECT_LT(max_diff(e.lorentz.matrix(), Eigen::Matrix3d::Identity()), 1e-12);
  }
}

TEST(ContinueLift, ThrowsOnDiscontinuity) {
  EXPECT_THROW(continue_lift([](double t) { return t < 0.5 ? 0.0 : 2.0; }, 0.0), LiftFailure);
}
