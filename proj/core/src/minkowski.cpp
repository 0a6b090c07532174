#include "plektonlab/minkowski.hpp"

#include "plektonlab/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

namespace plektonlab {

namespace {

const Eigen::Matrix3d& eta() {
  static const Eigen::Matrix3d m = Eigen::Vector3d(1.0, -1.0, -1.0).asDiagonal();
  return m;
}

const Eigen::Matrix3d& j_matrix() {
  static const Eigen::Matrix3d m = Eigen::Vector3d(-1.0, -1.0, 1.0).asDiagonal();
  return m;
}

}  // namespace

double minkowski_inner(const MVec3& u, const MVec3& v) { return u.x0 * v.x0 - u.x1 * v.x1 - u.x2 * v.x2; }

double wrap_angle(double a) {
  double r = std::remainder(a, kTwoPi);  // [-pi, pi]
  if (r <= -kPi) r += kTwoPi;
  return r;
}

bool LorentzMatrix::is_proper_orthochronous(const Eigen::Matrix3d& m, double tol) {
  if (!m.allFinite()) return false;
  // Entries of boosts grow like cosh(rapidity); scale the tolerance accordingly.
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double t = tol * scale * scale;
  if ((m.transpose() * eta() * m - eta()).cwiseAbs().maxCoeff() > t) return false;
  if (std::abs(m.determinant() - 1.0) > t) return false;
  return m(0, 0) >= 1.0 - t;
}

LorentzMatrix LorentzMatrix::from(const Eigen::Matrix3d& m) {
  if (!is_proper_orthochronous(m)) throw InvalidArgument("matrix is not a proper orthochronous Lorentz matrix");
  return LorentzMatrix(m, 0);
}

LorentzMatrix LorentzMatrix::inverse() const { return LorentzMatrix(eta() * m_.transpose() * eta(), 0); }

LorentzMatrix rotation_matrix(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Eigen::Matrix3d m;
  m << 1, 0, 0,  //
      0, c, -s,  //
      0, s, c;
  return LorentzMatrix(m, 0);
}

LorentzMatrix pure_boost_to(const MVec3& u) {
  const Eigen::Vector3d us(0.0, u.x1, u.x2);
  Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
  m(0, 0) = u.x0;
  m(0, 1) = m(1, 0) = u.x1;
  m(0, 2) = m(2, 0) = u.x2;
  const double k = 1.0 / (1.0 + u.x0);
  m(1, 1) += k * u.x1 * u.x1;
  m(1, 2) += k * u.x1 * u.x2;
  m(2, 1) += k * u.x2 * u.x1;
  m(2, 2) += k * u.x2 * u.x2;
  return LorentzMatrix(m, 0);
}

LorentzMatrix boost_matrix(double rapidity, double direction) {
  const double sh = std::sinh(rapidity);
  return pure_boost_to({std::cosh(rapidity), sh * std::cos(direction), sh * std::sin(direction)});
}

LorentzMatrix reflect_matrix(const LorentzMatrix& m) { return LorentzMatrix(j_matrix() * m.m_ * j_matrix(), 0); }

PolarFactors polar_decompose(const LorentzMatrix& m) {
  // Lambda = R S with S e0 = (L00, L01, L02); R = Lambda S^{-1}.
  const MVec3 u{m(0, 0), m(0, 1), m(0, 2)};
  const LorentzMatrix s_inv = pure_boost_to({u.x0, -u.x1, -u.x2});
  const Eigen::Matrix3d r = m.matrix() * s_inv.matrix();
  PolarFactors f;
  f.angle = wrap_angle(std::atan2(r(2, 1), r(1, 1)));
  f.rapidity = std::acosh(std::max(1.0, u.x0));
  f.direction = (u.x1 == 0.0 && u.x2 == 0.0) ? 0.0 : std::atan2(u.x2, u.x1);
  return f;
}

double polar_rotation_angle(const LorentzMatrix& m) { return polar_decompose(m).angle; }

double continue_lift(const std::function<double(double)>& principal, double start) {
  constexpr double kMaxStep = 1.0 / 16.0;
  constexpr double kMinStep = 1e-12;
  constexpr double kMaxIncrement = kPi / 4.0;

  double t = 0.0;
  double h = kMaxStep;
  double prev = principal(0.0);
  double acc = start;
  while (t < 1.0) {
    h = std::min(h, 1.0 - t);
    const double cur = principal(t + h);
    const double d = wrap_angle(cur - prev);
    bool accept = std::abs(d) < kMaxIncrement;
    if (accept) {
      const double mid = principal(t + 0.5 * h);
      const double d1 = wrap_angle(mid - prev);
      const double d2 = wrap_angle(cur - mid);
      accept = std::abs(d1 + d2 - d) < 1e-9;
    }
    if (!accept) {
      h *= 0.5;
      if (h < kMinStep) throw LiftFailure("angle continuation step size underflow at t = " + std::to_string(t));
      continue;
    }
    acc += d;
    prev = cur;
    t += h;
    h = std::min(kMaxStep, 2.0 * h);
  }
  const double end = principal(1.0);
  return end + kTwoPi * std::round((acc - end) / kTwoPi);
}

CoveringLorentz::CoveringLorentz(const LorentzMatrix& m, double lifted_angle)
    : matrix_(m), lifted_angle_(lifted_angle), polar_(polar_decompose(m)) {
  const double diff = wrap_angle(lifted_angle - polar_.angle);
  if (!std::isfinite(lifted_angle) || std::abs(diff) > 1e-7) {
    throw InvalidArgument("lifted angle is not congruent to the polar rotation angle mod 2 pi");
  }
}

LorentzMatrix CoveringLorentz::path_at(double t) const {
  return rotation_matrix(t * lifted_angle_) * boost_matrix(t * polar_.rapidity, polar_.direction);
}

CoveringLorentz cover_rotation(double lifted_angle) { return {rotation_matrix(lifted_angle), lifted_angle}; }

CoveringLorentz cover_boost1(double rapidity) { return {boost_matrix(rapidity, 0.0), 0.0}; }

CoveringPoincare cover_translation(const MVec3& a) { return {a, CoveringLorentz()}; }

CoveringPoincare as_poincare(const CoveringLorentz& l) { return {MVec3{}, l}; }

CoveringLorentz cover_compose(const CoveringLorentz& a, const CoveringLorentz& b) {
  const LorentzMatrix& am = a.matrix();
  const double lifted =
      continue_lift([&](double t) { return polar_rotation_angle(am * b.path_at(t)); }, a.lifted_angle());
  return {am * b.matrix(), lifted};
}

CoveringPoincare cover_compose(const CoveringPoincare& a, const CoveringPoincare& b) {
  return {a.translation + a.lorentz.matrix().apply(b.translation), cover_compose(a.lorentz, b.lorentz)};
}

CoveringLorentz cover_inverse(const CoveringLorentz& a) {
  // (R S)^{-1} = R^{-1} (R S^{-1} R^{-1}) with the bracket symmetric positive.
  return {a.matrix().inverse(), -a.lifted_angle()};
}

CoveringPoincare cover_inverse(const CoveringPoincare& a) {
  const CoveringLorentz inv = cover_inverse(a.lorentz);
  return {-inv.matrix().apply(a.translation), inv};
}

CoveringLorentz reflect_conjugate(const CoveringLorentz& g) {
  return {reflect_matrix(g.matrix()), -g.lifted_angle()};
}

CoveringPoincare reflect_conjugate(const CoveringPoincare& g) {
  return {reflect(g.translation), reflect_conjugate(g.lorentz)};
}

}  // namespace plektonlab
