#pragma once

// 2+1-dimensional Minkowski vectors, proper orthochronous Lorentz matrices and
// elements of the universal covering group of the Poincare group.
//
// Covering elements are stored as (matrix, lifted polar-rotation angle). The
// lifted angle of a product is obtained by continuing the polar rotation angle
// along the one-parameter interpolation path of the second factor, so no
// closed-form cocycle for the cover is needed.

#include <Eigen/Core>

#include <functional>
#include <numbers>

namespace plektonlab {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Tolerance for group-law checks on matrices.
inline constexpr double kMatrixTol = 1e-12;
/// Tolerance for continued lifted angles.
inline constexpr double kAngleTol = 1e-9;

/// Point or vector in R^3 with metric signature (+,-,-).
struct MVec3 {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;

  friend MVec3 operator+(const MVec3& a, const MVec3& b) { return {a.x0 + b.x0, a.x1 + b.x1, a.x2 + b.x2}; }
  friend MVec3 operator-(const MVec3& a, const MVec3& b) { return {a.x0 - b.x0, a.x1 - b.x1, a.x2 - b.x2}; }
  friend MVec3 operator-(const MVec3& a) { return {-a.x0, -a.x1, -a.x2}; }
  friend MVec3 operator*(double s, const MVec3& a) { return {s * a.x0, s * a.x1, s * a.x2}; }
  friend bool operator==(const MVec3&, const MVec3&) = default;

  Eigen::Vector3d eigen() const { return {x0, x1, x2}; }
  static MVec3 from(const Eigen::Vector3d& v) { return {v(0), v(1), v(2)}; }
};

/// u0 v0 - u1 v1 - u2 v2
double minkowski_inner(const MVec3& u, const MVec3& v);

/// Wraps an angle into (-pi, pi].
double wrap_angle(double a);

/// Proper orthochronous Lorentz matrix. Construction through `from` validates
/// Lambda^T eta Lambda = eta, det = 1 and Lambda_00 >= 1.
class LorentzMatrix {
 public:
  LorentzMatrix() : m_(Eigen::Matrix3d::Identity()) {}

  /// Throws InvalidArgument if `m` is not proper orthochronous Lorentz.
  static LorentzMatrix from(const Eigen::Matrix3d& m);
  static bool is_proper_orthochronous(const Eigen::Matrix3d& m, double tol = kMatrixTol);

  const Eigen::Matrix3d& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  MVec3 apply(const MVec3& x) const { return MVec3::from(m_ * x.eigen()); }
  LorentzMatrix inverse() const;

  friend LorentzMatrix operator*(const LorentzMatrix& a, const LorentzMatrix& b) {
    return LorentzMatrix(a.m_ * b.m_, 0);
  }

 private:
  LorentzMatrix(const Eigen::Matrix3d& m, int /*unchecked*/) : m_(m) {}
  friend LorentzMatrix rotation_matrix(double);
  friend LorentzMatrix boost_matrix(double, double);
  friend LorentzMatrix pure_boost_to(const MVec3&);
  friend LorentzMatrix reflect_matrix(const LorentzMatrix&);

  Eigen::Matrix3d m_;
};

/// Rotation by `angle` in the (x1, x2) plane.
LorentzMatrix rotation_matrix(double angle);
/// Pure boost with the given rapidity along the spatial direction at `direction` angle.
LorentzMatrix boost_matrix(double rapidity, double direction);
/// The symmetric positive boost mapping (1,0,0) onto the future timelike unit vector u.
LorentzMatrix pure_boost_to(const MVec3& u);
/// j Lambda j with j = diag(-1,-1,1).
LorentzMatrix reflect_matrix(const LorentzMatrix& m);

/// Factors of Lambda = R(angle) * B(rapidity, direction).
struct PolarFactors {
  double angle = 0.0;  ///< in (-pi, pi]
  double rapidity = 0.0;
  double direction = 0.0;
};
PolarFactors polar_decompose(const LorentzMatrix& m);

/// Angle in (-pi, pi] of the rotation factor R in Lambda = R S, S symmetric positive.
double polar_rotation_angle(const LorentzMatrix& m);

/// Continues a principal-valued angle t -> principal(t), t in [0, 1], starting at
/// the lift `start` of principal(0). Steps are halved until every increment is
/// below pi/4 and consistent with its midpoint refinement. The returned lift is
/// snapped to principal(1) + 2 pi k. Throws LiftFailure on step-size underflow.
double continue_lift(const std::function<double(double)>& principal, double start);

/// Element of the universal covering group of L_+^up.
class CoveringLorentz {
 public:
  CoveringLorentz() = default;
  /// Throws InvalidArgument unless lifted_angle == polar_rotation_angle(m) mod 2 pi.
  CoveringLorentz(const LorentzMatrix& m, double lifted_angle);

  const LorentzMatrix& matrix() const { return matrix_; }
  double lifted_angle() const { return lifted_angle_; }

  /// Point at parameter t in [0, 1] of the canonical path from the identity:
  /// R(t * lifted_angle) * B(t * rapidity, direction). Its polar angle lifts to
  /// t * lifted_angle, which identifies the path class with this element.
  LorentzMatrix path_at(double t) const;

 private:
  LorentzMatrix matrix_;
  double lifted_angle_ = 0.0;
  PolarFactors polar_;
};

/// Element (x, lambda~) of the universal covering group of the Poincare group.
struct CoveringPoincare {
  MVec3 translation;
  CoveringLorentz lorentz;

  MVec3 apply(const MVec3& x) const { return translation + lorentz.matrix().apply(x); }
};

CoveringLorentz cover_rotation(double lifted_angle);
CoveringLorentz cover_boost1(double rapidity);
CoveringPoincare cover_translation(const MVec3& a);
CoveringPoincare as_poincare(const CoveringLorentz& l);

CoveringLorentz cover_compose(const CoveringLorentz& a, const CoveringLorentz& b);
CoveringPoincare cover_compose(const CoveringPoincare& a, const CoveringPoincare& b);
CoveringLorentz cover_inverse(const CoveringLorentz& a);
CoveringPoincare cover_inverse(const CoveringPoincare& a);

/// j g j: matrix j Lambda j, translation j x, lifted angle negated.
CoveringLorentz reflect_conjugate(const CoveringLorentz& g);
CoveringPoincare reflect_conjugate(const CoveringPoincare& g);

/// j = diag(-1, -1, 1) applied to a vector.
inline MVec3 reflect(const MVec3& x) { return {-x.x0, -x.x1, x.x2}; }

}  // namespace plektonlab
