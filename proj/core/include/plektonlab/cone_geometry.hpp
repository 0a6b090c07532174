#pragma once

// Space-like cones, wedges and causal complements of cones in 2+1 dimensions,
// together with their path classes: a region plus a sheet of the universal
// cover of the manifold H of space-like directions. A sheet is represented by
// a lifted angular arc, measured as accumulated angle from the reference
// direction e0 of a ReferenceFrame.

#include "plektonlab/minkowski.hpp"

#include <array>
#include <span>
#include <string>
#include <vector>

namespace plektonlab {

/// e with e.e = -1.
class SpacelikeDirection {
 public:
  /// Throws InvalidArgument unless |e.e + 1| <= 1e-12 (relative to |e|^2).
  explicit SpacelikeDirection(const MVec3& e);
  const MVec3& vector() const { return e_; }

 private:
  MVec3 e_;
};

/// atan2(e2, e1) on the branch (-pi, pi], plus 2 pi * sheet_hint.
double direction_lifted_angle(const SpacelikeDirection& e, int sheet_hint);

/// Sum of the wrapped angle increments along a sampled path of directions,
/// i.e. the integral of the angle one-form. Consecutive samples must be
/// less than pi apart in angle.
double accumulated_angle(std::span<const MVec3> path);

struct ReferenceCone {
  MVec3 apex;
  double center = 0.0;
  double half_opening = 0.25;
  friend bool operator==(const ReferenceCone&, const ReferenceCone&) = default;
};

/// Base point data for path classes: the reference direction e0 (given by its
/// lifted angle) and the reference cone C0 containing it.
class ReferenceFrame {
 public:
  /// e0 along +x1, C0 a narrow cone around it (inside W1).
  ReferenceFrame() = default;
  /// Throws InvalidArgument unless e0 lies in C0 and C0 is a proper cone.
  ReferenceFrame(double reference_angle, const ReferenceCone& cone);

  static ReferenceFrame standard() { return {}; }
  /// j-invariant frame whose reference cone contains the positive (or negative) x2 axis.
  static ReferenceFrame j_invariant(bool positive_x2, double half_opening = 0.25);

  double reference_angle() const { return reference_angle_; }
  const ReferenceCone& cone() const { return cone_; }
  /// j C0 = C0 (and hence j e0 = e0).
  bool is_j_invariant() const;
  /// C0 is contained in the standard wedge W1.
  bool cone_inside_w1() const;

  friend bool operator==(const ReferenceFrame&, const ReferenceFrame&) = default;

 private:
  double reference_angle_ = 0.0;
  ReferenceCone cone_{};
};

enum class RegionKind { cone, wedge, cone_complement };

std::string to_string(RegionKind k);
RegionKind region_kind_from_string(const std::string& s);

/// Lifted angular arc (absolute lifted angles).
struct LiftedArc {
  double alpha_minus = 0.0;
  double alpha_plus = 0.0;
  double length() const { return alpha_plus - alpha_minus; }
  friend bool operator==(const LiftedArc&, const LiftedArc&) = default;
};

/// Path class of a localization region: apex, region shape and the sheet over
/// its direction set.
///
/// A cone with center angle phi and half opening delta < pi/2 is the causal
/// completion of the spatial sector |angle - phi| < delta at the apex: the
/// points with n_+.x > |x0| and n_-.x > |x0|, where n_+- are the inward
/// normals of the two bounding rays. Its boundary consists of four light-like
/// planes. A wedge is the case delta = pi/2.
class ConePath {
 public:
  /// `center` is an absolute lifted angle; the sheet is encoded in it.
  static ConePath cone(const MVec3& apex, double center, double half_opening,
                       const ReferenceFrame& frame = ReferenceFrame::standard());
  static ConePath wedge(const MVec3& apex, double center, const ReferenceFrame& frame = ReferenceFrame::standard());
  /// Causal complement of `cone(apex, center, half_opening)`; its arc is the
  /// complementary arc (center + delta, center - delta + 2 pi).
  static ConePath cone_complement(const MVec3& apex, double center, double half_opening,
                                  const ReferenceFrame& frame = ReferenceFrame::standard());

  const MVec3& apex() const { return apex_; }
  RegionKind kind() const { return kind_; }
  const ReferenceFrame& frame() const { return frame_; }
  /// Absolute lifted arc.
  LiftedArc arc() const;
  /// Arc as accumulated angle from e0.
  LiftedArc relative_arc() const { return {rel_minus_, rel_plus_}; }
  /// Covectors l with the region (or the underlying cone, for complements)
  /// equal to { x : l.(x - apex) > 0 } (Euclidean pairing). All light-like.
  const std::array<MVec3, 4>& boundary_normals() const { return normals_; }
  /// Generators of the closure of (region - apex); for complements those of the underlying cone.
  const std::vector<MVec3>& generators() const { return generators_; }

  /// Strict membership, for cones and wedges.
  bool contains(const MVec3& x) const;

  friend bool operator==(const ConePath&, const ConePath&) = default;

 private:
  friend ConePath act(const CoveringPoincare&, const ConePath&);
  friend ConePath reflect_path(const ConePath&);
  friend ConePath rebase(const ConePath&, const ReferenceFrame&);

  ConePath() = default;
  void validate_arc() const;

  MVec3 apex_;
  RegionKind kind_ = RegionKind::cone;
  double rel_minus_ = 0.0;
  double rel_plus_ = 0.0;
  std::array<MVec3, 4> normals_{};
  std::vector<MVec3> generators_;
  ReferenceFrame frame_;
};

/// True iff no x in C1, y in C2 satisfy (x - y).(x - y) >= 0. Decided by
/// searching for a separating covector w in the closed forward light cone
/// with w.g <= 0 on every generator g of C1 - C2 and on the apex
/// difference (and the same for the past cone). Kinds cone or wedge only.
bool causally_separated(const ConePath& c1, const ConePath& c2);

/// c1 < c2: all lifted angles of c1 lie below those of c2. Requires causally
/// separated regions in a common frame. Arcs touching at an endpoint are
/// accepted only when both regions are wedges; otherwise rejected.
bool precedes(const ConePath& c1, const ConePath& c2);

/// N(c2, c1): the unique n with r(2 pi n).c1 < c2 < r(2 pi (n+1)).c1.
/// Throws PreconditionError if not causally separated and WindingError when
/// no such n exists.
int relative_winding(const ConePath& c2, const ConePath& c1);

/// Natural action of the covering Poincare group: apex -> x + Lambda a, arc
/// transported by continuing the angles of the extreme rays along the
/// canonical path of g.
ConePath act(const CoveringPoincare& g, const ConePath& c);

/// Canonical action of j on path classes over a j-invariant reference cone.
/// Accumulated angles change sign.
ConePath reflect_path(const ConePath& c);

/// Shortest path from the reference cone to W1.
ConePath standard_wedge_path(const ReferenceFrame& frame = ReferenceFrame::standard());

/// Re-expresses a path class over another reference frame. All arcs shift by
/// a common multiple of 2 pi; relative winding numbers are unchanged.
ConePath rebase(const ConePath& c, const ReferenceFrame& frame);

}  // namespace plektonlab
