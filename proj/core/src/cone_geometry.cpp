#include "plektonlab/cone_geometry.hpp"

#include "plektonlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace plektonlab {

namespace {

constexpr double kTieTol = 1e-9;
constexpr double kFeasTol = 1e-10;

double spatial_angle(const MVec3& v) { return std::atan2(v.x2, v.x1); }

MVec3 normalized(const MVec3& v) {
  const double n = std::sqrt(v.x0 * v.x0 + v.x1 * v.x1 + v.x2 * v.x2);
  return (1.0 / n) * v;
}

double euclid_dot(const MVec3& a, const MVec3& b) { return a.x0 * b.x0 + a.x1 * b.x1 + a.x2 * b.x2; }

// Covector transform l -> eta Lambda eta l, so that {l.x > 0} maps to {l'.(Lambda x) > 0}.
MVec3 transform_covector(const LorentzMatrix& m, const MVec3& l) {
  const MVec3 el{l.x0, -l.x1, -l.x2};
  const MVec3 r = m.apply(el);
  return {r.x0, -r.x1, -r.x2};
}

struct HalfPlane {
  double ax;
  double ay;
  double b;  // ax u + ay v <= b
};

bool satisfies(const std::vector<HalfPlane>& hs, double u, double v) {
  if (u * u + v * v > 1.0 + kFeasTol) return false;
  for (const auto& h : hs) {
    if (h.ax * u + h.ay * v > h.b + kFeasTol) return false;
  }
  return true;
}

// Is {u : |u| <= 1, a_i.u <= b_i} non-empty? Checks every candidate extreme
// point: vertices of the polygon, line/circle intersections and a circle point.
bool disk_halfplanes_feasible(const std::vector<HalfPlane>& hs) {
  if (satisfies(hs, 1.0, 0.0) || satisfies(hs, 0.0, 0.0)) return true;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const auto& h = hs[i];
    const double na = std::hypot(h.ax, h.ay);
    if (na < 1e-14) continue;
    const double d = h.b / na;
    if (std::abs(d) <= 1.0 + kFeasTol) {
      const double fx = h.ax / na * d;
      const double fy = h.ay / na * d;
      const double s = std::sqrt(std::max(0.0, 1.0 - d * d));
      const double px = -h.ay / na;
      const double py = h.ax / na;
      if (satisfies(hs, fx + s * px, fy + s * py) || satisfies(hs, fx - s * px, fy - s * py)) return true;
    }
    for (std::size_t k = i + 1; k < hs.size(); ++k) {
      const auto& g = hs[k];
      const double det = h.ax * g.ay - h.ay * g.ax;
      if (std::abs(det) < 1e-14) continue;
      const double u = (h.b * g.ay - h.ay * g.b) / det;
      const double v = (h.ax * g.b - h.b * g.ax) / det;
      if (satisfies(hs, u, v)) return true;
    }
  }
  return false;
}

HalfPlane constraint_from(const MVec3& g, double n) {
  // (1, u).g <= 0, scaled by n.
  return {g.x1 / n, g.x2 / n, -g.x0 / n};
}

// Exists w = (1, u) in the closed forward light cone with w.g <= 0 for all g
// and w.d <= 0.
bool separating_covector_exists(const std::vector<MVec3>& gens, const MVec3& d) {
  std::vector<HalfPlane> hs;
  hs.reserve(gens.size() + 1);
  for (const auto& g : gens) hs.push_back(constraint_from(g, std::sqrt(euclid_dot(g, g))));
  // Apex offsets below the tolerance must not impose a constraint of unit strength.
  if (euclid_dot(d, d) > 0.0) hs.push_back(constraint_from(d, std::max(1.0, std::sqrt(euclid_dot(d, d)))));
  return disk_halfplanes_feasible(hs);
}

bool arcs_touch(double a, double b) { return std::abs(a - b) <= kTieTol; }

void require_same_frame(const ConePath& a, const ConePath& b) {
  if (!(a.frame() == b.frame())) throw PreconditionError("path classes are expressed over different reference frames");
}

std::vector<MVec3> cone_generators(double center, double half) {
  const double s = std::sin(half);
  return {
      MVec3{0.0, std::cos(center - half), std::sin(center - half)},
      MVec3{0.0, std::cos(center + half), std::sin(center + half)},
      normalized(MVec3{s, std::cos(center), std::sin(center)}),
      normalized(MVec3{-s, std::cos(center), std::sin(center)}),
  };
}

std::array<MVec3, 4> cone_normals(double center, double half) {
  const double a_plus = center + half - kPi / 2.0;
  const double a_minus = center - half + kPi / 2.0;
  const MVec3 np{0.0, std::cos(a_plus), std::sin(a_plus)};
  const MVec3 nm{0.0, std::cos(a_minus), std::sin(a_minus)};
  return {MVec3{-1.0, np.x1, np.x2}, MVec3{1.0, np.x1, np.x2}, MVec3{-1.0, nm.x1, nm.x2},
          MVec3{1.0, nm.x1, nm.x2}};
}

}  // namespace

SpacelikeDirection::SpacelikeDirection(const MVec3& e) : e_(e) {
  const double n2 = e.x0 * e.x0 + e.x1 * e.x1 + e.x2 * e.x2;
  if (!std::isfinite(n2) || std::abs(minkowski_inner(e, e) + 1.0) > 1e-12 * std::max(1.0, n2)) {
    throw InvalidArgument("space-like direction must satisfy e.e = -1");
  }
}

double direction_lifted_angle(const SpacelikeDirection& e, int sheet_hint) {
  const MVec3& v = e.vector();
  if (v.x1 == 0.0 && v.x2 == 0.0) throw InvalidArgument("direction has vanishing spatial part");
  return wrap_angle(spatial_angle(v)) + kTwoPi * sheet_hint;
}

double accumulated_angle(std::span<const MVec3> path) {
  double acc = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    acc += wrap_angle(spatial_angle(path[i]) - spatial_angle(path[i - 1]));
  }
  return acc;
}

ReferenceFrame::ReferenceFrame(double reference_angle, const ReferenceCone& cone)
    : reference_angle_(reference_angle), cone_(cone) {
  if (!(cone.half_opening > 0.0 && cone.half_opening < kPi / 2.0)) {
    throw InvalidArgument("reference cone half opening must lie in (0, pi/2)");
  }
  if (std::abs(wrap_angle(reference_angle - cone.center)) >= cone.half_opening) {
    throw InvalidArgument("reference direction is not contained in the reference cone");
  }
}

ReferenceFrame ReferenceFrame::j_invariant(bool positive_x2, double half_opening) {
  const double a = positive_x2 ? kPi / 2.0 : -kPi / 2.0;
  return {a, ReferenceCone{MVec3{}, a, half_opening}};
}

bool ReferenceFrame::is_j_invariant() const {
  // j maps the spatial angle phi to pi - phi and fixes the x2 axis.
  const bool apex_fixed = cone_.apex.x0 == 0.0 && cone_.apex.x1 == 0.0;
  const double c = wrap_angle(cone_.center);
  const bool axis = std::abs(c - kPi / 2.0) < 1e-12 || std::abs(c + kPi / 2.0) < 1e-12;
  return apex_fixed && axis;
}

bool ReferenceFrame::cone_inside_w1() const {
  const double c = wrap_angle(cone_.center);
  const MVec3& a = cone_.apex;
  return std::abs(c) + cone_.half_opening <= kPi / 2.0 && a.x1 >= std::abs(a.x0);
}

std::string to_string(RegionKind k) {
  switch (k) {
    case RegionKind::cone:
      return "cone";
    case RegionKind::wedge:
      return "wedge";
    case RegionKind::cone_complement:
      return "cone-complement";
  }
  return "?";
}

RegionKind region_kind_from_string(const std::string& s) {
  if (s == "cone") return RegionKind::cone;
  if (s == "wedge") return RegionKind::wedge;
  if (s == "cone-complement") return RegionKind::cone_complement;
  throw InvalidArgument("unknown region kind '" + s + "'");
}

LiftedArc ConePath::arc() const {
  const double r = frame_.reference_angle();
  return {r + rel_minus_, r + rel_plus_};
}

void ConePath::validate_arc() const {
  const double len = rel_plus_ - rel_minus_;
  const bool ok = [&] {
    switch (kind_) {
      case RegionKind::cone:
        return len > 0.0 && len < kPi;
      case RegionKind::wedge:
        return std::abs(len - kPi) < kAngleTol;
      case RegionKind::cone_complement:
        return len > kPi && len < kTwoPi;
    }
    return false;
  }();
  if (!ok || !std::isfinite(len)) throw InvalidArgument("lifted arc violates the length constraint for a " + to_string(kind_));
}

ConePath ConePath::cone(const MVec3& apex, double center, double half_opening, const ReferenceFrame& frame) {
  if (!(half_opening > 0.0 && half_opening < kPi / 2.0)) {
    throw InvalidArgument("cone half opening must lie in (0, pi/2)");
  }
  ConePath p;
  p.apex_ = apex;
  p.kind_ = RegionKind::cone;
  p.frame_ = frame;
  p.rel_minus_ = center - half_opening - frame.reference_angle();
  p.rel_plus_ = center + half_opening - frame.reference_angle();
  p.normals_ = cone_normals(center, half_opening);
  p.generators_ = cone_generators(center, half_opening);
  p.validate_arc();
  return p;
}

ConePath ConePath::wedge(const MVec3& apex, double center, const ReferenceFrame& frame) {
  ConePath p;
  p.apex_ = apex;
  p.kind_ = RegionKind::wedge;
  p.frame_ = frame;
  p.rel_minus_ = center - kPi / 2.0 - frame.reference_angle();
  p.rel_plus_ = center + kPi / 2.0 - frame.reference_angle();
  const MVec3 n{0.0, std::cos(center), std::sin(center)};
  p.normals_ = {MVec3{-1.0, n.x1, n.x2}, MVec3{1.0, n.x1, n.x2}, MVec3{-1.0, n.x1, n.x2}, MVec3{1.0, n.x1, n.x2}};
  const MVec3 edge{0.0, -n.x2, n.x1};
  p.generators_ = {edge, -edge, normalized(MVec3{1.0, n.x1, n.x2}), normalized(MVec3{-1.0, n.x1, n.x2})};
  p.validate_arc();
  return p;
}

ConePath ConePath::cone_complement(const MVec3& apex, double center, double half_opening,
                                   const ReferenceFrame& frame) {
  ConePath p = cone(apex, center, half_opening, frame);
  p.kind_ = RegionKind::cone_complement;
  const double r = frame.reference_angle();
  p.rel_minus_ = center + half_opening - r;
  p.rel_plus_ = center - half_opening + kTwoPi - r;
  p.validate_arc();
  return p;
}

bool ConePath::contains(const MVec3& x) const {
  if (kind_ == RegionKind::cone_complement) throw PreconditionError("membership is implemented for cones and wedges");
  const MVec3 d = x - apex_;
  return std::all_of(normals_.begin(), normals_.end(), [&](const MVec3& l) { return euclid_dot(l, d) > 0.0; });
}

bool causally_separated(const ConePath& c1, const ConePath& c2) {
  if (c1.kind() == RegionKind::cone_complement || c2.kind() == RegionKind::cone_complement) {
    throw PreconditionError("causal separation is decided for cones and wedges only");
  }
  std::vector<MVec3> gens;
  for (const auto& g : c1.generators()) gens.push_back(g);
  for (const auto& g : c2.generators()) gens.push_back(-g);
  const MVec3 d = c1.apex() - c2.apex();
  if (!separating_covector_exists(gens, d)) return false;  // some x - y future causal
  for (auto& g : gens) g = -g;
  return separating_covector_exists(gens, -d);  // no x - y past causal
}

namespace {

void require_separated(const ConePath& a, const ConePath& b) {
  require_same_frame(a, b);
  if (!causally_separated(a, b)) throw PreconditionError("regions are not causally separated");
}

bool both_wedges(const ConePath& a, const ConePath& b) {
  return a.kind() == RegionKind::wedge && b.kind() == RegionKind::wedge;
}

}  // namespace

bool precedes(const ConePath& c1, const ConePath& c2) {
  require_separated(c1, c2);
  const double hi = c1.relative_arc().alpha_plus;
  const double lo = c2.relative_arc().alpha_minus;
  if (arcs_touch(hi, lo)) {
    if (!both_wedges(c1, c2)) throw WindingError("arcs share an endpoint (grazing configuration)");
    return true;
  }
  return hi < lo;
}

int relative_winding(const ConePath& c2, const ConePath& c1) {
  require_separated(c2, c1);
  const LiftedArc a1 = c1.relative_arc();
  const LiftedArc a2 = c2.relative_arc();
  const double shift = (a2.alpha_minus - a1.alpha_plus) / kTwoPi;
  const double n = std::floor(shift + kTieTol);
  if (!std::isfinite(n) || std::abs(n) > 1e9) throw WindingError("winding number out of range");
  // r(2 pi n).c1 < c2 and c2 < r(2 pi (n+1)).c1
  const double lower_gap = a2.alpha_minus - (a1.alpha_plus + kTwoPi * n);
  const double upper_gap = (a1.alpha_minus + kTwoPi * (n + 1.0)) - a2.alpha_plus;
  if (lower_gap < -kTieTol || upper_gap < -kTieTol) {
    throw WindingError("no integer n positions the second arc between 2 pi rotates of the first");
  }
  if ((std::abs(lower_gap) <= kTieTol || std::abs(upper_gap) <= kTieTol) && !both_wedges(c1, c2)) {
    throw WindingError("arcs share an endpoint (grazing configuration)");
  }
  return static_cast<int>(n);
}

ConePath act(const CoveringPoincare& g, const ConePath& c) {
  const CoveringLorentz& l = g.lorentz;
  const LorentzMatrix& m = l.matrix();

  ConePath out = c;
  out.apex_ = g.translation + m.apply(c.apex_);
  for (auto& n : out.normals_) n = normalized(transform_covector(m, n));

  // Arc of the cone whose generators are stored: for complements that is the
  // complementary arc continued past alpha_plus.
  const bool complement = c.kind_ == RegionKind::cone_complement;
  const double ref = c.frame_.reference_angle();
  const double lo = complement ? c.rel_plus_ : c.rel_minus_;
  const double hi = complement ? c.rel_minus_ + kTwoPi : c.rel_plus_;
  const double center_abs = ref + 0.5 * (lo + hi);

  double new_lo = std::numeric_limits<double>::infinity();
  double new_hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < c.generators_.size(); ++i) {
    const MVec3& r = c.generators_[i];
    const double start = center_abs + wrap_angle(spatial_angle(r) - center_abs);
    const double end =
        continue_lift([&](double t) { return spatial_angle(l.path_at(t).apply(r)); }, start);
    new_lo = std::min(new_lo, end);
    new_hi = std::max(new_hi, end);
    out.generators_[i] = normalized(m.apply(r));
  }
  new_lo -= ref;
  new_hi -= ref;
  if (complement) {
    out.rel_minus_ = new_hi - kTwoPi;
    out.rel_plus_ = new_lo;
  } else {
    out.rel_minus_ = new_lo;
    out.rel_plus_ = new_hi;
  }
  if (c.kind_ == RegionKind::wedge) {
    // Edge directions stay antipodal; pin the length to exactly pi.
    const double mid = 0.5 * (out.rel_minus_ + out.rel_plus_);
    out.rel_minus_ = mid - kPi / 2.0;
    out.rel_plus_ = mid + kPi / 2.0;
  }
  out.validate_arc();
  return out;
}

ConePath reflect_path(const ConePath& c) {
  if (!c.frame_.is_j_invariant()) throw PreconditionError("reference cone is not j-invariant");
  ConePath out = c;
  out.apex_ = reflect(c.apex_);
  for (auto& n : out.normals_) n = reflect(n);
  for (auto& g : out.generators_) g = reflect(g);
  out.rel_minus_ = -c.rel_plus_;
  out.rel_plus_ = -c.rel_minus_;
  return out;
}

ConePath standard_wedge_path(const ReferenceFrame& frame) {
  if (!frame.is_j_invariant() && !frame.cone_inside_w1()) {
    throw PreconditionError("reference cone must lie inside W1 or be j-invariant");
  }
  const double k = std::round(frame.reference_angle() / kTwoPi);
  return ConePath::wedge(MVec3{}, kTwoPi * k, frame);
}

ConePath rebase(const ConePath& c, const ReferenceFrame& frame) {
  const double offset = wrap_angle(frame.reference_angle() - c.frame_.reference_angle());
  ConePath out = c;
  out.frame_ = frame;
  out.rel_minus_ = c.rel_minus_ - offset;
  out.rel_plus_ = c.rel_plus_ - offset;
  return out;
}

}  // namespace plektonlab
