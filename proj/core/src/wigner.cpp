#include "plektonlab/wigner.hpp"

#include "plektonlab/errors.hpp"

#include <algorithm>
#include <cmath>

namespace plektonlab {

MassShellPoint::MassShellPoint(double mass, double p1, double p2) : m_(mass), p1_(p1), p2_(p2) {
  if (!(mass > 0.0) || !std::isfinite(mass) || !std::isfinite(p1) || !std::isfinite(p2)) {
    throw InvalidArgument("mass shell point needs a positive mass and finite momentum");
  }
}

MassShellPoint MassShellPoint::from_four(const MVec3& p, double mass) {
  const double scale = p.x0 * p.x0 + p.x1 * p.x1 + p.x2 * p.x2;
  if (!(p.x0 > 0.0) || std::abs(minkowski_inner(p, p) - mass * mass) > 1e-12 * std::max(1.0, scale)) {
    throw InvalidArgument("momentum is not on the positive mass shell");
  }
  return {mass, p.x1, p.x2};
}

double MassShellPoint::energy() const { return std::sqrt(m_ * m_ + p1_ * p1_ + p2_ * p2_); }

LorentzMatrix standard_boost(const MassShellPoint& p) { return pure_boost_to((1.0 / p.mass()) * p.four()); }

namespace {

MassShellPoint transform(const LorentzMatrix& m, const MassShellPoint& p) {
  const MVec3 q = m.apply(p.four());
  return {p.mass(), q.x1, q.x2};
}

}  // namespace

double wigner_rotation(const CoveringLorentz& g, const MassShellPoint& p) {
  const LorentzMatrix bp = standard_boost(p);
  return continue_lift(
      [&](double t) {
        const LorentzMatrix l = g.path_at(t);
        const Eigen::Matrix3d w = standard_boost(transform(l, p)).inverse().matrix() * l.matrix() * bp.matrix();
        return std::atan2(w(2, 1), w(1, 1));
      },
      0.0);
}

struct WaveFunction::Node {
  virtual ~Node() = default;
  virtual std::complex<double> eval(const MassShellPoint& p) const = 0;
};

namespace {

struct GaussianNode final : WaveFunction::Node {
  std::vector<GaussianTerm> terms;
  std::complex<double> eval(const MassShellPoint& p) const override {
    std::complex<double> s = 0.0;
    for (const auto& t : terms) {
      const double d1 = p.p1() - t.c1;
      const double d2 = p.p2() - t.c2;
      s += t.weight * std::exp(-(d1 * d1 + d2 * d2) / (2.0 * t.width * t.width));
    }
    return s;
  }
};

struct ScaleNode final : WaveFunction::Node {
  std::complex<double> factor;
  WaveFunction child;
  ScaleNode(std::complex<double> f, WaveFunction c) : factor(f), child(std::move(c)) {}
  std::complex<double> eval(const MassShellPoint& p) const override { return factor * child(p); }
};

struct SumNode final : WaveFunction::Node {
  WaveFunction a;
  WaveFunction b;
  SumNode(WaveFunction x, WaveFunction y) : a(std::move(x)), b(std::move(y)) {}
  std::complex<double> eval(const MassShellPoint& p) const override { return a(p) + b(p); }
};

struct RepNode final : WaveFunction::Node {
  CoveringPoincare g;
  LorentzMatrix inverse;
  double spin;
  WaveFunction child;
  RepNode(CoveringPoincare h, double s, WaveFunction c)
      : g(std::move(h)), inverse(g.lorentz.matrix().inverse()), spin(s), child(std::move(c)) {}
  std::complex<double> eval(const MassShellPoint& p) const override {
    const MassShellPoint q = transform(inverse, p);
    const double phase = spin * wigner_rotation(g.lorentz, q) + minkowski_inner(g.translation, p.four());
    return std::polar(1.0, phase) * child(q);
  }
};

struct JNode final : WaveFunction::Node {
  WaveFunction child;
  explicit JNode(WaveFunction c) : child(std::move(c)) {}
  std::complex<double> eval(const MassShellPoint& p) const override {
    return std::conj(child(MassShellPoint(p.mass(), p.p1(), -p.p2())));
  }
};

}  // namespace

WaveFunction WaveFunction::gaussian_sum(double mass, std::vector<GaussianTerm> terms) {
  if (!(mass > 0.0)) throw InvalidArgument("wave function mass must be positive");
  for (const auto& t : terms) {
    if (!(t.width > 0.0)) throw InvalidArgument("Gaussian width must be positive");
  }
  auto node = std::make_shared<GaussianNode>();
  node->terms = std::move(terms);
  return {mass, std::move(node)};
}

std::complex<double> WaveFunction::operator()(const MassShellPoint& p) const {
  if (std::abs(p.mass() - mass_) > 1e-12 * mass_) throw InvalidArgument("evaluation point lies on another mass shell");
  return node_->eval(p);
}

WaveFunction operator*(std::complex<double> s, const WaveFunction& f) {
  return {f.mass_, std::make_shared<ScaleNode>(s, f)};
}

WaveFunction operator+(const WaveFunction& f, const WaveFunction& g) {
  if (std::abs(f.mass_ - g.mass_) > 1e-12 * f.mass_) throw InvalidArgument("cannot add wave functions on different mass shells");
  return {f.mass_, std::make_shared<SumNode>(f, g)};
}

WaveFunction apply_rep(const CoveringPoincare& g, double spin, const WaveFunction& psi) {
  return {psi.mass_, std::make_shared<RepNode>(g, spin, psi)};
}

WaveFunction apply_j(const WaveFunction& psi) { return {psi.mass_, std::make_shared<JNode>(psi)}; }

double norm_squared(const WaveFunction& psi, const QuadratureSpec& spec) {
  if (spec.points < 2 || !(spec.half_width > 0.0)) throw InvalidArgument("quadrature needs at least two points per axis");
  const double h = 2.0 * spec.half_width / (spec.points - 1);
  double sum = 0.0;
  for (int i = 0; i < spec.points; ++i) {
    const double wi = (i == 0 || i == spec.points - 1) ? 0.5 : 1.0;
    const double p1 = -spec.half_width + i * h;
    for (int k = 0; k < spec.points; ++k) {
      const double wk = (k == 0 || k == spec.points - 1) ? 0.5 : 1.0;
      const MassShellPoint p(psi.mass(), p1, -spec.half_width + k * h);
      sum += wi * wk * std::norm(psi(p)) / (2.0 * p.energy());
    }
  }
  return sum * h * h;
}

double verify_cocycle(const CoveringLorentz& g1, const CoveringLorentz& g2, std::span<const MassShellPoint> samples) {
  const CoveringLorentz g12 = cover_compose(g1, g2);
  double r = 0.0;
  for (const auto& p : samples) {
    const double lhs = wigner_rotation(g12, p);
    const double rhs = wigner_rotation(g1, transform(g2.matrix(), p)) + wigner_rotation(g2, p);
    r = std::max(r, std::abs(lhs - rhs));
  }
  return r;
}

double JRelationReport::max() const { return std::max({conjugation, translation, rotation, involution}); }

JRelationReport verify_j_relations(const CoveringPoincare& g, double spin, std::span<const WaveFunction> tests,
                                   std::span<const MassShellPoint> samples) {
  JRelationReport r;
  const CoveringPoincare jgj = reflect_conjugate(g);
  const CoveringPoincare tx = cover_translation(g.translation);
  const CoveringPoincare jtx = cover_translation(reflect(g.translation));
  const CoveringPoincare rot = as_poincare(cover_rotation(kTwoPi));
  const std::complex<double> spin_phase = std::polar(1.0, kTwoPi * spin);

  for (const auto& psi : tests) {
    const WaveFunction lhs_g = apply_j(apply_rep(g, spin, apply_j(psi)));
    const WaveFunction rhs_g = apply_rep(jgj, spin, psi);
    const WaveFunction lhs_t = apply_j(apply_rep(tx, spin, apply_j(psi)));
    const WaveFunction rhs_t = apply_rep(jtx, spin, psi);
    const WaveFunction rotated = apply_rep(rot, spin, psi);
    const WaveFunction twice = apply_j(apply_j(psi));
    for (const auto& p : samples) {
      const std::complex<double> v = psi(p);
      r.conjugation = std::max(r.conjugation, std::abs(lhs_g(p) - rhs_g(p)));
      r.translation = std::max(r.translation, std::abs(lhs_t(p) - rhs_t(p)));
      r.rotation = std::max(r.rotation, std::abs(rotated(p) - spin_phase * v));
      r.involution = std::max(r.involution, std::abs(twice(p) - v));
    }
  }
  return r;
}

}  // namespace plektonlab
