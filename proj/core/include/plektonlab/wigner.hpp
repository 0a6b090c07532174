#pragma once

// Single-particle representations of the covering Poincare group in 2+1
// dimensions with arbitrary real spin s:
//
//   (U(a, g) psi)(p) = e^{i s Omega(g, q)} e^{i a.p} psi(q),   q = Lambda^{-1} p,
//
// with Omega(g, q) the lifted angle of the Wigner rotation B_{Lambda q}^{-1} Lambda B_q
// and B_p the pure boost. U(j) psi(p) = conj(psi(p0, p1, -p2)) extends U
// anti-unitarily. Wave functions are lazy expression trees over Gaussian sums.

#include "plektonlab/minkowski.hpp"

#include <complex>
#include <memory>
#include <span>
#include <vector>

namespace plektonlab {

class MassShellPoint {
 public:
  /// Throws InvalidArgument unless mass > 0 and momenta are finite.
  MassShellPoint(double mass, double p1, double p2);
  /// Throws InvalidArgument unless p.p = m^2 (relative 1e-12) with p0 > 0.
  static MassShellPoint from_four(const MVec3& p, double mass);

  double mass() const { return m_; }
  double p1() const { return p1_; }
  double p2() const { return p2_; }
  double energy() const;
  MVec3 four() const { return {energy(), p1_, p2_}; }

 private:
  double m_;
  double p1_;
  double p2_;
};

/// Pure boost B_p with B_p (m, 0, 0) = p.
LorentzMatrix standard_boost(const MassShellPoint& p);

/// Omega(g, p): lifted angle of B_{Lambda p}^{-1} Lambda B_p continued along the
/// canonical path of g from the identity.
double wigner_rotation(const CoveringLorentz& g, const MassShellPoint& p);

struct GaussianTerm {
  std::complex<double> weight{1.0, 0.0};
  double c1 = 0.0;
  double c2 = 0.0;
  double width = 1.0;
};

class WaveFunction {
 public:
  struct Node;

  static WaveFunction gaussian_sum(double mass, std::vector<GaussianTerm> terms);

  std::complex<double> operator()(const MassShellPoint& p) const;
  double mass() const { return mass_; }

  friend WaveFunction operator*(std::complex<double> s, const WaveFunction& f);
  friend WaveFunction operator+(const WaveFunction& f, const WaveFunction& g);

 private:
  friend WaveFunction apply_rep(const CoveringPoincare&, double, const WaveFunction&);
  friend WaveFunction apply_j(const WaveFunction&);
  WaveFunction(double mass, std::shared_ptr<const Node> node) : mass_(mass), node_(std::move(node)) {}

  double mass_ = 1.0;
  std::shared_ptr<const Node> node_;
};

WaveFunction apply_rep(const CoveringPoincare& g, double spin, const WaveFunction& psi);
inline WaveFunction apply_rep(const MVec3& a, const CoveringLorentz& g, double spin, const WaveFunction& psi) {
  return apply_rep(CoveringPoincare{a, g}, spin, psi);
}
/// (U(j) psi)(p) = conj(psi(p0, p1, -p2)), anti-linear.
WaveFunction apply_j(const WaveFunction& psi);

struct QuadratureSpec {
  double half_width = 8.0;
  int points = 161;
};

/// Integral of |psi|^2 d^2p / (2 omega(p)) by the trapezoidal rule on a square grid.
double norm_squared(const WaveFunction& psi, const QuadratureSpec& spec = {});

/// max_p |Omega(g1 g2, p) - Omega(g1, Lambda2 p) - Omega(g2, p)|
double verify_cocycle(const CoveringLorentz& g1, const CoveringLorentz& g2, std::span<const MassShellPoint> samples);

struct JRelationReport {
  double conjugation = 0.0;   ///< U(j) U(g) U(j) vs U(j g j)
  double translation = 0.0;   ///< U(j) U(x, 1) U(j) vs U(j x, 1)
  double rotation = 0.0;      ///< U(r(2 pi)) vs e^{2 pi i s}
  double involution = 0.0;    ///< U(j)^2 vs 1

  double max() const;
};

JRelationReport verify_j_relations(const CoveringPoincare& g, double spin, std::span<const WaveFunction> tests,
                                   std::span<const MassShellPoint> samples);

}  // namespace plektonlab
