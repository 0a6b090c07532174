#include "oracles.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace oracle {

namespace {

constexpr double kPi = std::numbers::pi;

double unwrap(double previous, double principal) {
  return principal + 2.0 * kPi * std::round((previous - principal) / (2.0 * kPi));
}

double spatial(const Eigen::Vector3d& v) { return std::atan2(v(2), v(1)); }

Eigen::Vector3d vec(const MVec3& v) { return {v.x0, v.x1, v.x2}; }

}  // namespace

Polar polar(const Eigen::Matrix3d& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(m.transpose() * m);
  const Eigen::Matrix3d s = es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
  const Eigen::Matrix3d r = m * s.inverse();
  const double sh = std::hypot(s(0, 1), s(0, 2));
  return {std::atan2(r(2, 1), r(1, 1)), std::asinh(sh), sh > 0.0 ? std::atan2(s(0, 2), s(0, 1)) : 0.0};
}

Eigen::Matrix3d rotation(double a) {
  Eigen::Matrix3d r = Eigen::Matrix3d::Identity();
  r(1, 1) = std::cos(a);
  r(1, 2) = -std::sin(a);
  r(2, 1) = std::sin(a);
  r(2, 2) = std::cos(a);
  return r;
}

Eigen::Matrix3d boost(double rapidity, double direction) {
  const Eigen::Vector2d n(std::cos(direction), std::sin(direction));
  Eigen::Matrix3d b = Eigen::Matrix3d::Identity();
  b(0, 0) = std::cosh(rapidity);
  for (int i = 0; i < 2; ++i) {
    b(0, i + 1) = b(i + 1, 0) = std::sinh(rapidity) * n(i);
    for (int k = 0; k < 2; ++k) b(i + 1, k + 1) += (std::cosh(rapidity) - 1.0) * n(i) * n(k);
  }
  return b;
}

Eigen::Matrix3d path(const CoveringLorentz& g, double t) {
  const Polar p = polar(g.matrix().matrix());
  return rotation(t * g.lifted_angle()) * boost(t * p.rapidity, p.direction);
}

double composed_angle(const CoveringLorentz& a, const CoveringLorentz& b, int steps) {
  double lift = a.lifted_angle();
  for (int i = 1; i <= steps; ++i) {
    lift = unwrap(lift, polar(a.matrix().matrix() * path(b, double(i) / steps)).angle);
  }
  return lift;
}

double transported_angle(const CoveringLorentz& g, const MVec3& r, double start, int steps) {
  double lift = start;
  for (int i = 1; i <= steps; ++i) lift = unwrap(lift, spatial(path(g, double(i) / steps) * vec(r)));
  return lift;
}

std::pair<double, double> transported_arc(const CoveringLorentz& g, const ConePath& c, int steps) {
  const double ref = c.frame().reference_angle();
  const auto rel = c.relative_arc();
  const double mid = ref + 0.5 * (rel.alpha_minus + rel.alpha_plus);
  double lo = 1e300;
  double hi = -1e300;
  for (const auto& r : c.generators()) {
    const double start = unwrap(mid, spatial(vec(r)));
    const double end = transported_angle(g, r, start, steps);
    lo = std::min(lo, end);
    hi = std::max(hi, end);
  }
  return {lo - ref, hi - ref};
}

std::vector<int> winding_scan(const ConePath& c2, const ConePath& c1, int lo, int hi) {
  const auto a1 = c1.relative_arc();
  const auto a2 = c2.relative_arc();
  const bool wedges = c1.kind() == plektonlab::RegionKind::wedge && c2.kind() == plektonlab::RegionKind::wedge;
  auto below = [&](double x, double y) { return wedges ? x <= y + 1e-12 : x < y; };
  std::vector<int> out;
  for (int n = lo; n <= hi; ++n) {
    if (below(a1.alpha_plus + 2.0 * kPi * n, a2.alpha_minus) && below(a2.alpha_plus, a1.alpha_minus + 2.0 * kPi * (n + 1))) {
      out.push_back(n);
    }
  }
  return out;
}

bool causal_contact(std::mt19937_64& rng, const ConePath& c1, const ConePath& c2, int samples) {
  std::vector<MVec3> v;
  for (const auto& g : c1.generators()) v.push_back(g);
  for (const auto& g : c2.generators()) v.push_back(-g);
  const MVec3 d0 = c1.apex() - c2.apex();
  std::uniform_int_distribution<std::size_t> pick(0, v.size() - 1);
  std::uniform_real_distribution<double> logw(-4.0, 4.0);
  auto score = [](const MVec3& d) {
    return plektonlab::minkowski_inner(d, d) / (d.x0 * d.x0 + d.x1 * d.x1 + d.x2 * d.x2 + 1e-300);
  };
  for (int i = 0; i < samples; ++i) {
    const std::size_t idx[3] = {pick(rng), pick(rng), pick(rng)};
    double w[3] = {logw(rng), logw(rng), logw(rng)};
    auto at = [&](const double* l) {
      MVec3 x = d0;
      for (int k = 0; k < 3; ++k) x = x + std::pow(10.0, l[k]) * v[idx[k]];
      return x;
    };
    double q = score(at(w));
    for (double step = 0.5; step > 1e-3; step *= 0.5) {
      bool improved = true;
      for (int it = 0; it < 6 && improved; ++it) {
        improved = false;
        for (int k = 0; k < 6; ++k) {
          double t[3] = {w[0], w[1], w[2]};
          t[k / 2] += (k % 2) ? step : -step;
          const double q2 = score(at(t));
          if (q2 > q) {
            q = q2;
            std::copy(t, t + 3, w);
            improved = true;
          }
        }
      }
    }
    if (q >= 0.0) return true;
  }
  return false;
}

std::vector<std::vector<std::size_t>> reduced_routes(const std::vector<std::size_t>& order) {
  // Position of every item in the target; a swap at i is on a shortest route
  // iff it removes an inversion.
  std::vector<std::size_t> target(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) target[order[k]] = k;
  std::vector<std::vector<std::size_t>> routes;
  std::vector<std::size_t> current(order.size());
  for (std::size_t k = 0; k < current.size(); ++k) current[k] = k;
  std::vector<std::size_t> route;
  auto search = [&](auto&& self) -> void {
    bool done = true;
    for (std::size_t i = 0; i + 1 < current.size(); ++i) {
      if (target[current[i]] > target[current[i + 1]]) {
        done = false;
        std::swap(current[i], current[i + 1]);
        route.push_back(i);
        self(self);
        route.pop_back();
        std::swap(current[i], current[i + 1]);
      }
    }
    if (done) routes.push_back(route);
  };
  search(search);
  return routes;
}

double wigner_angle(const CoveringLorentz& g, double mass, double p1, double p2, int steps) {
  const Eigen::Vector3d p(std::sqrt(mass * mass + p1 * p1 + p2 * p2), p1, p2);
  auto pure = [&](const Eigen::Vector3d& q) {
    const Eigen::Vector3d u = q / mass;
    const double sh = std::hypot(u(1), u(2));
    return boost(std::asinh(sh), sh > 0.0 ? std::atan2(u(2), u(1)) : 0.0);
  };
  const Eigen::Matrix3d bp = pure(p);
  double lift = 0.0;
  for (int i = 1; i <= steps; ++i) {
    const Eigen::Matrix3d l = path(g, double(i) / steps);
    const Eigen::Matrix3d w = pure(l * p).inverse() * l * bp;
    lift = unwrap(lift, std::atan2(w(2, 1), w(1, 1)));
  }
  return lift;
}

}  // namespace oracle
