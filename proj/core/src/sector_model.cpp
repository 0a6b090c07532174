#include "plektonlab/sector_model.hpp"

#include "plektonlab/errors.hpp"

namespace plektonlab {

std::int64_t ChargeGroup::project(std::int64_t q) const {
  if (!order) return q;
  const std::int64_t n = *order;
  return ((q % n) + n) % n;
}

Channel::Channel(std::int64_t source, std::int64_t charge, std::int64_t range) : source_(source), charge_(charge) {
  if (range != source + charge) throw InvalidArgument("abelian channel requires range = source + charge");
}

CyclotomicPhase sector_phase(const AnyonModel& m, std::int64_t q) { return m.omega.pow(q * q); }

Rational sector_spin(const AnyonModel& m, std::int64_t q) { return frac(m.spin * Rational(q * q)); }

CyclotomicPhase r_phase(const AnyonModel& m, std::int64_t c1, std::int64_t c2, std::int64_t n) {
  return m.omega.pow(c1 * c2 * (2 * n + 1));
}

CyclotomicPhase monodromy_prefactor(const AnyonModel& m, std::int64_t alpha, std::int64_t beta, std::int64_t gamma,
                                    std::int64_t delta, std::int64_t n) {
  const std::int64_t c1 = beta - alpha;
  const std::int64_t c2 = delta - alpha;
  if (gamma != alpha + c1 + c2) {
    throw InvalidArgument("labels are not abelian-compatible: gamma != beta + delta - alpha");
  }
  const CyclotomicPhase ratio =
      sector_phase(m, alpha) * sector_phase(m, gamma) / (sector_phase(m, beta) * sector_phase(m, delta));
  return ratio.pow(n);
}

CyclotomicPhase twist_phase(const AnyonModel& m, std::int64_t q, std::int64_t n) {
  return m.omega_sqrt.pow(q * q * (2 * n + 1));
}

ModelValidation validate_model(const AnyonModel& m) {
  ModelValidation v;
  if (CyclotomicPhase::from_turns(m.spin) != m.omega) {
    v.failures.push_back("spin-statistics: omega != exp(2 pi i s)");
  }
  if (m.omega_sqrt.pow(2) != m.omega) v.failures.push_back("omega_sqrt^2 != omega");
  if (m.group.is_cyclic()) {
    const std::int64_t n = *m.group.order;
    if (n <= 0) {
      v.failures.push_back("Z_N requires N >= 1");
    } else {
      if (!m.omega.pow(n).is_one()) v.failures.push_back("omega^N != 1 for Z_" + std::to_string(n));
      if (!m.omega_sqrt.pow(n * n).is_one()) {
        v.failures.push_back("omega_sqrt^(N^2) != 1 for Z_" + std::to_string(n));
      }
    }
  }
  if (!(m.mass > 0.0)) v.failures.push_back("mass must be positive");
  return v;
}

}  // namespace plektonlab
