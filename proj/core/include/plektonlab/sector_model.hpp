#pragma once

// Abelian anyon models: a charge group Z or Z_N generated by one automorphism,
// its statistics phase omega, a chosen square root of omega and the spin s
// with omega = e^{2 pi i s}. Charges are always carried as lifted integers;
// reduction mod N only happens for display and validation.

#include "plektonlab/cyclotomic.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace plektonlab {

struct ChargeGroup {
  /// Empty for Z, N for Z_N.
  std::optional<std::int64_t> order;

  static ChargeGroup integers() { return {}; }
  static ChargeGroup cyclic(std::int64_t n) { return {n}; }
  bool is_cyclic() const { return order.has_value(); }
  std::string to_string() const { return order ? "Z_" + std::to_string(*order) : "Z"; }
  /// Representative in [0, N) for Z_N; identity for Z.
  std::int64_t project(std::int64_t q) const;

  friend bool operator==(const ChargeGroup&, const ChargeGroup&) = default;
};

struct AnyonModel {
  ChargeGroup group;
  CyclotomicPhase omega;
  /// Explicit model data: either root of omega may be chosen.
  CyclotomicPhase omega_sqrt;
  Rational spin{0};
  /// Particle mass for the single-particle representation checks.
  double mass = 1.0;
};

/// Superselection channel (source, charge, range) with range = source + charge.
class Channel {
 public:
  Channel(std::int64_t source, std::int64_t charge) : source_(source), charge_(charge) {}
  /// Throws InvalidArgument unless range == source + charge.
  Channel(std::int64_t source, std::int64_t charge, std::int64_t range);

  std::int64_t source() const { return source_; }
  std::int64_t charge() const { return charge_; }
  std::int64_t range() const { return source_ + charge_; }

 private:
  std::int64_t source_;
  std::int64_t charge_;
};

struct ModelValidation {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// omega^{q^2}: statistics phase of the sector gamma^q.
CyclotomicPhase sector_phase(const AnyonModel& m, std::int64_t q);

/// -q. The phases of a sector and its conjugate coincide since (-q)^2 = q^2.
inline std::int64_t conjugate_sector(std::int64_t q) { return -q; }

/// s q^2 mod 1.
Rational sector_spin(const AnyonModel& m, std::int64_t q);

/// omega^{c1 c2 (2n + 1)}: F2 F1 = r_phase * F1 F2 for N(C2, C1) = n.
CyclotomicPhase r_phase(const AnyonModel& m, std::int64_t c1, std::int64_t c2, std::int64_t n);

/// (omega_alpha omega_gamma / (omega_beta omega_delta))^n for abelian-compatible
/// labels beta = alpha + c1, delta = alpha + c2, gamma = alpha + c1 + c2.
/// Throws InvalidArgument otherwise.
CyclotomicPhase monodromy_prefactor(const AnyonModel& m, std::int64_t alpha, std::int64_t beta, std::int64_t gamma,
                                    std::int64_t delta, std::int64_t n);

/// (omega^{1/2})^{q^2 (2n + 1)}: eigenvalue of the twist operator Z(C2, C1) on
/// grade q when N(C2, C1) = n.
CyclotomicPhase twist_phase(const AnyonModel& m, std::int64_t q, std::int64_t n);

/// Checks omega = e^{2 pi i s}, omega_sqrt^2 = omega and, for Z_N,
/// omega^N = 1 and omega_sqrt^{N^2} = 1.
ModelValidation validate_model(const AnyonModel& m);

}  // namespace plektonlab
