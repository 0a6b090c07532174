#pragma once

// Exact roots of unity e^{2 pi i k/M} and quadratic phase polynomials in a
// charge grade q, both kept in "turns" (fractions of 2 pi) so that no phase
// ever passes through floating point.

#include <boost/rational.hpp>

#include <complex>
#include <cstdint>
#include <string>

namespace plektonlab {

using Rational = boost::rational<std::int64_t>;

/// Fractional part in [0, 1).
Rational frac(const Rational& r);

/// e^{2 pi i k / M}, stored in lowest terms with 0 <= k < M.
class CyclotomicPhase {
 public:
  CyclotomicPhase() = default;
  /// Throws InvalidArgument for M <= 0.
  CyclotomicPhase(std::int64_t k, std::int64_t m);
  static CyclotomicPhase one() { return {}; }
  static CyclotomicPhase from_turns(const Rational& turns);

  std::int64_t numerator() const { return k_; }
  std::int64_t denominator() const { return m_; }
  Rational turns() const { return {k_, m_}; }

  CyclotomicPhase inverse() const;
  CyclotomicPhase conj() const { return inverse(); }
  CyclotomicPhase pow(std::int64_t e) const;
  std::complex<double> value() const;
  bool is_one() const { return k_ == 0; }

  /// "k/M of 2π"
  std::string to_string() const;

  friend CyclotomicPhase operator*(const CyclotomicPhase& a, const CyclotomicPhase& b);
  friend CyclotomicPhase operator/(const CyclotomicPhase& a, const CyclotomicPhase& b) { return a * b.inverse(); }
  friend bool operator==(const CyclotomicPhase&, const CyclotomicPhase&) = default;

 private:
  std::int64_t k_ = 0;
  std::int64_t m_ = 1;
};

/// Phase exponent a q^2 + b q + d (in turns) as a function of an integer grade q.
class PhasePoly {
 public:
  PhasePoly() = default;
  PhasePoly(Rational a, Rational b, Rational d) : a_(a), b_(b), d_(d) {}
  static PhasePoly constant(Rational d) { return {0, 0, d}; }

  const Rational& quadratic() const { return a_; }
  const Rational& linear() const { return b_; }
  const Rational& constant_term() const { return d_; }

  Rational eval(std::int64_t q) const;
  CyclotomicPhase phase_at(std::int64_t q) const { return CyclotomicPhase::from_turns(eval(q)); }

  /// q -> p(q + c)
  PhasePoly shifted(std::int64_t c) const;
  /// q -> p(-q)
  PhasePoly mirrored() const { return {a_, -b_, d_}; }

  /// True iff p(q) is an integer for every integer q, i.e. e^{2 pi i p(q)} = 1
  /// identically: d, a + b and 2a are integers.
  bool is_integer_valued() const;
  /// Same phase at every grade.
  bool same_phases(const PhasePoly& o) const { return (*this - o).is_integer_valued(); }

  std::string to_string() const;

  friend PhasePoly operator+(const PhasePoly& x, const PhasePoly& y) { return {x.a_ + y.a_, x.b_ + y.b_, x.d_ + y.d_}; }
  friend PhasePoly operator-(const PhasePoly& x, const PhasePoly& y) { return {x.a_ - y.a_, x.b_ - y.b_, x.d_ - y.d_}; }
  friend PhasePoly operator-(const PhasePoly& x) { return {-x.a_, -x.b_, -x.d_}; }
  friend PhasePoly operator*(const Rational& s, const PhasePoly& x) { return {s * x.a_, s * x.b_, s * x.d_}; }
  friend bool operator==(const PhasePoly&, const PhasePoly&) = default;

 private:
  Rational a_{0};
  Rational b_{0};
  Rational d_{0};
};

}  // namespace plektonlab
