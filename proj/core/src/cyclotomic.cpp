#include "plektonlab/cyclotomic.hpp"

#include "plektonlab/errors.hpp"
#include "plektonlab/minkowski.hpp"

#include <cmath>
#include <numeric>

namespace plektonlab {

Rational frac(const Rational& r) {
  std::int64_t n = r.numerator();
  const std::int64_t d = r.denominator();
  n %= d;
  if (n < 0) n += d;
  return {n, d};
}

CyclotomicPhase::CyclotomicPhase(std::int64_t k, std::int64_t m) {
  if (m <= 0) throw InvalidArgument("root of unity denominator must be positive");
  k %= m;
  if (k < 0) k += m;
  const std::int64_t g = std::gcd(k, m);
  k_ = k / g;
  m_ = m / g;
}

CyclotomicPhase CyclotomicPhase::from_turns(const Rational& turns) {
  return {turns.numerator(), turns.denominator()};
}

CyclotomicPhase CyclotomicPhase::inverse() const { return {m_ - k_, m_}; }

__extension__ using Wide = __int128;

CyclotomicPhase CyclotomicPhase::pow(std::int64_t e) const {
  const Wide k = static_cast<Wide>(k_) * (e % m_);
  return {static_cast<std::int64_t>(k % m_), m_};
}

std::complex<double> CyclotomicPhase::value() const {
  return std::polar(1.0, kTwoPi * static_cast<double>(k_) / static_cast<double>(m_));
}

std::string CyclotomicPhase::to_string() const {
  return std::to_string(k_) + "/" + std::to_string(m_) + " of 2π";
}

CyclotomicPhase operator*(const CyclotomicPhase& a, const CyclotomicPhase& b) {
  const std::int64_t m = std::lcm(a.m_, b.m_);
  return {a.k_ * (m / a.m_) + b.k_ * (m / b.m_), m};
}

Rational PhasePoly::eval(std::int64_t q) const {
  const Rational rq(q);
  return a_ * rq * rq + b_ * rq + d_;
}

PhasePoly PhasePoly::shifted(std::int64_t c) const {
  // a (q+c)^2 + b (q+c) + d
  const Rational rc(c);
  return {a_, b_ + Rational(2) * a_ * rc, a_ * rc * rc + b_ * rc + d_};
}

bool PhasePoly::is_integer_valued() const {
  auto integral = [](const Rational& r) { return r.denominator() == 1; };
  return integral(d_) && integral(a_ + b_) && integral(Rational(2) * a_);
}

std::string PhasePoly::to_string() const {
  auto s = [](const Rational& r) {
    return r.denominator() == 1 ? std::to_string(r.numerator())
                                : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
  };
  return "(" + s(a_) + ")q^2 + (" + s(b_) + ")q + (" + s(d_) + ")";
}

}  // namespace plektonlab
