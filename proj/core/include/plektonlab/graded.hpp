#pragma once

// Operators on the charge-graded space H = sum_q H_q. A graded operator maps
// grade q to grade q + shift and multiplies by e^{2 pi i phase(q)} times the
// observable word evaluated in the representation pi_q = pi_0 o gamma^q.
// Field symbols, the gauge group V(t), the twist operator Z and the CPT
// operator Theta = Z* J all act within this class with exact phases.

#include "plektonlab/field_engine.hpp"

#include <optional>
#include <vector>

namespace plektonlab {

struct GradedOperator {
  std::int64_t shift = 0;
  PhasePoly phase;
  ObservableWord obs;
  std::optional<ConePath> loc;

  CyclotomicPhase phase_at(std::int64_t q) const { return phase.phase_at(q); }
  /// Same shift and observable word, same phase at every grade.
  bool equivalent(const GradedOperator& o) const { return shift == o.shift && obs == o.obs && phase.same_phases(o.phase); }
};

/// f(c, A): (q, psi) -> (q + c, pi_q(A) psi), trivial phase.
GradedOperator graded_form(const FieldSymbol& f);

/// x o y (y applied first).
GradedOperator graded_compose(const GradedOperator& x, const GradedOperator& y);

/// Operator adjoint in the graded picture.
GradedOperator graded_adjoint(const GradedOperator& x);

/// V(t) = sum_q e^{2 pi i q t} E_q.
GradedOperator gauge_operator(const Rational& t);

/// U X U* for the grade-diagonal unitary U E_q = e^{2 pi i u(q)} E_q.
GradedOperator conjugate_by_grading(const GradedOperator& x, const PhasePoly& u);

/// Exponent (in turns) of the twist operator with winding n:
/// (omega^{1/2})^{q^2 (2n + 1)}.
PhasePoly twist_exponent(const AnyonModel& model, std::int64_t n);

/// Z X Z* with Z = Z(c2, c1), i.e. winding n = N(c2, c1).
GradedOperator twist_conjugate(const AnyonModel& model, const GradedOperator& x, const ConePath& c2,
                               const ConePath& c1);
GradedOperator twist_conjugate(const AnyonModel& model, const FieldSymbol& f, const ConePath& c2, const ConePath& c1);
/// Same with an explicit winding number.
GradedOperator twist_conjugate(const AnyonModel& model, const GradedOperator& x, std::int64_t n);

/// J X J^{-1} for the anti-unitary J mapping H_q to H_{-q}: shift -c, phase
/// -phi(-q), observable alpha_j(A). Localization is dropped.
GradedOperator j_conjugate(const GradedOperator& x);

/// Winding N(We, j.We) of the standard wedge path in `frame`; requires a
/// j-invariant frame.
int twist_winding_for_cpt(const ReferenceFrame& frame);

/// Theta X Theta^{-1} with Theta = Z* J, Z = Z(We, j.We); localization mapped
/// by reflect_path. Requires x to be localized over a j-invariant frame.
GradedOperator cpt_conjugate(const AnyonModel& model, const GradedOperator& x);

struct CptImage {
  GradedOperator op;
  ConePath loc;
};
CptImage cpt_conjugate(const AnyonModel& model, const FieldSymbol& f);

/// sign * e^{2 pi i phase(q)} * F_n ... F_1 E_q
struct GradedTerm {
  int sign = 1;
  PhasePoly phase;
  std::vector<FieldSymbol> factors;
};

struct GradedExpression {
  std::vector<GradedTerm> terms;

  /// True iff the terms cancel at every grade: after reduction, each term is
  /// matched with one of opposite sign, equal factors and equal phases.
  bool vanishes() const;
};

/// Brings every term into angular order with exchange phases absorbed into
/// the constant part of the phase polynomial.
GradedExpression reduce(const AnyonModel& model, const GradedExpression& e);

/// [F2, Z F1 Z*] E_q with Z = Z(loc2, loc1) (or explicit winding n).
GradedExpression twisted_commutator(const AnyonModel& model, const FieldSymbol& f2, const FieldSymbol& f1);
GradedExpression twisted_commutator(const AnyonModel& model, const FieldSymbol& f2, const FieldSymbol& f1,
                                    std::int64_t n);

}  // namespace plektonlab
