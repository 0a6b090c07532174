#include "plektonlab/graded.hpp"

#include "plektonlab/errors.hpp"

namespace plektonlab {

namespace {

std::optional<ConePath> common_loc(const std::optional<ConePath>& a, const std::optional<ConePath>& b) {
  if (a && b && *a == *b) return a;
  return std::nullopt;
}

const ConePath& require_loc(const std::optional<ConePath>& loc, const char* what) {
  if (!loc) throw PreconditionError(std::string(what) + " requires a localized operator");
  return *loc;
}

}  // namespace

GradedOperator graded_form(const FieldSymbol& f) { return {f.charge, PhasePoly{}, f.obs, f.loc}; }

GradedOperator graded_compose(const GradedOperator& x, const GradedOperator& y) {
  return {x.shift + y.shift, x.phase.shifted(y.shift) + y.phase, x.obs.twisted(y.shift) * y.obs,
          common_loc(x.loc, y.loc)};
}

GradedOperator graded_adjoint(const GradedOperator& x) {
  return {-x.shift, -x.phase.shifted(-x.shift), x.obs.star().twisted(-x.shift), x.loc};
}

GradedOperator gauge_operator(const Rational& t) { return {0, PhasePoly(0, t, 0), ObservableWord::unit(), {}}; }

GradedOperator conjugate_by_grading(const GradedOperator& x, const PhasePoly& u) {
  GradedOperator out = x;
  out.phase = x.phase + u.shifted(x.shift) - u;
  return out;
}

PhasePoly twist_exponent(const AnyonModel& model, std::int64_t n) {
  return {model.omega_sqrt.turns() * Rational(2 * n + 1), 0, 0};
}

GradedOperator twist_conjugate(const AnyonModel& model, const GradedOperator& x, std::int64_t n) {
  return conjugate_by_grading(x, twist_exponent(model, n));
}

GradedOperator twist_conjugate(const AnyonModel& model, const GradedOperator& x, const ConePath& c2,
                               const ConePath& c1) {
  return twist_conjugate(model, x, relative_winding(c2, c1));
}

GradedOperator twist_conjugate(const AnyonModel& model, const FieldSymbol& f, const ConePath& c2,
                               const ConePath& c1) {
  return twist_conjugate(model, graded_form(f), c2, c1);
}

GradedOperator j_conjugate(const GradedOperator& x) {
  return {-x.shift, -x.phase.mirrored(), x.obs.reflected(), std::nullopt};
}

int twist_winding_for_cpt(const ReferenceFrame& frame) {
  if (!frame.is_j_invariant()) throw PreconditionError("CPT operator requires a j-invariant reference cone");
  const ConePath we = standard_wedge_path(frame);
  return relative_winding(we, reflect_path(we));
}

GradedOperator cpt_conjugate(const AnyonModel& model, const GradedOperator& x) {
  const ConePath& loc = require_loc(x.loc, "CPT conjugation");
  const int n = twist_winding_for_cpt(loc.frame());
  GradedOperator out = conjugate_by_grading(j_conjugate(x), -twist_exponent(model, n));
  out.loc = reflect_path(loc);
  return out;
}

CptImage cpt_conjugate(const AnyonModel& model, const FieldSymbol& f) {
  GradedOperator op = cpt_conjugate(model, graded_form(f));
  ConePath loc = *op.loc;
  return {std::move(op), std::move(loc)};
}

GradedExpression reduce(const AnyonModel& model, const GradedExpression& e) {
  GradedExpression out;
  for (const auto& t : e.terms) {
    const FieldWord nf = normal_form(model, FieldWord{CyclotomicPhase::one(), t.factors});
    out.terms.push_back({t.sign, t.phase + PhasePoly::constant(nf.coeff.turns()), nf.factors});
  }
  return out;
}

bool GradedExpression::vanishes() const {
  std::vector<bool> used(terms.size(), false);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (used[i]) continue;
    bool matched = false;
    for (std::size_t k = i + 1; k < terms.size() && !matched; ++k) {
      if (used[k] || terms[k].sign != -terms[i].sign || terms[k].factors != terms[i].factors) continue;
      if (terms[k].phase.same_phases(terms[i].phase)) {
        used[i] = used[k] = true;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

GradedExpression twisted_commutator(const AnyonModel& model, const FieldSymbol& f2, const FieldSymbol& f1,
                                    std::int64_t n) {
  const GradedOperator x = twist_conjugate(model, graded_form(f1), n);
  GradedExpression e;
  e.terms.push_back({1, x.phase, {f2, f1}});
  e.terms.push_back({-1, x.phase.shifted(f2.charge), {f1, f2}});
  return reduce(model, e);
}

GradedExpression twisted_commutator(const AnyonModel& model, const FieldSymbol& f2, const FieldSymbol& f1) {
  if (!f2.loc || !f1.loc) throw PreconditionError("twisted commutator requires localized fields");
  return twisted_commutator(model, f2, f1, relative_winding(*f2.loc, *f1.loc));
}

}  // namespace plektonlab
