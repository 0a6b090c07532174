#pragma once

// Symbolic anyon field algebra. A field symbol f(c, A) carries charge c, an
// observable word A and the path class it is localized along. Products of
// symbols are words with an exact cyclotomic coefficient; exchanging two
// adjacent causally separated factors multiplies the coefficient by
// omega^{c1 c2 (2n + 1)}, n the relative winding number of their paths.

#include "plektonlab/cone_geometry.hpp"
#include "plektonlab/sector_model.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace plektonlab {

/// gamma^twist( alpha_j^reflected( symbol^star ) )
struct ObsAtom {
  std::string symbol;
  bool star = false;
  std::int64_t twist = 0;
  bool reflected = false;

  friend bool operator==(const ObsAtom&, const ObsAtom&) = default;
};

/// Formal product of observable atoms; the empty word is the unit. gamma^k and
/// the star distribute over products; adjacent atoms are never merged.
class ObservableWord {
 public:
  ObservableWord() = default;
  explicit ObservableWord(std::vector<ObsAtom> atoms) : atoms_(std::move(atoms)) {}
  static ObservableWord unit() { return {}; }
  static ObservableWord atom(std::string symbol) { return ObservableWord({ObsAtom{std::move(symbol)}}); }

  /// Parses whitespace separated atoms such as `A`, `B*`, `g^-2(C)`, `j(D*)`; "1" is the unit.
  static ObservableWord parse(const std::string& text);

  const std::vector<ObsAtom>& atoms() const { return atoms_; }
  bool is_unit() const { return atoms_.empty(); }

  /// (A1 ... An)* = An* ... A1*
  ObservableWord star() const;
  /// gamma^k applied atom-wise.
  ObservableWord twisted(std::int64_t k) const;
  /// alpha_j applied atom-wise; alpha_j gamma^k = gamma^{-k} alpha_j.
  ObservableWord reflected() const;

  std::string to_string() const;

  friend ObservableWord operator*(const ObservableWord& a, const ObservableWord& b);
  friend bool operator==(const ObservableWord&, const ObservableWord&) = default;

 private:
  std::vector<ObsAtom> atoms_;
};

/// f(c, A) localized along `loc`. An empty loc marks a symbol fused from
/// factors with different localizations.
struct FieldSymbol {
  std::int64_t charge = 0;
  ObservableWord obs;
  std::optional<ConePath> loc;
  std::string label;  ///< display name of the path (scene id), informational

  bool delocalized() const { return !loc.has_value(); }
  std::string to_string() const;

  friend bool operator==(const FieldSymbol& a, const FieldSymbol& b) {
    return a.charge == b.charge && a.obs == b.obs && a.loc == b.loc;
  }
};

/// coeff * F_n ... F_1 (factors listed left to right).
struct FieldWord {
  CyclotomicPhase coeff;
  std::vector<FieldSymbol> factors;

  std::int64_t total_charge() const;
  std::string to_string() const;
  friend bool operator==(const FieldWord&, const FieldWord&) = default;
};

FieldWord multiply(const FieldWord& w1, const FieldWord& w2);

/// f(c1, A1) f(c2, A2) = f(c1 + c2, gamma^{c2}(A1) A2).
FieldSymbol fuse(const FieldSymbol& f1, const FieldSymbol& f2);
/// Fuses factors i and i + 1.
FieldWord fuse_adjacent(const FieldWord& w, std::size_t i);
/// Fuses the whole word into a single symbol (coefficient kept).
FieldWord fuse_all(const FieldWord& w);

/// f(c, A)* = f(-c, gamma^{-c}(A*)); localization preserved.
FieldSymbol adjoint(const FieldSymbol& f);
/// Reversed order, adjoint factors, conjugate coefficient.
FieldWord adjoint(const FieldWord& w);

/// Swaps factors i (F2) and i + 1 (F1) and multiplies the coefficient by
/// r_phase(c1, c2, N(loc2, loc1)). Throws PreconditionError for delocalized or
/// non-separated factors.
FieldWord exchange(const AnyonModel& model, const FieldWord& w, std::size_t i);

/// Applies exchanges at the listed positions in order.
FieldWord apply_exchanges(const AnyonModel& model, const FieldWord& w, const std::vector<std::size_t>& positions);

/// order[k] is the current index of the factor that must end up at position k.
/// Reached by adjacent exchanges; the result does not depend on the route.
FieldWord normal_form(const AnyonModel& model, const FieldWord& w, const std::vector<std::size_t>& order);

/// Target order sorting factors by increasing lifted angle (precedes).
std::vector<std::size_t> angular_order(const FieldWord& w);
FieldWord normal_form(const AnyonModel& model, const FieldWord& w);

/// coeff * f(q, A) Omega = coeff * (q, pi_0(A) Omega_0), generated by a field
/// localized along `loc`.
struct StateVector {
  CyclotomicPhase coeff;
  std::int64_t charge = 0;
  ObservableWord obs;
  std::optional<ConePath> loc;

  friend bool operator==(const StateVector&, const StateVector&) = default;
};

/// True if `loc` is contained in the standard wedge path of its frame.
bool localized_in_standard_wedge(const ConePath& loc);

/// Pseudo-Tomita map (q, A) -> (-q, gamma^{-q}(A*)), anti-linear. Requires
/// the generating field to be localized in the standard wedge path.
StateVector tomita_S(const StateVector& v);

/// Formal vacuum overlap coeff * (left Omega, right Omega).
struct VacuumOverlap {
  CyclotomicPhase coeff;
  FieldSymbol left;
  FieldSymbol right;
};

/// (F2 Omega, F1 Omega) = omega_c (F1^adj Omega, F2^adj Omega), valid only when
/// both carry the same charge c and N(loc2, loc1) = -1.
VacuumOverlap vacuum_swap(const AnyonModel& model, const VacuumOverlap& overlap);

}  // namespace plektonlab
