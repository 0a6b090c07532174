#pragma once

// Finite-dimensional clock/shift realization of the abelian field algebra.
// Each distinct localization of a word becomes a Z_N site; sites are ordered
// by precedes. With U = diag(omega^m), V the cyclic shift (U V = omega V U) and
// a_j = U_1 ... U_{j-1} V_j, a symbol f(c, A) at site j becomes a_j^c M_j(A),
// where an observable atom is a fixed generic diagonal matrix on site j and
// gamma^k(X) = a_j^{-k} X a_j^k.

#include "plektonlab/field_engine.hpp"

#include <Eigen/SparseCore>

#include <complex>
#include <string>
#include <vector>

namespace plektonlab {

using SparseMatrixC = Eigen::SparseMatrix<std::complex<double>>;

struct LatticeCheck {
  std::string name;
  double residual = 0.0;
  bool pass = false;
};

struct LatticeReport {
  int sites = 0;
  long dimension = 0;
  std::vector<LatticeCheck> checks;

  bool ok() const;
  double max_residual() const;
};

inline constexpr double kLatticeTol = 1e-12;
inline constexpr long kLatticeMaxDimension = 15625;

class LatticeOracle {
 public:
  /// Requires a valid Z_N model with N <= 5, at most 6 distinct paths, all
  /// pairwise causally separated with windings in {-1, 0} once sorted.
  LatticeOracle(const AnyonModel& model, std::vector<ConePath> paths);

  int sites() const { return static_cast<int>(paths_.size()); }
  long dimension() const { return dim_; }
  /// Site index (0-based, increasing in precedes order); throws if unknown.
  int site_of(const ConePath& loc) const;

  const SparseMatrixC& generator(int site) const { return generators_[static_cast<std::size_t>(site)]; }
  SparseMatrixC matrix_of(const FieldSymbol& f) const;
  /// coeff * M(F_n) ... M(F_1)
  SparseMatrixC matrix_of(const FieldWord& w) const;

  /// Numerical checks of exchange, normal form, adjoint and fusion for `w`.
  LatticeReport check_word(const FieldWord& w) const;

 private:
  SparseMatrixC observable(const ObsAtom& atom, int site) const;
  SparseMatrixC generator_power(int site, std::int64_t k) const;

  AnyonModel model_;
  std::vector<ConePath> paths_;
  int n_ = 0;
  long dim_ = 0;
  std::vector<SparseMatrixC> generators_;
};

/// Distinct localizations of `w` placed on sites, then all checks on `w`.
LatticeReport lattice_oracle(const AnyonModel& model, const FieldWord& w);

}  // namespace plektonlab
