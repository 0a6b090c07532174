#include <gtest/gtest.h>

#include <plektonlab/errors.hpp>
#include <plektonlab/lattice_oracle.hpp>

#include "generators.hpp"

#include <chrono>

using namespace plektonlab;

namespace {

double norm_max(const SparseMatrixC& m) {
  double r = 0.0;
  for (int k = 0; k < m.outerSize(); ++k) {
    for (SparseMatrixC::InnerIterator it(m, k); it; ++it) r = std::max(r, std::abs(it.value()));
  }
  return r;
}

/// `n` cones at the origin with disjoint arcs inside one turn, shuffled.
std::vector<ConePath> sites(gen::Rng& r, int n) {
  const double width = 2.0 * (kPi - 0.1) / n;
  std::vector<ConePath> out;
  for (int i = 0; i < n; ++i) {
    const double lo = -kPi + 0.1 + i * width;
    out.push_back(ConePath::cone({}, lo + 0.5 * width + r.uniform(-0.1, 0.1) * width, 0.2 * width));
  }
  std::shuffle(out.begin(), out.end(), r.engine());
  return out;
}

FieldWord random_word(gen::Rng& r, const std::vector<ConePath>& s, int length) {
  FieldWord w{CyclotomicPhase(r.integer(0, 5), 6), {}};
  for (int k = 0; k < length; ++k) {
    w.factors.push_back(gen::symbol(r, s[static_cast<std::size_t>(r.integer(0, static_cast<std::int64_t>(s.size()) - 1))], 3));
  }
  return w;
}

}  // namespace

TEST(Lattice, FermionSitesAnticommute) {
  gen::Rng r(70);
  const LatticeOracle lat(gen::fermion(), sites(r, 4));
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) {
      const SparseMatrixC ac = lat.generator(j) * lat.generator(k) + lat.generator(k) * lat.generator(j);
      if (j != k) EXPECT_LT(norm_max(ac), 1e-15);
    }
  }
}

TEST(Lattice, Z3SitesBraidWithOmega) {
  const AnyonModel z3 = gen::zn_model(3, 1);
  gen::Rng r(71);
  const auto s = sites(r, 2);
  const LatticeOracle lat(z3, s);
  const std::complex<double> w = z3.omega.value();
  const SparseMatrixC lhs = lat.generator(1) * lat.generator(0);
  const SparseMatrixC rhs = lat.generator(0) * lat.generator(1);
  EXPECT_LT(norm_max(lhs - w * rhs), 1e-15);
  const int lo = precedes(s[0], s[1]) ? 0 : 1;
  EXPECT_EQ(lat.site_of(s[static_cast<std::size_t>(lo)]), 0);
  EXPECT_EQ(r_phase(z3, 1, 1, relative_winding(s[static_cast<std::size_t>(1 - lo)], s[static_cast<std::size_t>(lo)])).value(), w);
}

TEST(Lattice, AdjointIsConjugateTranspose) {
  gen::Rng r(72);
  const auto s = sites(r, 3);
  const LatticeOracle lat(gen::zn_model(4, 1), s);
  for (int i = 0; i < 100; ++i) {
    const FieldSymbol f = gen::symbol(r, s[static_cast<std::size_t>(r.integer(0, 2))], 5);
    EXPECT_LT(norm_max(lat.matrix_of(adjoint(f)) - SparseMatrixC(lat.matrix_of(f).adjoint())), 1e-12);
  }
}

TEST(Lattice, ReproducesSymbolicIdentities) {
  gen::Rng r(73);
  const auto start = std::chrono::steady_clock::now();
  int words = 0;
  for (std::int64_t n = 2; n <= 4; ++n) {
    for (std::int64_t k = 1; k < n; ++k) {
      const AnyonModel m = gen::zn_model(n, k);
      for (int i = 0; i < 8; ++i) {
        const auto s = sites(r, static_cast<int>(r.integer(1, 5)));
        const LatticeReport rep = lattice_oracle(m, random_word(r, s, static_cast<int>(r.integer(1, 6))));
        ++words;
        EXPECT_TRUE(rep.ok()) << "Z_" << n << " k=" << k << " residual " << rep.max_residual();
        EXPECT_LT(rep.max_residual(), kLatticeTol);
      }
    }
  }
  EXPECT_GT(words, 40);
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 30.0);
}

TEST(Lattice, NextSheetSitesAreRejected) {
  const std::vector<ConePath> s{ConePath::cone({}, 0.0, 0.1), ConePath::cone({}, kTwoPi + 1.0, 0.1)};
  EXPECT_THROW(LatticeOracle(gen::zn_model(3, 1), s), PreconditionError);
}

TEST(Lattice, Limits) {
  gen::Rng r(74);
  EXPECT_THROW(LatticeOracle(gen::zn_model(6, 1), sites(r, 2)), PreconditionError);
  EXPECT_THROW(LatticeOracle(gen::zn_model(2, 1), sites(r, 7)), PreconditionError);
  AnyonModel bad = gen::zn_model(3, 1);
  bad.omega = CyclotomicPhase(1, 4);
  EXPECT_THROW(LatticeOracle(bad, sites(r, 2)), PreconditionError);
  const LatticeOracle big(gen::zn_model(5, 2), sites(r, 6));
  EXPECT_EQ(big.dimension(), kLatticeMaxDimension);
}

TEST(Lattice, DetectsWrongPhase) {
  // A model whose exchange phase disagrees with the lattice commutation must fail.
  gen::Rng r(75);
  const auto s = sites(r, 2);
  const AnyonModel z3 = gen::zn_model(3, 1);
  const LatticeOracle lat(z3, s);
  FieldWord w{CyclotomicPhase::one(), {FieldSymbol{1, {}, s[0], {}}, FieldSymbol{1, {}, s[1], {}}}};
  const FieldWord swapped = exchange(z3, w, 0);
  FieldWord wrong = swapped;
  wrong.coeff = swapped.coeff.inverse();
  EXPECT_LT(norm_max(lat.matrix_of(swapped) - lat.matrix_of(w)), 1e-12);
  EXPECT_GT(norm_max(lat.matrix_of(wrong) - lat.matrix_of(w)), 0.5);
}
