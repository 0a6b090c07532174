#include "plektonlab/lattice_oracle.hpp"

#include "plektonlab/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace plektonlab {

namespace {

using Triplet = Eigen::Triplet<std::complex<double>>;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

double unit_double(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double residual(const SparseMatrixC& a, const SparseMatrixC& b) {
  const SparseMatrixC d = a - b;
  double r = 0.0;
  for (int k = 0; k < d.outerSize(); ++k) {
    for (SparseMatrixC::InnerIterator it(d, k); it; ++it) r = std::max(r, std::abs(it.value()));
  }
  return r;
}

SparseMatrixC identity(long dim) {
  SparseMatrixC m(dim, dim);
  m.setIdentity();
  return m;
}

}  // namespace

bool LatticeReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const LatticeCheck& c) { return c.pass; });
}

double LatticeReport::max_residual() const {
  double r = 0.0;
  for (const auto& c : checks) r = std::max(r, c.residual);
  return r;
}

LatticeOracle::LatticeOracle(const AnyonModel& model, std::vector<ConePath> paths) : model_(model) {
  if (!model.group.is_cyclic() || *model.group.order > 5 || *model.group.order < 2) {
    throw PreconditionError("lattice oracle requires a Z_N model with 2 <= N <= 5");
  }
  if (!validate_model(model).ok()) throw PreconditionError("lattice oracle requires a valid model");
  n_ = static_cast<int>(*model.group.order);

  for (auto& p : paths) {
    if (std::find(paths_.begin(), paths_.end(), p) == paths_.end()) paths_.push_back(std::move(p));
  }
  if (paths_.empty() || paths_.size() > 6) throw PreconditionError("lattice oracle supports 1 to 6 sites");
  std::sort(paths_.begin(), paths_.end(), [](const ConePath& a, const ConePath& b) { return precedes(a, b); });
  for (std::size_t j = 0; j < paths_.size(); ++j) {
    for (std::size_t k = j + 1; k < paths_.size(); ++k) {
      if (relative_winding(paths_[k], paths_[j]) != 0) {
        throw PreconditionError("lattice oracle requires windings in {-1, 0} between sites");
      }
    }
  }

  dim_ = 1;
  for (std::size_t i = 0; i < paths_.size(); ++i) dim_ *= n_;
  if (dim_ > kLatticeMaxDimension) throw PreconditionError("lattice dimension exceeds " + std::to_string(kLatticeMaxDimension));

  // a_j |m> = omega^{m_1 + ... + m_{j-1}} |m + e_j>
  const std::complex<double> omega = model.omega.value();
  long stride = 1;
  for (int j = 0; j < sites(); ++j) {
    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(dim_));
    for (long idx = 0; idx < dim_; ++idx) {
      long rest = idx;
      int below = 0;
      for (int i = 0; i < j; ++i) {
        below += static_cast<int>(rest % n_);
        rest /= n_;
      }
      const int mj = static_cast<int>(rest % n_);
      const long target = idx + (mj == n_ - 1 ? -(n_ - 1) * stride : stride);
      t.emplace_back(target, idx, std::pow(omega, below));
    }
    SparseMatrixC a(dim_, dim_);
    a.setFromTriplets(t.begin(), t.end());
    generators_.push_back(std::move(a));
    stride *= n_;
  }
}

int LatticeOracle::site_of(const ConePath& loc) const {
  const auto it = std::find(paths_.begin(), paths_.end(), loc);
  if (it == paths_.end()) throw PreconditionError("path is not a site of this lattice");
  return static_cast<int>(it - paths_.begin());
}

SparseMatrixC LatticeOracle::generator_power(int site, std::int64_t k) const {
  const SparseMatrixC& a = generator(site);
  const SparseMatrixC base = k >= 0 ? SparseMatrixC(a) : SparseMatrixC(a.adjoint());
  SparseMatrixC out = identity(dim_);
  for (std::int64_t i = 0; i < (k >= 0 ? k : -k); ++i) out = out * base;
  return out;
}

SparseMatrixC LatticeOracle::observable(const ObsAtom& atom, int site) const {
  if (atom.reflected) throw PreconditionError("reflected observables have no lattice realization");
  std::mt19937_64 rng(fnv1a(atom.symbol));
  std::vector<std::complex<double>> d(static_cast<std::size_t>(n_));
  for (auto& v : d) v = std::polar(0.5 + unit_double(rng), kTwoPi * unit_double(rng));

  long stride = 1;
  for (int i = 0; i < site; ++i) stride *= n_;
  std::vector<Triplet> t;
  t.reserve(static_cast<std::size_t>(dim_));
  for (long idx = 0; idx < dim_; ++idx) {
    const auto m = static_cast<std::size_t>((idx / stride) % n_);
    t.emplace_back(idx, idx, atom.star ? std::conj(d[m]) : d[m]);
  }
  SparseMatrixC x(dim_, dim_);
  x.setFromTriplets(t.begin(), t.end());
  if (atom.twist == 0) return x;
  return SparseMatrixC(generator_power(site, -atom.twist) * x * generator_power(site, atom.twist));
}

SparseMatrixC LatticeOracle::matrix_of(const FieldSymbol& f) const {
  if (!f.loc) throw PreconditionError("delocalized symbols have no lattice site");
  const int site = site_of(*f.loc);
  SparseMatrixC m = generator_power(site, f.charge);
  for (const auto& atom : f.obs.atoms()) m = m * observable(atom, site);
  return m;
}

SparseMatrixC LatticeOracle::matrix_of(const FieldWord& w) const {
  SparseMatrixC m = identity(dim_);
  for (const auto& f : w.factors) m = m * matrix_of(f);
  return w.coeff.value() * m;
}

LatticeReport LatticeOracle::check_word(const FieldWord& w) const {
  LatticeReport r;
  r.sites = sites();
  r.dimension = dim_;
  auto record = [&](std::string name, double res) { r.checks.push_back({std::move(name), res, res < kLatticeTol}); };

  const SparseMatrixC value = matrix_of(w);
  for (std::size_t i = 0; i < w.factors.size(); ++i) {
    const FieldSymbol& f = w.factors[i];
    record("adjoint[" + std::to_string(i) + "]", residual(matrix_of(adjoint(f)), SparseMatrixC(matrix_of(f).adjoint())));
  }
  bool distinct = true;
  for (std::size_t i = 0; i + 1 < w.factors.size(); ++i) {
    const std::string at = "[" + std::to_string(i) + "]";
    if (*w.factors[i].loc == *w.factors[i + 1].loc) {
      distinct = false;
      record("fusion" + at, residual(matrix_of(fuse_adjacent(w, i)), value));
    } else {
      record("exchange" + at, residual(matrix_of(exchange(model_, w, i)), value));
    }
  }
  for (std::size_t i = 0; i < w.factors.size() && distinct; ++i) {
    for (std::size_t k = i + 1; k < w.factors.size(); ++k) distinct = distinct && !(*w.factors[i].loc == *w.factors[k].loc);
  }
  if (distinct) record("normal-form", residual(matrix_of(normal_form(model_, w)), value));
  record("word-adjoint", residual(matrix_of(adjoint(w)), SparseMatrixC(value.adjoint())));
  return r;
}

LatticeReport lattice_oracle(const AnyonModel& model, const FieldWord& w) {
  if (w.factors.empty() || w.factors.size() > 6) throw PreconditionError("lattice oracle supports words of length 1 to 6");
  std::vector<ConePath> paths;
  for (const auto& f : w.factors) {
    if (!f.loc) throw PreconditionError("delocalized symbols have no lattice site");
    paths.push_back(*f.loc);
  }
  return LatticeOracle(model, std::move(paths)).check_word(w);
}

}  // namespace plektonlab
