#include "suites.hpp"

#include <plektonlab/errors.hpp>
#include <plektonlab/graded.hpp>
#include <plektonlab/lattice_oracle.hpp>
#include <plektonlab/wigner.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace plektonlab::suites {

namespace {

using report::Section;

std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform(double lo, double hi) { return lo + (hi - lo) * (static_cast<double>(gen_() >> 11) * 0x1.0p-53); }
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(double p) { return uniform(0.0, 1.0) < p; }

 private:
  std::mt19937_64 gen_;
};

int sized(const Context& ctx, int base) { return std::max(1, static_cast<int>(std::lround(base * ctx.sweep))); }

std::string count_note(int bad, int total, const std::string& what) {
  return std::to_string(bad) + "/" + std::to_string(total) + " " + what;
}

AnyonModel make_model(std::int64_t n, std::int64_t k) {
  // Z_N with omega = e^{2 pi i k / N}, spin k/N, omega_sqrt = e^{2 pi i k / 2N}.
  AnyonModel m;
  m.group = ChargeGroup::cyclic(n);
  m.omega = CyclotomicPhase(k, n);
  m.omega_sqrt = CyclotomicPhase(k, 2 * n);
  m.spin = Rational(k, n);
  if (!validate_model(m).ok()) m.omega_sqrt = CyclotomicPhase(k * n + k, 2 * n);
  return m;
}

AnyonModel fermion_model() {
  AnyonModel m;
  m.group = ChargeGroup::cyclic(2);
  m.omega = CyclotomicPhase(1, 2);
  m.omega_sqrt = CyclotomicPhase(1, 4);
  m.spin = Rational(1, 2);
  return m;
}

std::vector<AnyonModel> test_models(const AnyonModel& ctx_model) {
  std::vector<AnyonModel> out{ctx_model, fermion_model(), make_model(3, 1), make_model(4, 1), make_model(5, 2)};
  AnyonModel free;
  free.omega = CyclotomicPhase(1, 7);
  free.omega_sqrt = CyclotomicPhase(1, 14);
  free.spin = Rational(1, 7);
  out.push_back(free);
  return out;
}

// k cones at a common apex with pairwise disjoint angular sectors and random sheets.
std::vector<ConePath> disjoint_cones(Rng& rng, const ReferenceFrame& frame, int k, int max_sheet = 2,
                                     bool shift_apexes = true) {
  const MVec3 apex{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
  const double slot = kTwoPi / k;
  const double base = frame.reference_angle() + rng.uniform(-kPi, kPi);
  std::vector<ConePath> out;
  for (int i = 0; i < k; ++i) {
    const double half = rng.uniform(0.05, std::min(0.7, 0.45 * slot));
    const double jitter = rng.uniform(-(0.5 * slot - half - 0.01), 0.5 * slot - half - 0.01);
    const double center = base + i * slot + jitter;
    const double sheet = static_cast<double>(rng.integer(-max_sheet, max_sheet));
    MVec3 a = apex;
    if (shift_apexes && rng.chance(0.5)) {
      // Moving the apex into the cone keeps the region inside the original one.
      const double r = rng.uniform(0.0, 2.0);
      const double t = rng.uniform(-0.9, 0.9) * r * std::sin(half);
      a = a + MVec3{t, r * std::cos(center), r * std::sin(center)};
    }
    out.push_back(ConePath::cone(a, center + kTwoPi * sheet, half, frame));
  }
  return out;
}

std::pair<ConePath, ConePath> separated_pair(Rng& rng, const ReferenceFrame& frame) {
  if (rng.chance(0.1)) {
    const MVec3 apex{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const double c = frame.reference_angle() + rng.uniform(-kPi, kPi);
    return {ConePath::wedge(apex, c + kTwoPi * static_cast<double>(rng.integer(-2, 2)), frame),
            ConePath::wedge(apex, c + kPi + kTwoPi * static_cast<double>(rng.integer(-2, 2)), frame)};
  }
  auto v = disjoint_cones(rng, frame, 2);
  if (rng.chance(0.5)) std::swap(v[0], v[1]);
  return {v[0], v[1]};
}

CoveringPoincare random_element(Rng& rng, double max_rapidity = 1.2) {
  const double theta = rng.uniform(-4 * kPi, 4 * kPi);
  const LorentzMatrix m = rotation_matrix(theta) * boost_matrix(rng.uniform(0, max_rapidity), rng.uniform(-kPi, kPi));
  return {MVec3{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)}, CoveringLorentz(m, theta)};
}

ReferenceFrame random_frame(Rng& rng) {
  const double ref = rng.uniform(-3 * kPi, 3 * kPi);
  const double half = rng.uniform(0.1, 0.5);
  return {ref, ReferenceCone{MVec3{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)},
                             ref + rng.uniform(-0.9, 0.9) * half, half}};
}

// Scan of the defining inequalities r(2 pi n).c1 < c2 < r(2 pi (n+1)).c1 over n in [-5, 5].
std::optional<int> winding_by_scan(const ConePath& c2, const ConePath& c1) {
  const LiftedArc a1 = c1.relative_arc();
  const LiftedArc a2 = c2.relative_arc();
  std::optional<int> found;
  for (int n = -5; n <= 5; ++n) {
    const bool lower = a1.alpha_plus + kTwoPi * n <= a2.alpha_minus + 1e-9;
    const bool upper = a2.alpha_plus <= a1.alpha_minus + kTwoPi * (n + 1) + 1e-9;
    if (lower && upper) {
      if (found) return std::nullopt;
      found = n;
    }
  }
  return found;
}

std::string random_atoms(Rng& rng) {
  static const char* names[] = {"A", "B", "C", "D"};
  std::string s;
  const auto len = rng.integer(0, 2);
  for (std::int64_t i = 0; i < len; ++i) {
    std::string atom = names[rng.integer(0, 3)];
    if (rng.chance(0.4)) atom += "*";
    const auto k = rng.integer(-2, 2);
    if (k != 0) atom = "g^" + std::to_string(k) + "(" + atom + ")";
    s += (s.empty() ? "" : " ") + atom;
  }
  return s.empty() ? "1" : s;
}

FieldSymbol random_symbol(Rng& rng, const ConePath& loc, std::int64_t max_charge = 3) {
  FieldSymbol f;
  f.charge = rng.integer(-max_charge, max_charge);
  f.obs = ObservableWord::parse(random_atoms(rng));
  f.loc = loc;
  return f;
}

// All routes of adjacent transpositions of minimal length reaching the target.
void all_routes(const AnyonModel& model, const FieldWord& w, std::vector<std::size_t> rank,
                std::vector<CyclotomicPhase>& out) {
  bool sorted = true;
  for (std::size_t i = 0; i + 1 < rank.size(); ++i) {
    if (rank[i] > rank[i + 1]) {
      sorted = false;
      std::vector<std::size_t> next = rank;
      std::swap(next[i], next[i + 1]);
      all_routes(model, exchange(model, w, i), next, out);
    }
  }
  if (sorted) out.push_back(w.coeff);
}

template <typename F>
void guarded(Section& s, const std::string& name, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    s.add_error(name, e.what());
  }
}

ReferenceFrame context_frame(const Context& ctx) { return ctx.scene ? ctx.scene->frame : ReferenceFrame::standard(); }

// ---------------------------------------------------------------- geometry

// Searches C1 - C2 = (a1 - a2) + cone(g1..., -g2...) for a causal vector. Any such point
// needs at most three generators, so triples are sampled and refined in log-weights.
bool sampled_causal_contact(Rng& rng, const ConePath& c1, const ConePath& c2, int samples) {
  std::vector<MVec3> v;
  for (const auto& g : c1.generators()) v.push_back(g);
  for (const auto& g : c2.generators()) v.push_back(-1.0 * g);
  const MVec3 d0 = c1.apex() - c2.apex();
  auto score = [](const MVec3& d) {
    return minkowski_inner(d, d) / (d.x0 * d.x0 + d.x1 * d.x1 + d.x2 * d.x2 + 1e-300);
  };
  const auto pick = [&] { return std::min(v.size() - 1, static_cast<std::size_t>(rng.uniform(0.0, double(v.size())))); };
  for (int i = 0; i < samples; ++i) {
    const std::size_t idx[3] = {pick(), pick(), pick()};
    double w[3] = {rng.uniform(-4.0, 4.0), rng.uniform(-4.0, 4.0), rng.uniform(-4.0, 4.0)};
    auto at = [&](const double* l) {
      MVec3 x = d0;
      for (int k = 0; k < 3; ++k) x = x + std::pow(10.0, l[k]) * v[idx[k]];
      return x;
    };
    double q = score(at(w));
    for (double step = 0.5; step > 1e-3; step *= 0.5) {
      for (int it = 0; it < 6; ++it) {
        bool improved = false;
        for (int k = 0; k < 6; ++k) {
          double t[3] = {w[0], w[1], w[2]};
          t[k / 2] += (k % 2) ? step : -step;
          const double q2 = score(at(t));
          if (q2 > q) {
            q = q2;
            std::copy(t, t + 3, w);
            improved = true;
          }
        }
        if (!improved) break;
      }
    }
    if (q >= 0.0) return true;
  }
  return false;
}

Section geometry(const Context& ctx) {
  Section s{"geometry", {}};
  Rng rng(ctx.seed ^ name_hash("geometry"));
  const ReferenceFrame frame = context_frame(ctx);

  guarded(s, "opposite cones winding", [&] {
    const ConePath c1 = ConePath::cone({}, 0.0, 0.1);
    const ConePath c2 = ConePath::cone({}, -kPi, 0.1);
    const int n = relative_winding(c2, c1);
    s.add("opposite cones winding", n == -1, "N(C2,C1)=" + std::to_string(n), "expected -1");
  });

  const int pairs = sized(ctx, 1000);
  guarded(s, "winding vs definition scan", [&] {
    int bad = 0;
    int anti = 0;
    for (int i = 0; i < pairs; ++i) {
      const auto [c2, c1] = separated_pair(rng, frame);
      const int n21 = relative_winding(c2, c1);
      const int n12 = relative_winding(c1, c2);
      const auto scan = winding_by_scan(c2, c1);
      if (!scan || *scan != n21) ++bad;
      if (n12 + n21 != -1) ++anti;
    }
    s.add("winding vs definition scan", bad == 0, count_note(bad, pairs, "mismatches"));
    s.add("antisymmetry N12 + N21 = -1", anti == 0, count_note(anti, pairs, "violations"));
  });

  guarded(s, "covariance", [&] {
    int bad = 0;
    for (int i = 0; i < pairs; ++i) {
      const auto [c2, c1] = separated_pair(rng, frame);
      const CoveringPoincare g = random_element(rng);
      if (relative_winding(act(g, c2), act(g, c1)) != relative_winding(c2, c1)) ++bad;
    }
    s.add("covariance under covering Poincare", bad == 0, count_note(bad, pairs, "violations"));
  });

  guarded(s, "rotation shift", [&] {
    int bad = 0;
    for (int i = 0; i < pairs; ++i) {
      const auto [c2, c1] = separated_pair(rng, frame);
      const auto m = rng.integer(-3, 3);
      const ConePath shifted = act(as_poincare(cover_rotation(kTwoPi * static_cast<double>(m))), c2);
      if (relative_winding(shifted, c1) != relative_winding(c2, c1) + m) ++bad;
    }
    s.add("rotation by 2 pi m shifts N by m", bad == 0, count_note(bad, pairs, "violations"));
  });

  guarded(s, "rebase invariance", [&] {
    int bad = 0;
    for (int i = 0; i < pairs; ++i) {
      const auto [c2, c1] = separated_pair(rng, frame);
      const ReferenceFrame f = random_frame(rng);
      if (relative_winding(rebase(c2, f), rebase(c1, f)) != relative_winding(c2, c1)) ++bad;
    }
    s.add("rebase invariance", bad == 0, count_note(bad, pairs, "violations"));
  });

  guarded(s, "reflection swaps arguments", [&] {
    const ReferenceFrame jf = ReferenceFrame::j_invariant(rng.chance(0.5));
    int bad = 0;
    for (int i = 0; i < pairs; ++i) {
      const auto [c2, c1] = separated_pair(rng, jf);
      if (relative_winding(reflect_path(c2), reflect_path(c1)) != relative_winding(c1, c2)) ++bad;
    }
    s.add("N(jC2, jC1) = N(C1, C2)", bad == 0, count_note(bad, pairs, "violations"));
  });

  guarded(s, "orientation reversal", [&] {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      std::vector<MVec3> path;
      std::vector<MVec3> mirrored;
      const double a0 = rng.uniform(-kPi, kPi);
      const double turns = rng.uniform(-3.0, 3.0);
      const double wobble = rng.uniform(0.0, 1.0);
      for (int k = 0; k <= 400; ++k) {
        const double t = k / 400.0;
        const double a = a0 + kTwoPi * turns * t + wobble * std::sin(7.0 * t);
        const double r = std::sinh(rng.uniform(0.0, 1.0));
        const MVec3 e{r, std::sqrt(1 + r * r) * std::cos(a), std::sqrt(1 + r * r) * std::sin(a)};
        path.push_back(e);
        mirrored.push_back(reflect(e));
      }
      worst = std::max(worst, std::abs(accumulated_angle(mirrored) + accumulated_angle(path)));
    }
    s.add_residual("accumulated angle of j.path = -accumulated angle", worst, 1e-12);
  });

  guarded(s, "precedes order", [&] {
    int bad = 0;
    const int triples = sized(ctx, 300);
    for (int i = 0; i < triples; ++i) {
      auto v = disjoint_cones(rng, frame, 3, 1);
      for (const auto& c : v) {
        try {
          if (precedes(c, c)) ++bad;
        } catch (const PreconditionError&) {
        }
      }
      std::sort(v.begin(), v.end(), [](const ConePath& a, const ConePath& b) {
        return a.relative_arc().alpha_minus < b.relative_arc().alpha_minus;
      });
      if (precedes(v[0], v[1]) && precedes(v[1], v[2]) && !precedes(v[0], v[2])) ++bad;
      if (precedes(v[1], v[0]) || precedes(v[2], v[1])) ++bad;
    }
    s.add("precedes transitive and irreflexive", bad == 0, count_note(bad, triples, "violations"));
  });

  guarded(s, "causal separation vs sampling", [&] {
    int bad = 0;
    int separated = 0;
    for (int i = 0; i < pairs; ++i) {
      const double c1 = rng.uniform(-kPi, kPi);
      const double c2 = rng.uniform(-kPi, kPi);
      const ConePath a = ConePath::cone({}, c1, rng.uniform(0.05, 1.2));
      const ConePath b = ConePath::cone({rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)}, c2,
                                        rng.uniform(0.05, 1.2));
      const bool sep = causally_separated(a, b);
      const bool contact = sampled_causal_contact(rng, a, b, 200);
      separated += sep ? 1 : 0;
      if (sep == contact) ++bad;
    }
    s.add("causal separation vs sampling oracle", bad == 0,
          count_note(bad, pairs, "disagreements") + ", " + std::to_string(separated) + " separated");
  });

  if (ctx.scene) {
    for (const auto& [id2, id1] : ctx.scene->pairs) {
      const std::string name = "scene N(" + id2 + "," + id1 + ")";
      guarded(s, name, [&] {
        const int n21 = relative_winding(ctx.scene->at(id2), ctx.scene->at(id1));
        const int n12 = relative_winding(ctx.scene->at(id1), ctx.scene->at(id2));
        s.add(name, n21 + n12 == -1, "N=" + std::to_string(n21) + " reverse=" + std::to_string(n12));
      });
    }
  }
  return s;
}

// ---------------------------------------------------------------- braid

Section braid(const Context& ctx) {
  Section s{"braid", {}};
  Rng rng(ctx.seed ^ name_hash("braid"));
  const ReferenceFrame frame = context_frame(ctx);
  const auto v = validate_model(ctx.model);
  s.add("model valid", v.ok(), {}, v.ok() ? "" : v.failures.front());
  const auto models = test_models(ctx.model);

  guarded(s, "exchange involution", [&] {
    const int words = sized(ctx, 1000);
    int bad = 0;
    for (int i = 0; i < words; ++i) {
      const AnyonModel& m = models[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(models.size()) - 1))];
      const int len = static_cast<int>(rng.integer(2, 4));
      const auto locs = disjoint_cones(rng, frame, len);
      FieldWord w;
      for (const auto& l : locs) w.factors.push_back(random_symbol(rng, l));
      const auto pos = static_cast<std::size_t>(rng.integer(0, len - 2));
      if (!(exchange(m, exchange(m, w, pos), pos) == w)) ++bad;
    }
    s.add("exchange involution", bad == 0, count_note(bad, words, "violations"));
  });

  guarded(s, "confluence", [&] {
    const int words = sized(ctx, 200);
    int bad = 0;
    for (int i = 0; i < words; ++i) {
      const AnyonModel& m = models[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(models.size()) - 1))];
      const int len = static_cast<int>(rng.integer(3, 4));
      const auto locs = disjoint_cones(rng, frame, len);
      FieldWord w;
      for (const auto& l : locs) w.factors.push_back(random_symbol(rng, l));
      std::vector<std::size_t> order(static_cast<std::size_t>(len));
      for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
      std::shuffle(order.begin(), order.end(), std::mt19937_64(static_cast<std::uint64_t>(rng.integer(0, 1 << 30))));
      std::vector<std::size_t> rank(order.size());
      for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = k;
      std::vector<CyclotomicPhase> coeffs;
      all_routes(m, w, rank, coeffs);
      const FieldWord nf = normal_form(m, w, order);
      if (!std::all_of(coeffs.begin(), coeffs.end(), [&](const CyclotomicPhase& c) { return c == nf.coeff; })) ++bad;
    }
    s.add("confluence over all reduced routes", bad == 0, count_note(bad, words, "violations"));
  });

  guarded(s, "fermion anticommutation", [&] {
    const AnyonModel f = fermion_model();
    FieldSymbol a;
    a.charge = 1;
    a.obs = ObservableWord::atom("A");
    a.loc = ConePath::cone({}, 1.0, 0.2);
    FieldSymbol b = a;
    b.loc = ConePath::cone({}, 0.0, 0.2);
    const FieldWord w{CyclotomicPhase::one(), {a, b}};
    const int n = relative_winding(*a.loc, *b.loc);
    const FieldWord x = exchange(f, w, 0);
    s.add("fermion anticommutation", n == 0 && x.coeff == CyclotomicPhase(1, 2), "coeff " + x.coeff.to_string());
  });

  guarded(s, "monodromy prefactor", [&] {
    const int sets = sized(ctx, 1000);
    int bad = 0;
    for (int i = 0; i < sets; ++i) {
      const AnyonModel& m = models[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(models.size()) - 1))];
      const auto alpha = rng.integer(-6, 6);
      const auto c1 = rng.integer(-6, 6);
      const auto c2 = rng.integer(-6, 6);
      const auto n = rng.integer(-4, 4);
      const CyclotomicPhase p = monodromy_prefactor(m, alpha, alpha + c1, alpha + c1 + c2, alpha + c2, n);
      if (p != m.omega.pow(2 * c1 * c2 * n)) ++bad;
      if (p * r_phase(m, c1, c2, 0) != r_phase(m, c1, c2, n)) ++bad;
      if (r_phase(m, c1, c2, n) * r_phase(m, c1, c2, -1 - n) != CyclotomicPhase::one()) ++bad;
    }
    s.add("monodromy prefactor = omega^(2 c1 c2 n)", bad == 0, count_note(bad, sets, "violations"));
  });

  if (ctx.model.group.is_cyclic() && v.ok()) {
    guarded(s, "Z_N periodicity", [&] {
      const auto n = *ctx.model.group.order;
      int bad = 0;
      for (std::int64_t q = -12; q <= 12; ++q) {
        if (sector_phase(ctx.model, q + n) != sector_phase(ctx.model, q)) ++bad;
        for (std::int64_t w = -2; w <= 2; ++w) {
          if (twist_phase(ctx.model, q + n, w) != twist_phase(ctx.model, q, w)) ++bad;
        }
      }
      s.add("sector and twist phases are Z_N periodic", bad == 0, std::to_string(bad) + " violations");
    });
  }

  guarded(s, "spin-statistics per sector", [&] {
    int bad = 0;
    for (std::int64_t q = -10; q <= 10; ++q) {
      if (CyclotomicPhase::from_turns(sector_spin(ctx.model, q)) != sector_phase(ctx.model, q)) ++bad;
    }
    s.add("exp(2 pi i spin(q)) = sector phase", bad == 0, std::to_string(bad) + " violations");
  });

  guarded(s, "graded vs symbolic exchange", [&] {
    const int pairs = sized(ctx, 300);
    int bad = 0;
    for (int i = 0; i < pairs; ++i) {
      const AnyonModel& m = models[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(models.size()) - 1))];
      const auto locs = disjoint_cones(rng, frame, 2);
      const FieldSymbol f2 = random_symbol(rng, locs[0]);
      const FieldSymbol f1 = random_symbol(rng, locs[1]);
      const FieldWord x = exchange(m, FieldWord{CyclotomicPhase::one(), {f2, f1}}, 0);
      const GradedOperator z = twist_conjugate(m, f1, *f2.loc, *f1.loc);
      for (std::int64_t q = -6; q <= 6; ++q) {
        if (z.phase_at(q + f2.charge) / z.phase_at(q) != x.coeff) ++bad;
      }
    }
    s.add("exchange phase = graded phase ratio, q in [-6, 6]", bad == 0, count_note(bad, pairs * 13, "violations"));
  });

  guarded(s, "lattice oracle", [&] {
    const int words = sized(ctx, 60);
    std::vector<AnyonModel> lattice_models{fermion_model(), make_model(3, 1), make_model(4, 1), make_model(4, 3)};
    if (ctx.model.group.is_cyclic() && *ctx.model.group.order <= 5 && v.ok()) lattice_models.push_back(ctx.model);
    double worst = 0.0;
    int failed = 0;
    for (int i = 0; i < words; ++i) {
      const AnyonModel& m = lattice_models[static_cast<std::size_t>(i) % lattice_models.size()];
      const int n_sites = static_cast<int>(rng.integer(2, 5));
      auto sites = disjoint_cones(rng, frame, n_sites, 0, false);
      const double turn = kTwoPi * static_cast<double>(rng.integer(-1, 1));
      for (auto& c : sites) c = act(as_poincare(cover_rotation(turn)), c);
      FieldWord w;
      const int len = static_cast<int>(rng.integer(2, 6));
      for (int k = 0; k < len; ++k) {
        w.factors.push_back(random_symbol(rng, sites[static_cast<std::size_t>(rng.integer(0, n_sites - 1))], 2));
      }
      const LatticeReport r = lattice_oracle(m, w);
      worst = std::max(worst, r.max_residual());
      if (!r.ok()) ++failed;
    }
    s.add_residual("lattice matrices reproduce exchange, adjoint and fusion", worst, kLatticeTol,
                   count_note(failed, words, "words failing"));
  });

  if (ctx.word) {
    guarded(s, "word file", [&] {
      const FieldWord& w = *ctx.word;
      const FieldWord nf = normal_form(ctx.model, w);
      s.add("word normal form", true, nf.coeff.to_string());
      const FieldWord back = normal_form(ctx.model, nf, angular_order(w));
      s.add("word normal form round trip", back.coeff == w.coeff);
    });
  }
  return s;
}

// ---------------------------------------------------------------- twist

Section twist(const Context& ctx) {
  Section s{"twist", {}};
  Rng rng(ctx.seed ^ name_hash("twist"));
  const ReferenceFrame frame = context_frame(ctx);
  const auto models = test_models(ctx.model);

  guarded(s, "twisted locality", [&] {
    const int configs = sized(ctx, 500);
    int bad = 0;
    int controls = 0;
    int caught = 0;
    for (int i = 0; i < configs; ++i) {
      const AnyonModel& m = models[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(models.size()) - 1))];
      const auto locs = disjoint_cones(rng, frame, 2);
      const FieldSymbol f2 = random_symbol(rng, locs[0]);
      const FieldSymbol f1 = random_symbol(rng, locs[1]);
      if (!twisted_commutator(m, f2, f1).vanishes()) ++bad;
      const int n = relative_winding(locs[0], locs[1]);
      if (!m.omega.pow(2 * f1.charge * f2.charge).is_one()) {
        ++controls;
        if (!twisted_commutator(m, f2, f1, n + 1).vanishes()) ++caught;
      }
    }
    s.add("graded [F2, Z F1 Z*] vanishes identically", bad == 0, count_note(bad, configs, "non-vanishing"));
    s.add("wrong winding in Z is detected", caught == controls, count_note(caught, controls, "controls detected"));
  });

  guarded(s, "twist operator values", [&] {
    for (bool plus : {true, false}) {
      const ReferenceFrame jf = ReferenceFrame::j_invariant(plus);
      const int n = twist_winding_for_cpt(jf);
      const int expected_n = plus ? -1 : 0;
      int bad = 0;
      for (std::int64_t q = -6; q <= 6; ++q) {
        // omega^{-q^2/2} resp. omega^{+q^2/2}
        const CyclotomicPhase target = plus ? ctx.model.omega_sqrt.pow(q * q).inverse() : ctx.model.omega_sqrt.pow(q * q);
        if (twist_phase(ctx.model, q, n) != target) ++bad;
      }
      s.add(std::string("Z E_q for reference cone on ") + (plus ? "+x2" : "-x2"), n == expected_n && bad == 0,
            "N(We, jWe)=" + std::to_string(n));
    }
  });

  guarded(s, "twist exponent at n = 0", [&] {
    int bad = 0;
    for (std::int64_t c = -4; c <= 4; ++c) {
      FieldSymbol f;
      f.charge = c;
      const GradedOperator z = twist_conjugate(ctx.model, graded_form(f), 0);
      // (omega^{1/2})^{2qc + c^2} with the model's chosen root.
      const Rational h = ctx.model.omega_sqrt.turns();
      for (std::int64_t q = -6; q <= 6; ++q) {
        const Rational expected = h * Rational(2 * q * c + c * c);
        if (z.phase_at(q) != CyclotomicPhase::from_turns(frac(expected))) ++bad;
      }
    }
    s.add("Z f Z* phase = omega^(qc + c^2/2) at n = 0, chosen root", bad == 0, std::to_string(bad) + " violations");
  });

  guarded(s, "gauge covariance", [&] {
    int bad = 0;
    const int trials = sized(ctx, 200);
    for (int i = 0; i < trials; ++i) {
      FieldSymbol f;
      f.charge = rng.integer(-5, 5);
      f.obs = ObservableWord::parse(random_atoms(rng));
      const Rational t(rng.integer(-20, 20), rng.integer(1, 12));
      const GradedOperator x = conjugate_by_grading(graded_form(f), gauge_operator(t).phase);
      for (std::int64_t q = -6; q <= 6; ++q) {
        if (x.phase_at(q) != CyclotomicPhase::from_turns(frac(t * Rational(f.charge)))) ++bad;
      }
    }
    s.add("V(t) f V(t)* = e^(2 pi i c t) f", bad == 0, count_note(bad, trials, "violations"));
  });
  return s;
}

// ---------------------------------------------------------------- cpt

Section cpt(const Context& ctx) {
  Section s{"cpt", {}};
  Rng rng(ctx.seed ^ name_hash("cpt"));
  const ReferenceFrame frame = ctx.scene ? ctx.scene->frame : ReferenceFrame::j_invariant(true);
  if (!frame.is_j_invariant()) {
    s.add_error("CPT preconditions", "reference cone is not j-invariant");
    return s;
  }
  const int symbols = sized(ctx, 1000);

  guarded(s, "theta squared", [&] {
    int bad_sq = 0;
    int bad_charge = 0;
    int bad_loc = 0;
    for (int i = 0; i < symbols; ++i) {
      const auto locs = disjoint_cones(rng, frame, 1);
      const FieldSymbol f = random_symbol(rng, locs[0], 6);
      const CptImage once = cpt_conjugate(ctx.model, f);
      const GradedOperator twice = cpt_conjugate(ctx.model, once.op);
      if (!twice.equivalent(graded_form(f)) || !(*twice.loc == *f.loc)) ++bad_sq;
      if (once.op.shift != -f.charge) ++bad_charge;
      if (!(once.loc == reflect_path(*f.loc))) ++bad_loc;
    }
    s.add("Theta^2 = 1 on symbols", bad_sq == 0, count_note(bad_sq, symbols, "violations"));
    s.add("Theta conjugates charge", bad_charge == 0, count_note(bad_charge, symbols, "violations"));
    s.add("Theta reflects localization", bad_loc == 0, count_note(bad_loc, symbols, "violations"));
  });

  guarded(s, "theta automorphism", [&] {
    int bad = 0;
    const int trials = sized(ctx, 300);
    for (int i = 0; i < trials; ++i) {
      const auto locs = disjoint_cones(rng, frame, 1);
      const GradedOperator x = graded_form(random_symbol(rng, locs[0]));
      const GradedOperator y = graded_form(random_symbol(rng, locs[0]));
      const GradedOperator lhs = cpt_conjugate(ctx.model, graded_compose(x, y));
      const GradedOperator rhs = graded_compose(cpt_conjugate(ctx.model, x), cpt_conjugate(ctx.model, y));
      if (!lhs.equivalent(rhs)) ++bad;
    }
    s.add("Theta (XY) Theta* = (Theta X Theta*)(Theta Y Theta*)", bad == 0, count_note(bad, trials, "violations"));
  });

  guarded(s, "gauge under theta", [&] {
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      const Rational t(rng.integer(-20, 20), rng.integer(1, 12));
      GradedOperator v = gauge_operator(t);
      v.loc = standard_wedge_path(frame);
      if (!cpt_conjugate(ctx.model, v).equivalent(gauge_operator(t))) ++bad;
    }
    s.add("Theta V(t) Theta* = V(t) = V(-t)*", bad == 0, std::to_string(bad) + " violations");
  });

  guarded(s, "geometric covariance", [&] {
    int bad = 0;
    const int trials = sized(ctx, 300);
    for (int i = 0; i < trials; ++i) {
      const auto locs = disjoint_cones(rng, frame, 1);
      const CoveringPoincare g = random_element(rng);
      const ConePath a = reflect_path(act(g, locs[0]));
      const ConePath b = act(reflect_conjugate(g), reflect_path(locs[0]));
      const LiftedArc ra = a.relative_arc();
      const LiftedArc rb = b.relative_arc();
      const MVec3 d = a.apex() - b.apex();
      if (std::abs(ra.alpha_minus - rb.alpha_minus) > 1e-9 || std::abs(ra.alpha_plus - rb.alpha_plus) > 1e-9 ||
          std::abs(d.x0) + std::abs(d.x1) + std::abs(d.x2) > 1e-9) {
        ++bad;
      }
    }
    s.add("j.(g.C) = (jgj).(j.C)", bad == 0, count_note(bad, trials, "violations"));
  });

  guarded(s, "vacuum swap guard", [&] {
    const int attempts = sized(ctx, 200);
    int rejected = 0;
    int bad_factor = 0;
    for (int i = 0; i < attempts; ++i) {
      auto [a, b] = separated_pair(rng, frame);
      const int n = relative_winding(a, b);
      // Shift a so that N(a, b) = -1.
      a = act(as_poincare(cover_rotation(-kTwoPi * (n + 1))), a);
      const auto c = rng.integer(-4, 4);
      FieldSymbol f2 = random_symbol(rng, a);
      FieldSymbol f1 = random_symbol(rng, b);
      f2.charge = f1.charge = c;
      const VacuumOverlap once = vacuum_swap(ctx.model, {CyclotomicPhase::one(), f2, f1});
      if (once.coeff != sector_phase(ctx.model, c)) ++bad_factor;
      try {
        vacuum_swap(ctx.model, once);
      } catch (const PreconditionError&) {
        ++rejected;
      }
    }
    s.add("vacuum swap factor omega^(c^2)", bad_factor == 0, count_note(bad_factor, attempts, "violations"));
    s.add("second vacuum swap rejected by winding guard", rejected == attempts,
          count_note(rejected, attempts, "rejected"));
  });
  return s;
}

// ---------------------------------------------------------------- tomita

ConePath cone_in_standard_wedge(Rng& rng) {
  const double half = rng.uniform(0.05, 0.6);
  const double center = rng.uniform(-(kPi / 2 - half - 0.01), kPi / 2 - half - 0.01);
  const double x1 = rng.uniform(0.0, 3.0);
  return ConePath::cone({rng.uniform(-0.99, 0.99) * x1, x1, rng.uniform(-3, 3)}, center, half);
}

Section tomita(const Context& ctx) {
  Section s{"tomita", {}};
  Rng rng(ctx.seed ^ name_hash("tomita"));
  const int vectors = sized(ctx, 1000);

  guarded(s, "S involution", [&] {
    int bad = 0;
    int bad_star = 0;
    for (int i = 0; i < vectors; ++i) {
      StateVector v;
      v.coeff = CyclotomicPhase(rng.integer(0, 11), 12);
      v.charge = rng.integer(-6, 6);
      v.obs = ObservableWord::parse(random_atoms(rng));
      v.loc = cone_in_standard_wedge(rng);
      if (!(tomita_S(tomita_S(v)) == v)) ++bad;
      StateVector o = v;
      o.charge = 0;
      const StateVector so = tomita_S(o);
      if (!(so.obs == o.obs.star()) || so.charge != 0 || so.coeff != o.coeff.conj()) ++bad_star;
    }
    s.add("S^2 = 1", bad == 0, count_note(bad, vectors, "violations"));
    s.add("S on charge 0 is the star map", bad_star == 0, count_note(bad_star, vectors, "violations"));
  });

  guarded(s, "S localization guard", [&] {
    StateVector v;
    v.charge = 1;
    v.loc = ConePath::cone({}, kPi, 0.2);
    bool rejected = false;
    try {
      tomita_S(v);
    } catch (const PreconditionError&) {
      rejected = true;
    }
    StateVector w = v;
    w.loc = ConePath::cone({}, kTwoPi, 0.2);
    bool rejected_sheet = false;
    try {
      tomita_S(w);
    } catch (const PreconditionError&) {
      rejected_sheet = true;
    }
    s.add("S rejects fields outside the standard wedge path", rejected && rejected_sheet);
  });
  return s;
}

// ---------------------------------------------------------------- wigner

WaveFunction random_wave(Rng& rng, double mass) {
  std::vector<GaussianTerm> terms;
  const auto n = rng.integer(1, 3);
  for (std::int64_t i = 0; i < n; ++i) {
    terms.push_back({std::complex<double>(rng.uniform(-1, 1), rng.uniform(-1, 1)), rng.uniform(-1, 1),
                     rng.uniform(-1, 1), rng.uniform(0.6, 1.2)});
  }
  return WaveFunction::gaussian_sum(mass, std::move(terms));
}

std::vector<MassShellPoint> random_points(Rng& rng, double mass, int n) {
  std::vector<MassShellPoint> out;
  for (int i = 0; i < n; ++i) out.emplace_back(mass, rng.uniform(-3, 3), rng.uniform(-3, 3));
  return out;
}

// Fixed-step unwrapping of the Wigner angle along the canonical path.
double wigner_fixed_steps(const CoveringLorentz& g, const MassShellPoint& p, int steps) {
  const LorentzMatrix bp = standard_boost(p);
  auto angle = [&](double t) {
    const LorentzMatrix l = g.path_at(t);
    const MVec3 q = l.apply(p.four());
    const Eigen::Matrix3d w =
        standard_boost(MassShellPoint(p.mass(), q.x1, q.x2)).inverse().matrix() * l.matrix() * bp.matrix();
    return std::atan2(w(2, 1), w(1, 1));
  };
  double acc = 0.0;
  double prev = angle(0.0);
  for (int k = 1; k <= steps; ++k) {
    const double cur = angle(static_cast<double>(k) / steps);
    acc += wrap_angle(cur - prev);
    prev = cur;
  }
  return acc;
}

Section wigner(const Context& ctx) {
  Section s{"wigner", {}};
  Rng rng(ctx.seed ^ name_hash("wigner"));
  const double mass = ctx.model.mass;

  guarded(s, "cocycle", [&] {
    double worst = 0.0;
    const int triples = sized(ctx, 100);
    for (int i = 0; i < triples; ++i) {
      const CoveringLorentz g1 = random_element(rng, 1.5).lorentz;
      const CoveringLorentz g2 = random_element(rng, 1.5).lorentz;
      const auto p = random_points(rng, mass, 1);
      worst = std::max(worst, verify_cocycle(g1, g2, p));
    }
    s.add_residual("Omega(g1 g2, p) = Omega(g1, L2 p) + Omega(g2, p)", worst, 1e-9);
  });

  guarded(s, "step independence", [&] {
    double worst = 0.0;
    for (int i = 0; i < sized(ctx, 20); ++i) {
      const CoveringLorentz g = random_element(rng, 1.5).lorentz;
      const MassShellPoint p = random_points(rng, mass, 1).front();
      worst = std::max(worst, std::abs(wigner_rotation(g, p) - wigner_fixed_steps(g, p, 4096)));
    }
    s.add_residual("Omega independent of continuation steps", worst, 1e-10);
  });

  const std::vector<double> spins{0.0, 0.5, 1.0 / 3.0, boost::rational_cast<double>(ctx.model.spin)};
  guarded(s, "rotation by 2 pi k", [&] {
    double worst = 0.0;
    const auto pts = random_points(rng, mass, 10);
    for (double spin : spins) {
      const WaveFunction psi = random_wave(rng, mass);
      for (int k = 1; k <= 3; ++k) {
        const WaveFunction r = apply_rep(as_poincare(cover_rotation(kTwoPi * k)), spin, psi);
        const std::complex<double> phase = std::polar(1.0, kTwoPi * k * spin);
        for (const auto& p : pts) worst = std::max(worst, std::abs(r(p) - phase * psi(p)));
      }
    }
    s.add_residual("U(r(2 pi k)) = exp(2 pi i k s)", worst, 1e-9);
  });

  guarded(s, "j relations", [&] {
    double worst = 0.0;
    std::vector<WaveFunction> tests;
    for (int i = 0; i < 3; ++i) tests.push_back(random_wave(rng, mass));
    const auto pts = random_points(rng, mass, 10);
    for (int i = 0; i < sized(ctx, 10); ++i) {
      const double spin = spins[static_cast<std::size_t>(i) % spins.size()];
      worst = std::max(worst, verify_j_relations(random_element(rng), spin, tests, pts).max());
    }
    s.add_residual("U(j) U(g) U(j) = U(jgj), U(j)^2 = 1, U(r(2 pi)) = e^(2 pi i s)", worst, 1e-8);
  });

  guarded(s, "unitarity", [&] {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
      const WaveFunction psi = random_wave(rng, mass);
      const double n0 = norm_squared(psi);
      const CoveringPoincare g = random_element(rng, 0.6);
      const double n1 = norm_squared(apply_rep(g, spins[static_cast<std::size_t>(i) % spins.size()], psi),
                                     QuadratureSpec{10.0, 161});
      worst = std::max(worst, std::abs(n1 - n0) / n0);
    }
    s.add_residual("quadrature norm preserved", worst, 1e-6);
  });

  guarded(s, "spin-statistics", [&] {
    const WaveFunction psi = WaveFunction::gaussian_sum(mass, {GaussianTerm{}});
    const MassShellPoint p(mass, 0.3, -0.2);
    const std::complex<double> eig =
        apply_rep(as_poincare(cover_rotation(kTwoPi)), boost::rational_cast<double>(ctx.model.spin), psi)(p) / psi(p);
    s.add_residual("U(r(2 pi)) eigenvalue = sector phase of charge 1",
                   std::abs(eig - sector_phase(ctx.model, 1).value()), 1e-9);
  });
  return s;
}

}  // namespace

const std::vector<std::string>& names() {
  static const std::vector<std::string> n{"geometry", "braid", "twist", "cpt", "tomita", "wigner"};
  return n;
}

bool is_suite(const std::string& name) {
  return name == "all" || std::find(names().begin(), names().end(), name) != names().end();
}

report::Section run(const std::string& name, const Context& ctx) {
  static const std::map<std::string, std::function<Section(const Context&)>> table{
      {"geometry", geometry}, {"braid", braid}, {"twist", twist},
      {"cpt", cpt},           {"tomita", tomita}, {"wigner", wigner}};
  const auto it = table.find(name);
  if (it == table.end()) {
    Section s{name, {}};
    s.add_error("suite", "unknown suite '" + name + "'");
    return s;
  }
  try {
    return it->second(ctx);
  } catch (const std::exception& e) {
    Section s{name, {}};
    s.add_error("suite", e.what());
    return s;
  }
}

report::Section model_validation(const AnyonModel& model) {
  Section s{"model", {}};
  const ModelValidation v = validate_model(model);
  s.add("omega = exp(2 pi i s)", std::none_of(v.failures.begin(), v.failures.end(), [](const std::string& f) {
          return f.rfind("spin-statistics", 0) == 0;
        }));
  for (const auto& f : v.failures) {
    if (f.rfind("spin-statistics", 0) != 0) s.add(f, false);
  }
  if (v.ok()) s.add("all model conditions", true, model.group.to_string() + ", omega " + model.omega.to_string());
  return s;
}

report::Section winding_table(const io::Scene& scene) {
  Section s{"winding", {}};
  std::vector<std::pair<std::string, std::string>> pairs = scene.pairs;
  if (pairs.empty()) {
    for (std::size_t i = 0; i < scene.ids.size(); ++i) {
      for (std::size_t k = i + 1; k < scene.ids.size(); ++k) pairs.emplace_back(scene.ids[k], scene.ids[i]);
    }
  }
  for (const auto& [id2, id1] : pairs) {
    const std::string name = "N(" + id2 + "," + id1 + ")";
    try {
      const int n21 = relative_winding(scene.at(id2), scene.at(id1));
      const int n12 = relative_winding(scene.at(id1), scene.at(id2));
      s.add(name, n21 + n12 == -1, std::to_string(n21),
            "reverse " + std::to_string(n12) + ", sum " + std::to_string(n21 + n12));
    } catch (const std::exception& e) {
      s.add_error(name, e.what());
    }
  }
  return s;
}

}  // namespace plektonlab::suites
