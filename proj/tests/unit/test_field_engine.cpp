#include <gtest/gtest.h>

#include <plektonlab/errors.hpp>
#include <plektonlab/field_engine.hpp>

#include "generators.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <numeric>

using namespace plektonlab;

namespace {

ConePath arc_cone(double lo, double hi, MVec3 apex = {}) { return ConePath::cone(apex, 0.5 * (lo + hi), 0.5 * (hi - lo)); }

const ConePath kC1 = arc_cone(-0.1, 0.1);
const ConePath kC2 = arc_cone(1.0, 1.2);
const ConePath kOpposite = arc_cone(-kPi - 0.1, -kPi + 0.1);

FieldSymbol sym(std::int64_t c, const std::string& obs, const ConePath& loc) {
  return {c, ObservableWord::parse(obs), loc, {}};
}

FieldWord word(std::vector<FieldSymbol> f) { return {CyclotomicPhase::one(), std::move(f)}; }

/// Up to four cones at distinct angles, pairwise separated.
std::vector<ConePath> fan(gen::Rng& r, int n) {
  for (;;) {
    std::vector<ConePath> out;
    for (int i = 0; i < n; ++i) out.push_back(ConePath::cone(gen::point(r, 0.3), r.uniform(-kTwoPi, kTwoPi), r.uniform(0.05, 0.3)));
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int k = i + 1; k < n && ok; ++k) ok = causally_separated(out[i], out[k]) && !oracle::winding_scan(out[i], out[k]).empty();
    }
    if (ok) return out;
  }
}

}  // namespace

TEST(ObservableWord, ParseAndPrint) {
  const ObservableWord w = ObservableWord::parse("A g^-2(B*) j(C)");
  ASSERT_EQ(w.atoms().size(), 3u);
  EXPECT_EQ(w.atoms()[1], (ObsAtom{"B", true, -2, false}));
  EXPECT_TRUE(w.atoms()[2].reflected);
  EXPECT_EQ(ObservableWord::parse(w.to_string()), w);
  EXPECT_TRUE(ObservableWord::parse("1").is_unit());
  EXPECT_ANY_THROW(ObservableWord::parse("g^(A)"));
}

TEST(ObservableWord, StarAndTwistDistribute) {
  gen::Rng r(50);
  for (int i = 0; i < 200; ++i) {
    const ObservableWord a = gen::observable(r);
    const ObservableWord b = gen::observable(r);
    const auto k = r.integer(-4, 4);
    EXPECT_EQ((a * b).twisted(k), a.twisted(k) * b.twisted(k));
    EXPECT_EQ((a * b).star(), b.star() * a.star());
    EXPECT_EQ(a.twisted(k).star(), a.star().twisted(k));
    EXPECT_EQ(a.star().star(), a);
    EXPECT_EQ(a.reflected().reflected(), a);
    EXPECT_EQ(a.twisted(k).reflected(), a.reflected().twisted(-k));
  }
}

TEST(Fuse, Examples) {
  const FieldSymbol f = sym(2, "A", kC1);
  EXPECT_EQ(fuse(f, sym(0, "1", kC1)), f);

  const FieldSymbol g = fuse(sym(1, "A", kC1), sym(1, "B", kC1));
  EXPECT_EQ(g.charge, 2);
  EXPECT_EQ(g.obs, ObservableWord::parse("g^1(A) B"));
  EXPECT_EQ(g.loc, kC1);

  const FieldSymbol h = fuse(sym(3, "A", kC1), sym(-3, "B", kC1));
  EXPECT_EQ(h.charge, 0);
  EXPECT_EQ(h.obs, ObservableWord::parse("g^-3(A) B"));
}

TEST(Fuse, MixedLocalizationIsDelocalized) {
  const FieldSymbol g = fuse(sym(1, "A", kC1), sym(1, "B", kC2));
  EXPECT_TRUE(g.delocalized());
  const FieldWord w = word({g, sym(1, "C", kOpposite)});
  EXPECT_THROW(exchange(gen::zn_model(3, 1), w, 0), PreconditionError);
}

TEST(Fuse, Associative) {
  gen::Rng r(51);
  for (int i = 0; i < 200; ++i) {
    const FieldSymbol a = gen::symbol(r, kC1);
    const FieldSymbol b = gen::symbol(r, kC1);
    const FieldSymbol c = gen::symbol(r, kC1);
    EXPECT_EQ(fuse(fuse(a, b), c), fuse(a, fuse(b, c)));
  }
}

TEST(Adjoint, Examples) {
  gen::Rng r(52);
  for (int i = 0; i < 200; ++i) {
    const FieldSymbol f = gen::symbol(r, kC1);
    EXPECT_EQ(adjoint(adjoint(f)), f);
    EXPECT_EQ(adjoint(f).loc, f.loc);
  }
  EXPECT_EQ(adjoint(sym(0, "A", kC1)), sym(0, "A*", kC1));
  EXPECT_EQ(adjoint(sym(2, "A", kC1)), sym(-2, "g^-2(A*)", kC1));
}

TEST(Adjoint, ReversesProducts) {
  gen::Rng r(53);
  for (int i = 0; i < 200; ++i) {
    const FieldSymbol a = gen::symbol(r, kC1);
    const FieldSymbol b = gen::symbol(r, kC1);
    EXPECT_EQ(adjoint(fuse(a, b)), fuse(adjoint(b), adjoint(a)));
  }
}

TEST(Exchange, Examples) {
  const AnyonModel fermion = gen::fermion();
  ASSERT_EQ(relative_winding(kC2, kC1), 0);
  const FieldWord w = word({sym(1, "A", kC2), sym(1, "B", kC1)});
  const FieldWord x = exchange(fermion, w, 0);
  EXPECT_EQ(x.coeff, CyclotomicPhase(1, 2));
  EXPECT_EQ(x.factors[0], w.factors[1]);
  EXPECT_EQ(x.factors[1], w.factors[0]);

  const AnyonModel z3 = gen::zn_model(3, 1);
  const FieldWord y = word({sym(2, "A", kOpposite), sym(1, "B", kC1)});
  EXPECT_EQ(exchange(z3, exchange(z3, y, 0), 0), y);
  EXPECT_EQ(exchange(z3, y, 0).coeff, r_phase(z3, 1, 2, -1));

  const FieldWord obs = word({sym(0, "A", kC2), sym(2, "B", kC1)});
  EXPECT_TRUE(exchange(z3, obs, 0).coeff.is_one());
}

TEST(Exchange, RejectsTimelikePair) {
  const FieldWord w = word({sym(1, "A", ConePath::cone({2, 0, 0}, 0.0, 0.1)), sym(1, "B", kC1)});
  EXPECT_THROW(exchange(gen::zn_model(3, 1), w, 0), PreconditionError);
}

TEST(Exchange, Involution) {
  gen::Rng r(54);
  for (int i = 0; i < 1000; ++i) {
    const AnyonModel m = gen::zn_model(r.integer(2, 6), r.integer(0, 5));
    const auto locs = fan(r, 2);
    const FieldWord w = {CyclotomicPhase(r.integer(0, 11), 12), {gen::symbol(r, locs[0]), gen::symbol(r, locs[1])}};
    EXPECT_EQ(exchange(m, exchange(m, w, 0), 0), w);
  }
}

TEST(NormalForm, Examples) {
  const AnyonModel z3 = gen::zn_model(3, 1);
  const FieldWord ordered = word({sym(1, "A", kC1), sym(2, "B", kC2)});
  EXPECT_EQ(normal_form(z3, ordered, {0, 1}), ordered);

  gen::Rng r(55);
  const auto locs = fan(r, 3);
  const FieldWord w = word({gen::symbol(r, locs[0]), gen::symbol(r, locs[1]), gen::symbol(r, locs[2])});
  EXPECT_EQ(apply_exchanges(z3, w, {0, 1, 0}), apply_exchanges(z3, w, {1, 0, 1}));

  FieldWord neutral = w;
  for (auto& f : neutral.factors) f.charge = 0;
  for (const auto& route : oracle::reduced_routes({2, 0, 1})) {
    EXPECT_TRUE(apply_exchanges(z3, neutral, route).coeff.is_one());
  }
}

TEST(NormalForm, ConfluenceOverAllReducedRoutes) {
  gen::Rng r(56);
  for (int i = 0; i < 100; ++i) {
    const AnyonModel m = gen::zn_model(r.integer(2, 6), r.integer(1, 5));
    const int n = static_cast<int>(r.integer(2, 4));
    const auto locs = fan(r, n);
    FieldWord w{CyclotomicPhase::one(), {}};
    for (const auto& l : locs) w.factors.push_back(gen::symbol(r, l));
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    do {
      const FieldWord expected = normal_form(m, w, order);
      for (const auto& route : oracle::reduced_routes(order)) {
        EXPECT_EQ(apply_exchanges(m, w, route), expected);
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST(NormalForm, AngularOrderSortsByPrecedes) {
  gen::Rng r(57);
  const auto locs = fan(r, 4);
  FieldWord w{CyclotomicPhase::one(), {}};
  for (const auto& l : locs) w.factors.push_back(gen::symbol(r, l));
  const FieldWord nf = normal_form(gen::zn_model(3, 1), w);
  for (std::size_t i = 0; i + 1 < nf.factors.size(); ++i) EXPECT_TRUE(precedes(*nf.factors[i].loc, *nf.factors[i + 1].loc));
}

TEST(TomitaS, Examples) {
  const ConePath inside = ConePath::cone({0, 1, 0}, 0.0, 0.3);
  ASSERT_TRUE(localized_in_standard_wedge(inside));
  gen::Rng r(58);
  for (int i = 0; i < 1000; ++i) {
    const StateVector v{CyclotomicPhase(r.integer(0, 11), 12), r.integer(-6, 6), gen::observable(r), inside};
    EXPECT_EQ(tomita_S(tomita_S(v)), v);
  }
  const StateVector zero{CyclotomicPhase::one(), 0, ObservableWord::parse("A g^1(B)"), inside};
  EXPECT_EQ(tomita_S(zero).obs, zero.obs.star());
  EXPECT_EQ(tomita_S(zero).charge, 0);

  const StateVector one{CyclotomicPhase::one(), 1, ObservableWord::parse("A"), inside};
  EXPECT_EQ(tomita_S(one).charge, -1);
  EXPECT_EQ(tomita_S(one).obs, ObservableWord::parse("g^-1(A*)"));

  const StateVector scaled{CyclotomicPhase(1, 4), 0, ObservableWord::parse("A"), inside};
  EXPECT_EQ(tomita_S(scaled).coeff, CyclotomicPhase(3, 4));
}

TEST(TomitaS, RequiresStandardWedge) {
  const StateVector v{CyclotomicPhase::one(), 1, ObservableWord::parse("A"), ConePath::cone({}, kPi, 0.3)};
  EXPECT_THROW(tomita_S(v), PreconditionError);
  const StateVector next_sheet{CyclotomicPhase::one(), 1, ObservableWord::parse("A"), ConePath::cone({}, kTwoPi, 0.3)};
  EXPECT_THROW(tomita_S(next_sheet), PreconditionError);
}

TEST(VacuumSwap, Examples) {
  ASSERT_EQ(relative_winding(kOpposite, kC1), -1);
  const VacuumOverlap o{CyclotomicPhase::one(), sym(1, "A", kOpposite), sym(1, "B", kC1)};

  const AnyonModel boson = gen::zn_model(2, 0);
  const VacuumOverlap b = vacuum_swap(boson, o);
  EXPECT_TRUE(b.coeff.is_one());
  EXPECT_EQ(b.left, adjoint(o.right));
  EXPECT_EQ(b.right, adjoint(o.left));

  EXPECT_EQ(vacuum_swap(gen::fermion(), o).coeff, CyclotomicPhase(1, 2));

  const AnyonModel z3 = gen::zn_model(3, 1);
  const VacuumOverlap once = vacuum_swap(z3, o);
  EXPECT_EQ(once.coeff, z3.omega);
  EXPECT_THROW(vacuum_swap(z3, once), PreconditionError);
}

TEST(VacuumSwap, RequiresEqualCharges) {
  const VacuumOverlap o{CyclotomicPhase::one(), sym(1, "A", kOpposite), sym(2, "B", kC1)};
  EXPECT_THROW(vacuum_swap(gen::zn_model(3, 1), o), PreconditionError);
}

TEST(FieldWord, MultiplyAndAdjoint) {
  gen::Rng r(59);
  const auto locs = fan(r, 2);
  const FieldWord a{CyclotomicPhase(1, 3), {gen::symbol(r, locs[0])}};
  const FieldWord b{CyclotomicPhase(1, 4), {gen::symbol(r, locs[1])}};
  const FieldWord ab = multiply(a, b);
  EXPECT_EQ(ab.coeff, CyclotomicPhase(7, 12));
  ASSERT_EQ(ab.factors.size(), 2u);
  EXPECT_EQ(adjoint(ab), multiply(adjoint(b), adjoint(a)));
  EXPECT_EQ(adjoint(adjoint(ab)), ab);
  EXPECT_EQ(ab.total_charge(), a.factors[0].charge + b.factors[0].charge);
}
