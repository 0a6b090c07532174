#include "plektonlab/field_engine.hpp"

#include "plektonlab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace plektonlab {

namespace {

// Parses one atom starting at text[pos]; grammar: atom := 'g^' int '(' inner ')' | inner,
// inner := 'j(' base ')' | base, base := name ['*'].
ObsAtom parse_atom(const std::string& token) {
  ObsAtom atom;
  std::string rest = token;
  if (rest.rfind("g^", 0) == 0) {
    const auto open = rest.find('(');
    if (open == std::string::npos || rest.back() != ')') throw ParseError("malformed twisted atom '" + token + "'");
    try {
      std::size_t used = 0;
      const std::string num = rest.substr(2, open - 2);
      atom.twist = std::stoll(num, &used);
      if (used != num.size()) throw std::invalid_argument(num);
    } catch (const std::logic_error&) {
      throw ParseError("bad twist exponent in '" + token + "'");
    }
    rest = rest.substr(open + 1, rest.size() - open - 2);
  }
  if (rest.rfind("j(", 0) == 0) {
    if (rest.back() != ')') throw ParseError("malformed reflected atom '" + token + "'");
    atom.reflected = true;
    rest = rest.substr(2, rest.size() - 3);
  }
  if (!rest.empty() && rest.back() == '*') {
    atom.star = true;
    rest.pop_back();
  }
  if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](unsigned char ch) {
        return std::isalnum(ch) || ch == '_';
      })) {
    throw ParseError("bad observable symbol in '" + token + "'");
  }
  atom.symbol = rest;
  return atom;
}

std::string atom_to_string(const ObsAtom& a) {
  std::string s = a.symbol + (a.star ? "*" : "");
  if (a.reflected) s = "j(" + s + ")";
  if (a.twist != 0) s = "g^" + std::to_string(a.twist) + "(" + s + ")";
  return s;
}

const ConePath& localization(const FieldSymbol& f) {
  if (!f.loc) throw PreconditionError("symbol " + f.to_string() + " is delocalized and cannot be exchanged");
  return *f.loc;
}

}  // namespace

ObservableWord ObservableWord::parse(const std::string& text) {
  std::istringstream in(text);
  std::vector<ObsAtom> atoms;
  std::string token;
  while (in >> token) {
    if (token == "1") continue;
    atoms.push_back(parse_atom(token));
  }
  return ObservableWord(std::move(atoms));
}

ObservableWord ObservableWord::star() const {
  std::vector<ObsAtom> out(atoms_.rbegin(), atoms_.rend());
  for (auto& a : out) a.star = !a.star;
  return ObservableWord(std::move(out));
}

ObservableWord ObservableWord::twisted(std::int64_t k) const {
  std::vector<ObsAtom> out = atoms_;
  for (auto& a : out) a.twist += k;
  return ObservableWord(std::move(out));
}

ObservableWord ObservableWord::reflected() const {
  std::vector<ObsAtom> out = atoms_;
  for (auto& a : out) {
    a.reflected = !a.reflected;
    a.twist = -a.twist;
  }
  return ObservableWord(std::move(out));
}

std::string ObservableWord::to_string() const {
  if (atoms_.empty()) return "1";
  std::string s;
  for (const auto& a : atoms_) {
    if (!s.empty()) s += ' ';
    s += atom_to_string(a);
  }
  return s;
}

ObservableWord operator*(const ObservableWord& a, const ObservableWord& b) {
  std::vector<ObsAtom> out = a.atoms_;
  out.insert(out.end(), b.atoms_.begin(), b.atoms_.end());
  return ObservableWord(std::move(out));
}

std::string FieldSymbol::to_string() const {
  return "f(" + std::to_string(charge) + ", " + obs.to_string() + ")@" + (loc ? (label.empty() ? "loc" : label) : "delocalized");
}

std::int64_t FieldWord::total_charge() const {
  return std::accumulate(factors.begin(), factors.end(), std::int64_t{0},
                         [](std::int64_t s, const FieldSymbol& f) { return s + f.charge; });
}

std::string FieldWord::to_string() const {
  std::string s = "[" + coeff.to_string() + "]";
  for (const auto& f : factors) s += " " + f.to_string();
  return s;
}

FieldWord multiply(const FieldWord& w1, const FieldWord& w2) {
  FieldWord out{w1.coeff * w2.coeff, w1.factors};
  out.factors.insert(out.factors.end(), w2.factors.begin(), w2.factors.end());
  return out;
}

FieldSymbol fuse(const FieldSymbol& f1, const FieldSymbol& f2) {
  FieldSymbol out;
  out.charge = f1.charge + f2.charge;
  out.obs = f1.obs.twisted(f2.charge) * f2.obs;
  if (f1.loc && f2.loc && *f1.loc == *f2.loc) {
    out.loc = f1.loc;
    out.label = f1.label;
  }
  return out;
}

FieldWord fuse_adjacent(const FieldWord& w, std::size_t i) {
  if (i + 1 >= w.factors.size()) throw PreconditionError("fuse position out of range");
  FieldWord out = w;
  out.factors[i] = fuse(w.factors[i], w.factors[i + 1]);
  out.factors.erase(out.factors.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  return out;
}

FieldWord fuse_all(const FieldWord& w) {
  FieldWord out = w;
  while (out.factors.size() > 1) out = fuse_adjacent(out, 0);
  return out;
}

FieldSymbol adjoint(const FieldSymbol& f) {
  FieldSymbol out = f;
  out.charge = -f.charge;
  out.obs = f.obs.star().twisted(-f.charge);
  return out;
}

FieldWord adjoint(const FieldWord& w) {
  FieldWord out{w.coeff.conj(), {}};
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) out.factors.push_back(adjoint(*it));
  return out;
}

FieldWord exchange(const AnyonModel& model, const FieldWord& w, std::size_t i) {
  if (i + 1 >= w.factors.size()) throw PreconditionError("exchange position out of range");
  const FieldSymbol& f2 = w.factors[i];
  const FieldSymbol& f1 = w.factors[i + 1];
  const int n = relative_winding(localization(f2), localization(f1));
  FieldWord out = w;
  out.coeff = w.coeff * r_phase(model, f1.charge, f2.charge, n);
  std::swap(out.factors[i], out.factors[i + 1]);
  return out;
}

FieldWord apply_exchanges(const AnyonModel& model, const FieldWord& w, const std::vector<std::size_t>& positions) {
  FieldWord out = w;
  for (std::size_t p : positions) out = exchange(model, out, p);
  return out;
}

FieldWord normal_form(const AnyonModel& model, const FieldWord& w, const std::vector<std::size_t>& order) {
  const std::size_t n = w.factors.size();
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  if (sorted != ids) throw PreconditionError("target order is not a permutation of the factors");

  // rank[i]: target position of the factor currently at i; bubble sort by rank.
  std::vector<std::size_t> rank(n);
  for (std::size_t k = 0; k < n; ++k) rank[order[k]] = k;
  FieldWord out = w;
  for (std::size_t pass = 0; pass < n; ++pass) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (rank[i] > rank[i + 1]) {
        out = exchange(model, out, i);
        std::swap(rank[i], rank[i + 1]);
      }
    }
  }
  return out;
}

std::vector<std::size_t> angular_order(const FieldWord& w) {
  std::vector<std::size_t> order(w.factors.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return localization(w.factors[a]).relative_arc().alpha_minus < localization(w.factors[b]).relative_arc().alpha_minus;
  });
  return order;
}

FieldWord normal_form(const AnyonModel& model, const FieldWord& w) { return normal_form(model, w, angular_order(w)); }

bool localized_in_standard_wedge(const ConePath& loc) {
  if (loc.kind() == RegionKind::cone_complement) return false;
  const ConePath we = standard_wedge_path(loc.frame());
  const LiftedArc a = loc.relative_arc();
  const LiftedArc b = we.relative_arc();
  if (a.alpha_minus < b.alpha_minus - kAngleTol || a.alpha_plus > b.alpha_plus + kAngleTol) return false;
  // Region inside the closure of W1 = { x1 > |x0| }.
  const MVec3& ap = loc.apex();
  if (ap.x1 < std::abs(ap.x0)) return false;
  return std::all_of(loc.generators().begin(), loc.generators().end(),
                     [](const MVec3& g) { return g.x1 >= std::abs(g.x0) - 1e-12; });
}

StateVector tomita_S(const StateVector& v) {
  if (!v.loc || !localized_in_standard_wedge(*v.loc)) {
    throw PreconditionError("pseudo-Tomita map requires a field localized in the standard wedge path");
  }
  StateVector out = v;
  out.coeff = v.coeff.conj();
  out.charge = -v.charge;
  out.obs = v.obs.star().twisted(-v.charge);
  return out;
}

VacuumOverlap vacuum_swap(const AnyonModel& model, const VacuumOverlap& overlap) {
  const FieldSymbol& f2 = overlap.left;
  const FieldSymbol& f1 = overlap.right;
  if (f2.charge != f1.charge) throw PreconditionError("vacuum swap requires fields of equal charge");
  const int n = relative_winding(localization(f2), localization(f1));
  if (n != -1) {
    throw PreconditionError("vacuum swap requires N(C2, C1) = -1, found " + std::to_string(n));
  }
  return {overlap.coeff * sector_phase(model, f2.charge), adjoint(f1), adjoint(f2)};
}

}  // namespace plektonlab
