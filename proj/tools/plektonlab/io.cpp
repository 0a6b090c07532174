#include "io.hpp"

#include <plektonlab/errors.hpp>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace plektonlab::io {

namespace {

using nlohmann::json;

int line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), line_of(text, e.byte == 0 ? 0 : e.byte - 1));
  }
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  return j.at(key);
}

template <typename T>
T get(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  try {
    return v.get<T>();
  } catch (const json::exception&) {
    throw ParseError(where + ": field '" + key + "' has the wrong type");
  }
}

CyclotomicPhase phase_from(const json& j, const std::string& where) {
  const auto m = get<std::int64_t>(j, "M", where);
  if (m <= 0) throw ParseError(where + ": denominator M must be positive");
  return {get<std::int64_t>(j, "k", where), m};
}

MVec3 vec_from(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3 || !std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_number(); })) {
    throw ParseError(where + ": expected an array of three numbers");
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

ReferenceFrame frame_from(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "standard") return ReferenceFrame::standard();
    if (s == "j-invariant+x2") return ReferenceFrame::j_invariant(true);
    if (s == "j-invariant-x2") return ReferenceFrame::j_invariant(false);
    throw ParseError("frame: unknown preset '" + s + "'");
  }
  const json& cone = field(j, "cone", "frame");
  return {get<double>(j, "reference_angle", "frame"),
          ReferenceCone{vec_from(field(cone, "apex", "frame.cone"), "frame.cone.apex"),
                        get<double>(cone, "center", "frame.cone"), get<double>(cone, "half_opening", "frame.cone")}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

template <typename F>
auto wrap(F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

const ConePath& Scene::at(const std::string& id) const {
  const auto it = paths.find(id);
  if (it == paths.end()) throw ParseError("unknown path id '" + id + "'");
  return it->second;
}

AnyonModel parse_model(const std::string& text) {
  const json j = parse_json(text);
  return wrap([&] {
    AnyonModel m;
    const json& g = field(j, "group", "model");
    if (g.is_string() && g.get<std::string>() == "Z") {
      m.group = ChargeGroup::integers();
    } else if (g.is_object() && g.contains("ZN")) {
      m.group = ChargeGroup::cyclic(get<std::int64_t>(g, "ZN", "model.group"));
    } else {
      throw ParseError("model.group: expected \"Z\" or {\"ZN\": N}");
    }
    m.omega = phase_from(field(j, "omega", "model"), "model.omega");
    m.omega_sqrt = phase_from(field(j, "omega_sqrt", "model"), "model.omega_sqrt");
    const json& s = field(j, "spin", "model");
    const auto q = get<std::int64_t>(s, "q", "model.spin");
    if (q <= 0) throw ParseError("model.spin: denominator q must be positive");
    m.spin = Rational(get<std::int64_t>(s, "p", "model.spin"), q);
    if (j.contains("mass")) m.mass = get<double>(j, "mass", "model");
    return m;
  });
}

Scene parse_scene(const std::string& text) {
  const json j = parse_json(text);
  return wrap([&] {
    Scene s;
    if (j.contains("frame")) s.frame = frame_from(j.at("frame"));
    const json& paths = field(j, "paths", "scene");
    if (!paths.is_array()) throw ParseError("scene.paths: expected an array");
    for (std::size_t i = 0; i < paths.size(); ++i) {
      const json& p = paths[i];
      const std::string where = "scene.paths[" + std::to_string(i) + "]";
      const auto id = get<std::string>(p, "id", where);
      if (s.paths.count(id) != 0) throw ParseError(where + ": duplicate id '" + id + "'");
      const MVec3 apex = vec_from(field(p, "apex", where), where + ".apex");
      const auto kind = region_kind_from_string(p.value("kind", std::string("cone")));
      const double center = get<double>(p, "center_angle", where) + kTwoPi * p.value("sheet", 0);
      ConePath c = [&] {
        switch (kind) {
          case RegionKind::wedge:
            return ConePath::wedge(apex, center, s.frame);
          case RegionKind::cone_complement:
            return ConePath::cone_complement(apex, center, get<double>(p, "half_opening", where), s.frame);
          case RegionKind::cone:
            break;
        }
        return ConePath::cone(apex, center, get<double>(p, "half_opening", where), s.frame);
      }();
      s.ids.push_back(id);
      s.paths.emplace(id, std::move(c));
    }
    if (j.contains("pairs")) {
      for (const json& pr : j.at("pairs")) {
        if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() || !pr[1].is_string()) {
          throw ParseError("scene.pairs: expected [\"id2\", \"id1\"] entries");
        }
        s.at(pr[0].get<std::string>());
        s.at(pr[1].get<std::string>());
        s.pairs.emplace_back(pr[0].get<std::string>(), pr[1].get<std::string>());
      }
    }
    return s;
  });
}

FieldWord parse_word(const std::string& text, const Scene& scene) {
  const json j = parse_json(text);
  return wrap([&] {
    FieldWord w;
    if (j.contains("coeff")) w.coeff = phase_from(j.at("coeff"), "word.coeff");
    const json& factors = field(j, "factors", "word");
    if (!factors.is_array()) throw ParseError("word.factors: expected an array");
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const std::string where = "word.factors[" + std::to_string(i) + "]";
      const json& f = factors[i];
      FieldSymbol sym;
      sym.charge = get<std::int64_t>(f, "charge", where);
      sym.obs = ObservableWord::parse(f.value("obs", std::string("1")));
      sym.label = get<std::string>(f, "path", where);
      sym.loc = scene.at(sym.label);
      w.factors.push_back(std::move(sym));
    }
    return w;
  });
}

AnyonModel load_model(const std::string& path) { return parse_model(read_file(path)); }
Scene load_scene(const std::string& path) { return parse_scene(read_file(path)); }
FieldWord load_word(const std::string& path, const Scene& scene) { return parse_word(read_file(path), scene); }

}  // namespace plektonlab::io
