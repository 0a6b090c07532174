#pragma once

// JSON model, scene and word files.
//
// model: {"group": "Z" | {"ZN": N}, "omega": {"k": k, "M": M},
//         "omega_sqrt": {"k": k, "M": M}, "spin": {"p": p, "q": q}, "mass": m}
// scene: {"frame": "standard" | "j-invariant+x2" | "j-invariant-x2"
//                  | {"reference_angle": a, "cone": {"apex": [..], "center": c, "half_opening": d}},
//         "paths": [{"id", "apex": [x0, x1, x2], "center_angle", "half_opening", "sheet", "kind"}],
//         "pairs": [["C2", "C1"], ...]}
// word:  {"coeff": {"k": k, "M": M}, "factors": [{"charge": c, "obs": "A g^1(B*)", "path": "C1"}]}

#include <plektonlab/field_engine.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace plektonlab::io {

struct Scene {
  ReferenceFrame frame;
  std::vector<std::string> ids;  ///< file order
  std::map<std::string, ConePath> paths;
  std::vector<std::pair<std::string, std::string>> pairs;

  const ConePath& at(const std::string& id) const;
};

/// All loaders throw ParseError, carrying the line for syntax errors.
AnyonModel parse_model(const std::string& text);
Scene parse_scene(const std::string& text);
FieldWord parse_word(const std::string& text, const Scene& scene);

AnyonModel load_model(const std::string& path);
Scene load_scene(const std::string& path);
FieldWord load_word(const std::string& path, const Scene& scene);

}  // namespace plektonlab::io
