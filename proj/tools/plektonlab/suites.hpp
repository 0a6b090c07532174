#pragma once

#include "io.hpp"
#include "report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace plektonlab::suites {

struct Context {
  AnyonModel model;
  std::optional<io::Scene> scene;
  std::optional<FieldWord> word;
  std::uint64_t seed = 1;
  /// Multiplies the default sweep sizes.
  double sweep = 1.0;
};

const std::vector<std::string>& names();
bool is_suite(const std::string& name);

/// Runs one suite; never throws, errors are reported as checks.
report::Section run(const std::string& name, const Context& ctx);

report::Section model_validation(const AnyonModel& model);
report::Section winding_table(const io::Scene& scene);

}  // namespace plektonlab::suites
