#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace plektonlab::report {

inline constexpr const char* kSchema = "plektonlab/1";

enum class Status { pass, fail, error };
std::string to_string(Status s);

struct Check {
  std::string name;
  Status status = Status::pass;
  std::optional<double> residual;
  std::string exact;  ///< exact value or difference, when the check is exact
  std::string note;
};

struct Section {
  std::string name;
  std::vector<Check> checks;

  void add(std::string name, bool ok, std::string exact = {}, std::string note = {});
  void add_residual(std::string name, double residual, double tol, std::string note = {});
  void add_error(std::string name, std::string message);
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> header;
  std::vector<Section> sections;

  bool all_pass() const;
  int count(Status s) const;
};

/// Residuals formatted with 12 significant digits.
std::string format_residual(double r);

std::string to_json(const Report& r);
std::string to_text(const Report& r);

}  // namespace plektonlab::report
