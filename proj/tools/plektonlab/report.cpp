#include "report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace plektonlab::report {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::error:
      return "error";
  }
  return "error";
}

void Section::add(std::string n, bool ok, std::string exact, std::string note) {
  checks.push_back({std::move(n), ok ? Status::pass : Status::fail, std::nullopt, std::move(exact), std::move(note)});
}

void Section::add_residual(std::string n, double residual, double tol, std::string note) {
  const bool ok = std::isfinite(residual) && residual < tol;
  checks.push_back({std::move(n), ok ? Status::pass : Status::fail, residual, {}, std::move(note)});
}

void Section::add_error(std::string n, std::string message) {
  checks.push_back({std::move(n), Status::error, std::nullopt, {}, std::move(message)});
}

bool Report::all_pass() const { return count(Status::fail) == 0 && count(Status::error) == 0; }

int Report::count(Status s) const {
  int n = 0;
  for (const auto& sec : sections) {
    n += static_cast<int>(std::count_if(sec.checks.begin(), sec.checks.end(), [&](const Check& c) { return c.status == s; }));
  }
  return n;
}

std::string format_residual(double r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", r);
  return buf;
}

std::string to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["schema"] = kSchema;
  j["command"] = r.command;
  nlohmann::ordered_json header = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.header) header[k] = v;
  j["header"] = header;
  j["sections"] = nlohmann::ordered_json::array();
  for (const auto& sec : r.sections) {
    nlohmann::ordered_json s;
    s["name"] = sec.name;
    s["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : sec.checks) {
      nlohmann::ordered_json cj;
      cj["name"] = c.name;
      cj["status"] = to_string(c.status);
      if (c.residual) {
        if (std::isfinite(*c.residual)) {
          cj["residual"] = std::stod(format_residual(*c.residual));
        } else {
          cj["residual"] = format_residual(*c.residual);
        }
      }
      if (!c.exact.empty()) cj["exact"] = c.exact;
      if (!c.note.empty()) cj["note"] = c.note;
      s["checks"].push_back(cj);
    }
    j["sections"].push_back(s);
  }
  j["summary"] = {{"pass", r.count(Status::pass)}, {"fail", r.count(Status::fail)}, {"error", r.count(Status::error)}};
  return j.dump(2) + "\n";
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  out << kSchema << " " << r.command << "\n";
  for (const auto& [k, v] : r.header) out << "  " << k << ": " << v << "\n";
  for (const auto& sec : r.sections) {
    out << "\n[" << sec.name << "]\n";
    for (const auto& c : sec.checks) {
      std::string status = to_string(c.status);
      std::transform(status.begin(), status.end(), status.begin(), [](unsigned char ch) { return std::toupper(ch); });
      out << "  " << status << "  " << c.name;
      if (c.residual) out << "  residual=" << format_residual(*c.residual);
      if (!c.exact.empty()) out << "  " << c.exact;
      if (!c.note.empty()) out << "  (" << c.note << ")";
      out << "\n";
    }
  }
  out << "\n" << r.count(Status::pass) << " pass, " << r.count(Status::fail) << " fail, " << r.count(Status::error)
      << " error\n";
  return out.str();
}

}  // namespace plektonlab::report
