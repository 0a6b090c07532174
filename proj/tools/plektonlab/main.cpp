#include "io.hpp"
#include "report.hpp"
#include "suites.hpp"

#include <plektonlab/errors.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <future>
#include <iostream>

namespace {

using namespace plektonlab;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

double sweep_from_env() {
  const char* v = std::getenv("PLEKTONLAB_SWEEP");
  if (v == nullptr || *v == '\0') return 1.0;
  char* end = nullptr;
  const double s = std::strtod(v, &end);
  if (end == v || *end != '\0' || !(s > 0.0) || s > 1000.0) {
    throw ParseError("PLEKTONLAB_SWEEP must be a positive number, got '" + std::string(v) + "'");
  }
  return s;
}

AnyonModel default_model() {
  AnyonModel m;
  m.group = ChargeGroup::cyclic(3);
  m.omega = CyclotomicPhase(1, 3);
  m.omega_sqrt = CyclotomicPhase(2, 3);
  m.spin = Rational(1, 3);
  return m;
}

int emit(const report::Report& r, const std::string& format) {
  std::cout << (format == "json" ? report::to_json(r) : report::to_text(r));
  return r.all_pass() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plektonlab: winding numbers, anyon field algebra and Wigner representation checks"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string model_path;
  auto* validate = app.add_subcommand("model-validate", "Validate an anyon model file");
  validate->add_option("--model", model_path, "Model file")->required();
  validate->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string scene_path;
  auto* winding = app.add_subcommand("winding", "Relative winding numbers for the pairs of a scene");
  winding->add_option("--scene", scene_path, "Scene file")->required();
  winding->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string suite = "all";
  std::string word_path;
  std::uint64_t seed = 1;
  bool parallel = false;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite, "geometry, braid, twist, cpt, tomita, wigner or all")
      ->check([](const std::string& s) { return suites::is_suite(s) ? std::string{} : "unknown suite '" + s + "'"; });
  verify->add_option("--model", model_path, "Model file (default: Z_3, omega = e^{2 pi i/3})");
  verify->add_option("--scene", scene_path, "Scene file");
  verify->add_option("--word", word_path, "Word file (needs --scene)");
  verify->add_option("--seed", seed, "Seed for the property sweeps");
  verify->add_flag("--parallel", parallel, "Run suites concurrently");
  verify->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    report::Report r;
    if (*validate) {
      r.command = "model-validate";
      r.header.emplace_back("model", model_path);
      r.sections.push_back(suites::model_validation(io::load_model(model_path)));
      return emit(r, format);
    }
    if (*winding) {
      r.command = "winding";
      r.header.emplace_back("scene", scene_path);
      r.sections.push_back(suites::winding_table(io::load_scene(scene_path)));
      return emit(r, format);
    }

    suites::Context ctx;
    ctx.model = model_path.empty() ? default_model() : io::load_model(model_path);
    if (!scene_path.empty()) ctx.scene = io::load_scene(scene_path);
    if (!word_path.empty()) {
      if (!ctx.scene) throw ParseError("--word requires --scene");
      ctx.word = io::load_word(word_path, *ctx.scene);
    }
    ctx.seed = seed;
    ctx.sweep = sweep_from_env();

    r.command = "verify";
    r.header.emplace_back("suite", suite);
    r.header.emplace_back("seed", std::to_string(seed));
    r.header.emplace_back("model", model_path.empty() ? "builtin Z_3" : model_path);
    r.header.emplace_back("omega", ctx.model.omega.to_string());
    r.header.emplace_back("sweep", report::format_residual(ctx.sweep));
    r.header.emplace_back("standard boost", "pure boost");
    r.header.emplace_back("measure", "d^2p / (2 omega(p))");

    const std::vector<std::string> selected = suite == "all" ? suites::names() : std::vector<std::string>{suite};
    if (parallel) {
      std::vector<std::future<report::Section>> jobs;
      for (const auto& name : selected) {
        jobs.push_back(std::async(std::launch::async, [&ctx, name] { return suites::run(name, ctx); }));
      }
      for (auto& j : jobs) r.sections.push_back(j.get());
    } else {
      for (const auto& name : selected) r.sections.push_back(suites::run(name, ctx));
    }
    return emit(r, format);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
