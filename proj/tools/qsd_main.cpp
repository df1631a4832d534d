#include "qsd/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

int run(const std::string& name, const std::string& config_path,
        const std::string& out_path, const std::optional<double>& tmax,
        const std::optional<double>& dt, const std::optional<double>& tol) {
  qsd::ModelConfig cfg;
  try {
    cfg = qsd::load_config(config_path);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  if (tmax) cfg.t_max = *tmax;
  if (dt) cfg.dt = *dt;
  if (tol) cfg.tols.zero_eig_rel = *tol;

  qsd::CommandResult res;
  try {
    res = qsd::run_command(name, cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (!res.diagnostics.empty()) std::cerr << res.diagnostics;
  if (out_path.empty() || out_path == "-") {
    std::cout << res.output;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "cannot open output file: " << out_path << "\n";
      return 2;
    }
    f << res.output;
  }
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Asymptotic states of a dissipatively coupled two-qubit semigroup"};
  app.require_subcommand(1);

  std::string config_path, out_path;
  std::optional<double> tmax, dt, tol;

  const std::vector<std::string> names{"validate", "classify",  "stationary",
                                       "evolve",   "sweep",     "verify-paper"};
  for (const auto& name : names) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "configuration file")->required();
    sub->add_option("--out", out_path, "output path (default stdout)");
    sub->add_option("--tmax", tmax, "override evolution horizon");
    sub->add_option("--dt", dt, "override integrator step");
    sub->add_option("--tol", tol, "override zero-eigenvalue threshold");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return run(app.get_subcommands().front()->get_name(), config_path, out_path, tmax, dt,
             tol);
}
