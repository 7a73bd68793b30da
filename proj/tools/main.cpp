#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "kleinfv/errors.hpp"

using namespace kfv::cli;

namespace {

void add_point_flags(CLI::App& app, PointFlags& f) {
  app.add_option("--mass", f.mass, "rest mass m")->capture_default_str();
  app.add_option("--coupling", f.coupling, "barrier height u = e V0")->capture_default_str();
  app.add_option("--energy", f.energy, "total energy E")->capture_default_str();
  app.add_option("--smoothness", f.smoothness, "tanh width r; 0 is the sharp step")->capture_default_str();
  app.add_option("--c1", f.c1, "xi^s amplitude as re,im")->capture_default_str();
  app.add_option("--d1", f.d1, "xi^d amplitude as re,im")->capture_default_str();
  app.add_option("--c2", f.c2, "eta^s amplitude as re,im")->capture_default_str();
  app.add_option("--d2", f.d2, "eta^d amplitude as re,im")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Feshbach-Villars spin-1/2 scattering off a tanh barrier and its step limit"};
  app.set_config("--config", "", "key = value file; keys mirror flag names, flags win");
  app.require_subcommand(1);

  PointFlags point;
  add_point_flags(app, point);

  bool json = false;
  auto* coeffs = app.add_subcommand("coeffs", "R, T and the flux identity at one energy");
  coeffs->add_flag("--json", json, "structured output");

  SweepFlags sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "CSV of R, T over an energy grid");
  sweep_cmd->add_option("--e-min", sweep.e_min)->capture_default_str();
  sweep_cmd->add_option("--e-max", sweep.e_max)->capture_default_str();
  sweep_cmd->add_option("--steps", sweep.steps, "number of grid points")->capture_default_str();
  sweep_cmd->add_option("--threads", sweep.threads, "worker threads, 0 for all cores")->capture_default_str();

  WaveFlags wave;
  auto* wave_cmd = app.add_subcommand("wave", "CSV of the eight-component spinor, rho and j");
  wave_cmd->add_option("--x-min", wave.x_min)->capture_default_str();
  wave_cmd->add_option("--x-max", wave.x_max)->capture_default_str();
  wave_cmd->add_option("--points", wave.points)->capture_default_str();

  auto* verify = app.add_subcommand("verify", "boundary and oracle checks as a JSON document");

  LimitFlags limit;
  auto* limit_cmd = app.add_subcommand("limit", "convergence of the smooth coefficients as r -> 0");
  limit_cmd->add_option("--r-list", limit.r_list, "decreasing r values")->delimiter(',')->capture_default_str();

  for (CLI::App* sub : {coeffs, sweep_cmd, wave_cmd, verify, limit_cmd}) {
    sub->fallthrough();
    sub->configurable();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  const Io io{std::cout, std::cerr};
  try {
    if (*coeffs) return cmd_coeffs(point, json, io);
    if (*sweep_cmd) return cmd_sweep(point, sweep, io);
    if (*wave_cmd) return cmd_wave(point, wave, io);
    if (*verify) return cmd_verify(point, io);
    if (*limit_cmd) return cmd_limit(point, limit, io);
  } catch (const kfv::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
