#include "harmon/commands.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

namespace {

int emit(const harmon::RunReport& report, bool json) {
  if (json) {
    std::cout << report.to_json() << "\n";
  } else {
    std::cout << report.command;
    for (const auto& [key, value] : report.params) {
      std::cout << "  " << key << "=";
      std::visit([](const auto& v) { std::cout << v; }, value);
    }
    std::cout << "\n" << report.to_text();
    std::printf("%s in %.2f s\n", report.all_pass() ? "all checks passed" : "CHECKS FAILED",
                report.wall_seconds);
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radial density, spectral, and embedding checks for rank-one model geometries"};
  app.require_subcommand(1);

  std::string space_id, suite = "all", out;
  int k = 1, grid = 0, resolution = 64, cases = 500;
  double tol = 0.0;
  unsigned seed = 0;
  bool json = false;

  CLI::App* density = app.add_subcommand("density", "Integrated volume density vs closed form");
  density->add_option("space", space_id, "space id, e.g. sphere:3, cpn:2, op2, rhn:4, flat:4")
      ->required();
  density->add_option("--grid", grid, "number of sample radii");
  density->add_option("--tol", tol, "relative error tolerance");
  density->add_option("--out", out, "CSV output path");
  density->add_flag("--json", json, "JSON report on stdout");

  CLI::App* phi = app.add_subcommand("phi", "Radial eigenfunction profile and polynomial");
  phi->add_option("space", space_id, "compact space id")->required();
  phi->add_option("k", k, "eigenvalue index, k >= 1")->required();
  phi->add_option("--grid", grid, "solution grid size");
  phi->add_option("--tol", tol, "cross-validation tolerance");
  phi->add_option("--out", out, "output base path (<out>.json, <out>.csv)");
  phi->add_flag("--json", json, "JSON report on stdout");

  CLI::App* verify = app.add_subcommand("verify", "Invariant suites over the space catalog");
  verify->add_option("suite", suite, "density | ode | roots | embedding | all")
      ->check(CLI::IsMember({"density", "ode", "roots", "embedding", "all"}));
  verify->add_option("--cases", cases, "randomized suite case count");
  verify->add_option("--seed", seed, "randomized suite seed");
  verify->add_option("--grid", grid, "ODE solution grid size");
  verify->add_flag("--json", json, "JSON report on stdout");

  CLI::App* embed = app.add_subcommand("embed-s2", "Explicit quadrature embedding of the 2-sphere");
  embed->add_option("resolution", resolution, "polar quadrature order, >= 16");
  embed->add_option("--tol", tol, "metric distortion tolerance");
  embed->add_option("--seed", seed, "sample seed");
  embed->add_option("--out", out, "output base path for geodesic/screw CSVs");
  embed->add_flag("--json", json, "JSON report on stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  harmon::CommandOptions opts;
  opts.grid = grid;
  opts.tol = tol;
  opts.seed = seed;
  opts.cases = cases;
  opts.out = out;

  try {
    if (density->parsed()) return emit(harmon::cmd_density(space_id, opts), json);
    if (phi->parsed()) return emit(harmon::cmd_phi(space_id, k, opts), json);
    if (verify->parsed()) return emit(harmon::cmd_verify(suite, opts), json);
    if (embed->parsed()) return emit(harmon::cmd_embed_s2(resolution, opts), json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
