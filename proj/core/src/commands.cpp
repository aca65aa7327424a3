#include "harmon/commands.hpp"

#include "harmon/embedding.hpp"
#include "harmon/jacobi.hpp"
#include "harmon/model_spaces.hpp"
#include "harmon/radial_ode.hpp"
#include "harmon/trig_poly.hpp"
#include "harmon/verify.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace harmon {

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
  if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

}  // namespace

RunReport cmd_density(const std::string& space_id, const CommandOptions& opts) {
  const WallTimer timer;
  const ModelSpace space = parse_space(space_id);
  const int samples = opts.grid > 0 ? opts.grid : 241;
  if (samples < 2) throw std::invalid_argument("grid must be >= 2");
  const double tol = opts.tol > 0 ? opts.tol : 1e-8;
  const double hi = space.compact() ? space.diameter() - 0.1 : 3.0;

  std::vector<double> grid(samples + 1, 0.0);
  for (int i = 0; i < samples; ++i)
    grid[i + 1] = 0.1 + (hi - 0.1) * i / (samples - 1);
  const JacobiTrajectory traj = integrate_jacobi(CurvatureField::of(space), grid);
  const RadialProfile det = determinant_profile(traj);

  RunReport report;
  report.command = "density";
  report.set_param("space", space.id());
  report.set_param("grid", samples);
  report.set_param("tol", tol);

  double worst = 0.0;
  std::string csv = "r,numeric,closed_form,rel_error\n";
  char row[128];
  for (int i = 1; i <= samples; ++i) {
    const double exact = closed_form_density(space, det.grid[i]);
    const double rel = std::abs(det.values[i] - exact) / std::abs(exact);
    worst = std::max(worst, rel);
    std::snprintf(row, sizeof(row), "%.17g,%.17g,%.17g,%.3e\n", det.grid[i],
                  det.values[i], exact, rel);
    csv += row;
  }
  report.require_below("density vs closed form " + space.id(), worst, tol);
  if (!opts.out.empty()) write_file(opts.out, csv);
  report.wall_seconds = timer.seconds();
  return report;
}

RunReport cmd_phi(const std::string& space_id, int k, const CommandOptions& opts) {
  const WallTimer timer;
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const ModelSpace space = parse_space(space_id);
  const ExponentPair pair = exponents(space);
  const int grid = opts.grid > 0 ? opts.grid : 801;
  const double tol = opts.tol > 0 ? opts.tol : 1e-6;

  const RadialODEProblem problem{pair, spectrum(pair, k)};
  const PhiSolution sol = solve_phi(problem, grid);
  const CosPolynomial p = phi_polynomial(pair, k);

  RunReport report;
  report.command = "phi";
  report.set_param("space", space.id());
  report.set_param("k", k);
  report.set_param("lambda", problem.lambda);
  report.set_param("grid", grid);
  report.set_param("tol", tol);

  double worst = 0.0;
  for (std::size_t i = 0; i < sol.phi.size(); ++i)
    worst = std::max(worst, std::abs(sol.phi.values[i] - p.eval_angle(sol.phi.grid[i])));
  report.require_below("phi ode vs recursion", worst, tol);
  report.require_below("phi stencil residual", phi_residual(sol, problem), 1e-6);
  report.require_below("phi polynomial residual", phi_residual(p, problem, grid), 1e-9);
  if (k >= 2)
    report.require_below("interlacing", interlacing_check(p) ? 0.0 : 1.0, 0.0);

  if (!opts.out.empty()) {
    write_file(opts.out + ".json", p.to_json());
    write_file(opts.out + ".csv", sol.phi.to_csv());
  }
  report.wall_seconds = timer.seconds();
  return report;
}

RunReport cmd_verify(const std::string& suite, const CommandOptions& opts) {
  const WallTimer timer;
  VerifyOptions vopts;
  vopts.cases = opts.cases;
  vopts.seed = opts.seed;
  if (opts.grid > 0) vopts.grid = opts.grid;
  RunReport report = verify_suite(suite, vopts);
  report.wall_seconds = timer.seconds();
  return report;
}

RunReport cmd_embed_s2(int resolution, const CommandOptions& opts) {
  const WallTimer timer;
  if (resolution < 16) throw std::invalid_argument("resolution must be >= 16");
  const double tol = opts.tol > 0 ? opts.tol : 1e-6;
  const S2EmbeddingReport s2 = s2_explicit_embedding(resolution, opts.seed);

  RunReport report;
  report.command = "embed-s2";
  report.set_param("resolution", resolution);
  report.set_param("seed", static_cast<long long>(opts.seed));
  report.set_param("tol", tol);
  report.require_below("embedding radius", s2.radius_defect, 1e-8);
  report.require_below("embedding metric distortion", s2.metric_distortion, tol);
  report.require_below("geodesic circle radius", std::abs(s2.geodesic_radius - 1.0), 1e-6);
  report.require_below("geodesic circle deviation", s2.circle_deviation, 1e-8);
  report.require_below("geodesic screw law", s2.screw_defect, 1e-8);
  report.require_below("geodesic congruence", s2.congruence_residual, 1e-8);
  report.require_below("eigenspace norm sum", s2.parseval_defect, 1e-8);

  if (!opts.out.empty()) {
    write_file(opts.out + "_geodesic_a.csv", s2.geodesic_a.to_csv());
    write_file(opts.out + "_geodesic_b.csv", s2.geodesic_b.to_csv());
    RadialProfile screw;
    screw.label = "screw";
    screw.grid = s2.geodesic_a.params;
    screw.values = s2.geodesic_a.screw_samples();
    write_file(opts.out + "_screw.csv", screw.to_csv());
  }
  report.wall_seconds = timer.seconds();
  return report;
}

}  // namespace harmon
