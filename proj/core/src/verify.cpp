#include "harmon/verify.hpp"

#include "harmon/embedding.hpp"
#include "harmon/jacobi.hpp"
#include "harmon/model_spaces.hpp"
#include "harmon/radial_ode.hpp"
#include "harmon/trig_poly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

namespace harmon {

namespace {

constexpr double kThrewSentinel = 9e99;

std::vector<double> linspace(double a, double b, int count) {
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i)
    out[i] = a + (b - a) * i / (count - 1);
  return out;
}

std::string pair_tag(const ExponentPair& pair) {
  return "(" + to_string(pair.alpha) + "," + to_string(pair.beta) + ")";
}

void stamp_params(RunReport& report, const char* suite, const VerifyOptions& opts) {
  report.command = "verify";
  report.set_param("suite", suite);
  report.set_param("cases", opts.cases);
  report.set_param("seed", static_cast<long long>(opts.seed));
  report.set_param("grid", opts.grid);
  report.set_param("max_dim", opts.max_dim);
}

}  // namespace

RunReport verify_density(const VerifyOptions& opts) {
  RunReport report;
  stamp_params(report, "density", opts);

  double worst_wronskian = 0.0;
  for (const ModelSpace& space : compact_catalog(opts.max_dim)) {
    const CurvatureField field = CurvatureField::of(space);
    const int n = space.dimension();

    // Closed-form oracle at 30 interior radii.
    std::vector<double> grid = linspace(0.1, M_PI - 0.1, 30);
    grid.insert(grid.begin(), 0.0);
    const JacobiTrajectory traj = integrate_jacobi(field, grid);
    const RadialProfile det = determinant_profile(traj);
    double worst = 0.0;
    for (std::size_t i = 1; i < det.size(); ++i) {
      const double exact = closed_form_density(space, det.grid[i]);
      worst = std::max(worst, std::abs(det.values[i] - exact) / std::abs(exact));
    }
    report.require_below("density vs closed form " + space.id(), worst, 1e-8);

    // Fine uniform trajectory for curvature extraction and form recovery.
    const JacobiTrajectory fine = integrate_jacobi(field, M_PI - 0.1, 513);
    worst_wronskian = std::max(worst_wronskian, wronskian_defect(fine));
    try {
      const double ric = ricci_from_mean_curvature(mean_curvature_profile(fine), n);
      report.require_below("ricci recovery " + space.id(), std::abs(ric - ricci(space)),
                           1e-6);
    } catch (const std::exception&) {
      report.require_below("ricci recovery " + space.id(), kThrewSentinel, 1e-6);
    }
    try {
      const DensityFormFit fit = fit_density_form(determinant_profile(fine));
      const ExponentPair expect = exponents(space);
      const double exponent_gap = std::abs(fit.alpha - to_double(expect.alpha)) +
                                  std::abs(fit.beta - to_double(expect.beta));
      report.require_below("exponent recovery " + space.id(), exponent_gap, 0.0);
      report.require_below("exponent fit residual " + space.id(), fit.residual, 1e-6);
    } catch (const std::exception&) {
      report.require_below("exponent recovery " + space.id(), kThrewSentinel, 0.0);
    }
  }
  report.require_below("wronskian symmetry (catalog)", worst_wronskian, 1e-10);

  // Hyperbolic oracle at 10 radii in (0, 3].
  for (const ModelSpace& space : hyperbolic_catalog(opts.max_dim)) {
    if (space.family != Family::RealHyperbolic && space.family != Family::ComplexHyperbolic)
      continue;
    const CurvatureField field = CurvatureField::of(space);
    std::vector<double> grid = linspace(0.3, 3.0, 10);
    grid.insert(grid.begin(), 0.0);
    const RadialProfile det = determinant_profile(integrate_jacobi(field, grid));
    double worst = 0.0;
    for (std::size_t i = 1; i < det.size(); ++i) {
      const double exact = closed_form_density(space, det.grid[i]);
      worst = std::max(worst, std::abs(det.values[i] - exact) / std::abs(exact));
    }
    report.require_below("density vs closed form " + space.id(), worst, 1e-8);
  }

  // Flat space: omega is identically 1.
  {
    const ModelSpace flat = parse_space("flat:4");
    const RadialProfile omega =
        density_profile(integrate_jacobi(CurvatureField::of(flat), 3.0, 65), 4);
    double worst = 0.0;
    for (double v : omega.values) worst = std::max(worst, std::abs(v - 1.0));
    report.require_below("flat density is 1", worst, 1e-10);
  }

  // Conservation of the flip section on randomized smooth curvature fields.
  const int conservation_cases = std::min(opts.cases, 48);
  const int dims[] = {2, 3, 5};
  const double spans[] = {1.0, 2.0, 2.8};
  double worst_conservation = 0.0, worst_gap = 0.0;
  for (int c = 0; c < conservation_cases; ++c) {
    const CurvatureField field =
        random_smooth_field(dims[c % 3], opts.seed * 1009u + static_cast<unsigned>(c));
    const InvolutionCheck check = involution_symmetry_check(field, spans[(c / 3) % 3]);
    worst_conservation = std::max(worst_conservation, check.conservation_defect);
    worst_gap = std::max(worst_gap, check.density_gap);
  }
  report.require_below("conserved section (" + std::to_string(conservation_cases) +
                           " random fields)",
                       worst_conservation, 1e-8);
  report.require_below("flip density gap (" + std::to_string(conservation_cases) +
                           " random fields)",
                       worst_gap, 1e-8);
  return report;
}

RunReport verify_ode(const VerifyOptions& opts) {
  RunReport report;
  stamp_params(report, "ode", opts);

  const std::vector<ExponentPair> pairs = catalog_exponent_pairs(opts.max_dim);
  double worst_residual = 0.0;
  for (const ExponentPair& pair : pairs) {
    double worst_gap = 0.0, worst_match = 0.0;
    for (int k = 1; k <= 8; ++k) {
      const RadialODEProblem problem{pair, spectrum(pair, k)};
      const PhiSolution sol = solve_phi(problem, opts.grid);
      const CosPolynomial p = phi_polynomial(pair, k);
      for (std::size_t i = 0; i < sol.phi.size(); ++i)
        worst_gap = std::max(worst_gap,
                             std::abs(sol.phi.values[i] - p.eval_angle(sol.phi.grid[i])));
      worst_match = std::max(worst_match, sol.matching_defect);
      if (!sol.stitched) worst_match = std::max(worst_match, kThrewSentinel);
      worst_residual = std::max(worst_residual, phi_residual(sol, problem));
    }
    report.require_below("phi ode vs recursion " + pair_tag(pair), worst_gap, 1e-6);
    report.require_below("phi branch matching " + pair_tag(pair), worst_match, 1e-6);
  }
  report.require_below("phi stencil residual (catalog)", worst_residual, 1e-6);

  // First eigenfunction: coefficients (beta, lambda_1) / (lambda_1 + beta).
  int bad_first = 0;
  for (const ExponentPair& pair : pairs) {
    const Rational lambda1 = spectrum_exact(pair, 1);
    const Rational denom = lambda1 + pair.beta;
    const CosPolynomial expect({pair.beta / denom, lambda1 / denom});
    if (!(phi_polynomial(pair, 1) == expect)) ++bad_first;
  }
  report.require_below("first eigenfunction coefficients (catalog)", bad_first, 0.0);

  // Sphere spectrum k(k + n - 1), exactly.
  int bad_spectrum = 0;
  for (int n = 2; n <= opts.max_dim; ++n) {
    const ExponentPair pair{n - 1, 0};
    for (int k = 0; k <= 10; ++k)
      if (spectrum_exact(pair, k) != Rational(k) * (k + n - 1)) ++bad_spectrum;
  }
  report.require_below("sphere spectrum k(k+n-1)", bad_spectrum, 0.0);

  // Ros equality lambda_1 = n - beta = (2 ric + n + 2) / 3, exactly.
  int bad_ros = 0;
  for (const ExponentPair& pair : pairs)
    if (!ros_equality_check(pair, pair.dimension())) ++bad_ros;
  report.require_below("ros equality (catalog)", bad_ros, 0.0);

  // Between eigenvalues the regular-at-0 solution is singular at pi and the
  // two branches must refuse to stitch.
  int bad_reject = 0;
  const ExponentPair probes[] = {{1, 0}, {1, 1}, {7, 4}};
  for (const ExponentPair& pair : probes) {
    const double lambda = 0.5 * (spectrum(pair, 2) + spectrum(pair, 3));
    if (solve_phi({pair, lambda}, opts.grid).stitched) ++bad_reject;
  }
  report.require_below("off-eigenvalue rejection", bad_reject, 0.0);
  return report;
}

RunReport verify_roots(const VerifyOptions& opts) {
  RunReport report;
  stamp_params(report, "roots", opts);

  // cos(m r) as a polynomial in cos r.
  double worst_cheb = 0.0;
  for (int m = 0; m <= 20; ++m) {
    const CosPolynomial t = cos_multiple_angle(m);
    for (int i = 0; i <= 64; ++i) {
      const double r = M_PI * i / 64;
      worst_cheb = std::max(worst_cheb, std::abs(t.eval_angle(r) - std::cos(m * r)));
    }
  }
  report.require_below("multiple-angle identity m<=20", worst_cheb, 1e-8);

  // Interlacing with resolved gaps, and reconstruction residuals.
  int bad_interlacing = 0;
  double min_gap = 1e300, worst_residual = 0.0;
  for (const ExponentPair& pair : catalog_exponent_pairs(opts.max_dim)) {
    for (int k = 2; k <= 10; ++k) {
      const CosPolynomial p = phi_polynomial(pair, k);
      if (!interlacing_check(p)) ++bad_interlacing;
      const RootSet rs = roots(p);
      const RootSet ds = roots(p.derivative());
      worst_residual = std::max({worst_residual, rs.residual, ds.residual});
      std::vector<double> xs, ys;
      for (const auto& z : rs.roots) {
        if (std::abs(z.imag()) > 1e-8) ++bad_interlacing;
        xs.push_back(z.real());
      }
      for (const auto& z : ds.roots) ys.push_back(z.real());
      std::sort(xs.begin(), xs.end());
      std::sort(ys.begin(), ys.end());
      for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        min_gap = std::min(min_gap, xs[i + 1] - xs[i]);
      if (ys.size() + 1 == xs.size())
        for (std::size_t i = 0; i < ys.size(); ++i)
          min_gap = std::min({min_gap, ys[i] - xs[i], xs[i + 1] - ys[i]});
    }
  }
  report.require_below("interlacing failures k=2..10 (catalog)", bad_interlacing, 0.0);
  report.require_at_least("interlacing root gap (catalog)", min_gap, 1e-8);
  report.require_below("root reconstruction residual", worst_residual, 1e-8);

  // Randomized Gauss–Lucas: critical points inside the root hull.
  std::mt19937 rng(opts.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  int bad_hull = 0;
  for (int c = 0; c < opts.cases; ++c) {
    const int degree = 2 + c % 11;
    std::vector<double> coeffs(degree + 1);
    for (double& a : coeffs) a = unit(rng);
    while (std::abs(coeffs.back()) < 0.1) coeffs.back() = unit(rng);
    if (!gauss_lucas_check(CosPolynomial::from_doubles(coeffs))) ++bad_hull;
  }
  report.require_below("gauss-lucas (" + std::to_string(opts.cases) + " random)",
                       bad_hull, 0.0);
  return report;
}

RunReport verify_embedding(const VerifyOptions& opts) {
  RunReport report;
  stamp_params(report, "embedding", opts);

  const std::vector<ExponentPair> pairs = catalog_exponent_pairs(opts.max_dim);
  double worst_minimality = 0.0, worst_radius = 0.0, worst_chord = 0.0;
  for (const ExponentPair& pair : pairs) {
    const EmbeddingConstants ec = embedding_constants(pair, phi_polynomial(pair, 1));
    worst_minimality = std::max(
        worst_minimality, std::abs(spectrum(pair, 1) * ec.big_c * ec.big_c - ec.n));
    const CircleCheck circle = circle_check(pair);
    worst_radius = std::max(worst_radius, std::abs(circle.radius - 1.0));
    worst_chord = std::max(worst_chord, circle.max_deviation);
  }
  report.require_below("minimality lambda1 C^2 = n (catalog)", worst_minimality, 1e-8);
  report.require_below("circle radius 1 (catalog)", worst_radius, 1e-9);
  report.require_below("circle chord law (catalog)", worst_chord, 1e-8);

  // Screw functions are even and 2 pi periodic in the parameter.
  double worst_screw = 0.0;
  const ExponentPair screw_pairs[] = {{1, 0}, {3, 2}, {7, 4}};
  for (const ExponentPair& pair : screw_pairs)
    for (int i = 0; i < 12; ++i) {
      const double s = 0.1 + 0.5 * i;
      const double base = screw_function_from_formula(pair, 2, s);
      worst_screw =
          std::max({worst_screw,
                    std::abs(screw_function_from_formula(pair, 2, -s) - base),
                    std::abs(screw_function_from_formula(pair, 2, s + 2 * M_PI) - base)});
    }
  report.require_below("screw function symmetry", worst_screw, 1e-10);

  // Radialized Laplacian commutes with the mean-value projector.
  std::vector<SphereFunction> corpus;
  corpus.push_back({"z", [](const Eigen::Vector3d& q) { return q.z(); },
                    [](const Eigen::Vector3d& q) { return 2.0 * q.z(); }});
  corpus.push_back({"xy", [](const Eigen::Vector3d& q) { return q.x() * q.y(); },
                    [](const Eigen::Vector3d& q) { return 6.0 * q.x() * q.y(); }});
  corpus.push_back({"(x^2-y^2)z",
                    [](const Eigen::Vector3d& q) {
                      return (q.x() * q.x() - q.y() * q.y()) * q.z();
                    },
                    [](const Eigen::Vector3d& q) {
                      return 12.0 * (q.x() * q.x() - q.y() * q.y()) * q.z();
                    }});
  corpus.push_back({"harmonic mix",
                    [](const Eigen::Vector3d& q) {
                      return 0.5 * q.z() + 0.25 * q.x() * q.y() -
                             (q.x() * q.x() - q.y() * q.y()) * q.z();
                    },
                    [](const Eigen::Vector3d& q) {
                      return q.z() + 1.5 * q.x() * q.y() -
                             12.0 * (q.x() * q.x() - q.y() * q.y()) * q.z();
                    }});
  const Eigen::Vector3d bases[] = {{0.2, -0.4, 0.6}, {1.0, 1.0, 1.0}, {0.9, -0.1, 0.2}};
  double worst_commute = 0.0;
  for (const SphereFunction& f : corpus)
    for (const Eigen::Vector3d& p : bases)
      worst_commute = std::max(worst_commute, basic_commutativity_check(f, p));
  report.require_below("laplacian commutes with radialization", worst_commute, 1e-6);

  // Pair integrals of translated eigenfunctions depend on distance only.
  const ExponentPair s2{1, 0};
  const std::vector<double> distances = {0.4, 1.0, 1.9, 2.8};
  const RadialityCheck same =
      l2_radiality_check(phi_polynomial(s2, 1), phi_polynomial(s2, 1), distances, 4,
                         opts.seed);
  report.require_below("pair integral radiality", same.max_spread, 1e-9);
  report.require_below("pair integral formula", same.formula_gap, 1e-9);
  const RadialityCheck cross =
      l2_radiality_check(phi_polynomial(s2, 1), phi_polynomial(s2, 2), distances, 4,
                         opts.seed + 1);
  report.require_below("pair integral radiality (cross)", cross.max_spread, 1e-9);

  // Explicit quadrature embedding of the 2-sphere.
  const S2EmbeddingReport s2_report = s2_explicit_embedding(64, opts.seed);
  report.require_below("embedding radius", s2_report.radius_defect, 1e-8);
  report.require_below("embedding metric distortion", s2_report.metric_distortion, 1e-6);
  report.require_below("geodesic circle radius", std::abs(s2_report.geodesic_radius - 1.0),
                       1e-6);
  report.require_below("geodesic circle deviation", s2_report.circle_deviation, 1e-8);
  report.require_below("geodesic screw law", s2_report.screw_defect, 1e-8);
  report.require_below("geodesic congruence", s2_report.congruence_residual, 1e-8);
  report.require_below("eigenspace norm sum", s2_report.parseval_defect, 1e-8);
  return report;
}

RunReport verify_all(const VerifyOptions& opts) {
  RunReport report;
  stamp_params(report, "all", opts);
  report.merge(verify_density(opts));
  report.merge(verify_ode(opts));
  report.merge(verify_roots(opts));
  report.merge(verify_embedding(opts));
  return report;
}

RunReport verify_suite(const std::string& name, const VerifyOptions& opts) {
  if (name == "density") return verify_density(opts);
  if (name == "ode") return verify_ode(opts);
  if (name == "roots") return verify_roots(opts);
  if (name == "embedding") return verify_embedding(opts);
  if (name == "all") return verify_all(opts);
  throw std::invalid_argument("unknown suite: " + name +
                              " (expected density|ode|roots|embedding|all)");
}

}  // namespace harmon
