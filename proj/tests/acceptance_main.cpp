// Acceptance gate: every release-blocking property, one line of output each.
// Exit code is the number of failed criteria.

#include "harmon/embedding.hpp"
#include "harmon/jacobi.hpp"
#include "harmon/model_spaces.hpp"
#include "harmon/radial_ode.hpp"
#include "harmon/report.hpp"
#include "harmon/trig_poly.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <vector>

using namespace harmon;

namespace {

int failures = 0;

void line(int index, bool pass, const char* fmt, ...) {
  if (!pass) ++failures;
  std::printf("[%s] (%d) ", pass ? "PASS" : "FAIL", index);
  va_list args;
  va_start(args, fmt);
  std::vprintf(fmt, args);
  va_end(args);
  std::printf("\n");
  std::fflush(stdout);
}

double catalog_density_error(const std::vector<ModelSpace>& spaces, double lo, double hi,
                             int count) {
  double worst = 0.0;
  for (const ModelSpace& space : spaces) {
    std::vector<double> grid(count + 1, 0.0);
    for (int i = 0; i < count; ++i) grid[i + 1] = lo + (hi - lo) * i / (count - 1);
    const RadialProfile det =
        determinant_profile(integrate_jacobi(CurvatureField::of(space), grid));
    for (int i = 1; i <= count; ++i) {
      const double exact = closed_form_density(space, det.grid[i]);
      worst = std::max(worst, std::abs(det.values[i] - exact) / std::abs(exact));
    }
  }
  return worst;
}

}  // namespace

int main() {
  const std::vector<ModelSpace> compact = compact_catalog(16);
  const std::vector<ExponentPair> pairs = catalog_exponent_pairs(16);

  // 1: integrated density equals the closed form, fast.
  {
    const WallTimer timer;
    double worst = catalog_density_error(compact, 0.1, M_PI - 0.1, 30);
    std::vector<ModelSpace> hyper;
    for (const ModelSpace& space : hyperbolic_catalog(16))
      if (space.family == Family::RealHyperbolic ||
          space.family == Family::ComplexHyperbolic)
        hyper.push_back(space);
    worst = std::max(worst, catalog_density_error(hyper, 0.3, 3.0, 10));
    const double sec = timer.seconds();
    line(1, worst <= 1e-8 && sec < 10.0,
         "density vs closed form: max rel err %.2e (tol 1e-8) in %.2f s (limit 10 s)",
         worst, sec);
  }

  // 2: radial Ricci curvature from the mean-curvature expansion.
  {
    double worst = 0.0;
    for (const ModelSpace& space : compact) {
      const JacobiTrajectory traj =
          integrate_jacobi(CurvatureField::of(space), M_PI - 0.1, 513);
      const double ric =
          ricci_from_mean_curvature(mean_curvature_profile(traj), space.dimension());
      worst = std::max(worst, std::abs(ric - ricci(space)));
    }
    line(2, worst <= 1e-6, "ricci extraction alpha + beta/2: max err %.2e (tol 1e-6)",
         worst);
  }

  // 3: numeric radial solutions vs the exact recursion, k <= 8; k = 1 exact.
  {
    double worst = 0.0;
    bool exact_first = true;
    for (const ExponentPair& pair : pairs) {
      for (int k = 1; k <= 8; ++k) {
        const PhiSolution sol = solve_phi({pair, spectrum(pair, k)});
        const CosPolynomial p = phi_polynomial(pair, k);
        for (std::size_t i = 0; i < sol.phi.size(); ++i)
          worst = std::max(worst,
                           std::abs(sol.phi.values[i] - p.eval_angle(sol.phi.grid[i])));
      }
      const Rational lambda1 = spectrum_exact(pair, 1);
      const CosPolynomial expect(
          {pair.beta / (lambda1 + pair.beta), lambda1 / (lambda1 + pair.beta)});
      exact_first = exact_first && phi_polynomial(pair, 1) == expect;
    }
    line(3, worst <= 1e-6 && exact_first,
         "radial solutions vs polynomials k<=8: max gap %.2e (tol 1e-6), k=1 exact: %s",
         worst, exact_first ? "yes" : "no");
  }

  // 4: sphere spectrum, exact.
  {
    bool exact = true;
    for (int n = 2; n <= 16; ++n)
      for (int k = 0; k <= 10; ++k)
        exact = exact && spectrum_exact({n - 1, 0}, k) == Rational(k) * (k + n - 1);
    line(4, exact, "sphere spectrum k(k+n-1) exact for k<=10, n<=16: %s",
         exact ? "yes" : "no");
  }

  // 5: interlacing with resolved gaps; randomized hull containment.
  {
    int bad = 0;
    double min_gap = 1e300;
    for (const ExponentPair& pair : pairs)
      for (int k = 2; k <= 10; ++k) {
        const CosPolynomial p = phi_polynomial(pair, k);
        if (!interlacing_check(p)) ++bad;
        std::vector<double> xs, ys;
        for (const auto& z : roots(p).roots) xs.push_back(z.real());
        for (const auto& z : roots(p.derivative()).roots) ys.push_back(z.real());
        std::sort(xs.begin(), xs.end());
        std::sort(ys.begin(), ys.end());
        for (std::size_t i = 0; i + 1 < xs.size(); ++i)
          min_gap = std::min(min_gap, xs[i + 1] - xs[i]);
        for (std::size_t i = 0; i < ys.size() && i + 1 < xs.size(); ++i)
          min_gap = std::min({min_gap, ys[i] - xs[i], xs[i + 1] - ys[i]});
      }
    std::mt19937 rng(0);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    int bad_hull = 0;
    for (int c = 0; c < 500; ++c) {
      std::vector<double> coeffs(3 + c % 11);
      for (double& a : coeffs) a = unit(rng);
      while (std::abs(coeffs.back()) < 0.1) coeffs.back() = unit(rng);
      if (!gauss_lucas_check(CosPolynomial::from_doubles(coeffs))) ++bad_hull;
    }
    line(5, bad == 0 && min_gap >= 1e-8 && bad_hull == 0,
         "interlacing k=2..10: %d failures, min gap %.2e (floor 1e-8); hull check: "
         "%d/500 failures",
         bad, min_gap, bad_hull);
  }

  // 6: two-exponent form recovered from the integrated density.
  {
    bool exact = true;
    double worst_residual = 0.0;
    for (const ModelSpace& space : compact) {
      const JacobiTrajectory traj =
          integrate_jacobi(CurvatureField::of(space), M_PI - 0.1, 513);
      const DensityFormFit fit = fit_density_form(determinant_profile(traj));
      const ExponentPair expect = exponents(space);
      exact = exact && Rational(fit.alpha) == expect.alpha &&
              Rational(fit.beta) == expect.beta;
      worst_residual = std::max(worst_residual, fit.residual);
    }
    line(6, exact && worst_residual <= 1e-6,
         "exponent recovery: exact %s, max fit residual %.2e (tol 1e-6)",
         exact ? "yes" : "no", worst_residual);
  }

  // 7: embedding constants, circles, and the explicit 2-sphere embedding.
  {
    double worst_min = 0.0, worst_radius = 0.0;
    for (const ExponentPair& pair : pairs) {
      const EmbeddingConstants ec = embedding_constants(pair, phi_polynomial(pair, 1));
      worst_min =
          std::max(worst_min, std::abs(spectrum(pair, 1) * ec.big_c * ec.big_c - ec.n));
      worst_radius = std::max(worst_radius, std::abs(circle_check(pair).radius - 1.0));
    }
    const S2EmbeddingReport s2 = s2_explicit_embedding(64, 0);
    line(7,
         worst_min <= 1e-8 && worst_radius <= 1e-9 && s2.metric_distortion <= 1e-6 &&
             s2.congruence_residual <= 1e-8,
         "embedding: |lambda1 C^2 - n| %.2e (tol 1e-8), |circle radius - 1| %.2e "
         "(tol 1e-9), distortion %.2e (tol 1e-6), congruence %.2e (tol 1e-8)",
         worst_min, worst_radius, s2.metric_distortion, s2.congruence_residual);
  }

  // 8: the Laplacian commutes with radial averaging on harmonics.
  {
    const SphereFunction harmonics[] = {
        {"z", [](const Eigen::Vector3d& q) { return q.z(); },
         [](const Eigen::Vector3d& q) { return 2.0 * q.z(); }},
        {"xy", [](const Eigen::Vector3d& q) { return q.x() * q.y(); },
         [](const Eigen::Vector3d& q) { return 6.0 * q.x() * q.y(); }},
        {"(x^2-y^2)z",
         [](const Eigen::Vector3d& q) { return (q.x() * q.x() - q.y() * q.y()) * q.z(); },
         [](const Eigen::Vector3d& q) {
           return 12.0 * (q.x() * q.x() - q.y() * q.y()) * q.z();
         }}};
    const Eigen::Vector3d bases[] = {{0.2, -0.4, 0.6}, {1.0, 1.0, 1.0}, {0.9, -0.1, 0.2}};
    double worst = 0.0;
    for (const SphereFunction& f : harmonics)
      for (const Eigen::Vector3d& p : bases)
        worst = std::max(worst, basic_commutativity_check(f, p));
    line(8, worst <= 1e-6, "laplacian vs radial averaging: max defect %.2e (tol 1e-6)",
         worst);
  }

  // 9: the flip section is constant on randomized curvature fields.
  {
    double worst = 0.0;
    const int dims[] = {2, 3, 5};
    const double spans[] = {1.0, 2.0, 2.8};
    for (int c = 0; c < 48; ++c) {
      const InvolutionCheck check = involution_symmetry_check(
          random_smooth_field(dims[c % 3], 1009u + static_cast<unsigned>(c)),
          spans[(c / 3) % 3]);
      worst = std::max({worst, check.conservation_defect, check.density_gap});
    }
    line(9, worst <= 1e-8,
         "conserved flip section, 48 random fields: max defect %.2e (tol 1e-8)", worst);
  }

  // 10: first-eigenvalue equalities, exact.
  {
    bool exact = true;
    for (const ExponentPair& pair : pairs)
      exact = exact && ros_equality_check(pair, pair.dimension());
    line(10, exact, "lambda_1 = n - beta = (2 ric + n + 2)/3 exact on the catalog: %s",
         exact ? "yes" : "no");
  }

  if (failures == 0)
    std::printf("all 10 acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", failures);
  return failures;
}
