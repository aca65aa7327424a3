#include "harmon/radial_ode.hpp"

#include "harmon/model_spaces.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace harmon;

TEST_SUITE_BEGIN("radial_ode");

TEST_CASE("mean curvature closed form") {
  CHECK(mean_curvature({2, 0}, 1.0) == doctest::Approx(2.0 / std::tan(1.0)).epsilon(1e-14));
  CHECK(mean_curvature({1, 1}, M_PI / 2) == doctest::Approx(1.0));
  // ((alpha + beta) cos r + beta) / sin r.
  CHECK(mean_curvature({7, 4}, 1.0) ==
        doctest::Approx((11.0 * std::cos(1.0) + 4.0) / std::sin(1.0)).epsilon(1e-14));
  CHECK_THROWS_AS(mean_curvature({2, 0}, 0.0), std::domain_error);
  CHECK_THROWS_AS(mean_curvature({2, 0}, M_PI), std::domain_error);
}

TEST_CASE("first eigenfunction coefficients in exact arithmetic") {
  // (beta, lambda_1) / (lambda_1 + beta), with lambda_1 = alpha + beta + 1.
  CHECK(phi_polynomial({1, 1}, 1) == CosPolynomial({Rational(1, 4), Rational(3, 4)}));
  CHECK(phi_polynomial({7, 4}, 1) == CosPolynomial({Rational(1, 4), Rational(3, 4)}));
  CHECK(phi_polynomial({3, 2}, 1) == CosPolynomial({Rational(1, 4), Rational(3, 4)}));
  CHECK(phi_polynomial({1, 0}, 1) == CosPolynomial({Rational(0), Rational(1)}));
  CHECK(phi_polynomial({4, 0}, 1) == CosPolynomial({Rational(0), Rational(1)}));
  CHECK(phi_polynomial({2, 0}, 0) == CosPolynomial({Rational(1)}));
}

TEST_CASE("three-sphere second eigenfunction is sin(3r)/(3 sin r)") {
  // = (4 cos^2 r - 1) / 3.
  CHECK(phi_polynomial({2, 0}, 2) ==
        CosPolynomial({Rational(-1, 3), Rational(0), Rational(4, 3)}));
}

TEST_CASE("recursion output solves the equation symbolically") {
  for (int k = 1; k <= 10; ++k) {
    const ExponentPair pair{7, 4};
    const CosPolynomial p = phi_polynomial(pair, k);
    CHECK(p.degree() == k);
    CHECK(p.eval_exact(Rational(1)) == Rational(1));  // Phi(0) = 1
    CHECK(ode_residual_poly(p, pair, to_double(spectrum_exact(pair, k))).is_zero());
  }
  // A shifted eigenvalue leaves a nonzero residual.
  CHECK_FALSE(ode_residual_poly(phi_polynomial({2, 0}, 2), {2, 0}, 9.0).is_zero());
  CHECK_THROWS_AS(phi_polynomial({2, 0}, -1), std::invalid_argument);
}

TEST_CASE("sphere solution at the first eigenvalue is cos r") {
  const PhiSolution sol = solve_phi({{2, 0}, 3.0});
  REQUIRE(sol.phi.size() == 801);
  CHECK(sol.stitched);
  CHECK(sol.matching_defect < 1e-8);
  for (std::size_t i = 0; i < sol.phi.size(); ++i) {
    CHECK(sol.phi.values[i] ==
          doctest::Approx(std::cos(sol.phi.grid[i])).epsilon(1e-9));
    CHECK(sol.phi_prime.values[i] ==
          doctest::Approx(-std::sin(sol.phi.grid[i])).scale(1.0).epsilon(1e-8));
  }
  CHECK(sol.phi_end == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(std::abs(sol.phi_prime_end) < 1e-7);
}

TEST_CASE("endpoint values equal the polynomial at the antipode") {
  const ExponentPair pair{2, 0};
  const PhiSolution sol = solve_phi({pair, 8.0});  // k = 2
  CHECK(sol.phi_end == doctest::Approx(1.0).epsilon(1e-9));  // (4 - 1)/3 at cos = -1
  const PhiSolution op2 = solve_phi({{7, 4}, 12.0});
  CHECK(op2.phi_end ==
        doctest::Approx(phi_polynomial({7, 4}, 1)(-1.0)).epsilon(1e-9));
}

TEST_CASE("numeric solution tracks the polynomial on the whole interval") {
  for (const ExponentPair& pair : std::vector<ExponentPair>{{1, 0}, {1, 2}, {7, 4}}) {
    for (int k : {1, 3, 6}) {
      const RadialODEProblem problem{pair, spectrum(pair, k)};
      const PhiSolution sol = solve_phi(problem);
      const CosPolynomial p = phi_polynomial(pair, k);
      double worst = 0.0;
      for (std::size_t i = 0; i < sol.phi.size(); ++i)
        worst = std::max(worst,
                         std::abs(sol.phi.values[i] - p.eval_angle(sol.phi.grid[i])));
      CHECK(worst < 1e-8);
      CHECK(phi_residual(sol, problem) < 1e-6);
      CHECK(phi_residual(p, problem) < 1e-9);
    }
  }
}

TEST_CASE("solution is insensitive to the launch radius") {
  PhiOptions coarse, fine;
  coarse.launch_radius = 1e-3;
  fine.launch_radius = 1e-4;
  const RadialODEProblem problem{{3, 2}, spectrum({3, 2}, 4)};
  const PhiSolution a = solve_phi(problem, 401, coarse);
  const PhiSolution b = solve_phi(problem, 401, fine);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.phi.size(); ++i)
    worst = std::max(worst, std::abs(a.phi.values[i] - b.phi.values[i]));
  CHECK(worst < 1e-8);
}

TEST_CASE("off-eigenvalue problems refuse to stitch") {
  CHECK_FALSE(solve_phi({{2, 0}, 5.0}).stitched);
  CHECK_FALSE(solve_phi({{7, 4}, 20.0}).stitched);
  CHECK(solve_phi({{2, 0}, 5.0}).matching_defect > 1e-3);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(solve_phi({{2, 0}, -1.0}), std::domain_error);
  CHECK_THROWS_AS(solve_phi({{2, 0}, 3.0}, 8), std::invalid_argument);
  CHECK_THROWS_AS(solve_phi({{0, 0}, 1.0}), std::domain_error);
}

TEST_SUITE_END();
