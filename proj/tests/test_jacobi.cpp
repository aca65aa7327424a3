#include "harmon/jacobi.hpp"

#include "harmon/model_spaces.hpp"

#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

using namespace harmon;

TEST_SUITE_BEGIN("jacobi");

TEST_CASE("flat space integrates to J = r I") {
  const JacobiTrajectory traj =
      integrate_jacobi(CurvatureField::of(parse_space("flat:4")), 3.0, 31);
  for (std::size_t i = 0; i < traj.grid.size(); ++i) {
    const double r = traj.grid[i];
    CHECK((traj.J[i] - r * Eigen::MatrixXd::Identity(3, 3)).norm() < 1e-12 * (1 + r));
    CHECK((traj.Jp[i] - Eigen::MatrixXd::Identity(3, 3)).norm() < 1e-12);
  }
  const RadialProfile omega = density_profile(traj, 4);
  for (double v : omega.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sphere determinant reproduces sin^(n-1)") {
  const JacobiTrajectory traj =
      integrate_jacobi(CurvatureField::of(parse_space("sphere:3")), 3.0, 61);
  const RadialProfile det = determinant_profile(traj);
  CHECK(det.label == "omega_hat");
  for (std::size_t i = 1; i < det.size(); ++i) {
    const double exact = std::pow(std::sin(det.grid[i]), 2);
    CHECK(det.values[i] == doctest::Approx(exact).epsilon(1e-10));
  }
  // Relative density omega = det / r^(n-1), 1 at the origin by continuity.
  const RadialProfile omega = density_profile(traj, 3);
  CHECK(omega.values.front() == 1.0);
  CHECK(omega.values.back() ==
        doctest::Approx(std::pow(std::sin(3.0) / 3.0, 2)).epsilon(1e-10));
}

TEST_CASE("quarter-curvature block shows up in the mixed determinant") {
  // Complex projective plane: det J = sin r * (2 sin(r/2))^2.
  const JacobiTrajectory traj =
      integrate_jacobi(CurvatureField::of(parse_space("cpn:2")), M_PI / 2, 33);
  CHECK(determinant_profile(traj).values.back() == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("launch series agrees with J ~ r I near zero") {
  const JacobiTrajectory traj =
      integrate_jacobi(CurvatureField::of(parse_space("op2")), 0.002, 3);
  const double r = traj.grid[1];
  CHECK((traj.J[1] / r - Eigen::MatrixXd::Identity(15, 15)).norm() < 1e-6);
}

TEST_CASE("mean curvature of flat spheres is (n-1)/r") {
  const JacobiTrajectory traj =
      integrate_jacobi(CurvatureField::of(parse_space("flat:3")), 2.0, 41);
  const RadialProfile h = mean_curvature_profile(traj);
  CHECK(h.grid.front() > 0.0);  // r = 0 sample dropped
  for (std::size_t i = 0; i < h.size(); ++i)
    CHECK(h.values[i] == doctest::Approx(2.0 / h.grid[i]).epsilon(1e-10));
}

TEST_CASE("mean curvature stops at a conjugate point") {
  // On the 2-sphere det J = sin r turns negative past r = pi.
  const JacobiTrajectory traj =
      integrate_jacobi(CurvatureField::of(parse_space("sphere:2")), 3.3, 67);
  CHECK_THROWS_AS(mean_curvature_profile(traj), std::runtime_error);
  // The trajectory itself continues; the determinant records the sign change.
  CHECK(determinant_profile(traj).values.back() < 0.0);
}

TEST_CASE("radial ricci recovered from the mean-curvature expansion") {
  for (const char* id : {"sphere:3", "cpn:2", "hpn:2", "op2"}) {
    const ModelSpace space = parse_space(id);
    const JacobiTrajectory traj =
        integrate_jacobi(CurvatureField::of(space), M_PI - 0.1, 513);
    const double ric = ricci_from_mean_curvature(mean_curvature_profile(traj),
                                                 space.dimension());
    CHECK(ric == doctest::Approx(ricci(space)).epsilon(1e-8));
  }
}

TEST_CASE("ricci extraction needs samples near the origin") {
  RadialProfile h;
  h.label = "mean_curvature";
  for (int i = 0; i < 100; ++i) {
    const double r = 0.06 + 0.01 * i;
    h.grid.push_back(r);
    h.values.push_back(2.0 / std::tan(r));
  }
  CHECK_THROWS_AS(ricci_from_mean_curvature(h, 3), std::runtime_error);
}

TEST_CASE("wronskian symmetry for a random symmetric field") {
  const CurvatureField field = random_smooth_field(3, 7u);
  const JacobiTrajectory traj = integrate_jacobi(field, 2.0, 129);
  CHECK(wronskian_defect(traj) < 1e-10);
}

TEST_CASE("flip section is constant and pins the endpoint determinants") {
  const CurvatureField field = random_smooth_field(3, 11u);
  const double r_total = 2.0;
  const JacobiTrajectory fwd = integrate_jacobi(field, r_total, 257);
  const JacobiTrajectory rev =
      integrate_jacobi(CurvatureField::reversed(field, r_total), r_total, 257);
  const auto section = involution_conserved_section(fwd, rev);
  REQUIRE(section.size() == fwd.grid.size());
  // J(0) = Kbar(r_total) and J(end) = J^T(r_total).
  CHECK((section.front() - rev.J.back()).lpNorm<Eigen::Infinity>() < 1e-9);
  CHECK((section.back() - fwd.J.back().transpose()).lpNorm<Eigen::Infinity>() < 1e-9);
  for (const auto& value : section)
    CHECK((value - section.front()).lpNorm<Eigen::Infinity>() < 1e-9);

  const InvolutionCheck check = involution_symmetry_check(field, r_total);
  CHECK(check.conservation_defect < 1e-9);
  CHECK(check.density_gap < 1e-9);
}

TEST_CASE("asymmetric fields keep the conservation law but not pointwise flip symmetry") {
  // Scalar field R(r) = 1 + 0.1 sin r, not symmetric about the midpoint.
  const CurvatureField field = CurvatureField::varying(1, [](double r) {
    return Eigen::MatrixXd::Constant(1, 1, 1.0 + 0.1 * std::sin(r));
  });
  const double r_total = 1.0;
  const InvolutionCheck check = involution_symmetry_check(field, r_total);
  CHECK(check.conservation_defect < 1e-9);
  CHECK(check.density_gap < 1e-9);  // endpoint equality is forced by the law

  const JacobiTrajectory fwd = integrate_jacobi(field, r_total, 257);
  const JacobiTrajectory rev =
      integrate_jacobi(CurvatureField::reversed(field, r_total), r_total, 257);
  // Interior profiles differ: the flip symmetry of det J fails off-midpoint.
  const std::size_t mid = 64;
  CHECK(std::abs(fwd.J[mid].determinant() - rev.J[mid].determinant()) > 1e-6);
}

TEST_CASE("input validation") {
  const CurvatureField field = CurvatureField::of(parse_space("sphere:3"));
  CHECK_THROWS_AS(integrate_jacobi(field, 2.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(integrate_jacobi(field, -1.0, 33), std::invalid_argument);
  CHECK_THROWS_AS(integrate_jacobi(field, std::vector<double>{0.5, 0.4}),
                  std::invalid_argument);
}

TEST_SUITE_END();
