#pragma once

#include "harmon/model_spaces.hpp"
#include "harmon/profile.hpp"

#include <Eigen/Core>

#include <functional>
#include <vector>

namespace harmon {

/** Radial curvature operator r |-> R(r) along a unit-speed geodesic: a
    symmetric (n-1) x (n-1) matrix field acting on the normal space. */
struct CurvatureField {
  int dim = 0;
  bool constant = false;
  std::function<Eigen::MatrixXd(double)> eval;

  Eigen::MatrixXd operator()(double r) const { return eval(r); }

  static CurvatureField constant_matrix(Eigen::MatrixXd R);
  /** Diagonal field from a curvature spectrum, extreme eigenvalue block
      first. */
  static CurvatureField of(const ModelSpace& space);
  static CurvatureField varying(int dim, std::function<Eigen::MatrixXd(double)> eval);
  /** Field of the time-reversed geodesic: s |-> R(r_total - s). */
  static CurvatureField reversed(const CurvatureField& field, double r_total);
};

/** Smooth random symmetric field (constant + two trigonometric modes),
    deliberately not symmetric about any midpoint; used by the randomized
    conservation and symmetry checks. */
CurvatureField random_smooth_field(int dim, unsigned seed, double amplitude = 0.5);

/** Solution of J'' + R J = 0 with J(0) = 0, J'(0) = I sampled on a grid. */
struct JacobiTrajectory {
  std::vector<double> grid;
  std::vector<Eigen::MatrixXd> J;
  std::vector<Eigen::MatrixXd> Jp;
  int dim = 0;
  double launch_radius = 0.0;
};

struct JacobiOptions {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  /** The r = 0 data J = 0, J' = I is a singular launch for the density
      (det J = 0), so integration starts from a fifth-order Taylor expansion
      at this radius instead. */
  double launch_radius = 1e-3;
};

/** Integrates the Jacobi initial value problem on a uniform grid of
    grid_size points spanning [0, r_max] (grid_size >= 2). */
JacobiTrajectory integrate_jacobi(const CurvatureField& field, double r_max, int grid_size,
                                  const JacobiOptions& opts = {});
/** Same on an arbitrary strictly increasing grid with grid.front() >= 0. */
JacobiTrajectory integrate_jacobi(const CurvatureField& field, std::vector<double> grid,
                                  const JacobiOptions& opts = {});

/** det J(r): the volume density with the flat r^{n-1} factor kept in.  The
    sign is preserved, so a trajectory continued past a conjugate point shows
    it. */
RadialProfile determinant_profile(const JacobiTrajectory& traj);

/** omega(r) = r^{1-n} det J(r), the density relative to flat space;
    omega(0) = 1 by continuity.  Requires n = dim + 1. */
RadialProfile density_profile(const JacobiTrajectory& traj, int n);

/** Mean curvature of the geodesic sphere, H(r) = tr(J'(r) J(r)^{-1}).  The
    r = 0 sample is dropped (H ~ (n-1)/r there); throws std::runtime_error at
    conjugate points (det J near zero). */
RadialProfile mean_curvature_profile(const JacobiTrajectory& traj);

/** Radial Ricci curvature recovered from the small-r expansion
    (r H(r))''(0) = -(2/3) ric via Richardson-extrapolated second differences.
    Needs samples below r = 0.05 on a uniform grid (throws std::runtime_error
    otherwise). */
double ricci_from_mean_curvature(const RadialProfile& mean_curvature, int n);

/** max over the grid of || J^T J' - (J')^T J ||_inf; vanishes for symmetric
    curvature fields. */
double wronskian_defect(const JacobiTrajectory& traj);

/** The matrix section (J^T)'(r) K(r) - J^T(r) K'(r) evaluated on the common
    grid, where K(r) = Kbar(r_total - r) is built from the trajectory of the
    reversed field.  Constant in r; equals Kbar(r_total) at r = 0 and
    J^T(r_total) at r = r_total.  Both trajectories must share the same
    uniform grid. */
std::vector<Eigen::MatrixXd> involution_conserved_section(const JacobiTrajectory& forward,
                                                          const JacobiTrajectory& reversed);

struct InvolutionCheck {
  /** | det J(r_max) - det Kbar(r_max) |: invariance of the density under the
      geodesic flip. */
  double density_gap = 0.0;
  /** max over the grid of || section(r) - section(0) ||_inf. */
  double conservation_defect = 0.0;
};

/** Integrates the field and its reversal over [0, r_max] and checks the
    conservation law behind the flip invariance of det J. */
InvolutionCheck involution_symmetry_check(const CurvatureField& field, double r_max,
                                          int grid_size = 257, const JacobiOptions& opts = {});

}  // namespace harmon
