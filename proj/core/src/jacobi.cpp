#include "harmon/jacobi.hpp"

#include "harmon/ode.hpp"

#include <Eigen/LU>

#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>

namespace harmon {

namespace {

using Eigen::MatrixXd;

struct LaunchSeries {
  // J(r) = r I + r^3 J3 + r^4 J4 + r^5 J5 from J'' = -R J, J(0) = 0,
  // J'(0) = I, with R3 = R(0), R4 = R'(0), R5 = R(0)^2 - 3 R''(0).
  MatrixXd J3, J4, J5;

  MatrixXd value(double r, int dim) const {
    return r * MatrixXd::Identity(dim, dim) + (r * r * r) * (J3 + r * (J4 + r * J5));
  }
  MatrixXd derivative(double r, int dim) const {
    return MatrixXd::Identity(dim, dim) + (r * r) * (3.0 * J3 + r * (4.0 * J4 + 5.0 * r * J5));
  }
};

LaunchSeries launch_series(const CurvatureField& field) {
  const int d = field.dim;
  const MatrixXd R0 = field(0.0);
  MatrixXd R1 = MatrixXd::Zero(d, d), R2 = MatrixXd::Zero(d, d);
  if (!field.constant) {
    // One-sided second-order differences for R'(0), R''(0); these enter at
    // orders r^4 and r^5, so the O(h^2) stencil error is far below the
    // integration tolerance.
    const double h = 1e-3;
    const MatrixXd Ra = field(h), Rb = field(2 * h), Rc = field(3 * h);
    R1 = (-3.0 * R0 + 4.0 * Ra - Rb) / (2.0 * h);
    R2 = (2.0 * R0 - 5.0 * Ra + 4.0 * Rb - Rc) / (h * h);
  }
  LaunchSeries s;
  s.J3 = -R0 / 6.0;
  s.J4 = -R1 / 12.0;
  s.J5 = (R0 * R0 - 3.0 * R2) / 120.0;
  return s;
}

}  // namespace

CurvatureField CurvatureField::constant_matrix(MatrixXd R) {
  if (R.rows() != R.cols() || R.rows() < 1)
    throw std::invalid_argument("curvature field: matrix must be square");
  const int d = static_cast<int>(R.rows());
  return {d, true, [R = std::move(R)](double) { return R; }};
}

CurvatureField CurvatureField::of(const ModelSpace& space) {
  const CurvatureSpectrum spec = curvature_spectrum(space);
  const int d = spec.total_multiplicity();
  Eigen::VectorXd diag(d);
  int at = 0;
  for (const auto& [value, mult] : spec.lines)
    for (int i = 0; i < mult; ++i) diag[at++] = value;
  return constant_matrix(MatrixXd(diag.asDiagonal()));
}

CurvatureField CurvatureField::varying(int dim, std::function<MatrixXd(double)> eval) {
  if (dim < 1) throw std::invalid_argument("curvature field: dim must be >= 1");
  return {dim, false, std::move(eval)};
}

CurvatureField CurvatureField::reversed(const CurvatureField& field, double r_total) {
  if (field.constant) return field;
  return varying(field.dim,
                 [field, r_total](double s) { return field(r_total - s); });
}

CurvatureField random_smooth_field(int dim, unsigned seed, double amplitude) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> entry(-amplitude, amplitude);
  std::uniform_real_distribution<double> freq(0.5, 2.5);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
  auto symmetric = [&] {
    MatrixXd A(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j <= i; ++j) A(i, j) = A(j, i) = entry(rng);
    return A;
  };
  const MatrixXd S0 = symmetric(), S1 = symmetric(), S2 = symmetric();
  const double w1 = freq(rng), w2 = freq(rng), p1 = phase(rng), p2 = phase(rng);
  return CurvatureField::varying(dim, [=](double r) {
    return S0 + std::sin(w1 * r + p1) * S1 + std::cos(w2 * r + p2) * S2;
  });
}

JacobiTrajectory integrate_jacobi(const CurvatureField& field, double r_max, int grid_size,
                                  const JacobiOptions& opts) {
  if (!(r_max > 0.0)) throw std::invalid_argument("integrate_jacobi: r_max must be > 0");
  if (grid_size < 2) throw std::invalid_argument("integrate_jacobi: grid_size must be >= 2");
  std::vector<double> grid(grid_size);
  for (int i = 0; i < grid_size; ++i) grid[i] = r_max * i / (grid_size - 1);
  return integrate_jacobi(field, std::move(grid), opts);
}

JacobiTrajectory integrate_jacobi(const CurvatureField& field, std::vector<double> grid,
                                  const JacobiOptions& opts) {
  if (grid.empty() || grid.front() < 0.0)
    throw std::invalid_argument("integrate_jacobi: grid must start at r >= 0");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      throw std::invalid_argument("integrate_jacobi: grid not strictly increasing");
  const int d = field.dim;
  const double eps = std::min(opts.launch_radius, grid.back() * 1e-3);

  JacobiTrajectory traj;
  traj.grid = std::move(grid);
  traj.dim = d;
  traj.launch_radius = eps;
  traj.J.resize(traj.grid.size());
  traj.Jp.resize(traj.grid.size());

  const LaunchSeries series = launch_series(field);
  std::size_t first = 0;
  for (; first < traj.grid.size() && traj.grid[first] <= eps; ++first) {
    traj.J[first] = series.value(traj.grid[first], d);
    traj.Jp[first] = series.derivative(traj.grid[first], d);
  }
  if (first == traj.grid.size()) return traj;

  const std::size_t nsq = static_cast<std::size_t>(d) * d;
  std::vector<double> state(2 * nsq);
  Eigen::Map<MatrixXd>(state.data(), d, d) = series.value(eps, d);
  Eigen::Map<MatrixXd>(state.data() + nsq, d, d) = series.derivative(eps, d);

  auto rhs = [&field, d, nsq](double r, const double* y, double* dy) {
    const Eigen::Map<const MatrixXd> J(y, d, d), Jp(y + nsq, d, d);
    Eigen::Map<MatrixXd>(dy, d, d) = Jp;
    Eigen::Map<MatrixXd>(dy + nsq, d, d).noalias() = -field(r) * J;
  };
  OdeOptions ode_opts;
  ode_opts.rel_tol = opts.rel_tol;
  ode_opts.abs_tol = opts.abs_tol;
  const std::span<const double> tail(traj.grid.data() + first, traj.grid.size() - first);
  integrate_to_grid(rhs, state, eps, tail,
                    [&](std::size_t i, const std::vector<double>& y) {
                      traj.J[first + i] = Eigen::Map<const MatrixXd>(y.data(), d, d);
                      traj.Jp[first + i] = Eigen::Map<const MatrixXd>(y.data() + nsq, d, d);
                    },
                    ode_opts);
  return traj;
}

RadialProfile determinant_profile(const JacobiTrajectory& traj) {
  RadialProfile profile;
  profile.label = "omega_hat";
  profile.grid = traj.grid;
  profile.values.reserve(traj.grid.size());
  for (const MatrixXd& J : traj.J) profile.values.push_back(J.determinant());
  return profile;
}

RadialProfile density_profile(const JacobiTrajectory& traj, int n) {
  if (n != traj.dim + 1)
    throw std::invalid_argument("density_profile: n must equal dim + 1");
  RadialProfile profile;
  profile.label = "omega";
  profile.grid = traj.grid;
  profile.values.reserve(traj.grid.size());
  for (std::size_t i = 0; i < traj.grid.size(); ++i) {
    const double r = traj.grid[i];
    profile.values.push_back(r == 0.0 ? 1.0
                                      : traj.J[i].determinant() / std::pow(r, n - 1));
  }
  return profile;
}

RadialProfile mean_curvature_profile(const JacobiTrajectory& traj) {
  RadialProfile profile;
  profile.label = "mean_curvature";
  // det J ~ r^dim > 0 off the launch point; a sign change means a conjugate
  // point was crossed and J^{-1} stops being meaningful.
  for (std::size_t i = 0; i < traj.grid.size(); ++i) {
    const double r = traj.grid[i];
    if (r == 0.0) continue;
    Eigen::PartialPivLU<MatrixXd> lu(traj.J[i]);
    const double det = lu.determinant();
    if (det <= 0.0 || !std::isfinite(det))
      throw std::runtime_error("mean_curvature_profile: conjugate point at r = " +
                               std::to_string(r));
    profile.grid.push_back(r);
    profile.values.push_back(lu.solve(traj.Jp[i]).trace());
  }
  return profile;
}

double ricci_from_mean_curvature(const RadialProfile& mean_curvature, int n) {
  mean_curvature.validate();
  const auto& grid = mean_curvature.grid;
  if (grid.empty() || grid.front() > 0.05)
    throw std::runtime_error("ricci_from_mean_curvature: no samples below r = 0.05");
  // g(r) = r H(r) is even with g(0) = n - 1 and g''(0) = -(2/3) ric.  Second
  // differences at h, 2h, 4h plus two Richardson stages kill the h^2 and h^4
  // error terms; the grid must contain all three radii exactly.
  auto find = [&grid](double r) -> std::ptrdiff_t {
    auto it = std::lower_bound(grid.begin(), grid.end(), r - 1e-10);
    if (it != grid.end() && std::abs(*it - r) < 1e-10) return it - grid.begin();
    return -1;
  };
  std::ptrdiff_t base = -1;
  for (std::size_t i = 0; i < grid.size() && grid[i] <= 0.03; ++i)
    if (find(2.0 * grid[i]) >= 0 && find(4.0 * grid[i]) >= 0)
      base = static_cast<std::ptrdiff_t>(i);
  if (base < 0)
    throw std::runtime_error("ricci_from_mean_curvature: grid too coarse below r = 0.05");
  const double h = grid[base];
  const double g0 = n - 1.0;
  auto G = [&](double r) {
    const std::ptrdiff_t i = find(r);
    return 2.0 * (r * mean_curvature.values[i] - g0) / (r * r);
  };
  const double G1 = G(h), G2 = G(2.0 * h), G4 = G(4.0 * h);
  const double R1 = (4.0 * G1 - G2) / 3.0, R2 = (4.0 * G2 - G4) / 3.0;
  const double second = (16.0 * R1 - R2) / 15.0;
  return -1.5 * second;
}

double wronskian_defect(const JacobiTrajectory& traj) {
  double defect = 0.0;
  for (std::size_t i = 0; i < traj.grid.size(); ++i) {
    const MatrixXd W = traj.J[i].transpose() * traj.Jp[i] - traj.Jp[i].transpose() * traj.J[i];
    defect = std::max(defect, W.cwiseAbs().maxCoeff());
  }
  return defect;
}

std::vector<MatrixXd> involution_conserved_section(const JacobiTrajectory& forward,
                                                   const JacobiTrajectory& reversed) {
  const std::size_t N = forward.grid.size();
  if (reversed.grid.size() != N || forward.dim != reversed.dim)
    throw std::invalid_argument("involution section: trajectories must share the grid");
  const double r_total = forward.grid.back();
  for (std::size_t i = 0; i < N; ++i)
    if (std::abs(forward.grid[i] - reversed.grid[i]) > 1e-12 ||
        std::abs(forward.grid[i] + forward.grid[N - 1 - i] - r_total) > 1e-9)
      throw std::invalid_argument("involution section: grid must be uniform on [0, r_max]");
  // K(r) = Kbar(r_total - r), so K'(r) = -Kbar'(r_total - r) and the section
  // (J^T)' K - J^T K' becomes Jp^T Kbar(flip) + J^T Kbar'(flip).
  std::vector<MatrixXd> section(N);
  for (std::size_t i = 0; i < N; ++i)
    section[i] = forward.Jp[i].transpose() * reversed.J[N - 1 - i] +
                 forward.J[i].transpose() * reversed.Jp[N - 1 - i];
  return section;
}

InvolutionCheck involution_symmetry_check(const CurvatureField& field, double r_max,
                                          int grid_size, const JacobiOptions& opts) {
  const JacobiTrajectory forward = integrate_jacobi(field, r_max, grid_size, opts);
  const JacobiTrajectory backward =
      integrate_jacobi(CurvatureField::reversed(field, r_max), r_max, grid_size, opts);
  const std::vector<MatrixXd> section = involution_conserved_section(forward, backward);
  InvolutionCheck check;
  check.density_gap =
      std::abs(forward.J.back().determinant() - backward.J.back().determinant());
  for (const MatrixXd& S : section)
    check.conservation_defect =
        std::max(check.conservation_defect, (S - section.front()).cwiseAbs().maxCoeff());
  return check;
}

}  // namespace harmon
