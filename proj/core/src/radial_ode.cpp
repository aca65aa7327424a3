#include "harmon/radial_ode.hpp"

#include "harmon/ode.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace harmon {

namespace {

// Laurent data of H(r) = (A cos r + B) / sin r at r = 0:
// H(r) = nu/r + sum_{m>=1} T[m] r^{2m-1} with nu = A + B.  The endpoint
// r = pi is the same structure in s = pi - r with B negated, so one
// expansion serves both launches.
struct MeanCurvatureSeries {
  double nu = 0.0;
  std::vector<double> T;  // T[m] multiplies r^{2m-1}, m >= 1
};

MeanCurvatureSeries mean_curvature_series(double A, double B, int terms) {
  // Divide A cos r + B by sin r / r, power series in r^2:
  // numerator n_j, denominator s_j = (-1)^j / (2j+1)!, quotient t_j.
  std::vector<double> n(terms + 1), s(terms + 1), t(terms + 1);
  double fact2j = 1.0;  // (2j)!
  for (int j = 0; j <= terms; ++j) {
    if (j > 0) fact2j *= (2.0 * j - 1.0) * (2.0 * j);
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    n[j] = (j == 0) ? A + B : sign * A / fact2j;
    s[j] = sign / (fact2j * (2.0 * j + 1.0));
  }
  for (int j = 0; j <= terms; ++j) {
    double acc = n[j];
    for (int i = 1; i <= j; ++i) acc -= s[i] * t[j - i];
    t[j] = acc;
  }
  MeanCurvatureSeries series;
  series.nu = t[0];
  series.T.assign(t.begin() + 1, t.end());
  return series;
}

// Coefficients c of the even regular solution y = sum c[j] r^{2j}, c[0] = 1,
// of y'' + H y' + lambda y = 0 at a singular endpoint with the given H data.
std::vector<double> frobenius_coeffs(const MeanCurvatureSeries& h, double lambda,
                                     int terms) {
  std::vector<double> c(terms + 1, 0.0);
  c[0] = 1.0;
  for (int k = 1; k <= terms; ++k) {
    double acc = -lambda * c[k - 1];
    for (int j = 1; j < k; ++j) acc -= 2.0 * j * h.T[k - j - 1] * c[j];
    c[k] = acc / (2.0 * k * (2.0 * k - 1.0 + h.nu));
  }
  return c;
}

double series_value(const std::vector<double>& c, double r) {
  const double r2 = r * r;
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r2 + *it;
  return acc;
}

double series_derivative(const std::vector<double>& c, double r) {
  const double r2 = r * r;
  double acc = 0.0;
  for (std::size_t j = c.size(); j-- > 1;) acc = acc * r2 + 2.0 * j * c[j];
  return acc * r;
}

// Quadratic Lagrange extrapolation to 0 from samples at h, 2h, 3h.
double extrapolate_to_zero(double f1, double f2, double f3) {
  return 3.0 * f1 - 3.0 * f2 + f3;
}

std::string phi_label(const char* stem, double lambda) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s(lambda=%.10g)", stem, lambda);
  return buf;
}

constexpr int kSeriesTerms = 7;  // even powers through r^14

}  // namespace

double mean_curvature(const ExponentPair& pair, double r) {
  if (!(r > 0.0) || !(r < M_PI))
    throw std::domain_error("mean_curvature: r outside (0, pi)");
  const double A = to_double(pair.alpha + pair.beta), B = to_double(pair.beta);
  return (A * std::cos(r) + B) / std::sin(r);
}

PhiSolution solve_phi(const RadialODEProblem& problem, int grid_size,
                      const PhiOptions& opts) {
  const double A = to_double(problem.exponents.alpha + problem.exponents.beta);
  const double B = to_double(problem.exponents.beta);
  if (!(A > 0.0)) throw std::domain_error("solve_phi: alpha + beta must be > 0");
  if (problem.lambda < 0.0) throw std::domain_error("solve_phi: lambda must be >= 0");
  if (grid_size < 16) throw std::invalid_argument("solve_phi: grid_size must be >= 16");

  PhiSolution sol;
  sol.lambda = problem.lambda;
  sol.phi.label = phi_label("phi", problem.lambda);
  sol.phi_prime.label = phi_label("phi_prime", problem.lambda);
  sol.phi.grid.resize(grid_size);
  for (int i = 0; i < grid_size; ++i) sol.phi.grid[i] = M_PI * i / (grid_size - 1);
  sol.phi_prime.grid = sol.phi.grid;
  sol.phi.values.assign(grid_size, 0.0);
  sol.phi_prime.values.assign(grid_size, 0.0);
  const auto& grid = sol.phi.grid;

  const MeanCurvatureSeries h_zero = mean_curvature_series(A, B, kSeriesTerms + 1);
  const MeanCurvatureSeries h_end = mean_curvature_series(A, -B, kSeriesTerms + 1);
  sol.frobenius_zero = frobenius_coeffs(h_zero, problem.lambda, kSeriesTerms);
  sol.frobenius_end = frobenius_coeffs(h_end, problem.lambda, kSeriesTerms);

  const double eps = opts.launch_radius;
  const int mid = (grid_size - 1) / 2;
  auto H = [&](double r) { return (A * std::cos(r) + B) / std::sin(r); };
  OdeOptions ode_opts{opts.rel_tol, opts.abs_tol, 0.0};
  const OdeRhs forward_rhs = [&H, &problem](double r, const double* y, double* dy) {
    dy[0] = y[1];
    dy[1] = -H(r) * y[1] - problem.lambda * y[0];
  };

  // Forward branch: series on [0, eps], integration beyond, through the
  // midpoint.  Grid points on the left half are solution samples.
  int first = 0;
  for (; first <= mid && grid[first] <= eps; ++first) {
    sol.phi.values[first] = series_value(sol.frobenius_zero, grid[first]);
    sol.phi_prime.values[first] = series_derivative(sol.frobenius_zero, grid[first]);
  }
  std::vector<double> state = {series_value(sol.frobenius_zero, eps),
                               series_derivative(sol.frobenius_zero, eps)};
  if (first <= mid) {
    const std::span<const double> left(grid.data() + first, mid - first + 1);
    integrate_to_grid(forward_rhs, state, eps, left,
                      [&](std::size_t i, const std::vector<double>& y) {
                        sol.phi.values[first + i] = y[0];
                        sol.phi_prime.values[first + i] = y[1];
                      },
                      ode_opts);
  }
  const double y_mid = sol.phi.values[mid], yp_mid = sol.phi_prime.values[mid];

  // Endpoint branch in s = pi - r, regular series at s = 0, integrated out to
  // the midpoint.  w' in r is -dw/ds.
  const double s_mid = M_PI - grid[mid];
  std::vector<double> s_targets;  // s values of the far-half grid points
  std::vector<int> s_grid_index;  // matching grid indices; -1 marks the midpoint
  for (int i = grid_size - 1; i > mid; --i)
    if (M_PI - grid[i] > eps) {
      s_targets.push_back(M_PI - grid[i]);
      s_grid_index.push_back(i);
    }
  s_targets.push_back(s_mid);
  s_grid_index.push_back(-1);
  std::vector<double> w_at(grid_size, 0.0), wp_at(grid_size, 0.0);  // indexed by grid point
  const OdeRhs backward_rhs = [&H, &problem](double s, const double* y, double* dy) {
    dy[0] = y[1];
    dy[1] = H(M_PI - s) * y[1] - problem.lambda * y[0];
  };
  std::vector<double> w_state = {series_value(sol.frobenius_end, eps),
                                 series_derivative(sol.frobenius_end, eps)};
  double w_mid = 0.0, ws_mid = 0.0;
  integrate_to_grid(backward_rhs, w_state, eps, s_targets,
                    [&](std::size_t i, const std::vector<double>& y) {
                      if (s_grid_index[i] < 0) {
                        w_mid = y[0];
                        ws_mid = y[1];
                      } else {
                        w_at[s_grid_index[i]] = y[0];
                        wp_at[s_grid_index[i]] = -y[1];
                      }
                    },
                    ode_opts);
  for (int i = grid_size - 1; i > mid; --i) {
    const double s = M_PI - grid[i];
    if (s <= eps) {
      w_at[i] = series_value(sol.frobenius_end, s);
      wp_at[i] = -series_derivative(sol.frobenius_end, s);
    }
  }

  // Best multiple of the endpoint branch matching (value, slope) at the
  // midpoint; the relative defect is the smoothness measure at pi.
  const double wp_mid = -ws_mid;
  const double scale_sq = w_mid * w_mid + wp_mid * wp_mid;
  const double amplitude = (y_mid * w_mid + yp_mid * wp_mid) / scale_sq;
  const double dv = y_mid - amplitude * w_mid, dp = yp_mid - amplitude * wp_mid;
  const double norm = std::hypot(y_mid, yp_mid);
  sol.matching_defect = std::hypot(dv, dp) / std::max(norm, 1e-300);
  sol.stitched = sol.matching_defect <= opts.matching_tol;

  const double probe = 5e-4;
  if (sol.stitched) {
    for (int i = mid + 1; i < grid_size; ++i) {
      sol.phi.values[i] = amplitude * w_at[i];
      sol.phi_prime.values[i] = amplitude * wp_at[i];
    }
    sol.phi_end = amplitude;  // w(0) = 1 by normalization
    sol.phi_prime_end = extrapolate_to_zero(
        -amplitude * series_derivative(sol.frobenius_end, probe),
        -amplitude * series_derivative(sol.frobenius_end, 2 * probe),
        -amplitude * series_derivative(sol.frobenius_end, 3 * probe));
  } else {
    // Not smooth at pi: keep integrating the forward branch toward the
    // endpoint; the singular mode now carries the solution itself.
    std::vector<double> targets;
    const double stop = M_PI - probe;
    for (int i = mid + 1; i < grid_size; ++i)
      if (grid[i] < M_PI - 3 * probe) targets.push_back(grid[i]);
    targets.push_back(M_PI - 3 * probe);
    targets.push_back(M_PI - 2 * probe);
    targets.push_back(stop);
    std::vector<double> probes_v(3), probes_p(3);
    std::size_t n_grid_targets = targets.size() - 3;
    integrate_to_grid(forward_rhs, state, grid[mid], targets,
                      [&](std::size_t i, const std::vector<double>& y) {
                        if (i < n_grid_targets) {
                          sol.phi.values[mid + 1 + i] = y[0];
                          sol.phi_prime.values[mid + 1 + i] = y[1];
                        } else {
                          probes_v[i - n_grid_targets] = y[0];
                          probes_p[i - n_grid_targets] = y[1];
                        }
                      },
                      ode_opts);
    sol.phi_end = extrapolate_to_zero(probes_v[2], probes_v[1], probes_v[0]);
    sol.phi_prime_end = extrapolate_to_zero(probes_p[2], probes_p[1], probes_p[0]);
    for (int i = mid + 1; i < grid_size; ++i) {
      if (grid[i] < M_PI - 3 * probe) continue;
      // Grid points inside the probe margin (always r = pi, more only on
      // very dense grids): fill from the same extrapolation data.
      sol.phi.values[i] = sol.phi_end;
      sol.phi_prime.values[i] = sol.phi_prime_end;
    }
  }
  return sol;
}

CosPolynomial phi_polynomial(const ExponentPair& pair, int k) {
  if (k < 0) throw std::invalid_argument("phi_polynomial: k must be >= 0");
  if (pair.alpha + pair.beta <= 0)
    throw std::domain_error("phi_polynomial: alpha + beta must be > 0");
  const Rational lambda = spectrum_exact(pair, k);
  std::vector<Rational> a(k + 3, Rational(0));
  a[k] = 1;
  for (int i = k - 1; i >= 0; --i) {
    const Rational divisor = Rational(k - i) * (k + i + pair.alpha + pair.beta);
    a[i] = (pair.beta * (i + 1) * a[i + 1] - Rational((i + 1)) * (i + 2) * a[i + 2]) / divisor;
  }
  a.resize(k + 1);
  Rational sum = 0;
  for (const Rational& c : a) sum += c;
  if (sum == 0) throw std::runtime_error("phi_polynomial: degenerate normalization");
  for (Rational& c : a) c /= sum;
  CosPolynomial p(std::move(a));
  if (!ode_residual_poly(p, pair, lambda).is_zero())
    throw std::logic_error("phi_polynomial: recursion output fails the equation");
  return p;
}

CosPolynomial ode_residual_poly(const CosPolynomial& p, const ExponentPair& pair,
                                const Rational& lambda) {
  const CosPolynomial x(std::vector<Rational>{0, 1});
  const CosPolynomial one_minus_x2(std::vector<Rational>{1, 0, -1});
  const CosPolynomial damping =
      x.scaled(pair.alpha + pair.beta + 1) + CosPolynomial(std::vector<Rational>{pair.beta});
  return one_minus_x2 * p.derivative().derivative() - damping * p.derivative() +
         p.scaled(lambda);
}

namespace {

double stencil_residual(const std::vector<double>& grid, const std::vector<double>& values,
                        const ExponentPair& pair, double lambda) {
  const std::size_t n = grid.size();
  if (n < 9) throw std::invalid_argument("phi_residual: grid too small");
  const double h = grid[1] - grid[0];
  for (std::size_t i = 1; i + 1 < n; ++i)
    if (std::abs(grid[i + 1] - grid[i] - h) > 1e-9)
      throw std::invalid_argument("phi_residual: grid must be uniform");
  const double margin = std::max(0.05, 4.0 * h);
  double worst = 0.0;
  for (std::size_t i = 3; i + 3 < n; ++i) {
    const double r = grid[i];
    if (r < margin || r > M_PI - margin) continue;
    const double d1 = (values[i + 1] - values[i - 1]) * (3.0 / 4.0) -
                      (values[i + 2] - values[i - 2]) * (3.0 / 20.0) +
                      (values[i + 3] - values[i - 3]) * (1.0 / 60.0);
    const double d2 = -values[i] * (49.0 / 18.0) +
                      (values[i + 1] + values[i - 1]) * (3.0 / 2.0) -
                      (values[i + 2] + values[i - 2]) * (3.0 / 20.0) +
                      (values[i + 3] + values[i - 3]) * (1.0 / 90.0);
    const double res =
        d2 / (h * h) + mean_curvature(pair, r) * d1 / h + lambda * values[i];
    worst = std::max(worst, std::abs(res));
  }
  return worst;
}

}  // namespace

double phi_residual(const PhiSolution& solution, const RadialODEProblem& problem) {
  return stencil_residual(solution.phi.grid, solution.phi.values, problem.exponents,
                          problem.lambda);
}

double phi_residual(const CosPolynomial& p, const RadialODEProblem& problem, int grid_size) {
  const CosPolynomial d1 = p.derivative();
  const CosPolynomial d2 = d1.derivative();
  double worst = 0.0;
  for (int i = 1; i < grid_size - 1; ++i) {
    const double r = M_PI * i / (grid_size - 1);
    const double x = std::cos(r), s = std::sin(r);
    // Phi' = -sin r P'(cos r), Phi'' = -cos r P'(cos r) + sin^2 r P''(cos r).
    const double phi_p = -s * d1(x);
    const double phi_pp = -x * d1(x) + s * s * d2(x);
    worst = std::max(worst, std::abs(phi_pp + mean_curvature(problem.exponents, r) * phi_p +
                                     problem.lambda * p(x)));
  }
  return worst;
}

}  // namespace harmon
