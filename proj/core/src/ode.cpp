#include "harmon/ode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace harmon {

namespace {

// Dormand-Prince 5(4) tableau.  The last row of A equals the 5th-order
// weights b, so stage 7 is the FSAL evaluation; e = b - b* feeds the
// embedded 4th-order error estimate.
constexpr double A[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
constexpr double C[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double B[7] = {35.0 / 384,      0.0,      500.0 / 1113, 125.0 / 192,
                         -2187.0 / 6784,  11.0 / 84, 0.0};
constexpr double E[7] = {71.0 / 57600,  0.0,        -71.0 / 16695, 71.0 / 1920,
                         -17253.0 / 339200, 22.0 / 525, -1.0 / 40};

}  // namespace

void integrate_to_grid(
    const OdeRhs& f, std::vector<double>& state, double r0,
    std::span<const double> grid,
    const std::function<void(std::size_t, const std::vector<double>&)>& on_point,
    const OdeOptions& opts) {
  const std::size_t dim = state.size();
  std::vector<double> k[7];
  for (auto& stage : k) stage.resize(dim);
  std::vector<double> ytmp(dim), ynext(dim);

  double r = r0;
  const double span = grid.empty() ? 0.0 : grid.back() - r0;
  double h = span > 0.0 ? span * 1e-3 : 0.0;
  if (opts.max_step > 0.0) h = std::min(h, opts.max_step);

  for (std::size_t g = 0; g < grid.size(); ++g) {
    const double target = grid[g];
    if (!(target >= r)) throw std::invalid_argument("integrate_to_grid: grid not increasing");
    while (r < target) {
      const double hstep = std::min(h, target - r);
      if (hstep < 1e-14 * std::max(1.0, std::abs(r)))
        throw std::runtime_error("integrate_to_grid: step size underflow");
      for (int s = 0; s < 7; ++s) {
        for (std::size_t i = 0; i < dim; ++i) {
          double acc = state[i];
          for (int j = 0; j < s; ++j) acc += hstep * A[s][j] * k[j][i];
          ytmp[i] = acc;
        }
        f(r + C[s] * hstep, ytmp.data(), k[s].data());
      }
      double err_sq = 0.0;
      for (std::size_t i = 0; i < dim; ++i) {
        double dy = 0.0, de = 0.0;
        for (int s = 0; s < 7; ++s) {
          dy += B[s] * k[s][i];
          de += E[s] * k[s][i];
        }
        ynext[i] = state[i] + hstep * dy;
        const double scale =
            opts.abs_tol + opts.rel_tol * std::max(std::abs(state[i]), std::abs(ynext[i]));
        const double e = hstep * de / scale;
        err_sq += e * e;
      }
      const double err = std::sqrt(err_sq / dim);
      if (!std::isfinite(err)) {
        h = 0.2 * hstep;
        continue;
      }
      if (err <= 1.0) {
        r += hstep;
        state.swap(ynext);
        if (r >= target) r = target;  // absorb roundoff at the landing point
      }
      double factor = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
      factor = std::clamp(factor, 0.2, 5.0);
      h = hstep * factor;
      if (opts.max_step > 0.0) h = std::min(h, opts.max_step);
    }
    if (on_point) on_point(g, state);
  }
}

}  // namespace harmon
