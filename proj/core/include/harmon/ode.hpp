#pragma once

#include <functional>
#include <span>
#include <vector>

namespace harmon {

/** Right-hand side of y' = f(r, y); writes the derivative into dydr. */
using OdeRhs = std::function<void(double r, const double* y, double* dydr)>;

struct OdeOptions {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  double max_step = 0.0;  // 0: no cap
};

/** Integrates y' = f(r, y) from r0 with the adaptive Dormand-Prince 5(4)
    pair, landing exactly on every grid point (strictly increasing,
    grid.front() >= r0) and reporting the state there.  state holds y(r0) on
    entry and y(grid.back()) on return.  Throws std::runtime_error if the
    step size underflows (stiff or singular right-hand side). */
void integrate_to_grid(
    const OdeRhs& f, std::vector<double>& state, double r0,
    std::span<const double> grid,
    const std::function<void(std::size_t, const std::vector<double>&)>& on_point,
    const OdeOptions& opts = {});

}  // namespace harmon
