#pragma once

#include "harmon/model_spaces.hpp"
#include "harmon/profile.hpp"
#include "harmon/trig_poly.hpp"

#include <vector>

namespace harmon {

/** Radial eigenvalue problem y'' + H(r) y' + lambda y = 0 on (0, pi) with
    H(r) = ((alpha + beta) cos r + beta) / sin r, normalized by y(0) = 1,
    y'(0) = 0.  Requires alpha + beta > 0 and lambda >= 0. */
struct RadialODEProblem {
  ExponentPair exponents;
  double lambda = 0.0;
};

/** Mean curvature H(r) of the compact two-exponent density; r in (0, pi). */
double mean_curvature(const ExponentPair& pair, double r);

struct PhiOptions {
  /** Both r = 0 and r = pi are regular singular points; integration starts
      from an even Frobenius series evaluated at this offset. */
  double launch_radius = 1e-3;
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  /** Two-branch mismatch below which the solution counts as smooth at pi and
      the endpoint branch supplies the right half. */
  double matching_tol = 1e-6;
};

struct PhiSolution {
  RadialProfile phi;        // label "phi(lambda=<value>)"
  RadialProfile phi_prime;
  /** Even-power series coefficients (1, c2, c4, ...) at each singular
      endpoint; the endpoint branch is normalized to value 1 at r = pi. */
  std::vector<double> frobenius_zero;
  std::vector<double> frobenius_end;
  double lambda = 0.0;
  double phi_end = 0.0;           // Phi(pi)
  double phi_prime_end = 0.0;     // extrapolated Phi'(pi)
  /** Relative defect between the forward branch and the best multiple of the
      regular endpoint branch at the midpoint.  Small exactly when lambda is
      an eigenvalue (the solution extends smoothly through pi); the far grid
      half then comes from the endpoint branch, which forward integration
      cannot deliver (the s^{1-alpha} singular mode swamps it). */
  double matching_defect = 0.0;
  bool stitched = false;
};

/** Integrates the initial value problem on a uniform grid of grid_size
    points spanning [0, pi]. */
PhiSolution solve_phi(const RadialODEProblem& problem, int grid_size = 801,
                      const PhiOptions& opts = {});

/** Exact eigenfunction polynomial of degree k: Phi_{lambda_k}(r) = P(cos r)
    from the three-term coefficient recursion, normalized by P(1) = 1. */
CosPolynomial phi_polynomial(const ExponentPair& pair, int k);

/** Exact residual polynomial (1 - x^2) P'' - ((alpha + beta + 1) x + beta) P'
    + lambda P; composing with x = cos r gives Phi'' + H Phi' + lambda Phi.
    Identically zero exactly when P(cos r) solves the radial problem. */
CosPolynomial ode_residual_poly(const CosPolynomial& p, const ExponentPair& pair,
                                const Rational& lambda);

/** Max of |Phi'' + H Phi' + lambda Phi| over interior grid points, sixth-order
    central differences, margins of max(0.05, 4h) at both endpoints. */
double phi_residual(const PhiSolution& solution, const RadialODEProblem& problem);
/** Same residual for an exact polynomial solution, derivatives analytic,
    evaluated on a uniform grid of grid_size interior points. */
double phi_residual(const CosPolynomial& p, const RadialODEProblem& problem,
                    int grid_size = 801);

}  // namespace harmon
