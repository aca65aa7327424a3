#pragma once

#include <Eigen/Core>

#include <functional>
#include <vector>

namespace harmon {

/** Gauss-Legendre rule on an interval [a, b]. */
struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;

  double integrate(const std::function<double(double)>& f) const;
};

/** n-point Gauss-Legendre rule; exact for polynomials of degree 2n-1, and for
    analytic integrands the error decays geometrically in n. */
Quadrature gauss_legendre(int n, double a, double b);

/** Product rule on the unit 2-sphere: Gauss-Legendre in cos(theta) times the
    uniform trapezoid rule in azimuth.  Weights sum to 4 pi; exact for
    polynomial integrands of degree <= min(2 n_polar - 1, n_azimuth - 1). */
struct SphereQuadrature {
  std::vector<Eigen::Vector3d> points;
  std::vector<double> weights;

  double integrate(const std::function<double(const Eigen::Vector3d&)>& f) const;
};

SphereQuadrature sphere_product_rule(int n_polar, int n_azimuth);

/** Surface measure of the unit sphere S^{n-1}: 2 pi^{n/2} / Gamma(n/2). */
double unit_sphere_volume(int n);

}  // namespace harmon
