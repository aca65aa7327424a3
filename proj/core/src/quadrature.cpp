#include "harmon/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace harmon {

double Quadrature::integrate(const std::function<double(double)>& f) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
  return sum;
}

Quadrature gauss_legendre(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  Quadrature rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Nodes on [-1, 1] by Newton iteration on P_n, started from the Chebyshev
  // approximation of the k-th root; converges in a handful of steps.
  for (int k = 0; k < (n + 1) / 2; ++k) {
    double x = std::cos(M_PI * (k + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    rule.nodes[k] = mid - half * x;
    rule.nodes[n - 1 - k] = mid + half * x;
    rule.weights[k] = half * w;
    rule.weights[n - 1 - k] = half * w;
  }
  return rule;
}

double SphereQuadrature::integrate(
    const std::function<double(const Eigen::Vector3d&)>& f) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) sum += weights[i] * f(points[i]);
  return sum;
}

SphereQuadrature sphere_product_rule(int n_polar, int n_azimuth) {
  if (n_polar < 1 || n_azimuth < 1)
    throw std::invalid_argument("sphere_product_rule: orders must be >= 1");
  const Quadrature polar = gauss_legendre(n_polar, -1.0, 1.0);
  SphereQuadrature rule;
  rule.points.reserve(static_cast<std::size_t>(n_polar) * n_azimuth);
  rule.weights.reserve(rule.points.capacity());
  const double dphi = 2.0 * M_PI / n_azimuth;
  for (int i = 0; i < n_polar; ++i) {
    const double u = polar.nodes[i];  // cos(theta)
    const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
    for (int j = 0; j < n_azimuth; ++j) {
      const double phi = dphi * j;
      rule.points.emplace_back(s * std::cos(phi), s * std::sin(phi), u);
      rule.weights.push_back(polar.weights[i] * dphi);
    }
  }
  return rule;
}

double unit_sphere_volume(int n) {
  if (n < 1) throw std::invalid_argument("unit_sphere_volume: n must be >= 1");
  return 2.0 * std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n);
}

}  // namespace harmon
