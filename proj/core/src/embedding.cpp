#include "harmon/embedding.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

namespace harmon {

namespace {

double simpson_integral(const std::vector<double>& grid, const std::vector<double>& f) {
  const std::size_t n = grid.size();
  if (n < 3) throw std::invalid_argument("simpson: need at least 3 samples");
  const double h = grid[1] - grid[0];
  for (std::size_t i = 1; i + 1 < n; ++i)
    if (std::abs(grid[i + 1] - grid[i] - h) > 1e-9)
      throw std::invalid_argument("simpson: grid must be uniform");
  double acc = 0.0;
  std::size_t last = (n % 2 == 1) ? n - 1 : n - 2;
  for (std::size_t i = 0; i + 2 <= last; i += 2)
    acc += (f[i] + 4.0 * f[i + 1] + f[i + 2]) * h / 3.0;
  if (n % 2 == 0) acc += 0.5 * h * (f[n - 2] + f[n - 1]);
  return acc;
}

Eigen::Vector3d random_unit(std::mt19937& rng) {
  std::normal_distribution<double> gauss;
  Eigen::Vector3d v(gauss(rng), gauss(rng), gauss(rng));
  return v.normalized();
}

Eigen::Vector3d random_tangent(std::mt19937& rng, const Eigen::Vector3d& p) {
  for (;;) {
    const Eigen::Vector3d w = random_unit(rng);
    const Eigen::Vector3d t = w - w.dot(p) * p;
    if (t.norm() > 1e-6) return t.normalized();
  }
}

}  // namespace

double weighted_norm(const ExponentPair& pair, const CosPolynomial& g, int nodes) {
  const Quadrature rule = gauss_legendre(nodes, 0.0, M_PI);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double r = rule.nodes[i];
    const double v = g(std::cos(r));
    acc += rule.weights[i] * v * v * density_from_exponents(pair, r);
  }
  return std::sqrt(acc);
}

double weighted_norm_derivative(const ExponentPair& pair, const CosPolynomial& g,
                                int nodes) {
  const CosPolynomial dg = g.derivative();
  const Quadrature rule = gauss_legendre(nodes, 0.0, M_PI);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double r = rule.nodes[i];
    const double v = -std::sin(r) * dg(std::cos(r));
    acc += rule.weights[i] * v * v * density_from_exponents(pair, r);
  }
  return std::sqrt(acc);
}

double weighted_norm(const ExponentPair& pair, const RadialProfile& profile) {
  profile.validate();
  std::vector<double> integrand(profile.size());
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const double r = profile.grid[i];
    const double w = (r <= 0.0 || r >= M_PI) ? 0.0 : density_from_exponents(pair, r);
    integrand[i] = profile.values[i] * profile.values[i] * w;
  }
  return std::sqrt(simpson_integral(profile.grid, integrand));
}

namespace {

EmbeddingConstants constants_from_norms(const ExponentPair& pair, double norm,
                                        double norm_derivative) {
  if (norm_derivative < 1e-12 * (1.0 + norm))
    throw std::domain_error("embedding_constants: radial function is constant");
  EmbeddingConstants ec;
  ec.n = pair.dimension();
  ec.norm = norm;
  ec.norm_derivative = norm_derivative;
  ec.c = std::sqrt(static_cast<double>(ec.n)) /
         (norm_derivative * std::sqrt(unit_sphere_volume(ec.n)));
  ec.big_c = std::sqrt(static_cast<double>(ec.n)) * norm / norm_derivative;
  return ec;
}

}  // namespace

EmbeddingConstants embedding_constants(const ExponentPair& pair, const CosPolynomial& g) {
  return constants_from_norms(pair, weighted_norm(pair, g),
                              weighted_norm_derivative(pair, g));
}

EmbeddingConstants embedding_constants(const ExponentPair& pair,
                                       const PhiSolution& solution) {
  return constants_from_norms(pair, weighted_norm(pair, solution.phi),
                              weighted_norm(pair, solution.phi_prime));
}

double screw_function_from_formula(const ExponentPair& pair, int k, double s) {
  const CosPolynomial p = phi_polynomial(pair, k);
  const EmbeddingConstants ec = embedding_constants(pair, p);
  const double c_sq = ec.big_c * ec.big_c;
  const double delta = M_PI - std::abs(M_PI - std::fmod(std::abs(s), 2.0 * M_PI));
  return 2.0 * c_sq * (1.0 - p(std::cos(delta)));
}

CircleCheck circle_check(const ExponentPair& pair) {
  const CosPolynomial p = phi_polynomial(pair, 1);
  const EmbeddingConstants ec = embedding_constants(pair, p);
  const double lambda1 = spectrum(pair, 1);
  const double beta = to_double(pair.beta);
  CircleCheck check;
  check.radius = std::sqrt(lambda1 / (lambda1 + beta)) * ec.big_c;
  const double c_sq = ec.big_c * ec.big_c;
  for (int i = 0; i <= 256; ++i) {
    const double s = 2.0 * M_PI * i / 256;
    const double delta = M_PI - std::abs(M_PI - std::fmod(std::abs(s), 2.0 * M_PI));
    const double screw = 2.0 * c_sq * (1.0 - p(std::cos(delta)));
    check.max_deviation =
        std::max(check.max_deviation, std::abs(screw - 2.0 * (1.0 - std::cos(s))));
  }
  return check;
}

std::vector<double> ScrewCurve::screw_samples() const {
  std::vector<double> s(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    s[i] = (points[i] - points[0]).squaredNorm();
  return s;
}

double ScrewCurve::stationarity_defect() const {
  const std::vector<double> s0 = screw_samples();
  double defect = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i)
    for (std::size_t j = 0; i + j < points.size(); ++j)
      defect = std::max(defect,
                        std::abs((points[i + j] - points[j]).squaredNorm() - s0[i]));
  return defect;
}

std::string ScrewCurve::to_csv() const {
  const Eigen::Index dim = points.empty() ? 0 : points.front().size();
  std::string out = "s";
  for (Eigen::Index d = 0; d < dim; ++d) out += ",x" + std::to_string(d + 1);
  out += "\n";
  char cell[32];
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::snprintf(cell, sizeof(cell), "%.17g", params[i]);
    out += cell;
    for (Eigen::Index d = 0; d < dim; ++d) {
      std::snprintf(cell, sizeof(cell), ",%.17g", points[i][d]);
      out += cell;
    }
    out += "\n";
  }
  return out;
}

Eigen::VectorXd Isometry::apply(const Eigen::VectorXd& x) const {
  return rotation * x + translation;
}

CongruenceResult congruence_recover(const ScrewCurve& a, const ScrewCurve& b, double tol) {
  const std::size_t n = a.points.size();
  if (n < 3 || b.points.size() != n)
    throw std::invalid_argument("congruence_recover: need two curves of equal length >= 3");
  const Eigen::Index dim = a.points.front().size();
  if (b.points.front().size() != dim)
    throw std::invalid_argument("congruence_recover: ambient dimensions differ");

  // A congruence exists iff all pairwise distances agree; for screw curves
  // that is exactly the statement that they share one screw function.
  double scale = 1.0, worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double da = (a.points[i] - a.points[j]).squaredNorm();
      const double db = (b.points[i] - b.points[j]).squaredNorm();
      worst = std::max(worst, std::abs(da - db));
      scale = std::max({scale, da, db});
    }
  if (worst > tol * scale)
    throw std::runtime_error("congruence_recover: screw functions differ");

  Eigen::VectorXd mean_a = Eigen::VectorXd::Zero(dim), mean_b = Eigen::VectorXd::Zero(dim);
  for (std::size_t i = 0; i < n; ++i) {
    mean_a += a.points[i];
    mean_b += b.points[i];
  }
  mean_a /= static_cast<double>(n);
  mean_b /= static_cast<double>(n);
  Eigen::MatrixXd cross = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t i = 0; i < n; ++i)
    cross += (b.points[i] - mean_b) * (a.points[i] - mean_a).transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(cross, Eigen::ComputeFullU | Eigen::ComputeFullV);

  CongruenceResult result;
  result.map.rotation = svd.matrixU() * svd.matrixV().transpose();
  result.map.translation = mean_b - result.map.rotation * mean_a;
  for (std::size_t i = 0; i < n; ++i)
    result.residual =
        std::max(result.residual, (result.map.apply(a.points[i]) - b.points[i]).norm());
  return result;
}

double basic_commutativity_check(const SphereFunction& f, const Eigen::Vector3d& p_raw,
                                 int azimuth_samples, double h) {
  if (azimuth_samples < 8) throw std::invalid_argument("commutativity: too few azimuth samples");
  const Eigen::Vector3d p = p_raw.normalized();
  // Orthonormal frame of the normal circle bundle at p.
  Eigen::Vector3d seed = std::abs(p.x()) < 0.9 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
  const Eigen::Vector3d e1 = (seed - seed.dot(p) * p).normalized();
  const Eigen::Vector3d e2 = p.cross(e1);

  auto average = [&](const std::function<double(const Eigen::Vector3d&)>& fun, double r) {
    double acc = 0.0;
    for (int j = 0; j < azimuth_samples; ++j) {
      const double psi = 2.0 * M_PI * j / azimuth_samples;
      acc += fun(std::cos(r) * p + std::sin(r) * (std::cos(psi) * e1 + std::sin(psi) * e2));
    }
    return acc / azimuth_samples;
  };

  double defect = 0.0;
  const int samples = 25;
  for (int i = 0; i < samples; ++i) {
    const double r = 0.2 + (M_PI - 0.4) * i / (samples - 1);
    const double a_m2 = average(f.value, r - 2 * h), a_m1 = average(f.value, r - h);
    const double a_0 = average(f.value, r);
    const double a_p1 = average(f.value, r + h), a_p2 = average(f.value, r + 2 * h);
    const double d1 = (a_m2 - 8.0 * a_m1 + 8.0 * a_p1 - a_p2) / (12.0 * h);
    const double d2 =
        (-a_m2 + 16.0 * a_m1 - 30.0 * a_0 + 16.0 * a_p1 - a_p2) / (12.0 * h * h);
    const double radial = -d2 - (std::cos(r) / std::sin(r)) * d1;
    defect = std::max(defect, std::abs(average(f.laplacian, r) - radial));
  }
  return defect;
}

RadialityCheck l2_radiality_check(const CosPolynomial& f, const CosPolynomial& g,
                                  const std::vector<double>& distances,
                                  int pairs_per_distance, unsigned seed) {
  if (distances.empty()) throw std::invalid_argument("l2_radiality_check: no distances");
  const SphereQuadrature rule = sphere_product_rule(64, 128);
  const ExponentPair sphere_pair{1, 0};
  std::mt19937 rng(seed);
  const bool same = f.coeffs() == g.coeffs();
  const double norm_sq = same ? std::pow(weighted_norm(sphere_pair, f), 2) : 0.0;

  RadialityCheck check;
  for (double d : distances) {
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (int pair_i = 0; pair_i < pairs_per_distance; ++pair_i) {
      const Eigen::Vector3d p = random_unit(rng);
      const Eigen::Vector3d t = random_tangent(rng, p);
      const Eigen::Vector3d q = std::cos(d) * p + std::sin(d) * t;
      double inner = 0.0;
      for (std::size_t i = 0; i < rule.points.size(); ++i)
        inner += rule.weights[i] * f(p.dot(rule.points[i])) * g(q.dot(rule.points[i]));
      if (first || inner < lo) lo = inner;
      if (first || inner > hi) hi = inner;
      first = false;
      if (same)
        check.formula_gap = std::max(
            check.formula_gap, std::abs(inner - 2.0 * M_PI * norm_sq * f(std::cos(d))));
    }
    check.max_spread = std::max(check.max_spread, hi - lo);
  }
  return check;
}

S2EmbeddingReport s2_explicit_embedding(int resolution, unsigned seed) {
  if (resolution < 16)
    throw std::invalid_argument("s2_explicit_embedding: resolution must be >= 16");
  const ExponentPair pair{1, 0};
  const CosPolynomial phi1 = phi_polynomial(pair, 1);
  const EmbeddingConstants ec = embedding_constants(pair, phi1);
  const SphereQuadrature rule = sphere_product_rule(resolution, 2 * resolution);

  // Coordinate eigenfunctions q_i, normalized by their quadrature L^2 norms.
  Eigen::Vector3d axis_norm = Eigen::Vector3d::Zero();
  for (std::size_t i = 0; i < rule.points.size(); ++i)
    axis_norm += rule.weights[i] * rule.points[i].cwiseProduct(rule.points[i]);
  const Eigen::Vector3d inv_h = axis_norm.cwiseSqrt().cwiseInverse();

  auto embed = [&](const Eigen::Vector3d& p) {
    Eigen::Vector3d acc = Eigen::Vector3d::Zero();
    for (std::size_t i = 0; i < rule.points.size(); ++i)
      acc += rule.weights[i] * phi1(p.dot(rule.points[i])) *
             rule.points[i].cwiseProduct(inv_h);
    return (ec.c * acc).eval();
  };

  std::mt19937 rng(seed);
  S2EmbeddingReport report;

  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Vector3d p = random_unit(rng);
    report.radius_defect =
        std::max(report.radius_defect, std::abs(embed(p).norm() - ec.big_c));
  }

  const double delta = 1e-4;
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Vector3d p = random_unit(rng);
    const Eigen::Vector3d v = random_tangent(rng, p);
    const Eigen::Vector3d fwd = embed(std::cos(delta) * p + std::sin(delta) * v);
    const Eigen::Vector3d bwd = embed(std::cos(delta) * p - std::sin(delta) * v);
    report.metric_distortion =
        std::max(report.metric_distortion, std::abs((fwd - bwd).norm() / (2.0 * delta) - 1.0));
  }

  auto geodesic_image = [&](const Eigen::Vector3d& p, const Eigen::Vector3d& v) {
    ScrewCurve curve;
    const int samples = 512;
    curve.params.resize(samples);
    curve.points.resize(samples);
    for (int i = 0; i < samples; ++i) {
      const double s = 2.0 * M_PI * i / samples;
      curve.params[i] = s;
      curve.points[i] = embed(std::cos(s) * p + std::sin(s) * v);
    }
    return curve;
  };
  const Eigen::Vector3d pa = random_unit(rng), va = random_tangent(rng, pa);
  const Eigen::Vector3d pb = random_unit(rng), vb = random_tangent(rng, pb);
  report.geodesic_a = geodesic_image(pa, va);
  report.geodesic_b = geodesic_image(pb, vb);

  Eigen::Vector3d center = Eigen::Vector3d::Zero();
  for (const auto& pt : report.geodesic_a.points) center += pt.head<3>();
  center /= static_cast<double>(report.geodesic_a.points.size());
  double mean_radius = 0.0;
  for (const auto& pt : report.geodesic_a.points)
    mean_radius += (pt.head<3>() - center).norm();
  mean_radius /= static_cast<double>(report.geodesic_a.points.size());
  report.geodesic_radius = mean_radius;
  for (const auto& pt : report.geodesic_a.points)
    report.circle_deviation = std::max(
        report.circle_deviation, std::abs((pt.head<3>() - center).norm() - mean_radius));

  // Screw law against the closed-form model, over all sample offsets.
  const auto& pts = report.geodesic_a.points;
  const int samples = static_cast<int>(pts.size());
  std::vector<double> model(samples);
  const double c_sq = ec.big_c * ec.big_c;
  for (int j = 0; j < samples; ++j) {
    const double s = report.geodesic_a.params[j];
    const double d = M_PI - std::abs(M_PI - std::fmod(std::abs(s), 2.0 * M_PI));
    model[j] = 2.0 * c_sq * (1.0 - phi1(std::cos(d)));
  }
  for (int i = 0; i < samples; i += 7)
    for (int j = 0; j < samples; ++j)
      report.screw_defect = std::max(
          report.screw_defect,
          std::abs((pts[(i + j) % samples] - pts[i]).squaredNorm() - model[j]));

  report.congruence_residual =
      congruence_recover(report.geodesic_a, report.geodesic_b).residual;

  const Eigen::Vector3d p0 = random_unit(rng);
  double avg_norm_sq = 0.0;
  for (std::size_t i = 0; i < rule.points.size(); ++i) {
    const double v = phi1(p0.dot(rule.points[i]));
    avg_norm_sq += rule.weights[i] * v * v;
  }
  report.parseval_defect = std::abs(3.0 * avg_norm_sq - 4.0 * M_PI);
  return report;
}

}  // namespace harmon
