#include "harmon/trig_poly.hpp"

#include <json.hpp>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace harmon {

namespace {

void trim(std::vector<Rational>& coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

}  // namespace

CosPolynomial::CosPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim(coeffs_);
}

CosPolynomial CosPolynomial::from_doubles(const std::vector<double>& coeffs) {
  std::vector<Rational> exact;
  exact.reserve(coeffs.size());
  for (double c : coeffs) exact.emplace_back(c);
  return CosPolynomial(std::move(exact));
}

const Rational& CosPolynomial::coeff(int i) const {
  static const Rational zero{0};
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[static_cast<std::size_t>(i)];
}

std::vector<double> CosPolynomial::coeff_doubles() const {
  std::vector<double> out;
  out.reserve(coeffs_.size());
  for (const Rational& c : coeffs_) out.push_back(to_double(c));
  return out;
}

double CosPolynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

std::complex<double> CosPolynomial::operator()(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + to_double(*it);
  return acc;
}

Rational CosPolynomial::eval_exact(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double CosPolynomial::eval_angle(double r) const { return (*this)(std::cos(r)); }

CosPolynomial CosPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return CosPolynomial();
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<int>(i);
  return CosPolynomial(std::move(d));
}

CosPolynomial CosPolynomial::operator+(const CosPolynomial& other) const {
  std::vector<Rational> sum(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < sum.size(); ++i)
    sum[i] = coeff(static_cast<int>(i)) + other.coeff(static_cast<int>(i));
  return CosPolynomial(std::move(sum));
}

CosPolynomial CosPolynomial::operator-(const CosPolynomial& other) const {
  return *this + other.scaled(-1);
}

CosPolynomial CosPolynomial::operator*(const CosPolynomial& other) const {
  if (is_zero() || other.is_zero()) return CosPolynomial();
  std::vector<Rational> prod(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      prod[i + j] += coeffs_[i] * other.coeffs_[j];
  return CosPolynomial(std::move(prod));
}

CosPolynomial CosPolynomial::scaled(const Rational& factor) const {
  std::vector<Rational> out = coeffs_;
  for (Rational& c : out) c *= factor;
  return CosPolynomial(std::move(out));
}

std::string CosPolynomial::to_json() const {
  nlohmann::json j;
  j["coeffs"] = coeff_doubles();
  return j.dump();
}

CosPolynomial cos_multiple_angle(int m) {
  if (m < 0) throw std::invalid_argument("cos_multiple_angle: m must be >= 0");
  CosPolynomial prev(std::vector<Rational>{1});      // cos(0 r)
  if (m == 0) return prev;
  CosPolynomial cur(std::vector<Rational>{0, 1});    // cos(r)
  const CosPolynomial two_x(std::vector<Rational>{0, 2});
  for (int k = 1; k < m; ++k) {
    CosPolynomial next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace {

using Complex = std::complex<double>;

std::vector<Complex> raw_roots(const std::vector<double>& coeffs) {
  const int deg = static_cast<int>(coeffs.size()) - 1;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -coeffs[i] / coeffs.back();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  std::vector<Complex> out(deg);
  for (int i = 0; i < deg; ++i) out[i] = solver.eigenvalues()[i];
  return out;
}

void polish(const CosPolynomial& p, const CosPolynomial& dp, std::vector<Complex>& roots) {
  for (Complex& z : roots) {
    for (int iter = 0; iter < 20; ++iter) {
      const Complex d = dp(z);
      if (std::abs(d) == 0.0) break;
      const Complex step = p(z) / d;
      z -= step;
      if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(z))) break;
    }
  }
}

}  // namespace

RootSet roots(const CosPolynomial& p) {
  if (p.degree() < 1)
    throw std::invalid_argument("roots: polynomial must have degree >= 1");
  std::vector<Complex> raw = raw_roots(p.coeff_doubles());
  polish(p, p.derivative(), raw);
  std::sort(raw.begin(), raw.end(), [](const Complex& a, const Complex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  // Companion eigenvalues of an exact double root split by about sqrt(eps);
  // merge clusters at 1e-7 so those report one root of multiplicity two,
  // while the residual keeps track of how trustworthy the cluster is.
  RootSet set;
  for (std::size_t i = 0; i < raw.size();) {
    std::size_t j = i + 1;
    Complex sum = raw[i];
    while (j < raw.size() &&
           std::abs(raw[j] - raw[i]) < 1e-7 * std::max(1.0, std::abs(raw[i]))) {
      sum += raw[j];
      ++j;
    }
    set.roots.push_back(sum / static_cast<double>(j - i));
    set.multiplicities.push_back(static_cast<int>(j - i));
    i = j;
  }
  for (const Complex& z : set.roots) set.residual = std::max(set.residual, std::abs(p(z)));
  return set;
}

std::string RootSet::to_json() const {
  nlohmann::json j;
  j["roots"] = nlohmann::json::array();
  for (std::size_t i = 0; i < roots.size(); ++i)
    j["roots"].push_back({{"re", roots[i].real()},
                          {"im", roots[i].imag()},
                          {"multiplicity", multiplicities[i]}});
  j["residual"] = residual;
  return j.dump();
}

namespace {

double cross(const Complex& o, const Complex& a, const Complex& b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

double segment_distance(const Complex& a, const Complex& b, const Complex& q) {
  const Complex ab = b - a;
  const double len_sq = std::norm(ab);
  if (len_sq == 0.0) return std::abs(q - a);
  const double t = std::clamp(((q - a) * std::conj(ab)).real() / len_sq, 0.0, 1.0);
  return std::abs(q - (a + t * ab));
}

}  // namespace

bool points_in_hull(const std::vector<Complex>& hull_points,
                    const std::vector<Complex>& queries, double tol) {
  if (hull_points.empty()) return queries.empty();
  // Andrew monotone chain; collinear input degenerates to a segment below.
  std::vector<Complex> pts = hull_points;
  std::sort(pts.begin(), pts.end(), [](const Complex& a, const Complex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Complex& a, const Complex& b) {
                          return std::abs(a - b) < 1e-14;
                        }),
            pts.end());
  std::vector<Complex> hull;
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t base = hull.size();
    for (const Complex& pt : pts) {
      while (hull.size() >= base + 2 &&
             cross(hull[hull.size() - 2], hull.back(), pt) <= 0.0)
        hull.pop_back();
      hull.push_back(pt);
    }
    hull.pop_back();
    std::reverse(pts.begin(), pts.end());
  }
  if (hull.size() < 3) {
    // Point or segment hull: fall back to plain distance.
    const Complex a = pts.front(), b = pts.back();
    return std::all_of(queries.begin(), queries.end(), [&](const Complex& q) {
      return segment_distance(a, b, q) <= tol;
    });
  }
  return std::all_of(queries.begin(), queries.end(), [&](const Complex& q) {
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const Complex& a = hull[i];
      const Complex& b = hull[(i + 1) % hull.size()];
      // Signed distance to the CCW edge; negative means outside.
      if (cross(a, b, q) / std::abs(b - a) < -tol) return false;
    }
    return true;
  });
}

bool gauss_lucas_check(const CosPolynomial& p, double tol) {
  if (p.degree() < 2) return true;  // derivative has no roots
  return points_in_hull(roots(p).roots, roots(p.derivative()).roots, tol);
}

namespace {

std::vector<double> real_simple_roots(const CosPolynomial& p, double tol,
                                      const char* what) {
  const RootSet set = roots(p);
  std::vector<double> reals;
  for (std::size_t i = 0; i < set.roots.size(); ++i) {
    if (std::abs(set.roots[i].imag()) > tol)
      throw std::domain_error(std::string("interlacing_check: non-real roots of ") + what);
    for (int m = 0; m < set.multiplicities[i]; ++m) reals.push_back(set.roots[i].real());
  }
  std::sort(reals.begin(), reals.end());
  return reals;
}

}  // namespace

bool interlacing_check(const CosPolynomial& p, double tol) {
  if (p.degree() < 2) return p.degree() == 1;
  const std::vector<double> outer = real_simple_roots(p, tol, "p");
  const std::vector<double> inner = real_simple_roots(p.derivative(), tol, "p'");
  if (inner.size() + 1 != outer.size()) return false;
  for (std::size_t i = 0; i + 1 < outer.size(); ++i)
    if (!(outer[i + 1] - outer[i] > tol)) return false;
  for (std::size_t i = 0; i < inner.size(); ++i)
    if (!(inner[i] - outer[i] > tol) || !(outer[i + 1] - inner[i] > tol)) return false;
  return true;
}

DensityFormFit fit_density_form(const RadialProfile& density) {
  density.validate();
  const double lo = 0.15, hi = M_PI - 0.15;
  std::vector<double> r_window, v_window;
  for (std::size_t i = 0; i < density.grid.size(); ++i) {
    const double r = density.grid[i];
    if (r < lo || r > hi) continue;
    if (!(density.values[i] > 0.0))
      throw std::domain_error("fit_density_form: nonpositive sample in the fit window");
    r_window.push_back(r);
    v_window.push_back(density.values[i]);
  }
  if (r_window.size() < 8)
    throw std::runtime_error("fit_density_form: too few samples in the fit window");

  // log Omega^2 = log C + sigma log(1 - cos r) + tau log(1 + cos r)
  Eigen::MatrixXd basis(r_window.size(), 3);
  Eigen::VectorXd target(r_window.size());
  for (std::size_t i = 0; i < r_window.size(); ++i) {
    basis(i, 0) = 1.0;
    basis(i, 1) = std::log(1.0 - std::cos(r_window[i]));
    basis(i, 2) = std::log(1.0 + std::cos(r_window[i]));
    target[i] = 2.0 * std::log(v_window[i]);
  }
  const Eigen::Vector3d sol = basis.colPivHouseholderQr().solve(target);

  DensityFormFit fit;
  fit.sigma = sol[1];
  fit.tau = sol[2];
  const double beta_fit = 0.5 * (fit.sigma - fit.tau);
  fit.alpha = static_cast<int>(std::lround(fit.tau));
  fit.beta = static_cast<int>(std::lround(beta_fit));
  const bool near_integer = std::abs(fit.tau - fit.alpha) < 0.05 &&
                            std::abs(beta_fit - fit.beta) < 0.05 &&
                            fit.alpha >= 0 && fit.beta >= 0;
  fit.c = std::pow(4.0, fit.beta);
  if (near_integer) {
    const int sigma_int = fit.alpha + 2 * fit.beta, tau_int = fit.alpha;
    for (std::size_t i = 0; i < r_window.size(); ++i) {
      const double form_sq = fit.c * std::pow(1.0 - std::cos(r_window[i]), sigma_int) *
                             std::pow(1.0 + std::cos(r_window[i]), tau_int);
      fit.residual =
          std::max(fit.residual, std::abs(v_window[i] * v_window[i] / form_sq - 1.0));
    }
  }
  if (!near_integer || fit.residual > 1e-4)
    throw std::runtime_error("fit_density_form: profile is not of the two-exponent form");
  return fit;
}

}  // namespace harmon
