#pragma once

#include "harmon/profile.hpp"
#include "harmon/rational.hpp"

#include <complex>
#include <string>
#include <vector>

namespace harmon {

/** Polynomial P(x) with exact rational coefficients, read as the radial
    function r |-> P(cos r).  Coefficients are stored ascending. */
class CosPolynomial {
 public:
  CosPolynomial() = default;
  explicit CosPolynomial(std::vector<Rational> coeffs);
  static CosPolynomial from_doubles(const std::vector<double>& coeffs);

  /** Degree after trimming trailing zeros; -1 for the zero polynomial. */
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /** Coefficient of x^i, zero beyond the degree. */
  const Rational& coeff(int i) const;
  std::vector<double> coeff_doubles() const;

  double operator()(double x) const;
  std::complex<double> operator()(std::complex<double> z) const;
  Rational eval_exact(const Rational& x) const;
  /** P(cos r). */
  double eval_angle(double r) const;

  CosPolynomial derivative() const;

  CosPolynomial operator+(const CosPolynomial& other) const;
  CosPolynomial operator-(const CosPolynomial& other) const;
  CosPolynomial operator*(const CosPolynomial& other) const;
  CosPolynomial scaled(const Rational& factor) const;
  bool operator==(const CosPolynomial& other) const { return coeffs_ == other.coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }

  /** {"coeffs": [...]}, ascending. */
  std::string to_json() const;

 private:
  std::vector<Rational> coeffs_;  // trailing zeros trimmed
};

/** cos(m r) as a polynomial in cos r (the degree-m Chebyshev polynomial),
    by the exact recurrence cos((m+1)r) = 2 cos r cos(m r) - cos((m-1)r). */
CosPolynomial cos_multiple_angle(int m);

/** Roots with clustered multiplicities.  residual = max |p(root)| is the
    honesty check: near-multiple roots surface as a large residual rather
    than as fake exact multiplicities. */
struct RootSet {
  std::vector<std::complex<double>> roots;  // sorted by (re, im)
  std::vector<int> multiplicities;
  double residual = 0.0;

  std::string to_json() const;
};

/** Companion-matrix eigenvalues polished by Newton; throws
    std::invalid_argument for constant polynomials. */
RootSet roots(const CosPolynomial& p);

/** True when every query point lies in the convex hull of hull_points, up to
    a distance margin tol. */
bool points_in_hull(const std::vector<std::complex<double>>& hull_points,
                    const std::vector<std::complex<double>>& queries, double tol);

/** Roots of p' lie in the convex hull of the roots of p (up to tol).  Holds
    for every polynomial; the check exercises the hull machinery. */
bool gauss_lucas_check(const CosPolynomial& p, double tol = 1e-8);

/** All roots of p real and simple, and the roots of p' strictly interlace
    them, with margins above tol.  Throws std::domain_error when either root
    set has an imaginary part beyond tol. */
bool interlacing_check(const CosPolynomial& p, double tol = 1e-8);

/** Least-squares fit of a density profile (det J, the flat r^{n-1} factor
    kept in) to the two-exponent shape
    Omega^2 = C (1 - cos r)^sigma (1 + cos r)^tau on the window
    r in [0.15, pi - 0.15], followed by integer rounding to
    alpha = tau, beta = (sigma - tau)/2, C = 4^beta. */
struct DensityFormFit {
  double c = 1.0;      // 4^beta after rounding
  double sigma = 0.0;  // fitted, before rounding
  double tau = 0.0;
  int alpha = 0;
  int beta = 0;
  double residual = 0.0;  // max relative misfit of the rounded form
};

/** Throws std::domain_error on nonpositive samples inside the window and
    std::runtime_error when the rounded form misfits by more than 1e-4. */
DensityFormFit fit_density_form(const RadialProfile& density);

}  // namespace harmon
