#pragma once

#include "harmon/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace harmon {

/** The two-point homogeneous model geometries: Euclidean space, the round
    sphere, the projective spaces over C, H, O, and their hyperbolic duals.
    Every member is harmonic, and the compact non-flat ones realize every
    density shape the toolkit knows in closed form. */
enum class Family {
  Flat,
  Sphere,
  ComplexProjective,
  QuaternionicProjective,
  OctonionicProjective,
  RealHyperbolic,
  ComplexHyperbolic,
  QuaternionicHyperbolic,
  OctonionicHyperbolic,
};

struct ModelSpace {
  Family family = Family::Sphere;
  /** Family parameter: the real dimension n for Flat/Sphere/RealHyperbolic,
      the base-field dimension m otherwise (fixed at 2 for the octonionic
      planes). */
  int param = 2;

  int dimension() const;
  bool compact() const;
  bool flat() const;
  bool hyperbolic() const;
  /** pi for the compact families, +infinity otherwise. */
  double diameter() const;
  /** Canonical id, e.g. "sphere:3", "cpn:2", "op2". */
  std::string id() const;
};

/** Parses ids of the form flat:<n>, sphere:<n>, cpn:<m>, hpn:<m>, op2,
    rhn:<n>, chn:<m>, qhn:<m>, oh2. Throws std::invalid_argument on unknown
    ids or out-of-range parameters. */
ModelSpace parse_space(std::string_view id);

/** Eigenvalues (with multiplicities) of the radial curvature operator
    R_gamma = R(., gamma') gamma' restricted to the normal space of a unit
    geodesic; multiplicities sum to n-1.  Constant along the geodesic for all
    model spaces. */
struct CurvatureSpectrum {
  std::vector<std::pair<double, int>> lines;  // (eigenvalue, multiplicity)
  int total_multiplicity() const;
};

CurvatureSpectrum curvature_spectrum(const ModelSpace& space);

/** Volume density with the flat factor kept in: Omega(r) = r^{n-1} omega(r),
    i.e. det of the associated Jacobi tensor.  Closed form as the product of
    scalar Jacobi solutions sin(sqrt(k) r)/sqrt(k) over the curvature spectrum.
    Domain is 0 < r < diameter; throws std::domain_error outside. */
double closed_form_density(const ModelSpace& space, double r);

/** Exponent pair (alpha, beta) of the compact density form
    Omega(r) = 2^beta (1 - cos r)^beta (sin r)^alpha.
    alpha counts the curvature-1 directions, 2*beta the curvature-1/4 ones,
    so alpha + 2 beta = n - 1. */
struct ExponentPair {
  Rational alpha;
  Rational beta;
  /** n = alpha + 2 beta + 1; requires the sum to be a positive integer. */
  int dimension() const;
  bool operator==(const ExponentPair& other) const {
    return alpha == other.alpha && beta == other.beta;
  }
};

/** Defined for the compact non-flat families only; throws std::domain_error
    otherwise. */
ExponentPair exponents(const ModelSpace& space);

/** Evaluates 2^beta (1 - cos r)^beta (sin r)^alpha. */
double density_from_exponents(const ExponentPair& pair, double r);

/** Radial Ricci curvature ric(gamma', gamma') = alpha + beta/2 of a compact
    non-flat model space; throws std::domain_error for flat and hyperbolic
    inputs. */
double ricci(const ModelSpace& space);
Rational ricci_exact(const ExponentPair& pair);

/** k-th radial Laplace eigenvalue lambda_k = k (k + alpha + beta), k >= 0. */
double spectrum(const ExponentPair& pair, int k);
Rational spectrum_exact(const ExponentPair& pair, int k);

/** Verifies the first-eigenvalue identities lambda_1 = n - beta and
    lambda_1 = (2 ric + n + 2)/3 in exact arithmetic.  Requires
    alpha + 2 beta = n - 1 (throws std::domain_error otherwise). */
bool ros_equality_check(const ExponentPair& pair, int n);

/** All compact non-flat model spaces of dimension 2..max_dim. */
std::vector<ModelSpace> compact_catalog(int max_dim = 16);
/** All hyperbolic model spaces of dimension 2..max_dim. */
std::vector<ModelSpace> hyperbolic_catalog(int max_dim = 16);
/** Exponent pairs of compact_catalog(max_dim); distinct by construction. */
std::vector<ExponentPair> catalog_exponent_pairs(int max_dim = 16);

}  // namespace harmon
