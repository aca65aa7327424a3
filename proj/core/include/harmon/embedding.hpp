#pragma once

#include "harmon/model_spaces.hpp"
#include "harmon/quadrature.hpp"
#include "harmon/radial_ode.hpp"
#include "harmon/trig_poly.hpp"

#include <Eigen/Core>

#include <functional>
#include <string>
#include <vector>

namespace harmon {

/** L^2 norm against the density weight: ||G||^2 = int_0^pi G(r)^2 Omega(r) dr
    with Omega = 2^beta (1 - cos r)^beta (sin r)^alpha. */
double weighted_norm(const ExponentPair& pair, const CosPolynomial& g, int nodes = 256);
/** Norm of the radial derivative d/dr G(cos r) = -sin r G'(cos r). */
double weighted_norm_derivative(const ExponentPair& pair, const CosPolynomial& g,
                                int nodes = 256);
/** Simpson-rule norms of a sampled solution (phi and phi' profiles). */
double weighted_norm(const ExponentPair& pair, const RadialProfile& profile);

/** Scale factors of the averaged-eigenfunction embedding built from a radial
    function G: c_G normalizes the coordinate functions, C_G is the radius of
    the image sphere. */
struct EmbeddingConstants {
  double c = 0.0;        // sqrt(n) / (||G'|| sqrt(vol S^{n-1}))
  double big_c = 0.0;    // sqrt(n) ||G|| / ||G'||
  double norm = 0.0;
  double norm_derivative = 0.0;
  int n = 0;
};

/** Throws std::domain_error when G is constant (no derivative scale). */
EmbeddingConstants embedding_constants(const ExponentPair& pair, const CosPolynomial& g);
EmbeddingConstants embedding_constants(const ExponentPair& pair, const PhiSolution& solution);

/** Screw function of the embedded geodesics for the k-th eigenfunction:
    S0(s) = 2 C^2 (1 - Phi_k(delta(s))) with delta(s) the distance pi minus
    |pi - |s| mod 2pi| along the closed geodesic. */
double screw_function_from_formula(const ExponentPair& pair, int k, double s);

/** Embedded geodesics for k = 1 are round unit circles: the screw function
    collapses to 2 (1 - cos s).  radius is the measured
    sqrt(lambda_1 / (lambda_1 + beta)) C_Phi, deviation the worst gap between
    the screw function and the unit-circle chord law. */
struct CircleCheck {
  double radius = 0.0;
  double max_deviation = 0.0;
};

CircleCheck circle_check(const ExponentPair& pair);

/** Curve in R^N sampled at uniformly spaced parameters. */
struct ScrewCurve {
  std::vector<double> params;
  std::vector<Eigen::VectorXd> points;

  /** S(s_i) = |c(s_i) - c(s_0)|^2. */
  std::vector<double> screw_samples() const;
  /** max_{i,j} | |c(s_{i+j}) - c(s_i)|^2 - S(s_j) |: how far the curve is
      from having a parameter-stationary screw function. */
  double stationarity_defect() const;
  /** "s,x1,...,xN" header plus one row per sample. */
  std::string to_csv() const;
};

struct Isometry {
  Eigen::MatrixXd rotation;     // orthogonal (reflections allowed)
  Eigen::VectorXd translation;
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
};

struct CongruenceResult {
  Isometry map;
  double residual = 0.0;  // max_i | map(a_i) - b_i |
};

/** Recovers the ambient isometry carrying one curve onto another with the
    same screw function (orthogonal Procrustes on the displacement frames).
    Throws std::runtime_error when the screw functions differ by more than
    tol — no congruence can exist then. */
CongruenceResult congruence_recover(const ScrewCurve& a, const ScrewCurve& b,
                                    double tol = 1e-6);

/** Smooth test function on S^2 together with its analytic Laplacian
    (geometer's sign: Delta f = l(l+1) f on degree-l harmonics). */
struct SphereFunction {
  std::string name;
  std::function<double(const Eigen::Vector3d&)> value;
  std::function<double(const Eigen::Vector3d&)> laplacian;
};

/** max_r | A_p(Delta f)(r) - ( -(A_p f)''(r) - cot(r) (A_p f)'(r) ) | over
    r in [0.2, pi - 0.2]: the radialized Laplacian against the analytic one.
    Averages over geodesic circles use the uniform rule in azimuth;
    derivatives use five-point stencils at spacing h. */
double basic_commutativity_check(const SphereFunction& f, const Eigen::Vector3d& p,
                                 int azimuth_samples = 256, double h = 0.005);

struct RadialityCheck {
  /** Worst spread of <R_p F, R_q G> over pairs at equal distance. */
  double max_spread = 0.0;
  /** Only when F == G: worst gap to vol(S^1) ||F||^2 F(d(p, q)). */
  double formula_gap = 0.0;
};

/** Monte-Carlo pairs (seeded) at the given distances on S^2; the integrals
    use a tensor quadrature that is exact for polynomial kernels. */
RadialityCheck l2_radiality_check(const CosPolynomial& f, const CosPolynomial& g,
                                  const std::vector<double>& distances,
                                  int pairs_per_distance = 4, unsigned seed = 0);

/** Measured defects of the explicit quadrature embedding of S^2 into R^3
    through the first eigenvalue: the image should be the unit sphere,
    geodesics should map to unit circles with the model screw function, and
    any two geodesic images should be ambient-congruent. */
struct S2EmbeddingReport {
  double radius_defect = 0.0;       // max | |E(p)| - C |
  double metric_distortion = 0.0;   // max | |dE(v)| - 1 |
  double geodesic_radius = 0.0;     // mean circle radius of a geodesic image
  double circle_deviation = 0.0;    // max | |c_i - center| - radius |
  double screw_defect = 0.0;        // vs screw_function_from_formula
  double congruence_residual = 0.0; // between two geodesic images
  double parseval_defect = 0.0;     // | N ||R_p Phi||^2 - vol(S^2) |
  ScrewCurve geodesic_a, geodesic_b;
};

/** resolution is the polar quadrature order (azimuth uses twice that);
    requires resolution >= 16. */
S2EmbeddingReport s2_explicit_embedding(int resolution = 64, unsigned seed = 0);

}  // namespace harmon
