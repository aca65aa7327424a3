#pragma once

#include "harmon/report.hpp"

#include <string>

namespace harmon {

struct VerifyOptions {
  /** Case count for the randomized suites (Gauss–Lucas uses it in full;
      the conservation-law suite caps it at 48 integrations). */
  int cases = 500;
  unsigned seed = 0;
  /** Grid size for sampled ODE solutions. */
  int grid = 801;
  /** Catalog bound: every model space of dimension <= max_dim. */
  int max_dim = 16;
};

/** Density pipeline against the closed forms: oracle equivalence, Ricci
    recovery, exponent-form recovery, and the flip conservation law on
    randomized curvature fields. */
RunReport verify_density(const VerifyOptions& opts = {});

/** Radial ODE solutions against the exact recursion, first-eigenfunction
    coefficients, sphere spectrum, Ros equality, and off-eigenvalue
    rejection. */
RunReport verify_ode(const VerifyOptions& opts = {});

/** Root pipeline: multiple-angle identity, interlacing with resolved gaps,
    randomized Gauss–Lucas, and root-reconstruction residuals. */
RunReport verify_roots(const VerifyOptions& opts = {});

/** Embedding constants, circle geometry, screw-function laws, Laplacian
    commutation with radialization, and the explicit quadrature embedding. */
RunReport verify_embedding(const VerifyOptions& opts = {});

/** Union of all suites. */
RunReport verify_all(const VerifyOptions& opts = {});

/** Dispatch by suite name: density | ode | roots | embedding | all.
    Throws std::invalid_argument for anything else. */
RunReport verify_suite(const std::string& name, const VerifyOptions& opts = {});

}  // namespace harmon
