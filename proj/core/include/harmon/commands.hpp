#pragma once

#include "harmon/report.hpp"

#include <string>

namespace harmon {

/** Shared knobs of the command layer.  Zero-valued grid/tol mean the
    per-command default; out == "" suppresses file output. */
struct CommandOptions {
  int grid = 0;
  double tol = 0.0;
  unsigned seed = 0;
  int cases = 500;
  std::string out;
};

/** Integrates the density for one space and compares it with the closed
    form.  Writes "r,numeric,closed_form,rel_error" CSV to out. */
RunReport cmd_density(const std::string& space_id, const CommandOptions& opts = {});

/** Solves the radial equation at the k-th eigenvalue (k >= 1) on a compact
    space and cross-checks the exact polynomial.  Writes <out>.json
    (coefficients) and <out>.csv (sampled solution). */
RunReport cmd_phi(const std::string& space_id, int k, const CommandOptions& opts = {});

/** Runs one invariant suite (density | ode | roots | embedding | all). */
RunReport cmd_verify(const std::string& suite, const CommandOptions& opts = {});

/** Explicit quadrature embedding of the 2-sphere at the given resolution
    (>= 16).  Writes <out>_geodesic_a.csv, <out>_geodesic_b.csv and
    <out>_screw.csv. */
RunReport cmd_embed_s2(int resolution, const CommandOptions& opts = {});

}  // namespace harmon
