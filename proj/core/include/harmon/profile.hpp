#pragma once

#include <string>
#include <vector>

namespace harmon {

/** A labeled scalar function sampled on a strictly increasing radial grid
    (density, mean curvature, eigenfunction profiles, ...). */
struct RadialProfile {
  std::string label;
  std::vector<double> grid;
  std::vector<double> values;

  /** Throws std::invalid_argument unless grid is strictly increasing and the
      same length as values. */
  void validate() const;

  std::size_t size() const { return grid.size(); }

  /** Linear interpolation; clamped at the ends. */
  double interpolate(double r) const;

  /** "r,value" header plus one row per sample, full double precision. */
  std::string to_csv() const;
  /** {"label": ..., "grid": [...], "values": [...]} */
  std::string to_json() const;
};

}  // namespace harmon
