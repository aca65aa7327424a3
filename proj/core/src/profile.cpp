#include "harmon/profile.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace harmon {

void RadialProfile::validate() const {
  if (grid.size() != values.size())
    throw std::invalid_argument("profile: grid/values size mismatch");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      throw std::invalid_argument("profile: grid not strictly increasing");
}

double RadialProfile::interpolate(double r) const {
  if (grid.empty()) throw std::invalid_argument("profile: empty");
  if (r <= grid.front()) return values.front();
  if (r >= grid.back()) return values.back();
  const auto it = std::upper_bound(grid.begin(), grid.end(), r);
  const std::size_t i = static_cast<std::size_t>(it - grid.begin());
  const double t = (r - grid[i - 1]) / (grid[i] - grid[i - 1]);
  return (1.0 - t) * values[i - 1] + t * values[i];
}

std::string RadialProfile::to_csv() const {
  std::string out = "r,value\n";
  char row[64];
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::snprintf(row, sizeof(row), "%.17g,%.17g\n", grid[i], values[i]);
    out += row;
  }
  return out;
}

std::string RadialProfile::to_json() const {
  nlohmann::json j;
  j["label"] = label;
  j["grid"] = grid;
  j["values"] = values;
  return j.dump(2);
}

}  // namespace harmon
