#include "harmon/model_spaces.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace harmon {

namespace {

// Real dimension of the base field for the projective/hyperbolic families.
int field_dim(Family f) {
  switch (f) {
    case Family::ComplexProjective:
    case Family::ComplexHyperbolic:
      return 2;
    case Family::QuaternionicProjective:
    case Family::QuaternionicHyperbolic:
      return 4;
    case Family::OctonionicProjective:
    case Family::OctonionicHyperbolic:
      return 8;
    default:
      return 1;
  }
}

int parse_param(std::string_view id, std::string_view tail, int min_value) {
  int value = 0;
  const char* first = tail.data();
  const char* last = tail.data() + tail.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value < min_value)
    throw std::invalid_argument("bad space id: " + std::string(id));
  return value;
}

}  // namespace

int ModelSpace::dimension() const {
  switch (family) {
    case Family::Flat:
    case Family::Sphere:
    case Family::RealHyperbolic:
      return param;
    default:
      return field_dim(family) * param;
  }
}

bool ModelSpace::compact() const {
  switch (family) {
    case Family::Sphere:
    case Family::ComplexProjective:
    case Family::QuaternionicProjective:
    case Family::OctonionicProjective:
      return true;
    default:
      return false;
  }
}

bool ModelSpace::flat() const { return family == Family::Flat; }

bool ModelSpace::hyperbolic() const {
  switch (family) {
    case Family::RealHyperbolic:
    case Family::ComplexHyperbolic:
    case Family::QuaternionicHyperbolic:
    case Family::OctonionicHyperbolic:
      return true;
    default:
      return false;
  }
}

double ModelSpace::diameter() const {
  return compact() ? M_PI : std::numeric_limits<double>::infinity();
}

std::string ModelSpace::id() const {
  switch (family) {
    case Family::Flat:
      return "flat:" + std::to_string(param);
    case Family::Sphere:
      return "sphere:" + std::to_string(param);
    case Family::ComplexProjective:
      return "cpn:" + std::to_string(param);
    case Family::QuaternionicProjective:
      return "hpn:" + std::to_string(param);
    case Family::OctonionicProjective:
      return "op2";
    case Family::RealHyperbolic:
      return "rhn:" + std::to_string(param);
    case Family::ComplexHyperbolic:
      return "chn:" + std::to_string(param);
    case Family::QuaternionicHyperbolic:
      return "qhn:" + std::to_string(param);
    case Family::OctonionicHyperbolic:
      return "oh2";
  }
  throw std::logic_error("unreachable");
}

ModelSpace parse_space(std::string_view id) {
  if (id == "op2") return {Family::OctonionicProjective, 2};
  if (id == "oh2") return {Family::OctonionicHyperbolic, 2};
  const auto colon = id.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("bad space id: " + std::string(id));
  const std::string_view head = id.substr(0, colon);
  const std::string_view tail = id.substr(colon + 1);
  if (head == "flat") return {Family::Flat, parse_param(id, tail, 2)};
  if (head == "sphere") return {Family::Sphere, parse_param(id, tail, 2)};
  if (head == "cpn") return {Family::ComplexProjective, parse_param(id, tail, 1)};
  if (head == "hpn") return {Family::QuaternionicProjective, parse_param(id, tail, 1)};
  if (head == "rhn") return {Family::RealHyperbolic, parse_param(id, tail, 2)};
  if (head == "chn") return {Family::ComplexHyperbolic, parse_param(id, tail, 1)};
  if (head == "qhn") return {Family::QuaternionicHyperbolic, parse_param(id, tail, 1)};
  throw std::invalid_argument("bad space id: " + std::string(id));
}

int CurvatureSpectrum::total_multiplicity() const {
  int total = 0;
  for (const auto& [value, mult] : lines) total += mult;
  return total;
}

CurvatureSpectrum curvature_spectrum(const ModelSpace& space) {
  const int n = space.dimension();
  const int d = field_dim(space.family);
  const double sign = space.hyperbolic() ? -1.0 : 1.0;
  CurvatureSpectrum spec;
  switch (space.family) {
    case Family::Flat:
      spec.lines.push_back({0.0, n - 1});
      break;
    case Family::Sphere:
    case Family::RealHyperbolic:
      spec.lines.push_back({sign, n - 1});
      break;
    default:
      // Rank-one symmetric metric normalized to curvature range [1/4, 1]
      // (resp. [-1, -1/4]): d-1 directions at the extreme value, the
      // remaining d(m-1) at a quarter of it.
      spec.lines.push_back({sign, d - 1});
      if (space.param > 1)
        spec.lines.push_back({sign * 0.25, d * (space.param - 1)});
      break;
  }
  return spec;
}

double closed_form_density(const ModelSpace& space, double r) {
  if (!(r > 0.0) || !(r < space.diameter()))
    throw std::domain_error("radius outside (0, diameter)");
  double density = 1.0;
  for (const auto& [kappa, mult] : curvature_spectrum(space).lines) {
    double factor;
    if (kappa > 0.0) {
      const double s = std::sqrt(kappa);
      factor = std::sin(s * r) / s;
    } else if (kappa < 0.0) {
      const double s = std::sqrt(-kappa);
      factor = std::sinh(s * r) / s;
    } else {
      factor = r;
    }
    density *= std::pow(factor, mult);
  }
  return density;
}

int ExponentPair::dimension() const {
  const Rational n = alpha + 2 * beta + 1;
  if (denominator(n) != 1 || n <= 0)
    throw std::domain_error("exponent pair has non-integral dimension");
  return static_cast<int>(numerator(n));
}

ExponentPair exponents(const ModelSpace& space) {
  if (!space.compact())
    throw std::domain_error("exponents: " + space.id() + " is not compact");
  const int d = field_dim(space.family);
  if (space.family == Family::Sphere) return {space.param - 1, 0};
  return {d - 1, Rational(d, 2) * (space.param - 1)};
}

double density_from_exponents(const ExponentPair& pair, double r) {
  const double alpha = to_double(pair.alpha);
  const double beta = to_double(pair.beta);
  return std::pow(2.0, beta) * std::pow(1.0 - std::cos(r), beta) *
         std::pow(std::sin(r), alpha);
}

double ricci(const ModelSpace& space) { return to_double(ricci_exact(exponents(space))); }

Rational ricci_exact(const ExponentPair& pair) { return pair.alpha + pair.beta / 2; }

double spectrum(const ExponentPair& pair, int k) { return to_double(spectrum_exact(pair, k)); }

Rational spectrum_exact(const ExponentPair& pair, int k) {
  if (k < 0) throw std::invalid_argument("spectrum: k must be >= 0");
  return k * (k + pair.alpha + pair.beta);
}

bool ros_equality_check(const ExponentPair& pair, int n) {
  if (pair.alpha + 2 * pair.beta != n - 1)
    throw std::domain_error("ros_equality_check: alpha + 2 beta != n - 1");
  const Rational lambda1 = spectrum_exact(pair, 1);
  if (lambda1 != n - pair.beta) return false;
  return 3 * lambda1 == 2 * ricci_exact(pair) + n + 2;
}

std::vector<ModelSpace> compact_catalog(int max_dim) {
  std::vector<ModelSpace> catalog;
  for (int n = 2; n <= max_dim; ++n) catalog.push_back({Family::Sphere, n});
  for (int m = 2; 2 * m <= max_dim; ++m) catalog.push_back({Family::ComplexProjective, m});
  for (int m = 2; 4 * m <= max_dim; ++m) catalog.push_back({Family::QuaternionicProjective, m});
  if (max_dim >= 16) catalog.push_back({Family::OctonionicProjective, 2});
  return catalog;
}

std::vector<ModelSpace> hyperbolic_catalog(int max_dim) {
  std::vector<ModelSpace> catalog;
  for (int n = 2; n <= max_dim; ++n) catalog.push_back({Family::RealHyperbolic, n});
  for (int m = 2; 2 * m <= max_dim; ++m) catalog.push_back({Family::ComplexHyperbolic, m});
  for (int m = 2; 4 * m <= max_dim; ++m) catalog.push_back({Family::QuaternionicHyperbolic, m});
  if (max_dim >= 16) catalog.push_back({Family::OctonionicHyperbolic, 2});
  return catalog;
}

std::vector<ExponentPair> catalog_exponent_pairs(int max_dim) {
  std::vector<ExponentPair> pairs;
  for (const ModelSpace& space : compact_catalog(max_dim)) pairs.push_back(exponents(space));
  return pairs;
}

}  // namespace harmon
