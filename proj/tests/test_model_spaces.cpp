#include "harmon/model_spaces.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

using namespace harmon;

TEST_SUITE_BEGIN("model_spaces");

TEST_CASE("space ids parse to family, parameter, and dimension") {
  CHECK(parse_space("sphere:3").family == Family::Sphere);
  CHECK(parse_space("sphere:3").dimension() == 3);
  CHECK(parse_space("flat:4").dimension() == 4);
  CHECK(parse_space("cpn:2").dimension() == 4);
  CHECK(parse_space("hpn:3").dimension() == 12);
  CHECK(parse_space("op2").dimension() == 16);
  CHECK(parse_space("rhn:5").dimension() == 5);
  CHECK(parse_space("chn:3").dimension() == 6);
  CHECK(parse_space("qhn:2").dimension() == 8);
  CHECK(parse_space("oh2").dimension() == 16);
  CHECK(parse_space("cpn:2").id() == "cpn:2");
  CHECK(parse_space("op2").id() == "op2");
}

TEST_CASE("malformed or degenerate ids are rejected") {
  CHECK_THROWS_AS(parse_space("sphere:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_space("sphere:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_space("cpn:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_space("sphere:"), std::invalid_argument);
  CHECK_THROWS_AS(parse_space("sphere"), std::invalid_argument);
  CHECK_THROWS_AS(parse_space("torus:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_space("op3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_space(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_space("sphere:2x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_space("sphere:-3"), std::invalid_argument);
}

TEST_CASE("compactness and diameter") {
  CHECK(parse_space("sphere:4").compact());
  CHECK(parse_space("hpn:2").compact());
  CHECK_FALSE(parse_space("flat:3").compact());
  CHECK_FALSE(parse_space("chn:2").compact());
  CHECK(parse_space("cpn:3").diameter() == doctest::Approx(M_PI));
  CHECK(parse_space("rhn:3").diameter() == std::numeric_limits<double>::infinity());
}

TEST_CASE("curvature spectra carry multiplicity n - 1") {
  const CurvatureSpectrum sphere = curvature_spectrum(parse_space("sphere:4"));
  REQUIRE(sphere.lines.size() == 1);
  CHECK(sphere.lines[0].first == 1.0);
  CHECK(sphere.lines[0].second == 3);

  const CurvatureSpectrum cp3 = curvature_spectrum(parse_space("cpn:3"));
  REQUIRE(cp3.lines.size() == 2);
  CHECK(cp3.lines[0] == std::pair<double, int>{1.0, 1});
  CHECK(cp3.lines[1] == std::pair<double, int>{0.25, 4});
  CHECK(cp3.total_multiplicity() == 5);

  const CurvatureSpectrum op2 = curvature_spectrum(parse_space("op2"));
  CHECK(op2.lines[0] == std::pair<double, int>{1.0, 7});
  CHECK(op2.lines[1] == std::pair<double, int>{0.25, 8});

  const CurvatureSpectrum ch2 = curvature_spectrum(parse_space("chn:2"));
  CHECK(ch2.lines[0] == std::pair<double, int>{-1.0, 1});
  CHECK(ch2.lines[1] == std::pair<double, int>{-0.25, 2});

  for (const ModelSpace& space : compact_catalog())
    CHECK(curvature_spectrum(space).total_multiplicity() == space.dimension() - 1);
}

TEST_CASE("closed-form densities at hand-checked radii") {
  const double r = 1.0;
  CHECK(closed_form_density(parse_space("sphere:3"), M_PI / 2) == doctest::Approx(1.0));
  CHECK(closed_form_density(parse_space("sphere:3"), r) ==
        doctest::Approx(std::sin(r) * std::sin(r)).epsilon(1e-14));
  // Complex projective plane: sin(r) * (2 sin(r/2))^2.
  CHECK(closed_form_density(parse_space("cpn:2"), M_PI / 2) == doctest::Approx(2.0));
  CHECK(closed_form_density(parse_space("cpn:2"), r) ==
        doctest::Approx(std::sin(r) * 4.0 * std::pow(std::sin(0.5 * r), 2)).epsilon(1e-14));
  CHECK(closed_form_density(parse_space("op2"), r) ==
        doctest::Approx(std::pow(std::sin(r), 7) * std::pow(2.0 * std::sin(0.5 * r), 8))
            .epsilon(1e-14));
  CHECK(closed_form_density(parse_space("flat:4"), 2.0) == doctest::Approx(8.0));
  CHECK(closed_form_density(parse_space("rhn:3"), 2.0) ==
        doctest::Approx(std::pow(std::sinh(2.0), 2)).epsilon(1e-14));
  CHECK(closed_form_density(parse_space("chn:2"), r) ==
        doctest::Approx(std::sinh(r) * 4.0 * std::pow(std::sinh(0.5 * r), 2))
            .epsilon(1e-14));
}

TEST_CASE("closed-form density domain ends at the diameter") {
  CHECK_THROWS_AS(closed_form_density(parse_space("sphere:3"), 0.0), std::domain_error);
  CHECK_THROWS_AS(closed_form_density(parse_space("sphere:3"), M_PI), std::domain_error);
  CHECK_THROWS_AS(closed_form_density(parse_space("sphere:3"), -1.0), std::domain_error);
  CHECK_NOTHROW(closed_form_density(parse_space("rhn:3"), 40.0));
}

TEST_CASE("exponent pairs satisfy alpha + 2 beta = n - 1") {
  CHECK(exponents(parse_space("sphere:5")) == ExponentPair{4, 0});
  CHECK(exponents(parse_space("cpn:4")) == ExponentPair{1, 3});
  CHECK(exponents(parse_space("hpn:2")) == ExponentPair{3, 2});
  CHECK(exponents(parse_space("op2")) == ExponentPair{7, 4});
  for (const ModelSpace& space : compact_catalog()) {
    const ExponentPair pair = exponents(space);
    CHECK(pair.alpha + 2 * pair.beta == space.dimension() - 1);
    CHECK(pair.dimension() == space.dimension());
  }
  CHECK_THROWS_AS(exponents(parse_space("rhn:3")), std::domain_error);
  CHECK_THROWS_AS(exponents(parse_space("flat:3")), std::domain_error);
}

TEST_CASE("exponent form reproduces the closed-form density") {
  for (const ModelSpace& space : compact_catalog())
    for (double r : {0.3, 1.1, 2.0, 2.9})
      CHECK(density_from_exponents(exponents(space), r) ==
            doctest::Approx(closed_form_density(space, r)).epsilon(1e-12));
}

TEST_CASE("radial ricci curvature is alpha + beta / 2") {
  CHECK(ricci(parse_space("sphere:3")) == doctest::Approx(2.0));
  CHECK(ricci(parse_space("cpn:2")) == doctest::Approx(1.5));
  CHECK(ricci(parse_space("hpn:3")) == doctest::Approx(5.0));
  CHECK(ricci(parse_space("op2")) == doctest::Approx(9.0));
  CHECK(ricci_exact(ExponentPair{7, 4}) == Rational(9));
  CHECK(ricci_exact(ExponentPair{1, 1}) == Rational(3, 2));
}

TEST_CASE("eigenvalues are k (k + alpha + beta)") {
  const ExponentPair cp2{1, 1};
  CHECK(spectrum(cp2, 0) == 0.0);
  CHECK(spectrum(cp2, 1) == doctest::Approx(3.0));
  CHECK(spectrum(cp2, 2) == doctest::Approx(8.0));
  CHECK(spectrum_exact(ExponentPair{7, 4}, 1) == Rational(12));
  CHECK(spectrum_exact(ExponentPair{2, 0}, 5) == Rational(35));
  CHECK_THROWS_AS(spectrum(cp2, -1), std::invalid_argument);
}

TEST_CASE("first eigenvalue equality holds exactly on the catalog") {
  for (const ModelSpace& space : compact_catalog())
    CHECK(ros_equality_check(exponents(space), space.dimension()));
  // Inconsistent dimension is a contract violation, not a failed equality.
  CHECK_THROWS_AS(ros_equality_check(ExponentPair{2, 0}, 4), std::domain_error);
}

TEST_CASE("catalog contents at the default bound") {
  const auto catalog = compact_catalog();
  CHECK(catalog.size() == 26);  // 15 spheres + 7 complex + 3 quaternionic + 1
  for (const ModelSpace& space : catalog) {
    CHECK(space.compact());
    CHECK(space.dimension() <= 16);
  }
  CHECK(compact_catalog(4).size() == 4);  // sphere:2..4 and cpn:2
  CHECK(catalog_exponent_pairs().size() == 26);
  for (const ModelSpace& space : hyperbolic_catalog()) {
    CHECK(space.hyperbolic());
    CHECK(space.dimension() <= 16);
  }
}

TEST_SUITE_END();
