#include "s3min/configuration.hpp"

#include <doctest.h>

using namespace s3min;

TEST_CASE("consistent coloring at N = 4 matches the checkerboard pattern") {
  Configuration cfg = build_configuration(4);
  ColoringResult res = propagate_coloring(cfg, cfg.prism_index(kC1, 0, 0), 0);
  REQUIRE(res.consistent());
  const Coloring& c = *res.coloring;
  CHECK(coloring_consistent(cfg, c));

  // on the prisms around C1 the coloring is (j + l) mod 2 up to a global flip
  int base = c.values[cfg.prism_index(kC1, 0, 0)];
  for (int j = 0; j < 2 * cfg.N; ++j)
    for (int l = 0; l < 4; ++l) {
      int expected = ((j + l) % 2) ^ base;
      CHECK(c.values[cfg.prism_index(kC1, j, l)] == expected);
    }

  // flipping the seed flips every value: exactly two consistent colorings
  ColoringResult flipped = propagate_coloring(cfg, cfg.prism_index(kC1, 0, 0), 1);
  REQUIRE(flipped.consistent());
  for (std::size_t i = 0; i < c.values.size(); ++i)
    CHECK(flipped.coloring->values[i] == 1 - c.values[i]);

  // propagation from any other seed reproduces one of the two
  ColoringResult other = propagate_coloring(cfg, 77, 0);
  REQUIRE(other.consistent());
  bool equal = true, opposite = true;
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    equal = equal && other.coloring->values[i] == c.values[i];
    opposite = opposite && other.coloring->values[i] == 1 - c.values[i];
  }
  CHECK((equal || opposite));
}

TEST_CASE("coloring at N = 12 is consistent") {
  Configuration cfg = build_configuration(12);
  ColoringResult res = propagate_coloring(cfg, 0, 0);
  CHECK(res.consistent());
}

TEST_CASE("coloring at N = 8 is inconsistent with a witness") {
  Configuration cfg = build_configuration(8);
  ColoringResult res = propagate_coloring(cfg, 0, 0);
  CHECK_FALSE(res.consistent());
  CHECK(res.witness.size() >= 2);
}

TEST_CASE("level sets of the coloring are the two group orbits") {
  Configuration cfg = build_configuration(4);
  FiniteGroup g = symmetry_group(cfg);
  ColoringResult res = propagate_coloring(cfg, 0, 0);
  REQUIRE(res.consistent());
  DualityReport rep = verify_orbit_coloring_duality(cfg, g, *res.coloring);
  CHECK(rep.ok);
  CHECK(rep.orbit_size_0 == 96);
  CHECK(rep.orbit_size_1 == 96);
  CHECK(rep.level_sets_are_orbits);
  CHECK(rep.composed_colorings_consistent);
}
