#include "doctest.h"
#include "pentaglobe/symmetry.hpp"

using namespace pentaglobe;

TEST_CASE("neighborhood group is dihedral of order 10") {
  NeighborhoodFragment n;
  auto g = symmetries(n);
  CHECK(g.order() == 10);
  int reflections = 0;
  for (const auto& a : g.elements()) {
    CHECK(is_automorphism(n.fragment(), a));
    CHECK(a.face_map[0] == 0);
    reflections += a.reverses_orientation;
  }
  CHECK(reflections == 5);
  CHECK(g.elements().front().is_identity());
}

TEST_CASE("strip groups") {
  CHECK(symmetries(build_timezone_template(2)).order() == 2);
  CHECK(symmetries(build_timezone_template(3)).order() == 2);
  CHECK(symmetries(build_timezone_template(5)).order() == 2);
  auto t4 = build_timezone_template(4);
  CHECK(part_symmetries(t4, true).order() >= 1);
  CHECK(part_symmetries(t4, false).order() >= 1);
}

TEST_CASE("closed map group contains the rotations") {
  auto m = build_earth_map(5, 4);
  auto g = symmetries(m);
  // n rotations, n reflections, times the pole exchange.
  CHECK(g.order() == 16);
  for (const auto& a : g.elements()) CHECK(is_automorphism(m.mesh, a));
}

TEST_CASE("composition and label swap") {
  NeighborhoodFragment n;
  auto g = symmetries(n);
  const auto& e = g.elements();
  for (const auto& x : e)
    for (const auto& y : e) CHECK(is_automorphism(n.fragment(), compose(x, y)));
  auto sw = g.with_label_swap();
  CHECK(sw.order() == 20);
  CHECK(sw.has_label_swap());
  CHECK_FALSE(g.has_label_swap());
}
