#include <algorithm>

#include "doctest.h"
#include "pentaglobe/neighborhood.hpp"

using namespace pentaglobe;

namespace {

PropagationCell cell(std::initializer_list<const char*> types) {
  PropagationCell c;
  for (auto t : types) c.types.emplace_back(t);
  return c;
}

PropagationCell blocked() {
  PropagationCell c;
  c.blocked = true;
  return c;
}

}  // namespace

TEST_CASE("neighborhood counts") {
  CHECK(classify_neighborhoods(PatternTag::a5).size() == 1);
  CHECK(classify_neighborhoods(PatternTag::a4b).size() == 18);
  CHECK(classify_neighborhoods(PatternTag::a2b2c).size() == 1);
  CHECK(classify_neighborhoods(PatternTag::a3bc).size() == 2);
  CHECK(classify_neighborhoods(PatternTag::a3b2).size() == 3);
}

TEST_CASE("type ids and orbits") {
  auto t = classify_neighborhoods(PatternTag::a3b2);
  std::vector<std::string> ids;
  for (const auto& x : t) ids.push_back(x.type_id);
  std::sort(ids.begin(), ids.end());
  CHECK(ids == std::vector<std::string>{"I", "II", "III"});
  for (const auto& x : t) {
    CHECK(x.orbit_size >= 1);
    CHECK(x.orbit_size <= 10);
    CHECK(x.labeling.is_total());
  }
}

TEST_CASE("propagation of small patterns") {
  auto a3bc = propagation(PatternTag::a3bc);
  CHECK(a3bc.row("I")[0] == cell({"I", "II"}));
  CHECK(a3bc.row("II")[1] == cell({"I", "II"}));
  CHECK(a3bc.row("II")[2] == blocked());

  auto a3b2 = propagation(PatternTag::a3b2);
  const auto& iii = a3b2.row("III");
  CHECK(iii[0] == cell({"III"}));
  CHECK(iii[1] == cell({"II", "III"}));
  CHECK(iii[4] == cell({"III"}));
  CHECK(a3b2.row("I")[3] == cell({"II"}));
  CHECK(a3b2.row("II")[2] == blocked());

  auto a2b2c = propagation(PatternTag::a2b2c);
  for (const auto& c : a2b2c.row("unique")) CHECK(c == cell({"unique"}));
}

TEST_CASE("a4b type 18 is mostly blocked") {
  auto t = propagation(PatternTag::a4b);
  CHECK(t.types.size() == 18);
  const auto& r = t.row("18");
  CHECK(r[0].blocked);
  CHECK(r[1].blocked);
  CHECK(r[2].blocked);
  CHECK(r[4].blocked);
  // P4 shares the b edge with the center, so the relation is symmetric.
  CHECK(r[3] == cell({"2", "14", "17", "18"}));
  CHECK_THROWS(t.row("19"));
}

TEST_CASE("spoke breakdown sums to the type count") {
  auto s = a4b_breakdown();
  CHECK(s.two + s.central + s.sideways + s.none == 18);
  CHECK(s.two == 1);
  CHECK(s.central == 3);
  CHECK(s.none_forced <= s.none);
}

TEST_CASE("neighborhood type lookup in a closed map") {
  auto m = build_earth_map(5, 4);
  NeighborhoodFragment n;
  // Tiles touching a pole of degree 4 have no full neighborhood.
  int with = 0;
  for (FaceId f = 0; f < m.mesh.face_count(); ++f) with += neighborhood_edges(m.mesh, f).has_value();
  CHECK(with < static_cast<int>(m.mesh.face_count()));
  CHECK(neighborhood_edges(n.fragment(), 0).has_value());
  CHECK_FALSE(neighborhood_edges(n.fragment(), 1).has_value());
}
