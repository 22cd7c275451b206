#include <algorithm>
#include <map>

#include "doctest.h"
#include "pentaglobe/mesh.hpp"

using namespace pentaglobe;

TEST_CASE("neighborhood fragment shape") {
  Fragment f = build_neighborhood_fragment();
  CHECK(f.face_count() == 6);
  CHECK(f.edge_count() == 20);
  CHECK(f.vertex_count() == 15);
  std::map<int, int> interior, boundary;
  for (VertexId v = 0; v < 15; ++v) (f.is_interior_vertex(v) ? interior : boundary)[f.degree(v)]++;
  CHECK(interior[3] == 5);
  CHECK(boundary[3] == 5);
  CHECK(boundary[2] == 5);
  CHECK(f.boundary_edges().size() == 10);
  for (int i = 1; i <= 5; ++i) {
    int with_center = 0, with_next = 0;
    for (EdgeId e : f.face(i).edges) {
      auto [x, y] = f.faces_of(e);
      with_center += (x == 0 || y == 0);
      FaceId next = i % 5 + 1;
      with_next += (x == next || y == next);
    }
    CHECK(with_center == 1);
    CHECK(with_next == 1);
  }
  CHECK(validate(f).ok());
}

TEST_CASE("timezone templates") {
  for (int d = 1; d <= 5; ++d) {
    auto t = build_timezone_template(d);
    CAPTURE(d);
    CHECK(validate(t).ok());
    CHECK(t.left_meridian.size() == static_cast<std::size_t>(d));
    CHECK(t.right_meridian.size() == static_cast<std::size_t>(d));
    CHECK(t.fragment.face_count() == (d == 5 ? 4u : 12u));
  }
  auto t4 = build_timezone_template(4);
  CHECK(t4.meridian_part.size() + t4.core_part.size() == 12);
  CHECK(t4.inner_meridian.size() == 4);
}

TEST_CASE("closed maps") {
  auto m = build_earth_map(5, 4);
  CHECK(m.mesh.face_count() == 16);
  CHECK(m.mesh.edge_count() == 40);
  CHECK(m.mesh.vertex_count() == 26);
  CHECK(m.mesh.degree(m.north) == 4);
  CHECK(m.mesh.degree(m.south) == 4);
  int v3 = 0, v4 = 0;
  for (VertexId v = 0; v < m.mesh.vertex_count(); ++v) (m.mesh.degree(v) == 3 ? v3 : v4)++;
  CHECK(v3 == 24);
  CHECK(v4 == 2);

  auto m2 = build_earth_map(3, 2);
  CHECK(m2.mesh.face_count() == 24);
  CHECK(m2.mesh.edge_count() == 60);
  CHECK(m2.mesh.vertex_count() == 38);
  CHECK(m2.mesh.degree(m2.north) == 6);

  CHECK(validate(build_earth_map(2, 3)).ok());
  CHECK(validate(build_earth_map(2, 2)).ok());
  auto r = validate(build_earth_map(4, 2));
  REQUIRE(r.find("pole_degree") != nullptr);
  CHECK(r.find("pole_degree")->pass);
  CHECK(r.find("pole_degree")->detail.find("north 6, south 6") != std::string::npos);
  CHECK_THROWS(build_earth_map(5, 3));
  CHECK_THROWS(build_earth_map(6, 2));
}

TEST_CASE("seeded defects are reported") {
  Fragment good = build_neighborhood_fragment();
  auto edges = good.edges();
  auto faces = good.faces();

  SUBCASE("four-edge face") {
    faces[3].vertices.pop_back();
    faces[3].edges.pop_back();
    auto r = validate(Fragment(good.vertex_count(), edges, faces));
    REQUIRE(r.find("face_size") != nullptr);
    CHECK_FALSE(r.find("face_size")->pass);
    CHECK(r.find("face_size")->detail.find("3") != std::string::npos);
    CHECK_FALSE(r.ok());
  }
  SUBCASE("reversed face") {
    std::reverse(faces[2].vertices.begin(), faces[2].vertices.end());
    std::vector<EdgeId> es(faces[2].edges.rbegin(), faces[2].edges.rend());
    std::rotate(es.begin(), es.begin() + 1, es.end());
    faces[2].edges = es;
    CHECK_FALSE(validate(Fragment(good.vertex_count(), edges, faces)).ok());
  }
  SUBCASE("disconnected") {
    faces.erase(faces.begin());
    std::vector<Face> two = {faces[0], faces[2]};
    CHECK_FALSE(validate(Fragment(good.vertex_count(), edges, two)).ok());
  }
}

TEST_CASE("restriction keeps origins") {
  auto t = build_timezone_template(4);
  std::vector<VertexId> vo;
  std::vector<EdgeId> eo;
  Fragment core = t.fragment.restrict_to(t.core_part, &vo, &eo);
  CHECK(core.face_count() == t.core_part.size());
  CHECK(eo.size() == core.edge_count());
  for (EdgeId e = 0; e < core.edge_count(); ++e) {
    const auto& a = core.edge(e);
    const auto& b = t.fragment.edge(eo[e]);
    CHECK(vo[a.v1] == b.v1);
    CHECK(vo[a.v2] == b.v2);
  }
}
