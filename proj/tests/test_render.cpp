#include "doctest.h"
#include "pentaglobe/earthmap.hpp"
#include "pentaglobe/render.hpp"

using namespace pentaglobe;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("neighborhood svg draws every edge") {
  auto t = classify_neighborhoods(PatternTag::a2b2c);
  auto svg = render_neighborhoods_svg(PatternTag::a2b2c, t);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count(svg, "<line") == 20);
  CHECK(svg.find("stroke-dasharray=\"6,4\"") != std::string::npos);
}

TEST_CASE("family graph dot") {
  auto dot = family_graph_dot(build_family_graph(2, PatternTag::a4b));
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("\xC3\x97" "75") != std::string::npos);
}

TEST_CASE("empty family graph") {
  auto svg = render_family_graph_svg(build_family_graph(3, PatternTag::a3bc));
  CHECK(svg.find("no tilings") != std::string::npos);
}

TEST_CASE("earth map svg") {
  auto m = build_earth_map(5, 4);
  auto c = enumerate_closed(5, 4, PatternTag::a2b2c);
  REQUIRE_FALSE(c.orbits.empty());
  auto svg = render_earth_map_svg(m, c.orbits.front().canonical);
  CHECK(count(svg, "<line") + count(svg, "<path") >= m.mesh.edge_count());
  auto t = build_timezone_template(5);
  auto tz = render_timezone_svg(t, Labeling(PatternTag::a2b2c, t.fragment.edge_count()));
  CHECK(tz.find("stroke-dasharray") != std::string::npos);
}
