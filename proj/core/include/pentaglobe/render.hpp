#pragma once

#include <string>
#include <vector>

#include "pentaglobe/earthmap.hpp"
#include "pentaglobe/mesh.hpp"
#include "pentaglobe/neighborhood.hpp"
#include "pentaglobe/search.hpp"

namespace pentaglobe {

// Strokes: a thin solid, b thick solid, c dashed; unset edges dotted grey.
std::string render_neighborhoods_svg(PatternTag p, const std::vector<NeighborhoodTiling>& tilings);
std::string render_timezone_svg(const TimezoneTemplate& t, const Labeling& l);
std::string render_earth_map_svg(const EarthMap& m, const Labeling& l);
// Arrows aggregated per (from, to, kind). An empty graph renders a "no tilings" note.
std::string render_family_graph_svg(const FamilyGraph& g);
std::string family_graph_dot(const FamilyGraph& g);

}  // namespace pentaglobe
