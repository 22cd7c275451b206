#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pentaglobe/mesh.hpp"
#include "pentaglobe/search.hpp"
#include "pentaglobe/symmetry.hpp"

namespace pentaglobe {

struct NeighborhoodTiling {
  PatternTag pattern;
  std::string type_id;
  // Labeling in the drawing orientation used by the type tables.
  Labeling labeling;
  Labeling canonical;
  // Position of the orbit among all orbits sorted by canonical form.
  std::size_t canonical_index = 0;
  std::size_t orbit_size = 0;
  std::vector<VertexId> forced_vertices;
};

struct PropagationCell {
  bool blocked = false;
  std::vector<std::string> types;
  bool operator==(const PropagationCell&) const = default;
};

struct PropagationTable {
  PatternTag pattern;
  std::vector<std::string> types;
  // rows[t][i - 1] is the cell for neighbor P_i of type types[t].
  std::vector<std::array<PropagationCell, 5>> rows;
  const std::array<PropagationCell, 5>& row(const std::string& type) const;
};

// Drawing-orientation representatives of every type, in the order the types are numbered.
struct TypeRepresentative {
  std::string type_id;
  Labeling labeling;
};
std::vector<TypeRepresentative> type_representatives(PatternTag p);

std::vector<NeighborhoodTiling> classify_neighborhoods(PatternTag p);
std::vector<VertexId> forced_vertices(const NeighborhoodTiling& nt);
std::vector<VertexId> forced_vertices(PatternTag p, const Labeling& l);
PropagationTable propagation(PatternTag p);

// Edge ids of the neighborhood of face f in the standard fragment's numbering,
// or nullopt when some vertex of f is not a degree-3 interior vertex surrounded by faces.
std::optional<std::array<EdgeId, 20>> neighborhood_edges(const Fragment& host, FaceId f);
// Type of the neighborhood of face f under the given total labeling of host, or nullopt.
std::optional<std::string> neighborhood_type(const Fragment& host, const Labeling& l, FaceId f);

// a4b tilings grouped by the b edges among the five spokes: two b spokes,
// one b spoke at the vertex opposite the center b edge ("central"), one b spoke
// at another vertex ("sideways"), or none. The last counter tallies tilings
// without b spokes that have a forced vertex.
struct SpokeBreakdown {
  int two = 0;
  int central = 0;
  int sideways = 0;
  int none = 0;
  int none_forced = 0;
};
SpokeBreakdown a4b_breakdown();

}  // namespace pentaglobe
