#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pentaglobe/earthmap.hpp"
#include "pentaglobe/mesh.hpp"
#include "pentaglobe/neighborhood.hpp"
#include "pentaglobe/search.hpp"

namespace pentaglobe {

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mesh documents: vertices, edges [id, v1, v2], faces [id, [e1..e5]], optional boundary, poles, meridians.
struct MeshDocument {
  Fragment fragment;
  std::optional<std::pair<VertexId, VertexId>> poles;
  std::vector<std::vector<EdgeId>> meridians;
};

std::string to_json(const Fragment& f);
std::string to_json(const EarthMap& m);
MeshDocument mesh_from_json(std::string_view text);

// {"pattern": "a4b", "labels": {"0": "a", ...}}; unset edges are omitted.
std::string to_json(const Labeling& l);
Labeling labeling_from_json(std::string_view text, std::size_t edge_count);

// Rows keyed by type, columns P1..P5, each a list of types or "x".
std::string to_json(const PropagationTable& t);
PropagationTable propagation_from_json(std::string_view text);

}  // namespace pentaglobe
