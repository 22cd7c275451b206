#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pentaglobe/patterns.hpp"

namespace pentaglobe {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using FaceId = std::uint32_t;

inline constexpr std::uint32_t kNone = 0xffffffffu;

struct Edge {
  VertexId v1;
  VertexId v2;
};

// Counterclockwise cycle; edges[i] joins vertices[i] and vertices[i + 1].
struct Face {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

class Fragment {
 public:
  Fragment() = default;
  Fragment(std::size_t vertex_count, std::vector<Edge> edges, std::vector<Face> faces);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t face_count() const { return faces_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const Face& face(FaceId f) const { return faces_[f]; }

  // Faces on either side of an edge; the second entry is kNone on the boundary.
  const std::array<FaceId, 2>& faces_of(EdgeId e) const { return edge_faces_[e]; }
  int incidence(EdgeId e) const;
  FaceId across(FaceId f, int pos) const;
  int position_in(FaceId f, EdgeId e) const;

  int degree(VertexId v) const { return degree_[v]; }
  bool is_interior_vertex(VertexId v) const { return !on_boundary_[v]; }
  bool is_closed() const { return boundary_.empty(); }
  // Boundary edges as closed walks, concatenated; each walk keeps the faces on its left.
  const std::vector<EdgeId>& boundary_edges() const { return boundary_; }

  // Sub-fragment on the given faces; maps record the original ids of the new elements.
  Fragment restrict_to(const std::vector<FaceId>& faces, std::vector<VertexId>* vertex_origin = nullptr,
                       std::vector<EdgeId>* edge_origin = nullptr) const;

  bool operator==(const Fragment& o) const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  std::vector<std::array<FaceId, 2>> edge_faces_;
  std::vector<int> degree_;
  std::vector<bool> on_boundary_;
  std::vector<EdgeId> boundary_;
};

// Neighborhood of a tile whose vertices all have degree 3.
// Vertices: A1..A5 (center), B1..B5 (spoke ends), C1..C5 (outer).
// Face 0 is the center P = A1..A5; face i is P_i = A_{i+1} A_i B_i C_i B_{i+1}.
class NeighborhoodFragment {
 public:
  NeighborhoodFragment();

  const Fragment& fragment() const { return fragment_; }
  static FaceId center() { return 0; }
  static FaceId neighbor(int i) { return static_cast<FaceId>(i); }
  // E(P, P_i) = A_i A_{i+1}.
  static EdgeId center_edge(int i) { return static_cast<EdgeId>(i - 1); }
  // E(i, i+1) = spoke A_{i+1} B_{i+1}, shared by P_i and P_{i+1}.
  static EdgeId shared_edge(int i) { return static_cast<EdgeId>(5 + i % 5); }
  static EdgeId spoke(int i) { return static_cast<EdgeId>(5 + (i - 1)); }
  // B_i C_i and C_i B_{i+1}.
  static std::array<EdgeId, 2> outer_edges(int i) {
    return {static_cast<EdgeId>(10 + (i - 1)), static_cast<EdgeId>(15 + (i - 1))};
  }
  static VertexId inner_vertex(int i) { return static_cast<VertexId>(i - 1); }
  static VertexId mid_vertex(int i) { return static_cast<VertexId>(5 + (i - 1)); }
  static VertexId outer_vertex(int i) { return static_cast<VertexId>(10 + (i - 1)); }
  static std::string vertex_name(VertexId v);

 private:
  Fragment fragment_;
};

Fragment build_neighborhood_fragment();

struct Point {
  double x;
  double y;
};

struct TimezoneTemplate {
  int distance = 0;
  Fragment fragment;
  VertexId north = 0;
  VertexId south = 1;
  std::vector<EdgeId> left_meridian;   // north to south
  std::vector<EdgeId> right_meridian;  // north to south
  std::vector<EdgeId> north_fan;
  std::vector<EdgeId> south_fan;
  // Right meridian vertices (interior ones, north to south) glue onto these left ones.
  std::vector<std::pair<VertexId, VertexId>> vertex_gluing;
  std::vector<FaceId> core_tiles;
  // Distance 4 only.
  std::vector<FaceId> meridian_part;
  std::vector<FaceId> core_part;
  std::vector<EdgeId> inner_meridian;
  // Pole edges read for the binomial notation, west to east.
  std::vector<EdgeId> north_notation;
  std::vector<EdgeId> south_notation;
  std::vector<std::string> vertex_names;
  std::vector<Point> positions;
};

TimezoneTemplate build_timezone_template(int d);

struct EarthMap {
  int distance = 0;
  int timezones = 0;
  Fragment mesh;
  VertexId north = 0;
  VertexId south = 1;
  // meridians[k] is the left meridian of timezone k, north to south.
  std::vector<std::vector<EdgeId>> meridians;
  // Per face: (timezone index, template face id).
  std::vector<std::pair<int, FaceId>> decomposition;
  // timezone_edges[k][template edge] is the edge of the closed map.
  std::vector<std::vector<EdgeId>> timezone_edges;
  std::vector<std::vector<FaceId>> timezone_faces;
};

int minimum_timezones(int d);
EarthMap build_earth_map(int d, int n);

struct ValidationReport {
  struct Check {
    std::string name;
    bool pass;
    std::string detail;
  };
  std::vector<Check> checks;
  bool ok() const;
  const Check* find(const std::string& name) const;
};

ValidationReport validate(const Fragment& f);
ValidationReport validate(const EarthMap& m);
ValidationReport validate(const TimezoneTemplate& t);

}  // namespace pentaglobe
