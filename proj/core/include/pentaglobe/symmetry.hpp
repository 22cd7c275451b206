#pragma once

#include <array>
#include <vector>

#include "pentaglobe/mesh.hpp"

namespace pentaglobe {

struct Automorphism {
  std::vector<VertexId> vertex_map;
  std::vector<EdgeId> edge_map;
  std::vector<FaceId> face_map;
  bool reverses_orientation = false;
  std::array<Label, 3> relabel = {Label::a, Label::b, Label::c};

  bool is_identity() const;
};

class SymmetryGroup {
 public:
  SymmetryGroup() = default;
  explicit SymmetryGroup(std::vector<Automorphism> elements);

  std::size_t order() const { return elements_.size(); }
  const std::vector<Automorphism>& elements() const { return elements_; }
  const std::vector<std::size_t>& generators() const { return generators_; }
  // Same group paired with the optional a<->b exchange.
  SymmetryGroup with_label_swap() const;
  bool has_label_swap() const;

 private:
  std::vector<Automorphism> elements_;
  std::vector<std::size_t> generators_;
};

Automorphism compose(const Automorphism& outer, const Automorphism& inner);

// Every combinatorial automorphism of the fragment (orientation reversing ones included).
std::vector<Automorphism> automorphisms(const Fragment& f);
bool is_automorphism(const Fragment& f, const Automorphism& g);

SymmetryGroup symmetries(const NeighborhoodFragment& n);
SymmetryGroup symmetries(const Fragment& f);
// Flips and rotations of the strip fixing the poles and the pair of boundary meridians.
SymmetryGroup symmetries(const TimezoneTemplate& t);
// The group of one distance-4 part, fixing its two boundary meridians.
SymmetryGroup part_symmetries(const TimezoneTemplate& t, bool meridian_part);
SymmetryGroup symmetries(const EarthMap& m);

}  // namespace pentaglobe
