#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pentaglobe/mesh.hpp"
#include "pentaglobe/patterns.hpp"
#include "pentaglobe/symmetry.hpp"

namespace pentaglobe {

// Edge labels indexed by edge id; '.' marks an unassigned edge.
class Labeling {
 public:
  Labeling() = default;
  Labeling(PatternTag pattern, std::size_t edge_count);
  Labeling(PatternTag pattern, std::string labels);

  PatternTag pattern() const { return pattern_; }
  std::size_t size() const { return labels_.size(); }
  std::optional<Label> get(EdgeId e) const;
  void set(EdgeId e, Label l);
  void clear(EdgeId e);
  bool is_total() const;
  const std::string& str() const { return labels_; }

  bool operator==(const Labeling& o) const = default;
  auto operator<=>(const Labeling& o) const { return labels_ <=> o.labels_; }

 private:
  PatternTag pattern_ = PatternTag::a5;
  std::string labels_;
};

// The labels of one face read around its cycle.
PartialCycle face_labels(const Fragment& host, const Labeling& l, FaceId f);
bool is_valid(const Fragment& host, const Labeling& l);

// Visits every completion in lexicographic order of edge labels; stop by returning false.
// Throws std::invalid_argument when some face of the seed is already infeasible.
std::size_t for_each_completion(const Fragment& host, const EdgePattern& p, const Labeling& seed,
                                const std::function<bool(const Labeling&)>& visit);
std::vector<Labeling> enumerate_completions(const Fragment& host, const EdgePattern& p, const Labeling& seed);

Labeling apply(const Automorphism& g, const Labeling& l);
Labeling canonicalize(const Labeling& l, const SymmetryGroup& group);

struct OrbitRepresentative {
  Labeling canonical;
  std::size_t multiplicity = 0;
  // Indices into the reduced input, ascending.
  std::vector<std::size_t> members;
};

// One entry per orbit class of the input, ordered by canonical form.
std::vector<OrbitRepresentative> orbit_reduce(const std::vector<Labeling>& labelings, const SymmetryGroup& group);

}  // namespace pentaglobe
