#pragma once

#include <cstddef>
#include <map>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pentaglobe/mesh.hpp"
#include "pentaglobe/search.hpp"
#include "pentaglobe/symmetry.hpp"

namespace pentaglobe {

enum class ArrowKind { timezone, meridian_part, core_part };
std::string to_string(ArrowKind k);

struct TimezoneTiling {
  std::size_t id = 0;
  ArrowKind kind = ArrowKind::timezone;
  // Labels indexed by the edges of the strip (or part) fragment.
  Labeling labeling;
  std::string left;
  std::string right;
  // b count of the left signature mod 2; -1 for three-letter alphabets.
  int parity = -1;
  // Pole edge labels west to east; empty for meridian parts.
  std::string north;
  std::string south;
  // Lies on a directed cycle of the family graph.
  bool closable = false;
};

struct SignatureClass {
  std::string left;
  std::string right;
  std::size_t raw = 0;
  std::vector<std::size_t> tilings;
  // Members index into `tilings` of this class.
  std::vector<OrbitRepresentative> orbits;
  // With the a<->b exchange added; only filled for a2b2c.
  std::vector<OrbitRepresentative> orbits_with_swap;
};

struct TimezoneEnumeration {
  int distance = 0;
  PatternTag pattern = PatternTag::a5;
  ArrowKind kind = ArrowKind::timezone;
  Fragment host;
  // Host edge -> strip template edge.
  std::vector<EdgeId> template_edge;
  SymmetryGroup group;
  // Every edge-congruent labeling of the host, closable or not.
  std::vector<TimezoneTiling> all;
  // Closable tilings grouped by (left, right) signature.
  std::map<std::pair<std::string, std::string>, SignatureClass> by_signature;
  // Same grouping over all face-valid labelings.
  std::map<std::pair<std::string, std::string>, SignatureClass> raw_by_signature;

  std::size_t closable_count() const;
  const TimezoneTiling* find(const std::string& labels) const;
};

TimezoneEnumeration enumerate_timezone_tilings(int d, PatternTag p);

struct PartsEnumeration {
  TimezoneEnumeration meridian;
  TimezoneEnumeration core;
};
PartsEnumeration enumerate_parts(PatternTag p, int d = 4);

struct Arrow {
  std::size_t from;
  std::size_t to;
  std::size_t tiling;
  ArrowKind kind;
};

struct FamilyGraph {
  int distance = 0;
  PatternTag pattern = PatternTag::a5;
  std::vector<std::string> nodes;
  std::vector<Arrow> arrows;
  // Per kind, indexed by Arrow::tiling.
  std::vector<TimezoneTiling> timezone_tilings;
  std::vector<TimezoneTiling> meridian_tilings;
  std::vector<TimezoneTiling> core_tilings;
  // Part edge -> strip template edge (distance 4).
  std::vector<EdgeId> meridian_edges;
  std::vector<EdgeId> core_edges;
  // Kind letter + labels -> arrow index.
  std::map<std::string, std::size_t> arrow_by_labels;

  std::size_t node(const std::string& sig) const;
  const TimezoneTiling& tiling(const Arrow& a) const;
  std::vector<std::size_t> out_arrows(std::size_t node) const;
};

// Arrows are the closable tilings; at distance 4 they are parts, alternating along cycles.
FamilyGraph build_family_graph(int d, PatternTag p);

// Label multisets around both poles of one closed map, sorted so that a vertical flip gives the same value.
struct PoleCombination {
  int timezones = 0;
  std::string north;
  std::string south;
  auto operator<=>(const PoleCombination&) const = default;
};

struct PoleDescriptor {
  int distance = 0;
  // Pole edge labels read west to east. Distance 5 reads whole primitive cycles, other distances one
  // column per member tiling.
  std::vector<std::pair<std::string, std::string>> columns;
  // Over closed maps of the family with minimum..6 timezones.
  std::vector<PoleCombination> combinations;
  bool operator==(const PoleDescriptor&) const = default;
};

// True when some closed map of each family has the same pole combinations.
bool poles_overlap(const PoleDescriptor& x, const PoleDescriptor& y);
// Column equality up to cyclic shift, reversal and exchanging the poles.
bool same_column(const std::pair<std::string, std::string>& x, const std::pair<std::string, std::string>& y);

struct Family {
  std::size_t id = 0;
  int distance = 0;
  PatternTag pattern = PatternTag::a5;
  std::vector<std::size_t> arrows;
  std::vector<std::string> nodes;
  int parity = -1;
  PoleDescriptor descriptor;
};

std::vector<Family> classify_families(int d, PatternTag p);
std::vector<Family> classify_families(const FamilyGraph& g);
PoleDescriptor pole_descriptor(const Family& f);

struct ClosedEnumeration {
  int distance = 0;
  int timezones = 0;
  PatternTag pattern = PatternTag::a5;
  std::size_t raw = 0;
  // Members are left empty; multiplicities count raw labelings per orbit.
  std::vector<OrbitRepresentative> orbits;
};

// Direct search on the closed map, reduced under its full automorphism group.
ClosedEnumeration enumerate_closed(int d, int n, PatternTag p);
// The same set generated from directed cycles of the family graph.
ClosedEnumeration closed_from_family_graph(int d, int n, PatternTag p);
ClosedEnumeration closed_from_family_graph(const FamilyGraph& g, int n);

// Closed labeling for a cycle of arrows (timezone order; at distance 4 meridian then core per timezone).
Labeling assemble_closed(const FamilyGraph& g, const EarthMap& m, const std::vector<std::size_t>& cycle);
// Splits a closed labeling into arrows, or nullopt when some piece is not an arrow of g.
std::optional<std::vector<std::size_t>> decompose_closed(const FamilyGraph& g, const EarthMap& m, const Labeling& l);

Labeling specialize(const Labeling& l, const std::map<Label, Label>& substitution, PatternTag target);

}  // namespace pentaglobe
