#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pentaglobe {

enum class Label : std::uint8_t { a = 0, b = 1, c = 2 };

inline constexpr std::uint8_t kUnset = 0xff;

char to_char(Label l);
std::optional<Label> label_from_char(char ch);

enum class PatternTag : std::uint8_t { a5, a4b, a2b2c, a3bc, a3b2 };

using LabelCycle = std::array<Label, 5>;
// Positions hold a label value or kUnset.
using PartialCycle = std::array<std::uint8_t, 5>;

struct Placement {
  PatternTag pattern;
  int offset;
  bool reflected;
  LabelCycle labels;
};

class EdgePattern {
 public:
  explicit EdgePattern(PatternTag tag);

  PatternTag tag() const { return tag_; }
  std::string_view name() const;
  const LabelCycle& canonical() const { return canonical_; }
  const std::vector<Label>& alphabet() const { return alphabet_; }
  bool uses(Label l) const;
  // Canonical first, then rotations by increasing offset, then reflections;
  // duplicates dropped.
  const std::vector<Placement>& placements() const { return placements_; }

 private:
  PatternTag tag_;
  LabelCycle canonical_;
  std::vector<Label> alphabet_;
  std::vector<Placement> placements_;
};

const EdgePattern& pattern(PatternTag tag);
std::optional<PatternTag> parse_pattern(std::string_view name);
std::span<const PatternTag> all_patterns();

std::vector<Placement> placements(const EdgePattern& p);
bool tile_matches(const LabelCycle& seq, const EdgePattern& p);
bool partial_feasible(const PartialCycle& seq, const EdgePattern& p);
// Throws std::invalid_argument for a label outside the alphabet.
bool adjacent_pair_feasible(const EdgePattern& p, Label l1, Label l2);

std::string to_string(const LabelCycle& seq);

}  // namespace pentaglobe
