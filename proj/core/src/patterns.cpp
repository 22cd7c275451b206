#include "pentaglobe/patterns.hpp"

#include <algorithm>
#include <stdexcept>

namespace pentaglobe {

char to_char(Label l) { return static_cast<char>('a' + static_cast<int>(l)); }

std::optional<Label> label_from_char(char ch) {
  if (ch < 'a' || ch > 'c') return std::nullopt;
  return static_cast<Label>(ch - 'a');
}

namespace {

LabelCycle cycle_of(std::string_view s) {
  LabelCycle out{};
  for (int i = 0; i < 5; ++i) out[i] = *label_from_char(s[i]);
  return out;
}

constexpr std::array<PatternTag, 5> kAll = {PatternTag::a5, PatternTag::a4b, PatternTag::a2b2c,
                                            PatternTag::a3bc, PatternTag::a3b2};
constexpr std::array<std::string_view, 5> kNames = {"a5", "a4b", "a2b2c", "a3bc", "a3b2"};
constexpr std::array<std::string_view, 5> kSeqs = {"aaaaa", "aaaab", "aabbc", "aaabc", "aaabb"};

}  // namespace

EdgePattern::EdgePattern(PatternTag tag) : tag_(tag) {
  canonical_ = cycle_of(kSeqs[static_cast<int>(tag)]);
  for (Label l : {Label::a, Label::b, Label::c})
    if (std::find(canonical_.begin(), canonical_.end(), l) != canonical_.end()) alphabet_.push_back(l);

  auto add = [&](int offset, bool reflected) {
    LabelCycle seq{};
    for (int i = 0; i < 5; ++i)
      seq[i] = reflected ? canonical_[((offset - i) % 5 + 5) % 5] : canonical_[(i + offset) % 5];
    for (const auto& p : placements_)
      if (p.labels == seq) return;
    placements_.push_back({tag_, offset, reflected, seq});
  };
  for (int k = 0; k < 5; ++k) add(k, false);
  for (int k = 0; k < 5; ++k) add(k, true);
}

std::string_view EdgePattern::name() const { return kNames[static_cast<int>(tag_)]; }

bool EdgePattern::uses(Label l) const {
  return std::find(alphabet_.begin(), alphabet_.end(), l) != alphabet_.end();
}

const EdgePattern& pattern(PatternTag tag) {
  static const std::array<EdgePattern, 5> table = {
      EdgePattern(PatternTag::a5), EdgePattern(PatternTag::a4b), EdgePattern(PatternTag::a2b2c),
      EdgePattern(PatternTag::a3bc), EdgePattern(PatternTag::a3b2)};
  return table[static_cast<int>(tag)];
}

std::optional<PatternTag> parse_pattern(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return kAll[i];
  return std::nullopt;
}

std::span<const PatternTag> all_patterns() { return kAll; }

std::vector<Placement> placements(const EdgePattern& p) { return p.placements(); }

bool tile_matches(const LabelCycle& seq, const EdgePattern& p) {
  for (const auto& pl : p.placements())
    if (pl.labels == seq) return true;
  return false;
}

bool partial_feasible(const PartialCycle& seq, const EdgePattern& p) {
  for (const auto& pl : p.placements()) {
    bool ok = true;
    for (int i = 0; i < 5 && ok; ++i)
      ok = seq[i] == kUnset || seq[i] == static_cast<std::uint8_t>(pl.labels[i]);
    if (ok) return true;
  }
  return false;
}

bool adjacent_pair_feasible(const EdgePattern& p, Label l1, Label l2) {
  if (!p.uses(l1) || !p.uses(l2))
    throw std::invalid_argument("label outside the alphabet of pattern " + std::string(p.name()));
  const auto& c = p.canonical();
  for (int i = 0; i < 5; ++i) {
    Label x = c[i], y = c[(i + 1) % 5];
    if ((x == l1 && y == l2) || (x == l2 && y == l1)) return true;
  }
  return false;
}

std::string to_string(const LabelCycle& seq) {
  std::string s;
  for (Label l : seq) s += to_char(l);
  return s;
}

}  // namespace pentaglobe
