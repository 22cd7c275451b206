#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include "pentaglobe/neighborhood.hpp"

namespace pentaglobe {

namespace {

// Vertex names A_i, B_i, C_i as in NeighborhoodFragment; shift renumbers indices
// for drawings whose first vertex sits one step further around.
VertexId vertex_named(const std::string& tok, int shift) {
  int ring = tok[0] - 'A';
  int i = ((std::stoi(tok.substr(1)) + shift - 1) % 5 + 5) % 5;
  return static_cast<VertexId>(ring * 5 + i);
}

EdgeId edge_named(const Fragment& f, const std::string& name, int shift) {
  std::size_t cut = 1;
  while (cut < name.size() && std::isdigit(static_cast<unsigned char>(name[cut]))) ++cut;
  VertexId u = vertex_named(name.substr(0, cut), shift), w = vertex_named(name.substr(cut), shift);
  for (EdgeId e = 0; e < f.edge_count(); ++e) {
    const auto& ed = f.edge(e);
    if ((ed.v1 == u && ed.v2 == w) || (ed.v1 == w && ed.v2 == u)) return e;
  }
  throw std::logic_error("no neighborhood edge " + name);
}

Labeling make(PatternTag p, char fill, const std::map<char, std::string>& lists, int shift = 0) {
  static const Fragment f = build_neighborhood_fragment();
  std::string s(f.edge_count(), fill);
  for (const auto& [label, names] : lists) {
    std::istringstream in(names);
    std::string name;
    while (in >> name) s[edge_named(f, name, shift)] = label;
  }
  return Labeling(p, s);
}

}  // namespace

std::vector<TypeRepresentative> type_representatives(PatternTag p) {
  switch (p) {
    case PatternTag::a5:
      return {{"unique", make(p, 'a', {})}};
    case PatternTag::a2b2c:
      return {{"unique", make(p, 'a',
                              {{'b', "B2C2 C2B3 A1A2 A1A5 A1B1 C3B4 B4C4 A4B4"},
                               {'c', "A2B2 B1C5 B3C3 A4A5"}})}};
    case PatternTag::a3bc: {
      const std::string b = "A1B1 A2A3 B3C3", c = "A1A2 A3B3 B1C5";
      return {{"I", make(p, 'a', {{'b', b + " B4C4"}, {'c', c + " B5C4"}})},
              {"II", make(p, 'a', {{'b', b + " B5C4"}, {'c', c + " B4C4"}})}};
    }
    case PatternTag::a3b2:
      return {{"I", make(p, 'a', {{'b', "B1A1 A1A2 A2A3 A3B3 B3C3 B1C5 B4C4 C4B5"}})},
              {"II", make(p, 'a', {{'b', "B1C5 C5B5 B5C4 C4B4 B4C3 C3B3 A1A2 A2A3 A2B2"}})},
              {"III", make(p, 'a', {{'b', "B1C5 C5B5 C3B4 B4C4 A4B4 A1A2 A2A3 A2B2"}})}};
    case PatternTag::a4b: {
      // Drawn with indices one step behind the standard fragment.
      static const char* kB[18] = {
          "A0B0 A2B2",           "A1B1 B0C4 B2C2",      "A1B1 B0C4 B3C2",      "A1B1 B4C4 B3C2",
          "A0B0 B1C1 B3C2",      "A0B0 B1C1 B2C2",      "A0B0 B2C1 B3C2",      "B4C4 B0C0 B1C1 B2C2",
          "B4C4 B0C0 B1C1 B3C2", "B4C4 B0C0 B2C1 B3C2", "A0B0 C1B2 B2C2",      "B4C4 B0C0 C1B2 B2C2",
          "B4C4 B1C0 C1B2 B2C2", "B0C4 B1C0 C1B2 B2C2", "B4C4 C0B1 B1C1 B2C2", "B4C4 C0B1 B1C1 B3C2",
          "B0C4 C0B1 B1C1 B2C2", "C0B0 B0C4 C1B2 B2C2"};
      std::vector<TypeRepresentative> out;
      for (int t = 0; t < 18; ++t)
        out.push_back({std::to_string(t + 1), make(p, 'a', {{'b', std::string("A3A4 ") + kB[t]}}, 1)});
      return out;
    }
  }
  return {};
}

}  // namespace pentaglobe
