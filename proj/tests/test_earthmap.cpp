#include <set>

#include "doctest.h"
#include "pentaglobe/earthmap.hpp"
#include "pentaglobe/symmetry.hpp"

using namespace pentaglobe;

TEST_CASE("a4b timezone counts") {
  auto e1 = enumerate_timezone_tilings(1, PatternTag::a4b);
  CHECK(e1.by_signature.size() >= 1);
  auto e3 = enumerate_timezone_tilings(3, PatternTag::a4b);
  std::size_t raw = 0;
  for (const auto& [k, c] : e3.by_signature) raw += c.raw;
  CHECK(raw == e3.closable_count());
  CHECK(e3.closable_count() <= e3.all.size());
  for (const auto& t : e3.all) CHECK(is_valid(e3.host, t.labeling));
}

TEST_CASE("a3bc has no closable strips") {
  for (int d = 1; d <= 5; ++d) {
    CAPTURE(d);
    CHECK(enumerate_timezone_tilings(d, PatternTag::a3bc).closable_count() == 0);
    CHECK(classify_families(d, PatternTag::a3bc).empty());
  }
}

TEST_CASE("family counts") {
  const int a2b2c[] = {2, 3, 3, 2, 2};
  const int a3b2[] = {2, 3, 4, 3, 2};
  for (int d = 1; d <= 5; ++d) {
    CAPTURE(d);
    CHECK(classify_families(d, PatternTag::a2b2c).size() == static_cast<std::size_t>(a2b2c[d - 1]));
    CHECK(classify_families(d, PatternTag::a3b2).size() == static_cast<std::size_t>(a3b2[d - 1]));
    CHECK(classify_families(d, PatternTag::a4b).size() == 2);
  }
}

TEST_CASE("a2b2c descriptors are distinct") {
  for (int d = 1; d <= 5; ++d) {
    auto fs = classify_families(d, PatternTag::a2b2c);
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (std::size_t j = i + 1; j < fs.size(); ++j) CHECK_FALSE(poles_overlap(fs[i].descriptor, fs[j].descriptor));
  }
}

TEST_CASE("a2b2c distance 5 poles") {
  auto fs = classify_families(5, PatternTag::a2b2c);
  REQUIRE(fs.size() == 2);
  bool plain = false, mixed = false;
  for (const auto& f : fs)
    for (const auto& c : f.descriptor.columns) {
      plain |= same_column(c, {"a", "b"});
      mixed |= same_column(c, {"bac", "bca"});
    }
  CHECK(plain);
  CHECK(mixed);
}

TEST_CASE("same_column") {
  CHECK(same_column({"abc", "bca"}, {"cab", "abc"}));
  CHECK(same_column({"ab", "ba"}, {"ba", "ab"}));
  CHECK(same_column({"abc", "aab"}, {"aab", "abc"}));
  CHECK_FALSE(same_column({"aab", "abb"}, {"aaa", "bbb"}));
}

TEST_CASE("closed maps decompose into family graph cycles") {
  auto g = build_family_graph(5, PatternTag::a2b2c);
  auto m = build_earth_map(5, 4);
  auto closed = enumerate_closed(5, 4, PatternTag::a2b2c);
  REQUIRE_FALSE(closed.orbits.empty());
  for (const auto& o : closed.orbits) {
    auto cyc = decompose_closed(g, m, o.canonical);
    REQUIRE(cyc.has_value());
    CHECK(cyc->size() == 4);
    for (std::size_t i = 0; i < cyc->size(); ++i)
      CHECK(g.arrows[(*cyc)[i]].to == g.arrows[(*cyc)[(i + 1) % cyc->size()]].from);
    CHECK(assemble_closed(g, m, *cyc) == o.canonical);
  }
}

TEST_CASE("closed enumeration agrees with the family graph") {
  for (PatternTag p : {PatternTag::a4b, PatternTag::a3b2}) {
    auto a = enumerate_closed(3, 2, p);
    auto b = closed_from_family_graph(3, 2, p);
    CHECK(a.raw == b.raw);
    REQUIRE(a.orbits.size() == b.orbits.size());
    for (std::size_t i = 0; i < a.orbits.size(); ++i) CHECK(a.orbits[i].canonical == b.orbits[i].canonical);
  }
}

TEST_CASE("closed maps are valid labelings") {
  auto m = build_earth_map(2, 3);
  auto c = enumerate_closed(2, 3, PatternTag::a4b);
  for (const auto& o : c.orbits) CHECK(is_valid(m.mesh, o.canonical));
}

TEST_CASE("specialize") {
  Labeling l(PatternTag::a2b2c, "abcab");
  CHECK(specialize(l, {}, PatternTag::a2b2c) == l);
  auto s = specialize(l, {{Label::c, Label::a}}, PatternTag::a3b2);
  CHECK(s.str() == "abaab");
  CHECK(s.pattern() == PatternTag::a3b2);
}

TEST_CASE("a4b families carry a parity") {
  for (int d = 1; d <= 5; ++d) {
    std::set<int> parities;
    for (const auto& f : classify_families(d, PatternTag::a4b)) {
      CHECK(f.parity >= 0);
      parities.insert(f.parity);
    }
    CHECK(parities.size() == 2);
  }
}

TEST_CASE("distance 4 parts") {
  auto parts = enumerate_parts(PatternTag::a4b);
  CHECK(parts.meridian.kind == ArrowKind::meridian_part);
  CHECK(parts.core.kind == ArrowKind::core_part);
  auto key = std::make_pair(std::string("aaaa"), std::string("aaaa"));
  REQUIRE(parts.core.by_signature.count(key));
  CHECK(parts.core.by_signature.at(key).raw == 25);
}
