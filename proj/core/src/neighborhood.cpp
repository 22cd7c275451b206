#include "pentaglobe/neighborhood.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace pentaglobe {

namespace {

const NeighborhoodFragment& standard() {
  static const NeighborhoodFragment nf;
  return nf;
}

const SymmetryGroup& standard_group() {
  static const SymmetryGroup g = symmetries(standard());
  return g;
}

// Canonical form -> type id, built from the stored representatives.
const std::map<std::string, std::string>& type_index(PatternTag p) {
  static std::mutex mu;
  static std::map<PatternTag, std::map<std::string, std::string>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  auto& m = cache[p];
  for (const auto& rep : type_representatives(p)) m[canonicalize(rep.labeling, standard_group()).str()] = rep.type_id;
  return m;
}

}  // namespace

const std::array<PropagationCell, 5>& PropagationTable::row(const std::string& type) const {
  for (std::size_t t = 0; t < types.size(); ++t)
    if (types[t] == type) return rows[t];
  throw std::out_of_range("no type " + type);
}

std::vector<VertexId> forced_vertices(PatternTag p, const Labeling& l) {
  using NF = NeighborhoodFragment;
  std::vector<VertexId> out;
  const auto& pat = pattern(p);
  for (int i = 1; i <= 5; ++i) {
    int prev = (i + 3) % 5 + 1;
    auto x = l.get(NF::outer_edges(prev)[1]);
    auto y = l.get(NF::outer_edges(i)[0]);
    if (x && y && !adjacent_pair_feasible(pat, *x, *y)) out.push_back(NF::mid_vertex(i));
  }
  return out;
}

std::vector<VertexId> forced_vertices(const NeighborhoodTiling& nt) { return forced_vertices(nt.pattern, nt.labeling); }

std::vector<NeighborhoodTiling> classify_neighborhoods(PatternTag p) {
  const auto& frag = standard().fragment();
  auto all = enumerate_completions(frag, pattern(p), Labeling(p, frag.edge_count()));
  auto orbits = orbit_reduce(all, standard_group());
  const auto& index = type_index(p);
  std::vector<NeighborhoodTiling> out;
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    NeighborhoodTiling nt{p, "?", orbits[k].canonical, orbits[k].canonical, k, orbits[k].multiplicity, {}};
    auto it = index.find(orbits[k].canonical.str());
    if (it != index.end()) nt.type_id = it->second;
    out.push_back(std::move(nt));
  }
  // Replace the labeling by the drawing-orientation representative and sort by type number.
  auto reps = type_representatives(p);
  auto rank = [&](const std::string& id) {
    for (std::size_t r = 0; r < reps.size(); ++r)
      if (reps[r].type_id == id) return r;
    return reps.size();
  };
  for (auto& nt : out)
    if (auto r = rank(nt.type_id); r < reps.size()) nt.labeling = reps[r].labeling;
  std::stable_sort(out.begin(), out.end(),
                   [&](const auto& x, const auto& y) { return rank(x.type_id) < rank(y.type_id); });
  for (auto& nt : out) nt.forced_vertices = forced_vertices(nt);
  return out;
}

std::optional<std::array<EdgeId, 20>> neighborhood_edges(const Fragment& host, FaceId f) {
  using NF = NeighborhoodFragment;
  const auto& face = host.face(f);
  if (face.edges.size() != 5) return std::nullopt;
  std::array<EdgeId, 20> out;
  out.fill(kNone);
  for (int k = 1; k <= 5; ++k) {
    // A_k = u_{k-1}; the center edge A_k A_{k+1} is e_{k-1}.
    EdgeId ce = face.edges[k - 1];
    out[NF::center_edge(k)] = ce;
    FaceId g = host.across(f, k - 1);
    if (g == kNone) return std::nullopt;
    const auto& gf = host.face(g);
    VertexId a_next = face.vertices[k % 5];
    int q = -1;
    for (int i = 0; i < 5; ++i)
      if (gf.vertices[i] == a_next && gf.edges[i] == ce) q = i;
    if (q < 0) return std::nullopt;
    auto ge = [&](int step) { return gf.edges[(q + step) % 5]; };
    auto place = [&](EdgeId slot, EdgeId e) {
      if (out[slot] != kNone && out[slot] != e) return false;
      out[slot] = e;
      return true;
    };
    if (!place(NF::spoke(k), ge(1)) || !place(NF::outer_edges(k)[0], ge(2)) ||
        !place(NF::outer_edges(k)[1], ge(3)) || !place(NF::spoke(k % 5 + 1), ge(4)))
      return std::nullopt;
  }
  std::vector<EdgeId> sorted(out.begin(), out.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  return out;
}

std::optional<std::string> neighborhood_type(const Fragment& host, const Labeling& l, FaceId f) {
  auto edges = neighborhood_edges(host, f);
  if (!edges) return std::nullopt;
  std::string s(20, '.');
  for (int i = 0; i < 20; ++i) s[i] = l.str()[(*edges)[i]];
  Labeling local(l.pattern(), s);
  if (!local.is_total()) return std::nullopt;
  const auto& index = type_index(l.pattern());
  auto it = index.find(canonicalize(local, standard_group()).str());
  if (it == index.end()) return std::nullopt;
  return it->second;
}

namespace {

// Standard fragment plus the two outer tiles around neighbor P_i.
Fragment extended_fragment(int i) {
  using NF = NeighborhoodFragment;
  const auto& base = standard().fragment();
  std::vector<Edge> edges = base.edges();
  std::vector<Face> faces = base.faces();
  std::size_t vcount = base.vertex_count();
  auto C = [](int k) { return NF::outer_vertex((k + 4) % 5 + 1); };
  auto B = [](int k) { return NF::mid_vertex((k + 4) % 5 + 1); };
  VertexId w = static_cast<VertexId>(vcount++), y = static_cast<VertexId>(vcount++),
           w2 = static_cast<VertexId>(vcount++);
  auto edge_of = [&](VertexId u, VertexId v) {
    for (EdgeId e = 0; e < edges.size(); ++e)
      if ((edges[e].v1 == u && edges[e].v2 == v) || (edges[e].v1 == v && edges[e].v2 == u)) return e;
    edges.push_back({u, v});
    return static_cast<EdgeId>(edges.size() - 1);
  };
  auto add_face = [&](std::array<VertexId, 5> cyc) {
    Face face;
    for (int k = 0; k < 5; ++k) {
      face.vertices.push_back(cyc[k]);
      face.edges.push_back(edge_of(cyc[k], cyc[(k + 1) % 5]));
    }
    faces.push_back(std::move(face));
  };
  add_face({C(i), B(i), C(i - 1), w, y});
  add_face({C(i + 1), B(i + 1), C(i), y, w2});
  return Fragment(vcount, std::move(edges), std::move(faces));
}

}  // namespace

PropagationTable propagation(PatternTag p) {
  PropagationTable table;
  table.pattern = p;
  auto reps = type_representatives(p);
  std::vector<Fragment> ext;
  for (int i = 1; i <= 5; ++i) ext.push_back(extended_fragment(i));
  for (const auto& rep : reps) {
    table.types.push_back(rep.type_id);
    std::array<PropagationCell, 5> row;
    for (int i = 1; i <= 5; ++i) {
      const auto& host = ext[i - 1];
      std::string seed = rep.labeling.str() + std::string(host.edge_count() - 20, '.');
      std::vector<std::string> found;
      // A forced vertex already rules out a degree-3 neighbor: the seed fails on an outer tile.
      Labeling start(p, seed);
      if (is_valid(host, start))
        for_each_completion(host, pattern(p), start, [&](const Labeling& l) {
          auto t = neighborhood_type(host, l, NeighborhoodFragment::neighbor(i));
          found.push_back(t ? *t : "?");
          return true;
        });
      auto& cell = row[i - 1];
      cell.blocked = found.empty();
      for (const auto& r : reps)
        if (std::find(found.begin(), found.end(), r.type_id) != found.end()) cell.types.push_back(r.type_id);
      if (std::find(found.begin(), found.end(), "?") != found.end()) cell.types.push_back("?");
    }
    table.rows.push_back(row);
  }
  return table;
}

SpokeBreakdown a4b_breakdown() {
  using NF = NeighborhoodFragment;
  SpokeBreakdown out;
  for (const auto& nt : classify_neighborhoods(PatternTag::a4b)) {
    const auto& l = nt.canonical;
    int k = 0;
    for (int i = 1; i <= 5; ++i)
      if (l.get(NF::center_edge(i)) == Label::b) k = i;
    std::vector<int> spokes;
    for (int i = 1; i <= 5; ++i)
      if (l.get(NF::spoke(i)) == Label::b) spokes.push_back(i);
    int opposite = (k + 2) % 5 + 1;
    if (spokes.size() >= 2)
      ++out.two;
    else if (spokes.size() == 1)
      ++(spokes[0] == opposite ? out.central : out.sideways);
    else {
      ++out.none;
      if (!forced_vertices(PatternTag::a4b, l).empty()) ++out.none_forced;
    }
  }
  return out;
}

}  // namespace pentaglobe
