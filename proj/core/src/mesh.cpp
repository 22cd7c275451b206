#include "pentaglobe/mesh.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pentaglobe {

Fragment::Fragment(std::size_t vertex_count, std::vector<Edge> edges, std::vector<Face> faces)
    : vertex_count_(vertex_count), edges_(std::move(edges)), faces_(std::move(faces)) {
  edge_faces_.assign(edges_.size(), {kNone, kNone});
  for (FaceId f = 0; f < faces_.size(); ++f)
    for (EdgeId e : faces_[f].edges) {
      if (e >= edges_.size()) throw std::invalid_argument("face refers to unknown edge");
      auto& slot = edge_faces_[e];
      if (slot[0] == kNone)
        slot[0] = f;
      else if (slot[1] == kNone)
        slot[1] = f;
      else
        throw std::invalid_argument("edge " + std::to_string(e) + " borders more than two faces");
    }

  degree_.assign(vertex_count_, 0);
  for (const auto& e : edges_) {
    if (e.v1 >= vertex_count_ || e.v2 >= vertex_count_) throw std::invalid_argument("edge refers to unknown vertex");
    ++degree_[e.v1];
    ++degree_[e.v2];
  }

  on_boundary_.assign(vertex_count_, false);
  // Directed boundary edges follow their single face's orientation.
  std::multimap<VertexId, std::pair<EdgeId, VertexId>> out;
  std::vector<EdgeId> bedges;
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (edge_faces_[e][1] != kNone) continue;
    on_boundary_[edges_[e].v1] = on_boundary_[edges_[e].v2] = true;
    bedges.push_back(e);
    FaceId f = edge_faces_[e][0];
    if (f == kNone) continue;
    const auto& face = faces_[f];
    for (std::size_t i = 0; i < face.edges.size(); ++i)
      if (face.edges[i] == e && i < face.vertices.size()) {
        out.emplace(face.vertices[i], std::make_pair(e, face.vertices[(i + 1) % face.vertices.size()]));
        break;
      }
  }
  std::set<EdgeId> used;
  for (EdgeId start : bedges) {
    if (used.count(start)) continue;
    EdgeId cur = start;
    while (!used.count(cur)) {
      used.insert(cur);
      boundary_.push_back(cur);
      VertexId head = kNone;
      for (auto& [v, entry] : out)
        if (entry.first == cur) head = entry.second;
      if (head == kNone) break;
      EdgeId next = kNone;
      auto [lo, hi] = out.equal_range(head);
      for (auto it = lo; it != hi; ++it)
        if (!used.count(it->second.first)) {
          next = it->second.first;
          break;
        }
      if (next == kNone) break;
      cur = next;
    }
  }
}

int Fragment::incidence(EdgeId e) const {
  return (edge_faces_[e][0] != kNone) + (edge_faces_[e][1] != kNone);
}

FaceId Fragment::across(FaceId f, int pos) const {
  const auto& slot = edge_faces_[faces_[f].edges[pos]];
  return slot[0] == f ? slot[1] : slot[0];
}

int Fragment::position_in(FaceId f, EdgeId e) const {
  const auto& es = faces_[f].edges;
  for (std::size_t i = 0; i < es.size(); ++i)
    if (es[i] == e) return static_cast<int>(i);
  return -1;
}

Fragment Fragment::restrict_to(const std::vector<FaceId>& faces, std::vector<VertexId>* vertex_origin,
                               std::vector<EdgeId>* edge_origin) const {
  std::map<VertexId, VertexId> vmap;
  std::map<EdgeId, EdgeId> emap;
  std::vector<VertexId> vorig;
  std::vector<EdgeId> eorig;
  std::vector<Face> out_faces;
  for (FaceId f : faces) {
    Face nf;
    for (VertexId v : faces_[f].vertices) {
      auto [it, fresh] = vmap.emplace(v, static_cast<VertexId>(vorig.size()));
      if (fresh) vorig.push_back(v);
      nf.vertices.push_back(it->second);
    }
    for (EdgeId e : faces_[f].edges) {
      auto [it, fresh] = emap.emplace(e, static_cast<EdgeId>(eorig.size()));
      if (fresh) eorig.push_back(e);
      nf.edges.push_back(it->second);
    }
    out_faces.push_back(std::move(nf));
  }
  std::vector<Edge> out_edges;
  for (EdgeId e : eorig) out_edges.push_back({vmap.at(edges_[e].v1), vmap.at(edges_[e].v2)});
  if (vertex_origin) *vertex_origin = vorig;
  if (edge_origin) *edge_origin = eorig;
  return Fragment(vorig.size(), std::move(out_edges), std::move(out_faces));
}

bool Fragment::operator==(const Fragment& o) const {
  if (vertex_count_ != o.vertex_count_ || edges_.size() != o.edges_.size() || faces_.size() != o.faces_.size())
    return false;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].v1 != o.edges_[i].v1 || edges_[i].v2 != o.edges_[i].v2) return false;
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].vertices != o.faces_[i].vertices || faces_[i].edges != o.faces_[i].edges) return false;
  return true;
}

NeighborhoodFragment::NeighborhoodFragment() {
  auto A = [](int i) { return inner_vertex((i - 1 + 5) % 5 + 1); };
  auto B = [](int i) { return mid_vertex((i - 1 + 5) % 5 + 1); };
  auto C = [](int i) { return outer_vertex((i - 1 + 5) % 5 + 1); };
  std::vector<Edge> edges(20);
  for (int i = 1; i <= 5; ++i) {
    edges[center_edge(i)] = {A(i), A(i + 1)};
    edges[spoke(i)] = {A(i), B(i)};
    edges[outer_edges(i)[0]] = {B(i), C(i)};
    edges[outer_edges(i)[1]] = {C(i), B(i + 1)};
  }
  std::vector<Face> faces(6);
  for (int i = 1; i <= 5; ++i) {
    faces[0].vertices.push_back(A(i));
    faces[0].edges.push_back(center_edge(i));
  }
  for (int i = 1; i <= 5; ++i) {
    auto& f = faces[i];
    f.vertices = {A(i + 1), A(i), B(i), C(i), B(i + 1)};
    f.edges = {center_edge(i), spoke(i), outer_edges(i)[0], outer_edges(i)[1], spoke(i % 5 + 1)};
  }
  fragment_ = Fragment(15, std::move(edges), std::move(faces));
}

std::string NeighborhoodFragment::vertex_name(VertexId v) {
  static const char kRing[] = {'A', 'B', 'C'};
  return std::string(1, kRing[v / 5]) + std::to_string(v % 5 + 1);
}

Fragment build_neighborhood_fragment() { return NeighborhoodFragment().fragment(); }

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const ValidationReport::Check* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

std::string join_ids(const std::vector<std::uint32_t>& ids, std::size_t limit = 8) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ids.size() && i < limit; ++i) os << (i ? "," : "") << ids[i];
  if (ids.size() > limit) os << ",...";
  return os.str();
}

void add(ValidationReport& r, std::string name, const std::vector<std::uint32_t>& bad, std::string what) {
  bool pass = bad.empty();
  std::string detail = pass ? "" : what + " " + join_ids(bad);
  r.checks.push_back({std::move(name), pass, std::move(detail)});
}

}  // namespace

ValidationReport validate(const Fragment& f) {
  ValidationReport r;
  std::vector<std::uint32_t> bad_size, bad_walk, bad_incidence, bad_orientation, bad_degree;
  std::set<std::pair<VertexId, VertexId>> directed;
  std::map<EdgeId, int> dir_count;
  for (FaceId i = 0; i < f.face_count(); ++i) {
    const auto& face = f.face(i);
    if (face.edges.size() != 5 || face.vertices.size() != 5) {
      bad_size.push_back(i);
      continue;
    }
    std::set<VertexId> vs(face.vertices.begin(), face.vertices.end());
    std::set<EdgeId> es(face.edges.begin(), face.edges.end());
    bool walk = vs.size() == 5 && es.size() == 5;
    for (int k = 0; k < 5 && walk; ++k) {
      const auto& e = f.edge(face.edges[k]);
      VertexId u = face.vertices[k], w = face.vertices[(k + 1) % 5];
      walk = (e.v1 == u && e.v2 == w) || (e.v1 == w && e.v2 == u);
    }
    if (!walk) bad_walk.push_back(i);
  }
  // Consistent orientation: the two faces of an interior edge traverse it in opposite directions.
  for (EdgeId e = 0; e < f.edge_count(); ++e) {
    int inc = f.incidence(e);
    if (inc < 1) {
      bad_incidence.push_back(e);
      continue;
    }
    if (inc == 2) {
      auto [f0, f1] = f.faces_of(e);
      auto dir = [&](FaceId g) {
        int p = f.position_in(g, e);
        const auto& face = f.face(g);
        return std::make_pair(face.vertices[p], face.vertices[(p + 1) % face.vertices.size()]);
      };
      if (f.face(f0).vertices.size() == f.face(f0).edges.size() &&
          f.face(f1).vertices.size() == f.face(f1).edges.size() && dir(f0) == dir(f1))
        bad_orientation.push_back(e);
    }
  }
  add(r, "face_size", bad_size, "non-pentagonal faces");
  add(r, "face_walk", bad_walk, "faces not forming a closed walk of distinct vertices/edges");
  add(r, "edge_incidence", bad_incidence, "edges bordering no face");
  add(r, "orientation", bad_orientation, "edges traversed twice in the same direction");

  std::vector<bool> seen(f.face_count(), false);
  std::vector<FaceId> stack;
  if (f.face_count()) {
    stack.push_back(0);
    seen[0] = true;
  }
  while (!stack.empty()) {
    FaceId g = stack.back();
    stack.pop_back();
    for (std::size_t p = 0; p < f.face(g).edges.size(); ++p) {
      FaceId h = f.across(g, static_cast<int>(p));
      if (h != kNone && !seen[h]) {
        seen[h] = true;
        stack.push_back(h);
      }
    }
  }
  std::vector<std::uint32_t> unreached;
  for (FaceId g = 0; g < f.face_count(); ++g)
    if (!seen[g]) unreached.push_back(g);
  add(r, "connected", unreached, "faces unreachable from face 0");

  for (VertexId v = 0; v < f.vertex_count(); ++v)
    if (f.is_interior_vertex(v) && f.degree(v) < 3) bad_degree.push_back(v);
  add(r, "interior_degree", bad_degree, "interior vertices of degree < 3");
  return r;
}

ValidationReport validate(const TimezoneTemplate& t) {
  ValidationReport r = validate(t.fragment);
  auto expect = [&](std::string name, bool pass, std::string detail) {
    r.checks.push_back({std::move(name), pass, pass ? "" : std::move(detail)});
  };
  const std::size_t d = static_cast<std::size_t>(t.distance);
  expect("meridian_length", t.left_meridian.size() == d && t.right_meridian.size() == d,
         "meridians of length " + std::to_string(t.left_meridian.size()) + "/" +
             std::to_string(t.right_meridian.size()));
  std::size_t faces = t.distance == 5 ? 4 : 12;
  expect("template_faces", t.fragment.face_count() == faces,
         std::to_string(t.fragment.face_count()) + " faces");
  std::vector<std::uint32_t> bad;
  for (VertexId v = 0; v < t.fragment.vertex_count(); ++v)
    if (v != t.north && v != t.south && t.fragment.is_interior_vertex(v) && t.fragment.degree(v) != 3)
      bad.push_back(v);
  add(r, "template_degree", bad, "interior vertices not of degree 3");
  if (t.distance == 4) {
    std::vector<FaceId> all = t.meridian_part;
    all.insert(all.end(), t.core_part.begin(), t.core_part.end());
    std::sort(all.begin(), all.end());
    std::vector<FaceId> want(t.fragment.face_count());
    std::iota(want.begin(), want.end(), 0);
    expect("part_partition", all == want, "meridian and core parts do not partition the faces");
  }
  try {
    auto ring = build_earth_map(t.distance, minimum_timezones(t.distance));
    expect("gluing", validate(ring).ok(), "ring of copies fails validation");
  } catch (const std::exception& ex) {
    expect("gluing", false, ex.what());
  }
  return r;
}

ValidationReport validate(const EarthMap& m) {
  ValidationReport r = validate(m.mesh);
  const auto& f = m.mesh;
  auto expect = [&](std::string name, bool pass, std::string detail) {
    r.checks.push_back({std::move(name), pass, pass ? "" : std::move(detail)});
  };
  long v = static_cast<long>(f.vertex_count()), e = static_cast<long>(f.edge_count()),
       fc = static_cast<long>(f.face_count());
  expect("closed", f.is_closed(), std::to_string(f.boundary_edges().size()) + " boundary edges");
  expect("euler", v - e + fc == 2, "v-e+f = " + std::to_string(v - e + fc));
  expect("edge_face_ratio", 2 * e == 5 * fc, "2e=" + std::to_string(2 * e) + " 5f=" + std::to_string(5 * fc));
  std::vector<std::uint32_t> high;
  std::map<int, long> census;
  for (VertexId x = 0; x < f.vertex_count(); ++x) {
    ++census[f.degree(x)];
    if (f.degree(x) > 3) high.push_back(x);
  }
  bool two = high.size() == 2 &&
             ((high[0] == m.north && high[1] == m.south) || (high[0] == m.south && high[1] == m.north));
  expect("two_poles", two, std::to_string(high.size()) + " vertices of degree > 3: " + join_ids(high));
  int want = m.distance == 5 ? m.timezones : 3 * m.timezones;
  int dn = f.degree(m.north), ds = f.degree(m.south);
  r.checks.push_back({"pole_degree", dn == want && ds == want,
                      "north " + std::to_string(dn) + ", south " + std::to_string(ds) + ", expected " +
                          std::to_string(want)});
  long rhs = 20;
  bool low = false;
  for (auto [deg, cnt] : census) {
    if (deg < 3) low = true;
    if (deg >= 4) rhs += (3L * deg - 10) * cnt;
  }
  long v3 = census.count(3) ? census[3] : 0;
  expect("census", !low && v3 == rhs, "v3=" + std::to_string(v3) + " rhs=" + std::to_string(rhs));
  expect("tile_count", fc > 12, std::to_string(fc) + " tiles");
  std::vector<int> covered(f.face_count(), 0);
  for (std::size_t k = 0; k < m.timezone_faces.size(); ++k)
    for (FaceId g : m.timezone_faces[k]) ++covered[g];
  bool cover = m.decomposition.size() == f.face_count() &&
               std::all_of(covered.begin(), covered.end(), [](int c) { return c == 1; });
  expect("decomposition", cover, "timezone decomposition does not cover every face once");
  return r;
}

}  // namespace pentaglobe
