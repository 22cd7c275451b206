#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include "pentaglobe/mesh.hpp"

namespace pentaglobe {

namespace {

// Hand transcription of the five timezone strips. Faces are counterclockwise
// token cycles. "N"/"S" are the poles; for distance 1 the right meridian is
// written with "N'"/"S'" to tell the two parallel pole-to-pole edges apart.
// Left meridian tokens are L1..L(d-1), right ones R1..R(d-1).
struct NamedPoint {
  const char* name;
  double x, y;
};

struct Layout {
  int distance;
  std::vector<NamedPoint> points;
  std::vector<std::array<const char*, 5>> faces;
  std::vector<const char*> left;
  std::vector<const char*> right;
  std::vector<int> core_tiles;
  std::vector<int> meridian_part;
  std::vector<const char*> inner;
  std::vector<std::array<const char*, 2>> north_notation;
  std::vector<std::array<const char*, 2>> south_notation;
};

const Layout& layout(int d) {
  static const Layout d5{
      5,
      {{"N", 0, 1.2}, {"S", 0, -1.2}, {"L1", -0.3, 0.7}, {"L2", -0.6, 0.3}, {"L3", -0.6, -0.3},
       {"L4", -0.9, -0.7}, {"R1", 0.9, 0.7}, {"R2", 0.6, 0.3}, {"R3", 0.6, -0.3}, {"R4", 0.3, -0.7},
       {"G", 0, 0.3}, {"H", 0, -0.3}},
      {{"N", "L1", "G", "R2", "R1"},
       {"L1", "L2", "L3", "H", "G"},
       {"G", "H", "R4", "R3", "R2"},
       {"L3", "L4", "S", "R4", "H"}},
      {"N", "L1", "L2", "L3", "L4", "S"},
      {"N", "R1", "R2", "R3", "R4", "S"},
      {1, 2},
      {},
      {},
      {{"N", "L1"}},
      {{"L4", "S"}}};
  static const Layout d4{
      4,
      {{"N", 0, 1.2}, {"S", 0, -1.2}, {"L1", -1.9, 0.7}, {"L2", -1.7, 0}, {"L3", -1.9, -0.7},
       {"M1", -1.2, 0.7}, {"M2", -1.4, 0}, {"M3", -1.2, -0.7}, {"R1", 1.2, 0.7}, {"R2", 1.4, 0},
       {"R3", 1.2, -0.7}, {"U", 0, 0.8}, {"D", 0, -0.8}, {"Xul", -0.4, 0.5}, {"Xur", 0.4, 0.5},
       {"Xdl", -0.4, -0.5}, {"Xdr", 0.4, -0.5}, {"Cl", -0.3, 0}, {"Cr", 0.3, 0}, {"Yul", -0.9, 0.4},
       {"Yur", 0.9, 0.4}, {"Ydl", -0.9, -0.4}, {"Ydr", 0.9, -0.4}},
      {{"N", "L1", "L2", "M2", "M1"},
       {"L2", "L3", "S", "M3", "M2"},
       {"N", "M1", "Yul", "Xul", "U"},
       {"M1", "M2", "M3", "Ydl", "Yul"},
       {"Xul", "Yul", "Ydl", "Xdl", "Cl"},
       {"D", "Xdl", "Ydl", "M3", "S"},
       {"U", "Xul", "Cl", "Cr", "Xur"},
       {"Cl", "Xdl", "D", "Xdr", "Cr"},
       {"N", "U", "Xur", "Yur", "R1"},
       {"Xur", "Cr", "Xdr", "Ydr", "Yur"},
       {"Yur", "Ydr", "R3", "R2", "R1"},
       {"R3", "Ydr", "Xdr", "D", "S"}},
      {"N", "L1", "L2", "L3", "S"},
      {"N", "R1", "R2", "R3", "S"},
      {6, 7},
      {0, 1},
      {"N", "M1", "M2", "M3", "S"},
      {{"N", "M1"}, {"N", "U"}, {"N", "R1"}},
      {{"M3", "S"}, {"D", "S"}, {"R3", "S"}}};
  static const Layout d3{
      3,
      {{"N", 0, 1.2}, {"S", 0, -1.2}, {"L1", -1.76, 0.16}, {"L2", -1.44, -0.16}, {"z2", -1.12, 0.16},
       {"z3", -0.8, -0.16}, {"z4", -0.48, 0.16}, {"z5", -0.16, -0.16}, {"z6", 0.16, 0.16},
       {"z7", 0.48, -0.16}, {"z8", 0.8, 0.16}, {"z9", 1.12, -0.16}, {"R1", 1.44, 0.16},
       {"R2", 1.76, -0.16}, {"u0", -0.96, 0.7}, {"u1", -0.48, 0.6}, {"u2", 0.16, 0.6}, {"u3", 0.64, 0.7},
       {"l0", -0.64, -0.7}, {"l1", -0.16, -0.6}, {"l2", 0.48, -0.6}, {"l3", 0.96, -0.7}},
      {{"N", "L1", "L2", "z2", "u0"},
       {"N", "u0", "u1", "u2", "u3"},
       {"N", "u3", "z8", "z9", "R1"},
       {"u0", "z2", "z3", "z4", "u1"},
       {"u1", "z4", "z5", "z6", "u2"},
       {"u2", "z6", "z7", "z8", "u3"},
       {"S", "l0", "z3", "z2", "L2"},
       {"l1", "z5", "z4", "z3", "l0"},
       {"l2", "z7", "z6", "z5", "l1"},
       {"S", "l3", "l2", "l1", "l0"},
       {"l3", "z9", "z8", "z7", "l2"},
       {"S", "R2", "R1", "z9", "l3"}},
      {"N", "L1", "L2", "S"},
      {"N", "R1", "R2", "S"},
      {4, 8},
      {},
      {},
      {{"N", "L1"}, {"N", "u0"}, {"N", "u3"}},
      {{"l0", "S"}, {"l3", "S"}, {"R2", "S"}}};
  static const Layout d2{
      2,
      {{"N", 0, 1.2}, {"S", 0, -1.2}, {"L1", -0.9, 0}, {"R1", 1.8, 0}, {"Q", -0.6, 0}, {"Au", 0, 0.2},
       {"Ad", 0, -0.2}, {"Bu", -0.4, 0.4}, {"Bd", -0.4, -0.4}, {"Cu", 0.4, 0.4}, {"Cd", 0.4, -0.4},
       {"Du", -0.1, 0.8}, {"Dd", -0.1, -0.8}, {"Eu", 0.4, 0.7}, {"Ed", 0.4, -0.7}, {"G", 0.6, 0},
       {"H", 0.9, 0}, {"Iu", 1, 0.5}, {"Id", 1, -0.5}, {"Ju", 1.3, 0.6}, {"Jd", 1.3, -0.6}},
      {{"N", "L1", "Q", "Bu", "Du"},
       {"Eu", "Du", "Bu", "Au", "Cu"},
       {"N", "Du", "Eu", "Iu", "Ju"},
       {"Iu", "Eu", "Cu", "G", "H"},
       {"Au", "Bu", "Q", "Bd", "Ad"},
       {"Au", "Ad", "Cd", "G", "Cu"},
       {"Iu", "H", "Id", "Jd", "Ju"},
       {"N", "Ju", "Jd", "S", "R1"},
       {"Dd", "Bd", "Q", "L1", "S"},
       {"Cd", "Ad", "Bd", "Dd", "Ed"},
       {"Jd", "Id", "Ed", "Dd", "S"},
       {"H", "G", "Cd", "Ed", "Id"}},
      {"N", "L1", "S"},
      {"N", "R1", "S"},
      {5},
      {},
      {},
      {{"N", "L1"}, {"N", "Du"}, {"N", "Ju"}},
      {{"L1", "S"}, {"Dd", "S"}, {"Jd", "S"}}};
  static const Layout d1{
      1,
      {{"N", 0, 1.2}, {"S", 0, -1.2}, {"Au", 0, 0.2}, {"Ad", 0, -0.2}, {"Xpu", 0.4, 0.4},
       {"Xmu", -0.4, 0.4}, {"Xpd", 0.4, -0.4}, {"Xmd", -0.4, -0.4}, {"Gp", 0.6, 0}, {"Gm", -0.6, 0},
       {"Hp", 0.9, 0}, {"Hm", -0.9, 0}, {"Ipu", 1, 0.8}, {"Imu", -1, 0.8}, {"Ipd", 1, -0.8},
       {"Imd", -1, -0.8}, {"Epu", 0.4, 0.7}, {"Emu", -0.4, 0.7}, {"Epd", 0.4, -0.7}, {"Emd", -0.4, -0.7}},
      {{"N", "Imu", "Emu", "Epu", "Ipu"},
       {"S", "Imd", "Hm", "Imu", "N"},
       {"Hm", "Gm", "Xmu", "Emu", "Imu"},
       {"Epu", "Emu", "Xmu", "Au", "Xpu"},
       {"Xmu", "Gm", "Xmd", "Ad", "Au"},
       {"Au", "Ad", "Xpd", "Gp", "Xpu"},
       {"Ipu", "Epu", "Xpu", "Gp", "Hp"},
       {"Imd", "Emd", "Xmd", "Gm", "Hm"},
       {"Xpd", "Ad", "Xmd", "Emd", "Epd"},
       {"Hp", "Gp", "Xpd", "Epd", "Ipd"},
       {"N'", "Ipu", "Hp", "Ipd", "S'"},
       {"Ipd", "Epd", "Emd", "Imd", "S"}},
      {"N", "S"},
      {"N'", "S'"},
      {4, 5},
      {},
      {},
      {{"N", "S"}, {"N", "Imu"}, {"N", "Ipu"}},
      {{"N", "S"}, {"Imd", "S"}, {"Ipd", "S"}}};
  switch (d) {
    case 1: return d1;
    case 2: return d2;
    case 3: return d3;
    case 4: return d4;
    case 5: return d5;
    default: throw std::invalid_argument("distance must be 1..5, got " + std::to_string(d));
  }
}

bool is_north(const std::string& t) { return t == "N" || t == "N'"; }
bool is_south(const std::string& t) { return t == "S" || t == "S'"; }

struct Assembly {
  Fragment fragment;
  std::vector<std::pair<int, FaceId>> decomposition;
  std::vector<std::vector<EdgeId>> meridians;
  std::vector<std::vector<VertexId>> meridian_vertices;
  std::map<std::string, VertexId> copy0_vertices;
  std::map<std::pair<std::string, std::string>, EdgeId> copy0_edges;
};

// Glues n copies of the strip side by side; closed joins the last copy back onto
// the first. The open single copy keeps its right meridian separate.
Assembly assemble(const Layout& s, int n, bool closed) {
  const int d = s.distance;
  std::map<std::tuple<int, int, int>, VertexId> vkeys;
  std::map<std::tuple<int, int, int, int>, EdgeId> ekeys;
  std::map<std::string, int> interior_index;
  for (std::size_t i = 0; i < s.points.size(); ++i) interior_index[s.points[i].name] = static_cast<int>(i);
  std::map<std::string, int> left_pos, right_pos;
  for (int j = 0; j <= d; ++j) {
    left_pos[s.left[j]] = j;
    right_pos[s.right[j]] = j;
  }
  auto wrap = [&](int k) { return closed ? k % n : k; };

  std::vector<Edge> edges;
  std::vector<Face> faces;
  std::size_t vcount = 2;
  Assembly out;
  int meridian_copies = closed ? n : n + 1;
  out.meridians.assign(meridian_copies, std::vector<EdgeId>(d, kNone));
  out.meridian_vertices.assign(meridian_copies, std::vector<VertexId>(d + 1, kNone));

  auto vertex = [&](int k, const std::string& t) -> VertexId {
    if (is_north(t)) return 0;
    if (is_south(t)) return 1;
    std::tuple<int, int, int> key;
    if (left_pos.count(t))
      key = {1, k, left_pos[t]};
    else if (right_pos.count(t))
      key = {1, wrap(k + 1), right_pos[t]};
    else
      key = {2, k, interior_index.at(t)};
    auto [it, fresh] = vkeys.emplace(key, static_cast<VertexId>(vcount));
    if (fresh) ++vcount;
    return it->second;
  };
  auto meridian_slot = [&](const std::vector<const char*>& side, const std::string& t1,
                           const std::string& t2) -> int {
    for (int j = 0; j < d; ++j)
      if ((t1 == side[j] && t2 == side[j + 1]) || (t2 == side[j] && t1 == side[j + 1])) return j;
    return -1;
  };

  for (int k = 0; k < n; ++k)
    for (std::size_t fi = 0; fi < s.faces.size(); ++fi) {
      Face face;
      for (int p = 0; p < 5; ++p) face.vertices.push_back(vertex(k, s.faces[fi][p]));
      for (int p = 0; p < 5; ++p) {
        std::string t1 = s.faces[fi][p], t2 = s.faces[fi][(p + 1) % 5];
        VertexId u = face.vertices[p], w = face.vertices[(p + 1) % 5];
        std::tuple<int, int, int, int> key;
        int mk = -1, mj = -1;
        if (int j = meridian_slot(s.left, t1, t2); j >= 0) {
          mk = k;
          mj = j;
        } else if (int j2 = meridian_slot(s.right, t1, t2); j2 >= 0) {
          mk = wrap(k + 1);
          mj = j2;
        }
        if (mk >= 0)
          key = {0, mk, mj, 0};
        else
          key = {1, static_cast<int>(std::min(u, w)), static_cast<int>(std::max(u, w)), 0};
        auto [it, fresh] = ekeys.emplace(key, static_cast<EdgeId>(edges.size()));
        if (fresh) edges.push_back({u, w});
        face.edges.push_back(it->second);
        if (mk >= 0) out.meridians[mk][mj] = it->second;
        if (k == 0) out.copy0_edges[{t1, t2}] = out.copy0_edges[{t2, t1}] = it->second;
      }
      if (k == 0)
        for (int p = 0; p < 5; ++p) out.copy0_vertices[s.faces[fi][p]] = face.vertices[p];
      out.decomposition.push_back({k, static_cast<FaceId>(fi)});
      faces.push_back(std::move(face));
    }
  for (const auto& [key, v] : vkeys)
    if (std::get<0>(key) == 1) out.meridian_vertices[std::get<1>(key)][std::get<2>(key)] = v;
  for (auto& mv : out.meridian_vertices) {
    mv[0] = 0;
    mv[d] = 1;
  }
  out.fragment = Fragment(vcount, std::move(edges), std::move(faces));
  return out;
}

}  // namespace

TimezoneTemplate build_timezone_template(int d) {
  const Layout& s = layout(d);
  Assembly a = assemble(s, 1, false);
  TimezoneTemplate t;
  t.distance = d;
  t.fragment = a.fragment;
  t.left_meridian = a.meridians[0];
  t.right_meridian = a.meridians[1];
  for (int j = 1; j < d; ++j) t.vertex_gluing.push_back({a.meridian_vertices[1][j], a.meridian_vertices[0][j]});
  for (EdgeId e = 0; e < t.fragment.edge_count(); ++e) {
    const auto& ed = t.fragment.edge(e);
    if (ed.v1 == t.north || ed.v2 == t.north) t.north_fan.push_back(e);
    if (ed.v1 == t.south || ed.v2 == t.south) t.south_fan.push_back(e);
  }
  for (int f : s.core_tiles) t.core_tiles.push_back(static_cast<FaceId>(f));
  for (FaceId f = 0; f < t.fragment.face_count(); ++f) {
    bool in_meridian = false;
    for (int m : s.meridian_part) in_meridian |= static_cast<int>(f) == m;
    if (s.meridian_part.empty()) break;
    (in_meridian ? t.meridian_part : t.core_part).push_back(f);
  }
  for (std::size_t j = 0; j + 1 < s.inner.size(); ++j)
    t.inner_meridian.push_back(a.copy0_edges.at({s.inner[j], s.inner[j + 1]}));
  for (const auto& [p, q] : s.north_notation) t.north_notation.push_back(a.copy0_edges.at({p, q}));
  for (const auto& [p, q] : s.south_notation) t.south_notation.push_back(a.copy0_edges.at({p, q}));

  t.vertex_names.assign(t.fragment.vertex_count(), "");
  t.positions.assign(t.fragment.vertex_count(), {0, 0});
  for (const auto& pt : s.points) {
    auto it = a.copy0_vertices.find(pt.name);
    if (it == a.copy0_vertices.end()) continue;
    t.vertex_names[it->second] = pt.name;
    t.positions[it->second] = {pt.x, pt.y};
  }
  return t;
}

int minimum_timezones(int d) {
  if (d < 1 || d > 5) throw std::invalid_argument("distance must be 1..5, got " + std::to_string(d));
  return d == 5 ? 4 : 2;
}

EarthMap build_earth_map(int d, int n) {
  const Layout& s = layout(d);
  if (n < minimum_timezones(d))
    throw std::invalid_argument("distance " + std::to_string(d) + " needs at least " +
                                std::to_string(minimum_timezones(d)) + " timezones, got " + std::to_string(n));
  Assembly a = assemble(s, n, true);
  Assembly single = assemble(s, 1, false);
  EarthMap m;
  m.distance = d;
  m.timezones = n;
  m.mesh = a.fragment;
  m.meridians = a.meridians;
  m.decomposition = a.decomposition;
  const std::size_t per = s.faces.size();
  m.timezone_edges.assign(n, std::vector<EdgeId>(single.fragment.edge_count(), kNone));
  m.timezone_faces.assign(n, {});
  for (int k = 0; k < n; ++k)
    for (std::size_t fi = 0; fi < per; ++fi) {
      FaceId g = static_cast<FaceId>(k * per + fi);
      m.timezone_faces[k].push_back(g);
      for (int p = 0; p < 5; ++p)
        m.timezone_edges[k][single.fragment.face(static_cast<FaceId>(fi)).edges[p]] = m.mesh.face(g).edges[p];
    }
  return m;
}

}  // namespace pentaglobe
