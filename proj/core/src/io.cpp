#include "pentaglobe/io.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

namespace pentaglobe {

using nlohmann::json;

namespace {

json fragment_json(const Fragment& f) {
  json out;
  out["vertices"] = json::array();
  for (std::size_t v = 0; v < f.vertex_count(); ++v) out["vertices"].push_back(v);
  out["edges"] = json::array();
  for (std::size_t e = 0; e < f.edge_count(); ++e) out["edges"].push_back({e, f.edge(e).v1, f.edge(e).v2});
  out["faces"] = json::array();
  for (std::size_t i = 0; i < f.face_count(); ++i) out["faces"].push_back({i, f.face(i).edges});
  if (!f.is_closed()) out["boundary"] = f.boundary_edges();
  return out;
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed json: ") + e.what());
  }
}

// Ids must be exactly 0..n-1 in some order; returns the position of every id.
std::vector<std::size_t> dense(const std::vector<std::uint64_t>& ids, const char* what) {
  std::vector<std::size_t> pos(ids.size(), ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] >= ids.size() || pos[ids[i]] != ids.size())
      throw FormatError(std::string(what) + " ids must be distinct and numbered from 0");
    pos[ids[i]] = i;
  }
  return pos;
}

// Recovers the vertex cycle of a face from its edge cycle.
Face face_from_edges(const std::vector<Edge>& edges, const std::vector<EdgeId>& cycle) {
  for (int choice = 0; choice < 2; ++choice) {
    const Edge& first = edges[cycle[0]];
    VertexId v = choice == 0 ? first.v1 : first.v2;
    Face f;
    bool ok = true;
    for (EdgeId e : cycle) {
      const Edge& ed = edges[e];
      if (ed.v1 != v && ed.v2 != v) {
        ok = false;
        break;
      }
      f.vertices.push_back(v);
      f.edges.push_back(e);
      v = ed.v1 == v ? ed.v2 : ed.v1;
    }
    if (ok && v == f.vertices.front()) return f;
  }
  throw FormatError("face edges do not form a closed walk");
}

}  // namespace

std::string to_json(const Fragment& f) { return fragment_json(f).dump(2); }

std::string to_json(const EarthMap& m) {
  json out = fragment_json(m.mesh);
  out["poles"] = {m.north, m.south};
  out["meridians"] = m.meridians;
  return out.dump(2);
}

MeshDocument mesh_from_json(std::string_view text) {
  json in = parse(text);
  try {
    std::vector<std::uint64_t> vids = in.at("vertices").get<std::vector<std::uint64_t>>();
    dense(vids, "vertex");
    std::vector<std::uint64_t> eids;
    for (const auto& e : in.at("edges")) eids.push_back(e.at(0).get<std::uint64_t>());
    auto epos = dense(eids, "edge");
    std::vector<Edge> edges(eids.size());
    for (std::size_t id = 0; id < eids.size(); ++id) {
      const auto& e = in["edges"][epos[id]];
      VertexId a = e.at(1).get<VertexId>(), b = e.at(2).get<VertexId>();
      if (a >= vids.size() || b >= vids.size()) throw FormatError("edge refers to an unknown vertex");
      edges[id] = {a, b};
    }
    std::vector<std::uint64_t> fids;
    for (const auto& f : in.at("faces")) fids.push_back(f.at(0).get<std::uint64_t>());
    auto fpos = dense(fids, "face");
    std::vector<Face> faces;
    for (std::size_t id = 0; id < fids.size(); ++id) {
      auto cycle = in["faces"][fpos[id]].at(1).get<std::vector<EdgeId>>();
      if (cycle.size() != 5) throw FormatError("faces must have five edges");
      for (EdgeId e : cycle)
        if (e >= edges.size()) throw FormatError("face refers to an unknown edge");
      faces.push_back(face_from_edges(edges, cycle));
    }
    MeshDocument doc{Fragment(vids.size(), std::move(edges), std::move(faces)), std::nullopt, {}};
    if (in.contains("poles")) doc.poles = {in["poles"].at(0).get<VertexId>(), in["poles"].at(1).get<VertexId>()};
    if (in.contains("meridians")) doc.meridians = in["meridians"].get<std::vector<std::vector<EdgeId>>>();
    return doc;
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad mesh document: ") + e.what());
  }
}

std::string to_json(const Labeling& l) {
  // Numeric key order, not lexicographic.
  std::string body;
  for (std::size_t e = 0; e < l.size(); ++e) {
    auto lab = l.get(static_cast<EdgeId>(e));
    if (!lab) continue;
    if (!body.empty()) body += ",\n";
    body += "    \"" + std::to_string(e) + "\": \"" + to_char(*lab) + "\"";
  }
  return "{\n  \"pattern\": \"" + std::string(pattern(l.pattern()).name()) + "\",\n  \"labels\": {" +
         (body.empty() ? "" : "\n" + body + "\n  ") + "}\n}";
}

Labeling labeling_from_json(std::string_view text, std::size_t edge_count) {
  json in = parse(text);
  try {
    auto tag = parse_pattern(in.at("pattern").get<std::string>());
    if (!tag) throw FormatError("unknown pattern " + in["pattern"].get<std::string>());
    Labeling l(*tag, edge_count);
    for (const auto& [key, value] : in.at("labels").items()) {
      std::size_t pos = 0;
      unsigned long e = std::stoul(key, &pos);
      if (pos != key.size() || e >= edge_count) throw FormatError("bad edge id " + key);
      auto s = value.get<std::string>();
      auto lab = s.size() == 1 ? label_from_char(s[0]) : std::nullopt;
      if (!lab || !pattern(*tag).uses(*lab)) throw FormatError("bad label " + s);
      l.set(static_cast<EdgeId>(e), *lab);
    }
    return l;
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad labeling document: ") + e.what());
  } catch (const std::logic_error& e) {
    throw FormatError(std::string("bad labeling document: ") + e.what());
  }
}

std::string to_json(const PropagationTable& t) {
  json rows = json::object();
  for (std::size_t i = 0; i < t.types.size(); ++i) {
    json row = json::object();
    for (int k = 0; k < 5; ++k) {
      const auto& cell = t.rows[i][k];
      row["P" + std::to_string(k + 1)] = cell.blocked ? json("x") : json(cell.types);
    }
    rows[t.types[i]] = row;
  }
  json out{{"pattern", std::string(pattern(t.pattern).name())}, {"types", t.types}, {"rows", rows}};
  return out.dump(2);
}

PropagationTable propagation_from_json(std::string_view text) {
  json in = parse(text);
  try {
    auto tag = parse_pattern(in.at("pattern").get<std::string>());
    if (!tag) throw FormatError("unknown pattern");
    PropagationTable t{*tag, in.at("types").get<std::vector<std::string>>(), {}};
    for (const auto& type : t.types) {
      const auto& row = in.at("rows").at(type);
      std::array<PropagationCell, 5> cells;
      for (int k = 0; k < 5; ++k) {
        const auto& v = row.at("P" + std::to_string(k + 1));
        if (v.is_string()) {
          if (v.get<std::string>() != "x") throw FormatError("cell must be a list or \"x\"");
          cells[k].blocked = true;
        } else {
          cells[k].types = v.get<std::vector<std::string>>();
        }
      }
      t.rows.push_back(cells);
    }
    return t;
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad propagation document: ") + e.what());
  }
}

}  // namespace pentaglobe
