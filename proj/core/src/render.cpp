#include "pentaglobe/render.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>
#include <tuple>

namespace pentaglobe {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(x) < 0.005 ? 0.0 : x);
  return buf;
}

std::string stroke(char label) {
  switch (label) {
    case 'a': return R"(stroke="#000" stroke-width="1.2")";
    case 'b': return R"(stroke="#000" stroke-width="4")";
    case 'c': return R"(stroke="#000" stroke-width="1.2" stroke-dasharray="6,4")";
    default: return R"(stroke="#999" stroke-width="1" stroke-dasharray="1,3")";
  }
}

struct Segment {
  Point a, b;
  char label;
  double bend;
};

struct Panel {
  std::string title;
  std::vector<Segment> segments;
};

// Parallel edges between the same pair of points bend apart.
std::vector<double> bends(const Fragment& f) {
  std::map<std::pair<VertexId, VertexId>, int> seen;
  std::vector<double> out;
  for (const auto& e : f.edges()) {
    int k = seen[{std::min(e.v1, e.v2), std::max(e.v1, e.v2)}]++;
    out.push_back(k == 0 ? 0.0 : (k % 2 ? 1.0 : -1.0) * ((k + 1) / 2) * 0.25);
  }
  return out;
}

std::string draw(const std::vector<Panel>& panels, int columns, double cell_w, double cell_h, double scale,
                 Point origin) {
  int rows = static_cast<int>((panels.size() + columns - 1) / columns);
  std::ostringstream out;
  double w = columns * cell_w, h = std::max(rows, 1) * cell_h;
  out << R"(<svg xmlns="http://www.w3.org/2000/svg" width=")" << num(w) << R"(" height=")" << num(h)
      << R"(" viewBox="0 0 )" << num(w) << ' ' << num(h) << "\">\n";
  out << R"(<rect width="100%" height="100%" fill="#fff"/>)" << '\n';
  for (std::size_t i = 0; i < panels.size(); ++i) {
    double ox = (i % columns) * cell_w + origin.x, oy = (i / columns) * cell_h + origin.y;
    out << "<g>\n";
    if (!panels[i].title.empty())
      out << "<text x=\"" << num(ox) << "\" y=\"" << num((i / columns) * cell_h + 16)
          << R"(" font-family="sans-serif" font-size="13" text-anchor="middle">)" << panels[i].title << "</text>\n";
    for (const auto& s : panels[i].segments) {
      double x1 = ox + s.a.x * scale, y1 = oy - s.a.y * scale, x2 = ox + s.b.x * scale, y2 = oy - s.b.y * scale;
      if (s.bend == 0.0) {
        out << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2) << "\" y2=\"" << num(y2)
            << "\" " << stroke(s.label) << "/>\n";
      } else {
        double mx = (x1 + x2) / 2 - (y2 - y1) * s.bend, my = (y1 + y2) / 2 + (x2 - x1) * s.bend;
        out << "<path d=\"M" << num(x1) << ' ' << num(y1) << " Q" << num(mx) << ' ' << num(my) << ' ' << num(x2)
            << ' ' << num(y2) << "\" fill=\"none\" " << stroke(s.label) << "/>\n";
      }
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

Panel fragment_panel(const Fragment& f, const std::vector<Point>& pos, const Labeling& l, std::string title,
                     Point shift = {0, 0}) {
  Panel p{std::move(title), {}};
  auto bend = bends(f);
  for (std::size_t e = 0; e < f.edge_count(); ++e) {
    const auto& ed = f.edge(e);
    Point a{pos[ed.v1].x + shift.x, pos[ed.v1].y + shift.y}, b{pos[ed.v2].x + shift.x, pos[ed.v2].y + shift.y};
    p.segments.push_back({a, b, l.str().empty() ? '.' : l.str()[e], bend[e]});
  }
  return p;
}

std::vector<Point> neighborhood_positions() {
  std::vector<Point> pos(15);
  for (int i = 1; i <= 5; ++i) {
    double t = std::numbers::pi / 2 + 2 * std::numbers::pi * (i - 1) / 5;
    double u = t + std::numbers::pi / 5;
    pos[NeighborhoodFragment::inner_vertex(i)] = {std::cos(t), std::sin(t)};
    pos[NeighborhoodFragment::mid_vertex(i)] = {2 * std::cos(t), 2 * std::sin(t)};
    pos[NeighborhoodFragment::outer_vertex(i)] = {2.6 * std::cos(u), 2.6 * std::sin(u)};
  }
  return pos;
}

std::pair<double, double> extent(const std::vector<Point>& pos) {
  double w = 0, h = 0;
  for (const auto& p : pos) {
    w = std::max(w, std::abs(p.x));
    h = std::max(h, std::abs(p.y));
  }
  return {w, h};
}

}  // namespace

std::string render_neighborhoods_svg(PatternTag p, const std::vector<NeighborhoodTiling>& tilings) {
  NeighborhoodFragment nf;
  auto pos = neighborhood_positions();
  std::vector<Panel> panels;
  for (const auto& t : tilings)
    panels.push_back(fragment_panel(nf.fragment(), pos, t.labeling,
                                    std::string(pattern(p).name()) + " " + t.type_id));
  int cols = std::min<int>(6, std::max<int>(1, static_cast<int>(panels.size())));
  return draw(panels, cols, 200, 200, 32, {100, 110});
}

std::string render_timezone_svg(const TimezoneTemplate& t, const Labeling& l) {
  auto [w, h] = extent(t.positions);
  const double scale = 90;
  return draw({fragment_panel(t.fragment, t.positions, l, "distance " + std::to_string(t.distance))}, 1,
              2 * w * scale + 60, 2 * h * scale + 60, scale, {w * scale + 30, h * scale + 40});
}

std::string render_earth_map_svg(const EarthMap& m, const Labeling& l) {
  // Timezones side by side, each drawn with the strip coordinates.
  auto t = build_timezone_template(m.distance);
  auto [w, h] = extent(t.positions);
  const double scale = 70, step = 2 * w + 0.4;
  Panel panel{"distance " + std::to_string(m.distance) + ", " + std::to_string(m.timezones) + " timezones", {}};
  auto bend = bends(t.fragment);
  for (int k = 0; k < m.timezones; ++k) {
    double dx = k * step;
    for (std::size_t e = 0; e < t.fragment.edge_count(); ++e) {
      const auto& ed = t.fragment.edge(e);
      Point a{t.positions[ed.v1].x + dx, t.positions[ed.v1].y}, b{t.positions[ed.v2].x + dx, t.positions[ed.v2].y};
      panel.segments.push_back({a, b, l.str()[m.timezone_edges[k][e]], bend[e]});
    }
  }
  double width = (m.timezones * step) * scale + 60;
  return draw({panel}, 1, width, 2 * h * scale + 60, scale, {w * scale + 30, h * scale + 40});
}

namespace {

struct Aggregate {
  std::size_t from, to;
  ArrowKind kind;
  std::size_t first_tiling;
  std::size_t count;
};

std::vector<Aggregate> aggregate(const FamilyGraph& g) {
  std::map<std::tuple<std::size_t, std::size_t, int>, Aggregate> agg;
  for (const auto& a : g.arrows) {
    auto key = std::make_tuple(a.from, a.to, static_cast<int>(a.kind));
    auto [it, fresh] = agg.emplace(key, Aggregate{a.from, a.to, a.kind, a.tiling, 0});
    ++it->second.count;
    if (!fresh) it->second.first_tiling = std::min(it->second.first_tiling, a.tiling);
  }
  std::vector<Aggregate> out;
  for (auto& [k, v] : agg) out.push_back(v);
  return out;
}

std::string title(const FamilyGraph& g) {
  return std::string(pattern(g.pattern).name()) + " distance " + std::to_string(g.distance);
}

}  // namespace

std::string family_graph_dot(const FamilyGraph& g) {
  std::ostringstream out;
  out << "digraph \"" << title(g) << "\" {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) out << "  n" << i << " [label=\"" << g.nodes[i] << "\"];\n";
  for (const auto& a : aggregate(g))
    out << "  n" << a.from << " -> n" << a.to << " [label=\"tiling#" << a.first_tiling << " ×" << a.count << " ["
        << to_string(a.kind) << "]\"];\n";
  out << "}\n";
  return out.str();
}

std::string render_family_graph_svg(const FamilyGraph& g) {
  std::ostringstream out;
  const std::size_t n = g.nodes.size();
  const double radius = n <= 1 ? 0 : 60 + 22.0 * n, size = 2 * radius + 220, c = size / 2;
  out << R"(<svg xmlns="http://www.w3.org/2000/svg" width=")" << num(size) << R"(" height=")" << num(size)
      << R"(" viewBox="0 0 )" << num(size) << ' ' << num(size) << "\">\n";
  out << R"(<rect width="100%" height="100%" fill="#fff"/>)" << '\n';
  out << R"(<defs><marker id="head" markerWidth="8" markerHeight="8" refX="7" refY="4" orient="auto">)"
      << R"(<path d="M0,0 L8,4 L0,8 z" fill="#000"/></marker></defs>)" << '\n';
  out << "<text x=\"" << num(c) << R"(" y="20" font-family="sans-serif" font-size="14" text-anchor="middle">)"
      << title(g) << "</text>\n";
  if (n == 0) {
    out << "<text x=\"" << num(c) << "\" y=\"" << num(c)
        << R"(" font-family="sans-serif" font-size="16" text-anchor="middle">no tilings</text>)" << '\n';
    out << "</svg>\n";
    return out.str();
  }
  std::vector<Point> pos(n);
  for (std::size_t i = 0; i < n; ++i) {
    double t = std::numbers::pi / 2 - 2 * std::numbers::pi * i / n;
    pos[i] = {c + radius * std::cos(t), c - radius * std::sin(t)};
  }
  std::map<std::pair<std::size_t, std::size_t>, int> lane;
  for (const auto& a : aggregate(g)) {
    int k = lane[{a.from, a.to}]++;
    std::string label = "×" + std::to_string(a.count);
    if (a.kind != ArrowKind::timezone) label += a.kind == ArrowKind::meridian_part ? " m" : " c";
    std::string tip = "tiling#" + std::to_string(a.first_tiling) + " ×" + std::to_string(a.count) + " [" +
                      to_string(a.kind) + "]";
    const Point p = pos[a.from], q = pos[a.to];
    double lx, ly;
    if (a.from == a.to) {
      double dx = p.x - c, dy = p.y - c, len = std::hypot(dx, dy);
      if (len < 1) dx = 0, dy = -1, len = 1;
      double r = 16 + 8 * k, ox = p.x + dx / len * (22 + r), oy = p.y + dy / len * (22 + r);
      out << "<circle cx=\"" << num(ox) << "\" cy=\"" << num(oy) << "\" r=\"" << num(r)
          << R"(" fill="none" stroke="#000"><title>)" << tip << "</title></circle>\n";
      lx = ox + dx / len * (r + 12);
      ly = oy + dy / len * (r + 12) + 4;
    } else {
      double bend = 0.15 + 0.1 * k;
      double mx = (p.x + q.x) / 2 - (q.y - p.y) * bend, my = (p.y + q.y) / 2 + (q.x - p.x) * bend;
      double dx = q.x - mx, dy = q.y - my, len = std::hypot(dx, dy);
      double ex = q.x - dx / len * 24, ey = q.y - dy / len * 24;
      out << "<path d=\"M" << num(p.x) << ' ' << num(p.y) << " Q" << num(mx) << ' ' << num(my) << ' ' << num(ex)
          << ' ' << num(ey) << R"x(" fill="none" stroke="#000" marker-end="url(#head)"><title>)x" << tip
          << "</title></path>\n";
      lx = (p.x + 2 * mx + q.x) / 4;
      ly = (p.y + 2 * my + q.y) / 4;
    }
    out << "<text x=\"" << num(lx) << "\" y=\"" << num(ly)
        << R"(" font-family="sans-serif" font-size="11" text-anchor="middle">)" << label << "</text>\n";
  }
  for (std::size_t i = 0; i < n; ++i) {
    double w = 10 + 8.0 * g.nodes[i].size();
    out << "<rect x=\"" << num(pos[i].x - w / 2) << "\" y=\"" << num(pos[i].y - 11) << "\" width=\"" << num(w)
        << R"(" height="22" fill="#fff" stroke="#000"/>)" << '\n';
    out << "<text x=\"" << num(pos[i].x) << "\" y=\"" << num(pos[i].y + 5)
        << R"(" font-family="monospace" font-size="13" text-anchor="middle">)" << g.nodes[i] << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace pentaglobe
