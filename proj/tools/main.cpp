#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "pentaglobe/earthmap.hpp"
#include "pentaglobe/io.hpp"
#include "pentaglobe/neighborhood.hpp"
#include "pentaglobe/render.hpp"
#include "verify.hpp"

namespace pg = pentaglobe;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kIo = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string pattern;
  int distance = 0;
  int timezones = 0;
  std::string format;
  std::string out;
  bool up_to_symmetry = false;
  int max_n = 6;
};

pg::PatternTag need_pattern(const Options& o) {
  if (o.pattern.empty()) throw UsageError("--pattern is required");
  auto t = pg::parse_pattern(o.pattern);
  if (!t) throw UsageError("unknown pattern '" + o.pattern + "' (expected a5, a4b, a2b2c, a3bc or a3b2)");
  return *t;
}

int need_distance(const Options& o) {
  if (o.distance < 1 || o.distance > 5) throw UsageError("--distance must be between 1 and 5");
  return o.distance;
}

int need_timezones(const Options& o, int d) {
  if (o.timezones < pg::minimum_timezones(d))
    throw UsageError("--timezones must be at least " + std::to_string(pg::minimum_timezones(d)) + " at distance " +
                     std::to_string(d));
  return o.timezones;
}

std::string need_format(const Options& o, std::initializer_list<const char*> allowed) {
  std::string f = o.format.empty() ? *allowed.begin() : o.format;
  for (const char* a : allowed)
    if (f == a) return f;
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : "|") + std::string(a);
  throw UsageError("--format must be one of " + list);
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw IoError("cannot write " + o.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
  if (!f) throw IoError("cannot write " + o.out);
}

json labeling_json(const pg::Labeling& l) { return json::parse(pg::to_json(l)); }

std::string forced_names(const std::vector<pg::VertexId>& vs) {
  std::string s;
  for (auto v : vs) s += (s.empty() ? "" : " ") + pg::NeighborhoodFragment::vertex_name(v);
  return s;
}

int cmd_neighborhoods(const Options& o) {
  auto p = need_pattern(o);
  auto fmt = need_format(o, {"text", "json", "svg"});
  auto tilings = pg::classify_neighborhoods(p);
  if (fmt == "svg") {
    emit(o, pg::render_neighborhoods_svg(p, tilings));
  } else if (fmt == "json") {
    json list = json::array();
    for (const auto& t : tilings) {
      json forced = json::array();
      for (auto v : t.forced_vertices) forced.push_back(pg::NeighborhoodFragment::vertex_name(v));
      list.push_back({{"type", t.type_id},
                      {"orbit_size", t.orbit_size},
                      {"labeling", labeling_json(t.labeling)},
                      {"forced_vertices", forced}});
    }
    emit(o, json{{"pattern", o.pattern}, {"count", tilings.size()}, {"tilings", list}}.dump(2));
  } else {
    std::ostringstream out;
    out << tilings.size() << " tilings\n";
    for (const auto& t : tilings) {
      out << "type " << t.type_id << ": " << t.labeling.str() << " x" << t.orbit_size;
      out << " forced: " << (t.forced_vertices.empty() ? "none" : forced_names(t.forced_vertices)) << "\n";
    }
    emit(o, out.str());
  }
  return kOk;
}

int cmd_propagation(const Options& o) {
  auto p = need_pattern(o);
  auto fmt = need_format(o, {"text", "json"});
  auto table = pg::propagation(p);
  if (fmt == "json") {
    emit(o, pg::to_json(table));
    return kOk;
  }
  std::ostringstream out;
  out << "type";
  for (int k = 1; k <= 5; ++k) out << "\tP" << k;
  out << "\n";
  for (std::size_t i = 0; i < table.types.size(); ++i) {
    out << table.types[i];
    for (const auto& c : table.rows[i]) {
      out << '\t';
      if (c.blocked) {
        out << 'x';
      } else {
        for (std::size_t j = 0; j < c.types.size(); ++j) out << (j ? "," : "") << c.types[j];
      }
    }
    out << "\n";
  }
  emit(o, out.str());
  return kOk;
}

json enumeration_json(const pg::TimezoneEnumeration& en, bool up_to_symmetry) {
  if (!up_to_symmetry) {
    json list = json::array();
    for (const auto& t : en.all) {
      if (!t.closable) continue;
      list.push_back({{"id", t.id},
                      {"left", t.left},
                      {"right", t.right},
                      {"parity", t.parity},
                      {"north", t.north},
                      {"south", t.south},
                      {"labels", t.labeling.str()}});
    }
    return {{"kind", pg::to_string(en.kind)}, {"count", list.size()}, {"tilings", list}};
  }
  json classes = json::array();
  for (const auto& [key, cls] : en.by_signature) {
    json reps = json::array();
    for (const auto& r : cls.orbits) reps.push_back({{"labels", r.canonical.str()}, {"multiplicity", r.multiplicity}});
    classes.push_back({{"left", key.first}, {"right", key.second}, {"count", cls.raw}, {"representatives", reps}});
  }
  return {{"kind", pg::to_string(en.kind)}, {"classes", classes}};
}

void enumeration_text(std::ostringstream& out, const pg::TimezoneEnumeration& en, bool up_to_symmetry) {
  out << pg::to_string(en.kind) << ": " << en.closable_count() << " tilings (" << en.all.size()
      << " face-valid strips)\n";
  for (const auto& [key, cls] : en.by_signature) {
    out << "  " << key.first << " -> " << key.second << ": " << cls.raw;
    if (up_to_symmetry) {
      out << " tilings, " << cls.orbits.size() << " up to symmetry\n";
      for (const auto& r : cls.orbits) out << "    " << r.canonical.str() << " x" << r.multiplicity << "\n";
    } else {
      out << "\n";
    }
  }
}

int cmd_timezones(const Options& o) {
  auto p = need_pattern(o);
  int d = need_distance(o);
  auto fmt = need_format(o, {"text", "json"});
  std::vector<pg::TimezoneEnumeration> parts;
  parts.push_back(pg::enumerate_timezone_tilings(d, p));
  if (d == 4) {
    auto pe = pg::enumerate_parts(p);
    parts.push_back(std::move(pe.meridian));
    parts.push_back(std::move(pe.core));
  }
  if (fmt == "json") {
    json sections = json::array();
    for (const auto& en : parts) sections.push_back(enumeration_json(en, o.up_to_symmetry));
    emit(o, json{{"distance", d}, {"pattern", o.pattern}, {"sections", sections}}.dump(2));
  } else {
    std::ostringstream out;
    for (const auto& en : parts) enumeration_text(out, en, o.up_to_symmetry);
    emit(o, out.str());
  }
  return kOk;
}

int cmd_families(const Options& o) {
  auto p = need_pattern(o);
  int d = need_distance(o);
  auto fmt = need_format(o, {"json", "dot"});
  auto g = pg::build_family_graph(d, p);
  if (fmt == "dot") {
    emit(o, pg::family_graph_dot(g));
    return kOk;
  }
  json list = json::array();
  for (const auto& f : pg::classify_families(g)) {
    json arrows = json::array();
    for (auto i : f.arrows) {
      const auto& a = g.arrows[i];
      arrows.push_back({{"from", g.nodes[a.from]}, {"to", g.nodes[a.to]}, {"tiling", a.tiling},
                        {"kind", pg::to_string(a.kind)}});
    }
    json cols = json::array();
    for (const auto& [n, s] : f.descriptor.columns) cols.push_back({n, s});
    json combos = json::array();
    for (const auto& c : f.descriptor.combinations)
      combos.push_back({{"timezones", c.timezones}, {"north", c.north}, {"south", c.south}});
    list.push_back({{"id", f.id},
                    {"parity", f.parity},
                    {"nodes", f.nodes},
                    {"arrows", arrows},
                    {"descriptor", {{"distance", f.descriptor.distance}, {"columns", cols}, {"combinations", combos}}}});
  }
  emit(o, json{{"distance", d}, {"pattern", o.pattern}, {"count", list.size()}, {"families", list}}.dump(2));
  return kOk;
}

int cmd_closed_enum(const Options& o) {
  auto p = need_pattern(o);
  int d = need_distance(o);
  int n = need_timezones(o, d);
  auto fmt = need_format(o, {"text", "json"});
  auto c = pg::enumerate_closed(d, n, p);
  if (fmt == "json") {
    json orbits = json::array();
    for (const auto& r : c.orbits) orbits.push_back({{"labels", r.canonical.str()}, {"multiplicity", r.multiplicity}});
    emit(o, json{{"distance", d}, {"timezones", n}, {"pattern", o.pattern}, {"raw", c.raw}, {"orbits", orbits}}.dump(2));
  } else {
    emit(o, std::to_string(c.raw) + " tilings, " + std::to_string(c.orbits.size()) + " up to symmetry\n");
  }
  return kOk;
}

unsigned thread_cap() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("PENTAGLOBE_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v >= 1) n = std::min(n, static_cast<unsigned>(v));
    } catch (const std::exception&) {
      throw UsageError("PENTAGLOBE_THREADS must be a positive integer");
    }
  }
  return n;
}

int cmd_verify_all(const Options& o) {
  auto fmt = need_format(o, {"text", "json"});
  if (o.max_n < 4) throw UsageError("--max-n must be at least 4");
  auto report = pentaglobe::tools::verify_all(pentaglobe::tools::embedded_expected(), o.max_n, thread_cap());
  emit(o, fmt == "json" ? pentaglobe::tools::to_json(report).dump(2) : pentaglobe::tools::to_text(report));
  return report.ok() ? kOk : kMismatch;
}

int cmd_render(const Options& o) {
  auto p = need_pattern(o);
  if (o.distance == 0) {
    need_format(o, {"svg"});
    emit(o, pg::render_neighborhoods_svg(p, pg::classify_neighborhoods(p)));
    return kOk;
  }
  int d = need_distance(o);
  if (o.timezones == 0) {
    auto fmt = need_format(o, {"svg", "dot"});
    auto g = pg::build_family_graph(d, p);
    emit(o, fmt == "dot" ? pg::family_graph_dot(g) : pg::render_family_graph_svg(g));
    return kOk;
  }
  int n = need_timezones(o, d);
  need_format(o, {"svg"});
  auto m = pg::build_earth_map(d, n);
  auto c = pg::enumerate_closed(d, n, p);
  pg::Labeling l = c.orbits.empty() ? pg::Labeling(p, m.mesh.edge_count()) : c.orbits.front().canonical;
  emit(o, pg::render_earth_map_svg(m, l));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge congruent pentagonal earth map tilings"};
  app.require_subcommand(1);
  Options o;

  auto add_pattern = [&](CLI::App* s) { s->add_option("--pattern", o.pattern, "a5, a4b, a2b2c, a3bc or a3b2"); };
  auto add_format = [&](CLI::App* s, const char* help) { s->add_option("--format", o.format, help); };
  auto add_out = [&](CLI::App* s) { s->add_option("--out", o.out, "write to this file instead of stdout"); };

  auto* nb = app.add_subcommand("neighborhoods", "neighborhood tilings of a tile with degree 3 vertices");
  add_pattern(nb);
  add_format(nb, "text|json|svg");
  add_out(nb);

  auto* pr = app.add_subcommand("propagation", "neighbor types forced by each neighborhood type");
  add_pattern(pr);
  add_format(pr, "text|json");
  add_out(pr);

  auto* tz = app.add_subcommand("timezones", "timezone tilings at a distance");
  add_pattern(tz);
  tz->add_option("--distance", o.distance, "pole distance 1..5");
  tz->add_flag("--up-to-symmetry", o.up_to_symmetry, "group tilings into symmetry classes");
  add_format(tz, "text|json");
  add_out(tz);

  auto* fa = app.add_subcommand("families", "families of earth map tilings");
  add_pattern(fa);
  fa->add_option("--distance", o.distance, "pole distance 1..5");
  add_format(fa, "json|dot");
  add_out(fa);

  auto* ce = app.add_subcommand("closed-enum", "direct search on a closed earth map");
  add_pattern(ce);
  ce->add_option("--distance", o.distance, "pole distance 1..5");
  ce->add_option("--timezones", o.timezones, "number of timezones");
  add_format(ce, "text|json");
  add_out(ce);

  auto* va = app.add_subcommand("verify-all", "run every verification check");
  va->add_option("--max-n", o.max_n, "largest timezone count for bounded checks")->capture_default_str();
  add_format(va, "text|json");
  add_out(va);

  auto* re = app.add_subcommand("render", "draw neighborhoods, family graphs or earth maps");
  add_pattern(re);
  re->add_option("--distance", o.distance, "family graph at this distance");
  re->add_option("--timezones", o.timezones, "with --distance: draw one closed tiling");
  add_format(re, "svg|dot");
  add_out(re);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Error& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*nb) return cmd_neighborhoods(o);
    if (*pr) return cmd_propagation(o);
    if (*tz) return cmd_timezones(o);
    if (*fa) return cmd_families(o);
    if (*ce) return cmd_closed_enum(o);
    if (*va) return cmd_verify_all(o);
    if (*re) return cmd_render(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  }
  return kUsage;
}
