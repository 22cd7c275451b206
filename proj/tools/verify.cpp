#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "expected_values.hpp"
#include "pentaglobe/earthmap.hpp"
#include "pentaglobe/mesh.hpp"
#include "pentaglobe/neighborhood.hpp"
#include "pentaglobe/patterns.hpp"
#include "pentaglobe/search.hpp"

namespace pentaglobe::tools {

using nlohmann::json;

bool VerificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

const json& embedded_expected() {
  static const json data = json::parse(kExpectedValuesJson);
  return data;
}

namespace {

std::string name_of(PatternTag p) { return std::string(pattern(p).name()); }

PatternTag tag_of(const std::string& s) {
  auto t = parse_pattern(s);
  if (!t) throw std::invalid_argument("unknown pattern in expected values: " + s);
  return *t;
}

template <class Range>
std::string join(const Range& r, const char* sep = ",") {
  std::ostringstream out;
  bool first = true;
  for (const auto& x : r) {
    if (!first) out << sep;
    out << x;
    first = false;
  }
  return out.str();
}

CheckResult make(std::string name, std::string expected, std::string computed) {
  CheckResult r;
  r.name = std::move(name);
  r.pass = expected == computed;
  r.expected = std::move(expected);
  r.computed = std::move(computed);
  return r;
}

CheckResult make(std::string name, std::string expected, std::string computed, bool pass) {
  CheckResult r = make(std::move(name), std::move(expected), std::move(computed));
  r.pass = pass;
  return r;
}

using Checks = std::vector<CheckResult>;

// --- neighborhoods ---------------------------------------------------------

Checks neighborhood_counts(const json& ex) {
  std::string want, got;
  for (PatternTag p : all_patterns()) {
    auto n = classify_neighborhoods(p).size();
    want += name_of(p) + " " + std::to_string(ex.at("neighborhood_counts").at(name_of(p)).get<int>()) + "; ";
    got += name_of(p) + " " + std::to_string(n) + "; ";
  }
  const auto& s = ex.at("a4b_spokes");
  auto b = a4b_breakdown();
  auto fmt = [](int two, int central, int sideways, int none, int forced) {
    return std::to_string(two) + "+" + std::to_string(central) + "+" + std::to_string(sideways) + "+" +
           std::to_string(none) + ", " + std::to_string(forced) + " forced";
  };
  return {make("neighborhood tilings per pattern", want, got),
          make("a4b spoke classes (two, central, sideways, none)",
               fmt(s.at("two"), s.at("central"), s.at("sideways"), s.at("none"), s.at("none_forced")),
               fmt(b.two, b.central, b.sideways, b.none, b.none_forced))};
}

std::string cell_text(const json& cell) {
  if (cell.is_string()) return "x";
  std::vector<std::string> v;
  for (const auto& t : cell) v.push_back(t.is_string() ? t.get<std::string>() : std::to_string(t.get<int>()));
  return "{" + join(v) + "}";
}

std::string cell_text(const PropagationCell& c) {
  if (c.blocked) return "x";
  return "{" + join(c.types) + "}";
}

Checks propagation_table(const json& ex, PatternTag p) {
  const auto& rows = ex.at("propagation").at(name_of(p));
  auto table = propagation(p);
  int total = 0, agree = 0;
  std::vector<std::string> diffs;
  for (const auto& type : table.types) {
    const auto& row = table.row(type);
    for (int k = 0; k < 5; ++k) {
      ++total;
      std::string want = rows.contains(type) ? cell_text(rows.at(type).at(k)) : "?";
      std::string got = cell_text(row[k]);
      if (want == got) {
        ++agree;
      } else {
        diffs.push_back(type + "P" + std::to_string(k + 1) + " " + got + " vs " + want);
      }
    }
  }
  std::string computed = std::to_string(agree) + "/" + std::to_string(total) + " cells";
  if (!diffs.empty()) computed += " (computed vs expected: " + join(diffs, "; ") + ")";
  return {make("propagation table " + name_of(p), std::to_string(total) + "/" + std::to_string(total) + " cells",
               computed, diffs.empty() && rows.size() == table.types.size())};
}

// --- families ---------------------------------------------------------------

std::string family_count_line(PatternTag p, const json& counts, bool want) {
  std::string s;
  for (int d = 5; d >= 1; --d) {
    int n = want ? counts.at(std::to_string(d)).get<int>() : static_cast<int>(classify_families(d, p).size());
    s += (s.empty() ? "" : "/") + std::to_string(n);
  }
  return s;
}

Checks family_counts(const json& ex, PatternTag p) {
  const auto& counts = ex.at("families").at(name_of(p));
  return {make(name_of(p) + " families for d=5/4/3/2/1", family_count_line(p, counts, true),
               family_count_line(p, counts, false))};
}

int overlapping_pairs(const std::vector<Family>& fs) {
  int n = 0;
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j) n += poles_overlap(fs[i].descriptor, fs[j].descriptor);
  return n;
}

Checks a2b2c_descriptors(const json& ex) {
  Checks out;
  std::vector<std::string> got;
  for (int d = 5; d >= 1; --d) got.push_back("d" + std::to_string(d) + ":" +
                                             std::to_string(overlapping_pairs(classify_families(d, PatternTag::a2b2c))));
  out.push_back(make("a2b2c pole descriptors pairwise distinct (overlapping pairs)", "d5:0 d4:0 d3:0 d2:0 d1:0",
                     join(got, " ")));

  auto fs = classify_families(5, PatternTag::a2b2c);
  std::vector<std::pair<std::string, std::string>> want;
  for (const auto& c : ex.at("a2b2c_d5_descriptors")) want.push_back({c.at(0), c.at(1)});
  std::vector<std::size_t> perm(fs.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  bool matched = false;
  if (fs.size() == want.size()) {
    do {
      bool all = true;
      for (std::size_t i = 0; i < want.size() && all; ++i) {
        const auto& cols = fs[perm[i]].descriptor.columns;
        all = std::any_of(cols.begin(), cols.end(), [&](const auto& c) { return same_column(c, want[i]); });
      }
      matched = matched || all;
    } while (!matched && std::next_permutation(perm.begin(), perm.end()));
  }
  std::vector<std::string> wanted, cols;
  for (const auto& [n, s] : want) wanted.push_back(n + "/" + s);
  for (const auto& f : fs) {
    std::vector<std::string> c;
    for (const auto& [n, s] : f.descriptor.columns) c.push_back(n + "/" + s);
    cols.push_back("[" + join(c, " ") + "]");
  }
  out.push_back(make("a2b2c d=5 descriptors", "one family each for " + join(wanted, ", "),
                     matched ? "one family each for " + join(wanted, ", ") : "columns " + join(cols, " ")));
  return out;
}

Checks a3b2_descriptors_and_specialization() {
  Checks out;
  int overlaps = 0;
  for (int d = 1; d <= 5; ++d) overlaps += overlapping_pairs(classify_families(d, PatternTag::a3b2));
  out.push_back(make("a3b2 pole descriptors not all distinct", "some overlapping pair",
                     overlaps > 0 ? "some overlapping pair" : "all distinct"));

  std::vector<std::string> got;
  for (int d = 1; d <= 5; ++d) {
    auto x = enumerate_timezone_tilings(d, PatternTag::a3b2);
    auto y = enumerate_timezone_tilings(d, PatternTag::a2b2c);
    std::set<std::string> images;
    for (const auto& t : y.all)
      if (t.closable)
        images.insert(canonicalize(specialize(t.labeling, {{Label::c, Label::a}}, PatternTag::a3b2), x.group).str());
    int missing = 0;
    for (const auto& t : x.all)
      if (t.closable && !images.count(canonicalize(t.labeling, x.group).str())) ++missing;
    got.push_back("d" + std::to_string(d) + ":" + std::to_string(missing));
  }
  out.push_back(make("a3b2 timezone tilings without an a2b2c preimage under c->a", "d1:0 d2:0 d3:0 d4:0 d5:0",
                     join(got, " ")));
  return out;
}

Checks a4b_families() {
  std::vector<std::string> want, got;
  int violations = 0;
  for (int d = 5; d >= 1; --d) {
    auto fs = classify_families(d, PatternTag::a4b);
    std::vector<int> par;
    for (const auto& f : fs) par.push_back(f.parity);
    std::sort(par.begin(), par.end());
    want.push_back("d" + std::to_string(d) + ":even,odd");
    std::vector<std::string> names;
    for (int p : par) names.push_back(p == 0 ? "even" : p == 1 ? "odd" : "mixed");
    got.push_back("d" + std::to_string(d) + ":" + join(names));
    for (const auto& t : enumerate_timezone_tilings(d, PatternTag::a4b).all) {
      auto bs = std::count(t.left.begin(), t.left.end(), 'b') + std::count(t.right.begin(), t.right.end(), 'b');
      violations += bs % 2;
    }
  }
  return {make("a4b families by parity", join(want, " "), join(got, " ")),
          make("a4b strips whose two meridians differ in parity", "0", std::to_string(violations))};
}

// --- a4b counts --------------------------------------------------------------

std::string counts_line(const json& table) {
  std::vector<std::string> v;
  for (const auto& [k, n] : table.items()) v.push_back(k + "=" + std::to_string(n.get<int>()));
  return join(v, " ");
}

template <class Map>
std::string computed_line(const json& table, const Map& by_signature) {
  std::vector<std::string> v;
  for (const auto& [k, n] : table.items()) {
    auto bar = k.find('|');
    auto it = by_signature.find({k.substr(0, bar), k.substr(bar + 1)});
    v.push_back(k + "=" + std::to_string(it == by_signature.end() ? 0 : it->second.raw));
  }
  return join(v, " ");
}

Checks a4b_counts(const json& ex) {
  Checks out;
  for (int d = 3; d >= 1; --d) {
    const auto& table = ex.at("a4b_timezones").at(std::to_string(d));
    auto en = enumerate_timezone_tilings(d, PatternTag::a4b);
    out.push_back(make("a4b d=" + std::to_string(d) + " timezone tilings by meridian pair", counts_line(table),
                       computed_line(table, en.by_signature)));
  }
  auto parts = enumerate_parts(PatternTag::a4b);
  const auto& core = ex.at("a4b_core_parts");
  out.push_back(make("a4b d=4 core parts by meridian pair", counts_line(core), computed_line(core, parts.core.by_signature)));

  std::vector<Labeling> even, odd;
  for (const auto& t : parts.meridian.all)
    if (t.closable) (t.parity == 0 ? even : odd).push_back(t.labeling);
  const auto& reps = ex.at("a4b_meridian_representatives");
  out.push_back(make("a4b d=4 meridian part representatives (even+odd)",
                     std::to_string(reps.at("even").get<int>()) + "+" + std::to_string(reps.at("odd").get<int>()),
                     std::to_string(orbit_reduce(even, parts.meridian.group).size()) + "+" +
                         std::to_string(orbit_reduce(odd, parts.meridian.group).size())));

  auto g = build_family_graph(5, PatternTag::a4b);
  std::map<std::pair<std::size_t, std::size_t>, int> multi;
  std::set<std::string> even_nodes;
  for (const auto& a : g.arrows)
    if (g.tiling(a).parity == 0) {
      ++multi[{a.from, a.to}];
      even_nodes.insert(g.nodes[a.from]);
      even_nodes.insert(g.nodes[a.to]);
    }
  std::vector<std::string> want_nodes = ex.at("a4b_d5_even_nodes");
  std::sort(want_nodes.begin(), want_nodes.end());
  out.push_back(make("a4b d=5 even nodes", join(want_nodes), join(even_nodes)));
  std::size_t zero = g.node("aaaaa");
  int loops = zero == kNone ? 0 : multi[{zero, zero}];
  int repeated = 0;
  for (const auto& [k, n] : multi)
    if (n > 1 && !(k.first == zero && k.second == zero)) ++repeated;
  out.push_back(make("a4b d=5 even: loops at aaaaa; other repeated arrows",
                     std::to_string(ex.at("a4b_d5_loops_at_aaaaa").get<int>()) + "; 0",
                     std::to_string(loops) + "; " + std::to_string(repeated)));
  std::size_t node = g.node("aaaba");
  out.push_back(make("a4b d=5 odd: out-degree of aaaba", std::to_string(ex.at("a4b_d5_out_degree_aaaba").get<int>()),
                     std::to_string(node == kNone ? 0 : g.out_arrows(node).size())));
  return out;
}

Checks core_multiplicities(const json& ex) {
  auto parts = enumerate_parts(PatternTag::a4b);
  std::vector<int> want = ex.at("a4b_core_aaaa_multiplicities");
  std::vector<int> got;
  std::size_t raw = 0;
  auto it = parts.core.by_signature.find({"aaaa", "aaaa"});
  if (it != parts.core.by_signature.end()) {
    raw = it->second.raw;
    for (const auto& o : it->second.orbits) got.push_back(static_cast<int>(o.multiplicity));
  }
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  int total = 0;
  for (int m : want) total += m;
  return {make("a4b aaaa|aaaa core: raw -> representatives (multiplicities)",
               std::to_string(total) + " -> " + std::to_string(want.size()) + " (" + join(want) + ")",
               std::to_string(raw) + " -> " + std::to_string(got.size()) + " (" + join(got) + ")")};
}

// --- closed maps ---------------------------------------------------------------

Checks a3bc_empty(int max_n) {
  std::vector<std::string> tz, closed;
  for (int d = 1; d <= 5; ++d) {
    tz.push_back(std::to_string(build_family_graph(d, PatternTag::a3bc).arrows.size()));
    std::size_t total = 0;
    for (int n = minimum_timezones(d); n <= max_n; ++n) total += enumerate_closed(d, n, PatternTag::a3bc).raw;
    closed.push_back(std::to_string(total));
  }
  return {make("a3bc closable timezone tilings for d=1..5", "0,0,0,0,0", join(tz)),
          make("a3bc closed tilings for d=1..5, n<=" + std::to_string(max_n), "0,0,0,0,0", join(closed))};
}

Checks oracle(PatternTag p, int d) {
  auto g = build_family_graph(d, p);
  std::vector<std::string> got, want;
  bool pass = true;
  for (int n = minimum_timezones(d); n <= minimum_timezones(d) + 1; ++n) {
    auto a = enumerate_closed(d, n, p);
    auto b = closed_from_family_graph(g, n);
    bool same = a.orbits.size() == b.orbits.size();
    for (std::size_t i = 0; same && i < a.orbits.size(); ++i)
      same = a.orbits[i].canonical == b.orbits[i].canonical && a.orbits[i].multiplicity == b.orbits[i].multiplicity;
    pass = pass && same;
    want.push_back("n=" + std::to_string(n) + " equal");
    got.push_back("n=" + std::to_string(n) + (same ? " equal" : " differ") + " (" + std::to_string(a.orbits.size()) +
                  "/" + std::to_string(b.orbits.size()) + " orbits, " + std::to_string(a.raw) + "/" +
                  std::to_string(b.raw) + " raw)");
  }
  return {make("closed enumeration vs family graph, " + name_of(p) + " d=" + std::to_string(d), join(want, "; "),
               join(got, "; "), pass)};
}

Checks structure(int d, int max_n) {
  std::vector<std::string> failed;
  for (int n = minimum_timezones(d); n <= max_n; ++n) {
    auto report = validate(build_earth_map(d, n));
    for (const auto& c : report.checks)
      if (!c.pass) failed.push_back("n=" + std::to_string(n) + " " + c.name + " (" + c.detail + ")");
  }
  return {make("earth map invariants d=" + std::to_string(d) + ", n<=" + std::to_string(max_n), "all hold",
               failed.empty() ? "all hold" : join(failed, "; "))};
}

// Every assignment over the alphabet, rejected as soon as a face is fully labeled and wrong.
std::size_t naive_count(const Fragment& host, const EdgePattern& p) {
  std::vector<std::vector<FaceId>> completes(host.edge_count());
  for (FaceId f = 0; f < host.face_count(); ++f) {
    EdgeId last = *std::max_element(host.face(f).edges.begin(), host.face(f).edges.end());
    completes[last].push_back(f);
  }
  std::vector<Label> lab(host.edge_count());
  auto alphabet = p.alphabet();
  std::size_t count = 0;
  std::function<void(EdgeId)> go = [&](EdgeId e) {
    if (e == host.edge_count()) {
      ++count;
      return;
    }
    for (Label l : alphabet) {
      lab[e] = l;
      bool ok = true;
      for (FaceId f : completes[e]) {
        LabelCycle seq;
        for (int i = 0; i < 5; ++i) seq[i] = lab[host.face(f).edges[i]];
        if (!tile_matches(seq, p)) {
          ok = false;
          break;
        }
      }
      if (ok) go(e + 1);
    }
  };
  go(0);
  return count;
}

Checks search_oracle(PatternTag p) {
  const Fragment host = build_neighborhood_fragment();
  std::size_t fast = enumerate_completions(host, pattern(p), Labeling(p, host.edge_count())).size();
  std::size_t slow = naive_count(host, pattern(p));
  return {make("neighborhood search vs naive enumeration, " + name_of(p), std::to_string(slow), std::to_string(fast))};
}

Checks a3b2_distance5(const json& ex, int max_n) {
  const std::string want = ex.at("a3b2_d5_core_type");
  auto t = build_timezone_template(5);
  std::size_t tiles = 0, other = 0, maps = 0;
  for (int n = minimum_timezones(5); n <= max_n; ++n) {
    auto m = build_earth_map(5, n);
    for_each_completion(m.mesh, pattern(PatternTag::a3b2), Labeling(PatternTag::a3b2, m.mesh.edge_count()),
                        [&](const Labeling& l) {
                          ++maps;
                          for (int k = 0; k < n; ++k)
                            for (FaceId f : t.core_tiles) {
                              ++tiles;
                              auto type = neighborhood_type(m.mesh, l, m.timezone_faces[k][f]);
                              if (!type || *type != want) ++other;
                            }
                          return true;
                        });
  }
  return {make("d=5 a3b2 core tiles with a neighborhood other than type " + want, "0 (of all core tiles)",
               std::to_string(other) + " (of " + std::to_string(tiles) + " core tiles in " + std::to_string(maps) +
                   " maps)",
               other == 0 && tiles > 0)};
}

struct Task {
  int criterion;
  std::function<Checks()> run;
};

}  // namespace

VerificationReport verify_all(const json& ex, int max_n, unsigned threads) {
  std::vector<Task> tasks;
  tasks.push_back({1, [&] { return neighborhood_counts(ex); }});
  for (const auto& [name, table] : ex.at("propagation").items())
    tasks.push_back({2, [&, p = tag_of(name)] { return propagation_table(ex, p); }});
  tasks.push_back({3, [=] { return a3bc_empty(max_n); }});
  tasks.push_back({4, [&] { return family_counts(ex, PatternTag::a2b2c); }});
  tasks.push_back({4, [&] { return a2b2c_descriptors(ex); }});
  tasks.push_back({5, [&] { return family_counts(ex, PatternTag::a3b2); }});
  tasks.push_back({5, [] { return a3b2_descriptors_and_specialization(); }});
  tasks.push_back({6, [&] { return family_counts(ex, PatternTag::a4b); }});
  tasks.push_back({6, [] { return a4b_families(); }});
  tasks.push_back({7, [&] { return a4b_counts(ex); }});
  tasks.push_back({8, [&] { return core_multiplicities(ex); }});
  for (PatternTag p : all_patterns())
    for (int d = 1; d <= 5; ++d) tasks.push_back({9, [=] { return oracle(p, d); }});
  for (int d = 1; d <= 5; ++d) tasks.push_back({10, [=] { return structure(d, max_n); }});
  for (PatternTag p : all_patterns()) tasks.push_back({11, [=] { return search_oracle(p); }});
  tasks.push_back({12, [&] { return a3b2_distance5(ex, max_n); }});

  std::vector<Checks> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) {
      auto start = std::chrono::steady_clock::now();
      try {
        results[i] = tasks[i].run();
      } catch (const std::exception& e) {
        results[i] = {make("criterion " + std::to_string(tasks[i].criterion), "no error", e.what(), false)};
      }
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      for (auto& c : results[i]) {
        c.criterion = tasks[i].criterion;
        c.seconds = secs / results[i].size();
        auto refs = ex.find("references");
        if (refs != ex.end() && refs->contains(std::to_string(c.criterion)))
          c.reference = refs->at(std::to_string(c.criterion));
      }
    }
  };
  unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  VerificationReport report;
  for (auto& r : results)
    for (auto& c : r) report.checks.push_back(std::move(c));
  return report;
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& c : r.checks) {
    passed += c.pass;
    out << (c.pass ? "PASS" : "FAIL") << " [" << c.criterion << "] " << c.name << "\n";
    if (!c.reference.empty()) out << "       ref:      " << c.reference << "\n";
    out << "       expected: " << c.expected << "\n";
    if (!c.pass) out << "       computed: " << c.computed << "\n";
  }
  out << passed << "/" << r.checks.size() << " checks passed\n";
  return out.str();
}

json to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"criterion", c.criterion},
                      {"name", c.name},
                      {"reference", c.reference},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"pass", c.pass},
                      {"seconds", c.seconds}});
  return {{"ok", r.ok()}, {"checks", checks}};
}

}  // namespace pentaglobe::tools
