#include "pentaglobe/earthmap.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace pentaglobe {

std::string to_string(ArrowKind k) {
  switch (k) {
    case ArrowKind::timezone: return "timezone";
    case ArrowKind::meridian_part: return "meridian_part";
    case ArrowKind::core_part: return "core_part";
  }
  return "?";
}

namespace {

std::string read(const Labeling& l, const std::vector<EdgeId>& edges) {
  std::string s;
  for (EdgeId e : edges) s += l.str()[e];
  return s;
}

int parity_of(PatternTag p, const std::string& sig) {
  if (pattern(p).alphabet().size() != 2) return -1;
  return static_cast<int>(std::count(sig.begin(), sig.end(), 'b') % 2);
}

// Strongly connected components; returns the component of each state.
std::vector<int> scc(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<std::size_t>> fwd(n), back(n);
  for (auto [u, v] : edges) {
    fwd[u].push_back(v);
    back[v].push_back(u);
  }
  std::vector<std::size_t> order;
  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
    seen[s] = true;
    while (!stack.empty()) {
      auto& [u, i] = stack.back();
      if (i < fwd[u].size()) {
        std::size_t v = fwd[u][i++];
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back({v, 0});
        }
      } else {
        order.push_back(u);
        stack.pop_back();
      }
    }
  }
  std::vector<int> comp(n, -1);
  int c = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[*it] >= 0) continue;
    std::vector<std::size_t> stack{*it};
    comp[*it] = c;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v : back[u])
        if (comp[v] < 0) {
          comp[v] = c;
          stack.push_back(v);
        }
    }
    ++c;
  }
  return comp;
}

struct Piece {
  ArrowKind kind;
  Fragment host;
  std::vector<EdgeId> template_edge;
  std::vector<EdgeId> left, right, north, south;
  SymmetryGroup group;
};

std::vector<EdgeId> localize(const std::vector<EdgeId>& template_edges, const std::vector<EdgeId>& origin) {
  std::vector<EdgeId> out;
  for (EdgeId e : template_edges) {
    auto it = std::find(origin.begin(), origin.end(), e);
    if (it != origin.end()) out.push_back(static_cast<EdgeId>(it - origin.begin()));
  }
  return out;
}

TimezoneEnumeration enumerate_piece(const Piece& piece, int d, PatternTag p) {
  TimezoneEnumeration out;
  out.distance = d;
  out.pattern = p;
  out.kind = piece.kind;
  out.host = piece.host;
  out.template_edge = piece.template_edge;
  out.group = piece.group;
  auto labelings = enumerate_completions(piece.host, pattern(p), Labeling(p, piece.host.edge_count()));
  for (std::size_t i = 0; i < labelings.size(); ++i) {
    TimezoneTiling t;
    t.id = i;
    t.kind = piece.kind;
    t.labeling = labelings[i];
    t.left = read(t.labeling, piece.left);
    t.right = read(t.labeling, piece.right);
    t.parity = parity_of(p, t.left);
    t.north = read(t.labeling, piece.north);
    t.south = read(t.labeling, piece.south);
    out.all.push_back(std::move(t));
  }
  return out;
}

void group_by_signature(TimezoneEnumeration& en) {
  auto fill = [&](auto& table, bool only_closable) {
    table.clear();
    for (const auto& t : en.all) {
      if (only_closable && !t.closable) continue;
      auto& cls = table[{t.left, t.right}];
      cls.left = t.left;
      cls.right = t.right;
      ++cls.raw;
      cls.tilings.push_back(t.id);
    }
    for (auto& [key, cls] : table) {
      std::vector<Labeling> ls;
      for (auto id : cls.tilings) ls.push_back(en.all[id].labeling);
      cls.orbits = orbit_reduce(ls, en.group);
      if (en.pattern == PatternTag::a2b2c) cls.orbits_with_swap = orbit_reduce(ls, en.group.with_label_swap());
    }
  };
  fill(en.raw_by_signature, false);
  fill(en.by_signature, true);
}

// Marks tilings lying on directed cycles. Pieces alternate along cycles when there are two.
void mark_closable(std::vector<TimezoneEnumeration*> pieces) {
  std::map<std::string, std::size_t> ids;
  auto id = [&](const std::string& sig, std::size_t phase) {
    return ids.emplace(sig + "#" + std::to_string(phase), ids.size()).first->second;
  };
  const std::size_t phases = pieces.size();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t k = 0; k < phases; ++k)
    for (const auto& t : pieces[k]->all) edges.push_back({id(t.left, k), id(t.right, (k + 1) % phases)});
  auto comp = scc(ids.size(), edges);
  for (std::size_t k = 0; k < phases; ++k)
    for (auto& t : pieces[k]->all) t.closable = comp[id(t.left, k)] == comp[id(t.right, (k + 1) % phases)];
}

Piece whole_piece(const TimezoneTemplate& t) {
  Piece piece{ArrowKind::timezone, t.fragment, {}, t.left_meridian, t.right_meridian,
              t.north_notation, t.south_notation, symmetries(t)};
  piece.template_edge.resize(t.fragment.edge_count());
  std::iota(piece.template_edge.begin(), piece.template_edge.end(), 0);
  return piece;
}

Piece part_piece(const TimezoneTemplate& t, bool meridian) {
  Piece piece;
  piece.kind = meridian ? ArrowKind::meridian_part : ArrowKind::core_part;
  piece.host = t.fragment.restrict_to(meridian ? t.meridian_part : t.core_part, nullptr, &piece.template_edge);
  piece.left = localize(meridian ? t.left_meridian : t.inner_meridian, piece.template_edge);
  piece.right = localize(meridian ? t.inner_meridian : t.right_meridian, piece.template_edge);
  if (!meridian) {
    piece.north = localize(t.north_notation, piece.template_edge);
    piece.south = localize(t.south_notation, piece.template_edge);
  }
  piece.group = part_symmetries(t, meridian);
  return piece;
}

}  // namespace

std::size_t TimezoneEnumeration::closable_count() const {
  return static_cast<std::size_t>(std::count_if(all.begin(), all.end(), [](const auto& t) { return t.closable; }));
}

const TimezoneTiling* TimezoneEnumeration::find(const std::string& labels) const {
  for (const auto& t : all)
    if (t.labeling.str() == labels) return &t;
  return nullptr;
}

TimezoneEnumeration enumerate_timezone_tilings(int d, PatternTag p) {
  auto t = build_timezone_template(d);
  auto en = enumerate_piece(whole_piece(t), d, p);
  mark_closable({&en});
  group_by_signature(en);
  return en;
}

PartsEnumeration enumerate_parts(PatternTag p, int d) {
  if (d != 4) throw std::invalid_argument("parts exist only at distance 4");
  auto t = build_timezone_template(4);
  PartsEnumeration out{enumerate_piece(part_piece(t, true), 4, p), enumerate_piece(part_piece(t, false), 4, p)};
  mark_closable({&out.meridian, &out.core});
  group_by_signature(out.meridian);
  group_by_signature(out.core);
  return out;
}

std::size_t FamilyGraph::node(const std::string& sig) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), sig);
  if (it == nodes.end() || *it != sig) return kNone;
  return static_cast<std::size_t>(it - nodes.begin());
}

const TimezoneTiling& FamilyGraph::tiling(const Arrow& a) const {
  switch (a.kind) {
    case ArrowKind::timezone: return timezone_tilings[a.tiling];
    case ArrowKind::meridian_part: return meridian_tilings[a.tiling];
    case ArrowKind::core_part: return core_tilings[a.tiling];
  }
  throw std::logic_error("bad arrow kind");
}

std::vector<std::size_t> FamilyGraph::out_arrows(std::size_t n) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].from == n) out.push_back(i);
  return out;
}

namespace {

char kind_letter(ArrowKind k) { return k == ArrowKind::timezone ? 't' : k == ArrowKind::meridian_part ? 'm' : 'c'; }

}  // namespace

FamilyGraph build_family_graph(int d, PatternTag p) {
  FamilyGraph g;
  g.distance = d;
  g.pattern = p;
  std::vector<const TimezoneTiling*> members;
  if (d == 4) {
    auto parts = enumerate_parts(p);
    g.meridian_tilings = parts.meridian.all;
    g.core_tilings = parts.core.all;
    g.meridian_edges = parts.meridian.template_edge;
    g.core_edges = parts.core.template_edge;
    for (const auto& t : g.meridian_tilings)
      if (t.closable) members.push_back(&t);
    for (const auto& t : g.core_tilings)
      if (t.closable) members.push_back(&t);
  } else {
    g.timezone_tilings = enumerate_timezone_tilings(d, p).all;
    for (const auto& t : g.timezone_tilings)
      if (t.closable) members.push_back(&t);
  }
  std::set<std::string> sigs;
  for (auto* t : members) {
    sigs.insert(t->left);
    sigs.insert(t->right);
  }
  g.nodes.assign(sigs.begin(), sigs.end());
  for (auto* t : members) {
    g.arrow_by_labels[kind_letter(t->kind) + t->labeling.str()] = g.arrows.size();
    g.arrows.push_back({g.node(t->left), g.node(t->right), t->id, t->kind});
  }
  return g;
}

namespace {

std::size_t state_of(const FamilyGraph& g, std::size_t node, std::size_t phase) {
  return g.distance == 4 ? node * 2 + phase : node;
}

std::pair<std::size_t, std::size_t> arrow_states(const FamilyGraph& g, const Arrow& a) {
  if (g.distance != 4) return {a.from, a.to};
  bool m = a.kind == ArrowKind::meridian_part;
  return {state_of(g, a.from, m ? 0 : 1), state_of(g, a.to, m ? 1 : 0)};
}

// Shortest cycle through arrow a, as arrow indices starting at a (distance 4: starting at a meridian part).
std::vector<std::size_t> cycle_through(const FamilyGraph& g, std::size_t a,
                                       const std::vector<std::vector<std::size_t>>& out_by_state) {
  auto [s0, s1] = arrow_states(g, g.arrows[a]);
  std::map<std::size_t, std::size_t> via;
  std::deque<std::size_t> queue{s1};
  via[s1] = kNone;
  while (!queue.empty() && !via.count(s0)) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t b : out_by_state[u]) {
      std::size_t v = arrow_states(g, g.arrows[b]).second;
      if (via.count(v)) continue;
      via[v] = b;
      queue.push_back(v);
    }
  }
  if (!via.count(s0)) return {};
  std::vector<std::size_t> path;
  for (std::size_t s = s0; via[s] != kNone; s = arrow_states(g, g.arrows[via[s]]).first) {
    path.push_back(via[s]);
    if (s == s1 && path.size() > 0 && via[s] == kNone) break;
  }
  std::reverse(path.begin(), path.end());
  path.insert(path.begin(), a);
  if (s0 == s1) path = {a};
  if (g.distance == 4 && g.arrows[path.front()].kind != ArrowKind::meridian_part)
    std::rotate(path.begin(), path.begin() + 1, path.end());
  return path;
}

std::vector<std::vector<std::size_t>> arrows_by_state(const FamilyGraph& g) {
  std::vector<std::vector<std::size_t>> out(g.nodes.size() * (g.distance == 4 ? 2 : 1));
  for (std::size_t i = 0; i < g.arrows.size(); ++i) out[arrow_states(g, g.arrows[i]).first].push_back(i);
  return out;
}

const SymmetryGroup& closed_group(int d, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, SymmetryGroup> cache;
  std::lock_guard lock(mu);
  auto it = cache.find({d, n});
  if (it == cache.end()) it = cache.emplace(std::make_pair(d, n), symmetries(build_earth_map(d, n))).first;
  return it->second;
}

std::string sorted_letters(std::string s) {
  std::sort(s.begin(), s.end());
  return s;
}

// Simple cycles through the family, each read once starting from its smallest arrow.
void primitive_cycles(const FamilyGraph& g, const std::set<std::size_t>& allowed,
                      const std::vector<std::vector<std::size_t>>& by_state,
                      std::set<std::pair<std::string, std::string>>& out) {
  const std::size_t limit = 8;
  std::vector<std::size_t> path;
  std::set<std::size_t> visited;
  std::function<void(std::size_t, std::size_t, std::size_t)> go = [&](std::size_t first, std::size_t start,
                                                                      std::size_t state) {
    for (std::size_t b : by_state[state]) {
      if (!allowed.count(b) || b < first) continue;
      auto next = arrow_states(g, g.arrows[b]).second;
      path.push_back(b);
      if (next == start) {
        std::string n, s;
        for (std::size_t i : path) {
          n += g.tiling(g.arrows[i]).north;
          s += g.tiling(g.arrows[i]).south;
        }
        out.insert({n, s});
      } else if (path.size() < limit && !visited.count(next)) {
        visited.insert(next);
        go(first, start, next);
        visited.erase(next);
      }
      path.pop_back();
    }
  };
  for (std::size_t a : allowed) {
    auto [u, v] = arrow_states(g, g.arrows[a]);
    path = {a};
    if (u == v) {
      out.insert({g.tiling(g.arrows[a]).north, g.tiling(g.arrows[a]).south});
      continue;
    }
    visited = {u, v};
    go(a, u, v);
  }
}

PoleDescriptor describe(const FamilyGraph& g, const Family& f, const std::vector<std::vector<std::size_t>>& by_state) {
  PoleDescriptor out;
  out.distance = g.distance;
  std::set<std::size_t> allowed(f.arrows.begin(), f.arrows.end());
  std::set<std::pair<std::string, std::string>> cols;
  if (g.distance == 5) {
    primitive_cycles(g, allowed, by_state, cols);
  } else {
    for (std::size_t i : f.arrows) {
      const auto& t = g.tiling(g.arrows[i]);
      if (g.arrows[i].kind != ArrowKind::meridian_part) cols.insert({t.north, t.south});
    }
  }
  out.columns.assign(cols.begin(), cols.end());

  // Pole label multisets of closed walks, by dynamic programming over (state, north, south).
  std::set<PoleCombination> combos;
  const std::size_t per = g.distance == 4 ? 2 : 1;
  std::set<std::size_t> starts;
  for (std::size_t a : f.arrows) starts.insert(arrow_states(g, g.arrows[a]).first);
  for (int n = minimum_timezones(g.distance); n <= 6; ++n) {
    for (std::size_t start : starts) {
      std::set<std::tuple<std::size_t, std::string, std::string>> layer{{start, "", ""}};
      for (std::size_t step = 0; step < per * static_cast<std::size_t>(n); ++step) {
        std::set<std::tuple<std::size_t, std::string, std::string>> next;
        for (const auto& [state, north, south] : layer)
          for (std::size_t b : by_state[state]) {
            if (!allowed.count(b)) continue;
            const auto& t = g.tiling(g.arrows[b]);
            next.insert({arrow_states(g, g.arrows[b]).second, sorted_letters(north + t.north),
                         sorted_letters(south + t.south)});
          }
        layer = std::move(next);
      }
      for (const auto& [state, north, south] : layer)
        if (state == start) combos.insert({n, std::min(north, south), std::max(north, south)});
    }
  }
  out.combinations.assign(combos.begin(), combos.end());
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

Labeling assemble_closed(const FamilyGraph& g, const EarthMap& m, const std::vector<std::size_t>& cycle) {
  const std::size_t per = g.distance == 4 ? 2 : 1;
  const std::size_t len = cycle.size() / per;
  std::string s(m.mesh.edge_count(), '.');
  for (int k = 0; k < m.timezones; ++k) {
    std::size_t c = static_cast<std::size_t>(k) % len;
    const auto& tz = m.timezone_edges[k];
    if (per == 1) {
      const auto& lab = g.tiling(g.arrows[cycle[c]]).labeling.str();
      for (std::size_t e = 0; e < lab.size(); ++e) s[tz[e]] = lab[e];
    } else {
      const auto& ml = g.tiling(g.arrows[cycle[2 * c]]).labeling.str();
      const auto& cl = g.tiling(g.arrows[cycle[2 * c + 1]]).labeling.str();
      for (std::size_t e = 0; e < ml.size(); ++e) s[tz[g.meridian_edges[e]]] = ml[e];
      for (std::size_t e = 0; e < cl.size(); ++e) s[tz[g.core_edges[e]]] = cl[e];
    }
  }
  return Labeling(g.pattern, s);
}

std::optional<std::vector<std::size_t>> decompose_closed(const FamilyGraph& g, const EarthMap& m,
                                                         const Labeling& l) {
  std::vector<std::size_t> out;
  auto lookup = [&](char kind, const std::string& labels) -> bool {
    auto it = g.arrow_by_labels.find(kind + labels);
    if (it == g.arrow_by_labels.end()) return false;
    out.push_back(it->second);
    return true;
  };
  for (int k = 0; k < m.timezones; ++k) {
    const auto& tz = m.timezone_edges[k];
    if (g.distance == 4) {
      std::string ms, cs;
      for (EdgeId e : g.meridian_edges) ms += l.str()[tz[e]];
      for (EdgeId e : g.core_edges) cs += l.str()[tz[e]];
      if (!lookup('m', ms) || !lookup('c', cs)) return std::nullopt;
    } else {
      std::string ts;
      for (EdgeId e : tz) ts += l.str()[e];
      if (!lookup('t', ts)) return std::nullopt;
    }
  }
  return out;
}

std::vector<Family> classify_families(int d, PatternTag p) { return classify_families(build_family_graph(d, p)); }

std::vector<Family> classify_families(const FamilyGraph& g) {
  const std::size_t na = g.arrows.size();
  std::size_t states = g.nodes.size() * (g.distance == 4 ? 2 : 1);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& a : g.arrows) edges.push_back(arrow_states(g, a));
  auto comp = scc(states, edges);
  UnionFind uf(na);
  std::map<int, std::size_t> first_in_comp;
  for (std::size_t i = 0; i < na; ++i) {
    auto [u, v] = edges[i];
    if (comp[u] != comp[v]) continue;
    auto [it, fresh] = first_in_comp.emplace(comp[u], i);
    if (!fresh) uf.unite(it->second, i);
  }

  // Merge components related by a symmetry of some closed tiling through them.
  auto by_state = arrows_by_state(g);
  const std::size_t per = g.distance == 4 ? 2 : 1;
  const int nmin = minimum_timezones(g.distance);
  std::map<int, EarthMap> maps;
  for (std::size_t a = 0; a < na; ++a) {
    auto cycle = cycle_through(g, a, by_state);
    if (cycle.empty()) continue;
    int len = static_cast<int>(cycle.size() / per);
    int n = len;
    while (n < nmin) n += len;
    auto it = maps.find(n);
    if (it == maps.end()) it = maps.emplace(n, build_earth_map(g.distance, n)).first;
    const EarthMap& m = it->second;
    Labeling closed = assemble_closed(g, m, cycle);
    SymmetryGroup group = closed_group(g.distance, n);
    if (g.pattern == PatternTag::a2b2c) group = group.with_label_swap();
    for (const auto& s : group.elements()) {
      auto pieces = decompose_closed(g, m, apply(s, closed));
      if (!pieces) throw std::logic_error("symmetric image of a closed tiling does not decompose");
      for (std::size_t b : *pieces) uf.unite(a, b);
    }
  }

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < na; ++i) {
    auto [u, v] = edges[i];
    if (comp[u] == comp[v]) groups[uf.find(i)].push_back(i);
  }
  std::vector<Family> out;
  for (auto& [root, members] : groups) {
    Family f;
    f.id = out.size();
    f.distance = g.distance;
    f.pattern = g.pattern;
    f.arrows = members;
    std::set<std::string> nodes;
    std::set<int> parities;
    for (std::size_t i : members) {
      nodes.insert(g.nodes[g.arrows[i].from]);
      nodes.insert(g.nodes[g.arrows[i].to]);
      parities.insert(parity_of(g.pattern, g.nodes[g.arrows[i].from]));
    }
    f.nodes.assign(nodes.begin(), nodes.end());
    f.parity = parities.size() == 1 ? *parities.begin() : -1;
    out.push_back(std::move(f));
  }
  for (auto& f : out) f.descriptor = describe(g, f, by_state);
  return out;
}

PoleDescriptor pole_descriptor(const Family& f) { return f.descriptor; }

bool poles_overlap(const PoleDescriptor& x, const PoleDescriptor& y) {
  for (const auto& c : x.combinations)
    if (std::binary_search(y.combinations.begin(), y.combinations.end(), c)) return true;
  return false;
}

bool same_column(const std::pair<std::string, std::string>& x, const std::pair<std::string, std::string>& y) {
  if (x.first.size() != y.first.size() || x.second.size() != y.second.size()) return false;
  auto shifts = [](std::string n, std::string s, const std::pair<std::string, std::string>& target) {
    for (std::size_t k = 0; k < std::max<std::size_t>(n.size(), 1); ++k) {
      if (n == target.first && s == target.second) return true;
      std::rotate(n.begin(), n.begin() + (n.empty() ? 0 : 1), n.end());
      std::rotate(s.begin(), s.begin() + (s.empty() ? 0 : 1), s.end());
    }
    return false;
  };
  std::string rn(x.first.rbegin(), x.first.rend()), rs(x.second.rbegin(), x.second.rend());
  return shifts(x.first, x.second, y) || shifts(rn, rs, y) || shifts(x.second, x.first, y) || shifts(rs, rn, y);
}

namespace {

ClosedEnumeration collect(int d, int n, PatternTag p, const std::unordered_map<std::string, std::size_t>& counts,
                          std::size_t raw) {
  ClosedEnumeration out{d, n, p, raw, {}};
  std::vector<std::pair<std::string, std::size_t>> sorted(counts.begin(), counts.end());
  std::sort(sorted.begin(), sorted.end());
  for (auto& [s, c] : sorted) out.orbits.push_back({Labeling(p, s), c, {}});
  return out;
}

}  // namespace

ClosedEnumeration enumerate_closed(int d, int n, PatternTag p) {
  EarthMap m = build_earth_map(d, n);
  const SymmetryGroup& group = closed_group(d, n);
  std::unordered_map<std::string, std::size_t> counts;
  std::size_t raw = for_each_completion(m.mesh, pattern(p), Labeling(p, m.mesh.edge_count()), [&](const Labeling& l) {
    ++counts[canonicalize(l, group).str()];
    return true;
  });
  return collect(d, n, p, counts, raw);
}

ClosedEnumeration closed_from_family_graph(int d, int n, PatternTag p) {
  return closed_from_family_graph(build_family_graph(d, p), n);
}

ClosedEnumeration closed_from_family_graph(const FamilyGraph& g, int n) {
  EarthMap m = build_earth_map(g.distance, n);
  const SymmetryGroup& group = closed_group(g.distance, n);
  auto by_state = arrows_by_state(g);
  const std::size_t per = g.distance == 4 ? 2 : 1;
  const std::size_t steps = per * static_cast<std::size_t>(n);
  std::unordered_map<std::string, std::size_t> counts;
  std::size_t raw = 0;
  std::vector<std::size_t> walk;
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t start, std::size_t state) {
    if (walk.size() == steps) {
      if (state != start) return;
      ++raw;
      ++counts[canonicalize(assemble_closed(g, m, walk), group).str()];
      return;
    }
    for (std::size_t b : by_state[state]) {
      walk.push_back(b);
      extend(start, arrow_states(g, g.arrows[b]).second);
      walk.pop_back();
    }
  };
  // Walks start at phase 0 so that distance-4 timezones begin with a meridian part.
  for (std::size_t node = 0; node < g.nodes.size(); ++node) {
    std::size_t s = state_of(g, node, 0);
    extend(s, s);
  }
  return collect(g.distance, n, g.pattern, counts, raw);
}

Labeling specialize(const Labeling& l, const std::map<Label, Label>& substitution, PatternTag target) {
  std::string s = l.str();
  for (char& ch : s) {
    if (ch == '.') continue;
    auto it = substitution.find(static_cast<Label>(ch - 'a'));
    if (it != substitution.end()) ch = to_char(it->second);
  }
  return Labeling(target, s);
}

}  // namespace pentaglobe
