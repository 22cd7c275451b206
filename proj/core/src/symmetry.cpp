#include "pentaglobe/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace pentaglobe {

bool Automorphism::is_identity() const {
  for (std::size_t i = 0; i < edge_map.size(); ++i)
    if (edge_map[i] != i) return false;
  for (std::size_t i = 0; i < vertex_map.size(); ++i)
    if (vertex_map[i] != i) return false;
  return relabel == std::array<Label, 3>{Label::a, Label::b, Label::c};
}

Automorphism compose(const Automorphism& outer, const Automorphism& inner) {
  Automorphism r;
  r.vertex_map.resize(inner.vertex_map.size());
  r.edge_map.resize(inner.edge_map.size());
  r.face_map.resize(inner.face_map.size());
  for (std::size_t i = 0; i < inner.vertex_map.size(); ++i) r.vertex_map[i] = outer.vertex_map[inner.vertex_map[i]];
  for (std::size_t i = 0; i < inner.edge_map.size(); ++i) r.edge_map[i] = outer.edge_map[inner.edge_map[i]];
  for (std::size_t i = 0; i < inner.face_map.size(); ++i) r.face_map[i] = outer.face_map[inner.face_map[i]];
  r.reverses_orientation = outer.reverses_orientation != inner.reverses_orientation;
  for (int l = 0; l < 3; ++l) r.relabel[l] = outer.relabel[static_cast<int>(inner.relabel[l])];
  return r;
}

namespace {

bool same(const Automorphism& x, const Automorphism& y) {
  return x.edge_map == y.edge_map && x.vertex_map == y.vertex_map && x.relabel == y.relabel;
}

// Tries to extend face 0 -> (target, rotation, direction) to a whole automorphism.
bool extend(const Fragment& f, FaceId target, int rot, int dir, Automorphism& out) {
  const std::size_t nf = f.face_count();
  out.vertex_map.assign(f.vertex_count(), kNone);
  out.edge_map.assign(f.edge_count(), kNone);
  out.face_map.assign(nf, kNone);
  std::vector<int> frot(nf, 0);
  out.reverses_orientation = dir < 0;
  std::deque<FaceId> queue;
  out.face_map[0] = target;
  frot[0] = rot;
  queue.push_back(0);
  std::vector<bool> vused(f.vertex_count(), false), eused(f.edge_count(), false), fused(nf, false);
  fused[target] = true;
  auto idx = [](int x) { return ((x % 5) + 5) % 5; };
  while (!queue.empty()) {
    FaceId g = queue.front();
    queue.pop_front();
    FaceId h = out.face_map[g];
    int r = frot[g];
    const auto& fg = f.face(g);
    const auto& fh = f.face(h);
    for (int p = 0; p < 5; ++p) {
      VertexId v = fg.vertices[p], w = fh.vertices[idx(r + dir * p)];
      if (out.vertex_map[v] == kNone) {
        if (vused[w]) return false;
        out.vertex_map[v] = w;
        vused[w] = true;
      } else if (out.vertex_map[v] != w) {
        return false;
      }
      int q = dir > 0 ? idx(r + p) : idx(r - p - 1);
      EdgeId e = fg.edges[p], e2 = fh.edges[q];
      if (out.edge_map[e] == kNone) {
        if (eused[e2]) return false;
        out.edge_map[e] = e2;
        eused[e2] = true;
      } else if (out.edge_map[e] != e2) {
        return false;
      }
      FaceId g2 = f.across(g, p), h2 = f.across(h, q);
      if ((g2 == kNone) != (h2 == kNone)) return false;
      if (g2 == kNone) continue;
      int a = f.position_in(g2, e), b = f.position_in(h2, e2);
      int r2 = dir > 0 ? idx(b - a) : idx(b + a + 1);
      if (out.face_map[g2] == kNone) {
        if (fused[h2]) return false;
        out.face_map[g2] = h2;
        fused[h2] = true;
        frot[g2] = r2;
        queue.push_back(g2);
      } else if (out.face_map[g2] != h2 || frot[g2] != r2) {
        return false;
      }
    }
  }
  for (auto x : out.vertex_map)
    if (x == kNone) return false;
  for (auto x : out.edge_map)
    if (x == kNone) return false;
  for (auto x : out.face_map)
    if (x == kNone) return false;
  return true;
}

}  // namespace

std::vector<Automorphism> automorphisms(const Fragment& f) {
  std::vector<Automorphism> out;
  if (f.face_count() == 0) return out;
  const std::size_t deg0 = f.face(0).edges.size();
  if (deg0 != 5) throw std::invalid_argument("automorphism search needs pentagonal faces");
  for (FaceId t = 0; t < f.face_count(); ++t)
    for (int dir : {1, -1})
      for (int rot = 0; rot < 5; ++rot) {
        Automorphism g;
        if (extend(f, t, rot, dir, g)) out.push_back(std::move(g));
      }
  // Identity first, then the rest in discovery order.
  auto it = std::find_if(out.begin(), out.end(), [](const Automorphism& g) { return g.is_identity(); });
  if (it != out.end()) std::rotate(out.begin(), it, it + 1);
  return out;
}

bool is_automorphism(const Fragment& f, const Automorphism& g) {
  if (g.vertex_map.size() != f.vertex_count() || g.edge_map.size() != f.edge_count() ||
      g.face_map.size() != f.face_count())
    return false;
  std::set<std::uint32_t> vs(g.vertex_map.begin(), g.vertex_map.end()),
      es(g.edge_map.begin(), g.edge_map.end()), fs(g.face_map.begin(), g.face_map.end());
  if (vs.size() != f.vertex_count() || es.size() != f.edge_count() || fs.size() != f.face_count()) return false;
  for (EdgeId e = 0; e < f.edge_count(); ++e) {
    const auto& x = f.edge(e);
    const auto& y = f.edge(g.edge_map[e]);
    VertexId a = g.vertex_map[x.v1], b = g.vertex_map[x.v2];
    if (!((a == y.v1 && b == y.v2) || (a == y.v2 && b == y.v1))) return false;
  }
  for (FaceId i = 0; i < f.face_count(); ++i) {
    const auto& src = f.face(i);
    const auto& dst = f.face(g.face_map[i]);
    // Image edge cycle must be a rotation of the target cycle, reversed iff orientation flips.
    std::vector<EdgeId> img;
    for (EdgeId e : src.edges) img.push_back(g.edge_map[e]);
    if (g.reverses_orientation) std::reverse(img.begin(), img.end());
    bool ok = false;
    for (std::size_t r = 0; r < 5 && !ok; ++r) {
      ok = true;
      for (std::size_t p = 0; p < 5 && ok; ++p) ok = img[p] == dst.edges[(p + r) % 5];
    }
    if (!ok) return false;
  }
  return true;
}

SymmetryGroup::SymmetryGroup(std::vector<Automorphism> elements) : elements_(std::move(elements)) {
  // Greedy generating set: add an element whenever it is outside the span so far.
  std::vector<Automorphism> span;
  auto contains = [&](const Automorphism& x) {
    return std::any_of(span.begin(), span.end(), [&](const Automorphism& y) { return same(x, y); });
  };
  if (elements_.empty()) return;
  span.push_back(elements_[0]);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (contains(elements_[i])) continue;
    generators_.push_back(i);
    // Close the span under the generators chosen so far.
    bool grew = true;
    span.push_back(elements_[i]);
    while (grew) {
      grew = false;
      std::size_t sz = span.size();
      for (std::size_t a = 0; a < sz; ++a)
        for (std::size_t gi : generators_) {
          Automorphism c = compose(elements_[gi], span[a]);
          if (!contains(c)) {
            span.push_back(std::move(c));
            grew = true;
          }
        }
    }
  }
}

SymmetryGroup SymmetryGroup::with_label_swap() const {
  if (has_label_swap()) return *this;
  std::vector<Automorphism> out = elements_;
  for (const auto& g : elements_) {
    Automorphism s = g;
    s.relabel = {Label::b, Label::a, Label::c};
    out.push_back(std::move(s));
  }
  return SymmetryGroup(std::move(out));
}

bool SymmetryGroup::has_label_swap() const {
  return std::any_of(elements_.begin(), elements_.end(),
                     [](const Automorphism& g) { return g.relabel[0] != Label::a; });
}

SymmetryGroup symmetries(const NeighborhoodFragment& n) { return SymmetryGroup(automorphisms(n.fragment())); }

SymmetryGroup symmetries(const Fragment& f) { return SymmetryGroup(automorphisms(f)); }

namespace {

bool keeps_set(const std::vector<std::uint32_t>& map, const std::vector<std::uint32_t>& set) {
  std::set<std::uint32_t> s(set.begin(), set.end());
  for (auto x : set)
    if (!s.count(map[x])) return false;
  return true;
}

}  // namespace

SymmetryGroup symmetries(const TimezoneTemplate& t) {
  std::vector<EdgeId> meridians = t.left_meridian;
  meridians.insert(meridians.end(), t.right_meridian.begin(), t.right_meridian.end());
  std::vector<Automorphism> keep;
  for (auto& g : automorphisms(t.fragment))
    if (keeps_set(g.vertex_map, {t.north, t.south}) && keeps_set(g.edge_map, meridians)) keep.push_back(std::move(g));
  return SymmetryGroup(std::move(keep));
}

SymmetryGroup part_symmetries(const TimezoneTemplate& t, bool meridian_part) {
  if (t.distance != 4) throw std::invalid_argument("parts exist only at distance 4");
  const auto& faces = meridian_part ? t.meridian_part : t.core_part;
  std::vector<VertexId> vorig;
  std::vector<EdgeId> eorig;
  Fragment part = t.fragment.restrict_to(faces, &vorig, &eorig);
  std::vector<EdgeId> bounds = t.inner_meridian;
  const auto& other = meridian_part ? t.left_meridian : t.right_meridian;
  bounds.insert(bounds.end(), other.begin(), other.end());
  std::vector<EdgeId> local;
  std::vector<VertexId> poles;
  for (EdgeId e = 0; e < eorig.size(); ++e)
    if (std::find(bounds.begin(), bounds.end(), eorig[e]) != bounds.end()) local.push_back(e);
  for (VertexId v = 0; v < vorig.size(); ++v)
    if (vorig[v] == t.north || vorig[v] == t.south) poles.push_back(v);
  std::vector<Automorphism> keep;
  for (auto& g : automorphisms(part))
    if (keeps_set(g.vertex_map, poles) && keeps_set(g.edge_map, local)) keep.push_back(std::move(g));
  return SymmetryGroup(std::move(keep));
}

SymmetryGroup symmetries(const EarthMap& m) { return SymmetryGroup(automorphisms(m.mesh)); }

}  // namespace pentaglobe
