#include "pentaglobe/search.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pentaglobe {

Labeling::Labeling(PatternTag pattern, std::size_t edge_count) : pattern_(pattern), labels_(edge_count, '.') {}

Labeling::Labeling(PatternTag pattern, std::string labels) : pattern_(pattern), labels_(std::move(labels)) {
  for (char ch : labels_)
    if (ch != '.' && !label_from_char(ch)) throw std::invalid_argument(std::string("bad label '") + ch + "'");
}

std::optional<Label> Labeling::get(EdgeId e) const {
  if (labels_[e] == '.') return std::nullopt;
  return static_cast<Label>(labels_[e] - 'a');
}

void Labeling::set(EdgeId e, Label l) { labels_[e] = to_char(l); }
void Labeling::clear(EdgeId e) { labels_[e] = '.'; }

bool Labeling::is_total() const { return labels_.find('.') == std::string::npos; }

PartialCycle face_labels(const Fragment& host, const Labeling& l, FaceId f) {
  PartialCycle out{};
  const auto& es = host.face(f).edges;
  for (int p = 0; p < 5; ++p) {
    char ch = l.str()[es[p]];
    out[p] = ch == '.' ? kUnset : static_cast<std::uint8_t>(ch - 'a');
  }
  return out;
}

bool is_valid(const Fragment& host, const Labeling& l) {
  if (l.size() != host.edge_count()) return false;
  const auto& p = pattern(l.pattern());
  for (char ch : l.str())
    if (ch != '.' && !p.uses(static_cast<Label>(ch - 'a'))) return false;
  for (FaceId f = 0; f < host.face_count(); ++f)
    if (!partial_feasible(face_labels(host, l, f), p)) return false;
  return true;
}

namespace {

class Search {
 public:
  Search(const Fragment& host, const EdgePattern& p, const std::function<bool(const Labeling&)>& visit)
      : host_(host), pattern_(p), visit_(visit) {
    for (const auto& pl : p.placements()) {
      std::array<std::uint8_t, 5> row{};
      for (int i = 0; i < 5; ++i) row[i] = static_cast<std::uint8_t>(pl.labels[i]);
      rows_.push_back(row);
    }
    face_edges_.resize(host.face_count());
    for (FaceId f = 0; f < host.face_count(); ++f)
      for (int i = 0; i < 5; ++i) face_edges_[f][i] = host.face(f).edges[i];
  }

  std::size_t run(const Labeling& seed) {
    labels_.assign(host_.edge_count(), kUnset);
    for (EdgeId e = 0; e < seed.size(); ++e)
      if (auto l = seed.get(e)) labels_[e] = static_cast<std::uint8_t>(*l);
    for (FaceId f = 0; f < host_.face_count(); ++f)
      if (!face_feasible(f))
        throw std::invalid_argument("seed is inconsistent on face " + std::to_string(f));
    tag_ = seed.pattern();
    buffer_.assign(host_.edge_count(), '.');
    std::vector<FaceId> all(host_.face_count());
    for (FaceId f = 0; f < all.size(); ++f) all[f] = f;
    if (propagate(all)) descend();
    return count_;
  }

 private:
  bool face_feasible(FaceId f) const {
    const auto& es = face_edges_[f];
    for (const auto& row : rows_) {
      bool ok = true;
      for (int i = 0; i < 5 && ok; ++i) ok = labels_[es[i]] == kUnset || labels_[es[i]] == row[i];
      if (ok) return true;
    }
    return false;
  }

  void assign(EdgeId e, std::uint8_t l) {
    labels_[e] = l;
    trail_.push_back(e);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      labels_[trail_.back()] = kUnset;
      trail_.pop_back();
    }
  }

  // Forces every position on which all consistent placements of a face agree.
  bool propagate(std::vector<FaceId> queue) {
    while (!queue.empty()) {
      FaceId f = queue.back();
      queue.pop_back();
      const auto& es = face_edges_[f];
      std::array<int, 5> agreed;
      agreed.fill(-1);
      int consistent = 0;
      for (const auto& row : rows_) {
        bool ok = true;
        for (int i = 0; i < 5 && ok; ++i) ok = labels_[es[i]] == kUnset || labels_[es[i]] == row[i];
        if (!ok) continue;
        ++consistent;
        for (int i = 0; i < 5; ++i) {
          if (labels_[es[i]] != kUnset) continue;
          if (agreed[i] == -1)
            agreed[i] = row[i];
          else if (agreed[i] != row[i])
            agreed[i] = -2;
        }
      }
      if (consistent == 0) return false;
      for (int i = 0; i < 5; ++i) {
        if (agreed[i] < 0 || labels_[es[i]] != kUnset) continue;
        assign(es[i], static_cast<std::uint8_t>(agreed[i]));
        for (FaceId g : host_.faces_of(es[i]))
          if (g != kNone && g != f) queue.push_back(g);
      }
    }
    return true;
  }

  void descend() {
    if (stop_) return;
    EdgeId e = 0;
    while (e < labels_.size() && labels_[e] != kUnset) ++e;
    if (e == labels_.size()) {
      ++count_;
      for (std::size_t i = 0; i < labels_.size(); ++i) buffer_[i] = static_cast<char>('a' + labels_[i]);
      if (!visit_(Labeling(tag_, buffer_))) stop_ = true;
      return;
    }
    for (Label l : pattern_.alphabet()) {
      std::size_t mark = trail_.size();
      assign(e, static_cast<std::uint8_t>(l));
      std::vector<FaceId> q;
      for (FaceId g : host_.faces_of(e))
        if (g != kNone) q.push_back(g);
      if (propagate(std::move(q))) descend();
      undo(mark);
      if (stop_) return;
    }
  }

  const Fragment& host_;
  const EdgePattern& pattern_;
  const std::function<bool(const Labeling&)>& visit_;
  std::vector<std::array<std::uint8_t, 5>> rows_;
  std::vector<std::array<EdgeId, 5>> face_edges_;
  std::vector<std::uint8_t> labels_;
  std::vector<EdgeId> trail_;
  PatternTag tag_ = PatternTag::a5;
  std::string buffer_;
  std::size_t count_ = 0;
  bool stop_ = false;
};

}  // namespace

std::size_t for_each_completion(const Fragment& host, const EdgePattern& p, const Labeling& seed,
                                const std::function<bool(const Labeling&)>& visit) {
  if (seed.size() != host.edge_count()) throw std::invalid_argument("seed size does not match host");
  for (char ch : seed.str())
    if (ch != '.' && !p.uses(static_cast<Label>(ch - 'a')))
      throw std::invalid_argument("seed uses a label outside the pattern alphabet");
  for (const auto& f : host.faces())
    if (f.edges.size() != 5) throw std::invalid_argument("host has a non-pentagonal face");
  Labeling tagged(p.tag(), seed.str());
  Search s(host, p, visit);
  return s.run(tagged);
}

std::vector<Labeling> enumerate_completions(const Fragment& host, const EdgePattern& p, const Labeling& seed) {
  std::vector<Labeling> out;
  for_each_completion(host, p, seed, [&](const Labeling& l) {
    out.push_back(l);
    return true;
  });
  return out;
}

Labeling apply(const Automorphism& g, const Labeling& l) {
  if (g.edge_map.size() != l.size()) throw std::invalid_argument("automorphism does not act on this host");
  std::string out(l.size(), '.');
  const auto& s = l.str();
  for (std::size_t e = 0; e < s.size(); ++e)
    out[g.edge_map[e]] = s[e] == '.' ? '.' : to_char(g.relabel[s[e] - 'a']);
  return Labeling(l.pattern(), std::move(out));
}

Labeling canonicalize(const Labeling& l, const SymmetryGroup& group) {
  std::string best = l.str();
  std::string img(l.size(), '.');
  const auto& s = l.str();
  for (const auto& g : group.elements()) {
    if (g.edge_map.size() != s.size()) throw std::invalid_argument("automorphism does not act on this host");
    for (std::size_t e = 0; e < s.size(); ++e) img[g.edge_map[e]] = s[e] == '.' ? '.' : to_char(g.relabel[s[e] - 'a']);
    if (img < best) best = img;
  }
  return Labeling(l.pattern(), std::move(best));
}

std::vector<OrbitRepresentative> orbit_reduce(const std::vector<Labeling>& labelings, const SymmetryGroup& group) {
  std::map<std::string, OrbitRepresentative> classes;
  for (std::size_t i = 0; i < labelings.size(); ++i) {
    Labeling c = canonicalize(labelings[i], group);
    auto& rep = classes[c.str()];
    if (rep.multiplicity == 0) rep.canonical = c;
    ++rep.multiplicity;
    rep.members.push_back(i);
  }
  std::vector<OrbitRepresentative> out;
  for (auto& [key, rep] : classes) out.push_back(std::move(rep));
  return out;
}

}  // namespace pentaglobe
