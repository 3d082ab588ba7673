#include "eulerext/advice.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "dsu.hpp"

namespace eulerext {

namespace {

std::vector<int> reversed(std::vector<int> s) {
  std::reverse(s.begin(), s.end());
  return s;
}

void check_sequence(std::span<const int> p, int c) {
  if (p.size() < 2) throw std::invalid_argument("hint sequence too short");
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] >= c)
      throw std::invalid_argument("hint references unknown component");
    if (i > 0 && p[i] == p[i - 1])
      throw std::invalid_argument("hint repeats a component consecutively");
  }
}

// One vertex per position of p, first u and last v.
std::optional<RealizedTrail> layered_path(
    const EEInstance& inst, const std::vector<std::vector<Vertex>>& members,
    std::span<const int> p, Vertex u, Vertex v) {
  const std::size_t k = p.size() - 1;
  std::vector<Vertex> prev_layer{u};
  std::vector<Weight> prev_dist{0};
  std::vector<std::vector<int>> back(k + 1);
  std::vector<std::vector<Vertex>> layer_of(k + 1);
  layer_of[0] = prev_layer;
  for (std::size_t i = 1; i <= k; ++i) {
    std::vector<Vertex> layer =
        i == k ? std::vector<Vertex>{v} : members[p[i]];
    std::vector<Weight> dist(layer.size(), kInf);
    back[i].assign(layer.size(), -1);
    for (std::size_t y = 0; y < layer.size(); ++y)
      for (std::size_t x = 0; x < prev_layer.size(); ++x) {
        if (prev_layer[x] == layer[y]) continue;
        Weight d = add_weight(prev_dist[x],
                              inst.weights.at(prev_layer[x], layer[y]));
        if (d < dist[y]) {
          dist[y] = d;
          back[i][y] = static_cast<int>(x);
        }
      }
    layer_of[i] = layer;
    prev_layer = std::move(layer);
    prev_dist = std::move(dist);
  }
  if (is_inf(prev_dist[0])) return std::nullopt;
  RealizedTrail r;
  r.weight = prev_dist[0];
  r.trail.vertices.resize(k + 1);
  int idx = 0;
  for (std::size_t i = k; i > 0; --i) {
    r.trail.vertices[i] = layer_of[i][idx];
    idx = back[i][idx];
  }
  r.trail.vertices[0] = u;
  return r;
}

}  // namespace

Hint canonical(Hint h) {
  if (h.kind == HintKind::path || !h.closed()) {
    h.sequence = std::min(h.sequence, reversed(h.sequence));
    return h;
  }
  std::vector<int> ring(h.sequence.begin(), h.sequence.end() - 1);
  std::vector<int> best;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t r = 0; r < ring.size(); ++r) {
      std::vector<int> cand(ring.begin() + r, ring.end());
      cand.insert(cand.end(), ring.begin(), ring.begin() + r);
      cand.push_back(cand.front());
      if (best.empty() || cand < best) best = cand;
    }
    std::reverse(ring.begin(), ring.end());
  }
  h.sequence = best;
  return h;
}

Advice canonical(Advice a) {
  for (Hint& h : a.hints) h = canonical(std::move(h));
  std::sort(a.hints.begin(), a.hints.end());
  return a;
}

std::optional<RealizedTrail> minpath(const EEInstance& inst,
                                     const ComponentStructure& comps,
                                     std::span<const int> p, Vertex u,
                                     Vertex v) {
  check_sequence(p, comps.c);
  if (comps.component_of.at(u) != p.front() ||
      comps.component_of.at(v) != p.back())
    throw std::invalid_argument("minpath: endpoint outside its component");
  return layered_path(inst, comps.members(), p, u, v);
}

std::optional<RealizedTrail> determine_cycle(const EEInstance& inst,
                                             const ComponentStructure& comps,
                                             const Hint& c_hint) {
  if (c_hint.kind != HintKind::cycle || !c_hint.closed())
    throw std::invalid_argument("determine_cycle: not a cycle hint");
  check_sequence(c_hint.sequence, comps.c);
  auto members = comps.members();
  const std::vector<int>& fwd = c_hint.sequence;
  const std::vector<int> rev = reversed(fwd);
  std::optional<RealizedTrail> best;
  for (Vertex v : members[fwd.front()])
    for (const auto* seq : {&fwd, &rev}) {
      auto r = layered_path(inst, members, *seq, v, v);
      if (r && (!best || r->weight < best->weight)) best = std::move(r);
    }
  return best;
}

std::optional<CycleElimination> eliminate_cycle_hints(const EEInstance& inst,
                                                      const Advice& p) {
  ComponentStructure comps = components(inst.graph);
  CycleElimination out;
  for (const Hint& h : p.hints) {
    if (h.kind != HintKind::cycle) continue;
    auto r = determine_cycle(inst, comps, h);
    if (!r) return std::nullopt;
    ArcMultiset arcs = r->trail.arcs();
    out.partial.insert(out.partial.end(), arcs.begin(), arcs.end());
    out.weight = add_weight(out.weight, r->weight);
  }
  if (out.weight > inst.omega_max) return std::nullopt;
  out.partial = sorted_arcs(std::move(out.partial));
  out.instance = inst;
  out.instance.graph.add_arcs(out.partial);
  if (!is_inf(inst.omega_max)) out.instance.omega_max -= out.weight;

  ComponentStructure merged = components(out.instance.graph);
  auto members = comps.members();
  for (const Hint& h : p.hints) {
    if (h.kind != HintKind::path) continue;
    Hint q;
    for (int old : h.sequence) {
      int now = merged.component_of[members[old].front()];
      if (q.sequence.empty() || q.sequence.back() != now)
        q.sequence.push_back(now);
    }
    if (q.sequence.size() >= 2) out.advice.hints.push_back(std::move(q));
  }
  return out;
}

std::vector<std::pair<int, int>> hint_edges(const Hint& h) {
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i + 1 < h.sequence.size(); ++i)
    e.emplace_back(std::min(h.sequence[i], h.sequence[i + 1]),
                   std::max(h.sequence[i], h.sequence[i + 1]));
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return e;
}

namespace {

bool connects_all(int c, const Advice& a, int skip) {
  detail::Dsu dsu(c);
  for (int i = 0; i < static_cast<int>(a.hints.size()); ++i) {
    if (i == skip) continue;
    for (auto [x, y] : hint_edges(a.hints[i])) dsu.unite(x, y);
  }
  return dsu.sets() == 1;
}

// Positions of trail edges that may be lost when the initial vertex is
// removed, for each admissible choice of initial vertex.
std::vector<int> droppable(const Hint& h) {
  int len = h.length();
  if (h.kind == HintKind::cycle) {
    std::vector<int> all(len);
    for (int i = 0; i < len; ++i) all[i] = i;
    return all;
  }
  if (len == 1) return {0};
  return {0, len - 1};
}

bool forest_search(int c, const Advice& a, std::size_t i,
                   std::vector<std::pair<int, int>>& kept) {
  if (i == a.hints.size()) {
    detail::Dsu dsu(c);
    for (auto [x, y] : kept)
      if (!dsu.unite(x, y)) return false;
    return true;
  }
  const Hint& h = a.hints[i];
  for (int drop : droppable(h)) {
    std::size_t before = kept.size();
    for (int e = 0; e < h.length(); ++e)
      if (e != drop) kept.emplace_back(h.sequence[e], h.sequence[e + 1]);
    bool ok = forest_search(c, a, i + 1, kept);
    kept.resize(before);
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool is_connecting(int c, const Advice& a) {
  return connects_all(c, a, -1);
}

bool is_minimal_connecting(int c, const Advice& a) {
  if (!connects_all(c, a, -1)) return false;
  for (int i = 0; i < static_cast<int>(a.hints.size()); ++i)
    if (connects_all(c, a, i)) return false;
  return true;
}

bool has_forest_shape(int c, const Advice& a) {
  std::vector<std::pair<int, int>> kept;
  return forest_search(c, a, 0, kept);
}

namespace {

// All canonical hints over K_c whose trail is a path or visits only its
// closing component twice.
std::vector<Hint> candidate_hints(int c) {
  std::set<Hint> out;
  std::vector<int> seq;
  std::vector<char> used(c, 0);
  auto grow = [&](auto&& self) -> void {
    if (seq.size() >= 2) {
      out.insert(canonical(Hint{HintKind::path, seq}));
      if (seq.size() >= 2) {
        std::vector<int> closed = seq;
        closed.push_back(seq.front());
        out.insert(canonical(Hint{HintKind::path, closed}));
        out.insert(canonical(Hint{HintKind::cycle, closed}));
      }
    }
    for (int x = 0; x < c; ++x) {
      if (used[x]) continue;
      used[x] = 1;
      seq.push_back(x);
      self(self);
      seq.pop_back();
      used[x] = 0;
    }
  };
  grow(grow);
  return {out.begin(), out.end()};
}

int edge_id(int c, int x, int y) {
  if (x > y) std::swap(x, y);
  return x * c + y;
}

}  // namespace

std::vector<Advice> enumerate_min_connecting_advices(int c) {
  if (c < 2) return {};
  if (c > 7) throw std::invalid_argument("advice enumeration supports c <= 7");
  std::vector<Hint> cand = candidate_hints(c);
  std::vector<std::uint64_t> mask(cand.size(), 0);
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (auto [x, y] : hint_edges(cand[i]))
      mask[i] |= std::uint64_t{1} << edge_id(c, x, y);

  std::vector<Advice> out;
  Advice cur;
  // Forest shape bounds the summed lengths: sum(len - 1) <= c - 1.
  auto search = [&](auto&& self, std::size_t from, std::uint64_t used,
                    int budget) -> void {
    if (!cur.hints.empty() && is_connecting(c, cur)) {
      if (is_minimal_connecting(c, cur) && has_forest_shape(c, cur))
        out.push_back(cur);
      return;
    }
    if (static_cast<int>(cur.hints.size()) == c) return;
    for (std::size_t i = from; i < cand.size(); ++i) {
      int cost = cand[i].length() - 1;
      if (cost > budget || (mask[i] & used)) continue;
      cur.hints.push_back(cand[i]);
      self(self, i + 1, used | mask[i], budget - cost);
      cur.hints.pop_back();
    }
  };
  search(search, 0, 0, c - 1);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Depth-first search for a simple path or cycle of e whose component image
// follows seq; positions advance only when the component changes.
class RealizationSearch {
 public:
  RealizationSearch(const EEInstance& inst, const ArcMultiset& e)
      : comps_(components(inst.graph)),
        balance_(balance_profile(inst.graph).balance),
        out_(inst.n()),
        on_path_(inst.n(), 0) {
    for (const Arc& a : e) out_[a.from].push_back(a.to);
    for (auto& heads : out_) {
      std::sort(heads.begin(), heads.end());
      heads.erase(std::unique(heads.begin(), heads.end()), heads.end());
    }
  }

  bool path(const std::vector<int>& seq) {
    seq_ = &seq;
    cycle_ = false;
    for (Vertex u = 0; u < static_cast<Vertex>(out_.size()); ++u)
      if (balance_[u] > 0 && comps_.component_of[u] == seq.front() && walk(u, 0, 0))
        return true;
    return false;
  }

  // seq closed; the walk must come back to its start at the last position.
  bool cycle(const std::vector<int>& seq) {
    seq_ = &seq;
    cycle_ = true;
    for (Vertex u = 0; u < static_cast<Vertex>(out_.size()); ++u) {
      if (comps_.component_of[u] != seq.front()) continue;
      start_ = u;
      if (walk(u, 0, 0)) return true;
    }
    return false;
  }

 private:
  bool walk(Vertex v, std::size_t pos, int steps) {
    const std::vector<int>& seq = *seq_;
    const std::size_t last = seq.size() - 1;
    if (!cycle_ && pos == last && steps > 0 && balance_[v] < 0) return true;
    on_path_[v] = 1;
    bool found = false;
    for (Vertex w : out_[v]) {
      int cw = comps_.component_of[w];
      std::size_t next = pos;
      if (cw != seq[pos]) {
        if (pos == last || cw != seq[pos + 1]) continue;
        next = pos + 1;
      }
      if (cycle_ && w == start_) {
        if (next == last && steps + 1 >= 2) found = true;
      } else if (!on_path_[w]) {
        found = walk(w, next, steps + 1);
      }
      if (found) break;
    }
    on_path_[v] = 0;
    return found;
  }

  ComponentStructure comps_;
  std::vector<int> balance_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<char> on_path_;
  const std::vector<int>* seq_ = nullptr;
  bool cycle_ = false;
  Vertex start_ = 0;
};

}  // namespace

bool heeds_advice(const EEInstance& inst, const Advice& p, const ArcMultiset& e) {
  RealizationSearch search(inst, e);
  for (const Hint& h : p.hints) {
    std::vector<int> rev(h.sequence.rbegin(), h.sequence.rend());
    bool ok = false;
    if (h.kind == HintKind::path) {
      ok = search.path(h.sequence) || search.path(rev);
    } else {
      std::vector<int> base(h.sequence.begin(), h.sequence.end() - 1);
      for (int dir = 0; dir < 2 && !ok; ++dir) {
        for (std::size_t r = 0; r < base.size() && !ok; ++r) {
          std::vector<int> seq(base.begin() + r, base.end());
          seq.insert(seq.end(), base.begin(), base.begin() + r);
          seq.push_back(seq.front());
          ok = search.cycle(seq);
        }
        std::reverse(base.begin(), base.end());
      }
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace eulerext
