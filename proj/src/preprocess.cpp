#include "eulerext/preprocess.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace eulerext {

void validate(const EEInstance& inst) {
  if (inst.weights.size() != inst.graph.vertex_count())
    throw std::invalid_argument("weight table size differs from vertex count");
  for (int v = 0; v < inst.n(); ++v)
    if (!is_inf(inst.weights.at(v, v)))
      throw std::invalid_argument("diagonal weight must be inf at vertex " +
                                  std::to_string(v));
  for (int u = 0; u < inst.n(); ++u)
    for (int v = 0; v < inst.n(); ++v)
      if (inst.weights.at(u, v) < 0)
        throw std::invalid_argument("negative weight");
}

Weight arc_weight(const EEInstance& inst, const ArcMultiset& arcs) {
  Weight total = 0;
  for (const Arc& a : arcs)
    total = add_weight(total, inst.weights.at(a.from, a.to));
  return total;
}

PreprocessMap PreprocessMap::identity(int n) {
  PreprocessMap m;
  m.original_n_ = n;
  m.origin_of_.resize(n);
  for (int v = 0; v < n; ++v) m.origin_of_[v] = v;
  return m;
}

std::vector<Vertex> PreprocessMap::path_expansion(Vertex u, Vertex v) const {
  if (pred_.empty()) return {u, v};
  std::vector<Vertex> path{v};
  while (path.back() != u) {
    Vertex p = pred_[u][path.back()];
    if (p < 0) return {u, v};
    path.push_back(p);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

ArcMultiset PreprocessMap::lift(const ArcMultiset& e) const {
  ArcMultiset out;
  for (const Arc& a : e) {
    if (a.from < 0 || a.to < 0 || a.from >= vertex_count() ||
        a.to >= vertex_count())
      throw std::invalid_argument("lift: arc references unknown vertex");
    std::vector<Vertex> path = path_expansion(a.from, a.to);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      Vertex x = origin_of_[path[i]];
      Vertex y = origin_of_[path[i + 1]];
      if (x != y) out.push_back({x, y});
    }
  }
  return sorted_arcs(std::move(out));
}

ArcMultiset lift_extension(const PreprocessMap& maps, const ArcMultiset& e) {
  return maps.lift(e);
}

std::pair<EEInstance, PreprocessMap> split_vertices(const EEInstance& inst) {
  validate(inst);
  EEInstance out = inst;
  PreprocessMap map = PreprocessMap::identity(inst.n());
  ArcMultiset arcs = inst.graph.arcs();
  std::vector<int> bal = balance_profile(inst.graph).balance;

  for (Vertex v = 0; v < static_cast<int>(bal.size()); ++v) {
    while (bal[v] > 1 || bal[v] < -1) {
      Vertex u = out.weights.add_vertex();
      map.origin_of_.push_back(map.origin_of_[v]);
      for (Vertex y = 0; y < u; ++y) {
        out.weights.at(u, y) = out.weights.at(v, y);
        out.weights.at(y, u) = out.weights.at(y, v);
      }
      out.weights.at(u, v) = kInf;
      out.weights.at(v, u) = kInf;
      // Redirect the lexicographically largest excess arc at v.
      bool into = bal[v] > 0;
      auto pick = arcs.end();
      for (auto it = arcs.begin(); it != arcs.end(); ++it)
        if ((into ? it->to : it->from) == v) pick = it;
      if (into) {
        pick->to = u;
        --bal[v];
      } else {
        pick->from = u;
        ++bal[v];
      }
      arcs.push_back({u, v});
      arcs.push_back({v, u});
      std::sort(arcs.begin(), arcs.end());
      bal.push_back(into ? 1 : -1);
    }
  }
  out.graph = DirectedMultigraph(static_cast<int>(bal.size()), std::move(arcs));
  return {std::move(out), std::move(map)};
}

namespace {

struct ClosureTable {
  WeightMatrix dist;
  std::vector<std::vector<Vertex>> pred;
};

// Label-setting shortest paths per source; equal labels keep the smaller
// predecessor.
ClosureTable shortest_paths(const WeightMatrix& w) {
  const int n = w.size();
  ClosureTable t{WeightMatrix(n), std::vector<std::vector<Vertex>>(
                                      n, std::vector<Vertex>(n, -1))};
  std::vector<Weight> d(n);
  std::vector<char> done(n);
  for (Vertex s = 0; s < n; ++s) {
    auto& pred = t.pred[s];
    std::fill(d.begin(), d.end(), kInf);
    std::fill(done.begin(), done.end(), 0);
    using Item = std::pair<Weight, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    d[s] = 0;
    pq.push({0, s});
    while (!pq.empty()) {
      auto [du, u] = pq.top();
      pq.pop();
      if (done[u] || du != d[u]) continue;
      done[u] = 1;
      for (Vertex v = 0; v < n; ++v) {
        if (v == u || done[v] || is_inf(w.at(u, v))) continue;
        Weight nd = du + w.at(u, v);
        if (nd < d[v] || (nd == d[v] && u < pred[v])) {
          if (nd < d[v]) pq.push({nd, v});
          d[v] = nd;
          pred[v] = u;
        }
      }
    }
    for (Vertex v = 0; v < n; ++v)
      if (v != s) t.dist.at(s, v) = d[v];
  }
  return t;
}

}  // namespace

std::pair<EEInstance, PreprocessMap> metric_closure(const EEInstance& inst) {
  validate(inst);
  ClosureTable t = shortest_paths(inst.weights);
  EEInstance out = inst;
  out.weights = std::move(t.dist);
  PreprocessMap map = PreprocessMap::identity(inst.n());
  map.pred_ = std::move(t.pred);
  return {std::move(out), std::move(map)};
}

std::pair<EEInstance, PreprocessMap> preprocess(const EEInstance& inst) {
  auto [split, split_map] = split_vertices(inst);
  auto [closed, closure_map] = metric_closure(split);
  split_map.pred_ = std::move(closure_map.pred_);
  return {std::move(closed), std::move(split_map)};
}

bool is_metric(const WeightMatrix& w) {
  const int n = w.size();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      for (int x = 0; x < n; ++x) {
        if (x == u || x == v) continue;
        if (w.at(u, x) > add_weight(w.at(u, v), w.at(v, x))) return false;
      }
    }
  return true;
}

}  // namespace eulerext
