#include <stdexcept>
#include <vector>

#include "dsu.hpp"
#include "eulerext/ee_solver.hpp"
#include "eulerext/matching.hpp"

namespace eulerext {

namespace {

struct FlowSearch {
  const EEInstance& inst;
  int n = 0;
  std::vector<std::vector<Weight>> dist;
  std::vector<std::vector<Vertex>> next;  // first hop of a shortest path
  std::vector<int> balance;
  std::vector<Arc> joining;  // finite arcs between different components
  std::vector<int> comp_of;
  int c = 0;

  Weight best = kInf;
  ArcMultiset best_arcs;
  ArcMultiset tree;

  explicit FlowSearch(const EEInstance& in) : inst(in), n(in.n()) {}

  void shortest_paths() {
    dist.assign(n, std::vector<Weight>(n, kInf));
    next.assign(n, std::vector<Vertex>(n, -1));
    for (Vertex u = 0; u < n; ++u) {
      dist[u][u] = 0;
      next[u][u] = u;
      for (Vertex v = 0; v < n; ++v)
        if (u != v && !is_inf(inst.weights.at(u, v))) {
          dist[u][v] = inst.weights.at(u, v);
          next[u][v] = v;
        }
    }
    for (Vertex k = 0; k < n; ++k)
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
          Weight w = add_weight(dist[u][k], dist[k][v]);
          if (w < dist[u][v]) {
            dist[u][v] = w;
            next[u][v] = next[u][k];
          }
        }
  }

  // Cheapest balancing flow for the current tree; kInf when none exists.
  Weight balance_flow(Weight tree_weight, ArcMultiset* arcs) {
    std::vector<int> bal = balance;
    for (const Arc& a : tree) {
      --bal[a.from];
      ++bal[a.to];
    }
    // bal > 0: the vertex needs that many more out-arcs.
    std::vector<Vertex> sources, sinks;
    for (Vertex v = 0; v < n; ++v) {
      for (int k = 0; k < bal[v]; ++k) sources.push_back(v);
      for (int k = 0; k < -bal[v]; ++k) sinks.push_back(v);
    }
    std::vector<BipartiteEdge> edges;
    for (int i = 0; i < static_cast<int>(sources.size()); ++i)
      for (int j = 0; j < static_cast<int>(sinks.size()); ++j)
        if (!is_inf(dist[sources[i]][sinks[j]]))
          edges.push_back({i, j, dist[sources[i]][sinks[j]]});
    auto m = min_weight_perfect_matching(static_cast<int>(sources.size()),
                                         static_cast<int>(sinks.size()), edges);
    if (!m) return kInf;
    Weight total = tree_weight;
    for (const BipartiteEdge& e : *m) total = add_weight(total, e.weight);
    if (arcs) {
      *arcs = tree;
      for (const BipartiteEdge& e : *m)
        for (Vertex u = sources[e.left], v = sinks[e.right]; u != v;) {
          Vertex h = next[u][v];
          arcs->push_back({u, h});
          u = h;
        }
    }
    return total;
  }

  void grow(std::size_t from, Weight tree_weight, detail::Dsu dsu, int merged) {
    if (tree_weight >= best) return;
    if (merged == c - 1) {
      Weight w = balance_flow(tree_weight, nullptr);
      if (w < best) {
        best = w;
        balance_flow(tree_weight, &best_arcs);
      }
      return;
    }
    for (std::size_t i = from; i < joining.size(); ++i) {
      const Arc& a = joining[i];
      int x = dsu.find(comp_of[a.from]), y = dsu.find(comp_of[a.to]);
      if (x == y) continue;
      detail::Dsu sub = dsu;
      sub.unite(x, y);
      tree.push_back(a);
      grow(i + 1, add_weight(tree_weight, inst.weights.at(a.from, a.to)), sub,
           merged + 1);
      tree.pop_back();
    }
  }
};

}  // namespace

std::optional<Extension> oracle_ee_flow(const EEInstance& inst) {
  validate(inst);
  if (inst.n() == 0) throw std::invalid_argument("oracle_ee_flow: empty graph");
  ComponentStructure comps = components(inst.graph);
  if (comps.c > 16)
    throw std::invalid_argument("oracle_ee_flow: more than 16 components");
  FlowSearch fs(inst);
  fs.c = comps.c;
  fs.comp_of = comps.component_of;
  fs.balance = balance_profile(inst.graph).balance;
  fs.shortest_paths();
  for (Vertex u = 0; u < fs.n; ++u)
    for (Vertex v = 0; v < fs.n; ++v)
      if (u != v && fs.comp_of[u] != fs.comp_of[v] &&
          !is_inf(inst.weights.at(u, v)))
        fs.joining.push_back({u, v});
  fs.grow(0, 0, detail::Dsu(fs.c), 0);
  if (is_inf(fs.best) || fs.best > inst.omega_max) return std::nullopt;
  return make_extension(inst, std::move(fs.best_arcs));
}

}  // namespace eulerext
