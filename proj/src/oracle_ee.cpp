#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "dsu.hpp"
#include "eulerext/ee_solver.hpp"

namespace eulerext {

namespace {

// State bytes: clipped balances (offset by the clip bound), then the block
// label of every original component, relabelled canonically.
struct OracleSpace {
  int n = 0;
  int c = 0;
  int clip = 0;
  std::vector<int> comp_of;
  std::vector<Weight> min_out, min_in;
  Weight min_arc = kInf;

  bool goal(const std::string& s) const {
    for (int v = 0; v < n; ++v)
      if (s[v] != clip) return false;
    for (int k = 0; k < c; ++k)
      if (s[n + k] != 0) return false;
    return true;
  }

  Weight heuristic(const std::string& s) const {
    Weight need_out = 0, need_in = 0;
    for (int v = 0; v < n; ++v) {
      int bal = s[v] - clip;
      if (bal > 0) need_out = add_weight(need_out, bal * min_out[v]);
      if (bal < 0) need_in = add_weight(need_in, -bal * min_in[v]);
      if (bal > 0 && is_inf(min_out[v])) return kInf;
      if (bal < 0 && is_inf(min_in[v])) return kInf;
    }
    int blocks = 0;
    for (int k = 0; k < c; ++k) blocks = std::max(blocks, s[n + k] + 1);
    Weight link = blocks > 1 ? add_weight(0, (blocks - 1) * min_arc) : 0;
    if (blocks > 1 && is_inf(min_arc)) return kInf;
    return std::max({need_out, need_in, link});
  }

  // Adds arc (u, v); false when a balance leaves the clip range.
  bool apply(std::string& s, Vertex u, Vertex v) const {
    int bu = s[u] - clip - 1, bv = s[v] - clip + 1;
    if (bu < -clip || bv > clip) return false;
    s[u] = static_cast<char>(bu + clip);
    s[v] = static_cast<char>(bv + clip);
    int a = s[n + comp_of[u]], b = s[n + comp_of[v]];
    if (a != b) {
      detail::Dsu dsu(c);
      for (int k = 0; k < c; ++k)
        for (int j = 0; j < k; ++j)
          if (s[n + j] == s[n + k]) {
            dsu.unite(j, k);
            break;
          }
      dsu.unite(comp_of[u], comp_of[v]);
      std::vector<int> label(c, -1);
      int next = 0;
      for (int k = 0; k < c; ++k) {
        int r = dsu.find(k);
        if (label[r] < 0) label[r] = next++;
        s[n + k] = static_cast<char>(label[r]);
      }
    }
    return true;
  }
};

struct Node {
  Weight g;
  int parent;
  Arc arc;
};

}  // namespace

std::optional<Extension> oracle_ee(const EEInstance& inst,
                                   OracleOptions options) {
  validate(inst);
  if (inst.n() == 0) throw std::invalid_argument("oracle_ee: empty graph");
  if (inst.n() > options.max_vertices)
    throw std::invalid_argument("oracle_ee: " + std::to_string(inst.n()) +
                                " vertices exceed the cap of " +
                                std::to_string(options.max_vertices));
  OracleSpace sp;
  sp.n = inst.n();
  ComponentStructure comps = components(inst.graph);
  sp.c = comps.c;
  sp.comp_of = comps.component_of;
  BalanceProfile bp = balance_profile(inst.graph);
  // No shortest arc order of an optimal extension moves a balance past
  // b + 1 in absolute value.
  sp.clip = bp.b + 2;
  if (2 * sp.clip + 1 > 127)
    throw std::invalid_argument("oracle_ee: balance range too large");
  sp.min_out.assign(sp.n, kInf);
  sp.min_in.assign(sp.n, kInf);
  std::vector<Arc> finite;
  for (Vertex u = 0; u < sp.n; ++u)
    for (Vertex v = 0; v < sp.n; ++v) {
      Weight w = inst.weights.at(u, v);
      if (u == v || is_inf(w)) continue;
      finite.push_back({u, v});
      sp.min_out[u] = std::min(sp.min_out[u], w);
      sp.min_in[v] = std::min(sp.min_in[v], w);
      sp.min_arc = std::min(sp.min_arc, w);
    }
  if (!options.use_heuristic) {
    std::fill(sp.min_out.begin(), sp.min_out.end(), 0);
    std::fill(sp.min_in.begin(), sp.min_in.end(), 0);
    sp.min_arc = 0;
  }

  std::string start(sp.n + sp.c, 0);
  for (Vertex v = 0; v < sp.n; ++v)
    start[v] = static_cast<char>(bp.balance[v] + sp.clip);
  for (int k = 0; k < sp.c; ++k) start[sp.n + k] = static_cast<char>(k);

  std::vector<Node> nodes;
  std::vector<std::string> keys;
  std::unordered_map<std::string, int> index;
  using Item = std::pair<Weight, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> open;

  auto push = [&](std::string key, Weight g, int parent, Arc arc) {
    Weight h = sp.heuristic(key);
    Weight f = add_weight(g, h);
    if (is_inf(f) || f > inst.omega_max) return;
    auto it = index.find(key);
    if (it != index.end()) {
      Node& old = nodes[it->second];
      if (old.g <= g) return;
      old = {g, parent, arc};
      open.push({f, it->second});
      return;
    }
    int id = static_cast<int>(nodes.size());
    nodes.push_back({g, parent, arc});
    keys.push_back(key);
    index.emplace(std::move(key), id);
    open.push({f, id});
  };

  push(start, 0, -1, {});
  while (!open.empty()) {
    auto [f, id] = open.top();
    open.pop();
    Weight g = nodes[id].g;
    if (f != add_weight(g, sp.heuristic(keys[id]))) continue;
    if (sp.goal(keys[id])) {
      ArcMultiset arcs;
      for (int x = id; nodes[x].parent >= 0; x = nodes[x].parent)
        arcs.push_back(nodes[x].arc);
      return make_extension(inst, std::move(arcs));
    }
    for (const Arc& a : finite) {
      std::string next = keys[id];
      if (!sp.apply(next, a.from, a.to)) continue;
      push(std::move(next), g + inst.weights.at(a.from, a.to), id, a);
    }
  }
  return std::nullopt;
}

}  // namespace eulerext
