#include "eulerext/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "dsu.hpp"

namespace eulerext {

ArcMultiset sorted_arcs(ArcMultiset arcs) {
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

DirectedMultigraph::DirectedMultigraph(int n, ArcMultiset arcs) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (const Arc& a : arcs) check(a);
  arcs_ = sorted_arcs(std::move(arcs));
}

void DirectedMultigraph::check(Arc a) const {
  if (a.from < 0 || a.from >= n_ || a.to < 0 || a.to >= n_)
    throw std::invalid_argument("arc endpoint out of range: (" +
                                std::to_string(a.from) + "," +
                                std::to_string(a.to) + ")");
  if (a.from == a.to)
    throw std::invalid_argument("self-loop at vertex " +
                                std::to_string(a.from));
}

void DirectedMultigraph::add_arc(Arc a) {
  check(a);
  arcs_.insert(std::upper_bound(arcs_.begin(), arcs_.end(), a), a);
}

void DirectedMultigraph::add_arcs(std::span<const Arc> extra) {
  for (const Arc& a : extra) check(a);
  arcs_.insert(arcs_.end(), extra.begin(), extra.end());
  std::sort(arcs_.begin(), arcs_.end());
}

bool DirectedMultigraph::remove_arc(Arc a) {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), a);
  if (it == arcs_.end() || *it != a) return false;
  arcs_.erase(it);
  return true;
}

DirectedMultigraph DirectedMultigraph::plus(std::span<const Arc> extra) const {
  DirectedMultigraph g = *this;
  g.add_arcs(extra);
  return g;
}

std::vector<std::vector<Vertex>> ComponentStructure::members() const {
  std::vector<std::vector<Vertex>> out(c);
  for (Vertex v = 0; v < static_cast<int>(component_of.size()); ++v)
    out[component_of[v]].push_back(v);
  return out;
}

ArcMultiset Trail::arcs() const {
  ArcMultiset out;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
    out.push_back({vertices[i], vertices[i + 1]});
  return out;
}

BalanceProfile balance_profile(const DirectedMultigraph& g) {
  BalanceProfile p;
  p.balance.assign(g.vertex_count(), 0);
  for (const Arc& a : g.arcs()) {
    --p.balance[a.from];
    ++p.balance[a.to];
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (p.balance[v] > 0) {
      p.i_plus.push_back(v);
      p.b += p.balance[v];
    } else if (p.balance[v] < 0) {
      p.i_minus.push_back(v);
    }
  }
  return p;
}

ComponentStructure components(int n, std::span<const Arc> arcs) {
  detail::Dsu dsu(n);
  for (const Arc& a : arcs) dsu.unite(a.from, a.to);
  ComponentStructure cs;
  cs.component_of.assign(n, -1);
  std::vector<int> id_of_root(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    int r = dsu.find(v);
    if (id_of_root[r] < 0) id_of_root[r] = cs.c++;
    cs.component_of[v] = id_of_root[r];
  }
  return cs;
}

ComponentStructure components(const DirectedMultigraph& g) {
  return components(g.vertex_count(), g.arcs());
}

bool is_connected(const DirectedMultigraph& g) {
  return components(g).c <= 1;
}

bool is_eulerian(const DirectedMultigraph& g) {
  if (g.vertex_count() == 0 || !is_connected(g)) return false;
  return balance_profile(g).b == 0;
}

std::vector<int> meta_trail(const ComponentStructure& comps, const Trail& t) {
  std::vector<int> out;
  for (Vertex v : t.vertices) {
    int c = comps.component_of.at(v);
    if (out.empty() || out.back() != c) out.push_back(c);
  }
  return out;
}

std::vector<int> meta_trail(const DirectedMultigraph& g, const Trail& t) {
  return meta_trail(components(g), t);
}

ShortcutResult shortcut(const ArcMultiset& e, const Trail& t, const Trail& s) {
  if (s.length() < 1) throw std::invalid_argument("shortcut: empty subtrail");
  if (s.closed())
    throw std::invalid_argument("shortcut: closed subtrail yields a self-loop");
  const auto& tv = t.vertices;
  const auto& sv = s.vertices;
  auto it = std::search(tv.begin(), tv.end(), sv.begin(), sv.end());
  if (it == tv.end())
    throw std::invalid_argument("shortcut: s is not a subtrail of t");

  ArcMultiset rest = sorted_arcs(e);
  auto take = [&rest](Arc a) {
    auto pos = std::lower_bound(rest.begin(), rest.end(), a);
    if (pos == rest.end() || *pos != a)
      throw std::invalid_argument("shortcut: trail arc missing from e");
    rest.erase(pos);
  };
  for (const Arc& a : t.arcs()) take(a);

  ShortcutResult r;
  std::size_t i = static_cast<std::size_t>(it - tv.begin());
  r.trail.vertices.assign(tv.begin(), tv.begin() + i + 1);
  r.trail.vertices.insert(r.trail.vertices.end(), tv.begin() + i + sv.size() - 1,
                          tv.end());
  ArcMultiset tp = r.trail.arcs();
  rest.insert(rest.end(), tp.begin(), tp.end());
  r.arcs = sorted_arcs(std::move(rest));
  return r;
}

namespace {

// Remaining arcs keyed by tail, heads kept sorted so the smallest is taken.
class ArcPool {
 public:
  ArcPool(int n, const ArcMultiset& e) : out_(n) {
    for (const Arc& a : e) out_[a.from].insert(a.to);
  }
  bool has_out(Vertex v) const { return !out_[v].empty(); }
  Vertex pop_out(Vertex v) {
    auto it = out_[v].begin();
    Vertex w = *it;
    out_[v].erase(it);
    return w;
  }
  Vertex first_with_arcs() const {
    for (Vertex v = 0; v < static_cast<int>(out_.size()); ++v)
      if (has_out(v)) return v;
    return -1;
  }

 private:
  std::vector<std::multiset<Vertex>> out_;
};

}  // namespace

std::vector<Trail> decompose_extension(const DirectedMultigraph& g,
                                       const ArcMultiset& e) {
  if (!is_eulerian(g.plus(e)))
    throw std::invalid_argument("decompose_extension: g + e is not Eulerian");
  const int n = g.vertex_count();
  BalanceProfile bp = balance_profile(g);
  std::vector<int> surplus(n), deficit(n);
  for (Vertex v = 0; v < n; ++v) {
    surplus[v] = std::max(0, bp.balance[v]);
    deficit[v] = std::max(0, -bp.balance[v]);
  }
  ArcPool pool(n, e);
  std::vector<Trail> paths, cycles;
  std::vector<int> pos(n, -1);

  // Advances the walk by one arc, splitting off a cycle on revisits.
  auto step = [&](std::vector<Vertex>& walk) {
    Vertex y = pool.pop_out(walk.back());
    if (pos[y] >= 0) {
      Trail c;
      c.vertices.assign(walk.begin() + pos[y], walk.end());
      c.vertices.push_back(y);
      for (std::size_t i = pos[y] + 1; i < walk.size(); ++i) pos[walk[i]] = -1;
      walk.resize(pos[y] + 1);
      cycles.push_back(std::move(c));
    } else {
      pos[y] = static_cast<int>(walk.size());
      walk.push_back(y);
    }
  };
  auto clear = [&](const std::vector<Vertex>& walk) {
    for (Vertex v : walk) pos[v] = -1;
  };

  for (Vertex v = 0; v < n; ++v) {
    while (surplus[v] > 0) {
      std::vector<Vertex> walk{v};
      pos[v] = 0;
      while (true) {
        step(walk);
        Vertex x = walk.back();
        if (walk.size() > 1 && deficit[x] > 0) {
          --deficit[x];
          break;
        }
      }
      --surplus[v];
      clear(walk);
      paths.push_back(Trail{walk});
    }
  }
  for (Vertex v = pool.first_with_arcs(); v >= 0; v = pool.first_with_arcs()) {
    std::vector<Vertex> walk{v};
    pos[v] = 0;
    while (pool.has_out(walk.back())) step(walk);
    clear(walk);
  }
  paths.insert(paths.end(), cycles.begin(), cycles.end());
  return paths;
}

}  // namespace eulerext
