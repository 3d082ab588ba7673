#include "eulerext/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace eulerext {

EEInstance random_ee(const EEGenParams& p) {
  if (p.c < 1 || p.c > p.n) throw std::invalid_argument("random_ee: bad c");
  std::mt19937_64 rng(p.seed);
  auto uniform = [&rng](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  while (true) {
    std::vector<std::vector<Vertex>> comp(p.c);
    for (Vertex v = 0; v < p.n; ++v)
      comp[v < p.c ? v : uniform(0, p.c - 1)].push_back(v);
    ArcMultiset arcs;
    for (const auto& members : comp) {
      int s = static_cast<int>(members.size());
      for (int i = 1; i < s; ++i) {
        Vertex a = members[i], b = members[uniform(0, i - 1)];
        arcs.push_back(uniform(0, 1) ? Arc{a, b} : Arc{b, a});
      }
      if (s < 2) continue;
      int extra = p.extra_arcs >= 0 ? p.extra_arcs : uniform(0, s);
      for (int k = 0; k < extra; ++k) {
        Vertex a = members[uniform(0, s - 1)], b = members[uniform(0, s - 1)];
        if (a != b) arcs.push_back({a, b});
      }
    }
    DirectedMultigraph g(p.n, std::move(arcs));
    if (balance_profile(g).b > p.max_b) continue;
    EEInstance inst{g, WeightMatrix(p.n), kInf};
    for (Vertex u = 0; u < p.n; ++u)
      for (Vertex v = 0; v < p.n; ++v) {
        if (u == v) continue;
        inst.weights.at(u, v) =
            uniform(1, 100) <= p.inf_percent ? kInf : uniform(0, p.max_weight);
      }
    return inst;
  }
}

CBMInstance random_cbm(const CbmGenParams& p) {
  if (p.n < 1 || p.cells < 1) throw std::invalid_argument("random_cbm: bad size");
  std::mt19937_64 rng(p.seed);
  auto uniform = [&rng](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  CBMInstance inst;
  inst.left_count = inst.right_count = p.n;
  std::set<std::pair<int, int>> pairs;
  std::vector<int> perm(p.n);
  for (int round = 0; round < 2; ++round) {
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 0; i < p.n; ++i)
      if (uniform(1, 100) > p.drop_percent) pairs.insert({i, perm[i]});
  }
  if (!p.degree2)
    for (int i = 0; i < p.n; ++i)
      for (int j = 0; j < p.n; ++j)
        if (uniform(1, 100) <= p.extra_percent) pairs.insert({i, j});
  for (auto [i, j] : pairs) inst.edges.push_back({i, j, uniform(0, p.max_weight)});
  inst.cell_count = p.cells;
  for (int v = 0; v < 2 * p.n; ++v) inst.cell_of.push_back(uniform(0, p.cells - 1));
  int max_joins = p.cells * (p.cells - 1) / 2;
  std::set<Join> joins;
  while (static_cast<int>(joins.size()) < std::min(p.joins, max_joins)) {
    int a = uniform(0, p.cells - 1), b = uniform(0, p.cells - 1);
    if (a != b) joins.insert(std::minmax(a, b));
  }
  inst.joins.assign(joins.begin(), joins.end());
  normalize(inst);
  return inst;
}

SSCInstance random_ssc(const SscGenParams& p) {
  std::mt19937_64 rng(p.seed);
  auto uniform = [&rng](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  SSCInstance inst{p.colors, {}};
  for (int i = 0; i < p.switches; ++i) {
    Switch s(uniform(1, std::max(1, p.max_positions)));
    for (Position& pos : s)
      for (int color = 0; color < p.colors; ++color)
        if (uniform(0, 99) < p.fill_percent) pos.push_back(color);
    inst.switches.push_back(std::move(s));
  }
  return inst;
}

std::vector<SSCInstance> random_ssc_batch(const SscGenParams& p, int m) {
  std::vector<SSCInstance> out;
  std::mt19937_64 rng(p.seed);
  for (int i = 0; i < m; ++i) {
    SscGenParams q = p;
    q.seed = rng();
    out.push_back(random_ssc(q));
  }
  return out;
}

Cnf random_3cnf(int variables, int clauses, std::uint64_t seed) {
  if (variables < 3) throw std::invalid_argument("random_3cnf: need 3 variables");
  std::mt19937_64 rng(seed);
  std::vector<int> vars(variables);
  std::iota(vars.begin(), vars.end(), 1);
  Cnf f{variables, {}};
  for (int j = 0; j < clauses; ++j) {
    std::shuffle(vars.begin(), vars.end(), rng);
    std::vector<int> clause;
    for (int t = 0; t < 3; ++t) clause.push_back(rng() % 2 ? vars[t] : -vars[t]);
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

}  // namespace eulerext
