#include "eulerext/cbm.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "dsu.hpp"

namespace eulerext {

void validate(const CBMInstance& inst) {
  if (inst.left_count < 0 || inst.right_count < 0)
    throw std::invalid_argument("negative side size");
  if (static_cast<int>(inst.cell_of.size()) != inst.vertex_count())
    throw std::invalid_argument("cell assignment size differs from vertex count");
  for (int c : inst.cell_of)
    if (c < 0 || c >= inst.cell_count)
      throw std::invalid_argument("cell id out of range");
  for (std::size_t k = 0; k < inst.edges.size(); ++k) {
    const CbmEdge& e = inst.edges[k];
    if (e.left < 0 || e.left >= inst.left_count || e.right < 0 ||
        e.right >= inst.right_count)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.weight < 0) throw std::invalid_argument("negative edge weight");
    if (k > 0 && inst.edges[k - 1].left == e.left &&
        inst.edges[k - 1].right == e.right)
      throw std::invalid_argument("duplicate edge");
  }
  for (const Join& j : inst.joins)
    if (j.first < 0 || j.second >= inst.cell_count || j.first >= j.second)
      throw std::invalid_argument("join must name two distinct valid cells");
}

void normalize(CBMInstance& inst) {
  std::sort(inst.edges.begin(), inst.edges.end());
  for (Join& j : inst.joins)
    if (j.first > j.second) std::swap(j.first, j.second);
  std::sort(inst.joins.begin(), inst.joins.end());
  inst.joins.erase(std::unique(inst.joins.begin(), inst.joins.end()),
                   inst.joins.end());
  validate(inst);
}

CBMInstance canonical_no_cbm() {
  CBMInstance no;
  no.left_count = 1;
  no.right_count = 1;
  no.cell_of = {0, 0};
  no.cell_count = 1;
  no.omega_max = 0;
  return no;
}

bool is_canonical_no(const CBMInstance& inst) {
  return inst == canonical_no_cbm();
}

Weight matching_weight(const Matching& m) {
  Weight w = 0;
  for (const CbmEdge& e : m) w = add_weight(w, e.weight);
  return w;
}

bool satisfies(const CBMInstance& inst, const CbmEdge& e, const Join& j) {
  int a = inst.cell_of_left(e.left), b = inst.cell_of_right(e.right);
  return (a == j.first && b == j.second) || (a == j.second && b == j.first);
}

bool is_perfect(const CBMInstance& inst, const Matching& m) {
  if (inst.left_count != inst.right_count ||
      static_cast<int>(m.size()) != inst.left_count)
    return false;
  std::vector<char> l(inst.left_count, 0), r(inst.right_count, 0);
  for (const CbmEdge& e : m) {
    if (e.left < 0 || e.left >= inst.left_count || e.right < 0 ||
        e.right >= inst.right_count || l[e.left] || r[e.right])
      return false;
    l[e.left] = r[e.right] = 1;
    auto it = std::lower_bound(inst.edges.begin(), inst.edges.end(),
                               CbmEdge{e.left, e.right, -1});
    if (it == inst.edges.end() || it->left != e.left || it->right != e.right ||
        it->weight != e.weight)
      return false;
  }
  return true;
}

bool is_conjoining(const CBMInstance& inst, const Matching& m) {
  for (const Join& j : inst.joins) {
    bool ok = std::any_of(m.begin(), m.end(),
                          [&](const CbmEdge& e) { return satisfies(inst, e, j); });
    if (!ok) return false;
  }
  return true;
}

bool verify_matching(const CBMInstance& inst, const Matching& m) {
  if (!is_perfect(inst, m) || !is_conjoining(inst, m)) return false;
  for (const CbmEdge& e : m)
    if (is_inf(e.weight)) return false;
  return matching_weight(m) <= inst.omega_max;
}

std::vector<std::vector<int>> cbm_components(const CBMInstance& inst) {
  detail::Dsu dsu(inst.vertex_count());
  for (const CbmEdge& e : inst.edges) dsu.unite(e.left, inst.right_id(e.right));
  std::map<int, std::vector<int>> by_root;
  for (int v = 0; v < inst.vertex_count(); ++v) by_root[dsu.find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Matching> min_weight_perfect_matching(const CBMInstance& inst) {
  return min_weight_perfect_matching(inst.left_count, inst.right_count,
                                     inst.edges);
}

// --- reduction rules -------------------------------------------------------

namespace {

void make_infeasible(CbmReduction& r) {
  r.instance = canonical_no_cbm();
  r.left_origin = {-1};
  r.right_origin = {-1};
  r.infeasible = true;
}

// Commits e; drops the joins it satisfies and charges the budget.
void fix_edge(CbmReduction& r, const CbmEdge& e) {
  CBMInstance& in = r.instance;
  r.fixed.push_back({r.left_origin[e.left], r.right_origin[e.right], e.weight});
  r.fixed_weight = add_weight(r.fixed_weight, e.weight);
  std::erase_if(in.joins, [&](const Join& j) { return satisfies(in, e, j); });
  if (!is_inf(in.omega_max)) in.omega_max -= e.weight;
}

void remove_vertices(CbmReduction& r, const std::vector<char>& gone) {
  CBMInstance& in = r.instance;
  std::vector<int> new_left(in.left_count, -1), new_right(in.right_count, -1);
  CBMInstance out;
  out.cell_count = in.cell_count;
  out.joins = in.joins;
  out.omega_max = in.omega_max;
  std::vector<int> lo, ro, right_cells;
  for (int i = 0; i < in.left_count; ++i)
    if (!gone[i]) {
      new_left[i] = out.left_count++;
      lo.push_back(r.left_origin[i]);
      out.cell_of.push_back(in.cell_of_left(i));
    }
  for (int j = 0; j < in.right_count; ++j)
    if (!gone[in.right_id(j)]) {
      new_right[j] = out.right_count++;
      ro.push_back(r.right_origin[j]);
      right_cells.push_back(in.cell_of_right(j));
    }
  out.cell_of.insert(out.cell_of.end(), right_cells.begin(), right_cells.end());
  for (const CbmEdge& e : in.edges)
    if (new_left[e.left] >= 0 && new_right[e.right] >= 0)
      out.edges.push_back({new_left[e.left], new_right[e.right], e.weight});
  r.instance = std::move(out);
  r.left_origin = std::move(lo);
  r.right_origin = std::move(ro);
}

void check_budget(CbmReduction& r) {
  if (!r.infeasible && r.instance.omega_max < 0) make_infeasible(r);
}

std::vector<int> degrees(const CBMInstance& in) {
  std::vector<int> deg(in.vertex_count(), 0);
  for (const CbmEdge& e : in.edges) {
    ++deg[e.left];
    ++deg[in.right_id(e.right)];
  }
  return deg;
}

}  // namespace

CbmReduction start_reduction(const CBMInstance& inst) {
  validate(inst);
  CbmReduction r;
  r.instance = inst;
  std::erase_if(r.instance.edges, [](const CbmEdge& e) { return is_inf(e.weight); });
  for (int i = 0; i < inst.left_count; ++i) r.left_origin.push_back(i);
  for (int j = 0; j < inst.right_count; ++j) r.right_origin.push_back(j);
  check_budget(r);
  return r;
}

void apply_rr_degree_one(CbmReduction& r) {
  while (!r.infeasible) {
    CBMInstance& in = r.instance;
    std::vector<int> deg = degrees(in);
    if (std::find(deg.begin(), deg.end(), 0) != deg.end()) {
      make_infeasible(r);
      return;
    }
    auto it = std::find(deg.begin(), deg.end(), 1);
    if (it == deg.end()) return;
    int v = static_cast<int>(it - deg.begin());
    CbmEdge e = *std::find_if(in.edges.begin(), in.edges.end(), [&](const CbmEdge& x) {
      return x.left == v || in.right_id(x.right) == v;
    });
    fix_edge(r, e);
    std::vector<char> gone(in.vertex_count(), 0);
    gone[e.left] = gone[in.right_id(e.right)] = 1;
    remove_vertices(r, gone);
    check_budget(r);
  }
}

void apply_rr_component_in_cell(CbmReduction& r) {
  if (r.infeasible) return;
  CBMInstance& in = r.instance;
  std::vector<char> gone(in.vertex_count(), 0);
  for (const auto& comp : cbm_components(in)) {
    int cell = in.cell_of[comp.front()];
    bool inside = std::all_of(comp.begin(), comp.end(),
                              [&](int v) { return in.cell_of[v] == cell; });
    if (!inside) continue;
    std::vector<int> local(in.vertex_count(), -1);
    int nl = 0, nr = 0;
    std::vector<int> lefts, rights;
    for (int v : comp) {
      if (v < in.left_count) {
        local[v] = nl++;
        lefts.push_back(v);
      } else {
        local[v] = nr++;
        rights.push_back(v - in.left_count);
      }
    }
    std::vector<CbmEdge> sub;
    for (const CbmEdge& e : in.edges)
      if (local[e.left] >= 0)
        sub.push_back({local[e.left], local[in.right_id(e.right)], e.weight});
    auto m = min_weight_perfect_matching(nl, nr, sub);
    if (!m) {
      make_infeasible(r);
      return;
    }
    for (const CbmEdge& e : *m) fix_edge(r, {lefts[e.left], rights[e.right], e.weight});
    for (int v : comp) gone[v] = 1;
  }
  remove_vertices(r, gone);
  check_budget(r);
}

std::pair<std::vector<Join>, std::vector<Join>> Signature::key() const {
  return std::minmax(sigma1, sigma2);
}

Signature signature_of(const CBMInstance& inst, const std::vector<int>& component) {
  std::vector<std::vector<std::pair<int, int>>> adj(inst.vertex_count());
  for (int k = 0; k < static_cast<int>(inst.edges.size()); ++k) {
    const CbmEdge& e = inst.edges[k];
    adj[e.left].push_back({inst.right_id(e.right), k});
    adj[inst.right_id(e.right)].push_back({e.left, k});
  }
  for (int v : component)
    if (adj[v].size() != 2)
      throw std::invalid_argument("signature_of: component is not a cycle");
  std::vector<int> order;
  int start = component.front(), prev_edge = -1, cur = start;
  do {
    auto [next, k] = adj[cur][0].second != prev_edge ? adj[cur][0] : adj[cur][1];
    order.push_back(k);
    prev_edge = k;
    cur = next;
  } while (cur != start && order.size() <= component.size());
  if (order.size() != component.size())
    throw std::invalid_argument("signature_of: component is not a cycle");

  Matching a, b;
  for (std::size_t t = 0; t < order.size(); ++t)
    (t % 2 == 0 ? a : b).push_back(inst.edges[order[t]]);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  Weight wa = matching_weight(a), wb = matching_weight(b);
  bool a_first = wa < wb || (wa == wb && a.front() < b.front());
  Signature s;
  s.m1 = a_first ? a : b;
  s.m2 = a_first ? b : a;
  s.delta = matching_weight(s.m2) - matching_weight(s.m1);
  for (const Join& j : inst.joins) {
    auto hit = [&](const Matching& m) {
      return std::any_of(m.begin(), m.end(),
                         [&](const CbmEdge& e) { return satisfies(inst, e, j); });
    };
    if (hit(s.m1)) s.sigma1.push_back(j);
    if (hit(s.m2)) s.sigma2.push_back(j);
  }
  return s;
}

void apply_rr_signature(CbmReduction& r) {
  while (!r.infeasible) {
    CBMInstance& in = r.instance;
    auto comps = cbm_components(in);
    std::vector<Signature> sig;
    for (const auto& c : comps) sig.push_back(signature_of(in, c));
    std::vector<int> group;
    for (std::size_t a = 0; a < comps.size() && group.size() < 2; ++a) {
      group = {static_cast<int>(a)};
      for (std::size_t b = a + 1; b < comps.size(); ++b)
        if (sig[b].key() == sig[a].key()) group.push_back(static_cast<int>(b));
    }
    if (group.size() < 2) return;

    const Signature& first = sig[group.front()];
    std::vector<Join> both = first.sigma1;
    both.insert(both.end(), first.sigma2.begin(), first.sigma2.end());
    bool conjoining = std::all_of(both.begin(), both.end(), [&](const Join& j) {
      return std::any_of(group.begin(), group.end(), [&](int d) {
        return std::any_of(sig[d].m1.begin(), sig[d].m1.end(),
                           [&](const CbmEdge& e) { return satisfies(in, e, j); });
      });
    });
    int keep = -1;
    if (!conjoining) {
      keep = group.front();
      for (int d : group)
        if (sig[d].delta < sig[keep].delta) keep = d;
    }
    std::vector<char> gone(in.vertex_count(), 0);
    for (int d : group) {
      if (d == keep) continue;
      for (const CbmEdge& e : sig[d].m1) fix_edge(r, e);
      for (int v : comps[d]) gone[v] = 1;
    }
    remove_vertices(r, gone);
    check_budget(r);
  }
}

CBMInstance rr_degree_one(const CBMInstance& inst) {
  CbmReduction r = start_reduction(inst);
  apply_rr_degree_one(r);
  return r.instance;
}

CBMInstance rr_component_in_cell(const CBMInstance& inst) {
  CbmReduction r = start_reduction(inst);
  apply_rr_component_in_cell(r);
  return r.instance;
}

CBMInstance rr_signature(const CBMInstance& inst) {
  CbmReduction r = start_reduction(inst);
  apply_rr_signature(r);
  return r.instance;
}

// --- solvers ---------------------------------------------------------------

namespace {

std::optional<Matching> within_budget(const CBMInstance& inst, Matching m) {
  std::sort(m.begin(), m.end());
  if (matching_weight(m) > inst.omega_max) return std::nullopt;
  return m;
}

}  // namespace

std::optional<Matching> solve_cbm_degree2(const CBMInstance& inst) {
  validate(inst);
  {
    std::vector<int> deg(inst.left_count, 0);
    for (const CbmEdge& e : inst.edges)
      if (!is_inf(e.weight) && ++deg[e.left] > 2)
        throw std::invalid_argument("solve_cbm_degree2: left vertex " +
                                    std::to_string(e.left) + " has degree > 2");
  }
  CBMInstance open = inst;
  open.omega_max = kInf;
  CbmReduction r = start_reduction(open);
  apply_rr_degree_one(r);
  if (r.infeasible) return std::nullopt;
  // Left degrees are at most two, so a perfect matching forces every
  // remaining vertex to degree exactly two (Hall); the rest are cycles.
  for (int d : degrees(r.instance))
    if (d != 2) return std::nullopt;
  apply_rr_component_in_cell(r);
  if (r.infeasible) return std::nullopt;
  apply_rr_signature(r);
  if (r.infeasible) return std::nullopt;

  const CBMInstance& in = r.instance;
  auto comps = cbm_components(in);
  std::vector<Signature> sig;
  for (const auto& c : comps) sig.push_back(signature_of(in, c));
  const int k = static_cast<int>(comps.size());
  auto in_sigma = [&](int d, int x, const Join& j) {
    const auto& s = x == 0 ? sig[d].sigma1 : sig[d].sigma2;
    return std::binary_search(s.begin(), s.end(), j);
  };
  std::vector<int> choice(k, -1), best_choice;
  Weight best = kInf + 1;
  std::function<void()> search = [&]() {
    const Join* open_join = nullptr;
    for (const Join& j : in.joins) {
      bool sat = false;
      for (int d = 0; d < k && !sat; ++d)
        sat = choice[d] >= 0 && in_sigma(d, choice[d], j);
      if (!sat) {
        open_join = &j;
        break;
      }
    }
    if (!open_join) {
      Weight w = 0;
      for (int d = 0; d < k; ++d)
        w = add_weight(w, matching_weight(choice[d] == 1 ? sig[d].m2 : sig[d].m1));
      if (w < best) {
        best = w;
        best_choice = choice;
      }
      return;
    }
    for (int d = 0; d < k; ++d) {
      if (choice[d] >= 0) continue;
      for (int x = 0; x < 2; ++x) {
        if (!in_sigma(d, x, *open_join)) continue;
        choice[d] = x;
        search();
        choice[d] = -1;
      }
    }
  };
  search();
  if (best > kInf) return std::nullopt;
  Matching m = r.fixed;
  for (int d = 0; d < k; ++d)
    for (const CbmEdge& e : best_choice[d] == 1 ? sig[d].m2 : sig[d].m1)
      m.push_back({r.left_origin[e.left], r.right_origin[e.right], e.weight});
  return within_budget(inst, std::move(m));
}

std::optional<Matching> solve_cbm_general(const CBMInstance& inst) {
  validate(inst);
  if (inst.left_count != inst.right_count) return std::nullopt;
  std::vector<CbmEdge> edges;
  for (const CbmEdge& e : inst.edges)
    if (!is_inf(e.weight)) edges.push_back(e);
  std::vector<std::vector<int>> by_join(inst.joins.size());
  for (std::size_t j = 0; j < inst.joins.size(); ++j)
    for (int k = 0; k < static_cast<int>(edges.size()); ++k)
      if (satisfies(inst, edges[k], inst.joins[j])) by_join[j].push_back(k);

  std::vector<char> used_l(inst.left_count, 0), used_r(inst.right_count, 0);
  std::vector<int> chosen;
  Weight chosen_weight = 0, best = kInf + 1;
  Matching best_m;

  auto complete = [&]() {
    std::vector<int> ml(inst.left_count, -1), mr(inst.right_count, -1);
    std::vector<int> lefts, rights;
    for (int i = 0; i < inst.left_count; ++i)
      if (!used_l[i]) {
        ml[i] = static_cast<int>(lefts.size());
        lefts.push_back(i);
      }
    for (int j = 0; j < inst.right_count; ++j)
      if (!used_r[j]) {
        mr[j] = static_cast<int>(rights.size());
        rights.push_back(j);
      }
    std::vector<CbmEdge> sub;
    for (const CbmEdge& e : edges)
      if (ml[e.left] >= 0 && mr[e.right] >= 0)
        sub.push_back({ml[e.left], mr[e.right], e.weight});
    auto m = min_weight_perfect_matching(static_cast<int>(lefts.size()),
                                         static_cast<int>(rights.size()), sub);
    if (!m) return;
    Weight total = add_weight(chosen_weight, matching_weight(*m));
    if (total >= best) return;
    best = total;
    best_m.clear();
    for (int k : chosen) best_m.push_back(edges[k]);
    for (const CbmEdge& e : *m) best_m.push_back({lefts[e.left], rights[e.right], e.weight});
  };

  std::function<void(std::size_t)> guess = [&](std::size_t j) {
    if (chosen_weight >= best) return;
    if (j == inst.joins.size()) {
      complete();
      return;
    }
    bool already = std::any_of(chosen.begin(), chosen.end(), [&](int k) {
      return satisfies(inst, edges[k], inst.joins[j]);
    });
    if (already) {
      guess(j + 1);
      return;
    }
    for (int k : by_join[j]) {
      const CbmEdge& e = edges[k];
      if (used_l[e.left] || used_r[e.right]) continue;
      used_l[e.left] = used_r[e.right] = 1;
      chosen.push_back(k);
      chosen_weight += e.weight;
      guess(j + 1);
      chosen_weight -= e.weight;
      chosen.pop_back();
      used_l[e.left] = used_r[e.right] = 0;
    }
  };
  guess(0);
  if (best > kInf) return std::nullopt;
  return within_budget(inst, std::move(best_m));
}

std::optional<Matching> oracle_cbm(const CBMInstance& inst) {
  validate(inst);
  if (inst.vertex_count() > 16)
    throw std::invalid_argument("oracle_cbm: more than 16 vertices");
  if (inst.left_count != inst.right_count) return std::nullopt;
  std::vector<std::vector<CbmEdge>> adj(inst.left_count);
  for (const CbmEdge& e : inst.edges)
    if (!is_inf(e.weight)) adj[e.left].push_back(e);
  std::vector<char> used(inst.right_count, 0);
  Matching cur, best_m;
  Weight best = kInf + 1;
  std::function<void(int)> rec = [&](int i) {
    if (i == inst.left_count) {
      Weight w = matching_weight(cur);
      if (w < best && is_conjoining(inst, cur)) {
        best = w;
        best_m = cur;
      }
      return;
    }
    for (const CbmEdge& e : adj[i]) {
      if (used[e.right]) continue;
      used[e.right] = 1;
      cur.push_back(e);
      rec(i + 1);
      cur.pop_back();
      used[e.right] = 0;
    }
  };
  rec(0);
  if (best > kInf) return std::nullopt;
  return within_budget(inst, std::move(best_m));
}

// --- legalization ----------------------------------------------------------

bool is_legal(const CBMInstance& inst) {
  std::vector<int> balance(inst.cell_count, 0), size(inst.cell_count, 0);
  for (int v = 0; v < inst.vertex_count(); ++v) {
    balance[inst.cell_of[v]] += v < inst.left_count ? 1 : -1;
    ++size[inst.cell_of[v]];
  }
  for (int c = 0; c < inst.cell_count; ++c)
    if (balance[c] != 0 || size[c] == 0) return false;
  detail::Dsu dsu(inst.cell_count);
  for (const Join& j : inst.joins) dsu.unite(j.first, j.second);
  return dsu.sets() <= 1;
}

CBMInstance legalize(const CBMInstance& input) {
  CBMInstance inst = input;
  normalize(inst);
  if (inst.left_count != inst.right_count) return canonical_no_cbm();

  std::vector<int> size(inst.cell_count, 0);
  for (int c : inst.cell_of) ++size[c];
  for (const Join& j : inst.joins)
    if (size[j.first] == 0 || size[j.second] == 0) return canonical_no_cbm();
  std::vector<int> renum(inst.cell_count, -1);
  int cells = 0;
  for (int c = 0; c < inst.cell_count; ++c)
    if (size[c] > 0) renum[c] = cells++;

  std::vector<int> left_cell, right_cell;
  for (int i = 0; i < inst.left_count; ++i) left_cell.push_back(renum[inst.cell_of_left(i)]);
  for (int j = 0; j < inst.right_count; ++j) right_cell.push_back(renum[inst.cell_of_right(j)]);
  std::vector<CbmEdge> edges = inst.edges;
  std::vector<Join> joins;
  for (const Join& j : inst.joins) joins.push_back({renum[j.first], renum[j.second]});

  // Forced pair: a new left vertex in cell a matched to a new right one in b.
  auto pendant = [&](int a, int b) {
    edges.push_back({static_cast<int>(left_cell.size()),
                     static_cast<int>(right_cell.size()), 0});
    left_cell.push_back(a);
    right_cell.push_back(b);
  };

  std::vector<int> surplus(cells, 0);
  for (int c : left_cell) ++surplus[c];
  for (int c : right_cell) --surplus[c];
  int hub = -1;
  for (int c = 0; c < cells; ++c) {
    if (surplus[c] == 0) continue;
    if (hub < 0) hub = cells;
    for (int t = 0; t < surplus[c]; ++t) pendant(hub, c);
    for (int t = 0; t < -surplus[c]; ++t) pendant(c, hub);
    // Always satisfied by the forced pendant edges.
    joins.push_back({c, hub});
  }
  int total_cells = cells + (hub >= 0 ? 1 : 0);

  detail::Dsu dsu(total_cells);
  for (const Join& j : joins) dsu.unite(j.first, j.second);
  if (dsu.sets() > 1) {
    if (hub < 0) hub = total_cells++;
    std::vector<char> linked(total_cells, 0);
    detail::Dsu reach(total_cells);
    for (const Join& j : joins) reach.unite(j.first, j.second);
    for (int c = 0; c < total_cells; ++c) {
      if (c == hub || reach.find(c) == reach.find(hub)) continue;
      // Two forced crossing pairs keep both cells balanced.
      pendant(hub, c);
      pendant(c, hub);
      joins.push_back({c, hub});
      reach.unite(c, hub);
    }
  }

  CBMInstance out;
  out.left_count = static_cast<int>(left_cell.size());
  out.right_count = static_cast<int>(right_cell.size());
  out.cell_of = left_cell;
  out.cell_of.insert(out.cell_of.end(), right_cell.begin(), right_cell.end());
  out.cell_count = total_cells;
  out.edges = std::move(edges);
  out.joins = std::move(joins);
  out.omega_max = inst.omega_max;
  normalize(out);
  return out;
}

}  // namespace eulerext
