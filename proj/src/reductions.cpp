#include "eulerext/reductions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace eulerext {

void validate(const EEAInstance& inst) {
  validate(inst.base);
  int c = components(inst.base.graph).c;
  for (const Hint& h : inst.advice.hints) {
    if (h.sequence.size() < 2) throw std::invalid_argument("hint shorter than one edge");
    for (std::size_t i = 0; i < h.sequence.size(); ++i) {
      if (h.sequence[i] < 0 || h.sequence[i] >= c)
        throw std::invalid_argument("hint names unknown component " +
                                    std::to_string(h.sequence[i]));
      if (i > 0 && h.sequence[i] == h.sequence[i - 1])
        throw std::invalid_argument("hint repeats a component consecutively");
    }
    if (h.kind == HintKind::cycle && !h.closed())
      throw std::invalid_argument("cycle hint is not closed");
  }
}

bool is_preprocessed(const EEInstance& inst) {
  for (int x : balance_profile(inst.graph).balance)
    if (x > 1 || x < -1) return false;
  return is_metric(inst.weights);
}

EEInstance canonical_no_ee() {
  return EEInstance{DirectedMultigraph(2), WeightMatrix(2), 0};
}

namespace {

// Realizations start in I+ and end in I- of the graph the advice refers
// to; several may share an endpoint. By minpath substitution an optimum
// is a choice of endpoints per hint, their minpaths, and an optimal
// extension of the graph plus those paths.
class EeaSearch {
 public:
  EeaSearch(const EEInstance& inst, const Advice& p)
      : inst_(inst), p_(p), comps_(components(inst.graph)),
        bp_(balance_profile(inst.graph)) {}

  std::optional<Extension> run() {
    ArcMultiset chosen;
    recurse(0, 0, chosen);
    return best_;
  }

 private:
  void recurse(std::size_t i, Weight acc, ArcMultiset& chosen) {
    if (acc >= best_weight_) return;
    if (i == p_.hints.size()) {
      EEInstance sub{inst_.graph.plus(chosen), inst_.weights, kInf};
      bool simple = is_connected(sub.graph) && is_preprocessed(sub);
      auto rest = simple ? solve_connected(sub) : solve_ee(sub);
      if (!rest) return;
      Weight total = add_weight(acc, rest->weight);
      if (total >= best_weight_) return;
      best_weight_ = total;
      ArcMultiset all = chosen;
      all.insert(all.end(), rest->arcs.begin(), rest->arcs.end());
      best_ = make_extension(inst_, std::move(all));
      return;
    }
    const std::vector<int>& fwd = p_.hints[i].sequence;
    const std::vector<int> rev(fwd.rbegin(), fwd.rend());
    for (Vertex u : bp_.i_plus)
      for (Vertex v : bp_.i_minus)
        for (const auto* seq : {&fwd, &rev}) {
          if (comps_.component_of[u] != seq->front() ||
              comps_.component_of[v] != seq->back())
            continue;
          auto r = minpath(inst_, comps_, *seq, u, v);
          if (!r) continue;
          ArcMultiset arcs = r->trail.arcs();
          std::size_t mark = chosen.size();
          chosen.insert(chosen.end(), arcs.begin(), arcs.end());
          recurse(i + 1, add_weight(acc, r->weight), chosen);
          chosen.resize(mark);
        }
  }

  const EEInstance& inst_;
  const Advice& p_;
  ComponentStructure comps_;
  BalanceProfile bp_;
  Weight best_weight_ = kInf + 1;
  std::optional<Extension> best_;
};

}  // namespace

std::optional<Extension> solve_eea(const EEAInstance& inst) {
  validate(inst);
  if (!is_preprocessed(inst.base))
    throw std::invalid_argument("solve_eea: base is not preprocessed");
  EEInstance work = inst.base;
  work.omega_max = kInf;
  auto elim = eliminate_cycle_hints(work, inst.advice);
  if (!elim) return std::nullopt;
  auto rest = EeaSearch(elim->instance, elim->advice).run();
  if (!rest) return std::nullopt;
  ArcMultiset arcs = elim->partial;
  arcs.insert(arcs.end(), rest->arcs.begin(), rest->arcs.end());
  Extension ext = make_extension(inst.base, std::move(arcs));
  if (ext.weight > inst.base.omega_max) return std::nullopt;
  return ext;
}

bool verify_eea(const EEAInstance& inst, const ArcMultiset& e) {
  return verify_extension(inst.base, e) && heeds_advice(inst.base, inst.advice, e);
}

// --- EE with cycle-free advice to CBM ---------------------------------------

std::pair<CBMInstance, EecaBackMap> eeca_to_cbm(const EEAInstance& inst) {
  validate(inst);
  if (!is_preprocessed(inst.base))
    throw std::invalid_argument("eeca_to_cbm: base is not preprocessed");
  for (const Hint& h : inst.advice.hints)
    if (h.kind == HintKind::cycle)
      throw std::invalid_argument("eeca_to_cbm: cycle hint in advice");

  const EEInstance& base = inst.base;
  ComponentStructure comps = components(base.graph);
  BalanceProfile bp = balance_profile(base.graph);

  CBMInstance out;
  EecaBackMap back;
  std::vector<int> left_cell, right_cell;
  std::vector<int> left_of(base.n(), -1), right_of(base.n(), -1);
  for (Vertex x : bp.i_plus) {
    left_of[x] = static_cast<int>(back.left_vertex.size());
    back.left_vertex.push_back(x);
    left_cell.push_back(comps.component_of[x]);
  }
  for (Vertex y : bp.i_minus) {
    right_of[y] = static_cast<int>(back.right_vertex.size());
    back.right_vertex.push_back(y);
    back.right_realization.push_back(-1);
    right_cell.push_back(comps.component_of[y]);
  }
  for (Vertex x : bp.i_plus)
    for (Vertex y : bp.i_minus) {
      Weight w = base.weights.at(x, y);
      if (!is_inf(w)) out.edges.push_back({left_of[x], right_of[y], w});
    }

  int cells = comps.c;
  for (int k = 0; k < static_cast<int>(inst.advice.hints.size()); ++k) {
    const std::vector<int>& fwd = inst.advice.hints[k].sequence;
    int o = fwd.front(), p = fwd.back();
    if (fwd.size() == 2) {
      out.joins.push_back(std::minmax(o, p));
      continue;
    }
    const std::vector<int> rev(fwd.rbegin(), fwd.rend());
    int gadget = cells++;
    for (Vertex x : bp.i_plus)
      for (Vertex y : bp.i_minus) {
        int cx = comps.component_of[x], cy = comps.component_of[y];
        std::optional<RealizedTrail> best;
        for (const auto* seq : {&fwd, &rev}) {
          if (cx != seq->front() || cy != seq->back()) continue;
          auto r = minpath(base, comps, *seq, x, y);
          if (r && (!best || r->weight < best->weight)) best = std::move(r);
        }
        if (!best) continue;
        int open = static_cast<int>(back.left_vertex.size());
        int closed = static_cast<int>(back.right_vertex.size());
        back.left_vertex.push_back(-1);
        left_cell.push_back(gadget);
        back.right_vertex.push_back(-1);
        back.right_realization.push_back(static_cast<int>(back.realizations.size()));
        right_cell.push_back(gadget);
        back.realizations.push_back({k, x, y, best->trail, best->weight});
        out.edges.push_back({open, right_of[y], 0});
        out.edges.push_back({left_of[x], closed, best->weight});
        out.edges.push_back({open, closed, 0});
      }
    out.joins.push_back(std::minmax(o, gadget));
    out.joins.push_back(std::minmax(p, gadget));
  }

  out.left_count = static_cast<int>(left_cell.size());
  out.right_count = static_cast<int>(right_cell.size());
  out.cell_of = left_cell;
  out.cell_of.insert(out.cell_of.end(), right_cell.begin(), right_cell.end());
  out.cell_count = cells;
  out.omega_max = base.omega_max;
  normalize(out);
  return {std::move(out), std::move(back)};
}

Extension matching_to_extension(const EEAInstance& source, const EecaBackMap& back,
                                const Matching& m) {
  int nl = static_cast<int>(back.left_vertex.size());
  int nr = static_cast<int>(back.right_vertex.size());
  std::vector<char> seen_l(nl, 0), seen_r(nr, 0);
  if (nl != nr || static_cast<int>(m.size()) != nl)
    throw std::invalid_argument("matching_to_extension: matching is not perfect");
  ArcMultiset arcs;
  for (const CbmEdge& e : m) {
    if (e.left < 0 || e.left >= nl || e.right < 0 || e.right >= nr ||
        seen_l[e.left] || seen_r[e.right])
      throw std::invalid_argument("matching_to_extension: matching is not perfect");
    seen_l[e.left] = seen_r[e.right] = 1;
    Vertex x = back.left_vertex[e.left], y = back.right_vertex[e.right];
    if (x >= 0 && y >= 0) {
      arcs.push_back({x, y});
    } else if (x >= 0 && back.right_realization[e.right] >= 0) {
      const auto& r = back.realizations[back.right_realization[e.right]];
      if (r.from != x)
        throw std::invalid_argument("matching_to_extension: edge not in image");
      ArcMultiset path = r.trail.arcs();
      arcs.insert(arcs.end(), path.begin(), path.end());
    }
  }
  return make_extension(source.base, std::move(arcs));
}

std::optional<Extension> solve_ee_via_cbm(const EEInstance& inst) {
  if (inst.n() == 0) throw std::invalid_argument("solve_ee_via_cbm: empty graph");
  auto [pre, map] = preprocess(inst);
  EEInstance work = pre;
  work.omega_max = kInf;
  int c = components(work.graph).c;
  std::vector<Advice> advices =
      c == 1 ? std::vector<Advice>{Advice{}} : enumerate_min_connecting_advices(c);
  std::optional<Extension> best;
  for (const Advice& a : advices) {
    auto elim = eliminate_cycle_hints(work, a);
    if (!elim) continue;
    EEAInstance sub{elim->instance, elim->advice};
    sub.base.omega_max = kInf;
    auto [cbm, back] = eeca_to_cbm(sub);
    auto m = solve_cbm_general(cbm);
    if (!m) continue;
    Extension rest = matching_to_extension(sub, back, *m);
    Weight total = add_weight(elim->weight, rest.weight);
    if (best && total >= best->weight) continue;
    ArcMultiset arcs = elim->partial;
    arcs.insert(arcs.end(), rest.arcs.begin(), rest.arcs.end());
    best = make_extension(work, std::move(arcs));
  }
  if (!best || best->weight > inst.omega_max) return std::nullopt;
  return make_extension(inst, map.lift(best->arcs));
}

// --- CBM to EE with advice ---------------------------------------------------

std::pair<EEAInstance, CbmBackMap> cbm_to_eea(const CBMInstance& input) {
  CBMInstance legal = legalize(input);
  CbmBackMap back{input.left_count, input.right_count, legal.left_count};
  const int n = legal.vertex_count();

  std::vector<std::vector<int>> lefts(legal.cell_count), rights(legal.cell_count);
  for (int i = 0; i < legal.left_count; ++i) lefts[legal.cell_of_left(i)].push_back(i);
  for (int j = 0; j < legal.right_count; ++j)
    rights[legal.cell_of_right(j)].push_back(legal.right_id(j));

  ArcMultiset arcs;
  for (int cell = 0; cell < legal.cell_count; ++cell) {
    const auto& l = lefts[cell];
    const auto& r = rights[cell];
    std::vector<Vertex> ring;
    for (std::size_t t = 0; t < l.size(); ++t) {
      arcs.push_back({l[t], r[t]});
      ring.push_back(l[t]);
      ring.push_back(r[t]);
    }
    for (std::size_t t = 0; t < ring.size(); ++t)
      arcs.push_back({ring[t], ring[(t + 1) % ring.size()]});
  }

  EEAInstance out;
  out.base.graph = DirectedMultigraph(n, std::move(arcs));
  out.base.weights = WeightMatrix(n);
  for (const CbmEdge& e : legal.edges)
    out.base.weights.at(legal.right_id(e.right), e.left) = e.weight;
  out.base.omega_max = legal.omega_max;

  ComponentStructure comps = components(out.base.graph);
  for (const Join& j : legal.joins)
    out.advice.hints.push_back(
        Hint{HintKind::path,
             {comps.component_of[lefts[j.first].front()],
              comps.component_of[lefts[j.second].front()]}});
  return {std::move(out), back};
}

Matching extension_to_matching(const CbmBackMap& back, const EEAInstance& image,
                               const ArcMultiset& e) {
  Matching m;
  for (const Arc& a : e) {
    int j = a.from - back.legal_left_count, i = a.to;
    if (j < 0 || i >= back.legal_left_count)
      throw std::invalid_argument("extension_to_matching: arc not right to left");
    if (i < back.left_count && j < back.right_count)
      m.push_back({i, j, image.base.weights.at(a.from, a.to)});
  }
  std::sort(m.begin(), m.end());
  return m;
}

ArcMultiset matching_to_arcs(const CbmBackMap& back, const EEAInstance& image,
                             const Matching& m) {
  ArcMultiset arcs;
  for (const CbmEdge& e : m) arcs.push_back({back.legal_left_count + e.right, e.left});
  // Padding vertices have exactly one usable arc each.
  const int n = image.base.n();
  for (Vertex i = back.left_count; i < back.legal_left_count; ++i)
    for (Vertex u = back.legal_left_count; u < n; ++u)
      if (!is_inf(image.base.weights.at(u, i))) {
        arcs.push_back({u, i});
        break;
      }
  return sorted_arcs(std::move(arcs));
}

// --- EE with cycle-free advice to EE ----------------------------------------

std::pair<EEInstance, EeaBackMap> eea_to_ee(const EEAInstance& inst) {
  validate(inst);
  for (const Hint& h : inst.advice.hints)
    if (h.kind == HintKind::cycle)
      throw std::invalid_argument("eea_to_ee: cycle hint in advice");

  const EEInstance& base = inst.base;
  const int n0 = base.n();
  ComponentStructure comps = components(base.graph);
  auto members = comps.members();
  BalanceProfile bp = balance_profile(base.graph);
  EeaBackMap back;
  back.original_vertex_count = n0;

  int n = n0;
  ArcMultiset arcs = base.graph.arcs();
  struct Entry {
    Vertex from, to;
    Weight w;
  };
  std::vector<Entry> finite;

  for (const Hint& h : inst.advice.hints) {
    const std::vector<int>& fwd = h.sequence;
    const std::vector<int> rev(fwd.rbegin(), fwd.rend());
    const int layers = static_cast<int>(fwd.size()) - 1;
    // Each pair enters the gadget from its I+ end and leaves to its I- end.
    // Plus pairs run along fwd, minus pairs against it.
    struct Pair {
      bool plus;
      Vertex x, y;  // x in I+, y in I-
      RealizedTrail r;
    };
    std::vector<Pair> pairs;
    for (Vertex x : bp.i_plus)
      for (Vertex y : bp.i_minus) {
        int cx = comps.component_of[x], cy = comps.component_of[y];
        if (cx == fwd.front() && cy == fwd.back())
          if (auto r = minpath(base, comps, fwd, x, y)) pairs.push_back({true, x, y, *r});
        if (cx == rev.front() && cy == rev.back())
          if (auto r = minpath(base, comps, rev, x, y)) pairs.push_back({false, x, y, *r});
      }
    if (pairs.empty()) return {canonical_no_ee(), EeaBackMap{n0, {}}};

    // t[l][q], s[l][q] for layer l (0-based) and pair q.
    const int q_count = static_cast<int>(pairs.size());
    std::vector<std::vector<Vertex>> t(layers), s(layers);
    for (int l = 0; l < layers; ++l) {
      std::vector<Vertex> ring;
      for (int q = 0; q < q_count; ++q) {
        t[l].push_back(n++);
        s[l].push_back(n++);
        arcs.push_back({t[l][q], s[l][q]});
        ring.push_back(t[l][q]);
        ring.push_back(s[l][q]);
        finite.push_back({s[l][q], t[l][q], 0});
      }
      for (std::size_t g = 0; g < ring.size(); ++g)
        arcs.push_back({ring[g], ring[(g + 1) % ring.size()]});
      if (l > 0) {
        Vertex anchor = members[fwd[l]].front();
        arcs.push_back({ring.front(), anchor});
        arcs.push_back({anchor, ring.front()});
      }
    }
    for (int q = 0; q < q_count; ++q) {
      const Pair& pr = pairs[q];
      if (pr.plus) {
        finite.push_back({pr.x, t[0][q], pr.r.weight});
        back.realizations.push_back({Arc{pr.x, t[0][q]}, pr.r.trail});
        for (int l = 0; l + 1 < layers; ++l) finite.push_back({s[l][q], t[l + 1][q], 0});
        finite.push_back({s[layers - 1][q], pr.y, 0});
      } else {
        finite.push_back({pr.x, t[layers - 1][q], 0});
        for (int l = layers - 1; l > 0; --l) finite.push_back({s[l][q], t[l - 1][q], 0});
        finite.push_back({s[0][q], pr.y, pr.r.weight});
        back.realizations.push_back({Arc{s[0][q], pr.y}, pr.r.trail});
      }
    }
  }

  EEInstance out;
  out.weights = base.weights;
  while (out.weights.size() < n) out.weights.add_vertex();
  for (const Entry& e : finite) out.weights.at(e.from, e.to) = e.w;
  out.graph = DirectedMultigraph(n, std::move(arcs));
  out.omega_max = base.omega_max;
  return {std::move(out), std::move(back)};
}

Extension ee_to_eea_extension(const EEAInstance& source, const EeaBackMap& back,
                              const ArcMultiset& e) {
  std::map<Arc, const Trail*> stands_for;
  for (const auto& [arc, trail] : back.realizations) stands_for[arc] = &trail;
  ArcMultiset arcs;
  for (const Arc& a : e) {
    if (a.from < back.original_vertex_count && a.to < back.original_vertex_count) {
      arcs.push_back(a);
    } else if (auto it = stands_for.find(a); it != stands_for.end()) {
      ArcMultiset path = it->second->arcs();
      arcs.insert(arcs.end(), path.begin(), path.end());
    }
  }
  return make_extension(source.base, std::move(arcs));
}

EEAInstance kernelize_eeca(const EEAInstance& inst) {
  return cbm_to_eea(eeca_to_cbm(inst).first).first;
}

// --- classic reductions ------------------------------------------------------

EEInstance hc_to_ee(const DirectedMultigraph& g) {
  const int n = g.vertex_count();
  if (n < 3) throw std::invalid_argument("hc_to_ee: fewer than 3 vertices");
  ArcMultiset arcs;
  for (Vertex v = 0; v < n; ++v) {
    arcs.push_back({n + v, v});
    arcs.push_back({v, n + v});
  }
  EEInstance out{DirectedMultigraph(2 * n, std::move(arcs)), WeightMatrix(2 * n), n};
  for (const Arc& a : g.arcs()) out.weights.at(a.from, a.to) = 1;
  return out;
}

void validate(const RPInstance& inst) {
  if (inst.weights.size() != inst.graph.vertex_count())
    throw std::invalid_argument("RP weights do not match the vertex count");
  ArcMultiset pool = sorted_arcs(inst.graph.arcs());
  ArcMultiset req = sorted_arcs(inst.required);
  if (!std::includes(pool.begin(), pool.end(), req.begin(), req.end()))
    throw std::invalid_argument("required arcs are not a sub-multiset of the arcs");
}

EEInstance rp_to_ee(const RPInstance& inst) {
  validate(inst);
  const int n = inst.graph.vertex_count();
  Weight required = 0;
  for (const Arc& a : inst.required) required = add_weight(required, inst.weights.at(a.from, a.to));
  if (is_inf(required) || required > inst.omega_max) return canonical_no_ee();
  Weight budget = is_inf(inst.omega_max) ? kInf : inst.omega_max - required;
  EEInstance out{DirectedMultigraph(n, inst.required), WeightMatrix(n), budget};
  for (const Arc& a : inst.graph.arcs()) {
    Weight w = inst.weights.at(a.from, a.to);
    if (!is_inf(w) && w <= budget) out.weights.at(a.from, a.to) = w;
  }
  return out;
}

namespace {

// Upper bound on the weight of an optimal extension: at most b + c^2 trails
// of at most c arcs, each arc a shortest path of at most n - 1 arcs.
Weight optimum_bound(const EEInstance& inst) {
  Weight max_w = 0;
  for (Vertex u = 0; u < inst.n(); ++u)
    for (Vertex v = 0; v < inst.n(); ++v)
      if (!is_inf(inst.weights.at(u, v))) max_w = std::max(max_w, inst.weights.at(u, v));
  Weight b = balance_profile(inst.graph).b, c = components(inst.graph).c;
  return (b + c * c) * c * std::max(1, inst.n() - 1) * max_w;
}

}  // namespace

RPInstance ee_to_rp(const EEInstance& inst) {
  validate(inst);
  bool subdivide = false;
  for (const Arc& a : inst.graph.arcs())
    if (is_inf(inst.weights.at(a.from, a.to))) subdivide = true;
  // Traversing u -> z -> v a second time costs more than any admissible
  // extension, so only the required traversal is affordable.
  Weight effective = inst.omega_max;
  if (subdivide && is_inf(effective)) effective = optimum_bound(inst);
  const Weight toll = effective + 1;

  int n = inst.n();
  ArcMultiset required, pool;
  std::vector<std::pair<Arc, Vertex>> subdivided;
  Weight total = 0;
  for (const Arc& a : inst.graph.arcs()) {
    Weight w = inst.weights.at(a.from, a.to);
    if (is_inf(w)) {
      Vertex z = n++;
      required.push_back({a.from, z});
      required.push_back({z, a.to});
      subdivided.push_back({a, z});
      total = add_weight(total, toll);
    } else {
      required.push_back(a);
      total = add_weight(total, w);
    }
  }
  pool = required;
  for (Vertex u = 0; u < inst.n(); ++u)
    for (Vertex v = 0; v < inst.n(); ++v)
      if (u != v && !is_inf(inst.weights.at(u, v)) &&
          !std::binary_search(inst.graph.arcs().begin(), inst.graph.arcs().end(), Arc{u, v}))
        pool.push_back({u, v});
  RPInstance out;
  out.graph = DirectedMultigraph(n, sorted_arcs(std::move(pool)));
  out.required = sorted_arcs(std::move(required));
  out.weights = inst.weights;
  while (out.weights.size() < n) out.weights.add_vertex();
  for (const auto& [a, z] : subdivided) {
    out.weights.at(a.from, z) = 0;
    out.weights.at(z, a.to) = toll;
  }
  out.omega_max = is_inf(effective) ? kInf : add_weight(effective, total);
  return out;
}

CBMInstance sat3_to_cbm(const Cnf& formula) {
  if (formula.clauses.empty()) throw std::invalid_argument("sat3_to_cbm: empty formula");
  if (formula.variables < 1) throw std::invalid_argument("sat3_to_cbm: no variables");
  const int n = formula.variables;
  const int m = static_cast<int>(formula.clauses.size());
  const int half = 2 * m;  // left (and right) vertices per variable cycle
  // Position k in 1..4m: odd k is left, even k is right.
  auto left_of = [&](int i, int k) { return i * half + (k - 1) / 2; };
  auto right_of = [&](int i, int k) { return i * half + k / 2 - 1; };

  CBMInstance out;
  out.left_count = out.right_count = n * half;
  out.cell_count = m + 1;
  out.cell_of.assign(out.vertex_count(), 0);
  out.omega_max = 1;
  for (int i = 0; i < n; ++i)
    for (int k = 1; k <= 4 * m; ++k) {
      int next = k == 4 * m ? 1 : k + 1;
      int odd = k % 2 == 1 ? k : next, even = k % 2 == 1 ? next : k;
      out.edges.push_back({left_of(i, odd), right_of(i, even), 0});
    }
  auto put = [&](int i, int k, int cell) {
    int id = k % 2 == 1 ? left_of(i, k) : out.right_id(right_of(i, k));
    out.cell_of[id] = cell;
  };
  for (int j = 1; j <= m; ++j) {
    for (int lit : formula.clauses[j - 1]) {
      int var = lit > 0 ? lit : -lit;
      if (lit == 0 || var > n)
        throw std::invalid_argument("sat3_to_cbm: literal out of range");
      int i = var - 1;
      put(i, 4 * j - 1, j);
      put(i, lit > 0 ? 4 * j - 2 : 4 * j, j);
    }
    out.joins.push_back({0, j});
  }
  normalize(out);
  return out;
}

}  // namespace eulerext
