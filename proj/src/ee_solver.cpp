#include "eulerext/ee_solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "eulerext/matching.hpp"

namespace eulerext {

Extension make_extension(const EEInstance& inst, ArcMultiset arcs) {
  Extension e;
  e.arcs = sorted_arcs(std::move(arcs));
  e.weight = arc_weight(inst, e.arcs);
  return e;
}

bool verify_extension(const EEInstance& inst, const ArcMultiset& e) {
  for (const Arc& a : e) {
    if (a.from < 0 || a.to < 0 || a.from >= inst.n() || a.to >= inst.n() ||
        a.from == a.to)
      return false;
    if (is_inf(inst.weights.at(a.from, a.to))) return false;
  }
  if (arc_weight(inst, e) > inst.omega_max) return false;
  return is_eulerian(inst.graph.plus(e));
}

std::optional<Extension> solve_connected(const EEInstance& inst) {
  if (!is_connected(inst.graph))
    throw std::invalid_argument("solve_connected: graph is not connected");
  BalanceProfile bp = balance_profile(inst.graph);
  for (int x : bp.balance)
    if (x > 1 || x < -1)
      throw std::invalid_argument("solve_connected: non-unit balance");
  // Every open trail of an optimum runs from I+ to I-; with metric weights
  // each can be replaced by its direct arc, so an optimum is a matching.
  std::vector<BipartiteEdge> edges;
  for (int i = 0; i < static_cast<int>(bp.i_plus.size()); ++i)
    for (int j = 0; j < static_cast<int>(bp.i_minus.size()); ++j) {
      Weight w = inst.weights.at(bp.i_plus[i], bp.i_minus[j]);
      if (!is_inf(w)) edges.push_back({i, j, w});
    }
  auto m = min_weight_perfect_matching(static_cast<int>(bp.i_plus.size()),
                                       static_cast<int>(bp.i_minus.size()),
                                       edges);
  if (!m) return std::nullopt;
  ArcMultiset arcs;
  for (const auto& e : *m) arcs.push_back({bp.i_plus[e.left], bp.i_minus[e.right]});
  return make_extension(inst, std::move(arcs));
}

namespace {

class AdviceSearch {
 public:
  AdviceSearch(const EEInstance& inst, const Advice& p, Weight bound,
               SolveStats* stats)
      : inst_(inst),
        p_(p),
        comps_(components(inst.graph)),
        best_weight_(bound),
        stats_(stats) {
    for (const Hint& h : p.hints)
      if (h.kind != HintKind::path)
        throw std::invalid_argument("solve_ee_cfa: cycle hint in advice");
  }

  std::optional<Extension> run() {
    ArcMultiset chosen;
    recurse(inst_.graph, 0, 0, chosen);
    return best_;
  }

 private:
  void recurse(const DirectedMultigraph& g, std::size_t i, Weight acc,
               ArcMultiset& chosen) {
    if (stats_) ++stats_->nodes;
    if (acc >= best_weight_) return;
    if (i == p_.hints.size()) {
      if (stats_) ++stats_->leaves;
      EEInstance sub{g, inst_.weights, kInf};
      // A non-connecting advice leaves components for the general solver.
      auto rest = is_connected(g) ? solve_connected(sub) : solve_ee(sub);
      if (!rest) return;
      Weight total = add_weight(acc, rest->weight);
      if (total < best_weight_) {
        best_weight_ = total;
        ArcMultiset all = chosen;
        all.insert(all.end(), rest->arcs.begin(), rest->arcs.end());
        best_ = make_extension(inst_, std::move(all));
      }
      return;
    }
    const std::vector<int>& fwd = p_.hints[i].sequence;
    const std::vector<int> rev(fwd.rbegin(), fwd.rend());
    BalanceProfile bp = balance_profile(g);
    int branches = 0;
    for (Vertex u : bp.i_plus)
      for (Vertex v : bp.i_minus) {
        int cu = comps_.component_of[u], cv = comps_.component_of[v];
        std::optional<RealizedTrail> r;
        bool any = false;
        for (const auto* seq : {&fwd, &rev}) {
          if (cu != seq->front() || cv != seq->back()) continue;
          any = true;
          auto cand = minpath(inst_, comps_, *seq, u, v);
          if (cand && (!r || cand->weight < r->weight)) r = std::move(cand);
        }
        if (!any) continue;
        ++branches;
        if (!r) continue;
        ArcMultiset arcs = r->trail.arcs();
        std::size_t mark = chosen.size();
        chosen.insert(chosen.end(), arcs.begin(), arcs.end());
        recurse(g.plus(arcs), i + 1, add_weight(acc, r->weight), chosen);
        chosen.resize(mark);
      }
    if (stats_) stats_->max_branches = std::max(stats_->max_branches, branches);
  }

  const EEInstance& inst_;
  const Advice& p_;
  ComponentStructure comps_;
  Weight best_weight_;
  std::optional<Extension> best_;
  SolveStats* stats_;
};

}  // namespace

std::optional<Extension> solve_ee_cfa(const EEInstance& inst, const Advice& p,
                                       SolveStats* stats) {
  // kInf + 1 keeps the first finite optimum strictly below the bound.
  return AdviceSearch(inst, p, kInf + 1, stats).run();
}

SolveReport solve_ee_report(const EEInstance& inst) {
  if (inst.n() == 0) throw std::invalid_argument("solve_ee: empty graph");
  SolveReport rep;
  std::tie(rep.preprocessed, rep.map) = preprocess(inst);
  EEInstance work = rep.preprocessed;
  work.omega_max = kInf;
  ComponentStructure comps = components(work.graph);

  if (comps.c == 1) {
    rep.preprocessed_optimum = solve_connected(work);
  } else {
    Weight best = kInf + 1;
    for (const Advice& a : enumerate_min_connecting_advices(comps.c)) {
      ++rep.stats.advices;
      rep.stats.max_hints =
          std::max(rep.stats.max_hints, static_cast<int>(a.hints.size()));
      auto elim = eliminate_cycle_hints(work, a);
      if (!elim || elim->weight >= best) continue;
      auto rest = AdviceSearch(elim->instance, elim->advice, best - elim->weight,
                               &rep.stats)
                      .run();
      if (!rest) continue;
      Weight total = add_weight(elim->weight, rest->weight);
      if (total < best) {
        best = total;
        ArcMultiset all = elim->partial;
        all.insert(all.end(), rest->arcs.begin(), rest->arcs.end());
        rep.preprocessed_optimum = make_extension(work, std::move(all));
      }
    }
  }
  if (rep.preprocessed_optimum &&
      rep.preprocessed_optimum->weight <= inst.omega_max) {
    rep.extension = make_extension(inst, rep.map.lift(rep.preprocessed_optimum->arcs));
  }
  return rep;
}

std::optional<Extension> solve_ee(const EEInstance& inst) {
  return solve_ee_report(inst).extension;
}

}  // namespace eulerext
