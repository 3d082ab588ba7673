#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "eulerext/cbm.hpp"

namespace test {

using namespace eulerext;

inline CBMInstance make_cbm(int left, int right, std::vector<CbmEdge> edges,
                            std::vector<int> left_cells, std::vector<int> right_cells,
                            int cells, std::vector<Join> joins, Weight budget = kInf) {
  CBMInstance inst;
  inst.left_count = left;
  inst.right_count = right;
  inst.edges = std::move(edges);
  inst.cell_of = std::move(left_cells);
  inst.cell_of.insert(inst.cell_of.end(), right_cells.begin(), right_cells.end());
  inst.cell_count = cells;
  inst.joins = std::move(joins);
  inst.omega_max = budget;
  normalize(inst);
  return inst;
}

// Vertices 1..8 of the drawing; even ones are left, odd ones right, so
// every left vertex has degree at most two.
inline CBMInstance figure_cbm() {
  return make_cbm(4, 4,
                  {{0, 0, 1}, {1, 1, 1}, {2, 2, 1}, {3, 3, 1}, {0, 3, 1}, {2, 3, 1}, {1, 2, 1}},
                  {0, 0, 1, 1}, {0, 0, 1, 1}, 2, {{0, 1}});
}

// Cheapest perfect conjoining matching by trying every permutation.
inline Weight brute_cbm(const CBMInstance& inst) {
  if (inst.left_count != inst.right_count) return -1;
  const int n = inst.left_count;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Weight best = kInf;
  do {
    Matching m;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      auto it = std::find_if(inst.edges.begin(), inst.edges.end(), [&](const CbmEdge& e) {
        return e.left == i && e.right == perm[i];
      });
      if (it == inst.edges.end() || is_inf(it->weight)) ok = false;
      else m.push_back(*it);
    }
    if (!ok) continue;
    bool all = true;
    for (const Join& j : inst.joins) {
      bool hit = false;
      for (const CbmEdge& e : m) {
        int a = inst.cell_of_left(e.left), b = inst.cell_of_right(e.right);
        if ((a == j.first && b == j.second) || (a == j.second && b == j.first)) hit = true;
      }
      all = all && hit;
    }
    if (all) best = std::min(best, matching_weight(m));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best > inst.omega_max || is_inf(best) ? -1 : best;
}

inline Weight weight_or(const std::optional<Matching>& m) { return m ? matching_weight(*m) : -1; }

}  // namespace test
