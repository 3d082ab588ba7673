#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "eulerext/ee_solver.hpp"
#include "eulerext/preprocess.hpp"

namespace test {

using namespace eulerext;

// Instance on n vertices with the given arcs and a constant off-diagonal weight.
inline EEInstance make_ee(int n, ArcMultiset arcs, Weight fill = 1, Weight budget = kInf) {
  return EEInstance{DirectedMultigraph(n, std::move(arcs)), WeightMatrix(n, fill), budget};
}

inline Weight weight_or(const std::optional<Extension>& e, Weight none = -1) {
  return e ? e->weight : none;
}

// Floyd-Warshall; an independent reference for metric_closure.
inline WeightMatrix floyd(const WeightMatrix& w) {
  WeightMatrix d = w;
  const int n = w.size();
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) d.at(i, j) = std::min(d.at(i, j), add_weight(d.at(i, k), d.at(k, j)));
  return d;
}

}  // namespace test
