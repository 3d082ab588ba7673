#pragma once

#include <optional>
#include <span>
#include <vector>

#include "eulerext/graph.hpp"
#include "eulerext/preprocess.hpp"

namespace eulerext {

enum class HintKind { path, cycle };

// Component ids along an undirected trail in the component graph. A closed
// sequence (front == back) is allowed for both kinds: as a cycle hint it is
// realized by a cycle, as a path hint by a path that starts and ends in the
// same component. Length-2 closed sequences (A, B, A) are digons.
struct Hint {
  HintKind kind = HintKind::path;
  std::vector<int> sequence;

  int length() const { return static_cast<int>(sequence.size()) - 1; }
  bool closed() const {
    return sequence.size() >= 3 && sequence.front() == sequence.back();
  }
  auto operator<=>(const Hint&) const = default;
};

struct Advice {
  std::vector<Hint> hints;
  auto operator<=>(const Advice&) const = default;
};

// Path kind: lexicographically smaller traversal direction. Cycle kind:
// smallest rotation/reflection, rotated so the closing component is first.
Hint canonical(Hint h);
Advice canonical(Advice a);

struct RealizedTrail {
  Trail trail;
  Weight weight = kInf;
};

// Cheapest path u = x0, x1, ..., xk = v with x_i in component p[i].
// Throws if u or v lies outside the end components of p.
std::optional<RealizedTrail> minpath(const EEInstance& inst,
                                     const ComponentStructure& comps,
                                     std::span<const int> p, Vertex u, Vertex v);

// Cheapest cycle whose component image is the closed sequence of the hint,
// anchored at any vertex of its closing component and run in either
// direction. Throws on path hints.
std::optional<RealizedTrail> determine_cycle(const EEInstance& inst,
                                             const ComponentStructure& comps,
                                             const Hint& c_hint);

struct CycleElimination {
  EEInstance instance;  // graph extended by the realized cycles
  Advice advice;        // path hints over the components of instance.graph
  ArcMultiset partial;
  Weight weight = 0;
};

// Hint component ids refer to components(inst.graph). Returns nullopt when
// some cycle hint has no finite realization or the budget is exceeded.
std::optional<CycleElimination> eliminate_cycle_hints(const EEInstance& inst,
                                                      const Advice& p);

// Every hint has a realization inside e: a path from I+ to I- of
// inst.graph, or a cycle, whose component image is the hint's sequence.
// Realizations of different hints may share arcs.
bool heeds_advice(const EEInstance& inst, const Advice& p, const ArcMultiset& e);

// Edge set {min, max} pairs of the hint's trail, without repetition.
std::vector<std::pair<int, int>> hint_edges(const Hint& h);

bool is_connecting(int c, const Advice& a);
bool is_minimal_connecting(int c, const Advice& a);
// Some choice of initial vertex per hint leaves an acyclic union.
bool has_forest_shape(int c, const Advice& a);

// Every minimal connecting advice over K_c with forest shape, canonical and
// in ascending order. Empty for c < 2.
std::vector<Advice> enumerate_min_connecting_advices(int c);

}  // namespace eulerext
