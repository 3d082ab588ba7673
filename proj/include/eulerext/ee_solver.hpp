#pragma once

#include <optional>

#include "eulerext/advice.hpp"
#include "eulerext/graph.hpp"
#include "eulerext/preprocess.hpp"

namespace eulerext {

struct Extension {
  ArcMultiset arcs;
  Weight weight = 0;
  bool operator==(const Extension&) const = default;
};

Extension make_extension(const EEInstance& inst, ArcMultiset arcs);

// graph + e is Eulerian, e has no infinite arc and weight(e) <= omega_max.
bool verify_extension(const EEInstance& inst, const ArcMultiset& e);

struct SolveStats {
  long advices = 0;
  long nodes = 0;         // SolveEE-with-advice search nodes
  long leaves = 0;        // connected-case solves
  int max_branches = 0;   // (u, v) pairs tried at one node
  int max_hints = 0;      // hints in one enumerated advice
};

// Optimum ignoring the budget. Requires a connected graph with unit
// balances and metric weights; throws otherwise (the metric requirement is
// the caller's).
std::optional<Extension> solve_connected(const EEInstance& inst);

// Optimum heeding a cycle-free advice, ignoring the budget. Hint ids refer
// to components(inst.graph).
std::optional<Extension> solve_ee_cfa(const EEInstance& inst, const Advice& p,
                                       SolveStats* stats = nullptr);

struct SolveReport {
  std::optional<Extension> extension;  // for the input, within budget
  EEInstance preprocessed;
  PreprocessMap map;
  std::optional<Extension> preprocessed_optimum;  // ignoring budget
  SolveStats stats;
};

SolveReport solve_ee_report(const EEInstance& inst);
std::optional<Extension> solve_ee(const EEInstance& inst);

struct OracleOptions {
  int max_vertices = 8;
  bool use_heuristic = true;
};

// Best-first search over (balance vector, merged original components).
// Throws when the instance exceeds max_vertices.
std::optional<Extension> oracle_ee(const EEInstance& inst,
                                   OracleOptions options = {});

// Exact by a second route: every connected balanced extension contains c - 1
// arcs joining the components into one; the rest of it is a balancing flow.
// Enumerates the joining arc sets and solves a transportation problem over
// shortest paths for each. Polynomial in n for fixed c; throws above 16
// components.
std::optional<Extension> oracle_ee_flow(const EEInstance& inst);

}  // namespace eulerext
