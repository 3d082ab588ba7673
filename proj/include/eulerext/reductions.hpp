#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "eulerext/advice.hpp"
#include "eulerext/cbm.hpp"
#include "eulerext/ee_solver.hpp"
#include "eulerext/preprocess.hpp"

namespace eulerext {

// Hint ids refer to components(base.graph).
struct EEAInstance {
  EEInstance base;
  Advice advice;
  bool operator==(const EEAInstance&) const = default;
};

void validate(const EEAInstance& inst);

// Unit balances and metric weights.
bool is_preprocessed(const EEInstance& inst);

// Two isolated vertices, all weights inf, budget 0.
EEInstance canonical_no_ee();

// Optimum heeding the advice, or none when it exceeds the budget. Unlike
// solve_ee_cfa, realizations of different hints may share an endpoint.
// Throws unless the base is preprocessed.
std::optional<Extension> solve_eea(const EEAInstance& inst);
bool verify_eea(const EEAInstance& inst, const ArcMultiset& e);

// --- EE with cycle-free advice to CBM ---------------------------------------

// CBM left = I+ then the "open" gadget vertices, right = I- then the
// "closed" gadget vertices. A closed vertex matched to its I+ endpoint
// stands for the hint's cheapest realization between the pair.
struct EecaBackMap {
  struct Realization {
    int hint = -1;
    Vertex from = -1;  // in I+
    Vertex to = -1;    // in I-
    Trail trail;
    Weight weight = kInf;
  };
  std::vector<Vertex> left_vertex;       // -1 for gadget vertices
  std::vector<Vertex> right_vertex;      // -1 for gadget vertices
  std::vector<int> right_realization;    // per right id, -1 unless gadget
  std::vector<Realization> realizations;
};

// Requires a preprocessed base and path hints only.
std::pair<CBMInstance, EecaBackMap> eeca_to_cbm(const EEAInstance& inst);

// Throws unless m is a perfect matching of the image.
Extension matching_to_extension(const EEAInstance& source, const EecaBackMap& back,
                                const Matching& m);

// Optimum over all minimal connecting advices, each solved through
// eeca_to_cbm and solve_cbm_general, lifted to the input.
std::optional<Extension> solve_ee_via_cbm(const EEInstance& inst);

// --- CBM to EE with advice ---------------------------------------------------

// The image's vertex ids are the legalized instance's CBM ids.
struct CbmBackMap {
  int left_count = 0;        // of the input
  int right_count = 0;
  int legal_left_count = 0;  // of the legalized instance
};

std::pair<EEAInstance, CbmBackMap> cbm_to_eea(const CBMInstance& inst);

// Arcs of e run from right to left vertices; padding edges are dropped.
Matching extension_to_matching(const CbmBackMap& back, const EEAInstance& image,
                               const ArcMultiset& e);
// Inverse direction: a matching of the input plus the forced padding arcs.
ArcMultiset matching_to_arcs(const CbmBackMap& back, const EEAInstance& image,
                             const Matching& m);

// --- EE with cycle-free advice to EE ----------------------------------------

struct EeaBackMap {
  int original_vertex_count = 0;
  // Image arcs that stand for a hint realization in the source.
  std::vector<std::pair<Arc, Trail>> realizations;
};

// Throws on cycle hints. A hint without any finite realization yields
// canonical_no_ee().
std::pair<EEInstance, EeaBackMap> eea_to_ee(const EEAInstance& inst);

Extension ee_to_eea_extension(const EEAInstance& source, const EeaBackMap& back,
                              const ArcMultiset& e);

// eeca_to_cbm followed by cbm_to_eea.
EEAInstance kernelize_eeca(const EEAInstance& inst);

// --- classic reductions ------------------------------------------------------

// Vertex (v, 0) is v and (v, 1) is n + v. Throws for n < 3.
EEInstance hc_to_ee(const DirectedMultigraph& g);

// A walk is closed, traverses every required arc and visits every vertex.
// Pairs that are no arc of the graph are unusable regardless of weights.
struct RPInstance {
  DirectedMultigraph graph;
  ArcMultiset required;  // sub-multiset of graph arcs
  WeightMatrix weights;
  Weight omega_max = kInf;
  bool operator==(const RPInstance&) const = default;
};

void validate(const RPInstance& inst);

EEInstance rp_to_ee(const RPInstance& inst);
// An input arc (u, v) of infinite weight becomes u -> z -> v for a fresh
// vertex z appended after the input vertices; (z, v) costs one more than the
// budget (or than an optimum bound when the budget is inf), and the RP
// budget grows by that toll.
RPInstance ee_to_rp(const EEInstance& inst);

// Variables are 1..variables; literal -x is the negation of x.
struct Cnf {
  int variables = 0;
  std::vector<std::vector<int>> clauses;
  bool operator==(const Cnf&) const = default;
};

// Variable i (0-based) owns a cycle v^1..v^{4m}; odd positions are left
// vertices, even ones right vertices. Cell 0 is the rest, cell j clause j.
CBMInstance sat3_to_cbm(const Cnf& formula);

}  // namespace eulerext
