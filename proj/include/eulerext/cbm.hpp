#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "eulerext/matching.hpp"
#include "eulerext/weight.hpp"

namespace eulerext {

using CbmEdge = BipartiteEdge;
using Join = std::pair<int, int>;  // first < second
using Matching = std::vector<CbmEdge>;

// Vertex ids: left i is i, right j is left_count + j.
struct CBMInstance {
  int left_count = 0;
  int right_count = 0;
  std::vector<CbmEdge> edges;  // sorted, one per (left, right) pair
  std::vector<int> cell_of;    // per vertex id
  int cell_count = 0;
  std::vector<Join> joins;     // sorted, distinct
  Weight omega_max = kInf;

  int vertex_count() const { return left_count + right_count; }
  int right_id(int j) const { return left_count + j; }
  int cell_of_left(int i) const { return cell_of[i]; }
  int cell_of_right(int j) const { return cell_of[left_count + j]; }
  bool operator==(const CBMInstance&) const = default;
};

// Sorts edges and joins and orients joins; throws on invariant violations.
void normalize(CBMInstance& inst);
void validate(const CBMInstance& inst);

// One left and one right vertex, no edges, no joins, budget 0.
CBMInstance canonical_no_cbm();
bool is_canonical_no(const CBMInstance& inst);

Weight matching_weight(const Matching& m);
bool is_perfect(const CBMInstance& inst, const Matching& m);
bool satisfies(const CBMInstance& inst, const CbmEdge& e, const Join& j);
bool is_conjoining(const CBMInstance& inst, const Matching& m);
// Perfect, conjoining, uses instance edges only, within budget.
bool verify_matching(const CBMInstance& inst, const Matching& m);

// Working state of the reduction rules: the reduced instance plus the
// edges fixed so far, expressed in the ids of the instance it started from.
struct CbmReduction {
  CBMInstance instance;
  Matching fixed;
  Weight fixed_weight = 0;
  std::vector<int> left_origin;
  std::vector<int> right_origin;
  bool infeasible = false;
};

// Drops infinite edges; budget-exceeding states become infeasible.
CbmReduction start_reduction(const CBMInstance& inst);

void apply_rr_degree_one(CbmReduction& r);
void apply_rr_component_in_cell(CbmReduction& r);
// Throws std::invalid_argument unless every component is an even cycle.
void apply_rr_signature(CbmReduction& r);

CBMInstance rr_degree_one(const CBMInstance& inst);
CBMInstance rr_component_in_cell(const CBMInstance& inst);
CBMInstance rr_signature(const CBMInstance& inst);

// Connected components of the bipartite graph as sorted vertex-id lists,
// ordered by their smallest id.
std::vector<std::vector<int>> cbm_components(const CBMInstance& inst);

struct Signature {
  std::vector<Join> sigma1;
  std::vector<Join> sigma2;
  Weight delta = 0;
  Matching m1;
  Matching m2;

  // Unordered pair {sigma1, sigma2}; equal keys mean equivalent signatures.
  std::pair<std::vector<Join>, std::vector<Join>> key() const;
};

// Throws unless `component` spans an even cycle of inst.
Signature signature_of(const CBMInstance& inst, const std::vector<int>& component);

std::optional<Matching> solve_cbm_degree2(const CBMInstance& inst);
std::optional<Matching> solve_cbm_general(const CBMInstance& inst);
// Throws above 16 vertices.
std::optional<Matching> oracle_cbm(const CBMInstance& inst);

std::optional<Matching> min_weight_perfect_matching(const CBMInstance& inst);

// Equal left/right counts per cell and a connected cell-join graph. Original
// vertex ids are kept; added vertices come after them on each side.
CBMInstance legalize(const CBMInstance& inst);
bool is_legal(const CBMInstance& inst);

}  // namespace eulerext
