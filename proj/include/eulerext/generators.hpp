#pragma once

#include <cstdint>

#include "eulerext/cbm.hpp"
#include "eulerext/preprocess.hpp"
#include "eulerext/reductions.hpp"
#include "eulerext/ssc.hpp"

namespace eulerext {

struct EEGenParams {
  int n = 6;
  int c = 2;           // exact component count, 1 <= c <= n
  int max_b = 4;       // resampled until b <= max_b
  int max_weight = 10;
  int inf_percent = 15;  // chance that an off-diagonal weight is inf
  int extra_arcs = -1;   // per component; negative draws 0..size
  std::uint64_t seed = 1;
};

EEInstance random_ee(const EEGenParams& p);

struct CbmGenParams {
  int n = 4;            // vertices per side
  int cells = 2;
  int joins = 2;        // distinct joins drawn, capped by the cell pairs
  int max_weight = 10;
  bool degree2 = true;  // union of two random perfect matchings
  int drop_percent = 10;   // chance each edge is dropped
  int extra_percent = 20;  // general mode: chance of each extra pair
  std::uint64_t seed = 1;
};

CBMInstance random_cbm(const CbmGenParams& p);

struct SscGenParams {
  int colors = 2;
  int switches = 2;
  int max_positions = 3;  // per switch, drawn from 1..max_positions
  int fill_percent = 40;  // chance each color is in a position
  std::uint64_t seed = 1;
};

SSCInstance random_ssc(const SscGenParams& p);
// m instances sharing (colors, switches).
std::vector<SSCInstance> random_ssc_batch(const SscGenParams& p, int m);

// Clauses of three distinct variables with random signs.
Cnf random_3cnf(int variables, int clauses, std::uint64_t seed);

}  // namespace eulerext
