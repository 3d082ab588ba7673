#pragma once

#include <vector>

#include "eulerext/graph.hpp"
#include "eulerext/weight.hpp"

namespace eulerext {

struct EEInstance {
  DirectedMultigraph graph;
  WeightMatrix weights;
  Weight omega_max = kInf;

  int n() const { return graph.vertex_count(); }
  bool operator==(const EEInstance&) const = default;
};

// Throws std::invalid_argument unless weights match the graph size and the
// diagonal is kInf.
void validate(const EEInstance& inst);

Weight arc_weight(const EEInstance& inst, const ArcMultiset& arcs);

// Maps a preprocessed instance back to the one it was derived from.
// Split vertices are appended after the original ones; path expansions are
// read off a shortest-path predecessor table over the split instance.
class PreprocessMap {
 public:
  PreprocessMap() = default;
  static PreprocessMap identity(int n);

  int original_vertex_count() const { return original_n_; }
  int vertex_count() const { return static_cast<int>(origin_of_.size()); }
  Vertex origin_of(Vertex v) const { return origin_of_.at(v); }

  // Vertex sequence u..v witnessing the closed weight of (u, v), in the
  // vertex space of the split instance.
  std::vector<Vertex> path_expansion(Vertex u, Vertex v) const;

  // Throws on arcs that reference unknown vertices.
  ArcMultiset lift(const ArcMultiset& e) const;

 private:
  friend std::pair<EEInstance, PreprocessMap> split_vertices(const EEInstance&);
  friend std::pair<EEInstance, PreprocessMap> metric_closure(const EEInstance&);
  friend std::pair<EEInstance, PreprocessMap> preprocess(const EEInstance&);

  int original_n_ = 0;
  std::vector<Vertex> origin_of_;
  // pred_[u][v]: predecessor of v on the chosen shortest u-v path over the
  // split instance. Empty when no closure was applied.
  std::vector<std::vector<Vertex>> pred_;
};

ArcMultiset lift_extension(const PreprocessMap& maps, const ArcMultiset& e);

std::pair<EEInstance, PreprocessMap> split_vertices(const EEInstance& inst);
std::pair<EEInstance, PreprocessMap> metric_closure(const EEInstance& inst);

// split_vertices followed by metric_closure.
std::pair<EEInstance, PreprocessMap> preprocess(const EEInstance& inst);

bool is_metric(const WeightMatrix& w);

}  // namespace eulerext
