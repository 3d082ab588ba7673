#pragma once

#include <compare>
#include <span>
#include <vector>

#include "eulerext/weight.hpp"

namespace eulerext {

using Vertex = int;

struct Arc {
  Vertex from = 0;
  Vertex to = 0;
  auto operator<=>(const Arc&) const = default;
};

// Sorted arc list with multiplicity.
using ArcMultiset = std::vector<Arc>;

ArcMultiset sorted_arcs(ArcMultiset arcs);

class DirectedMultigraph {
 public:
  DirectedMultigraph() = default;
  // Throws std::invalid_argument on self-loops or bad endpoints.
  explicit DirectedMultigraph(int n, ArcMultiset arcs = {});

  int vertex_count() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const ArcMultiset& arcs() const { return arcs_; }

  Vertex add_vertex() { return n_++; }
  void add_arc(Arc a);
  void add_arcs(std::span<const Arc> extra);
  // Removes one copy; returns false if absent.
  bool remove_arc(Arc a);

  DirectedMultigraph plus(std::span<const Arc> extra) const;

  bool operator==(const DirectedMultigraph&) const = default;

 private:
  void check(Arc a) const;

  int n_ = 0;
  ArcMultiset arcs_;
};

struct BalanceProfile {
  std::vector<int> balance;  // indegree - outdegree
  std::vector<Vertex> i_plus;
  std::vector<Vertex> i_minus;
  int b = 0;
};

struct ComponentStructure {
  std::vector<int> component_of;
  int c = 0;

  // Vertices of each component, ascending.
  std::vector<std::vector<Vertex>> members() const;
};

struct Trail {
  std::vector<Vertex> vertices;

  int length() const {
    return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1;
  }
  bool closed() const {
    return vertices.size() >= 2 && vertices.front() == vertices.back();
  }
  ArcMultiset arcs() const;
  bool operator==(const Trail&) const = default;
};

BalanceProfile balance_profile(const DirectedMultigraph& g);

// Component ids are assigned in order of each component's lowest vertex.
ComponentStructure components(const DirectedMultigraph& g);
ComponentStructure components(int n, std::span<const Arc> arcs);

bool is_connected(const DirectedMultigraph& g);
bool is_eulerian(const DirectedMultigraph& g);

// Sequence of component ids with consecutive duplicates collapsed.
std::vector<int> meta_trail(const ComponentStructure& comps, const Trail& t);
std::vector<int> meta_trail(const DirectedMultigraph& g, const Trail& t);

struct ShortcutResult {
  ArcMultiset arcs;
  Trail trail;
};

// Replaces the first occurrence of s inside t by the arc (s.front, s.back).
// Throws if s is not a consecutive subtrail of t, if s is closed, or if the
// arcs of t are not contained in e.
ShortcutResult shortcut(const ArcMultiset& e, const Trail& t, const Trail& s);

// Open trails first (each starts in I+ and ends in I- of g), then cycles.
// Every returned trail visits each vertex at most once, apart from the
// closing vertex of a cycle. Throws if g + e is not Eulerian.
std::vector<Trail> decompose_extension(const DirectedMultigraph& g,
                                       const ArcMultiset& e);

}  // namespace eulerext
