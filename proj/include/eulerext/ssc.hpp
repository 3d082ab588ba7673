#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "eulerext/preprocess.hpp"

namespace eulerext {

// A position is a multiset of color ids; a switch lists its positions.
using Position = std::vector<int>;
using Switch = std::vector<Position>;

struct SSCInstance {
  int color_count = 0;
  std::vector<Switch> switches;
  bool operator==(const SSCInstance&) const = default;
};

// Throws std::invalid_argument on bad color ids or a switch without positions.
void validate(const SSCInstance& inst);

// One position index per switch.
using SscChoice = std::vector<int>;

bool covers(const SSCInstance& inst, const SscChoice& choice);

// Exhaustive search over distinct position color sets. Requires c <= 64.
std::optional<SscChoice> solve_ssc(const SSCInstance& inst);

// 1 color, 1 switch, position {0} or the empty position.
SSCInstance canonical_yes_ssc();
SSCInstance canonical_no_ssc();

// k copies of a switch with one position per family set. Throws if
// k > family.size().
SSCInstance setcover_to_ssc(int universe_size,
                            const std::vector<std::vector<int>>& family, int k);

struct CompositionStats {
  bool solved_directly = false;  // m >= 2^{ck}
  int selector_bits = 0;
};

// OR of the inputs. Throws on an empty list or mismatched (c, k). One
// instance is returned verbatim; m >= 2^{ck} instances are solved and
// answered by the canonical instances.
SSCInstance compose_ssc(const std::vector<SSCInstance>& instances,
                        CompositionStats* stats = nullptr);

// --- two-dimensional EE ------------------------------------------------------

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  auto operator<=>(const Point&) const = default;
};

// p >= q in both coordinates.
inline bool dominates(Point p, Point q) { return p.x >= q.x && p.y >= q.y; }

// An extension arc (u, v) is allowed iff point(u) dominates point(v).
struct PlanarEEInstance {
  std::vector<Point> points;
  DirectedMultigraph graph;
  std::int64_t extension_budget = 0;
  bool operator==(const PlanarEEInstance&) const = default;
};

// Throws unless there is one point per vertex and all points are distinct.
void validate(const PlanarEEInstance& inst);

// Unit weight on allowed pairs, inf elsewhere; budget carried over.
EEInstance twodee_to_ee(const PlanarEEInstance& inst);

// Every position holds exactly c colors (duplicates dropped, then the
// smallest color repeated) and every switch l positions (the first one
// repeated). Empty positions are dropped when their switch has another
// position; switches with only empty positions are dropped.
SSCInstance normalize_ssc(const SSCInstance& inst);

// Vertex ids of the image of a normalized instance with k switches of l
// positions of c colors; i and j are 1-based as are m.
struct TwoDeeLayout {
  int k = 0, l = 0, c = 0;

  Vertex v1(int i) const { return i == 0 ? 0 : 2 * i - 1; }  // i in 0..k
  Vertex v2(int i) const { return i == k + 1 ? 2 * k + 1 : 2 * i; }  // 1..k+1
  Vertex w(int i, int j, int m) const {
    return 2 * k + 2 + ((i - 1) * l + (j - 1)) * c + (m - 1);
  }
  int vertex_count() const { return 2 * k + 2 + k * l * c; }

  Point v1_point(int i) const;
  Point v2_point(int i) const;
  Point w_point(int i, int j, int m) const;
};

// Two incomparable isolated points, budget 0; and one point, budget 0.
PlanarEEInstance canonical_no_2dee();
PlanarEEInstance canonical_yes_2dee();

struct TwoDeeImage {
  PlanarEEInstance instance;
  SSCInstance normalized;
  // Empty when the answer was decided during normalization.
  std::optional<TwoDeeLayout> layout;
};

// Budget (c + 1) k. Normalization happens inside. With no colors the image
// is canonical yes; when some color lies in no position, or no switch is
// left, it is canonical no.
TwoDeeImage ssc_to_2dee_image(const SSCInstance& inst);
PlanarEEInstance ssc_to_2dee(const SSCInstance& inst);

}  // namespace eulerext
