#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace eulerext {

using Weight = std::int64_t;

// Large enough that a sum of n^2 finite weights never reaches it.
inline constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;

inline bool is_inf(Weight w) { return w >= kInf; }

inline Weight add_weight(Weight a, Weight b) {
  if (is_inf(a) || is_inf(b)) return kInf;
  Weight s = a + b;
  return s >= kInf ? kInf : s;
}

// Dense n x n table, row-major. Diagonal is kept at kInf by all producers.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  explicit WeightMatrix(int n, Weight fill = kInf)
      : n_(n), w_(static_cast<std::size_t>(n) * n, fill) {
    for (int v = 0; v < n; ++v) at(v, v) = kInf;
  }

  int size() const { return n_; }
  Weight& at(int u, int v) { return w_[static_cast<std::size_t>(u) * n_ + v]; }
  Weight at(int u, int v) const {
    return w_[static_cast<std::size_t>(u) * n_ + v];
  }

  // Appends a vertex whose row and column are kInf.
  int add_vertex() {
    WeightMatrix bigger(n_ + 1);
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v) bigger.at(u, v) = at(u, v);
    *this = std::move(bigger);
    return n_ - 1;
  }

  bool operator==(const WeightMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<Weight> w_;
};

}  // namespace eulerext
