#include "eulerext/matching.hpp"

#include <algorithm>
#include <limits>

namespace eulerext {

std::optional<std::vector<BipartiteEdge>> min_weight_perfect_matching(
    int left_count, int right_count, std::span<const BipartiteEdge> edges) {
  if (left_count != right_count) return std::nullopt;
  const int n = left_count;
  if (n == 0) return std::vector<BipartiteEdge>{};

  Weight finite_sum = 1;
  for (const auto& e : edges)
    if (!is_inf(e.weight)) finite_sum += e.weight;
  // Any matching using a missing pair costs at least `missing`.
  const Weight missing = finite_sum;
  std::vector<std::vector<Weight>> a(n + 1, std::vector<Weight>(n + 1, missing));
  std::vector<std::vector<char>> present(n + 1, std::vector<char>(n + 1, 0));
  for (const auto& e : edges) {
    if (is_inf(e.weight)) continue;
    Weight& cell = a[e.left + 1][e.right + 1];
    if (!present[e.left + 1][e.right + 1] || e.weight < cell) cell = e.weight;
    present[e.left + 1][e.right + 1] = 1;
  }

  const Weight big = std::numeric_limits<Weight>::max() / 4;
  std::vector<Weight> u(n + 1, 0), v(n + 1, 0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<Weight> minv(n + 1, big);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = 0;
      Weight delta = big;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        Weight cur = a[i0][j] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<BipartiteEdge> out;
  for (int j = 1; j <= n; ++j) {
    int i = p[j];
    if (!present[i][j]) return std::nullopt;
    out.push_back({i - 1, j - 1, a[i][j]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace eulerext
