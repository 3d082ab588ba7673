#include "eulerext/ssc.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace eulerext {

void validate(const SSCInstance& inst) {
  if (inst.color_count < 0) throw std::invalid_argument("ssc: negative color count");
  for (const Switch& s : inst.switches) {
    if (s.empty()) throw std::invalid_argument("ssc: switch without positions");
    for (const Position& p : s)
      for (int color : p)
        if (color < 0 || color >= inst.color_count)
          throw std::invalid_argument("ssc: color out of range");
  }
}

bool covers(const SSCInstance& inst, const SscChoice& choice) {
  if (choice.size() != inst.switches.size()) return false;
  std::vector<bool> seen(inst.color_count, false);
  for (std::size_t i = 0; i < choice.size(); ++i) {
    if (choice[i] < 0 || choice[i] >= static_cast<int>(inst.switches[i].size())) return false;
    for (int color : inst.switches[i][choice[i]]) seen[color] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

namespace {

using Mask = std::uint64_t;

struct Option {
  Mask mask;
  int index;
};

class SscSearch {
 public:
  explicit SscSearch(const SSCInstance& inst) : k_(static_cast<int>(inst.switches.size())) {
    full_ = inst.color_count == 64 ? ~Mask{0} : (Mask{1} << inst.color_count) - 1;
    for (const Switch& s : inst.switches) {
      std::vector<Option> opts;
      for (int j = 0; j < static_cast<int>(s.size()); ++j) {
        Mask m = 0;
        for (int color : s[j]) m |= Mask{1} << color;
        if (std::none_of(opts.begin(), opts.end(), [m](const Option& o) { return o.mask == m; }))
          opts.push_back({m, j});
      }
      options_.push_back(std::move(opts));
    }
    suffix_.assign(k_ + 1, 0);
    for (int i = k_ - 1; i >= 0; --i) {
      suffix_[i] = suffix_[i + 1];
      for (const Option& o : options_[i]) suffix_[i] |= o.mask;
    }
    choice_.assign(k_, 0);
  }

  bool run() { return go(0, 0); }
  const SscChoice& choice() const { return choice_; }

 private:
  bool go(int i, Mask covered) {
    if ((covered | suffix_[i]) != full_) return false;
    if (i == k_) return true;
    for (const Option& o : options_[i]) {
      choice_[i] = o.index;
      if (go(i + 1, covered | o.mask)) return true;
    }
    return false;
  }

  int k_;
  Mask full_ = 0;
  std::vector<std::vector<Option>> options_;
  std::vector<Mask> suffix_;  // colors reachable from switch i on
  SscChoice choice_;
};

}  // namespace

std::optional<SscChoice> solve_ssc(const SSCInstance& inst) {
  validate(inst);
  if (inst.color_count > 64) throw std::invalid_argument("solve_ssc: more than 64 colors");
  SscSearch search(inst);
  if (!search.run()) return std::nullopt;
  return search.choice();
}

SSCInstance canonical_yes_ssc() { return SSCInstance{1, {{{0}}}}; }
SSCInstance canonical_no_ssc() { return SSCInstance{1, {{{}}}}; }

SSCInstance setcover_to_ssc(int universe_size, const std::vector<std::vector<int>>& family,
                            int k) {
  if (k < 0 || k > static_cast<int>(family.size()))
    throw std::invalid_argument("setcover_to_ssc: k exceeds the family size");
  Switch s;
  for (const auto& set : family) s.push_back(set);
  SSCInstance out{universe_size, std::vector<Switch>(k, s)};
  validate(out);
  return out;
}

SSCInstance compose_ssc(const std::vector<SSCInstance>& instances, CompositionStats* stats) {
  if (instances.empty()) throw std::invalid_argument("compose_ssc: no instances");
  const int c = instances[0].color_count;
  const int k = static_cast<int>(instances[0].switches.size());
  for (const SSCInstance& inst : instances) {
    validate(inst);
    if (inst.color_count != c || static_cast<int>(inst.switches.size()) != k)
      throw std::invalid_argument("compose_ssc: instances differ in (c, k)");
  }
  const std::uint64_t m = instances.size();
  CompositionStats local;
  CompositionStats& st = stats ? *stats : local;
  st = {};
  if (m == 1) return instances[0];

  const std::int64_t ck = static_cast<std::int64_t>(c) * k;
  if (ck < 63 && m >= (std::uint64_t{1} << ck)) {
    st.solved_directly = true;
    for (const SSCInstance& inst : instances)
      if (solve_ssc(inst)) return canonical_yes_ssc();
    return canonical_no_ssc();
  }

  const int bits = std::bit_width(m - 1);  // ceil(log2 m)
  st.selector_bits = bits;
  // o^d_{a,b} for switch a and bit b, both 0-based.
  auto tag = [&](int a, int b, int d) { return c + 2 * (a * bits + b) + d; };

  SSCInstance out;
  out.color_count = c + 2 * k * bits;
  out.switches.assign(k, {});
  for (std::uint64_t i = 0; i < m; ++i)
    for (int a = 0; a < k; ++a)
      for (Position p : instances[i].switches[a]) {
        for (int b = 0; b < bits; ++b) p.push_back(tag(a, b, static_cast<int>((i >> b) & 1)));
        out.switches[a].push_back(std::move(p));
      }
  for (int b = 0; b < bits; ++b) {
    Switch selector(2);
    for (int d = 0; d < 2; ++d)
      for (int a = 0; a < k; ++a) selector[d].push_back(tag(a, b, d));
    out.switches.push_back(std::move(selector));
  }
  return out;
}

// --- two-dimensional EE ------------------------------------------------------

void validate(const PlanarEEInstance& inst) {
  if (static_cast<int>(inst.points.size()) != inst.graph.vertex_count())
    throw std::invalid_argument("2dee: one point per vertex required");
  std::vector<Point> sorted = inst.points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("2dee: points must be distinct");
  if (inst.extension_budget < 0) throw std::invalid_argument("2dee: negative budget");
}

EEInstance twodee_to_ee(const PlanarEEInstance& inst) {
  validate(inst);
  const int n = inst.graph.vertex_count();
  EEInstance out{inst.graph, WeightMatrix(n), inst.extension_budget};
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && dominates(inst.points[u], inst.points[v])) out.weights.at(u, v) = 1;
  return out;
}

SSCInstance normalize_ssc(const SSCInstance& inst) {
  validate(inst);
  const int c = inst.color_count;
  SSCInstance out{c, {}};
  if (c == 0) {
    // Every position is empty and each switch keeps one of them.
    for (std::size_t i = 0; i < inst.switches.size(); ++i) out.switches.push_back({{}});
    return out;
  }
  for (const Switch& s : inst.switches) {
    Switch kept;
    for (Position p : s) {
      std::sort(p.begin(), p.end());
      p.erase(std::unique(p.begin(), p.end()), p.end());
      if (p.empty()) continue;
      while (static_cast<int>(p.size()) < c) p.push_back(p.front());
      std::sort(p.begin(), p.end());
      kept.push_back(std::move(p));
    }
    if (!kept.empty()) out.switches.push_back(std::move(kept));
  }
  std::size_t l = 0;
  for (const Switch& s : out.switches) l = std::max(l, s.size());
  for (Switch& s : out.switches)
    while (s.size() < l) s.push_back(s.front());
  return out;
}

Point TwoDeeLayout::v1_point(int i) const {
  const std::int64_t cl = static_cast<std::int64_t>(c) * l;
  return {8 * cl * i, 8 * cl * (k - i + 1)};
}

Point TwoDeeLayout::v2_point(int i) const {
  const std::int64_t cl = static_cast<std::int64_t>(c) * l;
  Point p = v1_point(i);
  return {p.x - 4 * cl, p.y - 4 * cl};
}

Point TwoDeeLayout::w_point(int i, int j, int m) const {
  const std::int64_t cl = static_cast<std::int64_t>(c) * l;
  Point p = v2_point(i);
  return {p.x + 2 * c * (2 * j - 1) - 2 * (m - 1),
          p.y + 4 * cl - 2 * c * (2 * j - 2) - 2 * (m - 1)};
}

PlanarEEInstance canonical_no_2dee() {
  return PlanarEEInstance{{{0, 1}, {1, 0}}, DirectedMultigraph(2), 0};
}

PlanarEEInstance canonical_yes_2dee() {
  return PlanarEEInstance{{{0, 0}}, DirectedMultigraph(1), 0};
}

TwoDeeImage ssc_to_2dee_image(const SSCInstance& inst) {
  TwoDeeImage out;
  out.normalized = normalize_ssc(inst);
  const SSCInstance& norm = out.normalized;
  const int c = norm.color_count;
  const int k = static_cast<int>(norm.switches.size());
  if (c == 0) {
    out.instance = canonical_yes_2dee();
    return out;
  }
  std::vector<bool> present(c, false);
  for (const Switch& s : norm.switches)
    for (const Position& p : s)
      for (int color : p) present[color] = true;
  if (k == 0 || std::find(present.begin(), present.end(), false) != present.end()) {
    out.instance = canonical_no_2dee();
    return out;
  }

  TwoDeeLayout lay{k, static_cast<int>(norm.switches[0].size()), c};
  std::vector<Point> points(lay.vertex_count());
  points[lay.v1(0)] = lay.v1_point(0);
  points[lay.v2(k + 1)] = lay.v2_point(k + 1);
  ArcMultiset arcs;
  for (int i = 1; i <= k; ++i) {
    points[lay.v1(i)] = lay.v1_point(i);
    points[lay.v2(i)] = lay.v2_point(i);
    arcs.push_back({lay.v1(i - 1), lay.v1(i)});
    arcs.push_back({lay.v2(i + 1), lay.v2(i)});
    arcs.push_back({lay.v2(i), lay.v1(i)});
  }
  arcs.push_back({lay.v1(k), lay.v2(k + 1)});
  arcs.push_back({lay.v2(1), lay.v1(0)});

  std::vector<std::vector<Vertex>> by_color(c);
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= lay.l; ++j)
      for (int m = 1; m <= c; ++m) {
        points[lay.w(i, j, m)] = lay.w_point(i, j, m);
        by_color[norm.switches[i - 1][j - 1][m - 1]].push_back(lay.w(i, j, m));
      }
  // A color with a single vertex is its own component already.
  for (const auto& ws : by_color) {
    const int p = static_cast<int>(ws.size());
    if (p < 2) continue;
    for (int q = 0; q < p; ++q) arcs.push_back({ws[q], ws[(q + 1) % p]});
  }
  out.instance = PlanarEEInstance{std::move(points), DirectedMultigraph(lay.vertex_count(), arcs),
                                  static_cast<std::int64_t>(c + 1) * k};
  out.layout = lay;
  validate(out.instance);
  return out;
}

PlanarEEInstance ssc_to_2dee(const SSCInstance& inst) { return ssc_to_2dee_image(inst).instance; }

}  // namespace eulerext
