#include "cbm_helpers.hpp"
#include "doctest.h"
#include "eulerext/generators.hpp"
#include "eulerext/reductions.hpp"
#include "helpers.hpp"

using namespace eulerext;
using test::make_ee;

namespace {

// Three components {0,1}, {2,3}, {4,5}, each a single arc; unit weights.
EEInstance three_arcs() { return make_ee(6, {{0, 1}, {2, 3}, {4, 5}}); }

// Preprocessed random instance with an enumerated advice, cycles eliminated.
std::optional<EEAInstance> random_eeca(std::uint64_t seed, int max_b = 3) {
  EEGenParams p;
  p.seed = seed;
  p.n = 3 + seed % 4;
  p.c = std::min<int>(p.n, 2 + seed % 2);
  p.max_b = max_b;
  auto [pre, map] = preprocess(random_ee(p));
  pre.omega_max = kInf;
  auto advs = enumerate_min_connecting_advices(components(pre.graph).c);
  auto elim = eliminate_cycle_hints(pre, advs[seed % advs.size()]);
  if (!elim) return std::nullopt;
  return EEAInstance{elim->instance, elim->advice};
}

}  // namespace

TEST_SUITE("reductions") {

TEST_CASE("eeca_to_cbm with length-one hints") {
  EEAInstance src{three_arcs(), Advice{{Hint{HintKind::path, {0, 1}}, Hint{HintKind::path, {1, 2}}}}};
  auto [cbm, back] = eeca_to_cbm(src);
  CHECK(cbm.left_count == 3);
  CHECK(cbm.right_count == 3);
  CHECK(cbm.cell_count == 3);
  CHECK(cbm.joins.size() == 2);
  CHECK(back.realizations.empty());
}

TEST_CASE("eeca_to_cbm long-hint gadget") {
  EEAInstance src{three_arcs(), Advice{{Hint{HintKind::path, {0, 1, 2}}}}};
  auto [cbm, back] = eeca_to_cbm(src);
  CHECK(cbm.cell_count == 4);
  CHECK(cbm.joins.size() == 2);
  // One open and one closed gadget vertex per candidate pair: I+ of
  // component 0 times I- of component 2, in both orientations.
  CHECK(back.realizations.size() == 2);
  CHECK(cbm.left_count == 3 + 2);
  CHECK(cbm.right_count == 3 + 2);
  int gadget_cell = -1;
  for (int v = 0; v < cbm.vertex_count(); ++v) {
    bool is_gadget = v < cbm.left_count ? back.left_vertex[v] < 0
                                        : back.right_vertex[v - cbm.left_count] < 0;
    if (!is_gadget) continue;
    if (gadget_cell < 0) gadget_cell = cbm.cell_of[v];
    CHECK(cbm.cell_of[v] == gadget_cell);
  }
  int touching = 0;
  for (const Join& j : cbm.joins) touching += j.first == gadget_cell || j.second == gadget_cell;
  CHECK(touching == 2);

  auto m = solve_cbm_general(cbm);
  REQUIRE(m);
  Extension e = matching_to_extension(src, back, *m);
  CHECK(e.weight == matching_weight(*m));
  CHECK(verify_extension(src.base, e.arcs));
  CHECK(heeds_advice(src.base, src.advice, e.arcs));
  CHECK(e.weight == test::weight_or(solve_ee_cfa(src.base, src.advice)));
}

TEST_CASE("eeca_to_cbm rejects cycle hints") {
  EEAInstance src{make_ee(3, {}), Advice{{Hint{HintKind::cycle, {0, 1, 2, 0}}}}};
  CHECK_THROWS(eeca_to_cbm(src));
}

TEST_CASE("matching_to_extension preserves weight and heeds the advice") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto src = random_eeca(seed);
    if (!src) continue;
    auto [cbm, back] = eeca_to_cbm(*src);
    auto m = solve_cbm_general(cbm);
    CHECK(test::weight_or(m) == test::weight_or(solve_ee_cfa(src->base, src->advice)));
    if (!m) continue;
    ++checked;
    Extension e = matching_to_extension(*src, back, *m);
    CHECK(e.weight == matching_weight(*m));
    CHECK(arc_weight(src->base, e.arcs) == e.weight);
    CHECK(verify_extension(src->base, e.arcs));
    CHECK(heeds_advice(src->base, src->advice, e.arcs));
  }
  CHECK(checked > 50);
}

TEST_CASE("cbm_to_eea") {
  CBMInstance one = test::make_cbm(1, 1, {{0, 0, 3}}, {0}, {0}, 1, {});
  auto [img, back] = cbm_to_eea(one);
  CHECK(img.base.n() == 2);
  CHECK(components(img.base.graph).c == 1);
  auto e = solve_eea(img);
  REQUIRE(e);
  CHECK(e->weight == 3);
  CHECK(e->arcs == ArcMultiset{{1, 0}});
  CHECK(extension_to_matching(back, img, e->arcs) == Matching{{0, 0, 3}});
}

TEST_CASE("cbm_to_eea shape and equivalence") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    CbmGenParams p;
    p.seed = seed;
    p.n = 1 + seed % 5;
    p.cells = 1 + seed % 4;
    p.joins = seed % 4;
    p.degree2 = seed % 2;
    CBMInstance inst = random_cbm(p);
    CBMInstance legal = legalize(inst);
    auto [img, back] = cbm_to_eea(inst);
    std::vector<int> size(legal.cell_count, 0);
    for (int c : legal.cell_of) ++size[c];
    int nonempty = 0;
    for (int s : size) nonempty += s > 0;
    CHECK(components(img.base.graph).c == nonempty);
    for (const Hint& h : img.advice.hints) CHECK(h.length() == 1);

    Weight want = test::brute_cbm(inst);
    auto e = solve_eea(img);
    CHECK(test::weight_or(e) == want);
    if (e) {
      Matching m = extension_to_matching(back, img, e->arcs);
      CHECK(verify_matching(inst, m));
      CHECK(matching_weight(m) == want);
    }
  }
}

TEST_CASE("eea_to_ee") {
  EEInstance base = three_arcs();
  auto [same, back0] = eea_to_ee(EEAInstance{base, Advice{}});
  CHECK(same == base);

  EEAInstance src{base, Advice{{Hint{HintKind::path, {0, 1, 2}}}}};
  auto [img, back] = eea_to_ee(src);
  CHECK(img.n() > base.n());
  auto want = solve_eea(src);
  auto got = solve_ee(img);
  CHECK(test::weight_or(got) == test::weight_or(want));
  REQUIRE(got);
  Extension lifted = ee_to_eea_extension(src, back, got->arcs);
  CHECK(verify_eea(src, lifted.arcs));
  CHECK(lifted.weight == got->weight);

  CHECK_THROWS(eea_to_ee(EEAInstance{base, Advice{{Hint{HintKind::cycle, {0, 1, 2, 0}}}}}));
}

TEST_CASE("eea_to_ee equivalence on random instances") {
  int checked = 0;
  // Gadget images grow quickly; larger ones are left to the kernel sweep.
  int skipped = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    auto src = random_eeca(seed, 2);
    if (!src) continue;
    auto [img, back] = eea_to_ee(*src);
    if (img.n() > 16) {
      ++skipped;
      continue;
    }
    auto want = solve_eea(*src);
    auto got = solve_ee(img);
    CHECK(test::weight_or(got) == test::weight_or(want));
    if (got && want) {
      ++checked;
      Extension lifted = ee_to_eea_extension(*src, back, got->arcs);
      CHECK(verify_eea(*src, lifted.arcs));
      CHECK(lifted.weight == got->weight);
    }
  }
  CHECK(checked > 40);
  CHECK(skipped < 100);
}

TEST_CASE("kernelize_eeca") {
  constexpr double kAlpha = 16;
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    auto src = random_eeca(seed);
    if (!src) continue;
    EEAInstance k = kernelize_eeca(*src);
    for (const Hint& h : k.advice.hints) CHECK(h.length() == 1);
    const int b = balance_profile(src->base.graph).b;
    const int c = components(src->base.graph).c;
    if (b > 0) CHECK(k.base.n() <= kAlpha * b * b * c);
    CHECK(test::weight_or(solve_eea(k)) == test::weight_or(solve_ee_cfa(src->base, src->advice)));
    // Kernelizing a kernel stays within the bound.
    EEAInstance kk = kernelize_eeca(k);
    const int kb = balance_profile(k.base.graph).b;
    const int kc = components(k.base.graph).c;
    if (kb > 0) CHECK(kk.base.n() <= kAlpha * kb * kb * kc);
  }
}

TEST_CASE("hc_to_ee") {
  EEInstance tri = hc_to_ee(DirectedMultigraph(3, {{0, 1}, {1, 2}, {2, 0}}));
  CHECK(tri.n() == 6);
  CHECK(tri.graph.arc_count() == 6);
  CHECK(balance_profile(tri.graph).b == 0);
  CHECK(tri.omega_max == 3);
  auto e = oracle_ee(tri);
  REQUIRE(e);
  CHECK(e->weight == 3);

  EEInstance star = hc_to_ee(DirectedMultigraph(4, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {0, 3}, {3, 0}}));
  OracleOptions big;
  big.max_vertices = 8;
  CHECK_FALSE(oracle_ee(star, big));

  CHECK_THROWS(hc_to_ee(DirectedMultigraph(2, {{0, 1}, {1, 0}})));
}

TEST_CASE("rp_to_ee") {
  RPInstance rp{DirectedMultigraph(3, {{0, 1}, {1, 2}, {2, 0}}), {{0, 1}, {1, 2}, {2, 0}},
                WeightMatrix(3, 2), 6};
  EEInstance ee = rp_to_ee(rp);
  CHECK(components(ee.graph).c == 1);
  auto e = solve_ee(ee);
  REQUIRE(e);
  CHECK(e->arcs.empty());

  // G<R> has two components plus an isolated vertex.
  RPInstance split{DirectedMultigraph(5, {{0, 1}, {1, 0}, {2, 3}, {1, 2}, {3, 1}}),
                   {{0, 1}, {2, 3}}, WeightMatrix(5, 1), kInf};
  CHECK(components(rp_to_ee(split).graph).c == 3);
}

TEST_CASE("ee_to_rp round trip keeps the answer") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    EEGenParams p;
    p.seed = seed;
    p.n = 3 + seed % 3;
    p.c = 1 + seed % 2;
    p.inf_percent = 30;
    EEInstance inst = random_ee(p);
    auto ref = oracle_ee(inst);
    inst.omega_max = ref ? ref->weight + static_cast<Weight>(seed % 3) - 1 : 20;
    inst.omega_max = std::max<Weight>(inst.omega_max, 0);
    bool want = oracle_ee(inst).has_value();
    RPInstance rp = ee_to_rp(inst);
    CHECK_NOTHROW(validate(rp));
    OracleOptions big;
    big.max_vertices = 14;
    CHECK(oracle_ee(rp_to_ee(rp), big).has_value() == want);
  }
}

TEST_CASE("sat3_to_cbm") {
  Cnf phi{2, {{-1, 2}, {-1, -2}}};
  CBMInstance img = sat3_to_cbm(phi);
  CHECK(img.edges.size() == 2u * 4 * 2);
  CHECK(img.vertex_count() == 2 * 4 * 2);
  CHECK(img.cell_count == 3);
  CHECK(img.joins.size() == 2);
  CHECK(img.omega_max == 1);
  CHECK(oracle_cbm(img));

  CHECK_FALSE(oracle_cbm(sat3_to_cbm(Cnf{1, {{1}, {-1}}})));
  CHECK_THROWS(sat3_to_cbm(Cnf{1, {}}));
}

TEST_CASE("sat3_to_cbm agrees with truth tables") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Cnf f = random_3cnf(3, 2 + seed % 4, seed);
    bool sat = false;
    for (int mask = 0; mask < 8 && !sat; ++mask) {
      bool all = true;
      for (const auto& cl : f.clauses) {
        bool any = false;
        for (int lit : cl) any = any || (((mask >> (std::abs(lit) - 1)) & 1) == (lit > 0));
        all = all && any;
      }
      sat = all;
    }
    CHECK(solve_cbm_degree2(sat3_to_cbm(f)).has_value() == sat);
  }
}

}
