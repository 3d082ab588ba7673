#include <fstream>
#include <sstream>

#include "cbm_helpers.hpp"
#include "doctest.h"
#include "eulerext/generators.hpp"
#include "eulerext/io.hpp"

using namespace eulerext;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(EULEREXT_FIXTURES) + "/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int error_line(auto&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("format tags") {
  CHECK(format_tag("# comment\n\nEE 1\n") == "EE");
  CHECK(format_tag("c hello\np cnf 1 1\n1 0\n") == "CNF");
  CHECK(format_tag("").empty());
}

TEST_CASE("EE round trip") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    EEGenParams p;
    p.seed = seed;
    p.n = 1 + seed % 7;
    p.c = 1;
    EEInstance inst = random_ee(p);
    if (seed % 3 == 0) inst.omega_max = kInf;
    CHECK(parse_ee(render(inst)) == inst);
  }
}

TEST_CASE("EE fixture") {
  EEInstance inst = parse_ee(fixture("two_cycles.ee"));
  CHECK(inst.n() == 4);
  CHECK(inst.graph.arc_count() == 4);
  CHECK(inst.omega_max == 10);
  CHECK(inst.weights.at(0, 2) == 1);
  auto e = solve_ee(inst);
  REQUIRE(e);
  CHECK(e->weight == 2);
}

TEST_CASE("EE parse errors carry line numbers") {
  CHECK(error_line([] { parse_ee("EE 1\nvertices 0\n"); }) == 2);
  CHECK(error_line([] { parse_ee("EE 1\nvertices 2\narcs 1\n0 5\n"); }) == 4);
  CHECK(error_line([] { parse_ee("EE 1\nvertices 2\narcs 1\n0 0\n"); }) > 0);
  CHECK(error_line([] { parse_ee("EE 1\nvertices 2\nweights 1\n0 1 -3\n"); }) == 4);
  CHECK(error_line([] { parse_ee("EE 1\nvertices 2\nvertices 2\n"); }) == 3);
  CHECK(error_line([] { parse_ee("CBM 1\n"); }) == 1);
  CHECK(error_line([] { parse_ee("EE 1\nvertices 2\narcs 2\n0 1\n"); }) > 0);
}

TEST_CASE("RP round trip") {
  RPInstance rp{DirectedMultigraph(3, {{0, 1}, {1, 2}, {2, 0}, {0, 1}}), {{0, 1}, {2, 0}},
                WeightMatrix(3, 4), 12};
  rp.weights.at(1, 2) = kInf;
  CHECK(parse_rp(render(rp)) == rp);
}

TEST_CASE("EEA round trip") {
  EEInstance base{DirectedMultigraph(6, {{0, 1}, {2, 3}, {4, 5}}), WeightMatrix(6, 2), 9};
  EEAInstance inst{base, Advice{{Hint{HintKind::path, {0, 1, 2}}, Hint{HintKind::cycle, {0, 2, 1, 0}}}}};
  CHECK(parse_eea(render(inst)) == inst);
}

TEST_CASE("CBM round trip and fixture") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    CbmGenParams p;
    p.seed = seed;
    p.n = 1 + seed % 5;
    p.degree2 = seed % 2;
    CBMInstance inst = random_cbm(p);
    CHECK(parse_cbm(render(inst)) == inst);
  }
  CBMInstance fig = parse_cbm(fixture("figure.cbm"));
  CHECK(fig == test::figure_cbm());
}

TEST_CASE("SSC round trip and fixture") {
  SSCInstance inst{3, {{{0, 1}, {}}, {{2}, {1, 2}, {0}}}};
  CHECK(parse_ssc(render(inst)) == inst);
  SSCInstance small = parse_ssc(fixture("small.ssc"));
  CHECK(small == SSCInstance{3, {{{0, 1}, {2}}, {{}, {1, 2}}}});
  CHECK(error_line([] { parse_ssc("SSC 1\ncolors 1\nswitches 1\nswitch 1\n3\n"); }) == 5);
}

TEST_CASE("2DEE round trip") {
  PlanarEEInstance inst = ssc_to_2dee(SSCInstance{2, {{{0, 1}}, {{1}, {0}}}});
  CHECK(parse_2dee(render(inst)) == inst);
  CHECK(error_line([] { parse_2dee("2DEE 1\npoints 2\n0 0\n0 0\narcs 0\nbudget 0\n"); }) > 0);
}

TEST_CASE("HC, set cover and CNF") {
  DirectedMultigraph g = parse_hc(fixture("cycle4.hc"));
  CHECK(g == DirectedMultigraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  CHECK(parse_hc(render_hc(g)) == g);

  SetCoverInstance sc = parse_setcover(fixture("cover.setcover"));
  CHECK(sc == SetCoverInstance{3, {{0, 1}, {1, 2}, {2}}, 2});
  CHECK(parse_setcover(render(sc)) == sc);

  Cnf phi = parse_cnf(fixture("phi.cnf"));
  CHECK(phi == Cnf{2, {{-1, 2}, {-1, -2}}});
  CHECK(parse_cnf(render(phi)) == phi);
  CHECK(parse_cnf(fixture("contradiction.cnf")) == Cnf{1, {{1}, {-1}}});
  CHECK(error_line([] { parse_cnf("p cnf 1 1\n2 0\n"); }) == 2);
}

TEST_CASE("certificates") {
  ArcMultiset arcs{{0, 2}, {2, 0}, {2, 0}};
  CHECK(parse_arcs(render_arcs(arcs)) == arcs);

  CBMInstance fig = test::figure_cbm();
  Matching m{{0, 0, 1}, {1, 1, 1}, {2, 2, 1}, {3, 3, 1}};
  CHECK(parse_matching(render(m), fig) == m);
  Matching bogus = parse_matching("edges 1\n3 0\n", fig);
  REQUIRE(bogus.size() == 1);
  CHECK(is_inf(bogus[0].weight));

  SscChoice choice{0, 2, 1};
  CHECK(parse_choice(render_choice(choice)) == choice);
}

}
