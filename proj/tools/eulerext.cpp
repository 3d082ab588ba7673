#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "eulerext/cbm.hpp"
#include "eulerext/ee_solver.hpp"
#include "eulerext/generators.hpp"
#include "eulerext/io.hpp"
#include "eulerext/reductions.hpp"
#include "eulerext/ssc.hpp"

using namespace eulerext;
using json = nlohmann::json;

namespace {

constexpr int kYes = 0, kNo = 1, kError = 2;

struct Options {
  bool json = false;
  std::string out;
  std::uint64_t seed = 1;
};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << text;
}

json arcs_json(const ArcMultiset& arcs) {
  json a = json::array();
  for (const Arc& x : arcs) a.push_back({x.from, x.to});
  return a;
}

json ee_stats(const EEInstance& inst) {
  auto prof = balance_profile(inst.graph);
  return {{"n", inst.n()}, {"m", inst.graph.arc_count()}, {"b", prof.b},
          {"c", components(inst.graph).c}};
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// Writes either JSON or the certificate text preceded by a comment line.
int report(const Options& o, bool yes, json result, const std::string& summary,
           const std::string& certificate) {
  if (o.json) {
    result["answer"] = yes ? "yes" : "no";
    emit(o, result.dump(2) + "\n");
  } else {
    emit(o, "# " + summary + "\n" + (yes ? certificate : ""));
  }
  return yes ? kYes : kNo;
}

int report_extension(const Options& o, const EEInstance& inst, const std::optional<Extension>& e,
                     double ms, json extra = json::object()) {
  json r = extra;
  r["instance"] = ee_stats(inst);
  r["time_ms"] = ms;
  if (!e) return report(o, false, r, "no", "");
  r["weight"] = e->weight;
  r["certificate"] = arcs_json(e->arcs);
  return report(o, true, r, "yes weight " + std::to_string(e->weight), render_arcs(e->arcs));
}

int report_matching(const Options& o, const CBMInstance& inst, const std::optional<Matching>& m,
                    double ms) {
  json r{{"instance", {{"left", inst.left_count}, {"right", inst.right_count},
                       {"edges", inst.edges.size()}, {"cells", inst.cell_count},
                       {"joins", inst.joins.size()}}},
         {"time_ms", ms}};
  if (!m) return report(o, false, r, "no", "");
  json cert = json::array();
  for (const CbmEdge& e : *m) cert.push_back({e.left, e.right});
  r["weight"] = matching_weight(*m);
  r["certificate"] = cert;
  return report(o, true, r, "yes weight " + std::to_string(matching_weight(*m)), render(*m));
}

int verified(const Options& o, bool ok) {
  if (o.json) emit(o, json{{"valid", ok}}.dump() + "\n");
  else emit(o, ok ? "valid\n" : "invalid\n");
  return ok ? kYes : kNo;
}

// --- reductions ----------------------------------------------------------------

const std::vector<std::string> kReductions = {
    "rp-to-ee",    "ee-to-rp",   "hc-to-ee",  "sat-to-cbm",     "eeca-to-cbm", "cbm-to-eea",
    "eea-to-ee",   "setcover-to-ssc", "ssc-to-2dee", "2dee-to-ee", "legalize-cbm"};

std::string reduce(const std::string& kind, const std::string& text) {
  if (kind == "rp-to-ee") return render(rp_to_ee(parse_rp(text)));
  if (kind == "ee-to-rp") return render(ee_to_rp(parse_ee(text)));
  if (kind == "hc-to-ee") return render(hc_to_ee(parse_hc(text)));
  if (kind == "sat-to-cbm") return render(sat3_to_cbm(parse_cnf(text)));
  if (kind == "eeca-to-cbm") return render(eeca_to_cbm(parse_eea(text)).first);
  if (kind == "cbm-to-eea") return render(cbm_to_eea(parse_cbm(text)).first);
  if (kind == "eea-to-ee") return render(eea_to_ee(parse_eea(text)).first);
  if (kind == "setcover-to-ssc") {
    SetCoverInstance sc = parse_setcover(text);
    return render(setcover_to_ssc(sc.universe_size, sc.family, sc.k));
  }
  if (kind == "ssc-to-2dee") return render(ssc_to_2dee(parse_ssc(text)));
  if (kind == "2dee-to-ee") return render(twodee_to_ee(parse_2dee(text)));
  if (kind == "legalize-cbm") return render(legalize(parse_cbm(text)));
  throw std::invalid_argument("unknown reduction " + kind);
}

// --- bench -----------------------------------------------------------------------

struct BenchParams {
  int count = 20;
  int n = 6;
  int c = 2;
  int b = 3;
  int max_weight = 10;
};

int bench(const Options& o, const BenchParams& p) {
  json rows = json::array();
  std::ostringstream text;
  text << "# seed n m b c answer weight advices nodes max_branches max_hints time_ms\n";
  for (int i = 0; i < p.count; ++i) {
    EEGenParams g;
    g.n = p.n;
    g.c = std::min(p.c, p.n);
    g.max_b = p.b;
    g.max_weight = p.max_weight;
    g.seed = o.seed + i;
    EEInstance inst = random_ee(g);
    auto t0 = std::chrono::steady_clock::now();
    SolveReport rep = solve_ee_report(inst);
    double ms = ms_since(t0);
    json s = ee_stats(inst);
    json row{{"seed", g.seed}, {"instance", s}, {"answer", rep.extension ? "yes" : "no"},
             {"weight", rep.extension ? json(rep.extension->weight) : json(nullptr)},
             {"advices", rep.stats.advices}, {"nodes", rep.stats.nodes},
             {"max_branches", rep.stats.max_branches}, {"max_hints", rep.stats.max_hints},
             {"time_ms", ms}};
    rows.push_back(row);
    text << g.seed << ' ' << s["n"] << ' ' << s["m"] << ' ' << s["b"] << ' ' << s["c"] << ' '
         << (rep.extension ? "yes" : "no") << ' '
         << (rep.extension ? std::to_string(rep.extension->weight) : "-") << ' '
         << rep.stats.advices << ' ' << rep.stats.nodes << ' ' << rep.stats.max_branches << ' '
         << rep.stats.max_hints << ' ' << ms << '\n';
  }
  emit(o, o.json ? rows.dump(2) + "\n" : text.str());
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eulerian extension toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--out", o.out, "Write output to this file");
  app.add_option("--seed", o.seed, "Generator seed");

  std::string input, input2, kind;
  std::vector<std::string> inputs;
  int max_vertices = 12;
  bool use_flow = false;
  std::function<int()> action;

  auto file_command = [&](const std::string& name, const std::string& help,
                          std::function<int(const std::string&)> run) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", input, "Instance file, '-' for stdin")->required();
    sub->callback([&, run] { action = [&, run] { return run(slurp(input)); }; });
    return sub;
  };

  file_command("solve-ee", "Optimal Eulerian extension", [&](const std::string& text) {
    EEInstance inst = parse_ee(text);
    auto t0 = std::chrono::steady_clock::now();
    SolveReport rep = solve_ee_report(inst);
    json stats{{"advices", rep.stats.advices}, {"nodes", rep.stats.nodes},
               {"max_branches", rep.stats.max_branches}, {"max_hints", rep.stats.max_hints}};
    return report_extension(o, inst, rep.extension, ms_since(t0), json{{"stats", stats}});
  });
  file_command("solve-cbm", "Minimum perfect conjoining matching", [&](const std::string& text) {
    CBMInstance inst = parse_cbm(text);
    auto t0 = std::chrono::steady_clock::now();
    auto m = solve_cbm_general(inst);
    return report_matching(o, inst, m, ms_since(t0));
  });
  file_command("solve-ssc", "Switch set cover", [&](const std::string& text) {
    SSCInstance inst = parse_ssc(text);
    auto t0 = std::chrono::steady_clock::now();
    auto choice = solve_ssc(inst);
    json r{{"instance", {{"colors", inst.color_count}, {"switches", inst.switches.size()}}},
           {"time_ms", ms_since(t0)}};
    if (!choice) return report(o, false, r, "no", "");
    r["certificate"] = *choice;
    return report(o, true, r, "yes", render_choice(*choice));
  });
  file_command("solve-eea", "Optimal extension heeding an advice", [&](const std::string& text) {
    EEAInstance inst = parse_eea(text);
    auto t0 = std::chrono::steady_clock::now();
    auto e = solve_eea(inst);
    return report_extension(o, inst.base, e, ms_since(t0));
  });
  auto* oracle = file_command("oracle-ee", "Brute-force EE optimum", [&](const std::string& text) {
    EEInstance inst = parse_ee(text);
    auto t0 = std::chrono::steady_clock::now();
    OracleOptions opts;
    opts.max_vertices = max_vertices;
    auto e = use_flow ? oracle_ee_flow(inst) : oracle_ee(inst, opts);
    return report_extension(o, inst, e, ms_since(t0));
  });
  oracle->add_option("--max-vertices", max_vertices, "Refuse larger instances")
      ->capture_default_str();
  oracle->add_flag("--flow", use_flow,
                   "Enumerate joining arcs and solve a transportation problem instead; "
                   "no vertex cap");
  file_command("oracle-cbm", "Brute-force CBM optimum", [&](const std::string& text) {
    CBMInstance inst = parse_cbm(text);
    auto t0 = std::chrono::steady_clock::now();
    auto m = oracle_cbm(inst);
    return report_matching(o, inst, m, ms_since(t0));
  });
  file_command("preprocess", "Split vertices and take the metric closure",
               [&](const std::string& text) {
                 emit(o, render(preprocess(parse_ee(text)).first));
                 return kYes;
               });
  file_command("kernelize-eeca", "Kernel of an EE instance with cycle-free advice",
               [&](const std::string& text) {
                 emit(o, render(kernelize_eeca(parse_eea(text))));
                 return kYes;
               });

  auto* red = app.add_subcommand("reduce", "Instance transformation");
  red->add_option("kind", kind, "Reduction")->required()->check(CLI::IsMember(kReductions));
  red->add_option("file", input, "Instance file, '-' for stdin")->required();
  red->callback([&] {
    action = [&] {
      emit(o, reduce(kind, slurp(input)));
      return kYes;
    };
  });

  auto* comp = app.add_subcommand("compose-ssc", "OR-composition of SSC instances");
  comp->add_option("files", inputs, "Instances with equal colors and switches")->required();
  comp->callback([&] {
    action = [&] {
      std::vector<SSCInstance> batch;
      for (const auto& f : inputs) batch.push_back(parse_ssc(slurp(f)));
      emit(o, render(compose_ssc(batch)));
      return kYes;
    };
  });

  EEGenParams ee_gen;
  CbmGenParams cbm_gen;
  SscGenParams ssc_gen;
  int cnf_vars = 3, cnf_clauses = 4;
  auto* gen = app.add_subcommand("gen", "Seeded random instance");
  gen->add_option("kind", kind, "Instance kind")
      ->required()
      ->check(CLI::IsMember({"ee", "cbm", "ssc", "cnf"}));
  gen->add_option("--n", ee_gen.n, "EE vertices")->capture_default_str();
  gen->add_option("--c", ee_gen.c, "EE components")->capture_default_str();
  gen->add_option("--b", ee_gen.max_b, "EE maximum b")->capture_default_str();
  gen->add_option("--max-weight", ee_gen.max_weight, "Largest finite weight")
      ->capture_default_str();
  gen->add_option("--side", cbm_gen.n, "CBM vertices per side")->capture_default_str();
  gen->add_option("--cells", cbm_gen.cells, "CBM cells")->capture_default_str();
  gen->add_option("--joins", cbm_gen.joins, "CBM joins")->capture_default_str();
  gen->add_option("--colors", ssc_gen.colors, "SSC colors")->capture_default_str();
  gen->add_option("--switches", ssc_gen.switches, "SSC switches")->capture_default_str();
  gen->add_option("--positions", ssc_gen.max_positions, "SSC positions per switch")
      ->capture_default_str();
  gen->add_option("--variables", cnf_vars, "CNF variables")->capture_default_str();
  gen->add_option("--clauses", cnf_clauses, "CNF clauses")->capture_default_str();
  gen->callback([&] {
    action = [&] {
      if (kind == "ee") {
        ee_gen.seed = o.seed;
        emit(o, render(random_ee(ee_gen)));
      } else if (kind == "cbm") {
        cbm_gen.seed = o.seed;
        cbm_gen.max_weight = ee_gen.max_weight;
        emit(o, render(random_cbm(cbm_gen)));
      } else if (kind == "ssc") {
        ssc_gen.seed = o.seed;
        emit(o, render(random_ssc(ssc_gen)));
      } else {
        emit(o, render(random_3cnf(cnf_vars, cnf_clauses, o.seed)));
      }
      return kYes;
    };
  });

  auto* ver = app.add_subcommand("verify", "Check a certificate");
  ver->add_option("kind", kind, "Instance kind")
      ->required()
      ->check(CLI::IsMember({"ee", "eea", "cbm", "ssc", "2dee"}));
  ver->add_option("instance", input, "Instance file")->required();
  ver->add_option("certificate", input2, "Certificate file")->required();
  ver->callback([&] {
    action = [&] {
      std::string text = slurp(input), cert = slurp(input2);
      if (kind == "ee") return verified(o, verify_extension(parse_ee(text), parse_arcs(cert)));
      if (kind == "eea") return verified(o, verify_eea(parse_eea(text), parse_arcs(cert)));
      if (kind == "2dee")
        return verified(o, verify_extension(twodee_to_ee(parse_2dee(text)), parse_arcs(cert)));
      if (kind == "cbm") {
        CBMInstance inst = parse_cbm(text);
        return verified(o, verify_matching(inst, parse_matching(cert, inst)));
      }
      SSCInstance inst = parse_ssc(text);
      return verified(o, covers(inst, parse_choice(cert)));
    };
  });

  BenchParams bp;
  auto* ben = app.add_subcommand("bench", "Solve seeded random EE instances and record counters");
  ben->add_option("--count", bp.count, "Instances")->capture_default_str();
  ben->add_option("--n", bp.n, "Vertices")->capture_default_str();
  ben->add_option("--c", bp.c, "Components")->capture_default_str();
  ben->add_option("--b", bp.b, "Maximum b")->capture_default_str();
  ben->add_option("--max-weight", bp.max_weight, "Largest finite weight")->capture_default_str();
  ben->callback([&] { action = [&] { return bench(o, bp); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }
  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
}
