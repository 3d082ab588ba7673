#include "eulerext/io.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace eulerext {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

struct Line {
  std::vector<std::string> tokens;
  int number = 0;
};

std::vector<Line> tokenize(std::string_view text, char comment = '#') {
  std::vector<Line> out;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (auto hash = raw.find(comment); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{{}, number};
    std::istringstream in{std::string(raw)};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::string_view text, char comment = '#') : lines_(tokenize(text, comment)) {}

  bool done() const { return pos_ >= lines_.size(); }
  const Line& take() {
    if (done()) fail("unexpected end of input");
    return lines_[pos_++];
  }
  int last_line() const {
    if (lines_.empty()) return 1;
    return lines_[pos_ == 0 ? 0 : pos_ - 1].number;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(last_line(), msg); }

  // Header "TAG version"; only version 1 exists.
  int header(std::string_view tag) {
    const Line& l = take();
    if (l.tokens[0] != tag) throw ParseError(l.number, "expected header '" + std::string(tag) + " 1'");
    if (l.tokens.size() != 2) throw ParseError(l.number, "header takes exactly a version");
    if (integer(l.tokens[1], l.number) != 1)
      throw ParseError(l.number, "unsupported version " + l.tokens[1]);
    return l.number;
  }

  static long long integer(const std::string& tok, int line) {
    long long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
      throw ParseError(line, "expected an integer, got '" + tok + "'");
    return v;
  }

  static Weight weight(const std::string& tok, int line) {
    if (tok == "inf") return kInf;
    long long v = integer(tok, line);
    if (v < 0) throw ParseError(line, "negative weight");
    if (v >= kInf) throw ParseError(line, "weight too large");
    return v;
  }

  static void arity(const Line& l, std::size_t n) {
    if (l.tokens.size() != n)
      throw ParseError(l.number, "expected " + std::to_string(n) + " fields, got " +
                                     std::to_string(l.tokens.size()));
  }

  // "keyword count" then count body lines.
  std::vector<Line> counted(const Line& head) {
    arity(head, 2);
    long long count = integer(head.tokens[1], head.number);
    if (count < 0) throw ParseError(head.number, "negative count");
    std::vector<Line> body;
    for (long long i = 0; i < count; ++i) body.push_back(take());
    return body;
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

std::string weight_text(Weight w) { return is_inf(w) ? "inf" : std::to_string(w); }

int checked_vertex(const std::string& tok, int line, int n) {
  long long v = Reader::integer(tok, line);
  if (v < 0 || v >= n) throw ParseError(line, "vertex " + tok + " out of range");
  return static_cast<int>(v);
}

// Sections shared by the EE-based formats. Extra keywords go to `extra`,
// which returns false for unknown ones.
struct EeSections {
  int n = -1;
  std::vector<Line> arcs, weights;
  Weight default_weight = kInf;
  Weight omega_max = kInf;
  std::set<std::string> seen;
};

using ExtraHandler = std::function<bool(const Line&, Reader&)>;

EeSections read_ee_sections(Reader& r, const ExtraHandler& extra) {
  EeSections s;
  while (!r.done()) {
    const Line& l = r.take();
    const std::string& key = l.tokens[0];
    if (s.seen.count(key)) throw ParseError(l.number, "duplicate section '" + key + "'");
    s.seen.insert(key);
    if (key == "vertices") {
      Reader::arity(l, 2);
      long long n = Reader::integer(l.tokens[1], l.number);
      if (n <= 0) throw ParseError(l.number, "vertex count must be positive");
      s.n = static_cast<int>(n);
    } else if (key == "arcs") {
      s.arcs = r.counted(l);
    } else if (key == "weights") {
      s.weights = r.counted(l);
    } else if (key == "default-weight") {
      Reader::arity(l, 2);
      s.default_weight = Reader::weight(l.tokens[1], l.number);
    } else if (key == "omega-max") {
      Reader::arity(l, 2);
      s.omega_max = Reader::weight(l.tokens[1], l.number);
    } else if (!extra(l, r)) {
      throw ParseError(l.number, "unknown section '" + key + "'");
    }
  }
  if (s.n < 0) r.fail("missing 'vertices' section");
  return s;
}

ArcMultiset arc_lines(const std::vector<Line>& lines, int n) {
  ArcMultiset arcs;
  for (const Line& l : lines) {
    Reader::arity(l, 2);
    Arc a{checked_vertex(l.tokens[0], l.number, n), checked_vertex(l.tokens[1], l.number, n)};
    if (a.from == a.to) throw ParseError(l.number, "self-loop");
    arcs.push_back(a);
  }
  return arcs;
}

EEInstance build_ee(const EeSections& s) {
  EEInstance inst{DirectedMultigraph(s.n, arc_lines(s.arcs, s.n)), WeightMatrix(s.n, s.default_weight),
                  s.omega_max};
  std::set<std::pair<int, int>> given;
  for (const Line& l : s.weights) {
    Reader::arity(l, 3);
    int u = checked_vertex(l.tokens[0], l.number, s.n);
    int v = checked_vertex(l.tokens[1], l.number, s.n);
    if (u == v) throw ParseError(l.number, "diagonal weight");
    if (!given.insert({u, v}).second) throw ParseError(l.number, "weight given twice");
    inst.weights.at(u, v) = Reader::weight(l.tokens[2], l.number);
  }
  return inst;
}

void render_arc_section(std::ostream& out, const char* key, const ArcMultiset& arcs) {
  out << key << ' ' << arcs.size() << '\n';
  for (const Arc& a : arcs) out << a.from << ' ' << a.to << '\n';
}

// The default is the most frequent off-diagonal weight; ties prefer inf,
// then the smaller value.
void render_ee_body(std::ostream& out, const EEInstance& inst) {
  const int n = inst.n();
  out << "vertices " << n << '\n';
  render_arc_section(out, "arcs", inst.graph.arcs());
  std::map<Weight, int> freq;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) ++freq[inst.weights.at(u, v)];
  Weight def = kInf;
  int best = freq.count(kInf) ? freq[kInf] : 0;
  for (const auto& [w, count] : freq)
    if (count > best) best = count, def = w;
  std::vector<std::string> lines;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && inst.weights.at(u, v) != def)
        lines.push_back(std::to_string(u) + ' ' + std::to_string(v) + ' ' +
                        weight_text(inst.weights.at(u, v)));
  out << "weights " << lines.size() << '\n';
  for (const auto& l : lines) out << l << '\n';
  out << "default-weight " << weight_text(def) << '\n';
  out << "omega-max " << weight_text(inst.omega_max) << '\n';
}

template <typename F>
auto rethrow_as_parse_error(int line, F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

const ExtraHandler no_extra = [](const Line&, Reader&) { return false; };

}  // namespace

std::string format_tag(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) return {};
  const std::string& first = lines[0].tokens[0];
  return first == "p" || first == "c" ? "CNF" : first;
}

// --- EE ------------------------------------------------------------------------

EEInstance parse_ee(std::string_view text) {
  Reader r(text);
  int head = r.header("EE");
  EEInstance inst = build_ee(read_ee_sections(r, no_extra));
  rethrow_as_parse_error(head, [&] { validate(inst); return 0; });
  return inst;
}

std::string render(const EEInstance& inst) {
  std::ostringstream out;
  out << "EE 1\n";
  render_ee_body(out, inst);
  return out.str();
}

// --- RP ------------------------------------------------------------------------

RPInstance parse_rp(std::string_view text) {
  Reader r(text);
  int head = r.header("RP");
  std::vector<Line> required;
  auto s = read_ee_sections(r, [&](const Line& l, Reader& rd) {
    if (l.tokens[0] != "required") return false;
    required = rd.counted(l);
    return true;
  });
  EEInstance base = build_ee(s);
  RPInstance inst{base.graph, arc_lines(required, s.n), base.weights, base.omega_max};
  inst.required = sorted_arcs(inst.required);
  rethrow_as_parse_error(head, [&] { validate(inst); return 0; });
  return inst;
}

std::string render(const RPInstance& inst) {
  std::ostringstream out;
  out << "RP 1\n";
  render_ee_body(out, EEInstance{inst.graph, inst.weights, inst.omega_max});
  render_arc_section(out, "required", sorted_arcs(inst.required));
  return out.str();
}

// --- EEA -----------------------------------------------------------------------

EEAInstance parse_eea(std::string_view text) {
  Reader r(text);
  int head = r.header("EEA");
  std::vector<Line> hints;
  auto s = read_ee_sections(r, [&](const Line& l, Reader& rd) {
    if (l.tokens[0] != "hints") return false;
    hints = rd.counted(l);
    return true;
  });
  EEAInstance inst{build_ee(s), {}};
  for (const Line& l : hints) {
    Hint h;
    if (l.tokens[0] == "path") h.kind = HintKind::path;
    else if (l.tokens[0] == "cycle") h.kind = HintKind::cycle;
    else throw ParseError(l.number, "hint kind must be 'path' or 'cycle'");
    for (std::size_t i = 1; i < l.tokens.size(); ++i)
      h.sequence.push_back(static_cast<int>(Reader::integer(l.tokens[i], l.number)));
    inst.advice.hints.push_back(std::move(h));
  }
  rethrow_as_parse_error(head, [&] { validate(inst); return 0; });
  return inst;
}

std::string render(const EEAInstance& inst) {
  std::ostringstream out;
  out << "EEA 1\n";
  render_ee_body(out, inst.base);
  out << "hints " << inst.advice.hints.size() << '\n';
  for (const Hint& h : inst.advice.hints) {
    out << (h.kind == HintKind::path ? "path" : "cycle");
    for (int x : h.sequence) out << ' ' << x;
    out << '\n';
  }
  return out.str();
}

// --- CBM -----------------------------------------------------------------------

CBMInstance parse_cbm(std::string_view text) {
  Reader r(text);
  int head = r.header("CBM");
  CBMInstance inst;
  std::set<std::string> seen;
  std::vector<Line> edges, joins;
  const Line* left_cells = nullptr;
  const Line* right_cells = nullptr;
  bool have_l = false, have_r = false, have_cells = false;
  while (!r.done()) {
    const Line& l = r.take();
    const std::string& key = l.tokens[0];
    if (!seen.insert(key).second) throw ParseError(l.number, "duplicate section '" + key + "'");
    auto count = [&](bool allow_zero) {
      Reader::arity(l, 2);
      long long v = Reader::integer(l.tokens[1], l.number);
      if (v < (allow_zero ? 0 : 1)) throw ParseError(l.number, "bad count");
      return static_cast<int>(v);
    };
    if (key == "v1") inst.left_count = count(false), have_l = true;
    else if (key == "v2") inst.right_count = count(false), have_r = true;
    else if (key == "edges") edges = r.counted(l);
    else if (key == "cells") inst.cell_count = count(false), have_cells = true;
    else if (key == "left-cells") left_cells = &l;
    else if (key == "right-cells") right_cells = &l;
    else if (key == "joins") joins = r.counted(l);
    else if (key == "omega-max") {
      Reader::arity(l, 2);
      inst.omega_max = Reader::weight(l.tokens[1], l.number);
    } else {
      throw ParseError(l.number, "unknown section '" + key + "'");
    }
  }
  if (!have_l || !have_r || !have_cells) r.fail("missing 'v1', 'v2' or 'cells' section");
  if (!left_cells || !right_cells) r.fail("missing 'left-cells' or 'right-cells'");
  auto read_cells = [&](const Line& l, int count) {
    Reader::arity(l, count + 1);
    for (int i = 1; i <= count; ++i) {
      long long c = Reader::integer(l.tokens[i], l.number);
      if (c < 0 || c >= inst.cell_count) throw ParseError(l.number, "cell id out of range");
      inst.cell_of.push_back(static_cast<int>(c));
    }
  };
  read_cells(*left_cells, inst.left_count);
  read_cells(*right_cells, inst.right_count);
  for (const Line& l : edges) {
    Reader::arity(l, 3);
    inst.edges.push_back({checked_vertex(l.tokens[0], l.number, inst.left_count),
                          checked_vertex(l.tokens[1], l.number, inst.right_count),
                          Reader::weight(l.tokens[2], l.number)});
  }
  for (const Line& l : joins) {
    Reader::arity(l, 2);
    inst.joins.push_back({checked_vertex(l.tokens[0], l.number, inst.cell_count),
                          checked_vertex(l.tokens[1], l.number, inst.cell_count)});
  }
  rethrow_as_parse_error(head, [&] { normalize(inst); return 0; });
  return inst;
}

std::string render(const CBMInstance& inst) {
  std::ostringstream out;
  out << "CBM 1\n";
  out << "v1 " << inst.left_count << "\nv2 " << inst.right_count << '\n';
  out << "edges " << inst.edges.size() << '\n';
  for (const CbmEdge& e : inst.edges)
    out << e.left << ' ' << e.right << ' ' << weight_text(e.weight) << '\n';
  out << "cells " << inst.cell_count << "\nleft-cells";
  for (int i = 0; i < inst.left_count; ++i) out << ' ' << inst.cell_of_left(i);
  out << "\nright-cells";
  for (int j = 0; j < inst.right_count; ++j) out << ' ' << inst.cell_of_right(j);
  out << "\njoins " << inst.joins.size() << '\n';
  for (const Join& j : inst.joins) out << j.first << ' ' << j.second << '\n';
  out << "omega-max " << weight_text(inst.omega_max) << '\n';
  return out.str();
}

// --- SSC -----------------------------------------------------------------------

SSCInstance parse_ssc(std::string_view text) {
  Reader r(text);
  int head = r.header("SSC");
  SSCInstance inst;
  bool have_colors = false;
  long long declared = -1;
  while (!r.done()) {
    const Line& l = r.take();
    const std::string& key = l.tokens[0];
    if (key == "colors") {
      if (have_colors) throw ParseError(l.number, "duplicate section 'colors'");
      Reader::arity(l, 2);
      long long c = Reader::integer(l.tokens[1], l.number);
      if (c < 0) throw ParseError(l.number, "negative color count");
      inst.color_count = static_cast<int>(c);
      have_colors = true;
    } else if (key == "switches") {
      if (declared >= 0) throw ParseError(l.number, "duplicate section 'switches'");
      Reader::arity(l, 2);
      declared = Reader::integer(l.tokens[1], l.number);
      if (declared < 0) throw ParseError(l.number, "negative switch count");
    } else if (key == "switch") {
      Switch s;
      for (const Line& p : r.counted(l)) {
        Position pos;
        if (!(p.tokens.size() == 1 && p.tokens[0] == "-"))
          for (const auto& tok : p.tokens) {
            long long color = Reader::integer(tok, p.number);
            if (color < 0 || (have_colors && color >= inst.color_count))
              throw ParseError(p.number, "color " + tok + " out of range");
            pos.push_back(static_cast<int>(color));
          }
        s.push_back(std::move(pos));
      }
      if (s.empty()) throw ParseError(l.number, "switch without positions");
      inst.switches.push_back(std::move(s));
    } else {
      throw ParseError(l.number, "unknown section '" + key + "'");
    }
  }
  if (!have_colors) r.fail("missing 'colors' section");
  if (declared >= 0 && declared != static_cast<long long>(inst.switches.size()))
    r.fail("switch count differs from the 'switches' section");
  rethrow_as_parse_error(head, [&] { validate(inst); return 0; });
  return inst;
}

std::string render(const SSCInstance& inst) {
  std::ostringstream out;
  out << "SSC 1\ncolors " << inst.color_count << "\nswitches " << inst.switches.size() << '\n';
  for (const Switch& s : inst.switches) {
    out << "switch " << s.size() << '\n';
    for (const Position& p : s) {
      if (p.empty()) out << '-';
      for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
      out << '\n';
    }
  }
  return out.str();
}

// --- 2DEE ----------------------------------------------------------------------

PlanarEEInstance parse_2dee(std::string_view text) {
  Reader r(text);
  int head = r.header("2DEE");
  std::vector<Line> points, arcs;
  bool have_points = false;
  std::int64_t budget = -1;
  std::set<std::string> seen;
  while (!r.done()) {
    const Line& l = r.take();
    const std::string& key = l.tokens[0];
    if (!seen.insert(key).second) throw ParseError(l.number, "duplicate section '" + key + "'");
    if (key == "points") points = r.counted(l), have_points = true;
    else if (key == "arcs") arcs = r.counted(l);
    else if (key == "budget") {
      Reader::arity(l, 2);
      budget = Reader::integer(l.tokens[1], l.number);
      if (budget < 0) throw ParseError(l.number, "negative budget");
    } else {
      throw ParseError(l.number, "unknown section '" + key + "'");
    }
  }
  if (!have_points || points.empty()) r.fail("missing or empty 'points' section");
  if (budget < 0) r.fail("missing 'budget' section");
  PlanarEEInstance inst;
  for (const Line& l : points) {
    Reader::arity(l, 2);
    inst.points.push_back({Reader::integer(l.tokens[0], l.number), Reader::integer(l.tokens[1], l.number)});
  }
  const int n = static_cast<int>(inst.points.size());
  inst.graph = DirectedMultigraph(n, arc_lines(arcs, n));
  inst.extension_budget = budget;
  rethrow_as_parse_error(head, [&] { validate(inst); return 0; });
  return inst;
}

std::string render(const PlanarEEInstance& inst) {
  std::ostringstream out;
  out << "2DEE 1\npoints " << inst.points.size() << '\n';
  for (const Point& p : inst.points) out << p.x << ' ' << p.y << '\n';
  render_arc_section(out, "arcs", inst.graph.arcs());
  out << "budget " << inst.extension_budget << '\n';
  return out.str();
}

// --- HC ------------------------------------------------------------------------

DirectedMultigraph parse_hc(std::string_view text) {
  Reader r(text);
  r.header("HC");
  auto s = read_ee_sections(r, no_extra);
  if (!s.weights.empty() || s.seen.count("default-weight") || s.seen.count("omega-max"))
    r.fail("HC files take only 'vertices' and 'arcs'");
  return DirectedMultigraph(s.n, arc_lines(s.arcs, s.n));
}

std::string render_hc(const DirectedMultigraph& g) {
  std::ostringstream out;
  out << "HC 1\nvertices " << g.vertex_count() << '\n';
  render_arc_section(out, "arcs", g.arcs());
  return out.str();
}

// --- set cover -----------------------------------------------------------------

SetCoverInstance parse_setcover(std::string_view text) {
  Reader r(text);
  r.header("SETCOVER");
  SetCoverInstance inst;
  std::set<std::string> seen;
  std::vector<Line> sets;
  bool have_universe = false, have_k = false;
  while (!r.done()) {
    const Line& l = r.take();
    const std::string& key = l.tokens[0];
    if (!seen.insert(key).second) throw ParseError(l.number, "duplicate section '" + key + "'");
    if (key == "universe" || key == "k") {
      Reader::arity(l, 2);
      long long v = Reader::integer(l.tokens[1], l.number);
      if (v < 0) throw ParseError(l.number, "negative value");
      (key == "k" ? inst.k : inst.universe_size) = static_cast<int>(v);
      (key == "k" ? have_k : have_universe) = true;
    } else if (key == "sets") {
      sets = r.counted(l);
    } else {
      throw ParseError(l.number, "unknown section '" + key + "'");
    }
  }
  if (!have_universe || !have_k) r.fail("missing 'universe' or 'k' section");
  for (const Line& l : sets) {
    std::vector<int> set;
    if (!(l.tokens.size() == 1 && l.tokens[0] == "-"))
      for (const auto& tok : l.tokens) set.push_back(checked_vertex(tok, l.number, inst.universe_size));
    inst.family.push_back(std::move(set));
  }
  return inst;
}

std::string render(const SetCoverInstance& inst) {
  std::ostringstream out;
  out << "SETCOVER 1\nuniverse " << inst.universe_size << "\nsets " << inst.family.size() << '\n';
  for (const auto& set : inst.family) {
    if (set.empty()) out << '-';
    for (std::size_t i = 0; i < set.size(); ++i) out << (i ? " " : "") << set[i];
    out << '\n';
  }
  out << "k " << inst.k << '\n';
  return out.str();
}

// --- DIMACS CNF ----------------------------------------------------------------

Cnf parse_cnf(std::string_view text) {
  Cnf f;
  bool have_header = false;
  long long declared = 0;
  std::vector<int> clause;
  int line_no = 0, last = 1;
  for (const Line& l : tokenize(text, '%')) {
    line_no = l.number;
    if (l.tokens[0] == "c") continue;
    if (l.tokens[0] == "p") {
      if (have_header) throw ParseError(l.number, "duplicate problem line");
      Reader::arity(l, 4);
      if (l.tokens[1] != "cnf") throw ParseError(l.number, "expected 'p cnf'");
      f.variables = static_cast<int>(Reader::integer(l.tokens[2], l.number));
      declared = Reader::integer(l.tokens[3], l.number);
      if (f.variables < 0 || declared < 0) throw ParseError(l.number, "negative count");
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(l.number, "clause before the problem line");
    for (const auto& tok : l.tokens) {
      long long lit = Reader::integer(tok, l.number);
      if (lit == 0) {
        f.clauses.push_back(clause);
        clause.clear();
        continue;
      }
      if (lit < -f.variables || lit > f.variables)
        throw ParseError(l.number, "literal " + tok + " out of range");
      clause.push_back(static_cast<int>(lit));
      last = l.number;
    }
  }
  if (!have_header) throw ParseError(std::max(line_no, 1), "missing problem line");
  if (!clause.empty()) throw ParseError(last, "clause not terminated by 0");
  if (static_cast<long long>(f.clauses.size()) != declared)
    throw ParseError(std::max(line_no, 1), "clause count differs from the problem line");
  return f;
}

std::string render(const Cnf& formula) {
  std::ostringstream out;
  out << "p cnf " << formula.variables << ' ' << formula.clauses.size() << '\n';
  for (const auto& clause : formula.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

// --- certificates ----------------------------------------------------------------

ArcMultiset parse_arcs(std::string_view text) {
  Reader r(text);
  const Line& head = r.take();
  if (head.tokens[0] != "arcs") throw ParseError(head.number, "expected 'arcs m'");
  ArcMultiset arcs;
  for (const Line& l : r.counted(head)) {
    Reader::arity(l, 2);
    long long u = Reader::integer(l.tokens[0], l.number), v = Reader::integer(l.tokens[1], l.number);
    if (u < 0 || v < 0) throw ParseError(l.number, "negative vertex");
    arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (!r.done()) r.fail("trailing content after the arc list");
  return sorted_arcs(std::move(arcs));
}

std::string render_arcs(const ArcMultiset& arcs) {
  std::ostringstream out;
  render_arc_section(out, "arcs", sorted_arcs(arcs));
  return out.str();
}

Matching parse_matching(std::string_view text, const CBMInstance& inst) {
  Reader r(text);
  const Line& head = r.take();
  if (head.tokens[0] != "edges") throw ParseError(head.number, "expected 'edges m'");
  Matching m;
  for (const Line& l : r.counted(head)) {
    if (l.tokens.size() != 2 && l.tokens.size() != 3)
      throw ParseError(l.number, "expected 'left right' or 'left right weight'");
    int i = static_cast<int>(Reader::integer(l.tokens[0], l.number));
    int j = static_cast<int>(Reader::integer(l.tokens[1], l.number));
    Weight w = kInf;
    for (const CbmEdge& e : inst.edges)
      if (e.left == i && e.right == j) w = e.weight;
    m.push_back({i, j, w});
  }
  if (!r.done()) r.fail("trailing content after the edge list");
  std::sort(m.begin(), m.end());
  return m;
}

std::string render(const Matching& m) {
  std::ostringstream out;
  out << "edges " << m.size() << '\n';
  for (const CbmEdge& e : m) out << e.left << ' ' << e.right << ' ' << weight_text(e.weight) << '\n';
  return out.str();
}

SscChoice parse_choice(std::string_view text) {
  Reader r(text);
  const Line& head = r.take();
  if (head.tokens[0] != "choice") throw ParseError(head.number, "expected 'choice k'");
  SscChoice choice;
  for (const Line& l : r.counted(head)) {
    Reader::arity(l, 1);
    choice.push_back(static_cast<int>(Reader::integer(l.tokens[0], l.number)));
  }
  if (!r.done()) r.fail("trailing content after the choice");
  return choice;
}

std::string render_choice(const SscChoice& choice) {
  std::ostringstream out;
  out << "choice " << choice.size() << '\n';
  for (int j : choice) out << j << '\n';
  return out.str();
}

}  // namespace eulerext
