#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eulerext/cbm.hpp"
#include "eulerext/reductions.hpp"
#include "eulerext/ssc.hpp"

namespace eulerext {

// Thrown by every parser; what() starts with "line N: ".
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// Text formats are line oriented; '#' starts a comment. Weights are
// integers or "inf". Renderers emit the canonical form: sorted arcs, and
// explicit weight lines only where an entry differs from the default.

// First token of the first non-comment line, e.g. "EE" or "CBM"; "CNF" for
// DIMACS input. Empty when there is none.
std::string format_tag(std::string_view text);

EEInstance parse_ee(std::string_view text);
std::string render(const EEInstance& inst);

RPInstance parse_rp(std::string_view text);
std::string render(const RPInstance& inst);

EEAInstance parse_eea(std::string_view text);
std::string render(const EEAInstance& inst);

CBMInstance parse_cbm(std::string_view text);
std::string render(const CBMInstance& inst);

SSCInstance parse_ssc(std::string_view text);
std::string render(const SSCInstance& inst);

PlanarEEInstance parse_2dee(std::string_view text);
std::string render(const PlanarEEInstance& inst);

// Hamiltonian cycle input: a plain digraph.
DirectedMultigraph parse_hc(std::string_view text);
std::string render_hc(const DirectedMultigraph& g);

struct SetCoverInstance {
  int universe_size = 0;
  std::vector<std::vector<int>> family;
  int k = 0;
  bool operator==(const SetCoverInstance&) const = default;
};

SetCoverInstance parse_setcover(std::string_view text);
std::string render(const SetCoverInstance& inst);

// DIMACS CNF.
Cnf parse_cnf(std::string_view text);
std::string render(const Cnf& formula);

// --- certificates ------------------------------------------------------------

ArcMultiset parse_arcs(std::string_view text);
std::string render_arcs(const ArcMultiset& arcs);

// Lines "i j" with right index j; weights come from the instance, kInf for
// pairs that are no edge of it.
Matching parse_matching(std::string_view text, const CBMInstance& inst);
std::string render(const Matching& m);

SscChoice parse_choice(std::string_view text);
std::string render_choice(const SscChoice& choice);

}  // namespace eulerext
