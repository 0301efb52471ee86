#pragma once

// JSON forms of R-trees and finite automata.
//
// R-tree:    {"states": [names], "initial": name, "live": [names],
//             "delta": {name: {"00": name, "01": name, "10": name, "11": name}}}
//            Keys are the β-bit followed by the α-bit.
// Automaton: {"alphabet": k, "states": [names], "initial": name, "accepting": [names],
//             "delta": {name: {"0": name or [names], ...}}}

#include <string>
#include <string_view>

#include "omegapow/regular.hpp"
#include "omegapow/transition_system.hpp"

namespace omegapow
{

RTree rtree_from_json(std::string_view text);
std::string rtree_to_json(const RTree& r);
/// "full", "diag", or a path to an R-tree file.
RTree load_rtree(const std::string& spec);

FiniteAutomaton automaton_from_json(std::string_view text);
std::string automaton_to_json(const FiniteAutomaton& a);
FiniteAutomaton load_automaton(const std::string& path);

} // namespace omegapow
