#pragma once

#include <string>

#include "adicamata/adic.hpp"
#include "adicamata/biminimality.hpp"
#include "adicamata/dimension_group.hpp"
#include "adicamata/safety_automaton.hpp"
#include "adicamata/transducer.hpp"

namespace adicamata {

// All emitters produce stable, byte-identical output for equal inputs.
std::string to_json(const SafetyAutomaton& a);
std::string to_json(const Transducer& t);
std::string to_json(const BratteliDiagram& d);
std::string to_json(const DimensionGroupReport& r);
std::string to_json(const BiminimalityReport& r);
std::string to_json(const IntegerAutomaton& a);

// DOT digraphs; initial states are drawn as double circles
std::string to_dot(const SafetyAutomaton& a, const std::string& name);
std::string to_dot(const Transducer& t, const std::string& name);
std::string to_dot(const BratteliDiagram& d, const std::string& name);
std::string to_dot(const IntegerAutomaton& a, const std::string& name);

// canonical path spec "prefix(cycle)@state" with edge labels r_target
std::string print_path(const PathWord& z);

// Accepts the canonical form, and the start-free form "prefix(cycle)" whose
// subscripts name the visited vertices in order (a trailing ^w marker after
// the cycle is ignored). Throws std::invalid_argument on malformed input or
// edges absent from the diagram.
PathWord parse_path_spec(const std::string& text, const BratteliDiagram& d);

}  // namespace adicamata
