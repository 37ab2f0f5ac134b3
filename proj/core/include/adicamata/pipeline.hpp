#pragma once

#include "adicamata/adic.hpp"
#include "adicamata/odometer.hpp"
#include "adicamata/transducer.hpp"
#include "adicamata/words.hpp"

namespace adicamata {

// The full Thue-Morse instantiation, built once and shared by the CLI and
// the test suites.
struct Pipeline {
    Substitution base;
    CollaredSubstitution collared;
    BratteliDiagram diagram;
    SafetyAutomaton path_automaton;

    Transducer adic;          // the Vershik successor on paths
    Transducer adic_inverse;
    Transducer substitution;  // the collared substitution acting on paths
    Transducer shift;         // its inverse
    Transducer nucleus;
    Transducer bit_projection;  // path word to bit word of start vertices

    SafetyAutomaton full_shift;       // one-vertex diagram, all bit words
    Transducer odometer;              // add one on dyadics
    Transducer dyadic_double;         // multiply by two on dyadics
    Transducer difference_map;        // adjacent-difference (period doubling)
    Transducer period_doubling_adic;  // successor on the difference image

    PathWord base_x;  // the two fixed-point paths exchanged by the shift
    PathWord base_y;

    std::vector<PathWord> minimal_paths, maximal_paths;
};

Pipeline build_pipeline();

// same construction over a caller-supplied diagram (harness mutation tests)
Pipeline build_pipeline(const BratteliDiagram& diagram);

}  // namespace adicamata
