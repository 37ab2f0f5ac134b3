#include <adicamata/pipeline.hpp>

namespace adicamata {

namespace {

Pipeline finish(Pipeline p) {
    p.path_automaton = build_path_automaton(p.diagram);

    p.adic = build_adic_transducer(p.diagram);
    p.adic_inverse = invert(p.adic);
    p.substitution = build_zeta_transducer(p.path_automaton);
    p.shift = build_sigma_transducer(p.path_automaton);
    p.nucleus = build_nucleus(p.adic);
    p.bit_projection = build_pi_transducer(p.path_automaton);

    p.full_shift = build_B();
    p.odometer = build_B_tau();
    p.dyadic_double = build_B_zeta();
    p.difference_map = build_D_transducer();
    p.period_doubling_adic = build_M_transducer();

    p.base_x = PathWord{"e", UPWord{{}, {"0_d", "0_e"}}};
    p.base_y = PathWord{"d", UPWord{{}, {"0_e", "0_d"}}};
    validate_path(p.path_automaton, p.base_x);
    validate_path(p.path_automaton, p.base_y);

    auto [mins, maxs] = minimal_extremal_paths(p.path_automaton);
    p.minimal_paths = mins;
    p.maximal_paths = maxs;
    return p;
}

}  // namespace

Pipeline build_pipeline() {
    Pipeline p;
    p.base = thue_morse();
    p.collared = collar(p.base);
    p.diagram = build_bratteli(p.collared.sub);
    return finish(std::move(p));
}

Pipeline build_pipeline(const BratteliDiagram& diagram) {
    Pipeline p;
    p.base = thue_morse();
    p.collared = collar(p.base);
    p.diagram = diagram;
    return finish(std::move(p));
}

}  // namespace adicamata
