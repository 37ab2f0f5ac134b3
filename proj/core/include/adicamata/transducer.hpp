#pragma once

#include <string>
#include <vector>

#include "adicamata/safety_automaton.hpp"

namespace adicamata {

// Letter-to-letter omega-transducer: a safety automaton over pair labels
// in|out, viewed as a relation on omega-words.
struct Transducer {
    struct Edge {
        int in, out, dst;
        bool operator<(const Edge& o) const;
        bool operator==(const Edge& o) const = default;
    };

    std::vector<std::string> states;
    std::vector<std::string> in_alphabet;
    std::vector<std::string> out_alphabet;
    std::vector<int> initial;
    // edges[src] = list of (in, out, dst)
    std::vector<std::vector<Edge>> edges;

    int add_state(const std::string& name);
    int state_index(const std::string& name) const;
    int in_index(const std::string& name) const;
    int out_index(const std::string& name) const;
    void add_edge(const std::string& src, const std::string& in, const std::string& out,
                  const std::string& dst);
    void mark_initial(const std::string& name);
    void normalize();
    std::size_t edge_count() const;
};

// View as a safety automaton over pair symbols "in|out" (full product
// alphabet, so transducers with equal in/out alphabets are comparable).
SafetyAutomaton to_safety(const Transducer& t);

Transducer trim(const Transducer& t);

// compose(S, T) applies T first: the relation {(w, v) : exists u,
// (w,u) in T and (u,v) in S}; requires T's out-alphabet = S's in-alphabet.
Transducer compose(const Transducer& s, const Transducer& t);

Transducer invert(const Transducer& t);

SafetyAutomaton input_projection(const Transducer& t);
SafetyAutomaton output_projection(const Transducer& t);

// Identity relation on L(a).
Transducer diagonal(const SafetyAutomaton& a);

// n-fold self-composition; negative n composes the inverse.
Transducer power(const Transducer& t, int n);

bool t_language_equal(const Transducer& a, const Transducer& b);
bool t_language_subset(const Transducer& a, const Transducer& b);

// No input word labels two infinite runs whose outputs differ somewhere.
bool is_unambiguous(const Transducer& t);

// The unique output word on input w; requires w in the domain and a
// single-valued relation on w.
UPWord apply(const Transducer& t, const UPWord& w);

// Restriction to strongly connected components containing at least one
// edge; initial states kept when they survive, else all remaining states.
Transducer recurrent_part(const Transducer& t);

// Rooted-language comparison: the relation recognized from a single state.
bool rooted_language_equal(const Transducer& a, const std::string& a_state,
                           const Transducer& b, const std::string& b_state);
bool rooted_language_subset(const Transducer& a, const std::string& a_state,
                            const Transducer& b, const std::string& b_state);

// Nucleus of the adic transducer: identity states shared, each carry kept
// in a forward copy and a label-swapped backward copy.
Transducer build_nucleus(const Transducer& adic);

// Every recurrent state of each power mu^n, 2 <= |n| <= powers, is
// rooted-language-equal to some nucleus state.
bool check_nuclear(const Transducer& nucleus, const Transducer& adic, int powers);

struct SelfCompositionReport {
    int recurrent_states = 0;
    int equal_to_nucleus_state = 0;
    int contained_only = 0;
    bool contained = false;  // every recurrent state simulated by a nucleus state
};

// Transitivity witness: recurrent part of nucleus*nucleus is contained in
// the nucleus state-by-state (rooted-language containment).
SelfCompositionReport check_nucleus_self_composition(const Transducer& nucleus);

// Number of length-n edge paths that avoid states whose name starts with
// the given prefix (used to bound carry bursts).
long long count_paths_avoiding(const Transducer& t, const std::string& name_prefix, int n);

}  // namespace adicamata
