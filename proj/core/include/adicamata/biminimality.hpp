#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adicamata/adic.hpp"
#include "adicamata/safety_automaton.hpp"
#include "adicamata/transducer.hpp"

namespace adicamata {

// Automaton over integers read LSB first: bit transitions plus per-state
// tail acceptance (which constant tails 0^w / 1^w are accepted where).
struct IntegerAutomaton {
    std::vector<std::string> states;
    std::vector<std::array<std::vector<int>, 2>> next;
    std::vector<int> init;
    std::vector<char> acc0, acc1;

    int add_state(const std::string& name);
    int state_index(const std::string& name) const;
    void add_edge(int src, int bit, int dst);
};

bool ia_member(const IntegerAutomaton& a, long long n);
bool ia_equal(const IntegerAutomaton& a, const IntegerAutomaton& b);
bool ia_empty(const IntegerAutomaton& a);
IntegerAutomaton ia_union(const IntegerAutomaton& a, const IntegerAutomaton& b);
IntegerAutomaton ia_intersect(const IntegerAutomaton& a, const IntegerAutomaton& b);
// {2n + plus : n in A}
IntegerAutomaton ia_scale2(const IntegerAutomaton& a, int plus);
// {-n : n in A} via the two's-complement transducer
IntegerAutomaton ia_negate(const IntegerAutomaton& a);
// swap the two tails only
IntegerAutomaton ia_tail_swap(const IntegerAutomaton& a);
// {-n-1 : n in A}: complement every bit edge and swap the tails
IntegerAutomaton ia_ones_complement(const IntegerAutomaton& a);
IntegerAutomaton ia_all_integers();
// an accepted integer of minimal digit length, if any
std::optional<long long> ia_witness(const IntegerAutomaton& a);
// positions p < maxlead such that some accepted word starts 0^p 1
std::vector<int> lead_pattern(const IntegerAutomaton& a, int maxlead);

// The recursion system for the sets Lambda(base, s) = {n : mu^n(base)
// starts at s}, over a pair of base points exchanged by the recursion.
struct LambdaSystem {
    SafetyAutomaton a;
    Transducer mu;
    Transducer mu_inv;
    PathWord base_x, base_y;
    IntegerAutomaton core;  // states tag:state:carry, shared by all builds
    std::map<std::pair<char, char>, std::string> orbit_small;  // (tag, -1/0/1)
};

LambdaSystem make_lambda_system(const SafetyAutomaton& a, const Transducer& mu,
                                const PathWord& base_x, const PathWord& base_y);

// membership semantics: n accepted iff mu^(n+carry)(base) starts at s
IntegerAutomaton build_lambda_automaton(const LambdaSystem& sys, char which,
                                        const std::string& s, int carry = 0);

// start state of mu^n(base) for |n| <= range
std::map<long long, std::string> orbit_oracle(const Transducer& mu,
                                              const SafetyAutomaton& a,
                                              const PathWord& base, int range);

// the twelve identities Lambda(z,s) = union of 2 Lambda(z',t) + delta
bool check_lambda_recursions(const LambdaSystem& sys);
// six sets partition Z for the given base tag
bool check_lambda_partition(const LambdaSystem& sys, char which);

struct BiminimalityReport {
    std::string claim;
    std::map<std::string, int> automata_sizes;
    std::string witness;  // empty when the intersection is empty
    int oracle_range_checked = 0;
    bool oracle_agrees = false;
    bool intersection_empty = false;
    bool swapped_intersection_empty = false;
    bool sanity_zero_in_swapped_clopens = false;
    std::vector<int> first_one_positions_neg_x_d;
    std::vector<int> first_one_positions_y_e;

    bool verdict_not_biminimal() const {
        return intersection_empty && swapped_intersection_empty && oracle_agrees;
    }
};

BiminimalityReport check_biminimality_counterexample(const LambdaSystem& sys,
                                                     int oracle_range = 1024);

// minimality of the shift on L(A) is connectedness of A
bool check_minimal(const SafetyAutomaton& a);

}  // namespace adicamata
