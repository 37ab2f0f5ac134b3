#pragma once

#include <string>
#include <vector>

namespace adicamata {

// Ultimately periodic omega-word prefix.cycle^w over named symbols.
struct UPWord {
    std::vector<std::string> prefix;
    std::vector<std::string> cycle;

    bool operator==(const UPWord& o) const { return prefix == o.prefix && cycle == o.cycle; }
    bool operator<(const UPWord& o) const;
    // symbol at position n >= 0
    const std::string& at(std::size_t n) const;
};

// Canonical form: primitive cycle, shortest prefix.
UPWord canonical(UPWord w);
UPWord up_from_chars(const std::string& prefix, const std::string& cycle);

// Nondeterministic automaton over named symbols; all states are final, so
// a word is accepted iff it labels some infinite run from an initial state.
struct SafetyAutomaton {
    struct Transition {
        int src, sym, dst;
        bool operator<(const Transition& o) const;
        bool operator==(const Transition& o) const = default;
    };

    std::vector<std::string> states;
    std::vector<std::string> alphabet;
    std::vector<int> initial;
    std::vector<Transition> transitions;

    int add_state(const std::string& name);
    int add_symbol(const std::string& name);
    int state_index(const std::string& name) const;
    int symbol_index(const std::string& name) const;
    void add_transition(const std::string& src, const std::string& sym, const std::string& dst);
    void mark_initial(const std::string& name);
    // sort + dedupe transitions and initial states
    void normalize();
    // adjacency list: for each state, (sym, dst) pairs
    std::vector<std::vector<std::pair<int, int>>> out_edges() const;
};

// Restrict to states reachable from initial that lie on an infinite path.
SafetyAutomaton trim(const SafetyAutomaton& a);

bool accepts(const SafetyAutomaton& a, const UPWord& w);

// Intersection automaton on reachable state pairs, trimmed; alphabets must
// agree as sets.
SafetyAutomaton product(const SafetyAutomaton& a, const SafetyAutomaton& b);

// Subset construction; sound for safety languages when the input is trim.
SafetyAutomaton determinize(const SafetyAutomaton& a);

bool language_equal(const SafetyAutomaton& a, const SafetyAutomaton& b);
bool language_subset(const SafetyAutomaton& a, const SafetyAutomaton& b);

bool is_empty(const SafetyAutomaton& a);

bool is_strongly_connected(const SafetyAutomaton& a);

}  // namespace adicamata
