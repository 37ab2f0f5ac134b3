#pragma once

#include <optional>
#include <string>

#include "adicamata/adic.hpp"
#include "adicamata/safety_automaton.hpp"
#include "adicamata/transducer.hpp"

namespace adicamata {

// 2-adic integer as an ultimately periodic bit word, least significant bit
// first; constant tail 0 / 1 marks nonnegative / negative integers.
struct DyadicWord {
    UPWord bits;
    bool operator==(const DyadicWord& o) const = default;
    bool operator<(const DyadicWord& o) const { return bits < o.bits; }
};

DyadicWord make_dyadic(UPWord bits);
DyadicWord parse_dyadic(const std::string& text);  // "prefix(cycle)"
std::string print_dyadic(const DyadicWord& w);
bool is_integer(const DyadicWord& w);
DyadicWord encode_integer(long long n);
long long decode_integer(const DyadicWord& w);  // requires constant tail

DyadicWord add_one(const DyadicWord& w);
DyadicWord double_dyadic(const DyadicWord& w);

// Z~2: the dyadics with the integer subset doubled by a parity flag.
struct TildeDyadic {
    DyadicWord value;
    std::optional<int> branch;  // present exactly when value is an integer
    bool operator==(const TildeDyadic& o) const = default;
};

TildeDyadic make_tilde(DyadicWord value, std::optional<int> branch);

// Z/2 x Z~2 point of the symbolic model.
struct SymmetricPoint {
    int s = 0;
    TildeDyadic z;
    bool operator==(const SymmetricPoint& o) const = default;
};

// cocycle: (n+1) mod 2 for 0^n 1..., branch+1 for 0
int phi(const TildeDyadic& z);

// odometer lifted to Z~2, twisted by phi on the Z/2 component
SymmetricPoint mu_tilde(const SymmetricPoint& p);

// forget the decorations of a path word; branch bit from the parity of the
// positions (origin = path start) where the cycle visits {b, e}
TildeDyadic pi_tilde(const PathWord& z);
int s_of(const PathWord& z);

// relabel every symbol r_t to r (pair labels componentwise)
SafetyAutomaton forget_decorations(const SafetyAutomaton& a);
Transducer forget_decorations(const Transducer& t);

// full binary shift; its odometer; its doubling map
SafetyAutomaton build_B();
Transducer build_B_tau();
Transducer build_B_zeta();

// bit projection as a transducer on the path automaton
Transducer build_pi_transducer(const SafetyAutomaton& a);

// label-preserving graph morphism b onto a under forgetting, with the state
// map given by name classification
bool check_graph_morphism(const Transducer& t, const Transducer& target,
                          const std::string& id_prefix, const std::string& id_state,
                          const std::string& carry_state);

// tau o pi = pi o mu and doubling o pi = pi o zeta, plus the two morphisms
bool check_factor(const SafetyAutomaton& a, const Transducer& mu, const Transducer& zeta_t);

// number of infinite runs reading the input (count-vector iteration;
// returns -1 when the count exceeds the cap, i.e. diverges)
long long count_runs(const Transducer& t, const UPWord& input, long long cap = 1000000);

// adic transformation of the period-doubling subshift and the adjacent-
// difference map, with tau o D = D o M
Transducer build_M_transducer();
Transducer build_D_transducer();
bool check_tau_D_DM(const Transducer& b_tau, const Transducer& d, const Transducer& m);

}  // namespace adicamata
