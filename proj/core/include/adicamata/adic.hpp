#pragma once

#include <string>
#include <utility>
#include <vector>

#include "adicamata/safety_automaton.hpp"
#include "adicamata/transducer.hpp"
#include "adicamata/words.hpp"

namespace adicamata {

// Stationary ordered Bratteli diagram: one repeated level; each vertex has
// one incoming edge per rank (0 = minimal, 1 = maximal).
struct BratteliDiagram {
    struct Edge {
        int src, dst, rank;
    };
    std::vector<std::string> vertices;
    std::vector<Edge> edges;

    int vertex_index(const std::string& name) const;
};

// Decorated letter: rank r of an edge into target state t, written "r_t".
std::string edge_label(int rank, const std::string& target);
// split "r_t" into (rank, target)
std::pair<int, std::string> parse_label(const std::string& label);

// Finite path prefix with explicit start vertex; symbols are edge labels.
struct PathPrefix {
    std::string start;
    std::vector<std::string> symbols;
    bool operator==(const PathPrefix& o) const = default;
};

// Ultimately periodic infinite path with explicit start vertex.
struct PathWord {
    std::string start;
    UPWord word;
    bool operator==(const PathWord& o) const = default;
    bool operator<(const PathWord& o) const;
};

// Rank bits of a prefix: epsilon_i = 1 iff edge i is maximal.
std::vector<int> epsilons(const PathPrefix& p);

// For rule a -> bc: minimal edge b -> a (rank 0), maximal edge c -> a.
BratteliDiagram build_bratteli(const Substitution& s);

// States = vertices, all initial; diagram edge v -> w of rank r becomes a
// transition v -> w labeled r_w.
SafetyAutomaton build_path_automaton(const BratteliDiagram& b);

// walk a path prefix through the automaton; returns the end vertex
std::string path_end(const SafetyAutomaton& a, const PathPrefix& p);
// validate an ultimately periodic path word against the automaton
void validate_path(const SafetyAutomaton& a, const PathWord& z);
// the vertex visited at position n (start = position 0)
std::string path_vertex_at(const SafetyAutomaton& a, const PathWord& z, std::size_t n);
// prefix of the first n edges
PathPrefix path_prefix(const PathWord& z, std::size_t n);

// Extend a finite prefix to an ultimately periodic path by repeatedly
// following the least outgoing label until a vertex repeats.
PathWord extend_canonically(const SafetyAutomaton& a, const PathPrefix& p);

// All infinite rank-0-only paths and all infinite rank-1-only paths.
std::pair<std::vector<PathWord>, std::vector<PathWord>> minimal_extremal_paths(
    const SafetyAutomaton& a);

// Vershik successor as a transducer: candidate identity/carry states, carry
// pruning (a pending rewrite must be completable), trim, unambiguity check.
Transducer build_adic_transducer(const BratteliDiagram& b);

// apply with explicit start-vertex tracking
PathWord apply_path(const Transducer& t, const SafetyAutomaton& a, const PathWord& z);

// The window zeta^n(end vertex) placed at offset -sum eps_i 2^i, projected
// to bits.
WordWindow lambda_decode(const CollaredSubstitution& cs, const SafetyAutomaton& a,
                         const PathPrefix& p);

// Inverse: desubstitute the window n times around the origin (unique block
// alignment per level), then complete the rank word backwards.
PathPrefix lambda_encode(const CollaredSubstitution& cs, const SafetyAutomaton& a,
                         const WordWindow& w, int n);

// Unique reverse path ending at h whose labels project to the given rank
// bits (walk backwards through the unique rank-r incoming edges).
PathPrefix reverse_path(const SafetyAutomaton& a, const std::string& rank_bits,
                        const std::string& h);

// One-step-delay substitution action on path words; initial states are the
// bit-0 copies, so the relation is the graph of the substitution map.
Transducer build_zeta_transducer(const SafetyAutomaton& a);

// Shift transducer: inverse reading direction of zeta with every state
// initial.
Transducer build_sigma_transducer(const SafetyAutomaton& a);

// sigma o mu^2 = mu o sigma as transducer languages.
bool check_baumslag_solitar(const Transducer& adic, const Transducer& sigma);

}  // namespace adicamata
