#include "adicamata/adic.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace adicamata {

int BratteliDiagram::vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown vertex: " + name);
}

std::string edge_label(int rank, const std::string& target) {
    return std::to_string(rank) + "_" + target;
}

std::pair<int, std::string> parse_label(const std::string& label) {
    auto us = label.find('_');
    if (us == std::string::npos || us == 0)
        throw std::invalid_argument("malformed edge label: " + label);
    int rank = std::stoi(label.substr(0, us));
    return {rank, label.substr(us + 1)};
}

bool PathWord::operator<(const PathWord& o) const {
    if (start != o.start) return start < o.start;
    return word < o.word;
}

std::vector<int> epsilons(const PathPrefix& p) {
    std::vector<int> eps;
    eps.reserve(p.symbols.size());
    for (const auto& s : p.symbols) eps.push_back(parse_label(s).first);
    return eps;
}

BratteliDiagram build_bratteli(const Substitution& s) {
    if (!s.constant_length() || s.image_length() != 2)
        throw std::invalid_argument("substitution must have constant length 2");
    BratteliDiagram b;
    for (char c : s.alphabet) b.vertices.push_back(std::string(1, c));
    for (char c : s.alphabet) {
        const std::string& img = s.image(c);
        int dst = b.vertex_index(std::string(1, c));
        b.edges.push_back({b.vertex_index(std::string(1, img[0])), dst, 0});
        b.edges.push_back({b.vertex_index(std::string(1, img[1])), dst, 1});
    }
    return b;
}

SafetyAutomaton build_path_automaton(const BratteliDiagram& b) {
    SafetyAutomaton a;
    for (const auto& v : b.vertices) a.add_state(v);
    std::set<std::string> labels;
    for (const auto& e : b.edges) labels.insert(edge_label(e.rank, b.vertices[e.dst]));
    for (const auto& l : labels) a.add_symbol(l);
    for (const auto& e : b.edges)
        a.add_transition(b.vertices[e.src], edge_label(e.rank, b.vertices[e.dst]),
                         b.vertices[e.dst]);
    for (const auto& v : b.vertices) a.mark_initial(v);
    a.normalize();
    return a;
}

namespace {

int require_state(const SafetyAutomaton& a, const std::string& name) {
    int i = a.state_index(name);
    if (i < 0) throw std::invalid_argument("unknown state: " + name);
    return i;
}

int require_symbol(const SafetyAutomaton& a, const std::string& name) {
    int i = a.symbol_index(name);
    if (i < 0) throw std::invalid_argument("unknown symbol: " + name);
    return i;
}

// transition with this label out of this state; paths have at most one
int step(const SafetyAutomaton& a, int src, int sym) {
    int dst = -1;
    for (const auto& t : a.transitions) {
        if (t.src != src || t.sym != sym) continue;
        if (dst >= 0) throw std::logic_error("ambiguous step in path automaton");
        dst = t.dst;
    }
    if (dst < 0)
        throw std::invalid_argument("no transition from " + a.states[src] + " on " +
                                    a.alphabet[sym]);
    return dst;
}

}  // namespace

std::string path_end(const SafetyAutomaton& a, const PathPrefix& p) {
    int cur = require_state(a, p.start);
    for (const auto& s : p.symbols) cur = step(a, cur, require_symbol(a, s));
    return a.states[cur];
}

void validate_path(const SafetyAutomaton& a, const PathWord& z) {
    if (z.word.cycle.empty()) throw std::invalid_argument("path word needs a cycle");
    int cur = require_state(a, z.start);
    for (const auto& s : z.word.prefix) cur = step(a, cur, require_symbol(a, s));
    int cycle_entry = cur;
    for (const auto& s : z.word.cycle) cur = step(a, cur, require_symbol(a, s));
    // one more step closes the loop: targets are determined by the labels
    step(a, cur, require_symbol(a, z.word.cycle.front()));
    (void)cycle_entry;
}

std::string path_vertex_at(const SafetyAutomaton& a, const PathWord& z, std::size_t n) {
    if (n == 0) return z.start;
    return parse_label(z.word.at(n - 1)).second;
}

PathPrefix path_prefix(const PathWord& z, std::size_t n) {
    PathPrefix p;
    p.start = z.start;
    for (std::size_t i = 0; i < n; ++i) p.symbols.push_back(z.word.at(i));
    return p;
}

PathWord extend_canonically(const SafetyAutomaton& a, const PathPrefix& p) {
    PathWord z{p.start, UPWord{p.symbols, {}}};
    std::vector<std::string> visited{path_end(a, p)};
    std::vector<std::string> labels;
    while (true) {
        int cur = require_state(a, visited.back());
        std::string best;
        for (const auto& t : a.transitions) {
            if (t.src != cur) continue;
            if (best.empty() || a.alphabet[t.sym] < best) best = a.alphabet[t.sym];
        }
        if (best.empty()) throw std::invalid_argument("dead end while extending a path");
        labels.push_back(best);
        std::string next = parse_label(best).second;
        auto seen = std::find(visited.begin(), visited.end(), next);
        if (seen != visited.end()) {
            std::size_t loop = (std::size_t)(seen - visited.begin());
            z.word.prefix.insert(z.word.prefix.end(), labels.begin(), labels.begin() + loop);
            z.word.cycle.assign(labels.begin() + loop, labels.end());
            break;
        }
        visited.push_back(next);
    }
    z.word = canonical(z.word);
    validate_path(a, z);
    return z;
}

std::pair<std::vector<PathWord>, std::vector<PathWord>> minimal_extremal_paths(
    const SafetyAutomaton& a) {
    std::pair<std::vector<PathWord>, std::vector<PathWord>> result;
    for (int rank = 0; rank <= 1; ++rank) {
        // keep only states with an infinite constant-rank continuation
        std::vector<std::vector<std::pair<int, int>>> out(a.states.size());
        for (std::size_t i = 0; i < a.transitions.size(); ++i) {
            const auto& t = a.transitions[i];
            if (parse_label(a.alphabet[t.sym]).first == rank)
                out[t.src].push_back({t.dst, t.sym});
        }
        std::vector<bool> alive(a.states.size(), true);
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t v = 0; v < a.states.size(); ++v) {
                if (!alive[v]) continue;
                bool has = false;
                for (auto [d, s] : out[v])
                    if (alive[d]) has = true;
                if (!has) {
                    alive[v] = false;
                    changed = true;
                }
            }
        }
        std::vector<PathWord>& paths =
            rank == 0 ? result.first : result.second;
        for (std::size_t v = 0; v < a.states.size(); ++v) {
            if (!alive[v]) continue;
            std::vector<std::pair<int, int>> live;
            for (auto [d, s] : out[v])
                if (alive[d]) live.push_back({d, s});
            if (live.size() > 1)
                throw std::runtime_error("constant-rank paths branch; not finitely many");
        }
        for (std::size_t v = 0; v < a.states.size(); ++v) {
            if (!alive[v]) continue;
            std::vector<int> seen_at(a.states.size(), -1);
            std::vector<std::string> labels;
            int cur = static_cast<int>(v);
            while (seen_at[cur] < 0) {
                seen_at[cur] = static_cast<int>(labels.size());
                std::pair<int, int> next{-1, -1};
                for (auto [d, s] : out[cur])
                    if (alive[d]) next = {d, s};
                labels.push_back(a.alphabet[next.second]);
                cur = next.first;
            }
            UPWord w;
            int j = seen_at[cur];
            w.prefix.assign(labels.begin(), labels.begin() + j);
            w.cycle.assign(labels.begin() + j, labels.end());
            paths.push_back({a.states[v], canonical(w)});
        }
        std::sort(paths.begin(), paths.end());
    }
    return result;
}

Transducer build_adic_transducer(const BratteliDiagram& b) {
    // out-edges of each vertex, split by rank
    std::vector<std::vector<int>> min_out(b.vertices.size()), max_out(b.vertices.size());
    std::vector<std::vector<int>> max_in(b.vertices.size());
    for (const auto& e : b.edges) {
        (e.rank == 0 ? min_out : max_out)[e.src].push_back(e.dst);
        if (e.rank == 1) max_in[e.dst].push_back(e.src);
    }

    int n = static_cast<int>(b.vertices.size());
    auto id_name = [&](int v) { return "id_" + b.vertices[v]; };
    auto carry_name = [&](int j, int k) {
        return "mu_" + b.vertices[j] + b.vertices[k];
    };

    struct CandidateEdge {
        std::string src, in, out, dst;
    };
    std::vector<CandidateEdge> cand;
    for (int v = 0; v < n; ++v) {
        for (int w : min_out[v])
            cand.push_back({id_name(v), edge_label(0, b.vertices[w]),
                            edge_label(0, b.vertices[w]), id_name(w)});
        for (int w : max_out[v])
            cand.push_back({id_name(v), edge_label(1, b.vertices[w]),
                            edge_label(1, b.vertices[w]), id_name(w)});
    }
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            // maximal step in, minimal step out: the carry continues
            for (int l : max_out[j])
                for (int k2 : min_out[k])
                    cand.push_back({carry_name(j, k), edge_label(1, b.vertices[l]),
                                    edge_label(0, b.vertices[k2]), carry_name(l, k2)});
            // minimal step in, maximal step out to the same vertex: resolved
            for (int l : min_out[j]) {
                bool ok = false;
                for (int src : max_in[l])
                    if (src == k) ok = true;
                if (ok)
                    cand.push_back({carry_name(j, k), edge_label(0, b.vertices[l]),
                                    edge_label(1, b.vertices[l]), id_name(l)});
            }
        }
    }

    // a carry encodes a pending prefix rewrite; keep only carries whose
    // rewrite can complete (an identity state is reachable)
    std::set<std::string> good;
    for (int v = 0; v < n; ++v) good.insert(id_name(v));
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& e : cand) {
            if (good.count(e.src) || !good.count(e.dst)) continue;
            good.insert(e.src);
            grew = true;
        }
    }

    Transducer t;
    std::set<std::string> labels;
    for (const auto& e : b.edges) labels.insert(edge_label(e.rank, b.vertices[e.dst]));
    for (const auto& l : labels) {
        t.in_alphabet.push_back(l);
        t.out_alphabet.push_back(l);
    }
    std::set<std::string> added;
    for (int v = 0; v < n; ++v) {
        t.add_state(id_name(v));
        added.insert(id_name(v));
    }
    for (const auto& e : cand) {
        if (!good.count(e.src) || !good.count(e.dst)) continue;
        for (const auto& s : {e.src, e.dst}) {
            if (!added.count(s)) {
                t.add_state(s);
                added.insert(s);
            }
        }
    }
    for (const auto& e : cand) {
        if (!good.count(e.src) || !good.count(e.dst)) continue;
        t.add_edge(e.src, e.in, e.out, e.dst);
    }
    for (const auto& s : t.states)
        if (s.rfind("mu_", 0) == 0) t.mark_initial(s);
    t.normalize();
    Transducer trimmed = trim(t);
    if (!is_unambiguous(trimmed))
        throw std::logic_error("adic transducer is not unambiguous");
    return trimmed;
}

PathWord apply_path(const Transducer& t, const SafetyAutomaton& a, const PathWord& z) {
    validate_path(a, z);
    UPWord out = apply(t, z.word);
    const std::string& first =
        out.prefix.empty() ? out.cycle.front() : out.prefix.front();
    auto [rank, target] = parse_label(first);
    int src = -1;
    int sym = require_symbol(a, first);
    for (const auto& tr : a.transitions) {
        if (tr.sym != sym) continue;
        if (src >= 0) throw std::logic_error("edge label does not determine the edge");
        src = tr.src;
    }
    if (src < 0) throw std::logic_error("output label missing from path automaton");
    PathWord res{a.states[src], out};
    validate_path(a, res);
    return res;
}

WordWindow lambda_decode(const CollaredSubstitution& cs, const SafetyAutomaton& a,
                         const PathPrefix& p) {
    std::string end = path_end(a, p);
    if (end.size() != 1) throw std::invalid_argument("vertex name is not a letter");
    std::string w(1, end[0]);
    for (std::size_t i = 0; i < p.symbols.size(); ++i) w = apply_substitution(cs.sub, w);
    long long offset = 0;
    std::vector<int> eps = epsilons(p);
    for (std::size_t i = 0; i < eps.size(); ++i)
        offset -= static_cast<long long>(eps[i]) << i;
    std::string bits;
    bits.reserve(w.size());
    for (char c : w) bits.push_back(cs.triple_of(c).bit);
    return {offset, bits};
}

PathPrefix reverse_path(const SafetyAutomaton& a, const std::string& rank_bits,
                        const std::string& h) {
    // unique incoming edge per (vertex, rank)
    std::map<std::pair<int, int>, std::pair<int, std::string>> in;
    for (const auto& t : a.transitions) {
        auto [rank, target] = parse_label(a.alphabet[t.sym]);
        (void)target;
        auto key = std::make_pair(t.dst, rank);
        if (in.count(key))
            throw std::logic_error("incoming edges are not rank-unique");
        in[key] = {t.src, a.alphabet[t.sym]};
    }
    int cur = require_state(a, h);
    std::vector<std::string> symbols(rank_bits.size());
    for (std::size_t i = rank_bits.size(); i-- > 0;) {
        int rank = rank_bits[i] - '0';
        auto it = in.find({cur, rank});
        if (it == in.end())
            throw std::invalid_argument("no rank-" + std::to_string(rank) +
                                        " edge into " + a.states[cur]);
        symbols[i] = it->second.second;
        cur = it->second.first;
    }
    return {a.states[cur], symbols};
}

PathPrefix lambda_encode(const CollaredSubstitution& cs, const SafetyAutomaton& a,
                         const WordWindow& w, int n) {
    if (n < 0) throw std::invalid_argument("negative depth");
    std::map<std::pair<char, char>, char> pair_of;
    for (char p : cs.sub.alphabet) {
        const std::string& img = cs.sub.image(p);
        if (img.size() != 2)
            throw std::invalid_argument("substitution must have constant length 2");
        pair_of[{img[0], img[1]}] = p;
    }

    if (w.letters.size() < 3)
        throw std::invalid_argument("window too short to collar");
    std::vector<char> cur;
    for (std::size_t i = 1; i + 1 < w.letters.size(); ++i)
        cur.push_back(cs.letter_of(
            {w.letters[i - 1], w.letters[i], w.letters[i + 1]}));
    long long pos = -(w.offset + 1);
    if (pos < 0 || pos >= static_cast<long long>(cur.size()))
        throw std::invalid_argument("window does not cover the origin");

    std::string eps;
    for (int level = 0; level < n; ++level) {
        bool feasible[2];
        for (int o = 0; o <= 1; ++o) {
            feasible[o] = true;
            for (std::size_t m = o; m + 1 < cur.size(); m += 2)
                if (!pair_of.count({cur[m], cur[m + 1]})) feasible[o] = false;
        }
        if (!feasible[0] && !feasible[1])
            throw std::invalid_argument("window is not in the subshift");
        if (feasible[0] && feasible[1])
            throw std::invalid_argument("window too short to determine alignment");
        int o = feasible[0] ? 0 : 1;
        long long rel = pos - o;
        if (rel < 0 || static_cast<std::size_t>(o + (rel / 2) * 2 + 1) >= cur.size())
            throw std::invalid_argument("window too short around the origin");
        eps.push_back(static_cast<char>('0' + rel % 2));
        std::vector<char> parent;
        for (std::size_t m = o; m + 1 < cur.size(); m += 2)
            parent.push_back(pair_of.at({cur[m], cur[m + 1]}));
        cur = parent;
        pos = rel / 2;
    }
    return reverse_path(a, eps, std::string(1, cur[pos]));
}

Transducer build_zeta_transducer(const SafetyAutomaton& a) {
    Transducer t;
    t.in_alphabet = a.alphabet;
    t.out_alphabet = a.alphabet;
    auto name = [&](int bit, int state) {
        return "z" + std::to_string(bit) + "_" + a.states[state];
    };
    for (int bit = 0; bit <= 1; ++bit)
        for (std::size_t i = 0; i < a.states.size(); ++i)
            t.add_state(name(bit, static_cast<int>(i)));
    for (const auto& tr : a.transitions) {
        auto [rank, target] = parse_label(a.alphabet[tr.sym]);
        (void)target;
        for (int bit = 0; bit <= 1; ++bit)
            t.add_edge(name(bit, tr.src), a.alphabet[tr.sym],
                       edge_label(bit, a.states[tr.src]), name(rank, tr.dst));
    }
    for (std::size_t i = 0; i < a.states.size(); ++i)
        t.mark_initial(name(0, static_cast<int>(i)));
    t.normalize();
    return t;
}

Transducer build_sigma_transducer(const SafetyAutomaton& a) {
    Transducer s = invert(build_zeta_transducer(a));
    s.initial.clear();
    for (std::size_t i = 0; i < s.states.size(); ++i) s.initial.push_back((int)i);
    return s;
}

bool check_baumslag_solitar(const Transducer& adic, const Transducer& sigma) {
    Transducer lhs = compose(sigma, compose(adic, adic));
    Transducer rhs = compose(adic, sigma);
    return t_language_equal(lhs, rhs);
}

}  // namespace adicamata
