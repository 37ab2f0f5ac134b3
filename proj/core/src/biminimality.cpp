#include "adicamata/biminimality.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "adicamata/odometer.hpp"

namespace adicamata {

int IntegerAutomaton::add_state(const std::string& name) {
    int i = state_index(name);
    if (i >= 0) return i;
    states.push_back(name);
    next.push_back({});
    acc0.push_back(0);
    acc1.push_back(0);
    return (int)states.size() - 1;
}

int IntegerAutomaton::state_index(const std::string& name) const {
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i] == name) return (int)i;
    return -1;
}

void IntegerAutomaton::add_edge(int src, int bit, int dst) {
    auto& v = next[src][bit];
    if (std::find(v.begin(), v.end(), dst) == v.end()) v.push_back(dst);
}

namespace {

// backward closure of the tail-t acceptance set under t-edges
std::vector<char> tail_reach(const IntegerAutomaton& a, int t) {
    std::vector<char> r(a.states.size(), 0);
    for (std::size_t q = 0; q < a.states.size(); ++q)
        r[q] = t == 0 ? a.acc0[q] : a.acc1[q];
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t q = 0; q < a.states.size(); ++q) {
            if (r[q]) continue;
            for (int d : a.next[q][t])
                if (r[d]) {
                    r[q] = 1;
                    changed = true;
                }
        }
    }
    return r;
}

// LSB-first digits of n: (prefix, tail bit); prefix has no trailing tail bit
std::pair<std::vector<int>, int> digits_of(long long n) {
    std::vector<int> pre;
    if (n >= 0) {
        while (n > 0) {
            pre.push_back((int)(n & 1));
            n >>= 1;
        }
        return {pre, 0};
    }
    while (n != -1) {
        pre.push_back((int)(n & 1));
        n >>= 1;
    }
    return {pre, 1};
}

struct Dfa {
    // node = subset of NFA states; succ per bit; finality = (meets R0, meets R1)
    std::vector<std::array<int, 2>> succ;
    std::vector<std::array<bool, 2>> fin;
    int start = 0;
};

Dfa determinize(const IntegerAutomaton& a) {
    std::vector<char> r0 = tail_reach(a, 0), r1 = tail_reach(a, 1);
    Dfa d;
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> subsets;
    auto intern = [&](std::vector<int> s) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        auto it = index.find(s);
        if (it != index.end()) return it->second;
        int i = (int)subsets.size();
        index.emplace(s, i);
        subsets.push_back(s);
        d.succ.push_back({-1, -1});
        bool f0 = false, f1 = false;
        for (int q : s) {
            if (r0[q]) f0 = true;
            if (r1[q]) f1 = true;
        }
        d.fin.push_back({f0, f1});
        return i;
    };
    d.start = intern(a.init);
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        for (int b = 0; b <= 1; ++b) {
            std::vector<int> t;
            for (int q : subsets[i])
                for (int x : a.next[q][b]) t.push_back(x);
            int j = intern(std::move(t));
            d.succ[i][b] = j;
        }
    }
    return d;
}

}  // namespace

bool ia_member(const IntegerAutomaton& a, long long n) {
    auto [pre, t] = digits_of(n);
    std::vector<char> r = tail_reach(a, t);
    std::set<int> cur(a.init.begin(), a.init.end());
    for (int b : pre) {
        std::set<int> nxt;
        for (int q : cur)
            for (int d : a.next[q][b]) nxt.insert(d);
        cur = std::move(nxt);
    }
    for (int q : cur)
        if (r[q]) return true;
    return false;
}

bool ia_equal(const IntegerAutomaton& a, const IntegerAutomaton& b) {
    Dfa da = determinize(a), db = determinize(b);
    std::set<std::pair<int, int>> seen;
    std::deque<std::pair<int, int>> queue{{da.start, db.start}};
    while (!queue.empty()) {
        auto [p, q] = queue.front();
        queue.pop_front();
        if (!seen.insert({p, q}).second) continue;
        if (da.fin[p] != db.fin[q]) return false;
        for (int bit = 0; bit <= 1; ++bit) queue.push_back({da.succ[p][bit], db.succ[q][bit]});
    }
    return true;
}

bool ia_empty(const IntegerAutomaton& a) {
    std::vector<char> r0 = tail_reach(a, 0), r1 = tail_reach(a, 1);
    std::vector<char> seen(a.states.size(), 0);
    std::deque<int> queue(a.init.begin(), a.init.end());
    for (int q : a.init) seen[q] = 1;
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        if (r0[q] || r1[q]) return false;
        for (int b = 0; b <= 1; ++b)
            for (int d : a.next[q][b])
                if (!seen[d]) {
                    seen[d] = 1;
                    queue.push_back(d);
                }
    }
    return true;
}

namespace {

IntegerAutomaton relabel(const IntegerAutomaton& a, const std::string& tag) {
    IntegerAutomaton r;
    for (const auto& s : a.states) r.add_state(tag + s);
    for (std::size_t q = 0; q < a.states.size(); ++q) {
        for (int b = 0; b <= 1; ++b)
            for (int d : a.next[q][b]) r.add_edge((int)q, b, d);
        r.acc0[q] = a.acc0[q];
        r.acc1[q] = a.acc1[q];
    }
    r.init = a.init;
    return r;
}

}  // namespace

IntegerAutomaton ia_union(const IntegerAutomaton& a, const IntegerAutomaton& b) {
    IntegerAutomaton r = relabel(a, "L:");
    int off = (int)r.states.size();
    IntegerAutomaton rb = relabel(b, "R:");
    for (const auto& s : rb.states) r.add_state(s);
    for (std::size_t q = 0; q < rb.states.size(); ++q) {
        for (int bit = 0; bit <= 1; ++bit)
            for (int d : rb.next[q][bit]) r.add_edge((int)q + off, bit, d + off);
        r.acc0[q + off] = rb.acc0[q];
        r.acc1[q + off] = rb.acc1[q];
    }
    for (int q : rb.init) r.init.push_back(q + off);
    return r;
}

IntegerAutomaton ia_intersect(const IntegerAutomaton& a, const IntegerAutomaton& b) {
    IntegerAutomaton r;
    int nb = (int)b.states.size();
    for (std::size_t p = 0; p < a.states.size(); ++p)
        for (std::size_t q = 0; q < b.states.size(); ++q) {
            int i = r.add_state("(" + a.states[p] + ";" + b.states[q] + ")");
            r.acc0[i] = a.acc0[p] && b.acc0[q];
            r.acc1[i] = a.acc1[p] && b.acc1[q];
        }
    auto id = [&](int p, int q) { return p * nb + q; };
    for (std::size_t p = 0; p < a.states.size(); ++p)
        for (std::size_t q = 0; q < b.states.size(); ++q)
            for (int bit = 0; bit <= 1; ++bit)
                for (int dp : a.next[p][bit])
                    for (int dq : b.next[q][bit]) r.add_edge(id((int)p, (int)q), bit, id(dp, dq));
    for (int p : a.init)
        for (int q : b.init) r.init.push_back(id(p, q));
    return r;
}

IntegerAutomaton ia_scale2(const IntegerAutomaton& a, int plus) {
    IntegerAutomaton r = relabel(a, "S:");
    int fresh = r.add_state("fresh");
    for (int q : r.init) r.add_edge(fresh, plus, q);
    r.init = {fresh};
    return r;
}

IntegerAutomaton ia_negate(const IntegerAutomaton& a) {
    // two's complement: copy low 0s at s0, flip everything after the first 1
    IntegerAutomaton r;
    int n = (int)a.states.size();
    for (int c = 0; c <= 1; ++c)
        for (int q = 0; q < n; ++q)
            r.add_state((c == 0 ? "s0:" : "s1:") + a.states[q]);
    auto id = [&](int c, int q) { return c * n + q; };
    for (int q = 0; q < n; ++q) {
        // s0 reads 0 emitting 0; s0 reads 1 emitting 1 and latches s1
        for (int d : a.next[q][0]) r.add_edge(id(0, q), 0, id(0, d));
        for (int d : a.next[q][1]) r.add_edge(id(0, q), 1, id(1, d));
        // s1 flips: reads b, the original automaton sees 1-b
        for (int d : a.next[q][1]) r.add_edge(id(1, q), 0, id(1, d));
        for (int d : a.next[q][0]) r.add_edge(id(1, q), 1, id(1, d));
    }
    for (int q : a.init) r.init.push_back(id(0, q));
    for (int q = 0; q < n; ++q) {
        // tails: 0^w at s0 stays 0^w; 0^w at s1 came from 1^w; 1^w at s1 from 0^w
        if (a.acc0[q]) {
            r.acc0[id(0, q)] = 1;
            r.acc1[id(1, q)] = 1;
        }
        if (a.acc1[q]) r.acc0[id(1, q)] = 1;
    }
    return r;
}

IntegerAutomaton ia_tail_swap(const IntegerAutomaton& a) {
    IntegerAutomaton r = a;
    std::swap(r.acc0, r.acc1);
    return r;
}

IntegerAutomaton ia_ones_complement(const IntegerAutomaton& a) {
    IntegerAutomaton r = a;
    for (auto& n : r.next) std::swap(n[0], n[1]);
    std::swap(r.acc0, r.acc1);
    return r;
}

IntegerAutomaton ia_all_integers() {
    IntegerAutomaton r;
    int z = r.add_state("z");
    r.add_edge(z, 0, z);
    r.add_edge(z, 1, z);
    r.init = {z};
    r.acc0[z] = 1;
    r.acc1[z] = 1;
    return r;
}

std::optional<long long> ia_witness(const IntegerAutomaton& a) {
    Dfa d = determinize(a);
    std::vector<int> parent(d.succ.size(), -2), pbit(d.succ.size(), 0);
    std::deque<int> queue{d.start};
    parent[d.start] = -1;
    std::vector<int> order;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        order.push_back(v);
        for (int bit = 0; bit <= 1; ++bit) {
            int w = d.succ[v][bit];
            if (parent[w] == -2) {
                parent[w] = v;
                pbit[w] = bit;
                queue.push_back(w);
            }
        }
    }
    for (int v : order) {
        for (int t = 0; t <= 1; ++t) {
            if (!d.fin[v][t]) continue;
            std::vector<int> bits;
            for (int u = v; parent[u] != -1; u = parent[u]) bits.push_back(pbit[u]);
            std::reverse(bits.begin(), bits.end());
            UPWord w;
            for (int b : bits) w.prefix.push_back(b ? "1" : "0");
            w.cycle = {t ? "1" : "0"};
            return decode_integer(make_dyadic(std::move(w)));
        }
    }
    return std::nullopt;
}

std::vector<int> lead_pattern(const IntegerAutomaton& a, int maxlead) {
    Dfa d = determinize(a);
    auto nonempty = [&](int start) {
        std::vector<char> seen(d.succ.size(), 0);
        std::deque<int> queue{start};
        seen[start] = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            if (d.fin[v][0] || d.fin[v][1]) return true;
            for (int bit = 0; bit <= 1; ++bit)
                if (!seen[d.succ[v][bit]]) {
                    seen[d.succ[v][bit]] = 1;
                    queue.push_back(d.succ[v][bit]);
                }
        }
        return false;
    };
    std::vector<int> out;
    int s = d.start;
    for (int p = 0; p < maxlead; ++p) {
        if (nonempty(d.succ[s][1])) out.push_back(p);
        s = d.succ[s][0];
    }
    return out;
}

LambdaSystem make_lambda_system(const SafetyAutomaton& a, const Transducer& mu,
                                const PathWord& base_x, const PathWord& base_y) {
    LambdaSystem sys;
    sys.a = a;
    sys.mu = mu;
    sys.mu_inv = invert(mu);
    sys.base_x = base_x;
    sys.base_y = base_y;

    // starts of mu^m(base) for m in {-1,0,1}, both bases
    for (auto [tag, base] : {std::pair<char, const PathWord*>{'x', &base_x}, {'y', &base_y}}) {
        sys.orbit_small[{tag, 0}] = base->start;
        sys.orbit_small[{tag, 1}] = apply_path(mu, a, *base).start;
        sys.orbit_small[{tag, -1}] = apply_path(sys.mu_inv, a, *base).start;
    }

    // first edge must be minimal for the delta shift used below
    int delta_x = epsilons(path_prefix(base_x, 1))[0];
    int delta_y = epsilons(path_prefix(base_y, 1))[0];

    IntegerAutomaton& core = sys.core;
    auto name = [](char tag, const std::string& s, int c) {
        return std::string(1, tag) + ":" + s + ":" + std::to_string(c);
    };
    for (char tag : {'x', 'y'})
        for (const auto& s : a.states)
            for (int c = 0; c <= 1; ++c) core.add_state(name(tag, s, c));
    auto out = a.out_edges();
    for (auto [tag, ztag, delta] :
         {std::tuple<char, char, int>{'x', 'y', delta_x}, {'y', 'x', delta_y}}) {
        for (std::size_t s = 0; s < a.states.size(); ++s) {
            for (int c = 0; c <= 1; ++c) {
                int q = core.state_index(name(tag, a.states[s], c));
                for (auto [sym, tgt] : out[s]) {
                    int d = parse_label(a.alphabet[sym]).first - delta;
                    for (int b = 0; b <= 1; ++b) {
                        if ((b - d - c) % 2 != 0) continue;
                        int c2 = (b + c - d) / 2;
                        if (c2 < 0 || c2 > 1) continue;
                        core.add_edge(q, b, core.state_index(name(ztag, a.states[tgt], c2)));
                    }
                }
            }
        }
    }
    for (char tag : {'x', 'y'}) {
        for (int c = 0; c <= 1; ++c) {
            int q0 = core.state_index(name(tag, sys.orbit_small.at({tag, c}), c));
            core.acc0[q0] = 1;
            int q1 = core.state_index(name(tag, sys.orbit_small.at({tag, c - 1}), c));
            core.acc1[q1] = 1;
        }
    }

    // seed consistency: membership at -1, 0, 1 must match the orbit
    for (char tag : {'x', 'y'}) {
        for (int m : {-1, 0, 1}) {
            for (const auto& s : a.states) {
                IntegerAutomaton lam = build_lambda_automaton(sys, tag, s);
                if (ia_member(lam, m) != (s == sys.orbit_small.at({tag, m})))
                    throw std::logic_error("lambda seeds inconsistent with the orbit");
            }
        }
    }
    return sys;
}

IntegerAutomaton build_lambda_automaton(const LambdaSystem& sys, char which,
                                        const std::string& s, int carry) {
    IntegerAutomaton r = sys.core;
    int q = r.state_index(std::string(1, which) + ":" + s + ":" + std::to_string(carry));
    if (q < 0) throw std::invalid_argument("unknown base tag, state, or carry");
    r.init = {q};
    return r;
}

std::map<long long, std::string> orbit_oracle(const Transducer& mu,
                                              const SafetyAutomaton& a,
                                              const PathWord& base, int range) {
    if (range < 0 || range > (1 << 14)) throw std::invalid_argument("range out of bounds");
    std::map<long long, std::string> orbit;
    PathWord cur = base;
    for (int n = 0; n <= range; ++n) {
        orbit[n] = cur.start;
        if (n < range) cur = apply_path(mu, a, cur);
    }
    Transducer mui = invert(mu);
    cur = base;
    for (int n = 1; n <= range; ++n) {
        cur = apply_path(mui, a, cur);
        orbit[-n] = cur.start;
    }
    return orbit;
}

bool check_lambda_recursions(const LambdaSystem& sys) {
    auto out = sys.a.out_edges();
    for (auto [tag, other] : {std::pair<char, char>{'x', 'y'}, {'y', 'x'}}) {
        for (std::size_t s = 0; s < sys.a.states.size(); ++s) {
            std::optional<IntegerAutomaton> parts;
            for (auto [sym, tgt] : out[s]) {
                int r = parse_label(sys.a.alphabet[sym]).first;
                IntegerAutomaton piece =
                    ia_scale2(build_lambda_automaton(sys, other, sys.a.states[tgt]), r);
                parts = parts ? ia_union(*parts, piece) : piece;
            }
            if (!parts) return false;
            if (!ia_equal(build_lambda_automaton(sys, tag, sys.a.states[s]), *parts))
                return false;
        }
    }
    return true;
}

bool check_lambda_partition(const LambdaSystem& sys, char which) {
    std::optional<IntegerAutomaton> u;
    for (const auto& s : sys.a.states) {
        IntegerAutomaton lam = build_lambda_automaton(sys, which, s);
        u = u ? ia_union(*u, lam) : lam;
    }
    if (!u || !ia_equal(*u, ia_all_integers())) return false;
    for (std::size_t i = 0; i < sys.a.states.size(); ++i)
        for (std::size_t j = i + 1; j < sys.a.states.size(); ++j) {
            IntegerAutomaton x = build_lambda_automaton(sys, which, sys.a.states[i]);
            IntegerAutomaton y = build_lambda_automaton(sys, which, sys.a.states[j]);
            if (!ia_empty(ia_intersect(x, y))) return false;
        }
    return true;
}

BiminimalityReport check_biminimality_counterexample(const LambdaSystem& sys,
                                                     int oracle_range) {
    BiminimalityReport rep;
    IntegerAutomaton neg_xd = ia_negate(build_lambda_automaton(sys, 'x', "d"));
    IntegerAutomaton ye = build_lambda_automaton(sys, 'y', "e");
    IntegerAutomaton meet = ia_intersect(neg_xd, ye);
    rep.automata_sizes["neg_lambda_x_d"] = (int)neg_xd.states.size();
    rep.automata_sizes["lambda_y_e"] = (int)ye.states.size();
    rep.automata_sizes["intersection"] = (int)meet.states.size();
    rep.intersection_empty = ia_empty(meet);
    if (!rep.intersection_empty) {
        auto w = ia_witness(meet);
        rep.witness = w ? std::to_string(*w) : "unreconstructed";
    }

    IntegerAutomaton neg_ye = ia_negate(ye);
    IntegerAutomaton xd = build_lambda_automaton(sys, 'x', "d");
    rep.swapped_intersection_empty = ia_empty(ia_intersect(neg_ye, xd));

    IntegerAutomaton swap_meet =
        ia_intersect(ia_negate(build_lambda_automaton(sys, 'x', "e")),
                     build_lambda_automaton(sys, 'y', "d"));
    rep.sanity_zero_in_swapped_clopens = !ia_empty(swap_meet) && ia_member(swap_meet, 0);

    rep.first_one_positions_neg_x_d = lead_pattern(neg_xd, 20);
    rep.first_one_positions_y_e = lead_pattern(ye, 20);

    rep.oracle_range_checked = oracle_range;
    rep.oracle_agrees = true;
    for (auto [tag, base] : {std::pair<char, const PathWord*>{'x', &sys.base_x},
                             {'y', &sys.base_y}}) {
        auto orbit = orbit_oracle(sys.mu, sys.a, *base, oracle_range);
        for (const auto& s : sys.a.states) {
            Dfa dfa = determinize(build_lambda_automaton(sys, tag, s));
            for (long long n = -oracle_range; n <= oracle_range; ++n) {
                auto [pre, t] = digits_of(n);
                int v = dfa.start;
                for (int b : pre) v = dfa.succ[v][b];
                if (dfa.fin[v][t] != (orbit.at(n) == s)) rep.oracle_agrees = false;
            }
        }
    }

    rep.claim = rep.verdict_not_biminimal() && rep.sanity_zero_in_swapped_clopens
                    ? "not biminimal: no integer n has mu^n(y) in the e-cylinder and "
                      "mu^-n(x) in the d-cylinder"
                    : "inconclusive";
    return rep;
}

bool check_minimal(const SafetyAutomaton& a) { return is_strongly_connected(a); }

}  // namespace adicamata
