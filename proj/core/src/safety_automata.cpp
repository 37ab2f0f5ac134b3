#include "adicamata/safety_automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace adicamata {

bool UPWord::operator<(const UPWord& o) const {
    if (prefix != o.prefix) return prefix < o.prefix;
    return cycle < o.cycle;
}

const std::string& UPWord::at(std::size_t n) const {
    if (n < prefix.size()) return prefix[n];
    if (cycle.empty()) throw std::invalid_argument("empty cycle");
    return cycle[(n - prefix.size()) % cycle.size()];
}

UPWord canonical(UPWord w) {
    if (w.cycle.empty()) throw std::invalid_argument("empty cycle");
    // primitive cycle: cut to the smallest period
    for (std::size_t p = 1; p <= w.cycle.size(); ++p) {
        if (w.cycle.size() % p != 0) continue;
        bool period = true;
        for (std::size_t i = p; i < w.cycle.size() && period; ++i)
            period = w.cycle[i] == w.cycle[i - p];
        if (period) {
            w.cycle.resize(p);
            break;
        }
    }
    // shortest prefix: absorb matching tail letters into the cycle rotation
    while (!w.prefix.empty() && w.prefix.back() == w.cycle.back()) {
        w.prefix.pop_back();
        std::rotate(w.cycle.begin(), w.cycle.end() - 1, w.cycle.end());
    }
    return w;
}

UPWord up_from_chars(const std::string& prefix, const std::string& cycle) {
    UPWord w;
    for (char c : prefix) w.prefix.push_back(std::string(1, c));
    for (char c : cycle) w.cycle.push_back(std::string(1, c));
    return canonical(w);
}

bool SafetyAutomaton::Transition::operator<(const Transition& o) const {
    if (src != o.src) return src < o.src;
    if (sym != o.sym) return sym < o.sym;
    return dst < o.dst;
}

int SafetyAutomaton::add_state(const std::string& name) {
    int i = state_index(name);
    if (i >= 0) return i;
    states.push_back(name);
    return (int)states.size() - 1;
}

int SafetyAutomaton::add_symbol(const std::string& name) {
    int i = symbol_index(name);
    if (i >= 0) return i;
    alphabet.push_back(name);
    return (int)alphabet.size() - 1;
}

int SafetyAutomaton::state_index(const std::string& name) const {
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i] == name) return (int)i;
    return -1;
}

int SafetyAutomaton::symbol_index(const std::string& name) const {
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == name) return (int)i;
    return -1;
}

void SafetyAutomaton::add_transition(const std::string& src, const std::string& sym,
                                     const std::string& dst) {
    transitions.push_back({add_state(src), add_symbol(sym), add_state(dst)});
}

void SafetyAutomaton::mark_initial(const std::string& name) {
    int i = add_state(name);
    if (std::find(initial.begin(), initial.end(), i) == initial.end()) initial.push_back(i);
}

void SafetyAutomaton::normalize() {
    std::sort(transitions.begin(), transitions.end());
    transitions.erase(std::unique(transitions.begin(), transitions.end()), transitions.end());
    std::sort(initial.begin(), initial.end());
    initial.erase(std::unique(initial.begin(), initial.end()), initial.end());
}

std::vector<std::vector<std::pair<int, int>>> SafetyAutomaton::out_edges() const {
    std::vector<std::vector<std::pair<int, int>>> out(states.size());
    for (const Transition& t : transitions) out[t.src].push_back({t.sym, t.dst});
    return out;
}

namespace {

SafetyAutomaton restrict_states(const SafetyAutomaton& a, const std::vector<bool>& keep) {
    SafetyAutomaton r;
    r.alphabet = a.alphabet;
    std::vector<int> remap(a.states.size(), -1);
    for (std::size_t i = 0; i < a.states.size(); ++i)
        if (keep[i]) {
            remap[i] = (int)r.states.size();
            r.states.push_back(a.states[i]);
        }
    for (int i : a.initial)
        if (keep[i]) r.initial.push_back(remap[i]);
    for (const auto& t : a.transitions)
        if (keep[t.src] && keep[t.dst]) r.transitions.push_back({remap[t.src], t.sym, remap[t.dst]});
    r.normalize();
    return r;
}

}  // namespace

SafetyAutomaton trim(const SafetyAutomaton& a) {
    const std::size_t n = a.states.size();
    auto out = a.out_edges();
    std::vector<bool> reach(n, false);
    std::deque<int> queue(a.initial.begin(), a.initial.end());
    for (int q : a.initial) reach[q] = true;
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        for (auto [sym, d] : out[q])
            if (!reach[d]) {
                reach[d] = true;
                queue.push_back(d);
            }
    }
    std::vector<bool> live = reach;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t q = 0; q < n; ++q) {
            if (!live[q]) continue;
            bool has = false;
            for (auto [sym, d] : out[q])
                if (live[d]) {
                    has = true;
                    break;
                }
            if (!has) {
                live[q] = false;
                changed = true;
            }
        }
    }
    return restrict_states(a, live);
}

bool accepts(const SafetyAutomaton& a, const UPWord& w) {
    if (w.cycle.empty()) throw std::invalid_argument("empty cycle");
    const std::size_t P = w.prefix.size(), C = w.cycle.size(), L = P + C;
    std::vector<int> word(L);
    for (std::size_t i = 0; i < L; ++i) {
        const std::string& name = i < P ? w.prefix[i] : w.cycle[i - P];
        int s = a.symbol_index(name);
        if (s < 0) throw std::invalid_argument("symbol '" + name + "' not in alphabet");
        word[i] = s;
    }
    if (a.states.empty()) return false;
    const std::size_t n = a.states.size();
    auto out = a.out_edges();
    auto node = [&](std::size_t q, std::size_t pos) { return q * L + pos; };
    auto next_pos = [&](std::size_t pos) { return pos + 1 < L ? pos + 1 : P; };

    // prune (state, position) pairs with no infinite continuation
    std::vector<char> alive(n * L, 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t pos = 0; pos < L; ++pos) {
                if (!alive[node(q, pos)]) continue;
                bool has = false;
                for (auto [sym, d] : out[q])
                    if (sym == word[pos] && alive[node(d, next_pos(pos))]) {
                        has = true;
                        break;
                    }
                if (!has) {
                    alive[node(q, pos)] = 0;
                    changed = true;
                }
            }
    }
    for (int q : a.initial)
        if (alive[node(q, 0)]) return true;
    return false;
}

namespace {

// check two alphabets agree as sets and build index map from b to a
std::vector<int> align_alphabet(const SafetyAutomaton& a, const SafetyAutomaton& b) {
    if (a.alphabet.size() != b.alphabet.size())
        throw std::invalid_argument("alphabet mismatch");
    std::vector<int> map(b.alphabet.size());
    for (std::size_t i = 0; i < b.alphabet.size(); ++i) {
        int j = a.symbol_index(b.alphabet[i]);
        if (j < 0) throw std::invalid_argument("alphabet mismatch: " + b.alphabet[i]);
        map[i] = j;
    }
    return map;
}

}  // namespace

SafetyAutomaton product(const SafetyAutomaton& a, const SafetyAutomaton& b) {
    std::vector<int> bmap = align_alphabet(a, b);
    auto aout = a.out_edges();
    auto bout = b.out_edges();
    SafetyAutomaton r;
    r.alphabet = a.alphabet;
    std::map<std::pair<int, int>, int> index;
    std::deque<std::pair<int, int>> queue;
    auto intern = [&](int p, int q) {
        auto it = index.find({p, q});
        if (it != index.end()) return it->second;
        int i = (int)r.states.size();
        r.states.push_back("(" + a.states[p] + "," + b.states[q] + ")");
        index[{p, q}] = i;
        queue.push_back({p, q});
        return i;
    };
    for (int p : a.initial)
        for (int q : b.initial) r.initial.push_back(intern(p, q));
    while (!queue.empty()) {
        auto [p, q] = queue.front();
        queue.pop_front();
        int src = index[{p, q}];
        for (auto [sa, da] : aout[p])
            for (auto [sb, db] : bout[q])
                if (sa == bmap[sb]) r.transitions.push_back({src, sa, intern(da, db)});
    }
    r.normalize();
    return trim(r);
}

SafetyAutomaton determinize(const SafetyAutomaton& a0) {
    SafetyAutomaton a = trim(a0);
    SafetyAutomaton r;
    r.alphabet = a.alphabet;
    if (a.states.empty()) return r;
    auto out = a.out_edges();
    auto name_of = [&](const std::vector<int>& set) {
        std::string s = "{";
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (i) s += ",";
            s += a.states[set[i]];
        }
        return s + "}";
    };
    std::map<std::vector<int>, int> index;
    std::deque<std::vector<int>> queue;
    auto intern = [&](std::vector<int> set) {
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        auto it = index.find(set);
        if (it != index.end()) return it->second;
        int i = (int)r.states.size();
        r.states.push_back(name_of(set));
        index[set] = i;
        queue.push_back(set);
        return i;
    };
    r.initial.push_back(intern(a.initial));
    while (!queue.empty()) {
        std::vector<int> set = queue.front();
        queue.pop_front();
        int src = index[set];
        for (std::size_t sym = 0; sym < a.alphabet.size(); ++sym) {
            std::vector<int> succ;
            for (int q : set)
                for (auto [s, d] : out[q])
                    if (s == (int)sym) succ.push_back(d);
            if (succ.empty()) continue;
            r.transitions.push_back({src, (int)sym, intern(succ)});
        }
    }
    r.normalize();
    return r;
}

namespace {

// per-state bitmask of enabled symbols in a deterministic trim automaton
std::vector<std::vector<int>> enabled_successors(const SafetyAutomaton& a,
                                                 const std::vector<int>& symmap) {
    // successor state per (state, canonical symbol), -1 when disabled
    std::vector<std::vector<int>> succ(a.states.size(),
                                       std::vector<int>(symmap.size(), -1));
    std::vector<int> inverse(symmap.size(), -1);
    for (std::size_t i = 0; i < symmap.size(); ++i) inverse[symmap[i]] = (int)i;
    for (const auto& t : a.transitions) succ[t.src][inverse[t.sym]] = t.dst;
    return succ;
}

bool compare_languages(const SafetyAutomaton& a0, const SafetyAutomaton& b0, bool equal) {
    SafetyAutomaton a = determinize(trim(a0));
    SafetyAutomaton b = determinize(trim(b0));
    bool a_empty = a.initial.empty(), b_empty = b.initial.empty();
    if (a_empty || b_empty) return equal ? a_empty == b_empty : a_empty;
    std::vector<int> id(a0.alphabet.size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = (int)i;
    std::vector<int> bmap = align_alphabet(a, b);
    // succ tables indexed by a's symbol order
    auto asucc = enabled_successors(a, id);
    std::vector<std::vector<int>> bsucc(b.states.size(),
                                        std::vector<int>(a.alphabet.size(), -1));
    for (const auto& t : b.transitions) bsucc[t.src][bmap[t.sym]] = t.dst;

    std::set<std::pair<int, int>> seen;
    std::deque<std::pair<int, int>> queue;
    queue.push_back({a.initial[0], b.initial[0]});
    seen.insert(queue.front());
    while (!queue.empty()) {
        auto [p, q] = queue.front();
        queue.pop_front();
        for (std::size_t s = 0; s < a.alphabet.size(); ++s) {
            int pa = asucc[p][s], pb = bsucc[q][s];
            if (equal) {
                if ((pa < 0) != (pb < 0)) return false;
            } else {
                if (pa >= 0 && pb < 0) return false;
            }
            if (pa >= 0 && pb >= 0 && seen.insert({pa, pb}).second) queue.push_back({pa, pb});
        }
    }
    return true;
}

}  // namespace

bool language_equal(const SafetyAutomaton& a, const SafetyAutomaton& b) {
    return compare_languages(a, b, true);
}

bool language_subset(const SafetyAutomaton& a, const SafetyAutomaton& b) {
    return compare_languages(a, b, false);
}

bool is_empty(const SafetyAutomaton& a) { return trim(a).states.empty(); }

bool is_strongly_connected(const SafetyAutomaton& a) {
    const std::size_t n = a.states.size();
    if (n == 0) return false;
    auto reach_all = [&](bool forward) {
        std::vector<std::vector<int>> adj(n);
        for (const auto& t : a.transitions) {
            if (forward)
                adj[t.src].push_back(t.dst);
            else
                adj[t.dst].push_back(t.src);
        }
        std::vector<bool> seen(n, false);
        std::deque<int> queue{0};
        seen[0] = true;
        std::size_t count = 1;
        while (!queue.empty()) {
            int q = queue.front();
            queue.pop_front();
            for (int d : adj[q])
                if (!seen[d]) {
                    seen[d] = true;
                    ++count;
                    queue.push_back(d);
                }
        }
        return count == n;
    };
    return reach_all(true) && reach_all(false);
}

}  // namespace adicamata
