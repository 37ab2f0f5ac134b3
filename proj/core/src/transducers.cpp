#include "adicamata/transducer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace adicamata {

bool Transducer::Edge::operator<(const Edge& o) const {
    if (in != o.in) return in < o.in;
    if (out != o.out) return out < o.out;
    return dst < o.dst;
}

int Transducer::add_state(const std::string& name) {
    int i = state_index(name);
    if (i >= 0) return i;
    states.push_back(name);
    edges.emplace_back();
    return (int)states.size() - 1;
}

int Transducer::state_index(const std::string& name) const {
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i] == name) return (int)i;
    return -1;
}

namespace {
int find_or_add(std::vector<std::string>& v, const std::string& name) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] == name) return (int)i;
    v.push_back(name);
    return (int)v.size() - 1;
}
int find_only(const std::vector<std::string>& v, const std::string& name) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] == name) return (int)i;
    return -1;
}
}  // namespace

int Transducer::in_index(const std::string& name) const { return find_only(in_alphabet, name); }
int Transducer::out_index(const std::string& name) const { return find_only(out_alphabet, name); }

void Transducer::add_edge(const std::string& src, const std::string& in, const std::string& out,
                          const std::string& dst) {
    int s = add_state(src), d = add_state(dst);
    edges[s].push_back({find_or_add(in_alphabet, in), find_or_add(out_alphabet, out), d});
}

void Transducer::mark_initial(const std::string& name) {
    int i = add_state(name);
    if (std::find(initial.begin(), initial.end(), i) == initial.end()) initial.push_back(i);
}

void Transducer::normalize() {
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
    }
    std::sort(initial.begin(), initial.end());
    initial.erase(std::unique(initial.begin(), initial.end()), initial.end());
}

std::size_t Transducer::edge_count() const {
    std::size_t n = 0;
    for (const auto& e : edges) n += e.size();
    return n;
}

SafetyAutomaton to_safety(const Transducer& t) {
    SafetyAutomaton a;
    a.states = t.states;
    a.initial = t.initial;
    for (const std::string& i : t.in_alphabet)
        for (const std::string& o : t.out_alphabet) a.alphabet.push_back(i + "|" + o);
    const int width = (int)t.out_alphabet.size();
    for (std::size_t s = 0; s < t.edges.size(); ++s)
        for (const auto& e : t.edges[s])
            a.transitions.push_back({(int)s, e.in * width + e.out, e.dst});
    a.normalize();
    return a;
}

Transducer trim(const Transducer& t) {
    const std::size_t n = t.states.size();
    std::vector<bool> reach(n, false);
    std::deque<int> queue(t.initial.begin(), t.initial.end());
    for (int q : t.initial) reach[q] = true;
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        for (const auto& e : t.edges[q])
            if (!reach[e.dst]) {
                reach[e.dst] = true;
                queue.push_back(e.dst);
            }
    }
    std::vector<bool> live = reach;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t q = 0; q < n; ++q) {
            if (!live[q]) continue;
            bool has = false;
            for (const auto& e : t.edges[q])
                if (live[e.dst]) {
                    has = true;
                    break;
                }
            if (!has) {
                live[q] = false;
                changed = true;
            }
        }
    }
    Transducer r;
    r.in_alphabet = t.in_alphabet;
    r.out_alphabet = t.out_alphabet;
    std::vector<int> remap(n, -1);
    for (std::size_t i = 0; i < n; ++i)
        if (live[i]) {
            remap[i] = (int)r.states.size();
            r.states.push_back(t.states[i]);
            r.edges.emplace_back();
        }
    for (std::size_t i = 0; i < n; ++i) {
        if (!live[i]) continue;
        for (const auto& e : t.edges[i])
            if (live[e.dst]) r.edges[remap[i]].push_back({e.in, e.out, remap[e.dst]});
    }
    for (int q : t.initial)
        if (live[q]) r.initial.push_back(remap[q]);
    r.normalize();
    return r;
}

Transducer compose(const Transducer& s, const Transducer& t) {
    // map t's out symbols into s's in alphabet
    std::vector<int> link(t.out_alphabet.size(), -1);
    for (std::size_t i = 0; i < t.out_alphabet.size(); ++i) {
        link[i] = s.in_index(t.out_alphabet[i]);
        if (link[i] < 0)
            throw std::invalid_argument("compose: middle alphabet mismatch: " + t.out_alphabet[i]);
    }
    Transducer r;
    r.in_alphabet = t.in_alphabet;
    r.out_alphabet = s.out_alphabet;
    std::map<std::pair<int, int>, int> index;
    std::deque<std::pair<int, int>> queue;
    auto intern = [&](int ts, int ss) {
        auto it = index.find({ts, ss});
        if (it != index.end()) return it->second;
        int i = r.add_state("(" + t.states[ts] + ";" + s.states[ss] + ")");
        index[{ts, ss}] = i;
        queue.push_back({ts, ss});
        return i;
    };
    for (int ts : t.initial)
        for (int ss : s.initial) r.initial.push_back(intern(ts, ss));
    while (!queue.empty()) {
        auto [ts, ss] = queue.front();
        queue.pop_front();
        int src = index[{ts, ss}];
        for (const auto& te : t.edges[ts])
            for (const auto& se : s.edges[ss])
                if (link[te.out] == se.in) {
                    int d = intern(te.dst, se.dst);
                    r.edges[src].push_back({te.in, se.out, d});
                }
    }
    r.normalize();
    return trim(r);
}

Transducer invert(const Transducer& t) {
    Transducer r;
    r.states = t.states;
    r.initial = t.initial;
    r.in_alphabet = t.out_alphabet;
    r.out_alphabet = t.in_alphabet;
    r.edges.resize(t.edges.size());
    for (std::size_t s = 0; s < t.edges.size(); ++s)
        for (const auto& e : t.edges[s]) r.edges[s].push_back({e.out, e.in, e.dst});
    r.normalize();
    return r;
}

namespace {
SafetyAutomaton project(const Transducer& t, bool input) {
    SafetyAutomaton a;
    a.states = t.states;
    a.initial = t.initial;
    a.alphabet = input ? t.in_alphabet : t.out_alphabet;
    for (std::size_t s = 0; s < t.edges.size(); ++s)
        for (const auto& e : t.edges[s])
            a.transitions.push_back({(int)s, input ? e.in : e.out, e.dst});
    a.normalize();
    return trim(a);
}
}  // namespace

SafetyAutomaton input_projection(const Transducer& t) { return project(t, true); }
SafetyAutomaton output_projection(const Transducer& t) { return project(t, false); }

Transducer diagonal(const SafetyAutomaton& a) {
    Transducer r;
    r.states = a.states;
    r.in_alphabet = a.alphabet;
    r.out_alphabet = a.alphabet;
    r.initial = a.initial;
    r.edges.resize(a.states.size());
    for (const auto& t : a.transitions) r.edges[t.src].push_back({t.sym, t.sym, t.dst});
    r.normalize();
    return r;
}

Transducer power(const Transducer& t, int n) {
    if (n == 0) throw std::invalid_argument("power: n must be nonzero");
    Transducer base = n > 0 ? t : invert(t);
    int k = n > 0 ? n : -n;
    Transducer acc = trim(base);
    for (int i = 1; i < k; ++i) acc = compose(base, acc);
    return acc;
}

bool t_language_equal(const Transducer& a, const Transducer& b) {
    return language_equal(to_safety(a), to_safety(b));
}

bool t_language_subset(const Transducer& a, const Transducer& b) {
    return language_subset(to_safety(a), to_safety(b));
}

bool is_unambiguous(const Transducer& t0) {
    Transducer t = trim(t0);
    // self-product synchronized on inputs; flag records an output mismatch
    std::map<std::tuple<int, int, int>, int> index;
    std::vector<std::tuple<int, int, int>> nodes;
    std::vector<std::vector<int>> adj;
    std::deque<int> queue;
    auto intern = [&](int p, int q, int flag) {
        auto key = std::make_tuple(p, q, flag);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        int i = (int)nodes.size();
        nodes.push_back(key);
        adj.emplace_back();
        index[key] = i;
        queue.push_back(i);
        return i;
    };
    for (int p : t.initial)
        for (int q : t.initial) intern(p, q, 0);
    while (!queue.empty()) {
        int i = queue.front();
        queue.pop_front();
        auto [p, q, flag] = nodes[i];
        for (const auto& ep : t.edges[p])
            for (const auto& eq : t.edges[q])
                if (ep.in == eq.in) {
                    int f = flag | (ep.out != eq.out ? 1 : 0);
                    int d = intern(ep.dst, eq.dst, f);
                    adj[i].push_back(d);
                }
    }
    // prune nodes without infinite continuation
    std::vector<char> alive(nodes.size(), 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (!alive[i]) continue;
            bool has = false;
            for (int d : adj[i])
                if (alive[d]) {
                    has = true;
                    break;
                }
            if (!has) {
                alive[i] = 0;
                changed = true;
            }
        }
    }
    // reachable live node with a recorded mismatch witnesses two runs on a
    // common input with different outputs
    std::vector<char> seen(nodes.size(), 0);
    std::deque<int> bfs;
    for (int p : t.initial)
        for (int q : t.initial) {
            int i = index[{p, q, 0}];
            if (alive[i] && !seen[i]) {
                seen[i] = 1;
                bfs.push_back(i);
            }
        }
    while (!bfs.empty()) {
        int i = bfs.front();
        bfs.pop_front();
        if (std::get<2>(nodes[i]) == 1) return false;
        for (int d : adj[i])
            if (alive[d] && !seen[d]) {
                seen[d] = 1;
                bfs.push_back(d);
            }
    }
    return true;
}

namespace {

UPWord walk_output(const Transducer& t, const std::vector<int>& word, std::size_t P,
                   std::size_t L, const std::vector<char>& alive, int start_node, bool smallest) {
    // follow surviving (state, position) nodes, always taking the extreme
    // (out, dst) choice; stop when a node in the cyclic zone repeats
    const auto node_of = [&](int q, std::size_t pos) { return q * (int)L + (int)pos; };
    std::vector<int> first_seen(t.states.size() * L, -1);
    std::vector<std::string> outs;
    int q = start_node / (int)L;
    std::size_t pos = start_node % L;
    for (;;) {
        int id = node_of(q, pos);
        if (pos >= P) {
            if (first_seen[id] >= 0) {
                UPWord w;
                w.prefix.assign(outs.begin(), outs.begin() + first_seen[id]);
                w.cycle.assign(outs.begin() + first_seen[id], outs.end());
                return canonical(w);
            }
            first_seen[id] = (int)outs.size();
        }
        const Transducer::Edge* best = nullptr;
        for (const auto& e : t.edges[q]) {
            if (e.in != word[pos]) continue;
            std::size_t npos = pos + 1 < L ? pos + 1 : P;
            if (!alive[node_of(e.dst, npos)]) continue;
            if (!best) {
                best = &e;
                continue;
            }
            auto key = std::make_pair(t.out_alphabet[e.out], e.dst);
            auto bkey = std::make_pair(t.out_alphabet[best->out], best->dst);
            if (smallest ? key < bkey : key > bkey) best = &e;
        }
        if (!best) throw std::runtime_error("apply: walk left the surviving graph");
        outs.push_back(t.out_alphabet[best->out]);
        q = best->dst;
        pos = pos + 1 < L ? pos + 1 : P;
        if (outs.size() > t.states.size() * L + L + 2)
            throw std::runtime_error("apply: cycle detection exceeded bound");
    }
}

}  // namespace

UPWord apply(const Transducer& t0, const UPWord& w) {
    Transducer t = trim(t0);
    if (w.cycle.empty()) throw std::invalid_argument("empty cycle");
    const std::size_t P = w.prefix.size(), C = w.cycle.size(), L = P + C;
    std::vector<int> word(L);
    for (std::size_t i = 0; i < L; ++i) {
        const std::string& name = i < P ? w.prefix[i] : w.cycle[i - P];
        int s = t.in_index(name);
        if (s < 0) throw std::domain_error("apply: symbol '" + name + "' not in input alphabet");
        word[i] = s;
    }
    const std::size_t n = t.states.size();
    auto node_of = [&](int q, std::size_t pos) { return q * (int)L + (int)pos; };
    std::vector<char> alive(n * L, 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t pos = 0; pos < L; ++pos) {
                if (!alive[node_of((int)q, pos)]) continue;
                bool has = false;
                std::size_t npos = pos + 1 < L ? pos + 1 : P;
                for (const auto& e : t.edges[q])
                    if (e.in == word[pos] && alive[node_of(e.dst, npos)]) {
                        has = true;
                        break;
                    }
                if (!has) {
                    alive[node_of((int)q, pos)] = 0;
                    changed = true;
                }
            }
    }
    int start = -1;
    for (int q : t.initial)
        if (alive[node_of(q, 0)]) {
            start = node_of(q, 0);
            break;
        }
    if (start < 0) throw std::domain_error("apply: word not in the transducer domain");
    UPWord lo = walk_output(t, word, P, L, alive, start, true);
    // cross-check against the opposite extreme walk over all viable starts
    UPWord hi = lo;
    for (int q : t.initial)
        if (alive[node_of(q, 0)]) {
            UPWord cand = walk_output(t, word, P, L, alive, node_of(q, 0), false);
            hi = cand;
            if (!(hi == lo))
                throw std::invalid_argument("apply: relation is not single-valued on this input");
        }
    return lo;
}

namespace {

// iterative Tarjan strongly connected components
std::vector<int> scc_of(const std::vector<std::vector<int>>& adj) {
    const int n = (int)adj.size();
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    int next_index = 0, next_comp = 0;
    for (int root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        std::vector<std::pair<int, std::size_t>> call{{root, 0}};
        while (!call.empty()) {
            auto& [v, ei] = call.back();
            if (ei == 0) {
                index[v] = low[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = 1;
            }
            bool descended = false;
            while (ei < adj[v].size()) {
                int w = adj[v][ei++];
                if (index[w] < 0) {
                    call.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[v] = std::min(low[v], index[w]);
            }
            if (descended) continue;
            if (low[v] == index[v]) {
                for (;;) {
                    int w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = next_comp;
                    if (w == v) break;
                }
                ++next_comp;
            }
            int finished = v;
            call.pop_back();
            if (!call.empty()) {
                int parent = call.back().first;
                low[parent] = std::min(low[parent], low[finished]);
            }
        }
    }
    return comp;
}

}  // namespace

Transducer recurrent_part(const Transducer& t) {
    const std::size_t n = t.states.size();
    std::vector<std::vector<int>> adj(n);
    for (std::size_t s = 0; s < n; ++s)
        for (const auto& e : t.edges[s]) adj[s].push_back(e.dst);
    std::vector<int> comp = scc_of(adj);
    std::set<int> with_edge;
    for (std::size_t s = 0; s < n; ++s)
        for (const auto& e : t.edges[s])
            if (comp[s] == comp[e.dst]) with_edge.insert(comp[s]);
    Transducer r;
    r.in_alphabet = t.in_alphabet;
    r.out_alphabet = t.out_alphabet;
    std::vector<int> remap(n, -1);
    for (std::size_t i = 0; i < n; ++i)
        if (with_edge.count(comp[i])) {
            remap[i] = (int)r.states.size();
            r.states.push_back(t.states[i]);
            r.edges.emplace_back();
        }
    for (std::size_t i = 0; i < n; ++i) {
        if (remap[i] < 0) continue;
        for (const auto& e : t.edges[i])
            if (remap[e.dst] >= 0) r.edges[remap[i]].push_back({e.in, e.out, remap[e.dst]});
    }
    for (int q : t.initial)
        if (remap[q] >= 0) r.initial.push_back(remap[q]);
    if (r.initial.empty())
        for (std::size_t i = 0; i < r.states.size(); ++i) r.initial.push_back((int)i);
    r.normalize();
    return r;
}

namespace {

SafetyAutomaton rooted_safety(const Transducer& t, const std::string& state) {
    SafetyAutomaton a = to_safety(t);
    int i = a.state_index(state);
    if (i < 0) throw std::invalid_argument("unknown state " + state);
    a.initial = {i};
    return a;
}

}  // namespace

bool rooted_language_equal(const Transducer& a, const std::string& a_state, const Transducer& b,
                           const std::string& b_state) {
    return language_equal(rooted_safety(a, a_state), rooted_safety(b, b_state));
}

bool rooted_language_subset(const Transducer& a, const std::string& a_state, const Transducer& b,
                            const std::string& b_state) {
    return language_subset(rooted_safety(a, a_state), rooted_safety(b, b_state));
}

Transducer build_nucleus(const Transducer& adic) {
    Transducer t = trim(adic);
    std::vector<char> is_carry(t.states.size(), 0);
    for (int q : t.initial) is_carry[q] = 1;
    auto inv_name = [&](const std::string& name) {
        if (name.rfind("mu_", 0) == 0) return "mui_" + name.substr(3);
        return "inv_" + name;
    };
    Transducer n;
    n.in_alphabet = t.in_alphabet;
    n.out_alphabet = t.out_alphabet;
    for (std::size_t s = 0; s < t.states.size(); ++s) {
        n.add_state(t.states[s]);
        if (is_carry[s]) n.add_state(inv_name(t.states[s]));
    }
    for (std::size_t s = 0; s < t.states.size(); ++s) {
        for (const auto& e : t.edges[s]) {
            const std::string& in = t.in_alphabet[e.in];
            const std::string& out = t.out_alphabet[e.out];
            const std::string& dst = t.states[e.dst];
            n.add_edge(t.states[s], in, out, dst);
            if (is_carry[s])
                n.add_edge(inv_name(t.states[s]), out, in,
                           is_carry[e.dst] ? inv_name(dst) : dst);
        }
    }
    for (const std::string& s : n.states) n.mark_initial(s);
    n.normalize();
    return n;
}

bool check_nuclear(const Transducer& nucleus, const Transducer& adic, int powers) {
    if (powers < 2) throw std::invalid_argument("powers must be >= 2");
    for (int k = 2; k <= powers; ++k)
        for (int n : {k, -k}) {
            Transducer machine = trim(power(adic, n));
            Transducer rec = recurrent_part(machine);
            for (const std::string& q : rec.states) {
                bool matched = false;
                for (const std::string& p : nucleus.states)
                    if (rooted_language_equal(machine, q, nucleus, p)) {
                        matched = true;
                        break;
                    }
                if (!matched) return false;
            }
        }
    return true;
}

SelfCompositionReport check_nucleus_self_composition(const Transducer& nucleus) {
    Transducer nn = trim(compose(nucleus, nucleus));
    Transducer rec = recurrent_part(nn);
    SelfCompositionReport report;
    report.recurrent_states = (int)rec.states.size();
    report.contained = true;
    for (const std::string& q : rec.states) {
        bool eq = false, sub = false;
        for (const std::string& p : nucleus.states) {
            if (rooted_language_equal(nn, q, nucleus, p)) {
                eq = true;
                sub = true;
                break;
            }
            if (!sub && rooted_language_subset(nn, q, nucleus, p)) sub = true;
        }
        if (eq)
            ++report.equal_to_nucleus_state;
        else if (sub)
            ++report.contained_only;
        else
            report.contained = false;
    }
    return report;
}

long long count_paths_avoiding(const Transducer& t, const std::string& name_prefix, int n) {
    std::vector<int> keep;
    std::vector<int> remap(t.states.size(), -1);
    for (std::size_t i = 0; i < t.states.size(); ++i)
        if (t.states[i].rfind(name_prefix, 0) != 0) {
            remap[i] = (int)keep.size();
            keep.push_back((int)i);
        }
    std::vector<long long> count(keep.size(), 1);
    for (int step = 0; step < n; ++step) {
        std::vector<long long> next(keep.size(), 0);
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (const auto& e : t.edges[keep[i]])
                if (remap[e.dst] >= 0) next[i] += count[remap[e.dst]];
        count = std::move(next);
    }
    long long total = 0;
    for (long long c : count) total += c;
    return total;
}

}  // namespace adicamata
