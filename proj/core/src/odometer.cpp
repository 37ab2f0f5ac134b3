#include "adicamata/odometer.hpp"

#include <algorithm>
#include <stdexcept>

namespace adicamata {

namespace {

const std::string& bit_at(const UPWord& w, std::size_t n) { return w.at(n); }

void check_bits(const UPWord& w) {
    for (const auto& s : w.prefix)
        if (s != "0" && s != "1") throw std::invalid_argument("not a bit: " + s);
    for (const auto& s : w.cycle)
        if (s != "0" && s != "1") throw std::invalid_argument("not a bit: " + s);
    if (w.cycle.empty()) throw std::invalid_argument("empty cycle");
}

std::vector<std::string> rotate_left(std::vector<std::string> v, std::size_t k) {
    if (v.empty()) return v;
    k %= v.size();
    std::rotate(v.begin(), v.begin() + k, v.end());
    return v;
}

std::string forget_symbol(const std::string& s) {
    auto us = s.find('_');
    return us == std::string::npos ? s : s.substr(0, us);
}

}  // namespace

DyadicWord make_dyadic(UPWord bits) {
    check_bits(bits);
    return {canonical(std::move(bits))};
}

DyadicWord parse_dyadic(const std::string& text) {
    auto open = text.find('(');
    auto close = text.find(')');
    if (open == std::string::npos || close != text.size() - 1 || close < open)
        throw std::invalid_argument("expected prefix(cycle): " + text);
    UPWord w;
    for (char c : text.substr(0, open)) w.prefix.push_back(std::string(1, c));
    for (char c : text.substr(open + 1, close - open - 1)) w.cycle.push_back(std::string(1, c));
    return make_dyadic(std::move(w));
}

std::string print_dyadic(const DyadicWord& w) {
    std::string s;
    for (const auto& b : w.bits.prefix) s += b;
    s += "(";
    for (const auto& b : w.bits.cycle) s += b;
    s += ")";
    return s;
}

bool is_integer(const DyadicWord& w) {
    return w.bits.cycle == std::vector<std::string>{"0"} ||
           w.bits.cycle == std::vector<std::string>{"1"};
}

DyadicWord encode_integer(long long n) {
    UPWord w;
    if (n >= 0) {
        while (n > 0) {
            w.prefix.push_back(n & 1 ? "1" : "0");
            n >>= 1;
        }
        w.cycle = {"0"};
    } else {
        while (n != -1) {
            w.prefix.push_back(n & 1 ? "1" : "0");
            n >>= 1;
        }
        w.cycle = {"1"};
    }
    return make_dyadic(std::move(w));
}

long long decode_integer(const DyadicWord& w) {
    if (!is_integer(w)) throw std::invalid_argument("not an integer: " + print_dyadic(w));
    std::size_t p = w.bits.prefix.size();
    if (p > 62) throw std::overflow_error("integer too large");
    long long v = 0;
    for (std::size_t i = 0; i < p; ++i)
        if (w.bits.prefix[i] == "1") v += 1LL << i;
    if (w.bits.cycle[0] == "1") v -= 1LL << p;
    return v;
}

DyadicWord add_one(const DyadicWord& w) {
    std::size_t p = w.bits.prefix.size(), c = w.bits.cycle.size();
    std::size_t k = p + c;
    for (std::size_t i = 0; i < p + c; ++i)
        if (bit_at(w.bits, i) == "0") {
            k = i;
            break;
        }
    if (k == p + c) return encode_integer(0);  // the word was 1^w
    UPWord r;
    for (std::size_t i = 0; i < k; ++i) r.prefix.push_back("0");
    r.prefix.push_back("1");
    if (k + 1 <= p) {
        for (std::size_t i = k + 1; i < p; ++i) r.prefix.push_back(w.bits.prefix[i]);
        r.cycle = w.bits.cycle;
    } else {
        r.cycle = rotate_left(w.bits.cycle, (k + 1 - p) % c);
    }
    return make_dyadic(std::move(r));
}

DyadicWord double_dyadic(const DyadicWord& w) {
    UPWord r = w.bits;
    r.prefix.insert(r.prefix.begin(), "0");
    return make_dyadic(std::move(r));
}

TildeDyadic make_tilde(DyadicWord value, std::optional<int> branch) {
    if (branch.has_value() != is_integer(value))
        throw std::invalid_argument("branch bit present iff the value is an integer");
    if (branch && *branch != 0 && *branch != 1)
        throw std::invalid_argument("branch must be a bit");
    return {std::move(value), branch};
}

int phi(const TildeDyadic& z) {
    const UPWord& b = z.value.bits;
    std::size_t len = b.prefix.size() + b.cycle.size();
    for (std::size_t n = 0; n < len; ++n)
        if (bit_at(b, n) == "1") return (int)((n + 1) % 2);
    // value 0: the branch clause
    if (!z.branch) throw std::logic_error("zero without a branch bit");
    return (*z.branch + 1) % 2;
}

SymmetricPoint mu_tilde(const SymmetricPoint& p) {
    TildeDyadic z1 = make_tilde(add_one(p.z.value), p.z.branch);
    return {(p.s + phi(z1)) % 2, z1};
}

TildeDyadic pi_tilde(const PathWord& z) {
    UPWord bits;
    for (const auto& s : z.word.prefix)
        bits.prefix.push_back(std::string(1, '0' + parse_label(s).first));
    for (const auto& s : z.word.cycle)
        bits.cycle.push_back(std::string(1, '0' + parse_label(s).first));
    DyadicWord value = make_dyadic(std::move(bits));
    if (!is_integer(value)) return {value, std::nullopt};
    // branch 0 iff the path visits {b, e} at arbitrarily large even
    // positions, with the start at position 0; one doubled period of the
    // cycle zone decides
    std::size_t p = z.word.prefix.size(), c = z.word.cycle.size();
    int t = 1;
    for (std::size_t n = p + 1; n <= p + 2 * c; ++n) {
        if (n % 2 != 0) continue;
        const std::string& v = parse_label(z.word.at(n - 1)).second;
        if (v == "b" || v == "e") t = 0;
    }
    return make_tilde(value, t);
}

int s_of(const PathWord& z) {
    return (z.start == "a" || z.start == "d" || z.start == "e") ? 0 : 1;
}

SafetyAutomaton forget_decorations(const SafetyAutomaton& a) {
    SafetyAutomaton r;
    r.states = a.states;
    r.initial = a.initial;
    std::vector<int> map(a.alphabet.size());
    for (std::size_t i = 0; i < a.alphabet.size(); ++i)
        map[i] = r.add_symbol(forget_symbol(a.alphabet[i]));
    for (const auto& t : a.transitions) r.transitions.push_back({t.src, map[t.sym], t.dst});
    r.normalize();
    return r;
}

Transducer forget_decorations(const Transducer& t) {
    Transducer r;
    r.states = t.states;
    r.initial = t.initial;
    r.edges.resize(t.states.size());
    std::vector<int> in_map(t.in_alphabet.size()), out_map(t.out_alphabet.size());
    for (std::size_t i = 0; i < t.in_alphabet.size(); ++i) {
        std::string f = forget_symbol(t.in_alphabet[i]);
        int j = r.in_index(f);
        in_map[i] = j >= 0 ? j : (r.in_alphabet.push_back(f), (int)r.in_alphabet.size() - 1);
    }
    for (std::size_t i = 0; i < t.out_alphabet.size(); ++i) {
        std::string f = forget_symbol(t.out_alphabet[i]);
        int j = r.out_index(f);
        out_map[i] = j >= 0 ? j : (r.out_alphabet.push_back(f), (int)r.out_alphabet.size() - 1);
    }
    for (std::size_t s = 0; s < t.edges.size(); ++s)
        for (const auto& e : t.edges[s])
            r.edges[s].push_back({in_map[e.in], out_map[e.out], e.dst});
    r.normalize();
    return r;
}

SafetyAutomaton build_B() {
    SafetyAutomaton b;
    b.add_transition("q", "0", "q");
    b.add_transition("q", "1", "q");
    b.mark_initial("q");
    b.normalize();
    return b;
}

Transducer build_B_tau() {
    Transducer t;
    t.in_alphabet = {"0", "1"};
    t.out_alphabet = {"0", "1"};
    t.add_edge("tau", "1", "0", "tau");
    t.add_edge("tau", "0", "1", "id");
    t.add_edge("id", "0", "0", "id");
    t.add_edge("id", "1", "1", "id");
    t.mark_initial("tau");
    t.normalize();
    return t;
}

Transducer build_B_zeta() {
    Transducer t;
    t.in_alphabet = {"0", "1"};
    t.out_alphabet = {"0", "1"};
    t.add_edge("z0", "0", "0", "z0");
    t.add_edge("z0", "1", "0", "z1");
    t.add_edge("z1", "0", "1", "z0");
    t.add_edge("z1", "1", "1", "z1");
    t.mark_initial("z0");
    t.normalize();
    return t;
}

Transducer build_pi_transducer(const SafetyAutomaton& a) {
    Transducer t;
    t.in_alphabet = a.alphabet;
    t.out_alphabet = {"0", "1"};
    for (const auto& s : a.states) t.add_state(s);
    for (const auto& tr : a.transitions)
        t.add_edge(a.states[tr.src], a.alphabet[tr.sym], forget_symbol(a.alphabet[tr.sym]),
                   a.states[tr.dst]);
    for (int i : a.initial) t.mark_initial(a.states[i]);
    t.normalize();
    return t;
}

bool check_graph_morphism(const Transducer& t, const Transducer& target,
                          const std::string& id_prefix, const std::string& id_state,
                          const std::string& carry_state) {
    auto map = [&](int q) {
        return t.states[q].rfind(id_prefix, 0) == 0 ? id_state : carry_state;
    };
    for (int q : t.initial) {
        int m = target.state_index(map(q));
        if (m < 0) return false;
        if (std::find(target.initial.begin(), target.initial.end(), m) == target.initial.end())
            return false;
    }
    for (std::size_t q = 0; q < t.edges.size(); ++q) {
        int mq = target.state_index(map((int)q));
        if (mq < 0) return false;
        for (const auto& e : t.edges[q]) {
            int in = target.in_index(forget_symbol(t.in_alphabet[e.in]));
            int out = target.out_index(forget_symbol(t.out_alphabet[e.out]));
            int md = target.state_index(map(e.dst));
            if (in < 0 || out < 0 || md < 0) return false;
            bool found = false;
            for (const auto& f : target.edges[mq])
                if (f.in == in && f.out == out && f.dst == md) found = true;
            if (!found) return false;
        }
    }
    return true;
}

bool check_factor(const SafetyAutomaton& a, const Transducer& mu, const Transducer& zeta_t) {
    SafetyAutomaton b = build_B();
    Transducer b_tau = build_B_tau();
    Transducer b_zeta = build_B_zeta();
    Transducer pi = build_pi_transducer(a);

    // every forgotten transition of the path automaton lands in the full
    // shift, every initial state maps to its initial state, and the
    // projection is onto
    SafetyAutomaton fa = forget_decorations(a);
    bool onto = language_equal(fa, b);
    bool morph_a = !a.initial.empty();
    for (const auto& tr : fa.transitions)
        if (b.symbol_index(fa.alphabet[tr.sym]) < 0) morph_a = false;

    bool morph_mu = check_graph_morphism(mu, b_tau, "id_", "id", "tau");
    bool comm_tau = t_language_equal(compose(b_tau, pi), compose(pi, mu));
    bool comm_zeta = t_language_equal(compose(b_zeta, pi), compose(pi, zeta_t));
    return onto && morph_a && morph_mu && comm_tau && comm_zeta;
}

long long count_runs(const Transducer& t, const UPWord& input, long long cap) {
    if (input.cycle.empty()) throw std::invalid_argument("empty cycle");
    std::size_t p = input.prefix.size(), c = input.cycle.size();
    std::size_t len = p + c;
    std::vector<int> sym(len);
    for (std::size_t i = 0; i < len; ++i) {
        sym[i] = t.in_index(input.at(i));
        if (sym[i] < 0) return 0;
    }
    auto next = [&](std::size_t pos) { return pos + 1 < len ? pos + 1 : p; };
    std::size_t nodes = t.states.size() * len;
    auto node = [&](int q, std::size_t pos) { return (std::size_t)q * len + pos; };

    std::vector<bool> alive(nodes, true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t q = 0; q < t.states.size(); ++q)
            for (std::size_t pos = 0; pos < len; ++pos) {
                if (!alive[node((int)q, pos)]) continue;
                bool has = false;
                for (const auto& e : t.edges[q])
                    if (e.in == sym[pos] && alive[node(e.dst, next(pos))]) has = true;
                if (!has) {
                    alive[node((int)q, pos)] = false;
                    changed = true;
                }
            }
    }

    // f[v] = number of length-k runs from v; nondecreasing in k, exact once
    // stable; if the count is finite it stabilizes within #nodes steps
    std::vector<long long> f(nodes, 0);
    for (std::size_t v = 0; v < nodes; ++v)
        if (alive[v]) f[v] = 1;
    for (std::size_t k = 0; k <= nodes + 1; ++k) {
        std::vector<long long> g(nodes, 0);
        bool same = true;
        for (std::size_t q = 0; q < t.states.size(); ++q)
            for (std::size_t pos = 0; pos < len; ++pos) {
                std::size_t v = node((int)q, pos);
                if (!alive[v]) continue;
                long long sum = 0;
                for (const auto& e : t.edges[q]) {
                    if (e.in != sym[pos]) continue;
                    std::size_t w = node(e.dst, next(pos));
                    if (alive[w]) sum += f[w];
                }
                if (sum > cap) return -1;
                g[v] = sum;
                if (g[v] != f[v]) same = false;
            }
        if (same) break;
        f = std::move(g);
        if (k == nodes + 1) return -1;
    }
    long long total = 0;
    for (int q : t.initial) {
        std::size_t v = node(q, 0);
        if (alive[v]) total += f[v];
        if (total > cap) return -1;
    }
    return total;
}

Transducer build_M_transducer() {
    Transducer t;
    t.in_alphabet = {"0", "1"};
    t.out_alphabet = {"0", "1"};
    t.add_edge("01e", "1", "0", "10e");
    t.add_edge("10e", "0", "0", "01e");
    t.add_edge("10e", "1", "1", "id");
    t.add_edge("01o", "1", "1", "10o");
    t.add_edge("01o", "0", "0", "id");
    t.add_edge("10o", "0", "1", "01o");
    t.add_edge("id", "0", "0", "id");
    t.add_edge("id", "1", "1", "id");
    // initial-only restrictions: entering the even track consumes 0|0,
    // entering the odd track consumes 1|1
    t.add_edge("10e'", "0", "0", "01e");
    t.add_edge("01o'", "1", "1", "10o");
    t.mark_initial("01e");
    t.mark_initial("10e'");
    t.mark_initial("01o'");
    t.mark_initial("10o");
    t.normalize();
    return t;
}

Transducer build_D_transducer() {
    Transducer t;
    t.in_alphabet = {"0", "1"};
    t.out_alphabet = {"0", "1"};
    t.add_edge("d0", "0", "0", "d0");
    t.add_edge("d0", "0", "1", "d1");
    t.add_edge("d1", "1", "1", "d0");
    t.add_edge("d1", "1", "0", "d1");
    t.mark_initial("d0");
    t.mark_initial("d1");
    t.normalize();
    return t;
}

bool check_tau_D_DM(const Transducer& b_tau, const Transducer& d, const Transducer& m) {
    return t_language_equal(compose(b_tau, d), compose(d, m));
}

}  // namespace adicamata
