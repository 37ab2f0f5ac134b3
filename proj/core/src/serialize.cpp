#include <adicamata/serialize.hpp>

#include <json.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace adicamata {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string to_json(const SafetyAutomaton& a) {
    ordered_json j;
    j["alphabet"] = a.alphabet;
    j["states"] = a.states;
    ordered_json init = ordered_json::array();
    for (int q : a.initial) init.push_back(a.states[q]);
    j["initial"] = init;
    ordered_json trans = ordered_json::array();
    for (const auto& t : a.transitions)
        trans.push_back({a.states[t.src], a.alphabet[t.sym], a.states[t.dst]});
    j["transitions"] = trans;
    return dump(j);
}

std::string to_json(const Transducer& t) {
    std::set<std::string> pairs;
    for (std::size_t q = 0; q < t.states.size(); ++q)
        for (const auto& e : t.edges[q])
            pairs.insert(t.in_alphabet[e.in] + "|" + t.out_alphabet[e.out]);
    ordered_json j;
    j["alphabet"] = pairs;
    j["states"] = t.states;
    ordered_json init = ordered_json::array();
    for (int q : t.initial) init.push_back(t.states[q]);
    j["initial"] = init;
    ordered_json trans = ordered_json::array();
    for (std::size_t q = 0; q < t.states.size(); ++q)
        for (const auto& e : t.edges[q])
            trans.push_back({t.states[q], t.in_alphabet[e.in] + "|" + t.out_alphabet[e.out],
                             t.states[e.dst]});
    j["transitions"] = trans;
    return dump(j);
}

std::string to_json(const BratteliDiagram& d) {
    ordered_json j;
    j["vertices"] = d.vertices;
    ordered_json edges = ordered_json::array();
    for (const auto& e : d.edges)
        edges.push_back({d.vertices[e.src], d.vertices[e.dst], e.rank});
    j["edges"] = edges;
    return dump(j);
}

std::string to_json(const DimensionGroupReport& r) {
    ordered_json j;
    j["rank_sequence"] = r.rank_sequence;
    j["invariant_factors_sequence"] = r.invariant_factors_sequence;
    j["verdict"] = r.verdict;
    j["positive_cone"] = r.positive_cone;
    return dump(j);
}

std::string to_json(const BiminimalityReport& r) {
    ordered_json j;
    j["claim"] = r.claim;
    j["automata-sizes"] = r.automata_sizes;
    j["witness-or-empty"] = r.witness;
    j["oracle-range-checked"] = r.oracle_range_checked;
    return dump(j);
}

std::string to_json(const IntegerAutomaton& a) {
    ordered_json j;
    j["states"] = a.states;
    ordered_json init = ordered_json::array();
    for (int q : a.init) init.push_back(a.states[q]);
    j["initial"] = init;
    ordered_json trans = ordered_json::array();
    for (std::size_t q = 0; q < a.states.size(); ++q)
        for (int bit = 0; bit < 2; ++bit)
            for (int dst : a.next[q][bit])
                trans.push_back({a.states[q], std::to_string(bit), a.states[dst]});
    j["transitions"] = trans;
    ordered_json t0 = ordered_json::array(), t1 = ordered_json::array();
    for (std::size_t q = 0; q < a.states.size(); ++q) {
        if (a.acc0[q]) t0.push_back(a.states[q]);
        if (a.acc1[q]) t1.push_back(a.states[q]);
    }
    j["tail0"] = t0;
    j["tail1"] = t1;
    return dump(j);
}

namespace {

std::string dot_header(const std::string& name) {
    return "digraph \"" + name + "\" {\n  rankdir=LR;\n  node [shape=circle];\n";
}

}  // namespace

std::string to_dot(const SafetyAutomaton& a, const std::string& name) {
    std::string out = dot_header(name);
    for (int q : a.initial) out += "  \"" + a.states[q] + "\" [shape=doublecircle];\n";
    for (const auto& t : a.transitions)
        out += "  \"" + a.states[t.src] + "\" -> \"" + a.states[t.dst] + "\" [label=\"" +
               a.alphabet[t.sym] + "\"];\n";
    return out + "}\n";
}

std::string to_dot(const Transducer& t, const std::string& name) {
    std::string out = dot_header(name);
    for (int q : t.initial) out += "  \"" + t.states[q] + "\" [shape=doublecircle];\n";
    for (std::size_t q = 0; q < t.states.size(); ++q)
        for (const auto& e : t.edges[q])
            out += "  \"" + t.states[q] + "\" -> \"" + t.states[e.dst] + "\" [label=\"" +
                   t.in_alphabet[e.in] + "|" + t.out_alphabet[e.out] + "\"];\n";
    return out + "}\n";
}

std::string to_dot(const BratteliDiagram& d, const std::string& name) {
    std::string out = dot_header(name);
    for (const auto& e : d.edges)
        out += "  \"" + d.vertices[e.src] + "\" -> \"" + d.vertices[e.dst] + "\" [label=\"" +
               std::to_string(e.rank) + "\"];\n";
    return out + "}\n";
}

std::string to_dot(const IntegerAutomaton& a, const std::string& name) {
    std::string out = dot_header(name);
    for (std::size_t q = 0; q < a.states.size(); ++q) {
        std::string tails;
        if (a.acc0[q]) tails += " 0w";
        if (a.acc1[q]) tails += " 1w";
        if (!tails.empty())
            out += "  \"" + a.states[q] + "\" [label=\"" + a.states[q] + "\\ntails:" + tails +
                   "\"];\n";
    }
    for (int q : a.init) out += "  \"" + a.states[q] + "\" [shape=doublecircle];\n";
    for (std::size_t q = 0; q < a.states.size(); ++q)
        for (int bit = 0; bit < 2; ++bit)
            for (int dst : a.next[q][bit])
                out += "  \"" + a.states[q] + "\" -> \"" + a.states[dst] + "\" [label=\"" +
                       std::to_string(bit) + "\"];\n";
    return out + "}\n";
}

std::string print_path(const PathWord& z) {
    std::string out;
    for (const auto& s : z.word.prefix) out += s;
    out += "(";
    for (const auto& s : z.word.cycle) out += s;
    return out + ")@" + z.start;
}

namespace {

std::vector<std::string> tokenize_symbols(const std::string& text) {
    std::vector<std::string> out;
    for (char c : text) {
        if (c == ' ') continue;
        if (c >= '0' && c <= '9')
            out.emplace_back(1, c);
        else if (out.empty())
            throw std::invalid_argument("path symbol must start with a rank digit");
        else
            out.back() += c;
    }
    for (const auto& s : out)
        if (s.size() < 3 || s[1] != '_')
            throw std::invalid_argument("malformed path symbol '" + s + "'");
    return out;
}

// split "prefix(cycle)" into symbol lists
std::pair<std::vector<std::string>, std::vector<std::string>> split_spec(std::string body) {
    auto open = body.find('(');
    auto close = body.find(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw std::invalid_argument("path spec needs a parenthesized cycle");
    std::string tail = body.substr(close + 1);
    if (tail == "^w" || tail == "^ω") tail.clear();
    if (!tail.empty()) throw std::invalid_argument("trailing text after the cycle");
    auto prefix = tokenize_symbols(body.substr(0, open));
    auto cycle = tokenize_symbols(body.substr(open + 1, close - open - 1));
    if (cycle.empty()) throw std::invalid_argument("empty cycle");
    return {prefix, cycle};
}

bool has_edge(const BratteliDiagram& d, const std::string& src, const std::string& dst,
              int rank) {
    int s = d.vertex_index(src), t = d.vertex_index(dst);
    for (const auto& e : d.edges)
        if (e.src == s && e.dst == t && e.rank == rank) return true;
    return false;
}

}  // namespace

PathWord parse_path_spec(const std::string& text, const BratteliDiagram& d) {
    auto at = text.find('@');
    if (at != std::string::npos) {
        std::string start = text.substr(at + 1);
        if (d.vertex_index(start) < 0)
            throw std::invalid_argument("unknown start vertex '" + start + "'");
        auto [prefix, cycle] = split_spec(text.substr(0, at));
        PathWord z{start, UPWord{prefix, cycle}};
        std::string v = start;
        auto step = [&](const std::string& sym) {
            auto [rank, target] = parse_label(sym);
            if (!has_edge(d, v, target, rank))
                throw std::invalid_argument("no edge " + v + " -> " + target + " of rank " +
                                            std::to_string(rank));
            v = target;
        };
        for (const auto& s : prefix) step(s);
        std::string cycle_entry = v;
        for (const auto& s : cycle) step(s);
        if (v != cycle_entry) throw std::invalid_argument("cycle does not close up");
        return z;
    }

    // start-free form: subscripts are the visited vertices themselves
    auto [prefix, cycle] = split_spec(text);
    std::vector<std::pair<int, std::string>> steps;
    for (const auto& s : prefix) steps.push_back(parse_label(s));
    for (const auto& s : cycle) steps.push_back(parse_label(s));
    std::size_t n = steps.size();
    PathWord z;
    z.start = steps[0].second;
    for (std::size_t i = 0; i < n; ++i) {
        const std::string& src = steps[i].second;
        // the edge after the last symbol wraps to the cycle start
        const std::string& dst =
            (i + 1 < n) ? steps[i + 1].second : steps[prefix.size()].second;
        int rank = steps[i].first;
        if (!has_edge(d, src, dst, rank))
            throw std::invalid_argument("no edge " + src + " -> " + dst + " of rank " +
                                        std::to_string(rank));
        std::string label = edge_label(rank, dst);
        if (i < prefix.size())
            z.word.prefix.push_back(label);
        else
            z.word.cycle.push_back(label);
    }
    return z;
}

}  // namespace adicamata
