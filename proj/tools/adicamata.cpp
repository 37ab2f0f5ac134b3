#include <CLI11.hpp>

#include <adicamata/pipeline.hpp>
#include <adicamata/serialize.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>

using namespace adicamata;

namespace {

unsigned long long env_seed() {
    const char* s = std::getenv("ADICAMATA_SEED");
    if (!s || !*s) return 1;
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0') return v;
    return 1;
}

struct Env {
    std::optional<BratteliDiagram> mutated;
    std::optional<Pipeline> pipe;
    std::string fail;
    std::mt19937_64 rng{env_seed()};

    Pipeline& get() {
        if (!fail.empty()) throw std::runtime_error(fail);
        if (!pipe) {
            try {
                pipe = mutated ? build_pipeline(*mutated) : build_pipeline();
            } catch (const std::exception& e) {
                fail = e.what();
                throw std::runtime_error(fail);
            }
        }
        return *pipe;
    }
};

struct Runner {
    int passed = 0, failed = 0;

    void run(const std::string& name, const std::function<void()>& fn) {
        try {
            fn();
            std::cout << name << ": pass\n";
            ++passed;
        } catch (const std::exception& e) {
            std::cout << name << ": FAIL (" << e.what() << ")\n";
            ++failed;
        }
    }
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

UPWord random_bits(std::mt19937_64& g, int max_prefix, int max_cycle) {
    std::uniform_int_distribution<int> plen(0, max_prefix), clen(1, max_cycle), bit(0, 1);
    UPWord w;
    int p = plen(g), c = clen(g);
    for (int i = 0; i < p; ++i) w.prefix.push_back(bit(g) ? "1" : "0");
    for (int i = 0; i < c; ++i) w.cycle.push_back(bit(g) ? "1" : "0");
    return canonical(w);
}

DyadicWord random_non_integer(std::mt19937_64& g) {
    while (true) {
        DyadicWord d = make_dyadic(random_bits(g, 6, 6));
        if (!is_integer(d)) return d;
    }
}

PathPrefix random_prefix(std::mt19937_64& g, const SafetyAutomaton& a, int max_depth) {
    std::uniform_int_distribution<int> start((int)0, (int)a.states.size() - 1);
    std::uniform_int_distribution<int> len(0, max_depth), coin(0, 1);
    auto out = a.out_edges();
    PathPrefix p;
    int cur = start(g);
    p.start = a.states[cur];
    int depth = len(g);
    for (int i = 0; i < depth; ++i) {
        const auto& edges = out[cur];
        const auto& [sym, dst] = edges[coin(g) % edges.size()];
        p.symbols.push_back(a.alphabet[sym]);
        cur = dst;
    }
    return p;
}

SymmetricPoint point_map(const PathWord& z) { return SymmetricPoint{s_of(z), pi_tilde(z)}; }

PathWord make_path(const std::string& start, std::vector<std::string> prefix,
                   std::vector<std::string> cycle) {
    return PathWord{start, canonical(UPWord{std::move(prefix), std::move(cycle)})};
}

void suite_core(Runner& r, Env& env) {
    r.run("core/diagram-edges", [&] {
        const auto& d = env.get().diagram;
        expect(d.vertices == std::vector<std::string>({"a", "b", "c", "d", "e", "f"}),
               "vertex set differs");
        std::set<std::tuple<std::string, std::string, int>> got, want = {
            {"d", "a", 0}, {"b", "a", 1}, {"c", "b", 0}, {"a", "b", 1},
            {"b", "c", 0}, {"a", "c", 1}, {"e", "d", 0}, {"f", "d", 1},
            {"d", "e", 0}, {"f", "e", 1}, {"c", "f", 0}, {"e", "f", 1}};
        for (const auto& e : d.edges) got.insert({d.vertices[e.src], d.vertices[e.dst], e.rank});
        expect(d.edges.size() == 12 && got == want, "edge set differs");
    });
    r.run("core/mirror-symmetry", [&] {
        const auto& d = env.get().diagram;
        auto bar = [](const std::string& v) {
            std::string out = v;
            out[0] = (char)('a' + 'f' - v[0]);
            return out;
        };
        std::set<std::tuple<std::string, std::string, int>> got, mirrored;
        for (const auto& e : d.edges) {
            got.insert({d.vertices[e.src], d.vertices[e.dst], e.rank});
            mirrored.insert({bar(d.vertices[e.src]), bar(d.vertices[e.dst]), e.rank});
        }
        expect(got == mirrored, "letter exchange does not preserve ranks");
    });
    r.run("core/path-automaton", [&] {
        const auto& a = env.get().path_automaton;
        expect(a.states.size() == 6, "state count");
        expect(a.transitions.size() == 12, "transition count");
        expect(a.initial.size() == 6, "every vertex is initial");
        for (const auto& t : a.transitions)
            expect(parse_label(a.alphabet[t.sym]).second == a.states[t.dst],
                   "label target mismatch");
    });
    r.run("core/adic-shape", [&] {
        const auto& t = env.get().adic;
        std::set<std::string> got(t.states.begin(), t.states.end()), want;
        for (char v = 'a'; v <= 'f'; ++v) want.insert(std::string("id_") + v);
        for (const char* c : {"ad", "ba", "be", "ca", "ce", "db", "df", "eb", "ef", "fc"})
            want.insert(std::string("mu_") + c);
        expect(got == want, "state set differs");
        expect(t.initial.size() == 10, "initial = the ten carry states");
        for (int q : t.initial)
            expect(t.states[q].rfind("mu_", 0) == 0, "non-carry initial state");
    });
    r.run("core/adic-unambiguous",
          [&] { expect(is_unambiguous(env.get().adic), "ambiguous successor"); });
    r.run("core/adic-projections", [&] {
        auto& p = env.get();
        expect(language_equal(trim(input_projection(p.adic)), p.path_automaton),
               "input projection differs");
        expect(language_equal(trim(output_projection(p.adic)), p.path_automaton),
               "output projection differs");
    });
    r.run("core/successor-extremal", [&] {
        auto& p = env.get();
        expect(p.minimal_paths.size() == 4 && p.maximal_paths.size() == 4,
               "four extremal paths of each kind");
        std::map<std::string, std::string> want = {
            {"a", "d"}, {"b", "e"}, {"e", "b"}, {"f", "c"}};
        std::map<std::string, PathWord> min_at;
        for (const auto& z : p.minimal_paths) min_at[z.start] = z;
        for (const auto& z : p.maximal_paths) {
            auto img = apply_path(p.adic, p.path_automaton, z);
            expect(want.count(z.start) == 1, "unexpected maximal start");
            expect(img == min_at.at(want.at(z.start)), "wrong successor of a maximal path");
        }
    });
    r.run("core/successor-prefix-rewrite", [&] {
        auto& p = env.get();
        PathWord in5 = make_path("b", {"1_a", "1_b", "1_a", "1_b", "0_c"}, {"0_b", "0_c"});
        PathWord out5 = make_path("e", {"0_d", "0_e", "0_d", "0_a", "1_c"}, {"0_b", "0_c"});
        expect(apply_path(p.adic, p.path_automaton, in5) == out5, "five-edge rewrite");
        PathWord in7 =
            make_path("b", {"1_a", "1_b", "1_a", "1_b", "1_a", "1_b"}, {"0_c", "0_b"});
        PathWord out7 =
            make_path("e", {"0_d", "0_e", "0_d", "0_e", "0_d", "0_a", "1_c"}, {"0_b", "0_c"});
        expect(apply_path(p.adic, p.path_automaton, in7) == out7, "seven-edge rewrite");
    });
    r.run("core/minimality",
          [&] { expect(is_strongly_connected(env.get().path_automaton), "not connected"); });
    r.run("core/fixed-point", [&] {
        expect(fixed_point_prefix(env.get().base, '0', 4) == "0110100110010110",
               "fourth iterate differs");
    });
    r.run("core/overlap-free", [&] {
        expect(is_overlap_free(fixed_point_prefix(env.get().base, '0', 12)),
               "overlap in the fixed point");
    });
    r.run("core/cube-free", [&] {
        auto words = legal_subwords(env.get().base, 3);
        expect(!words.count("000") && !words.count("111"), "constant 3-block is legal");
    });
}

void suite_factor(Runner& r, Env& env) {
    r.run("factor/forget-onto", [&] {
        auto& p = env.get();
        expect(language_equal(forget_decorations(p.path_automaton), p.full_shift),
               "bit words of paths differ from the full shift");
    });
    r.run("factor/commuting-squares", [&] {
        auto& p = env.get();
        expect(check_factor(p.path_automaton, p.adic, p.substitution),
               "factor squares do not commute");
    });
    r.run("factor/fiber-integers", [&] {
        auto& p = env.get();
        Transducer lift = invert(p.bit_projection);
        for (const char* w : {"(0)", "(1)", "1(0)", "011(0)"})
            expect(count_runs(lift, parse_dyadic(w).bits) == 4,
                   std::string("integer ") + w + " needs 4 preimages");
    });
    r.run("factor/fiber-non-integers", [&] {
        auto& p = env.get();
        Transducer lift = invert(p.bit_projection);
        for (const char* w : {"(10)", "(110)", "10(01)", "0110(10)"})
            expect(count_runs(lift, parse_dyadic(w).bits) == 2,
                   std::string("non-integer ") + w + " needs 2 preimages");
        for (int i = 0; i < 120; ++i) {
            DyadicWord d = random_non_integer(env.rng);
            expect(count_runs(lift, d.bits) == 2,
                   "sampled non-integer " + print_dyadic(d) + " needs 2 preimages");
        }
    });
    r.run("factor/difference-two-to-one", [&] {
        auto& p = env.get();
        Transducer lift = invert(p.difference_map);
        for (int i = 0; i < 120; ++i) {
            UPWord w = random_bits(env.rng, 6, 6);
            expect(count_runs(lift, w) == 2, "difference fiber is not a pair");
        }
    });
    r.run("factor/period-doubling-conjugacy", [&] {
        auto& p = env.get();
        expect(check_tau_D_DM(p.odometer, p.difference_map, p.period_doubling_adic),
               "odometer and successor do not intertwine");
    });
    r.run("factor/period-doubling-branching", [&] {
        auto& p = env.get();
        const Transducer& m = p.period_doubling_adic;
        UPWord two_a = parse_dyadic("(01)").bits, two_b = parse_dyadic("(10)").bits;
        expect(count_runs(m, two_a) == 2 && count_runs(m, two_b) == 2,
               "period-two points need two runs");
        for (const char* w : {"(0)", "(110)", "10(01)", "0011(01)"})
            expect(count_runs(m, parse_dyadic(w).bits) == 1,
                   std::string(w) + " needs one run");
        for (int i = 0; i < 200; ++i) {
            UPWord w = random_bits(env.rng, 6, 6);
            if (w == two_a || w == two_b) continue;
            expect(count_runs(m, w) == 1, "sampled word is not single-valued");
        }
    });
}

void suite_homeo(Runner& r, Env& env) {
    r.run("homeo/base-points", [&] {
        auto& p = env.get();
        TildeDyadic zx = pi_tilde(p.base_x), zy = pi_tilde(p.base_y);
        expect(s_of(p.base_x) == 0 && s_of(p.base_y) == 0, "base sign");
        expect(print_dyadic(zx.value) == "(0)" && print_dyadic(zy.value) == "(0)",
               "base value is the origin");
        expect(zx.branch && *zx.branch == 0 && zy.branch && *zy.branch == 1,
               "branch bits distinguish the two bases");
    });
    r.run("homeo/conjugacy-orbit", [&] {
        auto& p = env.get();
        for (PathWord z : {p.base_x, p.base_y}) {
            PathWord cur = z;
            for (int i = 0; i < 40; ++i) {
                PathWord next = apply_path(p.adic, p.path_automaton, cur);
                expect(point_map(next) == mu_tilde(point_map(cur)),
                       "conjugacy breaks on the base orbit");
                cur = next;
            }
        }
    });
    r.run("homeo/conjugacy-prefixes", [&] {
        auto& p = env.get();
        long long checked = 0;
        for (const auto& start : p.path_automaton.states) {
            std::vector<PathPrefix> layer{PathPrefix{start, {}}};
            for (int depth = 0; depth <= 12; ++depth) {
                std::vector<PathPrefix> next;
                for (const auto& pre : layer) {
                    PathWord z = extend_canonically(p.path_automaton, pre);
                    PathWord img = apply_path(p.adic, p.path_automaton, z);
                    expect(point_map(img) == mu_tilde(point_map(z)),
                           "conjugacy breaks at " + print_path(z));
                    ++checked;
                    if (depth == 12) continue;
                    std::string end = path_end(p.path_automaton, pre);
                    int cur = p.path_automaton.state_index(end);
                    for (const auto& t : p.path_automaton.transitions) {
                        if (t.src != cur) continue;
                        PathPrefix longer = pre;
                        longer.symbols.push_back(p.path_automaton.alphabet[t.sym]);
                        next.push_back(longer);
                    }
                }
                layer = std::move(next);
            }
        }
        expect(checked == 6 * ((1LL << 13) - 1), "prefix enumeration incomplete");
    });
    r.run("homeo/conjugacy-extremal", [&] {
        auto& p = env.get();
        for (const auto& side : {p.minimal_paths, p.maximal_paths})
            for (const auto& z : side)
                expect(point_map(apply_path(p.adic, p.path_automaton, z)) ==
                           mu_tilde(point_map(z)),
                       "conjugacy breaks at " + print_path(z));
    });
    r.run("homeo/cocycle-samples", [&] {
        auto& p = env.get();
        for (int i = 0; i < 1000; ++i) {
            PathWord z = extend_canonically(p.path_automaton,
                                            random_prefix(env.rng, p.path_automaton, 16));
            PathWord img = apply_path(p.adic, p.path_automaton, z);
            expect(s_of(img) == mu_tilde(point_map(z)).s,
                   "cocycle misses the sign at " + print_path(z));
        }
    });
    r.run("homeo/dyadic-laws", [&] {
        for (int i = 0; i < 1000; ++i) {
            DyadicWord d = make_dyadic(random_bits(env.rng, 6, 6));
            expect(add_one(add_one(double_dyadic(d))) == double_dyadic(add_one(d)),
                   "doubling law fails at " + print_dyadic(d));
        }
    });
}

void suite_baumslag_solitar(Runner& r, Env& env) {
    r.run("baumslag-solitar/relation", [&] {
        auto& p = env.get();
        expect(check_baumslag_solitar(p.adic, p.shift), "shift successor^2 != successor shift");
    });
    r.run("baumslag-solitar/strictness", [&] {
        auto& p = env.get();
        expect(!t_language_equal(compose(p.shift, p.adic), compose(p.adic, p.shift)),
               "shift and successor commute");
    });
}

void suite_nucleus(Runner& r, Env& env) {
    r.run("nucleus/shape", [&] {
        const auto& n = env.get().nucleus;
        expect(n.states.size() == 26, "state count");
        expect(n.edge_count() == 44, "edge count");
        expect(n.initial.size() == 26, "all states initial");
    });
    r.run("nucleus/powers", [&] {
        auto& p = env.get();
        expect(check_nuclear(p.nucleus, p.adic, 4), "a recurrent power state escapes");
    });
    r.run("nucleus/self-composition", [&] {
        auto rep = check_nucleus_self_composition(env.get().nucleus);
        expect(rep.contained, "composition leaves the nucleus");
        expect(rep.recurrent_states == 30 && rep.equal_to_nucleus_state == 26 &&
                   rep.contained_only == 4,
               "unexpected composition profile");
    });
    r.run("nucleus/identity-control", [&] {
        auto& p = env.get();
        expect(!check_nuclear(diagonal(p.path_automaton), p.adic, 2),
               "identity alone passes the nuclear check");
    });
    r.run("nucleus/carry-bound", [&] {
        auto& p = env.get();
        for (int n = 1; n <= 12; ++n)
            expect(count_paths_avoiding(p.adic, "id_", n) == 10,
                   "carry-only path count drifts at length " + std::to_string(n));
    });
}

void suite_biminimality(Runner& r, Env& env) {
    r.run("biminimality/seeds", [&] {
        auto& p = env.get();
        auto sys = make_lambda_system(p.path_automaton, p.adic, p.base_x, p.base_y);
        expect(ia_member(build_lambda_automaton(sys, 'x', "e"), 0), "0 misses the x seed");
        expect(ia_member(build_lambda_automaton(sys, 'x', "b"), -1), "-1 misses the x seed");
        expect(ia_member(build_lambda_automaton(sys, 'y', "d"), 0), "0 misses the y seed");
        expect(ia_member(build_lambda_automaton(sys, 'y', "a"), -1), "-1 misses the y seed");
    });
    r.run("biminimality/recursions", [&] {
        auto& p = env.get();
        auto sys = make_lambda_system(p.path_automaton, p.adic, p.base_x, p.base_y);
        expect(check_lambda_recursions(sys), "a recursion identity fails");
    });
    r.run("biminimality/partition", [&] {
        auto& p = env.get();
        auto sys = make_lambda_system(p.path_automaton, p.adic, p.base_x, p.base_y);
        expect(check_lambda_partition(sys, 'x'), "x clopens do not partition the integers");
        expect(check_lambda_partition(sys, 'y'), "y clopens do not partition the integers");
    });
    r.run("biminimality/negation-shortcut", [&] {
        auto& p = env.get();
        auto sys = make_lambda_system(p.path_automaton, p.adic, p.base_x, p.base_y);
        for (char tag : {'x', 'y'})
            for (const auto& s : p.path_automaton.states)
                expect(ia_equal(ia_negate(build_lambda_automaton(sys, tag, s)),
                                ia_ones_complement(build_lambda_automaton(sys, tag, s, 1))),
                       "carry-shift negation differs at " + std::string(1, tag) + "," + s);
    });
    r.run("biminimality/counterexample", [&] {
        auto& p = env.get();
        auto sys = make_lambda_system(p.path_automaton, p.adic, p.base_x, p.base_y);
        auto rep = check_biminimality_counterexample(sys, 1024);
        expect(rep.intersection_empty && rep.witness.empty(), "intersection inhabited");
        expect(rep.swapped_intersection_empty, "swapped intersection inhabited");
        expect(rep.sanity_zero_in_swapped_clopens, "sign convention sanity check");
        expect(rep.oracle_agrees && rep.oracle_range_checked == 1024, "orbit oracle disagrees");
        std::vector<int> odd, even;
        for (int k = 0; k < 10; ++k) {
            odd.push_back(2 * k + 1);
            even.push_back(2 * k);
        }
        expect(rep.first_one_positions_neg_x_d == odd, "negated lead positions are not odd");
        expect(rep.first_one_positions_y_e == even, "lead positions are not even");
        expect(rep.verdict_not_biminimal(), "verdict");
    });
    r.run("biminimality/minimal",
          [&] { expect(check_minimal(env.get().path_automaton), "shift is not minimal"); });
}

void suite_dimension_group(Runner& r, Env& env) {
    r.run("dimension-group/adjacency", [&] {
        auto& p = env.get();
        IntMatrix m = adjacency_matrix(p.path_automaton);
        expect(m.n == 6, "size");
        long long total = 0;
        for (int i = 0; i < 6; ++i) {
            long long row = 0, col = 0;
            for (int j = 0; j < 6; ++j) {
                row += m.at(i, j);
                col += m.at(j, i);
                total += m.at(i, j);
            }
            expect(row == 2 && col == 2, "degree is not two everywhere");
        }
        expect(total == 12, "twelve edges");
        expect(m.at(0, 2) == 1 && m.at(0, 3) == 0, "first-row entries");
        expect(matrix_rank(m) == 5 && determinant(m) == 0, "rank and determinant");
    });
    r.run("dimension-group/smith-form", [&] {
        auto& p = env.get();
        IntMatrix m = adjacency_matrix(p.path_automaton);
        IntMatrix id4 = IntMatrix::identity(4);
        auto sid = smith_normal_form(id4);
        expect(sid.s == id4 && sid.u == id4 && sid.v == id4, "identity is not fixed");
        for (int k = 1; k <= 4; ++k)
            for (IntMatrix base : {m, transpose(m)}) {
                IntMatrix pk = mat_pow(base, k);
                auto snf = smith_normal_form(pk);
                expect(mat_mul(mat_mul(snf.u, pk), snf.v) == snf.s, "u m v != s");
                expect(std::abs(determinant(snf.u)) == 1 &&
                           std::abs(determinant(snf.v)) == 1,
                       "transforms are not unimodular");
                std::vector<long long> want = {1, 1, 1, 1, 1LL << (k - 1), 0};
                expect(invariant_factors(pk) == want, "invariant factors differ");
            }
    });
    r.run("dimension-group/report", [&] {
        auto& p = env.get();
        IntMatrix m = adjacency_matrix(p.path_automaton);
        for (IntMatrix base : {m, transpose(m)}) {
            auto rep = dimension_group_report(base, 4);
            expect(rep.rank_sequence == std::vector<int>({5, 5, 5, 5}), "rank sequence");
            expect(rep.verdict == "consistent with ℤ⁴×ℤ[1/2]", "verdict");
            expect(rep.positive_cone ==
                       "K₀⁺ = {0}∪(ℤ⁴×ℤ₊[1/2])",
                   "positive cone note");
        }
    });
    r.run("dimension-group/one-vertex", [&] {
        IntMatrix one(1);
        one.at(0, 0) = 2;
        expect(dimension_group_report(one, 3).verdict == "consistent with ℤ[1/2]",
               "doubling diagram verdict");
    });
}

const std::vector<std::pair<std::string, void (*)(Runner&, Env&)>> suites = {
    {"core", suite_core},
    {"factor", suite_factor},
    {"homeo", suite_homeo},
    {"baumslag-solitar", suite_baumslag_solitar},
    {"nucleus", suite_nucleus},
    {"biminimality", suite_biminimality},
    {"dimension-group", suite_dimension_group},
};

int cmd_verify(const std::string& suite, const std::string& mutate) {
    Env env;
    if (!mutate.empty()) {
        auto diagram = build_bratteli(collar(thue_morse()).sub);
        std::istringstream in(mutate);
        std::string src, dst, rank_text;
        if (!std::getline(in, src, ',') || !std::getline(in, dst, ',') ||
            !std::getline(in, rank_text)) {
            std::cerr << "mutation must be src,dst,rank\n";
            return 2;
        }
        int si = diagram.vertex_index(src), di = diagram.vertex_index(dst);
        int rank = rank_text == "0" ? 0 : rank_text == "1" ? 1 : -1;
        auto& edges = diagram.edges;
        auto it = std::find_if(edges.begin(), edges.end(), [&](const BratteliDiagram::Edge& e) {
            return e.src == si && e.dst == di && e.rank == rank;
        });
        if (si < 0 || di < 0 || rank < 0 || it == edges.end()) {
            std::cerr << "no such edge: " << mutate << "\n";
            return 2;
        }
        edges.erase(it);
        env.mutated = diagram;
        std::cout << "mutated: dropped edge " << mutate << "\n";
    }
    std::cout << "seed " << env_seed() << "\n";
    Runner r;
    for (const auto& [name, fn] : suites)
        if (suite == "all" || suite == name) fn(r, env);
    std::cout << "verify " << suite << ": " << r.passed << "/" << (r.passed + r.failed)
              << " checks passed\n";
    return r.failed == 0 ? 0 : 1;
}

int cmd_build(const std::string& target, const std::string& outdir, const std::string& format) {
    Pipeline p = build_pipeline();
    std::string content;
    if (target == "bratteli")
        content = format == "json" ? to_json(p.diagram) : to_dot(p.diagram, target);
    else if (target == "path-automaton")
        content =
            format == "json" ? to_json(p.path_automaton) : to_dot(p.path_automaton, target);
    else if (target == "adic")
        content = format == "json" ? to_json(p.adic) : to_dot(p.adic, target);
    else if (target == "zeta")
        content = format == "json" ? to_json(p.substitution) : to_dot(p.substitution, target);
    else if (target == "odometer")
        content = format == "json" ? to_json(p.odometer) : to_dot(p.odometer, target);
    else if (target == "M")
        content = format == "json" ? to_json(p.period_doubling_adic)
                                   : to_dot(p.period_doubling_adic, target);
    else if (target == "D")
        content =
            format == "json" ? to_json(p.difference_map) : to_dot(p.difference_map, target);
    else if (target == "lambda") {
        auto sys = make_lambda_system(p.path_automaton, p.adic, p.base_x, p.base_y);
        content = format == "json" ? to_json(sys.core) : to_dot(sys.core, target);
    }
    std::filesystem::create_directories(outdir);
    std::string path = outdir + "/" + target + "." + format;
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) {
        std::cerr << "cannot write " << path << "\n";
        return 2;
    }
    std::cout << "wrote " << path << "\n";
    return 0;
}

int cmd_orbit(const std::string& spec, int range) {
    Pipeline p = build_pipeline();
    PathWord z = parse_path_spec(spec, p.diagram);
    validate_path(p.path_automaton, z);
    std::vector<std::pair<long long, PathWord>> rows;
    PathWord cur = z;
    for (int n = 0; n <= range; ++n) {
        rows.push_back({n, cur});
        if (n < range) cur = apply_path(p.adic, p.path_automaton, cur);
    }
    cur = z;
    for (int n = 1; n <= range; ++n) {
        cur = apply_path(p.adic_inverse, p.path_automaton, cur);
        rows.push_back({-n, cur});
    }
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::cout << "n start bit window\n";
    for (const auto& [n, w] : rows) {
        CollaredLetter t = p.collared.triple_of(w.start[0]);
        std::string window{t.left, t.bit, t.right};
        std::cout << n << " " << w.start << " " << w.word.at(0)[0] << " " << window << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"safety automata and the adic successor of the Thue-Morse subshift"};
    app.require_subcommand(1);

    std::string target, outdir = ".", format = "json";
    auto* build = app.add_subcommand("build", "write an automaton artifact");
    build->add_option("target", target, "object to emit")
        ->required()
        ->check(CLI::IsMember({"bratteli", "path-automaton", "adic", "zeta", "odometer", "M",
                               "D", "lambda"}));
    build->add_option("--out", outdir, "output directory");
    build->add_option("--format", format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));

    std::string suite, mutate;
    auto* verify = app.add_subcommand("verify", "run a named check suite");
    verify->add_option("suite", suite, "check suite")
        ->required()
        ->check(CLI::IsMember({"core", "factor", "homeo", "baumslag-solitar", "nucleus",
                               "biminimality", "dimension-group", "all"}));
    verify->add_option("--mutate", mutate, "drop diagram edge src,dst,rank first");

    std::string spec;
    int range = 8;
    auto* orbit = app.add_subcommand("orbit", "successor orbit table of a path");
    orbit->add_option("base", spec, "path spec prefix(cycle)@state or sourced prefix(cycle)")
        ->required();
    orbit->add_option("--range", range, "rows for |n| <= range")
        ->check(CLI::Range(0, 1 << 20));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (build->parsed()) return cmd_build(target, outdir, format);
        if (verify->parsed()) return cmd_verify(suite, mutate);
        return cmd_orbit(spec, range);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
