// End-to-end acceptance run: thirteen checks, one verdict line each, with
// wall-clock budgets where a check is required to be fast.
#include <adicamata/adicamata.hpp>

#include <bit>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

using namespace adicamata;

namespace {

unsigned long long env_seed() {
    const char* s = std::getenv("ADICAMATA_SEED");
    if (!s || !*s) return 1;
    return std::strtoull(s, nullptr, 10);
}

struct Gate {
    int passed = 0, failed = 0;

    void run(int number, const std::string& slug, double budget_seconds,
             const std::function<void()>& body) {
        auto t0 = std::chrono::steady_clock::now();
        std::string failure;
        try {
            body();
        } catch (const std::exception& e) {
            failure = e.what();
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (failure.empty() && budget_seconds > 0 && dt > budget_seconds)
            failure = "took " + std::to_string(dt) + "s, budget " +
                      std::to_string(budget_seconds) + "s";
        if (failure.empty()) {
            ++passed;
            std::printf("criterion %d %s: PASS (%.2fs)\n", number, slug.c_str(), dt);
        } else {
            ++failed;
            std::printf("criterion %d %s: FAIL (%.2fs) %s\n", number, slug.c_str(), dt,
                        failure.c_str());
        }
        std::fflush(stdout);
    }
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

PathWord make_path(const std::string& start, std::vector<std::string> prefix,
                   std::vector<std::string> cycle) {
    PathWord z;
    z.start = start;
    z.word.prefix = std::move(prefix);
    z.word.cycle = std::move(cycle);
    z.word = canonical(z.word);
    return z;
}

SymmetricPoint point_map(const PathWord& z) { return {s_of(z), pi_tilde(z)}; }

DyadicWord random_non_integer(std::mt19937_64& g) {
    std::uniform_int_distribution<int> len(0, 8), cyc(2, 6), bit(0, 1);
    for (;;) {
        UPWord w;
        for (int i = len(g); i > 0; --i) w.prefix.push_back(bit(g) ? "1" : "0");
        for (int i = cyc(g); i > 0; --i) w.cycle.push_back(bit(g) ? "1" : "0");
        DyadicWord d = make_dyadic(canonical(w));
        if (!is_integer(d)) return d;
    }
}

// reference invariant factors as quotients of gcds of k x k minors
long long det_ref(const IntMatrix& m) {
    if (m.n == 0) return 1;
    if (m.n == 1) return m.at(0, 0);
    long long sum = 0;
    for (int j = 0; j < m.n; ++j) {
        IntMatrix minor(m.n - 1);
        for (int r = 1; r < m.n; ++r)
            for (int c = 0, cc = 0; c < m.n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        long long term = m.at(0, j) * det_ref(minor);
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum;
}

std::vector<long long> invariant_factors_ref(const IntMatrix& m) {
    std::vector<long long> d(m.n + 1, 0);
    d[0] = 1;
    int rank = 0;
    for (int k = 1; k <= m.n; ++k) {
        long long g = 0;
        for (int rm = 0; rm < (1 << m.n); ++rm) {
            if (std::popcount((unsigned)rm) != k) continue;
            for (int cm = 0; cm < (1 << m.n); ++cm) {
                if (std::popcount((unsigned)cm) != k) continue;
                IntMatrix sub(k);
                int ri = 0;
                for (int i = 0; i < m.n; ++i) {
                    if (!(rm >> i & 1)) continue;
                    int ci = 0;
                    for (int j = 0; j < m.n; ++j) {
                        if (!(cm >> j & 1)) continue;
                        sub.at(ri, ci++) = m.at(i, j);
                    }
                    ++ri;
                }
                g = std::gcd(g, det_ref(sub));
            }
        }
        d[k] = g;
        if (g != 0) rank = k;
    }
    std::vector<long long> out;
    for (int k = 1; k <= rank; ++k) out.push_back(d[k] / d[k - 1]);
    while ((int)out.size() < m.n) out.push_back(0);
    return out;
}

}  // namespace

int main() {
    unsigned long long seed = env_seed();
    std::printf("seed %llu\n", seed);
    Pipeline p = build_pipeline();
    Gate gate;

    gate.run(1, "path-automaton", 1.0, [&] {
        std::set<std::tuple<std::string, std::string, int>> got, want = {
            {"d", "a", 0}, {"b", "a", 1}, {"c", "b", 0}, {"a", "b", 1},
            {"b", "c", 0}, {"a", "c", 1}, {"e", "d", 0}, {"f", "d", 1},
            {"d", "e", 0}, {"f", "e", 1}, {"c", "f", 0}, {"e", "f", 1},
        };
        for (const auto& e : p.diagram.edges)
            got.insert({p.diagram.vertices[e.src], p.diagram.vertices[e.dst], e.rank});
        expect(got == want, "diagram edges differ");
        expect(p.path_automaton.states.size() == 6 && p.path_automaton.transitions.size() == 12 &&
                   p.path_automaton.initial.size() == 6,
               "path automaton shape");
        std::set<std::string> carries, want_carries = {"mu_ad", "mu_ba", "mu_be", "mu_ca",
                                                       "mu_ce", "mu_db", "mu_df", "mu_eb",
                                                       "mu_ef", "mu_fc"};
        int ids = 0;
        for (const auto& s : p.adic.states) {
            if (s.rfind("id_", 0) == 0) ++ids;
            if (s.rfind("mu_", 0) == 0) carries.insert(s);
        }
        expect(p.adic.states.size() == 16 && ids == 6 && carries == want_carries,
               "successor states differ");
        expect(p.adic.edge_count() == 28, "successor edge count");
        std::set<std::string> init;
        for (int i : p.adic.initial) init.insert(p.adic.states[i]);
        expect(init == want_carries, "successor initial states");
    });

    gate.run(2, "successor-unambiguous", 1.0, [&] {
        expect(is_unambiguous(p.adic), "two runs on one input");
        expect(language_equal(input_projection(p.adic), p.path_automaton),
               "domain misses paths");
        expect(language_equal(output_projection(p.adic), p.path_automaton),
               "range misses paths");
    });

    gate.run(3, "successor-extremal", 0, [&] {
        std::set<PathWord> minset(p.minimal_paths.begin(), p.minimal_paths.end());
        std::set<PathWord> maxset(p.maximal_paths.begin(), p.maximal_paths.end());
        std::set<PathWord> want_min = {
            make_path("b", {}, {"0_c", "0_b"}),
            make_path("c", {}, {"0_b", "0_c"}),
            make_path("d", {}, {"0_e", "0_d"}),
            make_path("e", {}, {"0_d", "0_e"}),
        };
        std::set<PathWord> want_max = {
            make_path("a", {}, {"1_b", "1_a"}),
            make_path("b", {}, {"1_a", "1_b"}),
            make_path("e", {}, {"1_f", "1_e"}),
            make_path("f", {}, {"1_e", "1_f"}),
        };
        expect(minset == want_min && maxset == want_max, "extremal path sets differ");
        std::map<std::string, std::string> want_bij = {
            {"a", "d"}, {"b", "e"}, {"e", "b"}, {"f", "c"}};
        for (const auto& z : p.maximal_paths) {
            PathWord img = apply_path(p.adic, p.path_automaton, z);
            expect(want_bij.at(z.start) == img.start && want_min.count(img) == 1,
                   "bijection image of the maximal path at " + z.start);
        }
        PathWord in5 = make_path("b", {"1_a", "1_b", "1_a", "1_b", "0_c"}, {"0_b", "0_c"});
        PathWord out5 = make_path("e", {"0_d", "0_e", "0_d", "0_a", "1_c"}, {"0_b", "0_c"});
        expect(apply_path(p.adic, p.path_automaton, in5) == out5, "five edge rewrite");
        PathWord in7 =
            make_path("b", {"1_a", "1_b", "1_a", "1_b", "1_a", "1_b"}, {"0_c", "0_b"});
        PathWord out7 = make_path(
            "e", {"0_d", "0_e", "0_d", "0_e", "0_d", "0_a", "1_c"}, {"0_b", "0_c"});
        expect(apply_path(p.adic, p.path_automaton, in7) == out7, "seven edge rewrite");
    });

    gate.run(4, "baumslag-solitar", 10.0, [&] {
        expect(check_baumslag_solitar(p.adic, p.shift), "the relation fails");
        expect(!t_language_equal(compose(p.shift, p.adic), compose(p.adic, p.shift)),
               "shift and successor commute, relation would be degenerate");
    });

    gate.run(5, "odometer-factor", 0, [&] {
        expect(language_equal(forget_decorations(p.path_automaton), p.full_shift),
               "projection is not onto the full shift");
        expect(check_factor(p.path_automaton, p.adic, p.substitution),
               "factor squares do not commute");
    });

    gate.run(6, "fiber-sizes", 0, [&] {
        Transducer lift = invert(p.bit_projection);
        expect(count_runs(lift, parse_dyadic("(0)").bits) == 4, "fiber over the zero tail");
        expect(count_runs(lift, parse_dyadic("(1)").bits) == 4, "fiber over the one tail");
        std::mt19937_64 g(seed * 6364136223846793005ULL + 6);
        for (int i = 0; i < 120; ++i) {
            DyadicWord d = random_non_integer(g);
            expect(count_runs(lift, d.bits) == 2,
                   "fiber over " + print_dyadic(d) + " is not a pair");
        }
    });

    gate.run(7, "odometer-conjugacy", 0, [&] {
        auto check_one = [&](const PathWord& z) {
            SymmetricPoint lhs = point_map(apply_path(p.adic, p.path_automaton, z));
            SymmetricPoint rhs = mu_tilde(point_map(z));
            expect(lhs == rhs, "conjugacy mismatch at " + print_path(z));
        };
        auto out = p.path_automaton.out_edges();
        long long total = 0;
        std::vector<PathPrefix> layer;
        for (const auto& v : p.path_automaton.states) layer.push_back({v, {}});
        for (int depth = 0; depth <= 12; ++depth) {
            std::vector<PathPrefix> next;
            for (const auto& pre : layer) {
                ++total;
                check_one(extend_canonically(p.path_automaton, pre));
                if (depth == 12) continue;
                int end = p.path_automaton.state_index(path_end(p.path_automaton, pre));
                for (const auto& [sym, dst] : out[end]) {
                    PathPrefix q = pre;
                    q.symbols.push_back(p.path_automaton.alphabet[sym]);
                    next.push_back(std::move(q));
                }
            }
            layer = std::move(next);
        }
        expect(total == 6 * ((1 << 13) - 1), "prefix enumeration is incomplete");
        for (const auto& z : p.minimal_paths) check_one(z);
        for (const auto& z : p.maximal_paths) check_one(z);
    });

    gate.run(8, "period-doubling", 0, [&] {
        Transducer m = p.period_doubling_adic, d = p.difference_map;
        expect(check_tau_D_DM(p.odometer, d, m), "squares with the difference map");
        UPWord two_a = parse_dyadic("(01)").bits, two_b = parse_dyadic("(10)").bits;
        expect(count_runs(m, two_a) == 2 && count_runs(m, two_b) == 2,
               "the two period two words must be double valued");
        for (const char* w : {"(0)", "(1)", "1(0)", "(110)", "10(01)", "0011(01)"})
            expect(count_runs(m, parse_dyadic(w).bits) == 1,
                   std::string("single valued at ") + w);
        std::mt19937_64 g(seed * 6364136223846793005ULL + 8);
        for (int i = 0; i < 200; ++i) {
            DyadicWord w = random_non_integer(g);
            if (w.bits == two_a || w.bits == two_b) continue;
            expect(count_runs(m, w.bits) == 1, "double valued off the period two words");
        }
    });

    gate.run(9, "nucleus", 30.0, [&] {
        expect(p.nucleus.states.size() == 26 && p.nucleus.edge_count() == 44,
               "nucleus shape");
        expect(check_nuclear(p.nucleus, p.adic, 4), "a power of the successor escapes");
        auto rep = check_nucleus_self_composition(p.nucleus);
        expect(rep.contained, "composition leaves the nucleus");
        expect(rep.recurrent_states == 30 && rep.equal_to_nucleus_state == 26 &&
                   rep.contained_only == 4,
               "composition profile drifted");
        expect(!check_nuclear(diagonal(p.path_automaton), p.adic, 2),
               "identity alone passes the nuclear check");
    });

    gate.run(10, "biminimality", 60.0, [&] {
        LambdaSystem sys =
            make_lambda_system(p.path_automaton, p.adic, p.base_x, p.base_y);
        expect(check_lambda_recursions(sys), "visit set recursions fail");
        expect(check_lambda_partition(sys, 'x') && check_lambda_partition(sys, 'y'),
               "visit sets do not partition the integers");
        BiminimalityReport rep = check_biminimality_counterexample(sys, 1024);
        expect(rep.intersection_empty, "the clopen intersection is inhabited: " + rep.witness);
        expect(rep.swapped_intersection_empty, "the swapped intersection is inhabited");
        expect(rep.sanity_zero_in_swapped_clopens, "sanity control failed");
        expect(rep.oracle_agrees && rep.oracle_range_checked == 1024,
               "orbit oracle disagreement");
        std::vector<int> odd, even;
        for (int q = 1; q < 20; q += 2) odd.push_back(q);
        for (int q = 0; q < 20; q += 2) even.push_back(q);
        expect(rep.first_one_positions_neg_x_d == odd && rep.first_one_positions_y_e == even,
               "digit lead patterns drifted");
        expect(rep.verdict_not_biminimal(), "verdict");
    });

    gate.run(11, "minimality", 0, [&] {
        expect(is_strongly_connected(p.path_automaton), "path automaton is not irreducible");
        expect(check_minimal(p.path_automaton), "minimality check");
    });

    gate.run(12, "fixed-point", 0, [&] {
        std::string w = "0";
        for (int i = 0; i < 12; ++i) w = apply_substitution(p.base, w);
        expect(w.size() == 4096, "iterate length");
        expect(w.substr(0, 16) == "0110100110010110", "sixteen letter prefix");
        expect(w == fixed_point_prefix(p.base, '0', 12), "iterates do not nest");
        expect(is_overlap_free(w), "an overlap occurs");
        expect(w.find("000") == std::string::npos && w.find("111") == std::string::npos,
               "a cube of a letter occurs");
    });

    gate.run(13, "dimension-group", 0, [&] {
        IntMatrix m = adjacency_matrix(p.path_automaton);
        DimensionGroupReport rep = dimension_group_report(m, 4);
        expect(rep.rank_sequence == std::vector<int>({5, 5, 5, 5}), "rank sequence");
        for (IntMatrix base : {m, transpose(m)}) {
            for (int k = 1; k <= 4; ++k) {
                IntMatrix mk = mat_pow(base, k);
                SmithResult r = smith_normal_form(mk);
                expect(mat_mul(mat_mul(r.u, mk), r.v) == r.s, "decomposition identity");
                expect(std::abs(determinant(r.u)) == 1 && std::abs(determinant(r.v)) == 1,
                       "transforms are not unimodular");
                expect(invariant_factors(mk) == invariant_factors_ref(mk),
                       "invariant factors disagree with the minor gcd oracle");
                std::vector<long long> want = {1, 1, 1, 1, 1LL << (k - 1), 0};
                expect(invariant_factors(mk) == want, "invariant factor values");
            }
        }
        expect(rep.verdict == "consistent with ℤ⁴×ℤ[1/2]", "verdict text");
        expect(!rep.positive_cone.empty(), "positive cone description missing");
    });

    std::printf("acceptance: %d/%d criteria passed\n", gate.passed,
                gate.passed + gate.failed);
    return gate.failed == 0 ? 0 : 1;
}
