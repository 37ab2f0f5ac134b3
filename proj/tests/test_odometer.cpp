#include <doctest.h>

#include <adicamata/odometer.hpp>
#include <adicamata/pipeline.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

using namespace adicamata;

namespace {

DyadicWord dy(const std::string& text) { return parse_dyadic(text); }

// independent oracle: first 64 bits of the expansion
std::vector<int> expand64(const DyadicWord& w) {
    std::vector<int> out;
    for (std::size_t i = 0; i < 64; ++i) out.push_back(w.bits.at(i)[0] - '0');
    return out;
}

std::vector<int> add_one_bits(std::vector<int> b) {
    int carry = 1;
    for (auto& x : b) {
        int s = x + carry;
        x = s & 1;
        carry = s >> 1;
    }
    return b;
}

DyadicWord random_dyadic(std::mt19937_64& g) {
    std::uniform_int_distribution<int> len(0, 6), cyc(1, 5), bit(0, 1);
    UPWord w;
    for (int i = len(g); i > 0; --i) w.prefix.push_back(bit(g) ? "1" : "0");
    for (int i = cyc(g); i > 0; --i) w.cycle.push_back(bit(g) ? "1" : "0");
    return make_dyadic(canonical(w));
}

}  // namespace

TEST_CASE("dyadic parsing and printing round trip") {
    CHECK(print_dyadic(dy("(0)")) == "(0)");
    CHECK(print_dyadic(dy("011(0)")) == "011(0)");
    CHECK(print_dyadic(dy("01(01)")) == "(01)");
    CHECK(print_dyadic(dy("1(00)")) == "1(0)");
    CHECK(dy("(10)") == dy("10(10)"));
    CHECK_THROWS(parse_dyadic("01"));
    CHECK_THROWS(parse_dyadic("(2)"));
}

TEST_CASE("integer codec") {
    CHECK(is_integer(dy("(0)")));
    CHECK(is_integer(dy("(1)")));
    CHECK(!is_integer(dy("(10)")));
    CHECK(encode_integer(0) == dy("(0)"));
    CHECK(encode_integer(6) == dy("011(0)"));
    CHECK(encode_integer(-1) == dy("(1)"));
    CHECK(encode_integer(-2) == dy("0(1)"));
    for (long long n = -300; n <= 300; ++n) CHECK(decode_integer(encode_integer(n)) == n);
    CHECK_THROWS(decode_integer(dy("(10)")));
}

TEST_CASE("odometer against a carry-propagation oracle") {
    CHECK(add_one(dy("(0)")) == dy("1(0)"));
    CHECK(add_one(dy("(1)")) == dy("(0)"));
    CHECK(add_one(dy("(10)")) == dy("01(10)"));
    CHECK(add_one(dy("011(0)")) == dy("111(0)"));
    std::mt19937_64 g(7);
    for (int i = 0; i < 200; ++i) {
        DyadicWord w = random_dyadic(g);
        CHECK(expand64(add_one(w)) == add_one_bits(expand64(w)));
    }
    for (long long n = -200; n <= 200; ++n)
        CHECK(add_one(encode_integer(n)) == encode_integer(n + 1));
}

TEST_CASE("doubling shifts the expansion") {
    CHECK(double_dyadic(dy("(1)")) == dy("0(1)"));
    CHECK(double_dyadic(dy("(10)")) == dy("0(10)"));
    for (long long n = -200; n <= 200; ++n)
        CHECK(double_dyadic(encode_integer(n)) == encode_integer(2 * n));
}

TEST_CASE("full shift machines realize the maps") {
    Transducer tau = build_B_tau(), zeta = build_B_zeta();
    std::mt19937_64 g(11);
    for (int i = 0; i < 100; ++i) {
        DyadicWord w = random_dyadic(g);
        CHECK(apply(tau, w.bits) == add_one(w).bits);
        CHECK(apply(zeta, w.bits) == double_dyadic(w).bits);
    }
    SafetyAutomaton b = build_B();
    CHECK(b.states.size() == 1);
    CHECK(language_equal(input_projection(tau), b));
}

TEST_CASE("cocycle reads the position of the lowest one") {
    // phi = (n + 1) mod 2 with n the index of the first 1 bit; on zero the
    // branch bit stands in for n
    CHECK(phi(make_tilde(dy("(0)"), 1)) == 0);
    CHECK(phi(make_tilde(dy("(0)"), 0)) == 1);
    CHECK(phi(make_tilde(dy("1(0)"), 0)) == 1);
    CHECK(phi(make_tilde(dy("01(0)"), 1)) == 0);
    CHECK(phi(make_tilde(dy("001(10)"), std::nullopt)) == 1);
    CHECK_THROWS(make_tilde(dy("(0)"), std::nullopt));
    CHECK_THROWS(make_tilde(dy("(10)"), 1));
    std::mt19937_64 g(13);
    for (int i = 0; i < 200; ++i) {
        DyadicWord w = random_dyadic(g);
        TildeDyadic z = make_tilde(w, is_integer(w) ? std::optional<int>(i & 1) : std::nullopt);
        int expect;
        if (w == dy("(0)"))
            expect = (*z.branch + 1) % 2;
        else {
            std::size_t n = 0;
            while (w.bits.at(n) == "0") ++n;
            expect = static_cast<int>((n + 1) % 2);
        }
        CHECK(phi(z) == expect);
    }
}

TEST_CASE("twisted odometer orbit") {
    SymmetricPoint p{0, make_tilde(dy("(0)"), 0)};
    // branch is carried along; s accumulates phi
    SymmetricPoint q = mu_tilde(p);
    CHECK(q.z.value == dy("1(0)"));
    CHECK(q.z.branch == 0);
    CHECK(q.s == 1);
    q = mu_tilde(q);
    CHECK(q.z.value == dy("01(0)"));
    CHECK(q.s == 1);
    q = mu_tilde(q);
    CHECK(q.z.value == dy("11(0)"));
    CHECK(q.s == 0);
    SymmetricPoint r = mu_tilde({0, make_tilde(dy("(10)"), std::nullopt)});
    CHECK(r.z.value == dy("01(10)"));
    CHECK(!r.z.branch.has_value());
}

TEST_CASE("projection of the base points") {
    Pipeline pl = build_pipeline();
    TildeDyadic zx = pi_tilde(pl.base_x);
    CHECK(zx.value == dy("(0)"));
    CHECK(zx.branch == 0);
    TildeDyadic zy = pi_tilde(pl.base_y);
    CHECK(zy.value == dy("(0)"));
    CHECK(zy.branch == 1);
    CHECK(s_of(pl.base_x) == 0);
    CHECK(s_of(pl.base_y) == 0);
    PathWord min_b;
    min_b.start = "b";
    min_b.word.cycle = {"0_c", "0_b"};
    CHECK(s_of(min_b) == 1);

    PathWord max_a;
    max_a.start = "a";
    max_a.word.cycle = {"1_b", "1_a"};
    TildeDyadic za = pi_tilde(max_a);
    CHECK(za.value == dy("(1)"));
    CHECK(za.branch == 1);
    CHECK(s_of(max_a) == 0);
}

TEST_CASE("forgetting decorations lands on the full shift") {
    Pipeline pl = build_pipeline();
    CHECK(language_equal(forget_decorations(pl.path_automaton), build_B()));
    CHECK(check_graph_morphism(pl.adic, build_B_tau(), "id_", "id", "tau"));
    CHECK(check_factor(pl.path_automaton, pl.adic, pl.substitution));
}

TEST_CASE("fiber cardinalities over the odometer") {
    Pipeline pl = build_pipeline();
    Transducer lift = invert(pl.bit_projection);
    auto fibers = [&](const std::string& text) {
        return count_runs(lift, parse_dyadic(text).bits);
    };
    // integers lift four ways, non-integers two
    CHECK(fibers("(0)") == 4);
    CHECK(fibers("(1)") == 4);
    CHECK(fibers("1(0)") == 4);
    CHECK(fibers("011(0)") == 4);
    CHECK(fibers("(10)") == 2);
    CHECK(fibers("(110)") == 2);
    CHECK(fibers("10(01)") == 2);
    CHECK(fibers("0110(10)") == 2);
    std::mt19937_64 g(17);
    for (int i = 0; i < 60; ++i) {
        DyadicWord w = random_dyadic(g);
        CHECK(count_runs(lift, w.bits) == (is_integer(w) ? 4 : 2));
    }
}

TEST_CASE("difference map is two to one everywhere") {
    Transducer d = build_D_transducer();
    CHECK(d.states.size() == 2);
    CHECK(d.edge_count() == 4);
    CHECK(d.initial.size() == 2);
    CHECK(is_unambiguous(d));
    // output bit = xor of adjacent input bits
    std::mt19937_64 g(19);
    for (int i = 0; i < 100; ++i) {
        DyadicWord w = random_dyadic(g);
        UPWord out = apply(d, w.bits);
        for (std::size_t n = 0; n < 40; ++n)
            CHECK(out.at(n)[0] - '0' == ((w.bits.at(n)[0] - '0') ^ (w.bits.at(n + 1)[0] - '0')));
        CHECK(count_runs(invert(d), out) == 2);
    }
}

TEST_CASE("period-doubling adic machine run counts") {
    Transducer m = build_M_transducer();
    CHECK(m.states.size() == 7);
    CHECK(m.initial.size() == 4);
    auto runs = [&](const std::string& text) {
        return count_runs(m, parse_dyadic(text).bits);
    };
    CHECK(runs("(01)") == 2);
    CHECK(runs("(10)") == 2);
    CHECK(runs("(0)") == 1);
    CHECK(runs("(110)") == 1);
    CHECK(runs("10(01)") == 1);
    CHECK(runs("0011(01)") == 1);
    CHECK(check_tau_D_DM(build_B_tau(), build_D_transducer(), m));
}

TEST_CASE("five state candidate over-counts runs") {
    // the machine drawn without restricting two of the initial states admits
    // one extra run on every input
    Transducer t;
    for (const char* s : {"01e", "10e", "01o", "10o", "id"}) t.add_state(s);
    t.add_edge("01e", "1", "0", "10e");
    t.add_edge("10e", "0", "0", "01e");
    t.add_edge("10e", "1", "1", "id");
    t.add_edge("01o", "1", "1", "10o");
    t.add_edge("01o", "0", "0", "id");
    t.add_edge("10o", "0", "1", "01o");
    t.add_edge("id", "0", "0", "id");
    t.add_edge("id", "1", "1", "id");
    for (const char* s : {"01e", "10e", "01o", "10o"}) t.mark_initial(s);
    t.normalize();

    Transducer m = build_M_transducer();
    for (const char* w : {"(0)", "(1)", "(01)", "(10)", "(110)", "10(01)"}) {
        UPWord in = parse_dyadic(w).bits;
        CHECK(count_runs(t, in) == count_runs(m, in) + 1);
    }
    CHECK(!check_tau_D_DM(build_B_tau(), build_D_transducer(), t));
}
