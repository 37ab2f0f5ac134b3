#include <doctest.h>

#include <adicamata/safety_automaton.hpp>
#include <adicamata/transducer.hpp>

using namespace adicamata;

namespace {

// (ab)^w with one state per phase
SafetyAutomaton alternating() {
    SafetyAutomaton a;
    a.add_state("p");
    a.add_state("q");
    a.add_symbol("a");
    a.add_symbol("b");
    a.add_transition("p", "a", "q");
    a.add_transition("q", "b", "p");
    a.mark_initial("p");
    a.normalize();
    return a;
}

// the same language with a redundant unrolled state
SafetyAutomaton alternating_unrolled() {
    SafetyAutomaton a;
    a.add_state("p0");
    a.add_state("q");
    a.add_state("p");
    a.add_symbol("a");
    a.add_symbol("b");
    a.add_transition("p0", "a", "q");
    a.add_transition("q", "b", "p");
    a.add_transition("p", "a", "q");
    a.mark_initial("p0");
    a.normalize();
    return a;
}

}  // namespace

TEST_CASE("ultimately periodic words canonicalize") {
    UPWord w = up_from_chars("01", "0101");
    CHECK(w.prefix.empty());
    CHECK(w.cycle == std::vector<std::string>({"0", "1"}));
    CHECK(w.at(0) == "0");
    CHECK(w.at(5) == "1");
    UPWord v = up_from_chars("0110", "10");
    CHECK(v.prefix == std::vector<std::string>({"0", "1"}));
    CHECK(v.cycle == std::vector<std::string>({"1", "0"}));
    CHECK(up_from_chars("", "01") < up_from_chars("", "10"));
}

TEST_CASE("safety acceptance and equivalence") {
    SafetyAutomaton a = alternating(), b = alternating_unrolled();
    CHECK(accepts(a, up_from_chars("", "ab")));
    CHECK(!accepts(a, up_from_chars("", "ba")));
    CHECK(!accepts(a, up_from_chars("a", "ab")));
    CHECK(language_equal(a, b));
    CHECK(language_subset(a, b));
    SafetyAutomaton c = alternating();
    c.add_transition("p", "b", "q");
    c.normalize();
    CHECK(!language_equal(a, c));
    CHECK(language_subset(a, c));
    CHECK(!language_subset(c, a));
    CHECK(!is_empty(a));
    CHECK(accepts(product(a, b), up_from_chars("", "ab")));
}

TEST_CASE("trim removes dead states") {
    SafetyAutomaton a = alternating();
    a.add_state("sink");
    a.add_transition("q", "a", "sink");
    a.normalize();
    SafetyAutomaton t = trim(a);
    CHECK(t.states.size() == 2);
    CHECK(language_equal(t, alternating()));
}

TEST_CASE("strong connectivity") {
    CHECK(is_strongly_connected(alternating()));
    SafetyAutomaton two;
    two.add_state("x");
    two.add_state("y");
    two.add_symbol("a");
    two.add_transition("x", "a", "x");
    two.add_transition("x", "a", "y");
    two.add_transition("y", "a", "y");
    two.mark_initial("x");
    two.normalize();
    CHECK(!is_strongly_connected(two));
}

namespace {

// letter swap a<->b as a transducer
Transducer swapper() {
    Transducer t;
    t.add_state("s");
    t.add_edge("s", "a", "b", "s");
    t.add_edge("s", "b", "a", "s");
    t.mark_initial("s");
    t.normalize();
    return t;
}

}  // namespace

TEST_CASE("transducer composition and inversion") {
    Transducer s = swapper();
    SafetyAutomaton full;
    full.add_state("s");
    full.add_symbol("a");
    full.add_symbol("b");
    full.add_transition("s", "a", "s");
    full.add_transition("s", "b", "s");
    full.mark_initial("s");
    full.normalize();

    CHECK(t_language_equal(compose(s, s), diagonal(full)));
    CHECK(t_language_equal(invert(s), s));
    CHECK(t_language_equal(power(s, 2), diagonal(full)));
    CHECK(t_language_equal(power(s, -1), s));
    CHECK(is_unambiguous(s));
    CHECK(apply(s, up_from_chars("a", "ab")) == up_from_chars("b", "ba"));
    CHECK(language_equal(input_projection(s), full));
    CHECK(language_equal(output_projection(s), full));
}

TEST_CASE("ambiguity is detected") {
    Transducer t = swapper();
    t.add_edge("s", "a", "a", "s");
    t.normalize();
    CHECK(!is_unambiguous(t));
    CHECK_THROWS(apply(t, up_from_chars("", "a")));
}

TEST_CASE("recurrent part drops transients") {
    Transducer t = swapper();
    t.add_state("pre");
    t.add_edge("pre", "a", "a", "s");
    t.initial = {t.state_index("pre")};
    t.normalize();
    Transducer r = recurrent_part(t);
    CHECK(r.states.size() == 1);
    CHECK(rooted_language_equal(r, "s", swapper(), "s"));
}
