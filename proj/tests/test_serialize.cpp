#include <doctest.h>

#include <adicamata/pipeline.hpp>
#include <adicamata/serialize.hpp>

#include <json.hpp>

#include <string>

using namespace adicamata;
using nlohmann::json;

TEST_CASE("path specs round trip through print and parse") {
    Pipeline p = build_pipeline();
    CHECK(print_path(p.base_x) == "(0_d0_e)@e");
    CHECK(parse_path_spec("(0_d0_e)@e", p.diagram) == p.base_x);
    CHECK(parse_path_spec(print_path(p.base_y), p.diagram) == p.base_y);

    PathWord z;
    z.start = "b";
    z.word.prefix = {"1_a", "1_b", "0_c"};
    z.word.cycle = {"0_b", "0_c"};
    CHECK(parse_path_spec(print_path(z), p.diagram) == z);

    // start-free form: subscripts name the visited vertices in order
    CHECK(parse_path_spec("(0_e0_d)", p.diagram) == p.base_x);
    CHECK(parse_path_spec("(0_e0_d)^w", p.diagram) == p.base_x);
    CHECK(parse_path_spec("(0_d0_e)", p.diagram) == p.base_y);

    CHECK_THROWS_AS(parse_path_spec("", p.diagram), std::invalid_argument);
    CHECK_THROWS_AS(parse_path_spec("(0_d0_e)@q", p.diagram), std::invalid_argument);
    CHECK_THROWS_AS(parse_path_spec("(0_a0_a)@a", p.diagram), std::invalid_argument);
    CHECK_THROWS_AS(parse_path_spec("0_d@e", p.diagram), std::invalid_argument);   // no cycle
    CHECK_THROWS_AS(parse_path_spec("(0_d0_a)@e", p.diagram), std::invalid_argument);
}

TEST_CASE("automaton json carries the full structure") {
    Pipeline p = build_pipeline();
    std::string s = to_json(p.path_automaton);
    json j = json::parse(s);
    CHECK(j["states"].size() == 6);
    CHECK(j["initial"].size() == 6);
    CHECK(j["transitions"].size() == 12);
    CHECK(j["alphabet"].size() == 12);
    for (const auto& t : j["transitions"]) {
        CHECK(t.size() == 3);
        CHECK(t[0].is_string());
    }
    CHECK(to_json(p.path_automaton) == s);
    CHECK(s.back() == '\n');
}

TEST_CASE("transducer json uses paired symbols") {
    Pipeline p = build_pipeline();
    json j = json::parse(to_json(p.adic));
    CHECK(j["states"].size() == 16);
    CHECK(j["initial"].size() == 10);
    CHECK(j["transitions"].size() == 28);
    for (const auto& sym : j["alphabet"]) {
        std::string s = sym.get<std::string>();
        CHECK(s.find('|') != std::string::npos);
    }
}

TEST_CASE("diagram json lists edges as triples") {
    Pipeline p = build_pipeline();
    json j = json::parse(to_json(p.diagram));
    CHECK(j["vertices"].size() == 6);
    CHECK(j["edges"].size() == 12);
    for (const auto& e : j["edges"]) {
        CHECK(e.size() == 3);
        CHECK((e[2] == 0 || e[2] == 1));
    }
}

TEST_CASE("integer automaton json keeps tail acceptance") {
    Pipeline p = build_pipeline();
    LambdaSystem sys = make_lambda_system(p.path_automaton, p.adic, p.base_x, p.base_y);
    json j = json::parse(to_json(sys.core));
    CHECK(j["states"].size() == 24);
    CHECK(j["transitions"].size() == 48);
    CHECK(j["initial"].size() == 0);
    CHECK(j.contains("tail0"));
    CHECK(j.contains("tail1"));
}

TEST_CASE("report json has the verdict fields") {
    Pipeline p = build_pipeline();
    json j = json::parse(to_json(dimension_group_report(adjacency_matrix(p.path_automaton), 4)));
    CHECK(j["rank_sequence"] == json::array({5, 5, 5, 5}));
    CHECK(j["verdict"].get<std::string>().find("consistent") == 0);
}

TEST_CASE("dot output for the one state shift") {
    std::string dot = to_dot(build_B(), "B");
    CHECK(dot ==
          "digraph \"B\" {\n"
          "  rankdir=LR;\n"
          "  node [shape=circle];\n"
          "  \"q\" [shape=doublecircle];\n"
          "  \"q\" -> \"q\" [label=\"0\"];\n"
          "  \"q\" -> \"q\" [label=\"1\"];\n"
          "}\n");
}
