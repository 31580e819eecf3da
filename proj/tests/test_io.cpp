#include <doctest.h>

#include "gforge/io.hpp"

using namespace gforge;

TEST_SUITE("io") {

TEST_CASE("group JSON parsing and validation") {
    GroupSpec spec = parse_group_json(R"({
        "name": "C4", "order": 4,
        "table": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]],
        "generators": [1,2,3],
        "element_names": ["e","x","y","z"]})");
    CHECK(spec.group.order == 4);
    CHECK(spec.group.identity == 0);
    CHECK(spec.group.element_name(3) == "z");
    CHECK(spec.generators == std::vector<int>{1, 2, 3});

    CHECK_THROWS_AS(parse_group_json("{"), Error);
    CHECK_THROWS_AS(parse_group_json(R"({"order": 2, "table": [[0,1]]})"), Error);
    CHECK_THROWS_AS(parse_group_json(R"({"order": 2, "table": [[0,1],[1,1]]})"), Error);
}

TEST_CASE("cyclic shorthand") {
    GroupSpec spec = resolve_group_source("cyclic:5");
    CHECK(spec.group.order == 5);
    CHECK(spec.generators == std::vector<int>{1, 2, 3, 4});
    CHECK_THROWS_AS(resolve_group_source("cyclic:zero"), Error);
    CHECK_THROWS_AS(resolve_group_source("/nonexistent/file.json"), Error);
}

TEST_CASE("graph dump carries vertices, edges and directed labels") {
    FiniteGroup c3 = make_cyclic(3);
    std::string json = graph_to_json(cayley_graph(c3, check_genset(c3, {1, 2})));
    CHECK(json.find("\"vertices\"") != std::string::npos);
    CHECK(json.find("\"edges\"") != std::string::npos);
    CHECK(json.find("\"0->1\": \"b_1_1\"") != std::string::npos);
    CHECK(json.find("\"1->0\": \"c_1_1\"") != std::string::npos);
}

TEST_CASE("system JSON round trip preserves behaviour") {
    FiniteGroup c4 = make_cyclic(4);
    SubdivisionSystem sys = build_subdivision_system(c4, check_genset(c4, {1, 2, 3}), 1);
    RewritingSystem back = system_from_json(system_to_json(sys));
    CHECK(back.alphabet().size() == sys.system.alphabet().size());
    CHECK(back.rule_count() == sys.system.rule_count());
    CHECK(back.alphabet().involution_total());
    Word probe = word_from_string("a_1_1 a_1_2 a_1_3 b_1_1 b_1_2");
    CHECK(normal_form(probe, back) == normal_form(probe, sys.system));

    RewritingSystem bare = system_from_json(system_to_json(free_group_system(2)));
    CHECK(bare.rule_count() == 4);
}

TEST_CASE("report JSON") {
    VerificationReport ok{"demo", "inputs", true, "fine", 1.5};
    VerificationReport bad{"demo2", "inputs", false, "broken", 0.5};
    std::string json = reports_to_json({ok, bad});
    CHECK(json.find("\"pass\": false") != std::string::npos); // top level
    CHECK(json.find("\"check\": \"demo\"") != std::string::npos);
    CHECK(json.find("\"details\": \"broken\"") != std::string::npos);
}

} // TEST_SUITE
