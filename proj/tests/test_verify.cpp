#include <doctest.h>

#include "gforge/verify.hpp"

using namespace gforge;

namespace {

GenSet gens_of(const FiniteGroup& g, std::vector<int> elements) { return check_genset(g, elements); }

} // namespace

TEST_SUITE("verify") {

TEST_CASE("geodetic equivalence on geodetic and non-geodetic fixtures") {
    FiniteGroup c4 = make_cyclic(4);
    VerificationReport all_true = verify_geodetic_equivalence(c4, gens_of(c4, {1, 2, 3}), 1);
    CHECK(all_true.pass);
    CHECK(all_true.details.find("base_geodetic=1") != std::string::npos);

    VerificationReport all_false = verify_geodetic_equivalence(c4, gens_of(c4, {1, 3}), 1);
    CHECK(all_false.pass); // the equivalence holds with all three booleans false
    CHECK(all_false.details.find("base_geodetic=0") != std::string::npos);
    CHECK(all_false.details.find("length_reducing=0") != std::string::npos);

    FiniteGroup c5 = make_cyclic(5);
    CHECK(verify_geodetic_equivalence(c5, gens_of(c5, {1, 4}), 2).pass);
}

TEST_CASE("cayley ball of the rank-2 free group is the 4-valent tree") {
    CayleyBall ball = cayley_ball(free_group_system(2), 3);
    std::vector<std::int64_t> spheres(4, 0);
    for (std::size_t v = 0; v < ball.dist.size(); ++v) {
        ++spheres[static_cast<std::size_t>(ball.dist[v])];
    }
    CHECK(spheres == std::vector<std::int64_t>{1, 4, 12, 36});
    for (std::size_t v = 0; v < ball.words.size(); ++v) {
        CHECK(ball.dist[v] == static_cast<int>(ball.words[v].size()));
    }
}

TEST_CASE("cayley correspondence holds for the standard fixtures") {
    FiniteGroup c4 = make_cyclic(4);
    SubdivisionSystem sys = build_subdivision_system(c4, gens_of(c4, {1, 2, 3}), 1);
    CHECK(verify_cayley_correspondence(sys.system, 4).pass);

    FiniteGroup c5 = make_cyclic(5);
    SubdivisionSystem sys5 = build_subdivision_system(c5, gens_of(c5, {1, 4}), 1);
    CHECK(verify_cayley_correspondence(sys5.system, 5).pass);

    CHECK(verify_cayley_correspondence(free_group_system(2), 3).pass);

    FiniteGroup s3 = make_symmetric3();
    SubdivisionSystem sys_s3 = build_subdivision_system(s3, gens_of(s3, {1, 2, 3, 4, 5}), 1);
    CHECK(verify_cayley_correspondence(sys_s3.system, 3).pass);
}

TEST_CASE("cayley correspondence rejects non-length-reducing systems") {
    FiniteGroup c4 = make_cyclic(4);
    SubdivisionSystem sys = build_subdivision_system(c4, gens_of(c4, {1, 3}), 0);
    CHECK_THROWS_AS(verify_cayley_correspondence(sys.system, 3), Error);
}

TEST_CASE("deleting a circuit rule breaks correspondence or confluence") {
    FiniteGroup c4 = make_cyclic(4);
    SubdivisionSystem sys = build_subdivision_system(c4, gens_of(c4, {1, 2, 3}), 1);
    int victim = -1;
    for (std::size_t r = 0; r < sys.system.rule_count(); ++r) {
        if (sys.provenance[r].origin == RuleOrigin::OddCircuit) {
            victim = static_cast<int>(r);
            break;
        }
    }
    REQUIRE(victim >= 0);
    std::vector<Rule> rules = sys.system.rules();
    rules.erase(rules.begin() + victim);
    RewritingSystem mutant(sys.system.alphabet(), std::move(rules));

    bool correspondence = verify_cayley_correspondence(mutant, 6).pass;
    bool confluence = check_confluence_bounded(mutant, 6).confluent;
    CHECK_FALSE((correspondence && confluence));
}

TEST_CASE("free product presentation probes") {
    FiniteGroup c4 = make_cyclic(4);
    FiniteGroup c2 = make_cyclic(2);
    VerificationReport r = verify_free_product_presentation(c4, gens_of(c4, {1, 2, 3}), 1, {c2});
    CHECK(r.pass);
    CHECK(r.details.find("torsion [4] free rank 3") != std::string::npos);
    CHECK(r.details.find("16 vs 2*8") != std::string::npos);

    FiniteGroup c5 = make_cyclic(5);
    VerificationReport r5 = verify_free_product_presentation(c5, gens_of(c5, {1, 4}), 1, {c2});
    CHECK(r5.pass);
    CHECK(r5.details.find("4 vs 1*4") != std::string::npos);

    // n = 0 reduces to the group itself.
    VerificationReport r0 = verify_free_product_presentation(c4, gens_of(c4, {1, 2, 3}), 0, default_probes());
    CHECK(r0.pass);
}

TEST_CASE("iterated subdivision isomorphism") {
    FiniteGroup c4 = make_cyclic(4);
    VerificationReport r = verify_iterated_subdivision(c4, gens_of(c4, {1, 2, 3}), 1, 1);
    CHECK(r.pass);
    CHECK(r.inputs.find("k=4") != std::string::npos);

    FiniteGroup c5 = make_cyclic(5);
    CHECK(verify_iterated_subdivision(c5, gens_of(c5, {1, 4}), 0, 2).pass); // k = m
    FiniteGroup c3 = make_cyclic(3);
    VerificationReport r7 = verify_iterated_subdivision(c3, gens_of(c3, {1, 2}), 2, 1);
    CHECK(r7.pass);
    CHECK(r7.inputs.find("k=7") != std::string::npos);
}

TEST_CASE("free product composition checks") {
    FiniteGroup c2 = make_cyclic(2);
    FiniteGroup c3 = make_cyclic(3);
    VerificationReport r = verify_free_product_composition(c2, gens_of(c2, {1}), c3, gens_of(c3, {1, 2}), 1, 4);
    CHECK(r.pass);
    CHECK(r.details.find("ball_geodetic_depth_2=1") != std::string::npos);

    // A trivial factor leaves the first factor's checks intact.
    FiniteGroup c1 = make_cyclic(1);
    VerificationReport trivial = verify_free_product_composition(c2, gens_of(c2, {1}), c1, gens_of(c1, {}), 1, 4);
    CHECK(trivial.pass);

    // A non-geodetic factor at depth 0: the equal-arc rules break bounded
    // confluence and the geodetic sub-check is skipped.
    FiniteGroup c4 = make_cyclic(4);
    VerificationReport bad = verify_free_product_composition(c4, gens_of(c4, {1, 3}), c2, gens_of(c2, {1}), 0, 4);
    CHECK_FALSE(bad.pass);
    CHECK(bad.details.find("ball_geodetic=skipped") != std::string::npos);
    CHECK(bad.details.find("counterexample") != std::string::npos);
}

TEST_CASE("reports carry timing and inputs") {
    FiniteGroup c4 = make_cyclic(4);
    VerificationReport r = verify_geodetic_equivalence(c4, gens_of(c4, {1, 2, 3}), 0);
    CHECK(r.millis >= 0.0);
    CHECK(r.inputs.find("C4") != std::string::npos);
    CHECK_FALSE(r.details.empty());
}

} // TEST_SUITE
