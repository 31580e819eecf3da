#include <doctest.h>

#include <map>
#include <set>

#include "gforge/subdivision_system.hpp"

using namespace gforge;

namespace {

SubdivisionSystem c4_full(int n) {
    FiniteGroup g = make_cyclic(4);
    return build_subdivision_system(g, check_genset(g, {1, 2, 3}), n);
}

SubdivisionSystem c4_two(int n) {
    FiniteGroup g = make_cyclic(4);
    return build_subdivision_system(g, check_genset(g, {1, 3}), n);
}

SubdivisionSystem c5_two(int n) {
    FiniteGroup g = make_cyclic(5);
    return build_subdivision_system(g, check_genset(g, {1, 4}), n);
}

bool has_rule(const RewritingSystem& sys, const char* lhs, const char* rhs) {
    Rule probe{word_from_string(lhs), word_from_string(rhs)};
    for (const auto& r : sys.rules()) {
        if (r == probe) {
            return true;
        }
    }
    return false;
}

// Follow a word through the graph from `start`; -1 when it leaves the graph.
int try_walk(const LabeledGraph& g, int start, const Word& w) {
    int at = start;
    for (const Letter& x : w) {
        auto id = g.alphabet().find(x);
        if (!id) {
            return -1;
        }
        at = g.neighbor_by_letter(at, *id);
        if (at < 0) {
            return -1;
        }
    }
    return at;
}

} // namespace

TEST_SUITE("construction") {

TEST_CASE("alphabet sizes and involution") {
    FiniteGroup c4 = make_cyclic(4);
    GenPartition part = partition_generators(c4, check_genset(c4, {1, 2, 3}));
    Alphabet a1 = build_alphabet(part, 1);
    CHECK(a1.size() == 9);
    CHECK(a1.inverse_letter(letter_from_token("a_1_1")) == letter_from_token("a_1_3"));
    CHECK(a1.inverse_letter(letter_from_token("a_1_2")) == letter_from_token("a_1_2"));

    Alphabet a0 = build_alphabet(part, 0);
    CHECK(a0.inverse_letter(letter_from_token("b_1_1")) == letter_from_token("c_1_1"));

    GenPartition c5part = partition_generators(make_cyclic(5), check_genset(make_cyclic(5), {1, 4}));
    CHECK(build_alphabet(c5part, 2).size() == 10);
}

TEST_CASE("the K4 system at depth 1 reproduces the known rules") {
    SubdivisionSystem sys = c4_full(1);
    CHECK(sys.system.alphabet().size() == 9);

    CHECK(has_rule(sys.system, "a_1_1 a_1_3", "_"));
    CHECK(has_rule(sys.system, "a_1_3 a_1_1", "_"));
    CHECK(has_rule(sys.system, "a_1_2 a_1_2", "_"));
    CHECK(has_rule(sys.system, "b_1_1 c_1_1", "_"));
    CHECK(has_rule(sys.system, "c_1_1 b_1_1", "_"));
    CHECK(has_rule(sys.system, "a_1_1 a_1_2 a_1_3 b_1_1 b_1_2", "c_1_3 c_1_2 c_1_1 c_1_3"));
    CHECK(has_rule(sys.system, "a_1_2 a_1_3 b_1_1 b_1_2 b_1_3", "a_1_3 c_1_3 c_1_2 c_1_1"));

    int backtracks = 0;
    int odd = 0;
    int even = 0;
    for (const auto& p : sys.provenance) {
        backtracks += p.origin == RuleOrigin::Backtrack;
        odd += p.origin == RuleOrigin::OddCircuit;
        even += p.origin == RuleOrigin::EvenCircuit;
    }
    CHECK(backtracks == 9); // one per ordered letter-inverse pair
    CHECK(odd > 0);
    CHECK(even == 0); // geodetic input has no equal-arc rules
}

TEST_CASE("backtrack rules cover every letter") {
    for (const SubdivisionSystem& sys : {c4_full(1), c5_two(1), c4_two(1)}) {
        std::set<int> covered;
        for (std::size_t r = 0; r < sys.system.rule_count(); ++r) {
            if (sys.provenance[r].origin == RuleOrigin::Backtrack) {
                CHECK(sys.system.rules()[r].rhs.empty());
                CHECK(sys.system.rules()[r].lhs.size() == 2);
                int first = sys.system.lhs_ids(static_cast<int>(r))[0];
                CHECK(sys.system.lhs_ids(static_cast<int>(r))[1] == sys.system.alphabet().inverse(first));
                covered.insert(first);
            }
        }
        CHECK(covered.size() == sys.system.alphabet().size());
    }
}

TEST_CASE("rule geometry: both sides label paths with equal endpoints") {
    for (const SubdivisionSystem& sys : {c4_full(1), c5_two(2), c4_two(1)}) {
        for (const auto& rule : sys.system.rules()) {
            int walked = 0;
            for (int start = 0; start < sys.graph.vertex_count(); ++start) {
                int end_lhs = try_walk(sys.graph, start, rule.lhs);
                if (end_lhs < 0) {
                    continue;
                }
                ++walked;
                CHECK(try_walk(sys.graph, start, rule.rhs) == end_lhs);
            }
            CHECK(walked > 0);
        }
    }
}

TEST_CASE("provenance circuits have the right parity") {
    for (const SubdivisionSystem& sys : {c4_full(1), c4_two(1), c5_two(1)}) {
        for (std::size_t r = 0; r < sys.system.rule_count(); ++r) {
            const auto& rule = sys.system.rules()[r];
            const auto& prov = sys.provenance[r];
            if (prov.origin == RuleOrigin::OddCircuit) {
                CHECK(prov.circuit.size() % 2 == 1);
                CHECK(rule.lhs.size() == rule.rhs.size() + 1);
                CHECK(prov.circuit.size() == rule.lhs.size() + rule.rhs.size());
            } else if (prov.origin == RuleOrigin::EvenCircuit) {
                CHECK(prov.circuit.size() % 2 == 0);
                CHECK(prov.circuit.size() >= 4);
                CHECK(rule.lhs.size() == rule.rhs.size());
            }
        }
    }
}

TEST_CASE("depth-0 on the 5-cycle gives free reduction plus cycle shortcuts") {
    SubdivisionSystem sys = c5_two(0);
    CHECK(sys.system.alphabet().size() == 2);
    CHECK(sys.system.rule_count() == 4);
    CHECK(has_rule(sys.system, "b_1_1 c_1_1", "_"));
    CHECK(has_rule(sys.system, "c_1_1 b_1_1", "_"));
    CHECK(has_rule(sys.system, "b_1_1 b_1_1 b_1_1", "c_1_1 c_1_1"));
    CHECK(has_rule(sys.system, "c_1_1 c_1_1 c_1_1", "b_1_1 b_1_1"));
}

TEST_CASE("the 4-cycle is not length-reducing at any depth") {
    for (int n : {0, 1}) {
        SubdivisionSystem sys = c4_two(n);
        LengthReducingResult lr = is_length_reducing(sys.system);
        CHECK_FALSE(lr.length_reducing);
        REQUIRE(lr.offending.has_value());
        CHECK(lr.offending->lhs.size() == lr.offending->rhs.size());
        bool has_even = false;
        for (const auto& p : sys.provenance) {
            has_even = has_even || p.origin == RuleOrigin::EvenCircuit;
        }
        CHECK(has_even);
    }
    // Equal-arc rules at depth 0 have |lhs| = |rhs| = 2.
    LengthReducingResult lr0 = is_length_reducing(c4_two(0).system);
    CHECK(lr0.offending->lhs.size() == 2);
}

TEST_CASE("geodeticity equals length reduction across fixtures") {
    auto cases = std::vector<std::pair<FiniteGroup, std::vector<int>>>{
        {make_cyclic(4), {1, 2, 3}}, {make_cyclic(4), {1, 3}},    {make_cyclic(5), {1, 4}},
        {make_cyclic(3), {1, 2}},    {make_klein_four(), {1, 2, 3}},
    };
    for (const auto& [group, gens] : cases) {
        GenSet gs = check_genset(group, gens);
        bool base_geodetic = is_geodetic(cayley_graph(group, gs)).geodetic;
        for (int n : {0, 1, 2}) {
            SubdivisionSystem sys = build_subdivision_system(group, gs, n);
            CHECK(is_length_reducing(sys.system).length_reducing == base_geodetic);
        }
    }
}

TEST_CASE("systems from geodetic inputs are inverse-closed and confluent to length 6") {
    for (const SubdivisionSystem& sys : {c4_full(1), c5_two(1), c5_two(0)}) {
        CHECK(is_inverse_closed(sys.system));
        ConfluenceResult c = check_confluence_bounded(sys.system, 6);
        CHECK(c.confluent);
    }
}

TEST_CASE("critical pairs of constructed systems") {
    // Geodetic input: every overlap joins.
    CHECK(check_critical_pairs(c4_full(1).system).confluent);
    CHECK(check_critical_pairs(c5_two(1).system).confluent);
    // The depth-0 4-cycle system genuinely fails joinability: c c b reduces
    // to both b b b and c, which are distinct irreducible words.
    ConfluenceResult r = check_critical_pairs(c4_two(0).system);
    CHECK_FALSE(r.confluent);
    REQUIRE(r.counterexample.has_value());
    CHECK(r.counterexample->size() == 3);
    REQUIRE(r.divergent_forms.size() == 2);
    // One branch cancels to a single letter, the other grows to three.
    std::set<std::size_t> lengths{r.divergent_forms[0].size(), r.divergent_forms[1].size()};
    CHECK(lengths == std::set<std::size_t>{1, 3});
}

TEST_CASE("normal form properties on the K4 system") {
    RewritingSystem sys = c4_full(1).system;
    std::uint64_t state = 2024;
    for (int trial = 0; trial < 300; ++trial) {
        Word w;
        int len = static_cast<int>(state % 12);
        for (int i = 0; i < len; ++i) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            w.push_back(sys.alphabet().at(static_cast<int>(state % sys.alphabet().size())));
        }
        Word nf = normal_form(w, sys);
        CHECK(normal_form(nf, sys) == nf);                                    // idempotent
        CHECK(normal_form(nf, sys, Strategy::Rightmost) == nf);               // strategy independent
        CHECK(normal_form(w, sys, Strategy::Random, 100000, state) == nf);    // seeded random agrees
        Word collapse = w;
        Word winv = word_inverse(w, sys.alphabet());
        collapse.insert(collapse.end(), winv.begin(), winv.end());
        CHECK(normal_form(collapse, sys).empty()); // w w^-1 cancels
    }
}

TEST_CASE("example reductions from the K4 system") {
    RewritingSystem sys = c4_full(1).system;
    CHECK(normal_form(word_from_string("a_1_1 a_1_3"), sys).empty());
    CHECK(to_string(normal_form(word_from_string("a_1_1 a_1_2 a_1_3 b_1_1 b_1_2"), sys)) ==
          "c_1_3 c_1_2 c_1_1 c_1_3");
}

TEST_CASE("rule enumeration is independent of the letter order on geodetic inputs") {
    auto rules_of = [](const SubdivisionSystem& s) {
        return std::set<Rule>(s.system.rules().begin(), s.system.rules().end());
    };
    FiniteGroup c4 = make_cyclic(4);
    FiniteGroup c5 = make_cyclic(5);
    CHECK(rules_of(build_subdivision_system(c4, check_genset(c4, {1, 2, 3}), 1, OrderKind::Canonical)) ==
          rules_of(build_subdivision_system(c4, check_genset(c4, {1, 2, 3}), 1, OrderKind::Reversed)));
    CHECK(rules_of(build_subdivision_system(c5, check_genset(c5, {1, 4}), 1, OrderKind::Canonical)) ==
          rules_of(build_subdivision_system(c5, check_genset(c5, {1, 4}), 1, OrderKind::Reversed)));
    // ...and genuinely differs on a non-geodetic input (the equal-arc rules
    // swap sides).
    CHECK(rules_of(build_subdivision_system(c4, check_genset(c4, {1, 3}), 0, OrderKind::Canonical)) !=
          rules_of(build_subdivision_system(c4, check_genset(c4, {1, 3}), 0, OrderKind::Reversed)));
}

TEST_CASE("free group systems") {
    RewritingSystem f0 = free_group_system(0);
    CHECK(f0.alphabet().size() == 0);
    CHECK(f0.rule_count() == 0);

    RewritingSystem f1 = free_group_system(1);
    CHECK(f1.alphabet().size() == 2);
    CHECK(f1.rule_count() == 2);

    RewritingSystem f2 = free_group_system(2);
    CHECK(f2.alphabet().size() == 4);
    CHECK(f2.rule_count() == 4);
    CHECK(irreducible_words(f2, 2).counts == std::vector<std::int64_t>{1, 4, 12});
}

TEST_CASE("free product composition") {
    RewritingSystem a = c4_full(1).system;
    RewritingSystem b = free_group_system(2);
    RewritingSystem ab = compose_free_product(a, b);
    CHECK(ab.alphabet().size() == 13);
    CHECK(ab.rule_count() == a.rule_count() + b.rule_count());
    CHECK(is_inverse_closed(ab));

    // Composing with the empty factor changes nothing.
    RewritingSystem same = compose_free_product(a, free_group_system(0));
    CHECK(same.alphabet().size() == a.alphabet().size());
    CHECK(same.rules() == a.rules());

    // Same-named letters in both factors stay structurally disjoint.
    RewritingSystem c5c3 = compose_free_product(c5_two(1).system,
                                                build_subdivision_system(make_cyclic(3), check_genset(make_cyclic(3), {1, 2}), 1).system);
    CHECK(c5c3.alphabet().size() == 12);
    CHECK(is_inverse_closed(c5c3));
}

TEST_CASE("structural letter bijection for iterated subdivision") {
    FiniteGroup c4 = make_cyclic(4);
    GenPartition part = partition_generators(c4, check_genset(c4, {1, 2, 3}));
    auto phi = phi_bijection(part, 1, 1);
    const int k = 2 * 1 * 1 + 1 + 1; // = 4
    CHECK(phi.size() == 3u * static_cast<unsigned>(2 * k + 1)); // 27 letters

    // Targets form a bijection.
    std::set<Letter> targets;
    for (const auto& [from, to] : phi) {
        targets.insert(to);
    }
    CHECK(targets.size() == phi.size());

    // First block maps positionally; the mirrored a-block reverses.
    CHECK(phi.at(letter_from_token("a_1_1")) == letter_from_token("b_1_1"));
    CHECK(phi.at(letter_from_token("a_1_4")) == letter_from_token("a_1_1"));
    CHECK(phi.at(letter_from_token("a_1_7")) == letter_from_token("c_1_3"));
    CHECK(phi.at(letter_from_token("a_1_9")) == letter_from_token("c_1_1"));
    CHECK(phi.at(letter_from_token("b_1_1")) == letter_from_token("b_2_1"));
    CHECK(phi.at(letter_from_token("c_1_9")) == letter_from_token("c_4_3"));

    // The bijection commutes with the involutions.
    Alphabet top = build_alphabet(part, k);
    Subdivision first = subdivide(cayley_graph(c4, check_genset(c4, {1, 2, 3})), 1);
    Alphabet twice = subdivide(first.graph, 1).graph.alphabet();
    for (const auto& [from, to] : phi) {
        CHECK(phi.at(top.inverse_letter(from)) == twice.inverse_letter(to));
    }
}

TEST_CASE("presentations and abelianizations of constructed systems") {
    CHECK(abelianization(presentation_of(free_group_system(2))) == AbelianInvariants{{}, 2});
    CHECK(abelianization(presentation_of(c4_full(0).system)) == AbelianInvariants{{4}, 0});
    CHECK(abelianization(presentation_of(c4_full(1).system)) == AbelianInvariants{{4}, 3});
    CHECK(abelianization(presentation_of(c5_two(1).system)) == AbelianInvariants{{5}, 2});

    Alphabet broken({letter_from_token("b_1_1")});
    RewritingSystem no_involution(broken, {});
    CHECK_THROWS_AS(presentation_of(no_involution), Error);
}

TEST_CASE("construction works when the identity is not element 0") {
    FiniteGroup g = validate_group({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}}); // C3, identity at 2
    SubdivisionSystem sys = build_subdivision_system(g, check_genset(g, {0, 1}), 1);
    CHECK(is_length_reducing(sys.system).length_reducing);
    CHECK(is_inverse_closed(sys.system));
    CHECK(check_confluence_bounded(sys.system, 5).confluent);
    CHECK(abelianization(presentation_of(sys.system)) == AbelianInvariants{{3}, 2});
}

TEST_CASE("trivial group degenerates cleanly") {
    FiniteGroup c1 = make_cyclic(1);
    SubdivisionSystem sys = build_subdivision_system(c1, check_genset(c1, {}), 1);
    CHECK(sys.system.alphabet().size() == 0);
    CHECK(sys.system.rule_count() == 0);
    CHECK(sys.graph.vertex_count() == 1);
    CHECK(irreducible_words(sys.system, 3).counts == std::vector<std::int64_t>{1, 0, 0, 0});
}

TEST_CASE("circuit caps propagate through the builder") {
    Caps caps;
    caps.max_circuits = 3; // K4 has 7 embedded circuits
    FiniteGroup c4 = make_cyclic(4);
    CHECK_THROWS_AS(build_subdivision_system(c4, check_genset(c4, {1, 2, 3}), 1, OrderKind::Canonical, caps),
                    Error);
}

TEST_CASE("the 15-cycle fixture") {
    SubdivisionSystem sys = c5_two(1);
    CHECK(sys.graph.vertex_count() == 15);
    CHECK(sys.graph.edge_count() == 15);
    auto lifted = lift_circuits(enumerate_embedded_circuits(sys.base_graph), sys.map);
    CHECK(lifted.size() == 1);
    CHECK(lifted[0].size() == 15);
}

TEST_CASE("deepening the C5 subdivision stretches its single circuit") {
    // The cyclic-pair C5 graphs are odd cycles of length 5(2n+1); these give
    // pairwise non-isomorphic geodetic graphs as n grows.
    for (int n = 1; n <= 4; ++n) {
        SubdivisionSystem sys = c5_two(n);
        auto circuits = enumerate_embedded_circuits(sys.graph);
        REQUIRE(circuits.size() == 1);
        CHECK(static_cast<int>(circuits[0].size()) == 5 * (2 * n + 1));
        CHECK(is_geodetic(sys.graph).geodetic);
    }
}

TEST_CASE("short census of the K4 system matches the closed form") {
    // Circuit rules have left sides of length 5, so up to length 4 the
    // census only avoids the 9 cancelling 2-grams: 9 * 8^(len-1).
    CensusResult census = irreducible_words(c4_full(1).system, 4);
    CHECK(census.counts == std::vector<std::int64_t>{1, 9, 72, 576, 4608});
}

} // TEST_SUITE
