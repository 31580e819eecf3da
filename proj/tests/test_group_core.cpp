#include <doctest.h>

#include <algorithm>
#include <random>

#include "gforge/group.hpp"
#include "gforge/presentation.hpp"

using namespace gforge;

namespace {

// Independent oracle: count homomorphisms C_m -> Q by checking x^m = 1 for
// every candidate image of the single generator.
long long cyclic_hom_oracle(int m, const FiniteGroup& q) {
    long long total = 0;
    for (int img = 0; img < q.order; ++img) {
        int acc = q.identity;
        for (int i = 0; i < m; ++i) {
            acc = q.mul(acc, img);
        }
        if (acc == q.identity) {
            ++total;
        }
    }
    return total;
}

Presentation cyclic_presentation(int m) {
    Presentation p;
    p.generator_count = 1;
    p.relators.push_back(std::vector<int>(static_cast<std::size_t>(m), 1));
    return p;
}

} // namespace

TEST_SUITE("group_core") {

TEST_CASE("validate_group accepts cyclic tables") {
    FiniteGroup c4 = make_cyclic(4);
    CHECK(c4.order == 4);
    CHECK(c4.identity == 0);
    CHECK(c4.inverses == std::vector<int>{0, 3, 2, 1});

    FiniteGroup c5 = make_cyclic(5);
    CHECK(c5.identity == 0);
    CHECK(c5.element_order(1) == 5);

    FiniteGroup trivial = make_cyclic(1);
    CHECK(trivial.order == 1);
}

TEST_CASE("validate_group rejects broken tables") {
    CHECK_THROWS_WITH_AS(validate_group({{0, 1}, {1, 1}}), "NoInverse: element 1 has no inverse", Error);
    // swap breaks associativity but keeps identity row/column intact
    // Latin square with identity and inverses but (1*1)*2 != 1*(1*2).
    CHECK_THROWS_WITH_AS(
        validate_group({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}}),
        "NotAssociative: triple (1,1,2)", Error);
    CHECK_THROWS_AS(validate_group({{0, 0}, {0, 0}}), Error);
}

TEST_CASE("validate_group identity hint") {
    CHECK_NOTHROW(validate_group({{0, 1}, {1, 0}}, 0));
    CHECK_THROWS_AS(validate_group({{0, 1}, {1, 0}}, 1), Error);
}

TEST_CASE("check_genset validates the three failure modes") {
    FiniteGroup c4 = make_cyclic(4);
    CHECK_NOTHROW(check_genset(c4, {1, 2, 3}));
    CHECK_THROWS_AS(check_genset(c4, {0, 1, 3}), Error); // identity
    CHECK_THROWS_AS(check_genset(c4, {1}), Error);       // x^-1 = x^3 missing
    CHECK_THROWS_AS(check_genset(c4, {2}), Error);       // <x^2> proper subgroup

    FiniteGroup c5 = make_cyclic(5);
    CHECK_NOTHROW(check_genset(c5, {1, 4}));
}

TEST_CASE("partition_generators") {
    FiniteGroup c4 = make_cyclic(4);
    GenPartition p = partition_generators(c4, check_genset(c4, {1, 2, 3}));
    CHECK(p.sigma1 == std::vector<int>{2});
    CHECK(p.sigma2 == std::vector<int>{1});
    CHECK(p.sigma3 == std::vector<int>{3});

    FiniteGroup c5 = make_cyclic(5);
    GenPartition p5 = partition_generators(c5, check_genset(c5, {1, 4}));
    CHECK(p5.m1() == 0);
    CHECK(p5.sigma2 == std::vector<int>{1});
    CHECK(p5.sigma3 == std::vector<int>{4});

    FiniteGroup v4 = make_klein_four();
    GenPartition pv = partition_generators(v4, check_genset(v4, {1, 2, 3}));
    CHECK(pv.m1() == 3);
    CHECK(pv.m2() == 0);
}

TEST_CASE("partition invariants on random small cyclic groups") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int m = 2 + static_cast<int>(rng() % 9);
        FiniteGroup g = make_cyclic(m);
        GenSet gens = check_genset(g, [&] {
            std::vector<int> all;
            for (int v = 1; v < m; ++v) {
                all.push_back(v);
            }
            return all;
        }());
        GenPartition p = partition_generators(g, gens);
        CHECK(p.sigma2.size() == p.sigma3.size());
        std::vector<int> every = p.sigma1;
        every.insert(every.end(), p.sigma2.begin(), p.sigma2.end());
        every.insert(every.end(), p.sigma3.begin(), p.sigma3.end());
        std::sort(every.begin(), every.end());
        std::vector<int> expected(gens.elements);
        std::sort(expected.begin(), expected.end());
        CHECK(every == expected);
        for (int s : p.sigma1) {
            CHECK(g.element_order(s) == 2);
        }
        for (int i = 0; i < p.m2(); ++i) {
            CHECK(g.inv(p.sigma2[static_cast<std::size_t>(i)]) == p.sigma3[static_cast<std::size_t>(i)]);
        }
    }
}

TEST_CASE("count_homs against the cyclic oracle") {
    FiniteGroup c2 = make_cyclic(2);
    CHECK(cyclic_hom_oracle(4, c2) == 2);
    CHECK(cyclic_hom_oracle(5, c2) == 1);
    CHECK(count_homs(cyclic_presentation(4), c2) == 2);
    CHECK(count_homs(cyclic_presentation(5), c2) == 1);

    Presentation free2;
    free2.generator_count = 2;
    CHECK(count_homs(free2, c2) == 4);
}

TEST_CASE("count_homs from a table with generators") {
    FiniteGroup c4 = make_cyclic(4);
    FiniteGroup c2 = make_cyclic(2);
    CHECK(count_homs(c4, check_genset(c4, {1, 2, 3}), c2) == 2);
    FiniteGroup c5 = make_cyclic(5);
    CHECK(count_homs(c5, check_genset(c5, {1, 4}), c2) == 1);
    FiniteGroup s3 = make_symmetric3();
    // Hom(S3, C2): identity and the sign map.
    CHECK(count_homs(s3, check_genset(s3, {1, 2, 3, 4, 5}), c2) == 2);
}

TEST_CASE("count_homs respects the enumeration cap") {
    Presentation free4;
    free4.generator_count = 4;
    FiniteGroup c3 = make_cyclic(3);
    CHECK_THROWS_AS(count_homs(free4, c3, 10), Error);
}

TEST_CASE("count_homs is multiplicative over disjoint unions") {
    FiniteGroup q = make_symmetric3();
    Presentation pa = cyclic_presentation(4);
    Presentation pb = cyclic_presentation(6);
    Presentation both;
    both.generator_count = 2;
    both.relators.push_back(std::vector<int>(4, 1));
    both.relators.push_back(std::vector<int>(6, 2));
    CHECK(count_homs(both, q) == count_homs(pa, q) * count_homs(pb, q));
}

TEST_CASE("smith_diagonal basics") {
    CHECK(smith_diagonal({{4}}) == std::vector<long long>{4});
    CHECK(smith_diagonal({{2, 0}, {0, 3}}) == std::vector<long long>{1, 6});
    CHECK(smith_diagonal({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}) == std::vector<long long>{2, 2, 156});
    CHECK(smith_diagonal({}) == std::vector<long long>{});
}

TEST_CASE("smith_diagonal divisibility chain on random matrices") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng() % 4;
        std::size_t cols = 1 + rng() % 4;
        std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
        for (auto& row : m) {
            for (auto& v : row) {
                v = static_cast<long long>(rng() % 21) - 10;
            }
        }
        auto d = smith_diagonal(m);
        for (std::size_t i = 0; i + 1 < d.size(); ++i) {
            if (d[i] != 0) {
                CHECK(d[i + 1] % d[i] == 0);
            } else {
                CHECK(d[i + 1] == 0);
            }
        }
    }
}

TEST_CASE("abelianization of simple presentations") {
    AbelianInvariants c4 = abelianization(cyclic_presentation(4));
    CHECK(c4.torsion == std::vector<long long>{4});
    CHECK(c4.free_rank == 0);

    Presentation free2;
    free2.generator_count = 2;
    AbelianInvariants f2 = abelianization(free2);
    CHECK(f2.torsion.empty());
    CHECK(f2.free_rank == 2);
}

TEST_CASE("abelianization from multiplication tables") {
    CHECK(abelianization(table_presentation(make_cyclic(4))) == AbelianInvariants{{4}, 0});
    CHECK(abelianization(table_presentation(make_cyclic(5))) == AbelianInvariants{{5}, 0});
    CHECK(abelianization(table_presentation(make_klein_four())) == AbelianInvariants{{2, 2}, 0});
    CHECK(abelianization(table_presentation(make_symmetric3())) == AbelianInvariants{{2}, 0});
}

TEST_CASE("groups whose identity is not element 0") {
    // C3 with the identity stored at index 2.
    FiniteGroup g = validate_group({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
    CHECK(g.identity == 2);
    CHECK(g.inv(0) == 1);
    GenSet gens = check_genset(g, {0, 1});
    GenPartition p = partition_generators(g, gens);
    CHECK(p.m1() == 0);
    CHECK(p.m2() == 1);
    CHECK(count_homs(g, gens, make_cyclic(3)) == 3);
}

TEST_CASE("s3 table is the symmetric group") {
    FiniteGroup s3 = make_symmetric3();
    CHECK(s3.order == 6);
    int involutions = 0;
    int order3 = 0;
    for (int g = 0; g < 6; ++g) {
        if (g == s3.identity) {
            continue;
        }
        int o = s3.element_order(g);
        involutions += o == 2;
        order3 += o == 3;
    }
    CHECK(involutions == 3);
    CHECK(order3 == 2);
}

} // TEST_SUITE
