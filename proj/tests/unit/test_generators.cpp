#include "fdx/generators.hpp"

#include "fdx/discrepancy.hpp"
#include "fdx/envy.hpp"
#include "fdx/error.hpp"
#include "fdx/reductions.hpp"

#include <doctest.h>

using namespace fdx;

TEST_CASE("sylvester_hadamard base cases and orthogonality") {
    CHECK(sylvester_hadamard(1) == std::vector<std::vector<int>>{{1}});
    CHECK(sylvester_hadamard(2) == std::vector<std::vector<int>>{{1, 1}, {1, -1}});

    auto h = sylvester_hadamard(4);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
            int dot = 0;
            for (std::size_t c = 0; c < 4; ++c)
                dot += h[a][c] * h[b][c];
            CHECK(dot == (a == b ? 4 : 0));
        }

    for (std::size_t bad : {std::size_t(0), std::size_t(3), std::size_t(6)})
        CHECK_THROWS_AS(sylvester_hadamard(bad), Error);
}

TEST_CASE("mm_sets worked examples") {
    HyperedgeSets two = mm_sets(2, 1);
    CHECK(two.m == 2);
    CHECK(two.sets[0] == ItemSet{0, 1});
    CHECK(two.sets[1] == ItemSet{0});

    HyperedgeSets one = mm_sets(1, 3);
    CHECK(one.m == 3);
    CHECK(one.sets[0] == ItemSet{0, 1, 2});

    HyperedgeSets four = mm_sets(4, 2);
    CHECK(four.m == 8);
    CHECK(four.sets[0].size() == 8);

    CHECK_THROWS_AS(mm_sets(3, 1), Error);
    CHECK_THROWS_AS(mm_sets(2, 0), Error);
}

TEST_CASE("lb_asym_instance piecewise structure for q=1 with a full set") {
    HyperedgeSets sets{1, 2, {{0, 1}}}; // S_1 = all items
    AsymInstance instance = lb_asym_instance(sets);
    REQUIRE(instance.agent_count() == 3);
    CHECK(instance.is_binary());
    // paper agents 1,2,3 are indices 0,1,2
    CHECK(instance.pair_values(1, 0) == std::vector<Rational>{1, 1}); // counts S_1
    CHECK(instance.pair_values(1, 2) == std::vector<Rational>{0, 0}); // counts complement
    CHECK(instance.pair_values(2, 0) == std::vector<Rational>{0, 0});
    CHECK(instance.pair_values(2, 1) == std::vector<Rational>{1, 1});
    CHECK(instance.pair_values(0, 1) == std::vector<Rational>{1, 1});
    CHECK(instance.pair_values(0, 2) == std::vector<Rational>{1, 1});
}

TEST_CASE("lb_asym_instance is always binary with odd agent count") {
    for (std::size_t q : {std::size_t(1), std::size_t(2), std::size_t(4)}) {
        AsymInstance instance = lb_asym_instance(mm_sets(q, 2));
        CHECK(instance.agent_count() == 2 * q + 1);
        CHECK(instance.agent_count() % 2 == 1);
        CHECK(instance.is_binary());
    }
}

TEST_CASE("star_extern_instance matches the piecewise tables") {
    HyperedgeSets sets = mm_sets(2, 1); // S_1 = {0,1}, S_2 = {0}
    ExternInstance instance = star_extern_instance(sets);
    REQUIRE(instance.agent_count() == 5);

    // agent "2" (index 1), items in S_1: value -1 toward agent 1, 0 elsewhere
    CHECK(instance.value(1, 0, 0) == -1);
    CHECK(instance.value(1, 1, 0) == 0);
    CHECK(instance.value(1, 2, 0) == 0);
    // agent "2", items outside S_1 (none here for S_1 = all)
    // agent "4" (index 3) handles S_2 = {0}: item 1 lies outside S_2
    CHECK(instance.value(3, 0, 1) == 1);
    CHECK(instance.value(3, 3, 1) == 1);
    CHECK(instance.value(3, 1, 1) == 0);
    // agent 1 (index 0) values only its own holdings
    CHECK(instance.value(0, 0, 0) == 1);
    CHECK(instance.value(0, 1, 0) == 0);
}

TEST_CASE("star instance reduces to the asymmetric hard instance") {
    for (std::size_t q : {std::size_t(1), std::size_t(2)}) {
        HyperedgeSets sets = mm_sets(q, 1);
        CHECK(to_asym(star_extern_instance(sets)).values() ==
              lb_asym_instance(sets).values());
    }
}

TEST_CASE("star instance has externalities toward agent 1 only") {
    ExternInstance instance = star_extern_instance(mm_sets(2, 2));
    for (std::size_t i = 1; i < instance.agent_count(); ++i)
        for (std::size_t j = 1; j < instance.agent_count(); ++j) {
            if (j == i)
                continue;
            for (std::size_t x = 0; x < instance.item_count(); ++x)
                CHECK(instance.value(i, j, x) == 0);
        }
    CHECK(instance.has_no_chores());
    CHECK_FALSE(instance.is_binary());
}

TEST_CASE("random instances are deterministic and honor their flags") {
    ExternInstance a = random_extern_instance(3, 4, -5, 5, true, true, 42);
    ExternInstance b = random_extern_instance(3, 4, -5, 5, true, true, 42);
    CHECK(a.values() == b.values());
    CHECK(a.is_binary());
    CHECK(a.has_no_chores());

    AsymInstance c = random_asym_instance(3, 4, -5, 5, false, true, 42);
    CHECK(c.has_no_chores());

    ExternInstance empty = random_extern_instance(2, 0, -5, 5, false, false, 0);
    CHECK(empty.item_count() == 0);

    AsymInstance d = random_asym_instance(3, 4, -5, 5, false, false, 43);
    AsymInstance e = random_asym_instance(3, 4, -5, 5, false, false, 44);
    CHECK(d.values() != e.values());
}

TEST_CASE("weighted discrepancy chains to the brute-force optimum at toy scale") {
    // q=1, r=2: three agents, two items, S_1 = everything
    HyperedgeSets sets = mm_sets(1, 2);
    AsymInstance instance = lb_asym_instance(sets);
    BruteEfcResult best = brute_min_efc(instance);
    REQUIRE(best.c >= 1);

    std::vector<std::vector<Rational>> indicators;
    for (const ItemSet& set : sets.sets) {
        std::vector<Rational> vec(sets.m, Rational(0));
        for (std::size_t x : set)
            vec[x] = 1;
        indicators.push_back(std::move(vec));
    }
    Rational w = wdisc_brute(indicators, Rational(1, 2 * sets.q + 1)).value;
    CHECK(w <= Rational(6) * Rational(best.c));
}

TEST_CASE("hard instances keep their weighted discrepancy above the floor") {
    for (std::size_t q : {std::size_t(2), std::size_t(4)}) {
        for (std::size_t r = 1; q * r <= 12; ++r) {
            // when n | r both proportional targets are integers, an exact
            // split exists, and the floor genuinely fails (w = 0)
            if (r % (2 * q + 1) == 0)
                continue;
            HyperedgeSets sets = mm_sets(q, r);
            std::vector<std::vector<Rational>> indicators;
            for (const ItemSet& set : sets.sets) {
                std::vector<Rational> vec(sets.m, Rational(0));
                for (std::size_t x : set)
                    vec[x] = 1;
                indicators.push_back(std::move(vec));
            }
            Rational w = wdisc_brute(indicators, Rational(1, 2 * q + 1)).value;
            // compare squares: w >= sqrt(q-1)/16
            CHECK(w * w >= Rational(q - 1, 256));
        }
    }
}
