#include "fdx/reductions.hpp"

#include "fdx/envy.hpp"
#include "fdx/error.hpp"
#include "fdx/generators.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace fdx;

TEST_CASE("to_asym applies the difference formula") {
    // V_1(1,x)=3, V_1(2,x)=1
    ValueTable values{{{Rational(3)}, {Rational(1)}}, {{Rational(0)}, {Rational(0)}}};
    ExternInstance instance = ExternInstance::create(2, {"x"}, values);
    AsymInstance asym = to_asym(instance);
    CHECK(asym.pair_values(0, 1)[0] == 2);
}

TEST_CASE("to_asym without externalities reproduces the own-value column") {
    ValueTable values{{{Rational(4), Rational(2)}, {Rational(0), Rational(0)}},
                      {{Rational(0), Rational(0)}, {Rational(5), Rational(1)}}};
    ExternInstance instance = ExternInstance::create(2, {"x", "y"}, values);
    AsymInstance asym = to_asym(instance);
    CHECK(asym.pair_values(0, 1) == std::vector<Rational>{Rational(4), Rational(2)});
    CHECK(asym.pair_values(1, 0) == std::vector<Rational>{Rational(5), Rational(1)});
}

TEST_CASE("indifference to the holder maps to the all-zero instance") {
    ValueTable values(3, std::vector<std::vector<Rational>>(3, {Rational(2), Rational(-1)}));
    ExternInstance instance = ExternInstance::create(3, {"x", "y"}, values);
    AsymInstance asym = to_asym(instance);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (i != j)
                for (const Rational& v : asym.pair_values(i, j))
                    CHECK(v == 0);
}

TEST_CASE("lift_additive uses the unit own-value") {
    ValueTable values(2, std::vector<std::vector<Rational>>(2));
    values[0][1] = {Rational(2)};
    values[1][0] = {Rational(0)};
    AsymInstance asym = AsymInstance::create(2, {"x"}, values);
    ExternInstance lifted = lift_additive(asym);
    CHECK(lifted.value(0, 0, 0) == 1);
    CHECK(lifted.value(0, 1, 0) == -1);
    CHECK(lifted.value(1, 0, 0) == 1);
}

TEST_CASE("lift_additive of the all-zero instance is all ones") {
    ValueTable values(2, std::vector<std::vector<Rational>>(2));
    values[0][1] = {Rational(0), Rational(0)};
    values[1][0] = {Rational(0), Rational(0)};
    AsymInstance asym = AsymInstance::create(2, {"x", "y"}, values);
    ExternInstance lifted = lift_additive(asym);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t x = 0; x < 2; ++x)
                CHECK(lifted.value(i, j, x) == 1);
}

TEST_CASE("round trip to_asym after lift_additive is the identity") {
    AsymInstance asym = random_asym_instance(3, 4, -3, 3, false, false, 99);
    AsymInstance round = to_asym(lift_additive(asym));
    CHECK(round.values() == asym.values());
}

TEST_CASE("lift_binary produces a binary no-chores instance") {
    ValueTable values(2, std::vector<std::vector<Rational>>(2));
    values[0][1] = {Rational(1), Rational(0)};
    values[1][0] = {Rational(0), Rational(1)};
    AsymInstance asym = AsymInstance::create(2, {"x", "y"}, values);
    ExternInstance lifted = lift_binary(asym);
    CHECK(lifted.is_binary());
    CHECK(lifted.has_no_chores());
    CHECK(lifted.value(0, 0, 0) == 1);
    CHECK(lifted.value(0, 1, 0) == 0); // v=1
    CHECK(lifted.value(0, 1, 1) == 1); // v=0
    CHECK(to_asym(lifted).values() == asym.values());
}

TEST_CASE("lift_binary rejects fractional values") {
    ValueTable values(2, std::vector<std::vector<Rational>>(2));
    values[0][1] = {Rational(1, 2)};
    values[1][0] = {Rational(0)};
    AsymInstance asym = AsymInstance::create(2, {"x"}, values);
    CHECK_THROWS_AS(lift_binary(asym), Error);
    try {
        lift_binary(asym);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_binary);
    }
}

TEST_CASE("round trips hold for random binary instances") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        AsymInstance asym = random_asym_instance(3, 4, 0, 1, true, false, seed);
        CHECK(to_asym(lift_binary(asym)).values() == asym.values());
        CHECK(to_asym(lift_additive(asym)).values() == asym.values());
    }
}

TEST_CASE("no-chores is preserved by the reduction") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        ExternInstance instance = random_extern_instance(3, 4, -4, 4, false, true, seed);
        REQUIRE(instance.has_no_chores());
        CHECK(to_asym(instance).has_no_chores());
    }
}

TEST_CASE("per-pair minimal discards agree across the two models") {
    // Small version of the full equivalence sweep; the acceptance suite runs
    // the larger one.
    Prng rng(4242);
    for (int round = 0; round < 6; ++round) {
        std::size_t n = 2 + rng.below(2);
        std::size_t m = 1 + rng.below(4);
        ExternInstance instance = random_extern_instance(
            n, m, -3, 3, false, false, rng.next());
        AsymInstance asym = to_asym(instance);

        std::vector<std::size_t> assignment(m, 0);
        std::uint64_t total = 1;
        for (std::size_t x = 0; x < m; ++x)
            total *= n;
        for (std::uint64_t step = 0; step < total; ++step) {
            Allocation allocation = Allocation::create(assignment, n);
            EfcCertificate certificate = certify_efc(asym, allocation);
            for (const PairRecord& record : certificate.pairs) {
                std::size_t direct = test::extern_brute_min_discard(
                    instance, allocation, record.envier, record.envied);
                CHECK(record.count == direct);
            }
            for (std::size_t x = 0; x < m; ++x) {
                if (++assignment[x] < n)
                    break;
                assignment[x] = 0;
            }
        }
    }
}
