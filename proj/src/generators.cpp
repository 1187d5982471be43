#include "fdx/generators.hpp"

#include "fdx/error.hpp"
#include "fdx/prng.hpp"

#include <algorithm>
#include <string>

namespace fdx {

namespace {

bool power_of_two(std::size_t v) {
    return v != 0 && (v & (v - 1)) == 0;
}

std::vector<std::string> default_item_names(std::size_t m) {
    std::vector<std::string> names(m);
    for (std::size_t x = 0; x < m; ++x)
        names[x] = "x" + std::to_string(x);
    return names;
}

} // namespace

std::vector<std::vector<int>> sylvester_hadamard(std::size_t order) {
    require(power_of_two(order), Errc::not_power_of_two,
            "Hadamard order must be a power of two, got " + std::to_string(order));
    std::vector<std::vector<int>> h(order, std::vector<int>(order, 1));
    for (std::size_t block = 1; block < order; block *= 2)
        for (std::size_t row = 0; row < block; ++row)
            for (std::size_t col = 0; col < block; ++col) {
                int v = h[row][col];
                h[row][col + block] = v;
                h[row + block][col] = v;
                h[row + block][col + block] = -v;
            }
    return h;
}

HyperedgeSets mm_sets(std::size_t q, std::size_t r) {
    require(r >= 1, Errc::bad_argument, "need at least one stacked copy");
    auto h = sylvester_hadamard(q);

    HyperedgeSets result;
    result.q = q;
    result.m = q * r;
    result.sets.resize(q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t copy = 0; copy < r; ++copy)
            for (std::size_t col = 0; col < q; ++col)
                if (h[i][col] == 1)
                    result.sets[i].push_back(copy * q + col);
    for (auto& set : result.sets)
        std::sort(set.begin(), set.end());
    return result;
}

namespace {

std::vector<Rational> indicator(const ItemSet& set, std::size_t m) {
    std::vector<Rational> vec(m, Rational(0));
    for (std::size_t x : set)
        vec[x] = 1;
    return vec;
}

std::vector<Rational> complement_indicator(const ItemSet& set, std::size_t m) {
    std::vector<Rational> vec(m, Rational(1));
    for (std::size_t x : set)
        vec[x] = 0;
    return vec;
}

} // namespace

AsymInstance lb_asym_instance(const HyperedgeSets& sets) {
    require(sets.q >= 1 && sets.sets.size() == sets.q, Errc::bad_argument,
            "hyperedge sets are malformed");
    std::size_t n = 2 * sets.q + 1;
    std::size_t m = sets.m;

    ValueTable values(n, std::vector<std::vector<Rational>>(n));
    // Agent 0 ("agent 1") counts every item against every other agent.
    for (std::size_t j = 1; j < n; ++j)
        values[0][j].assign(m, Rational(1));
    for (std::size_t i = 1; i <= sets.q; ++i) {
        const ItemSet& set = sets.sets[i - 1];
        std::size_t even = 2 * i - 1; // "agent 2i"
        std::size_t odd = 2 * i;      // "agent 2i+1"
        for (std::size_t j = 0; j < n; ++j) {
            if (j != even)
                values[even][j] = (j == 0) ? indicator(set, m) : complement_indicator(set, m);
            if (j != odd)
                values[odd][j] = (j == 0) ? complement_indicator(set, m) : indicator(set, m);
        }
    }
    return AsymInstance::create(n, default_item_names(m), std::move(values));
}

ExternInstance star_extern_instance(const HyperedgeSets& sets) {
    require(sets.q >= 1 && sets.sets.size() == sets.q, Errc::bad_argument,
            "hyperedge sets are malformed");
    std::size_t n = 2 * sets.q + 1;
    std::size_t m = sets.m;

    ValueTable values(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(m, Rational(0))));
    values[0][0].assign(m, Rational(1));

    for (std::size_t i = 1; i <= sets.q; ++i) {
        std::vector<bool> in_set(m, false);
        for (std::size_t x : sets.sets[i - 1])
            in_set[x] = true;
        std::size_t even = 2 * i - 1; // "agent 2i"
        std::size_t odd = 2 * i;      // "agent 2i+1"
        for (std::size_t x = 0; x < m; ++x) {
            if (in_set[x]) {
                values[even][0][x] = -1;
                values[odd][0][x] = 1;
                values[odd][odd][x] = 1;
            } else {
                values[even][0][x] = 1;
                values[even][even][x] = 1;
                values[odd][0][x] = -1;
            }
        }
    }
    return ExternInstance::create(n, default_item_names(m), std::move(values));
}

namespace {

Rational random_value(Prng& rng, long lo, long hi, bool binary, long at_most_has_value,
                      bool bounded_above) {
    if (binary) {
        long cap = bounded_above ? at_most_has_value : 1;
        return Rational(static_cast<long>(rng.below(static_cast<std::uint64_t>(cap) + 1)));
    }
    long upper = bounded_above ? at_most_has_value : hi;
    std::uint64_t span = static_cast<std::uint64_t>(upper - lo) + 1;
    return Rational(lo + static_cast<long>(rng.below(span)));
}

} // namespace

ExternInstance random_extern_instance(std::size_t n, std::size_t m, long lo, long hi,
                                      bool binary, bool no_chores, std::uint64_t seed) {
    require(n >= 1, Errc::bad_argument, "need at least one agent");
    require(binary || lo <= hi, Errc::bad_argument, "empty value range");
    Prng rng(splitmix64(seed));

    ValueTable values(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(m)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t x = 0; x < m; ++x) {
            Rational own = random_value(rng, lo, hi, binary, 0, false);
            values[i][i][x] = own;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i)
                    continue;
                if (no_chores)
                    values[i][j][x] = random_value(rng, lo, hi, binary,
                                                   own.convert_to<long>(), true);
                else
                    values[i][j][x] = random_value(rng, lo, hi, binary, 0, false);
            }
        }
    return ExternInstance::create(n, default_item_names(m), std::move(values));
}

AsymInstance random_asym_instance(std::size_t n, std::size_t m, long lo, long hi,
                                  bool binary, bool no_chores, std::uint64_t seed) {
    require(n >= 1, Errc::bad_argument, "need at least one agent");
    long floor = no_chores ? std::max(lo, 0L) : lo;
    require(binary || floor <= hi, Errc::bad_argument, "empty value range");
    Prng rng(splitmix64(seed));

    ValueTable values(n, std::vector<std::vector<Rational>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            values[i][j].resize(m);
            for (std::size_t x = 0; x < m; ++x)
                values[i][j][x] = random_value(rng, floor, hi, binary, 0, false);
        }
    return AsymInstance::create(n, default_item_names(m), std::move(values));
}

} // namespace fdx
