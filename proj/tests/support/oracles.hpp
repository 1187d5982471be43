#pragma once

// Test-side oracles and data helpers. The envy oracles here deliberately work
// from raw instance tables (no envy_margin / certificates / reductions), so
// they remain independent of the code paths they are used to check.

#include "fdx/model.hpp"
#include "fdx/prng.hpp"

#include <bit>
#include <cstdint>
#include <limits>

namespace fdx::test {

constexpr std::size_t kDiscarded = std::numeric_limits<std::size_t>::max();

/// V_i over a partial assignment (kDiscarded marks removed items), evaluated
/// straight off the value table.
inline Rational partial_value(const ExternInstance& instance,
                              const std::vector<std::size_t>& owner, std::size_t agent) {
    Rational total = 0;
    for (std::size_t x = 0; x < owner.size(); ++x)
        if (owner[x] != kDiscarded)
            total += instance.value(agent, owner[x], x);
    return total;
}

/// Swap-based minimal discard count for one ordered pair in the
/// externalities model: smallest S inside the two bundles whose removal makes
/// the envier weakly prefer not to swap.
inline std::size_t extern_brute_min_discard(const ExternInstance& instance,
                                            const Allocation& allocation, std::size_t envier,
                                            std::size_t envied) {
    ItemSet pool = allocation.bundle(envier);
    ItemSet other = allocation.bundle(envied);
    pool.insert(pool.end(), other.begin(), other.end());

    std::vector<std::size_t> owner = allocation.assignment();
    std::vector<std::size_t> swapped = owner;
    for (std::size_t x = 0; x < swapped.size(); ++x) {
        if (swapped[x] == envier)
            swapped[x] = envied;
        else if (swapped[x] == envied)
            swapped[x] = envier;
    }

    std::uint64_t masks = std::uint64_t(1) << pool.size();
    for (std::size_t size = 0; size <= pool.size(); ++size) {
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
            if (static_cast<std::size_t>(std::popcount(mask)) != size)
                continue;
            std::vector<std::size_t> kept = owner;
            std::vector<std::size_t> kept_swapped = swapped;
            for (std::size_t idx = 0; idx < pool.size(); ++idx)
                if (mask & (std::uint64_t(1) << idx)) {
                    kept[pool[idx]] = kDiscarded;
                    kept_swapped[pool[idx]] = kDiscarded;
                }
            if (partial_value(instance, kept, envier) >=
                partial_value(instance, kept_swapped, envier))
                return size;
        }
    }
    return pool.size();
}

/// Mixed-sign rational with numerator in [-max_num, max_num] and denominator
/// in [1, max_den].
inline Rational random_rational(Prng& rng, long max_num, long max_den) {
    long num = static_cast<long>(rng.below(2 * max_num + 1)) - max_num;
    long den = 1 + static_cast<long>(rng.below(max_den));
    return Rational(num, den);
}

inline std::vector<Rational> random_values(Prng& rng, std::size_t m, long max_num,
                                           long max_den) {
    std::vector<Rational> values(m);
    for (auto& v : values)
        v = random_rational(rng, max_num, max_den);
    return values;
}

/// Two disjoint bundles over [0, m): each item lands in the first, the
/// second, or neither.
inline std::pair<ItemSet, ItemSet> random_disjoint_bundles(Prng& rng, std::size_t m) {
    ItemSet first, second;
    for (std::size_t x = 0; x < m; ++x) {
        switch (rng.below(3)) {
        case 0: first.push_back(x); break;
        case 1: second.push_back(x); break;
        default: break;
        }
    }
    return {first, second};
}

} // namespace fdx::test
