#include "fdx/envy.hpp"

#include "fdx/error.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <limits>
#include <variant>

namespace fdx {

namespace {

void check_bundle(const ItemSet& bundle, std::size_t item_count) {
    for (std::size_t idx = 0; idx < bundle.size(); ++idx) {
        require(bundle[idx] < item_count, Errc::bad_argument, "item index out of range");
        require(idx == 0 || bundle[idx - 1] < bundle[idx], Errc::bad_argument,
                "bundle must be strictly ascending");
    }
}

void check_disjoint(const ItemSet& own, const ItemSet& other) {
    ItemSet common;
    std::ranges::set_intersection(own, other, std::back_inserter(common));
    require(common.empty(), Errc::overlapping_bundles, "bundles overlap");
}

template <typename T>
T bundle_sum(const std::vector<T>& values, const ItemSet& bundle) {
    T total = 0;
    for (std::size_t x : bundle)
        total += values[x];
    return total;
}

// Count-only greedy; exact for any signed value type with exact arithmetic.
template <typename T>
std::size_t greedy_discard_count(const std::vector<T>& values, const ItemSet& own,
                                 const ItemSet& other, std::vector<std::pair<T, std::size_t>>& gains) {
    T margin = bundle_sum(values, other) - bundle_sum(values, own);
    if (margin <= 0)
        return 0;
    gains.clear();
    for (std::size_t x : own)
        if (values[x] < 0)
            gains.emplace_back(-values[x], x);
    for (std::size_t x : other)
        if (values[x] > 0)
            gains.emplace_back(values[x], x);
    std::sort(gains.begin(), gains.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first)
            return a.first > b.first;
        return a.second < b.second;
    });
    T cumulative = 0;
    std::size_t taken = 0;
    for (const auto& [gain, item] : gains) {
        cumulative += gain;
        ++taken;
        if (cumulative >= margin)
            return taken;
    }
    // Unreachable: removing every chore from `own` and every good from
    // `other` always reaches the margin.
    fail(Errc::bad_argument, "greedy discard did not converge");
}

} // namespace

Rational envy_margin(const std::vector<Rational>& item_values, const ItemSet& own,
                     const ItemSet& other) {
    check_bundle(own, item_values.size());
    check_bundle(other, item_values.size());
    check_disjoint(own, other);
    return bundle_sum(item_values, other) - bundle_sum(item_values, own);
}

DiscardResult min_discard_pair(const std::vector<Rational>& item_values, const ItemSet& own,
                               const ItemSet& other) {
    Rational margin = envy_margin(item_values, own, other);
    DiscardResult result;
    if (margin <= 0)
        return result;

    std::vector<std::pair<Rational, std::size_t>> gains;
    for (std::size_t x : own)
        if (item_values[x] < 0)
            gains.emplace_back(-item_values[x], x);
    for (std::size_t x : other)
        if (item_values[x] > 0)
            gains.emplace_back(item_values[x], x);
    std::sort(gains.begin(), gains.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first)
            return a.first > b.first;
        return a.second < b.second;
    });

    Rational cumulative = 0;
    for (const auto& [gain, item] : gains) {
        cumulative += gain;
        result.witness.push_back(item);
        ++result.count;
        if (cumulative >= margin)
            break;
    }
    std::sort(result.witness.begin(), result.witness.end());
    return result;
}

std::size_t brute_min_discard_pair(const std::vector<Rational>& item_values,
                                   const ItemSet& own, const ItemSet& other,
                                   std::size_t max_union_size) {
    check_bundle(own, item_values.size());
    check_bundle(other, item_values.size());
    check_disjoint(own, other);

    ItemSet pool = own;
    pool.insert(pool.end(), other.begin(), other.end());
    std::sort(pool.begin(), pool.end());
    require(pool.size() <= max_union_size && pool.size() < 64, Errc::budget_exceeded,
            "discard enumeration over " + std::to_string(pool.size()) + " items exceeds budget");

    std::vector<bool> in_own(item_values.size(), false);
    for (std::size_t x : own)
        in_own[x] = true;

    std::size_t best = pool.size(); // discarding everything always works
    std::uint64_t masks = std::uint64_t(1) << pool.size();
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        std::size_t size = static_cast<std::size_t>(std::popcount(mask));
        if (size >= best)
            continue;
        Rational own_sum = 0, other_sum = 0;
        for (std::size_t idx = 0; idx < pool.size(); ++idx) {
            if (mask & (std::uint64_t(1) << idx))
                continue;
            std::size_t x = pool[idx];
            (in_own[x] ? own_sum : other_sum) += item_values[x];
        }
        if (own_sum >= other_sum) {
            best = size;
            if (best == 0)
                break;
        }
    }
    return best;
}

EfcCertificate certify_efc(const AsymInstance& instance, const Allocation& allocation) {
    require(allocation.agent_count() == instance.agent_count() &&
                allocation.item_count() == instance.item_count(),
            Errc::dimension_mismatch, "allocation does not match instance dimensions");
    EfcCertificate certificate;
    auto bundles = allocation.bundles();
    for (std::size_t i = 0; i < instance.agent_count(); ++i)
        for (std::size_t j = 0; j < instance.agent_count(); ++j) {
            if (i == j)
                continue;
            DiscardResult result =
                min_discard_pair(instance.pair_values(i, j), bundles[i], bundles[j]);
            certificate.c = std::max(certificate.c, result.count);
            certificate.pairs.push_back(
                {i, j, result.count, std::move(result.witness)});
        }
    return certificate;
}

bool extern_envy(const ExternInstance& instance, const Allocation& allocation,
                 std::size_t envier, std::size_t envied) {
    require(envier != envied, Errc::same_agent, "an agent cannot envy itself");
    Rational now = allocation_value(instance, allocation, envier);
    Rational swapped =
        allocation_value(instance, swap_bundles(allocation, envier, envied), envier);
    return swapped > now;
}

namespace {

// Per-pair values rescaled to integers; int64 when the magnitudes allow it,
// arbitrary precision otherwise. Exact either way.
struct ScaledPair {
    std::size_t envier, envied;
    std::variant<std::vector<std::int64_t>, std::vector<BigInt>> values;
};

constexpr std::int64_t kInt64Cap = std::numeric_limits<std::int64_t>::max() / 4;

std::variant<std::vector<std::int64_t>, std::vector<BigInt>>
scale_values(const std::vector<Rational>& values) {
    BigInt common = 1;
    for (const Rational& v : values)
        common = boost::multiprecision::lcm(common, BigInt(denominator(v)));
    std::vector<BigInt> scaled(values.size());
    BigInt magnitude = 0;
    for (std::size_t x = 0; x < values.size(); ++x) {
        Rational t = values[x] * common;
        scaled[x] = numerator(t);
        magnitude += abs(scaled[x]);
    }
    if (magnitude <= kInt64Cap) {
        std::vector<std::int64_t> small(scaled.size());
        for (std::size_t x = 0; x < scaled.size(); ++x)
            small[x] = scaled[x].convert_to<std::int64_t>();
        return small;
    }
    return scaled;
}

} // namespace

BruteEfcResult brute_min_efc(const AsymInstance& instance, std::uint64_t budget) {
    std::size_t n = instance.agent_count();
    std::size_t m = instance.item_count();

    std::uint64_t total = 1;
    for (std::size_t x = 0; x < m; ++x) {
        require(total <= budget / n, Errc::budget_exceeded,
                "allocation enumeration exceeds budget");
        total *= n;
    }

    std::vector<ScaledPair> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                pairs.push_back({i, j, scale_values(instance.pair_values(i, j))});

    std::vector<std::size_t> assignment(m, 0);
    std::vector<std::size_t> best_assignment = assignment;
    std::size_t best = std::numeric_limits<std::size_t>::max();

    std::vector<ItemSet> bundles(n);
    std::vector<std::pair<std::int64_t, std::size_t>> gains_small;
    std::vector<std::pair<BigInt, std::size_t>> gains_big;

    for (std::uint64_t step = 0; step < total; ++step) {
        for (auto& b : bundles)
            b.clear();
        for (std::size_t x = 0; x < m; ++x)
            bundles[assignment[x]].push_back(x);

        std::size_t worst = 0;
        for (const ScaledPair& pair : pairs) {
            std::size_t count;
            if (const auto* small = std::get_if<std::vector<std::int64_t>>(&pair.values))
                count = greedy_discard_count(*small, bundles[pair.envier],
                                             bundles[pair.envied], gains_small);
            else
                count = greedy_discard_count(std::get<std::vector<BigInt>>(pair.values),
                                             bundles[pair.envier], bundles[pair.envied],
                                             gains_big);
            worst = std::max(worst, count);
            if (worst >= best)
                break;
        }
        if (worst < best) {
            best = worst;
            best_assignment = assignment;
            if (best == 0)
                break;
        }

        // next assignment in base-n counter order
        for (std::size_t x = 0; x < m; ++x) {
            if (++assignment[x] < n)
                break;
            assignment[x] = 0;
        }
    }

    return {best, Allocation::create(std::move(best_assignment), n)};
}

} // namespace fdx
