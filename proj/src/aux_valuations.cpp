#include "fdx/aux_valuations.hpp"

#include "fdx/error.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>

namespace fdx {

AuxBundle build_aux(std::vector<Rational> values, std::size_t k, std::size_t threshold) {
    require(k >= 1, Errc::bad_argument, "color count must be at least 1");
    require(threshold >= 1, Errc::bad_argument, "threshold must be at least 1");

    AuxBundle bundle;
    bundle.k = k;
    bundle.threshold = threshold;

    std::size_t m = values.size();
    std::size_t limit = 6 * threshold * k;
    bundle.large_count = std::min(m, limit);

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        Rational abs_a = abs(values[a]);
        Rational abs_b = abs(values[b]);
        if (abs_a != abs_b)
            return abs_a > abs_b;
        return a < b;
    });

    bundle.large_items.assign(order.begin(), order.begin() + bundle.large_count);
    std::sort(bundle.large_items.begin(), bundle.large_items.end());
    std::vector<bool> is_large(m, false);
    for (std::size_t x : bundle.large_items)
        is_large[x] = true;

    bundle.cutoff = 0;
    bool first = true;
    for (std::size_t x : bundle.large_items) {
        Rational magnitude = abs(values[x]);
        if (first || magnitude < bundle.cutoff) {
            bundle.cutoff = magnitude;
            first = false;
        }
    }

    for (auto& v : bundle.aux)
        v.assign(m, Rational(0));

    for (std::size_t x = 0; x < m; ++x) {
        if (is_large[x]) {
            if (values[x] > 0) {
                bundle.large_goods.push_back(x);
                bundle.aux[0][x] = 1;
            } else if (values[x] < 0) {
                bundle.large_chores.push_back(x);
                bundle.aux[1][x] = 1;
            }
        } else {
            bundle.small_items.push_back(x);
            if (values[x] > 0) {
                bundle.small_goods.push_back(x);
                if (bundle.cutoff > 0)
                    bundle.aux[2][x] = values[x] / bundle.cutoff;
            } else if (values[x] < 0) {
                bundle.small_chores.push_back(x);
                if (bundle.cutoff > 0)
                    bundle.aux[3][x] = -values[x] / bundle.cutoff;
            }
        }
    }

    bundle.source = std::move(values);
    return bundle;
}

bool assumption_check(const AuxBundle& bundle, const ItemSet& subset) {
    Rational threshold(bundle.threshold);
    for (const auto& v : bundle.aux) {
        Rational total = 0;
        for (const Rational& value : v)
            total += value;
        Rational subset_sum = 0;
        for (std::size_t x : subset)
            subset_sum += v[x];
        if (abs(total / Rational(bundle.k) - subset_sum) > threshold)
            return false;
    }
    return true;
}

WitnessDiscards witness_discards(const AuxBundle& bundle, const ItemSet& envier_bundle,
                                 const ItemSet& envied_bundle) {
    ItemSet common;
    std::ranges::set_intersection(envier_bundle, envied_bundle, std::back_inserter(common));
    require(common.empty(), Errc::overlapping_bundles, "bundles overlap");
    require(assumption_check(bundle, envier_bundle) && assumption_check(bundle, envied_bundle),
            Errc::assumption_violated,
            "bundle pair is not balanced under the auxiliary valuations");

    WitnessDiscards discards;
    std::ranges::set_intersection(envied_bundle, bundle.large_goods,
                                  std::back_inserter(discards.from_envied));
    std::ranges::set_intersection(envier_bundle, bundle.large_chores,
                                  std::back_inserter(discards.from_envier));
    return discards;
}

} // namespace fdx
