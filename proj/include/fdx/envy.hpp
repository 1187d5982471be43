#pragma once

#include "fdx/model.hpp"

#include <cstdint>
#include <vector>

namespace fdx {

struct DiscardResult {
    std::size_t count = 0;
    ItemSet witness; // ascending item indices, |witness| == count
};

struct PairRecord {
    std::size_t envier = 0;
    std::size_t envied = 0;
    std::size_t count = 0;
    ItemSet witness;
};

/// Exact EF-c certificate for one allocation: per ordered pair, the minimal
/// discard count together with a witness set that can be replayed
/// independently; c is the maximum over pairs.
struct EfcCertificate {
    std::size_t c = 0;
    std::vector<PairRecord> pairs;
};

/// v(other) - v(own); positive iff the owner of `own` envies `other`.
/// Bundles must be ascending, duplicate-free and disjoint.
Rational envy_margin(const std::vector<Rational>& item_values, const ItemSet& own,
                     const ItemSet& other);

/// Minimal |S|, S subset of own-union-other, with v(own\S) >= v(other\S).
/// Greedy over discard gains (chores in `own`, goods in `other`), largest
/// gain first, ties by ascending item index. The greedy is exact for this
/// objective; brute_min_discard_pair is the independent check.
DiscardResult min_discard_pair(const std::vector<Rational>& item_values, const ItemSet& own,
                               const ItemSet& other);

/// Exhaustive minimum over all discard subsets of own-union-other.
/// Enumeration oracle; throws Errc::budget_exceeded past max_union_size.
std::size_t brute_min_discard_pair(const std::vector<Rational>& item_values,
                                   const ItemSet& own, const ItemSet& other,
                                   std::size_t max_union_size = 20);

/// Runs min_discard_pair for every ordered pair of distinct agents.
EfcCertificate certify_efc(const AsymInstance& instance, const Allocation& allocation);

/// True iff agent `envier` strictly prefers the allocation with its bundle
/// swapped against `envied`'s.
bool extern_envy(const ExternInstance& instance, const Allocation& allocation,
                 std::size_t envier, std::size_t envied);

struct BruteEfcResult {
    std::size_t c = 0;
    Allocation best;
};

constexpr std::uint64_t kDefaultAllocationBudget = 10'000'000;

/// Minimum over all n^m complete allocations of certify_efc(..).c, with one
/// argmin allocation. Throws Errc::budget_exceeded when n^m exceeds budget.
BruteEfcResult brute_min_efc(const AsymInstance& instance,
                             std::uint64_t budget = kDefaultAllocationBudget);

} // namespace fdx
