#pragma once

#include "fdx/model.hpp"

#include <array>

namespace fdx {

/// Splits a mixed-sign valuation into "large" and "small" items and derives
/// four [0,1]-valued surrogate vectors from it:
///   aux[0] — indicator of large goods
///   aux[1] — indicator of large chores
///   aux[2] — small goods scaled by the large-item cutoff
///   aux[3] — small chores scaled by the large-item cutoff
/// Whenever two disjoint bundles are balanced within `threshold` under all
/// four surrogates (see assumption_check), envy between the bundles under the
/// source valuation can be removed by discarding at most 14*threshold items.
struct AuxBundle {
    std::vector<Rational> source;
    std::size_t k = 1;
    std::size_t threshold = 1; // T
    std::size_t large_count = 0; // L = min(m, 6*T*k)
    ItemSet large_items;  // the L items of largest |v|, ties by index
    ItemSet large_goods;  // large items with v > 0
    ItemSet large_chores; // large items with v < 0
    ItemSet small_items;
    ItemSet small_goods;
    ItemSet small_chores;
    Rational cutoff; // p = min |v| over the large items; 0 when none
    std::array<std::vector<Rational>, 4> aux;
};

AuxBundle build_aux(std::vector<Rational> values, std::size_t k, std::size_t threshold);

/// True iff |aux_t(M)/k - aux_t(X)| <= threshold for all four surrogates,
/// checked in exact arithmetic.
bool assumption_check(const AuxBundle& bundle, const ItemSet& subset);

struct WitnessDiscards {
    ItemSet from_envied; // P: large goods sitting in the envied bundle
    ItemSet from_envier; // Q: large chores sitting in the envier's bundle
};

/// The canonical discard pair (P, Q) eliminating the envier's envy:
/// v(envier \ Q) >= v(envied \ P) and |P| + |Q| <= 14*threshold, provided
/// both bundles pass assumption_check (re-verified here; throws
/// Errc::assumption_violated otherwise).
WitnessDiscards witness_discards(const AuxBundle& bundle, const ItemSet& envier_bundle,
                                 const ItemSet& envied_bundle);

} // namespace fdx
