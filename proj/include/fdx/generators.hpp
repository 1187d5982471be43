#pragma once

#include "fdx/model.hpp"

#include <cstdint>

namespace fdx {

/// q hyperedges over m items; complements are derived on the fly.
struct HyperedgeSets {
    std::size_t q = 0;
    std::size_t m = 0;
    std::vector<ItemSet> sets;
};

/// Sylvester Hadamard matrix of the given power-of-two order: +-1 entries,
/// pairwise orthogonal rows.
std::vector<std::vector<int>> sylvester_hadamard(std::size_t order);

/// r horizontally-stacked copies of (1 + H)/2 read as set membership:
/// item (copy, col) belongs to set i iff ((1 + H)/2)[i][col] == 1. m = q * r.
HyperedgeSets mm_sets(std::size_t q, std::size_t r);

/// Hard asymmetric instance over n = 2q+1 agents: agent 1 counts all items;
/// agents 2i and 2i+1 count set i resp. its complement toward agent 1 and the
/// opposite toward everyone else. Binary by construction.
AsymInstance lb_asym_instance(const HyperedgeSets& sets);

/// Externalities twin of lb_asym_instance in which every agent's
/// externalities point at agent 1 only; to_asym of the result reproduces
/// lb_asym_instance exactly.
ExternInstance star_extern_instance(const HyperedgeSets& sets);

/// Seed-deterministic random instances; flags are enforced by construction.
ExternInstance random_extern_instance(std::size_t n, std::size_t m, long lo, long hi,
                                      bool binary, bool no_chores, std::uint64_t seed);
AsymInstance random_asym_instance(std::size_t n, std::size_t m, long lo, long hi,
                                  bool binary, bool no_chores, std::uint64_t seed);

} // namespace fdx
