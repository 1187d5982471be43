#pragma once

#include "fdx/aux_valuations.hpp"
#include "fdx/discrepancy.hpp"
#include "fdx/envy.hpp"
#include "fdx/model.hpp"

namespace fdx {

/// Balancing instance for one threshold of the pairwise pipeline: n colors,
/// color a holding the four surrogates of every valuation pointing out of or
/// into agent a (8(n-1) vectors per color). pair_bundles is indexed
/// envier * n + envied.
struct PairwiseAssembly {
    DiscrepancyInstance instance;
    std::vector<AuxBundle> pair_bundles;
};

PairwiseAssembly assemble_pairwise_instance(const AsymInstance& instance,
                                            std::size_t threshold);

/// Symmetric balancing instance: every color holds the identical collection
/// of all 4n surrogates.
struct ConsensusAssembly {
    DiscrepancyInstance instance;
    std::vector<AuxBundle> bundles;
};

ConsensusAssembly assemble_consensus_instance(const std::vector<std::vector<Rational>>& valuations,
                                              std::size_t color_count, std::size_t threshold);

struct AllocateResult {
    Allocation allocation;
    std::size_t T_final = 1;
    std::size_t certified_bound = 14; // 14 * T_final
    Rational achieved;                // exact discrepancy of the final coloring
    EfcCertificate certificate;       // measured minimal discards; c <= certified_bound
};

/// Doubling driver: raises the threshold T until the solver balances all
/// pairwise surrogates within T, then reads the allocation off the coloring.
/// Terminates unconditionally (any coloring works once T >= m) and the
/// returned certificate always satisfies certificate.c <= 14 * T_final.
AllocateResult allocate_nonconsensus(const AsymInstance& instance, const SolverConfig& config);

/// allocate_nonconsensus on the induced asymmetric instance; the certificate
/// is valid in both models.
AllocateResult allocate_extern(const ExternInstance& instance, const SolverConfig& config);

struct ConsensusResult {
    std::vector<ItemSet> bundles;
    std::size_t T_final = 1;
    std::size_t certified_bound = 14;
    Rational achieved;
};

/// Partition into color_count bundles balanced for every input valuation:
/// between any two bundles, envy under any v_i can be removed by discarding
/// at most 14 * T_final items. The guarantee survives permuting the bundles.
ConsensusResult consensus_partition(const std::vector<std::vector<Rational>>& valuations,
                                    std::size_t color_count, const SolverConfig& config);

struct TruthfulResult {
    Allocation allocation;
    std::vector<std::size_t> bundle_to_agent; // the sampled bijection
    std::size_t T_final = 1;
    std::size_t certified_bound = 14;
    Rational achieved;
    EfcCertificate certificate; // in the induced asymmetric instance
};

/// Consensus partition over all n(n-1) induced pairwise valuations with n
/// colors, followed by a uniformly random bundle-to-agent bijection drawn
/// from `assignment_seed`. Ex-ante each agent receives expected_utilities.
TruthfulResult truthful_allocate(const ExternInstance& instance, const SolverConfig& config,
                                 std::uint64_t assignment_seed);

/// Per agent: (1/n) * sum over j, x of V_i(j,x) — the expected value under a
/// uniformly random bundle assignment of any complete partition.
std::vector<Rational> expected_utilities(const ExternInstance& instance);

} // namespace fdx
