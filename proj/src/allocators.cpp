#include "fdx/allocators.hpp"

#include "fdx/error.hpp"
#include "fdx/prng.hpp"
#include "fdx/reductions.hpp"

#include <algorithm>
#include <numeric>

namespace fdx {

PairwiseAssembly assemble_pairwise_instance(const AsymInstance& instance,
                                            std::size_t threshold) {
    std::size_t n = instance.agent_count();
    std::size_t m = instance.item_count();

    PairwiseAssembly assembly;
    assembly.pair_bundles.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                assembly.pair_bundles[i * n + j] =
                    build_aux(instance.pair_values(i, j), n, threshold);

    std::vector<std::vector<std::vector<Rational>>> colors(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j == a)
                continue;
            for (const auto& vec : assembly.pair_bundles[a * n + j].aux)
                colors[a].push_back(vec);
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (j == a)
                continue;
            for (const auto& vec : assembly.pair_bundles[j * n + a].aux)
                colors[a].push_back(vec);
        }
    }
    assembly.instance = DiscrepancyInstance::create(m, std::move(colors));
    return assembly;
}

ConsensusAssembly assemble_consensus_instance(const std::vector<std::vector<Rational>>& valuations,
                                              std::size_t color_count, std::size_t threshold) {
    require(color_count >= 1, Errc::bad_argument, "need at least one color");
    std::size_t m = valuations.empty() ? 0 : valuations.front().size();
    for (const auto& vec : valuations)
        require(vec.size() == m, Errc::dimension_mismatch,
                "valuation vectors must all have the same length");

    ConsensusAssembly assembly;
    assembly.bundles.reserve(valuations.size());
    for (const auto& vec : valuations)
        assembly.bundles.push_back(build_aux(vec, color_count, threshold));

    std::vector<std::vector<Rational>> shared;
    for (const auto& bundle : assembly.bundles)
        for (const auto& vec : bundle.aux)
            shared.push_back(vec);
    std::vector<std::vector<std::vector<Rational>>> colors(color_count, shared);
    assembly.instance = DiscrepancyInstance::create(m, std::move(colors));
    return assembly;
}

namespace {

// Any coloring deviates by at most v(M) <= m on [0,1] vectors, so the
// doubling loop is guaranteed to stop by T >= m.
template <typename Assemble>
std::pair<std::size_t, SolveResult> doubling_solve(std::size_t item_count,
                                                   const SolverConfig& config,
                                                   Assemble&& assemble) {
    for (std::size_t threshold = 1;; threshold *= 2) {
        DiscrepancyInstance instance = assemble(threshold);
        SolverConfig round = config;
        round.seed = mix_seed(config.seed, threshold);
        SolveResult result = solve(instance, round);
        if (result.achieved <= Rational(threshold))
            return {threshold, std::move(result)};
        require(threshold <= 2 * item_count + 2, Errc::bad_argument,
                "doubling driver failed to terminate");
    }
}

} // namespace

AllocateResult allocate_nonconsensus(const AsymInstance& instance, const SolverConfig& config) {
    std::size_t n = instance.agent_count();
    std::size_t m = instance.item_count();

    auto [threshold, solved] = doubling_solve(m, config, [&](std::size_t t) {
        return assemble_pairwise_instance(instance, t).instance;
    });

    AllocateResult result;
    result.T_final = threshold;
    result.certified_bound = 14 * threshold;
    result.achieved = solved.achieved;
    result.allocation = Allocation::create(solved.coloring.assignment(), n);
    result.certificate = certify_efc(instance, result.allocation);
    require(result.certificate.c <= result.certified_bound, Errc::assumption_violated,
            "certificate exceeds the certified bound");
    return result;
}

AllocateResult allocate_extern(const ExternInstance& instance, const SolverConfig& config) {
    return allocate_nonconsensus(to_asym(instance), config);
}

ConsensusResult consensus_partition(const std::vector<std::vector<Rational>>& valuations,
                                    std::size_t color_count, const SolverConfig& config) {
    require(color_count >= 1, Errc::bad_argument, "need at least one bundle");
    std::size_t m = valuations.empty() ? 0 : valuations.front().size();

    auto [threshold, solved] = doubling_solve(m, config, [&](std::size_t t) {
        return assemble_consensus_instance(valuations, color_count, t).instance;
    });

    ConsensusResult result;
    result.T_final = threshold;
    result.certified_bound = 14 * threshold;
    result.achieved = solved.achieved;
    result.bundles = solved.coloring.classes();
    return result;
}

TruthfulResult truthful_allocate(const ExternInstance& instance, const SolverConfig& config,
                                 std::uint64_t assignment_seed) {
    std::size_t n = instance.agent_count();
    AsymInstance asym = to_asym(instance);

    if (n == 1) {
        TruthfulResult result;
        result.allocation =
            Allocation::create(std::vector<std::size_t>(instance.item_count(), 0), 1);
        result.bundle_to_agent = {0};
        result.achieved = 0;
        result.certificate = certify_efc(asym, result.allocation);
        return result;
    }

    std::vector<std::vector<Rational>> valuations;
    valuations.reserve(n * (n - 1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                valuations.push_back(asym.pair_values(i, j));

    ConsensusResult partition = consensus_partition(valuations, n, config);

    // Unbiased Fisher-Yates bijection bundle -> agent.
    std::vector<std::size_t> bundle_to_agent(n);
    std::iota(bundle_to_agent.begin(), bundle_to_agent.end(), 0);
    Prng rng(mix_seed(assignment_seed, 0x5D1));
    for (std::size_t idx = n; idx > 1; --idx)
        std::swap(bundle_to_agent[idx - 1], bundle_to_agent[rng.below(idx)]);

    std::vector<std::size_t> assignment(instance.item_count());
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t x : partition.bundles[b])
            assignment[x] = bundle_to_agent[b];

    TruthfulResult result;
    result.allocation = Allocation::create(std::move(assignment), n);
    result.bundle_to_agent = std::move(bundle_to_agent);
    result.T_final = partition.T_final;
    result.certified_bound = partition.certified_bound;
    result.achieved = partition.achieved;
    result.certificate = certify_efc(asym, result.allocation);
    require(result.certificate.c <= result.certified_bound, Errc::assumption_violated,
            "certificate exceeds the certified bound");
    return result;
}

std::vector<Rational> expected_utilities(const ExternInstance& instance) {
    std::size_t n = instance.agent_count();
    std::vector<Rational> expectations(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t x = 0; x < instance.item_count(); ++x)
                expectations[i] += instance.value(i, j, x);
        expectations[i] /= Rational(n);
    }
    return expectations;
}

} // namespace fdx
