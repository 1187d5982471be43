#pragma once

#include "fdx/model.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace fdx {

/// Multicolor discrepancy instance: one collection of additive valuation
/// vectors per color, all values in [0,1]. Collection sizes must be
/// non-increasing across colors.
class DiscrepancyInstance {
public:
    DiscrepancyInstance() = default; // empty placeholder

    static DiscrepancyInstance create(std::size_t item_count,
                                      std::vector<std::vector<std::vector<Rational>>> colors);

    std::size_t color_count() const { return colors_.size(); }
    std::size_t item_count() const { return item_count_; }
    const std::vector<std::vector<Rational>>& color(std::size_t c) const { return colors_[c]; }

private:

    std::size_t item_count_ = 0;
    std::vector<std::vector<std::vector<Rational>>> colors_;
};

/// Worst deviation, over colors and their valuations, of a color class's
/// value from the proportional benchmark v(M)/k.
Rational adisc_eval(const Coloring& coloring, const DiscrepancyInstance& instance);

enum class SolveStrategy {
    exhaustive,      // global optimum; requires k^m within budget
    random_restarts, // budget independent uniform colorings, keep the best
    local_search,    // steepest single-item recolor descent from a seeded start
};

SolveStrategy parse_strategy(const std::string& name);

struct SolverConfig {
    SolveStrategy strategy = SolveStrategy::local_search;
    std::uint64_t seed = 0;
    /// exhaustive: enumeration cap (default 10^7); random_restarts: number of
    /// restarts (default 64); local_search: move cap (default 10^5).
    std::optional<std::uint64_t> budget;
    /// Optional starting coloring for local_search.
    std::optional<Coloring> initial;
};

struct SolveResult {
    Coloring coloring;
    Rational achieved; // always re-evaluated through adisc_eval before return
};

SolveResult solve(const DiscrepancyInstance& instance, const SolverConfig& config);

struct WdiscResult {
    Rational value;
    ItemSet argmin;
};

/// Exact minimum over all item subsets A of max_i |p*v_i(M) - v_i(A)|,
/// with an argmin subset. Throws Errc::budget_exceeded when 2^m > budget.
WdiscResult wdisc_brute(const std::vector<std::vector<Rational>>& valuations,
                        const Rational& p, std::uint64_t budget = std::uint64_t(1) << 25);

} // namespace fdx
