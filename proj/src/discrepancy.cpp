#include "fdx/discrepancy.hpp"

#include "fdx/error.hpp"
#include "fdx/prng.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>

namespace fdx {

DiscrepancyInstance DiscrepancyInstance::create(
    std::size_t item_count, std::vector<std::vector<std::vector<Rational>>> colors) {
    require(!colors.empty(), Errc::color_count_mismatch, "need at least one color");
    for (std::size_t c = 0; c + 1 < colors.size(); ++c)
        require(colors[c].size() >= colors[c + 1].size(), Errc::dimension_mismatch,
                "per-color collection sizes must be non-increasing");
    for (const auto& collection : colors)
        for (const auto& vec : collection) {
            require(vec.size() == item_count, Errc::dimension_mismatch,
                    "valuation vector length does not match the item count");
            for (const Rational& v : vec)
                require(v >= 0 && v <= 1, Errc::bad_argument,
                        "discrepancy valuations must lie in [0,1]");
        }
    DiscrepancyInstance instance;
    instance.item_count_ = item_count;
    instance.colors_ = std::move(colors);
    return instance;
}

Rational adisc_eval(const Coloring& coloring, const DiscrepancyInstance& instance) {
    require(coloring.color_count() == instance.color_count(), Errc::color_count_mismatch,
            "coloring has " + std::to_string(coloring.color_count()) + " colors, instance has " +
                std::to_string(instance.color_count()));
    require(coloring.item_count() == instance.item_count(), Errc::dimension_mismatch,
            "coloring and instance disagree on the item count");

    Rational k(instance.color_count());
    Rational worst = 0;
    auto classes = coloring.classes();
    for (std::size_t c = 0; c < instance.color_count(); ++c)
        for (const auto& vec : instance.color(c)) {
            Rational total = 0;
            for (const Rational& v : vec)
                total += v;
            Rational class_sum = 0;
            for (std::size_t x : classes[c])
                class_sum += vec[x];
            Rational deviation = abs(total / k - class_sum);
            if (deviation > worst)
                worst = deviation;
        }
    return worst;
}

SolveStrategy parse_strategy(const std::string& name) {
    if (name == "exhaustive")
        return SolveStrategy::exhaustive;
    if (name == "random" || name == "random_restarts")
        return SolveStrategy::random_restarts;
    if (name == "local" || name == "local_search")
        return SolveStrategy::local_search;
    fail(Errc::bad_argument, "unknown solver strategy '" + name + "'");
}

namespace {

constexpr std::uint64_t kExhaustiveBudget = 10'000'000;
constexpr std::uint64_t kRestartBudget = 64;
constexpr std::uint64_t kLocalMoveBudget = 100'000;

// Incremental exact evaluation state. Identical vectors within a color are
// collapsed (the max over duplicates equals the max over distinct vectors).
class Engine {
public:
    explicit Engine(const DiscrepancyInstance& instance)
        : k_(instance.color_count()), m_(instance.item_count()) {
        vectors_.resize(k_);
        for (std::size_t c = 0; c < k_; ++c) {
            std::map<std::vector<Rational>, std::size_t> seen;
            for (const auto& vec : instance.color(c)) {
                if (seen.emplace(vec, vectors_[c].size()).second) {
                    Rational total = 0;
                    for (const Rational& v : vec)
                        total += v;
                    vectors_[c].push_back({vec, total / Rational(k_), Rational(0), Rational(0)});
                }
            }
        }
    }

    void reset(const std::vector<std::size_t>& coloring) {
        coloring_ = coloring;
        colmax_.assign(k_, Rational(0));
        for (std::size_t c = 0; c < k_; ++c) {
            for (auto& entry : vectors_[c]) {
                entry.sum = 0;
                for (std::size_t x = 0; x < m_; ++x)
                    if (coloring_[x] == c)
                        entry.sum += entry.values[x];
                entry.dev = abs(entry.target - entry.sum);
                if (entry.dev > colmax_[c])
                    colmax_[c] = entry.dev;
            }
        }
    }

    const std::vector<std::size_t>& coloring() const { return coloring_; }

    Rational objective() const {
        Rational worst = 0;
        for (const Rational& v : colmax_)
            if (v > worst)
                worst = v;
        return worst;
    }

    /// Objective value if item x were recolored to `to`; no state change.
    Rational probe(std::size_t x, std::size_t to) const {
        std::size_t from = coloring_[x];
        if (from == to)
            return objective();
        Rational worst = 0;
        for (std::size_t c = 0; c < k_; ++c) {
            if (c == from || c == to)
                continue;
            if (colmax_[c] > worst)
                worst = colmax_[c];
        }
        for (std::size_t c : {from, to}) {
            bool removing = c == from;
            for (const auto& entry : vectors_[c]) {
                const Rational& vx = entry.values[x];
                if (vx == 0) {
                    if (entry.dev > worst)
                        worst = entry.dev;
                    continue;
                }
                Rational moved = removing ? Rational(entry.sum - vx) : Rational(entry.sum + vx);
                Rational dev = abs(entry.target - moved);
                if (dev > worst)
                    worst = dev;
            }
        }
        return worst;
    }

    void commit(std::size_t x, std::size_t to) {
        std::size_t from = coloring_[x];
        if (from == to)
            return;
        for (std::size_t c : {from, to}) {
            bool removing = c == from;
            colmax_[c] = 0;
            for (auto& entry : vectors_[c]) {
                const Rational& vx = entry.values[x];
                if (vx != 0) {
                    if (removing)
                        entry.sum -= vx;
                    else
                        entry.sum += vx;
                    entry.dev = abs(entry.target - entry.sum);
                }
                if (entry.dev > colmax_[c])
                    colmax_[c] = entry.dev;
            }
        }
        coloring_[x] = to;
    }

private:
    struct Entry {
        std::vector<Rational> values;
        Rational target; // v(M)/k
        Rational sum;    // v(current class)
        Rational dev;
    };

    std::size_t k_, m_;
    std::vector<std::vector<Entry>> vectors_;
    std::vector<std::size_t> coloring_;
    std::vector<Rational> colmax_;
};

std::vector<std::size_t> random_coloring(std::size_t m, std::size_t k, std::uint64_t seed) {
    Prng rng(seed);
    std::vector<std::size_t> coloring(m);
    for (std::size_t x = 0; x < m; ++x)
        coloring[x] = static_cast<std::size_t>(rng.below(k));
    return coloring;
}

Coloring solve_exhaustive(const DiscrepancyInstance& instance, std::uint64_t budget) {
    std::size_t k = instance.color_count();
    std::size_t m = instance.item_count();

    std::uint64_t total = 1;
    for (std::size_t x = 0; x < m; ++x) {
        require(total <= budget / k, Errc::budget_exceeded,
                "exhaustive coloring enumeration exceeds budget");
        total *= k;
    }

    std::vector<std::size_t> current(m, 0);
    if (k == 1 || m == 0)
        return Coloring::create(current, k);

    Engine engine(instance);
    engine.reset(current);
    Rational best_objective = engine.objective();
    std::vector<std::size_t> best = current;

    // Loopless reflected mixed-radix Gray walk: one recolor per visited
    // coloring.
    std::vector<std::size_t> focus(m + 1);
    for (std::size_t j = 0; j <= m; ++j)
        focus[j] = j;
    std::vector<int> direction(m, 1);

    for (;;) {
        std::size_t j = focus[0];
        focus[0] = 0;
        if (j == m)
            break;
        std::size_t next_color = current[j] + direction[j];
        current[j] = next_color;
        engine.commit(j, next_color);
        if (next_color == 0 || next_color == k - 1) {
            direction[j] = -direction[j];
            focus[j] = focus[j + 1];
            focus[j + 1] = j + 1;
        }
        Rational objective = engine.objective();
        if (objective < best_objective) {
            best_objective = objective;
            best = current;
        }
    }
    return Coloring::create(std::move(best), k);
}

Coloring solve_restarts(const DiscrepancyInstance& instance, std::uint64_t seed,
                        std::uint64_t budget) {
    require(budget >= 1, Errc::bad_argument, "random_restarts needs a positive budget");
    std::size_t k = instance.color_count();
    std::size_t m = instance.item_count();

    Engine engine(instance);
    std::vector<std::size_t> best;
    Rational best_objective;
    for (std::uint64_t restart = 0; restart < budget; ++restart) {
        auto coloring = random_coloring(m, k, mix_seed(seed, restart));
        engine.reset(coloring);
        Rational objective = engine.objective();
        if (best.empty() || objective < best_objective) {
            best_objective = objective;
            best = std::move(coloring);
        }
        if (best_objective == 0)
            break;
    }
    return Coloring::create(std::move(best), k);
}

Coloring solve_local(const DiscrepancyInstance& instance, const SolverConfig& config,
                     std::uint64_t budget) {
    require(budget >= 1, Errc::bad_argument, "local_search needs a positive budget");
    std::size_t k = instance.color_count();
    std::size_t m = instance.item_count();

    std::vector<std::size_t> start;
    if (config.initial.has_value()) {
        require(config.initial->color_count() == k, Errc::color_count_mismatch,
                "initial coloring has the wrong number of colors");
        require(config.initial->item_count() == m, Errc::dimension_mismatch,
                "initial coloring has the wrong number of items");
        start = config.initial->assignment();
    } else {
        start = random_coloring(m, k, mix_seed(config.seed, 0));
    }

    Engine engine(instance);
    engine.reset(start);

    std::uint64_t moves = 0;
    bool improved = true;
    while (improved && moves < budget) {
        improved = false;
        for (std::size_t x = 0; x < m && moves < budget; ++x) {
            Rational best_objective = engine.objective();
            std::size_t best_color = engine.coloring()[x];
            for (std::size_t c = 0; c < k; ++c) {
                if (c == engine.coloring()[x])
                    continue;
                Rational objective = engine.probe(x, c);
                if (objective < best_objective) {
                    best_objective = objective;
                    best_color = c;
                }
            }
            if (best_color != engine.coloring()[x]) {
                engine.commit(x, best_color);
                improved = true;
                ++moves;
            }
        }
    }
    return Coloring::create(engine.coloring(), k);
}

} // namespace

SolveResult solve(const DiscrepancyInstance& instance, const SolverConfig& config) {
    Coloring coloring = [&] {
        switch (config.strategy) {
        case SolveStrategy::exhaustive:
            return solve_exhaustive(instance, config.budget.value_or(kExhaustiveBudget));
        case SolveStrategy::random_restarts:
            return solve_restarts(instance, config.seed, config.budget.value_or(kRestartBudget));
        case SolveStrategy::local_search:
            return solve_local(instance, config, config.budget.value_or(kLocalMoveBudget));
        }
        fail(Errc::bad_argument, "unknown solver strategy");
    }();
    Rational achieved = adisc_eval(coloring, instance);
    return {std::move(coloring), std::move(achieved)};
}

namespace {

template <typename Int>
WdiscResult wdisc_scan(const std::vector<Int>& targets,
                       const std::vector<std::vector<Int>>& scaled, const BigInt& scale,
                       std::size_t m) {
    std::size_t count = targets.size();
    std::vector<Int> sums(count, Int(0));

    auto deviation = [&]() {
        Int worst = 0;
        for (std::size_t i = 0; i < count; ++i) {
            Int d = targets[i] - sums[i];
            if (d < 0)
                d = -d;
            if (d > worst)
                worst = d;
        }
        return worst;
    };

    Int best = deviation();
    std::uint64_t best_mask = 0;
    std::uint64_t mask = 0;
    std::uint64_t total = std::uint64_t(1) << m;
    for (std::uint64_t step = 1; step < total; ++step) {
        std::size_t bit = static_cast<std::size_t>(std::countr_zero(step));
        std::uint64_t flag = std::uint64_t(1) << bit;
        bool adding = !(mask & flag);
        mask ^= flag;
        for (std::size_t i = 0; i < count; ++i) {
            if (adding)
                sums[i] += scaled[i][bit];
            else
                sums[i] -= scaled[i][bit];
        }
        Int d = deviation();
        if (d < best) {
            best = d;
            best_mask = mask;
            if (best == 0)
                break;
        }
    }

    WdiscResult result;
    result.value = Rational(BigInt(best), scale);
    for (std::size_t x = 0; x < m; ++x)
        if (best_mask & (std::uint64_t(1) << x))
            result.argmin.push_back(x);
    return result;
}

} // namespace

WdiscResult wdisc_brute(const std::vector<std::vector<Rational>>& valuations,
                        const Rational& p, std::uint64_t budget) {
    require(p > 0 && p < 1, Errc::bad_argument, "p must lie strictly between 0 and 1");
    if (valuations.empty())
        return {Rational(0), {}};

    std::size_t m = valuations.front().size();
    for (const auto& vec : valuations)
        require(vec.size() == m, Errc::dimension_mismatch,
                "valuation vectors must all have the same length");
    require(m < 64 && (std::uint64_t(1) << m) <= budget, Errc::budget_exceeded,
            "subset enumeration over " + std::to_string(m) + " items exceeds budget");

    // One shared scale clears every denominator, so sums and targets are
    // plain integers and min/max comparisons stay exact. The scale is
    // den(p) * lcm(value denominators): item values pick up the den(p)
    // factor, targets pick up the lcm factor.
    BigInt value_denoms = 1;
    for (const auto& vec : valuations)
        for (const Rational& v : vec)
            value_denoms = boost::multiprecision::lcm(value_denoms, BigInt(denominator(v)));
    BigInt common = BigInt(denominator(p)) * value_denoms;

    std::size_t count = valuations.size();
    std::vector<std::vector<BigInt>> scaled(count, std::vector<BigInt>(m));
    std::vector<BigInt> targets(count);
    BigInt magnitude = 0;
    for (std::size_t i = 0; i < count; ++i) {
        Rational total = 0;
        for (std::size_t x = 0; x < m; ++x) {
            Rational t = valuations[i][x] * common;
            scaled[i][x] = numerator(t);
            total += valuations[i][x];
        }
        Rational target = p * total * common;
        targets[i] = numerator(target);
        BigInt reach = abs(targets[i]);
        for (std::size_t x = 0; x < m; ++x)
            reach += abs(scaled[i][x]);
        magnitude = std::max(magnitude, reach);
    }

    if (magnitude <= std::numeric_limits<std::int64_t>::max() / 2) {
        std::vector<std::vector<std::int64_t>> small(count, std::vector<std::int64_t>(m));
        std::vector<std::int64_t> small_targets(count);
        for (std::size_t i = 0; i < count; ++i) {
            small_targets[i] = targets[i].convert_to<std::int64_t>();
            for (std::size_t x = 0; x < m; ++x)
                small[i][x] = scaled[i][x].convert_to<std::int64_t>();
        }
        return wdisc_scan(small_targets, small, common, m);
    }
    return wdisc_scan(targets, scaled, common, m);
}

} // namespace fdx
