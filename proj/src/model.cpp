#include "fdx/model.hpp"

#include "fdx/error.hpp"

#include <algorithm>

namespace fdx {

namespace {

void check_table_shape(std::size_t n, std::size_t m, const ValueTable& values,
                       bool diagonal_empty) {
    require(values.size() == n, Errc::dimension_mismatch,
            "expected " + std::to_string(n) + " agent rows, got " +
                std::to_string(values.size()));
    for (std::size_t i = 0; i < n; ++i) {
        require(values[i].size() == n, Errc::dimension_mismatch,
                "agent row " + std::to_string(i) + " has " +
                    std::to_string(values[i].size()) + " columns, expected " +
                    std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t expected = (diagonal_empty && i == j) ? 0 : m;
            require(values[i][j].size() == expected, Errc::dimension_mismatch,
                    "value row (" + std::to_string(i) + "," + std::to_string(j) +
                        ") has " + std::to_string(values[i][j].size()) +
                        " items, expected " + std::to_string(expected));
        }
    }
}

} // namespace

ExternInstance ExternInstance::create(std::size_t n, std::vector<std::string> items,
                                      ValueTable values) {
    require(n >= 1, Errc::dimension_mismatch, "agent count must be at least 1");
    std::size_t m = items.size();
    check_table_shape(n, m, values, /*diagonal_empty=*/false);

    ExternInstance instance;
    instance.n_ = n;
    instance.items_ = std::move(items);
    instance.values_ = std::move(values);

    for (std::size_t i = 0; i < n && instance.is_binary_; ++i)
        for (std::size_t j = 0; j < n && instance.is_binary_; ++j)
            for (std::size_t x = 0; x < m; ++x)
                if (!is_zero_or_one(instance.values_[i][j][x])) {
                    instance.is_binary_ = false;
                    break;
                }
    for (std::size_t i = 0; i < n && instance.has_no_chores_; ++i)
        for (std::size_t j = 0; j < n && instance.has_no_chores_; ++j)
            for (std::size_t x = 0; x < m; ++x)
                if (instance.values_[i][i][x] < instance.values_[i][j][x]) {
                    instance.has_no_chores_ = false;
                    break;
                }
    return instance;
}

AsymInstance AsymInstance::create(std::size_t n, std::vector<std::string> items,
                                  ValueTable values) {
    require(n >= 1, Errc::dimension_mismatch, "agent count must be at least 1");
    std::size_t m = items.size();
    check_table_shape(n, m, values, /*diagonal_empty=*/true);

    AsymInstance instance;
    instance.n_ = n;
    instance.items_ = std::move(items);
    instance.values_ = std::move(values);

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            for (std::size_t x = 0; x < m; ++x) {
                const Rational& v = instance.values_[i][j][x];
                if (!is_zero_or_one(v))
                    instance.is_binary_ = false;
                if (v < 0)
                    instance.has_no_chores_ = false;
            }
        }
    return instance;
}

const std::vector<Rational>& AsymInstance::pair_values(std::size_t i, std::size_t j) const {
    require(i != j, Errc::same_agent,
            "no valuation for agent " + std::to_string(i) + " toward itself");
    return values_[i][j];
}

Allocation Allocation::create(std::vector<std::size_t> item_to_agent, std::size_t n) {
    require(n >= 1, Errc::dimension_mismatch, "agent count must be at least 1");
    for (std::size_t x = 0; x < item_to_agent.size(); ++x)
        require(item_to_agent[x] < n, Errc::dimension_mismatch,
                "item " + std::to_string(x) + " assigned to agent " +
                    std::to_string(item_to_agent[x]) + " out of range");
    Allocation allocation;
    allocation.n_ = n;
    allocation.assignment_ = std::move(item_to_agent);
    return allocation;
}

Allocation Allocation::from_bundles(const std::vector<ItemSet>& bundles, std::size_t m) {
    std::vector<std::size_t> assignment(m, bundles.size());
    for (std::size_t a = 0; a < bundles.size(); ++a)
        for (std::size_t x : bundles[a]) {
            require(x < m, Errc::dimension_mismatch,
                    "item index " + std::to_string(x) + " out of range");
            require(assignment[x] == bundles.size(), Errc::dimension_mismatch,
                    "item " + std::to_string(x) + " assigned twice");
            assignment[x] = a;
        }
    for (std::size_t x = 0; x < m; ++x)
        require(assignment[x] < bundles.size(), Errc::dimension_mismatch,
                "item " + std::to_string(x) + " is unassigned");
    return create(std::move(assignment), bundles.size());
}

ItemSet Allocation::bundle(std::size_t agent) const {
    ItemSet items;
    for (std::size_t x = 0; x < assignment_.size(); ++x)
        if (assignment_[x] == agent)
            items.push_back(x);
    return items;
}

std::vector<ItemSet> Allocation::bundles() const {
    std::vector<ItemSet> result(n_);
    for (std::size_t x = 0; x < assignment_.size(); ++x)
        result[assignment_[x]].push_back(x);
    return result;
}

Coloring Coloring::create(std::vector<std::size_t> item_to_color, std::size_t k) {
    require(k >= 1, Errc::color_count_mismatch, "color count must be at least 1");
    for (std::size_t x = 0; x < item_to_color.size(); ++x)
        require(item_to_color[x] < k, Errc::color_count_mismatch,
                "item " + std::to_string(x) + " colored " +
                    std::to_string(item_to_color[x]) + " out of range");
    Coloring coloring;
    coloring.k_ = k;
    coloring.assignment_ = std::move(item_to_color);
    return coloring;
}

std::vector<ItemSet> Coloring::classes() const {
    std::vector<ItemSet> result(k_);
    for (std::size_t x = 0; x < assignment_.size(); ++x)
        result[assignment_[x]].push_back(x);
    return result;
}

Rational allocation_value(const ExternInstance& instance, const Allocation& allocation,
                          std::size_t agent) {
    Rational total = 0;
    for (std::size_t x = 0; x < allocation.item_count(); ++x)
        total += instance.value(agent, allocation.assignee(x), x);
    return total;
}

Allocation swap_bundles(const Allocation& allocation, std::size_t i, std::size_t j) {
    require(i != j, Errc::same_agent, "cannot swap an agent with itself");
    std::vector<std::size_t> assignment = allocation.assignment();
    for (std::size_t& owner : assignment) {
        if (owner == i)
            owner = j;
        else if (owner == j)
            owner = i;
    }
    return Allocation::create(std::move(assignment), allocation.agent_count());
}

} // namespace fdx
