#pragma once

#include "fdx/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace fdx {

/// Sorted, duplicate-free set of zero-based item indices.
using ItemSet = std::vector<std::size_t>;

/// Dense table indexed [agent i][agent j][item x].
using ValueTable = std::vector<std::vector<std::vector<Rational>>>;

/// Instance of the externalities model: V_i(j,x) is the value to agent i of
/// item x being held by agent j. Immutable after construction; the binary and
/// no-chores flags are recomputed from the table, never taken from input.
class ExternInstance {
public:
    static ExternInstance create(std::size_t n, std::vector<std::string> items,
                                 ValueTable values);

    std::size_t agent_count() const { return n_; }
    std::size_t item_count() const { return items_.size(); }
    const std::vector<std::string>& items() const { return items_; }
    const ValueTable& values() const { return values_; }

    /// V_i(j,x)
    const Rational& value(std::size_t i, std::size_t j, std::size_t x) const {
        return values_[i][j][x];
    }

    bool is_binary() const { return is_binary_; }
    bool has_no_chores() const { return has_no_chores_; }

private:
    ExternInstance() = default;

    std::size_t n_ = 0;
    std::vector<std::string> items_;
    ValueTable values_;
    bool is_binary_ = true;
    bool has_no_chores_ = true;
};

/// Instance of the asymmetric envy model: one additive valuation v_{i,j} per
/// ordered pair of distinct agents. Diagonal entries are structurally absent
/// (stored as empty vectors).
class AsymInstance {
public:
    /// values[i][i] must be empty; every off-diagonal row must have one value
    /// per item.
    static AsymInstance create(std::size_t n, std::vector<std::string> items,
                               ValueTable values);

    std::size_t agent_count() const { return n_; }
    std::size_t item_count() const { return items_.size(); }
    const std::vector<std::string>& items() const { return items_; }
    const ValueTable& values() const { return values_; }

    /// v_{i,j} as a per-item vector; throws Errc::same_agent for i == j.
    const std::vector<Rational>& pair_values(std::size_t i, std::size_t j) const;

    bool is_binary() const { return is_binary_; }
    bool has_no_chores() const { return has_no_chores_; }

private:
    AsymInstance() = default;

    std::size_t n_ = 0;
    std::vector<std::string> items_;
    ValueTable values_;
    bool is_binary_ = true;
    bool has_no_chores_ = true;
};

/// Complete allocation: every item is assigned to exactly one agent.
class Allocation {
public:
    Allocation() = default; // empty placeholder; not a valid allocation

    /// item_to_agent[x] in [0, n).
    static Allocation create(std::vector<std::size_t> item_to_agent, std::size_t n);

    /// bundles[a] lists the items of agent a; the lists must partition [0, m).
    static Allocation from_bundles(const std::vector<ItemSet>& bundles, std::size_t m);

    std::size_t agent_count() const { return n_; }
    std::size_t item_count() const { return assignment_.size(); }
    std::size_t assignee(std::size_t item) const { return assignment_[item]; }
    const std::vector<std::size_t>& assignment() const { return assignment_; }

    ItemSet bundle(std::size_t agent) const;
    std::vector<ItemSet> bundles() const;

    bool operator==(const Allocation& other) const = default;

private:
    std::size_t n_ = 0;
    std::vector<std::size_t> assignment_;
};

/// Total k-coloring of the item set.
class Coloring {
public:
    Coloring() = default; // empty placeholder

    static Coloring create(std::vector<std::size_t> item_to_color, std::size_t k);

    std::size_t color_count() const { return k_; }
    std::size_t item_count() const { return assignment_.size(); }
    std::size_t color(std::size_t item) const { return assignment_[item]; }
    const std::vector<std::size_t>& assignment() const { return assignment_; }

    /// classes()[c] = items of color c, ascending.
    std::vector<ItemSet> classes() const;

    bool operator==(const Coloring& other) const = default;

private:
    std::size_t k_ = 1;
    std::vector<std::size_t> assignment_;
};

/// V_i(A) = sum over j, x in A_j of V_i(j,x), evaluated exactly.
Rational allocation_value(const ExternInstance& instance, const Allocation& allocation,
                          std::size_t agent);

/// Exchanges the bundles of two distinct agents; everything else unchanged.
Allocation swap_bundles(const Allocation& allocation, std::size_t i, std::size_t j);

} // namespace fdx
