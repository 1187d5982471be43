#pragma once

#include "fdx/model.hpp"

namespace fdx {

/// Maps an externalities instance to the asymmetric envy model via
/// v_{i,j}(x) = V_i(i,x) - V_i(j,x). Envy comparisons (and minimal discard
/// counts) coincide between the two instances for every complete allocation.
AsymInstance to_asym(const ExternInstance& instance);

/// Right inverse of to_asym on arbitrary additive instances:
/// V_i(i,x) = 1 and V_i(j,x) = 1 - v_{i,j}(x).
ExternInstance lift_additive(const AsymInstance& instance);

/// Right inverse of to_asym on binary instances; the result is binary and has
/// no chores. Throws Errc::not_binary when some value lies outside {0,1}.
ExternInstance lift_binary(const AsymInstance& instance);

} // namespace fdx
