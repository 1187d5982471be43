#include "fdx/reductions.hpp"

#include "fdx/error.hpp"

namespace fdx {

AsymInstance to_asym(const ExternInstance& instance) {
    std::size_t n = instance.agent_count();
    std::size_t m = instance.item_count();
    ValueTable values(n, std::vector<std::vector<Rational>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            values[i][j].resize(m);
            for (std::size_t x = 0; x < m; ++x)
                values[i][j][x] = instance.value(i, i, x) - instance.value(i, j, x);
        }
    return AsymInstance::create(n, instance.items(), std::move(values));
}

namespace {

ExternInstance lift(const AsymInstance& instance, bool binary_only) {
    std::size_t n = instance.agent_count();
    std::size_t m = instance.item_count();
    ValueTable values(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(m)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t x = 0; x < m; ++x) {
                if (i == j) {
                    values[i][j][x] = 1;
                    continue;
                }
                const Rational& v = instance.values()[i][j][x];
                if (binary_only)
                    require(is_zero_or_one(v), Errc::not_binary,
                            "value v[" + std::to_string(i) + "][" + std::to_string(j) +
                                "][" + std::to_string(x) + "] is not in {0,1}");
                values[i][j][x] = 1 - v;
            }
    return ExternInstance::create(n, instance.items(), std::move(values));
}

} // namespace

ExternInstance lift_additive(const AsymInstance& instance) {
    return lift(instance, /*binary_only=*/false);
}

ExternInstance lift_binary(const AsymInstance& instance) {
    return lift(instance, /*binary_only=*/true);
}

} // namespace fdx
