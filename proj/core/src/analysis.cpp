#include "collatz/analysis.hpp"

#include "collatz/trajectory.hpp"

#include <numeric>

namespace collatz {

ParityVector parity_vector(const Map& map, const Int& start, std::size_t k) {
    map.validate_start(start);
    ParityVector pv{map, start, {}};
    pv.bits.reserve(k);
    Int cur = start;
    for (std::size_t j = 0; j < k; ++j) {
        pv.bits.push_back(map.indicator(cur) ? 1 : 0);
        if (j + 1 < k) cur = map.step(cur);
    }
    return pv;
}

std::size_t count_indicators(const ParityVector& pv) {
    return static_cast<std::size_t>(
        std::accumulate(pv.bits.begin(), pv.bits.end(), std::size_t{0}));
}

ClosedForm closed_form(const Map& map, const Int& start, std::uint64_t k) {
    Trajectory tr = iterate(map, start, k);
    std::uint64_t count = 0;
    for (std::uint64_t j = 0; j < k; ++j)
        if (map.indicator(tr.terms[static_cast<std::size_t>(j)])) ++count;
    Rat lead = pow3_over_pow2(count, k);
    Rat adjustment = Rat(tr.terms.back()) - lead * start;
    return ClosedForm{std::move(lead), std::move(adjustment), count, k};
}

CoeffTable coefficient_table(const Map& map, const Int& start, std::uint64_t k_max) {
    Trajectory tr = iterate(map, start, k_max);
    CoeffTable table{map, start, {}};
    table.rows.reserve(static_cast<std::size_t>(k_max) + 1);
    std::uint64_t count = 0;
    for (std::uint64_t k = 0; k <= k_max; ++k) {
        Rat lead = pow3_over_pow2(count, k);
        const Int& term = tr.terms[static_cast<std::size_t>(k)];
        Rat adjustment = Rat(term) - lead * start;
        table.rows.push_back(CoeffRow{k, count, std::move(lead), std::move(adjustment), term});
        if (map.indicator(term)) ++count;
    }
    return table;
}

}  // namespace collatz
