#include "collatz/trajectory.hpp"

#include <algorithm>
#include <unordered_map>

namespace collatz {

Trajectory iterate(const Map& map, const Int& start, std::uint64_t k) {
    map.validate_start(start);
    Trajectory tr{map, start, {}, BudgetExhausted{k}, k};
    tr.terms.reserve(static_cast<std::size_t>(k) + 1);
    tr.terms.push_back(start);
    Int cur = start;
    for (std::uint64_t i = 0; i < k; ++i) {
        cur = map.step(cur);
        tr.terms.push_back(cur);
    }
    return tr;
}

Trajectory run_until(const Map& map, const Int& start, std::uint64_t max_steps) {
    map.validate_start(start);
    const Int anchor = map.anchor();
    Trajectory tr{map, start, {}, BudgetExhausted{max_steps}, 0};
    tr.terms.push_back(start);
    std::unordered_map<Int, std::size_t> first_index;
    first_index.emplace(start, 0);
    Int cur = start;
    for (;;) {
        if (cur == anchor) {
            tr.stop = ReachedAnchor{};
            break;
        }
        if (tr.terms.size() - 1 >= max_steps) {
            tr.stop = BudgetExhausted{max_steps};
            break;
        }
        cur = map.step(cur);
        auto [it, inserted] = first_index.emplace(cur, tr.terms.size());
        tr.terms.push_back(cur);
        if (!inserted) {
            std::vector<Int> cyc(tr.terms.begin() + static_cast<std::ptrdiff_t>(it->second),
                                 tr.terms.end() - 1);
            tr.stop = CycleDetected{canonical_cycle(std::move(cyc))};
            break;
        }
    }
    tr.steps = tr.terms.size() - 1;
    return tr;
}

std::vector<Int> canonical_cycle(std::vector<Int> cycle) {
    if (cycle.empty()) return cycle;
    auto min_it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), min_it, cycle.end());
    return cycle;
}

}  // namespace collatz
