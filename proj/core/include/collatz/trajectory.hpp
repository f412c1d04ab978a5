// trajectory.hpp — orbit iteration with anchor detection and cycle detection.
#pragma once

#include "collatz/maps.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace collatz {

struct ReachedAnchor {
    bool operator==(const ReachedAnchor&) const = default;
};

struct CycleDetected {
    // Minimal cycle, rotated so the smallest element comes first.
    std::vector<Int> cycle;
    bool operator==(const CycleDetected&) const = default;
};

struct BudgetExhausted {
    std::uint64_t max_steps = 0;
    bool operator==(const BudgetExhausted&) const = default;
};

using StopReason = std::variant<ReachedAnchor, CycleDetected, BudgetExhausted>;

struct Trajectory {
    Map map = Map::collatz();
    Int start;
    std::vector<Int> terms;  // terms[0] == start, terms[i+1] == map.step(terms[i])
    StopReason stop = BudgetExhausted{};
    std::uint64_t steps = 0;  // == terms.size() - 1

    bool operator==(const Trajectory&) const = default;
};

// Exactly k steps; stop is always BudgetExhausted{k}.
Trajectory iterate(const Map& map, const Int& start, std::uint64_t k);

// Runs until the anchor is hit, a value repeats, or max_steps is spent.
// The anchor check precedes each step, so start == anchor stops at 0 steps.
// On a repeat the closing term is appended, so the step invariant holds over
// the whole terms vector and the repeated value appears twice.
Trajectory run_until(const Map& map, const Int& start, std::uint64_t max_steps);

// Rotates a cycle so its smallest element comes first.
std::vector<Int> canonical_cycle(std::vector<Int> cycle);

}  // namespace collatz
