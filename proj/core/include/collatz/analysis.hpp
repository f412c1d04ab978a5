// analysis.hpp — parity vectors and exact closed forms for k-fold iterates.
//
// With c indicator terms among the first k orbit terms, the k-th iterate is
//   map^k(start) = (3^c / 2^k) * start + adjustment
// with an exact rational adjustment whose denominator divides 2^k.
#pragma once

#include "collatz/maps.hpp"

#include <cstdint>
#include <vector>

namespace collatz {

struct ParityVector {
    Map map = Map::collatz();
    Int start;
    std::vector<std::uint8_t> bits;  // bits[j] = indicator of the j-th orbit term

    bool operator==(const ParityVector&) const = default;
};

// Indicator bits of terms 0..k-1: odd terms for T, even terms for F_n.
ParityVector parity_vector(const Map& map, const Int& start, std::size_t k);

std::size_t count_indicators(const ParityVector& pv);

struct ClosedForm {
    Rat lead_coeff;        // 3^count / 2^k
    Rat adjustment;        // map^k(start) - lead_coeff * start
    std::uint64_t count = 0;  // indicator terms among the first k
    std::uint64_t k = 0;

    // Exact value of the k-th iterate when evaluated at `start`.
    Rat value_at(const Int& start) const { return lead_coeff * start + adjustment; }

    bool operator==(const ClosedForm&) const = default;
};

ClosedForm closed_form(const Map& map, const Int& start, std::uint64_t k);

// Closed forms of one orbit for every truncation k = 0..k_max.
struct CoeffRow {
    std::uint64_t k = 0;
    std::uint64_t count = 0;
    Rat lead_coeff;
    Rat adjustment;
    Int term;  // map^k(start)

    bool operator==(const CoeffRow&) const = default;
};

struct CoeffTable {
    Map map = Map::collatz();
    Int start;
    std::vector<CoeffRow> rows;

    bool operator==(const CoeffTable&) const = default;
};

CoeffTable coefficient_table(const Map& map, const Int& start, std::uint64_t k_max);

}  // namespace collatz
