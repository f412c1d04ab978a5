// verify.hpp — exhaustive grid checks of the conjugacy-layer identities.
//
// Each verifier sweeps a parameter grid, re-deriving both sides of one
// identity with exact arithmetic, and reports every mismatch it finds
// (capped) instead of stopping at the first. Identity tokens (thm2.1,
// cor2.4, ...) are the stable names used by reports and the CLI.
#pragma once

#include "collatz/analysis.hpp"
#include "collatz/maps.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace collatz {

// Inclusive integer range.
struct IntRange {
    Int lo;
    Int hi;

    bool empty() const { return lo > hi; }
    Int size() const { return empty() ? Int(0) : hi - lo + 1; }
    bool operator==(const IntRange&) const = default;
};

struct Counterexample {
    std::optional<Int> N;             // start in T-coordinates
    std::optional<Int> start;         // start in family coordinates
    std::optional<Int> n;             // family index
    std::optional<Int> m;             // second family index
    std::optional<std::uint64_t> k;   // iterate depth
    std::string detail;               // expected vs. actual

    bool operator==(const Counterexample&) const = default;
};

inline constexpr std::size_t kMaxReportedFailures = 100;

struct VerificationReport {
    std::string identity;                  // e.g. "thm2.1"
    std::string params;                    // grid description
    std::uint64_t checked = 0;             // elementary comparisons performed
    std::vector<Counterexample> failures;  // at most kMaxReportedFailures
    bool truncated = false;                // true when failures were dropped

    bool passed() const { return failures.empty(); }
};

// thm2.1 — conjugacy: T^k(N) == F_n^k(N + A_n) - A_n for every k <= k_max.
// N = 0 is outside T's domain and is skipped.
VerificationReport verify_conjugacy(const IntRange& N_range, const IntRange& n_range,
                                    std::uint32_t k_max, unsigned threads = 0);

// prop2.2 — mirror average: F_n^k(N+A_n) + F_{-n-1}^k(N+A_{-n-1}) == 2 T^k(N).
VerificationReport verify_average(const IntRange& N_range, const IntRange& n_range,
                                  std::uint32_t k_max, unsigned threads = 0);

// thm2.2 — partial means: for every j <= n_max and k <= k_max the mean of the
// first j+1 mirror pairs equals T^k(N) exactly.
VerificationReport verify_partial_mean(const IntRange& N_range, std::uint32_t n_max,
                                       std::uint32_t k_max, unsigned threads = 0);

// cor2.1 — n-invariance: F_n^k(N+A_n) - A_n takes one value for all n in range.
VerificationReport verify_offset_invariance(const IntRange& N_range, const IntRange& n_range,
                                            std::uint32_t k_max, unsigned threads = 0);

// cor2.2 — pair offset: F_n^k(N+A_n) - F_m^k(N+A_m) == 2(n-m) for every k.
VerificationReport verify_offset_constancy(const IntRange& N_range,
                                           const std::vector<std::pair<Int, Int>>& nm_pairs,
                                           std::uint32_t k_max, unsigned threads = 0);

// cor2.3 — bound transfer: running max and min of the two orbits differ by
// exactly 2(n-m) at every truncation depth.
VerificationReport verify_bound_transfer(const IntRange& N_range,
                                         const std::vector<std::pair<Int, Int>>& nm_pairs,
                                         std::uint32_t k_max, unsigned threads = 0);

// cor2.4 — parity opposition: T^k(N) and F_n^k(N+A_n) never share parity.
VerificationReport verify_parity_opposition(const IntRange& N_range, const IntRange& n_range,
                                            std::uint32_t k_max, unsigned threads = 0);

// cor2.5 — parity duality: the odd-indicator vector of N under T equals the
// even-indicator vector of N+A_n under F_n, bit for bit (and so in count).
VerificationReport verify_parity_duality(const IntRange& N_range, const IntRange& n_range,
                                         std::uint32_t k_max, unsigned threads = 0);

// cor2.6 — adjustment pair relation: with shared lead coefficient L,
// adj_n(N+A_n) - adj_m(N+A_m) == 2(n-m)(1 - L) for every k.
VerificationReport verify_coeff_pair_relation(const IntRange& N_range,
                                              const std::vector<std::pair<Int, Int>>& nm_pairs,
                                              std::uint32_t k_max, unsigned threads = 0);

// prop2.3 — adjustment transfer: with L = 3^c/2^k the T-side adjustment obeys
// adj_T(N) == adj_n(N+A_n) + A_n (L - 1), and the lead coefficients agree.
VerificationReport verify_coeff_relation(const IntRange& N_range, const IntRange& n_range,
                                         std::uint32_t k_max, unsigned threads = 0);

// cor2.8 — forward invariance: starts at anchor+offset (offset >= 0) never
// fall below the anchor within k_max steps.
VerificationReport verify_lower_bound(const IntRange& offset_range, const IntRange& n_range,
                                      std::uint32_t k_max, unsigned threads = 0);

// thm2.3 — reach equivalence: P = anchor+offset reaches the anchor under F_n
// in exactly the number of steps N = offset+1 takes to reach 1 under T.
// Budget exhaustion on either side is reported as a counterexample.
VerificationReport verify_reach(const MapParam& p, const Int& max_offset,
                                std::uint64_t budget, unsigned threads = 0);

namespace detail {

// Collects results for one worker; merged deterministically by run_grid.
struct ReportSink {
    std::uint64_t checked = 0;
    std::vector<Counterexample> failures;
    bool truncated = false;

    void count(std::uint64_t c = 1) { checked += c; }
    void fail(Counterexample ce) {
        if (failures.size() < kMaxReportedFailures)
            failures.push_back(std::move(ce));
        else
            truncated = true;
    }
};

std::vector<Int> range_values(const IntRange& r);
std::string range_str(const IntRange& r);

// Splits items into contiguous chunks, one worker per chunk, and merges the
// chunk sinks in item order so the outcome is independent of thread count.
VerificationReport run_grid(std::string identity, std::string params,
                            const std::vector<Int>& items,
                            const std::function<void(const Int&, ReportSink&)>& check,
                            unsigned threads);

// Steps until the anchor is reached; nullopt when the budget runs out first.
std::optional<std::uint64_t> steps_to_anchor(const Map& map, const Int& start,
                                             std::uint64_t budget);

}  // namespace detail

}  // namespace collatz
