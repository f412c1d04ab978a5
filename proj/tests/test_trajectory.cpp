#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "collatz/trajectory.hpp"

#include <random>
#include <stdexcept>

using namespace collatz;

namespace {

std::vector<Int> ints(std::initializer_list<long long> vals) {
    return std::vector<Int>(vals.begin(), vals.end());
}

void check_step_invariant(const Trajectory& tr) {
    REQUIRE(!tr.terms.empty());
    CHECK(tr.terms.front() == tr.start);
    CHECK(tr.steps == tr.terms.size() - 1);
    for (std::size_t i = 0; i + 1 < tr.terms.size(); ++i)
        CHECK(tr.terms[i + 1] == tr.map.step(tr.terms[i]));
}

}  // namespace

TEST_CASE("iterate runs an exact number of steps") {
    const Trajectory tr = iterate(Map::collatz(), Int(15), 5);
    CHECK(tr.terms == ints({15, 23, 35, 53, 80, 40}));
    CHECK(tr.steps == 5);
    CHECK(tr.stop == StopReason{BudgetExhausted{5}});
    check_step_invariant(tr);

    const Trajectory f = iterate(Map::family(0), Int(16), 5);
    CHECK(f.terms == ints({16, 24, 36, 54, 81, 41}));

    const Trajectory zero = iterate(Map::family(3), Int(34), 0);
    CHECK(zero.terms == ints({34}));
    CHECK(zero.steps == 0);
}

TEST_CASE("iterate rejects 0 under T") {
    CHECK_THROWS_AS(iterate(Map::collatz(), Int(0), 3), std::domain_error);
    CHECK_THROWS_AS(iterate(Map::collatz(), Int(0), 0), std::domain_error);
    CHECK_NOTHROW(iterate(Map::family(2), Int(0), 3));
}

TEST_CASE("run_until stops at the anchor") {
    const Trajectory tr = run_until(Map::family(0), Int(7), 100);
    CHECK(tr.terms == ints({7, 4, 6, 9, 5, 3, 2}));
    CHECK(tr.steps == 6);
    CHECK(tr.stop == StopReason{ReachedAnchor{}});
    check_step_invariant(tr);
}

TEST_CASE("run_until stops immediately when starting on the anchor") {
    const Trajectory tr = run_until(Map::collatz(), Int(1), 100);
    CHECK(tr.terms == ints({1}));
    CHECK(tr.steps == 0);
    CHECK(tr.stop == StopReason{ReachedAnchor{}});

    const Trajectory f = run_until(Map::family(-4), Int(-6), 100);
    CHECK(f.steps == 0);
    CHECK(f.stop == StopReason{ReachedAnchor{}});
}

TEST_CASE("run_until detects a cycle below the anchor") {
    const Trajectory tr = run_until(Map::family(3), Int(2), 1000);
    CHECK(tr.terms == ints({2, 0, -3, 2}));
    CHECK(tr.steps == 3);
    CHECK(tr.stop == StopReason{CycleDetected{ints({-3, 2, 0})}});
    check_step_invariant(tr);
}

TEST_CASE("run_until detects negative cycles of T") {
    const Trajectory a = run_until(Map::collatz(), Int(-5), 1000);
    CHECK(a.terms == ints({-5, -7, -10, -5}));
    CHECK(a.stop == StopReason{CycleDetected{ints({-10, -5, -7})}});

    const Trajectory b = run_until(Map::collatz(), Int(-1), 1000);
    CHECK(b.terms == ints({-1, -1}));
    CHECK(b.stop == StopReason{CycleDetected{ints({-1})}});
    check_step_invariant(b);
}

TEST_CASE("run_until detects fixed points as one-element cycles") {
    const Trajectory tr = run_until(Map::family(3), Int(6), 1000);
    CHECK(tr.terms == ints({6, 6}));
    CHECK(tr.steps == 1);
    CHECK(tr.stop == StopReason{CycleDetected{ints({6})}});

    // the conjugation shift 2n+1 is always fixed
    const Trajectory s = run_until(Map::family(3), Int(7), 1000);
    CHECK(s.stop == StopReason{CycleDetected{ints({7})}});
}

TEST_CASE("run_until reports budget exhaustion honestly") {
    const Trajectory tr = run_until(Map::collatz(), Int(27), 3);
    CHECK(tr.terms == ints({27, 41, 62, 31}));
    CHECK(tr.steps == 3);
    CHECK(tr.stop == StopReason{BudgetExhausted{3}});
    check_step_invariant(tr);

    const Trajectory zero = run_until(Map::collatz(), Int(27), 0);
    CHECK(zero.terms == ints({27}));
    CHECK(zero.stop == StopReason{BudgetExhausted{0}});
}

TEST_CASE("run_until rejects 0 under T") {
    CHECK_THROWS_AS(run_until(Map::collatz(), Int(0), 10), std::domain_error);
}

TEST_CASE("canonical_cycle rotates the smallest element to the front") {
    CHECK(canonical_cycle(ints({2, 0, -3})) == ints({-3, 2, 0}));
    CHECK(canonical_cycle(ints({-5, -7, -10})) == ints({-10, -5, -7}));
    CHECK(canonical_cycle(ints({-10, -5, -7})) == ints({-10, -5, -7}));
    CHECK(canonical_cycle(ints({6})) == ints({6}));
    CHECK(canonical_cycle({}) == ints({}));
}

TEST_CASE("every positive start below 10000 reaches 1 under T") {
    for (long long N = 1; N <= 10000; ++N) {
        const Trajectory tr = run_until(Map::collatz(), Int(N), 100000);
        CHECK(tr.stop == StopReason{ReachedAnchor{}});
    }
}

TEST_CASE("random trajectories satisfy the step invariant") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<long long> nd(-50, 50);
    std::uniform_int_distribution<long long> vd(-100000, 100000);
    std::uniform_int_distribution<std::uint64_t> kd(0, 200);
    for (int i = 0; i < 300; ++i) {
        const bool family = (i % 2) == 0;
        const Map map = family ? Map::family(nd(rng)) : Map::collatz();
        Int start(vd(rng));
        if (!family && start == 0) start = 1;
        check_step_invariant(iterate(map, start, kd(rng)));
        check_step_invariant(run_until(map, start, kd(rng)));
    }
}

TEST_CASE("a detected cycle really is a cycle of the map") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long long> nd(-40, 40);
    std::uniform_int_distribution<long long> vd(-5000, 5000);
    int cycles_seen = 0;
    for (int i = 0; i < 400; ++i) {
        const Map map = Map::family(nd(rng));
        const Trajectory tr = run_until(map, Int(vd(rng)), 100000);
        const auto* cyc = std::get_if<CycleDetected>(&tr.stop);
        if (!cyc) continue;
        ++cycles_seen;
        const auto& c = cyc->cycle;
        REQUIRE(!c.empty());
        for (std::size_t j = 0; j < c.size(); ++j)
            CHECK(map.step(c[j]) == c[(j + 1) % c.size()]);
        // canonical rotation: smallest first
        for (const Int& v : c) CHECK(c.front() <= v);
    }
    CHECK(cycles_seen > 0);
}
