#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "collatz/maps.hpp"

#include <random>
#include <stdexcept>

using namespace collatz;

TEST_CASE("t_step on evens halves and on odds applies (3N+1)/2") {
    CHECK(t_step(Int(2)) == 1);
    CHECK(t_step(Int(16)) == 8);
    CHECK(t_step(Int(15)) == 23);
    CHECK(t_step(Int(27)) == 41);
    CHECK(t_step(Int(1)) == 2);
    CHECK(t_step(Int(-2)) == -1);
    CHECK(t_step(Int(-5)) == -7);
    CHECK(t_step(Int(-1)) == -1);
}

TEST_CASE("t_step rejects 0") {
    CHECK_THROWS_AS(t_step(Int(0)), std::domain_error);
}

TEST_CASE("f_step examples across family indices") {
    CHECK(f_step(MapParam{3}, Int(34)) == 48);
    CHECK(f_step(MapParam{1}, Int(4)) == 5);
    CHECK(f_step(MapParam{0}, Int(7)) == 4);
    CHECK(f_step(MapParam{-2}, Int(24)) == 38);
    CHECK(f_step(MapParam{0}, Int(0)) == 0);
    CHECK(f_step(MapParam{-3}, Int(-4)) == -3);
}

TEST_CASE("characteristic points of the family") {
    const MapParam p{5};
    CHECK(p.shift() == 11);
    CHECK(p.anchor() == 12);
    CHECK(p.anchor_partner() == 13);

    const MapParam q{-3};
    CHECK(q.shift() == -5);
    CHECK(q.anchor() == -4);
    CHECK(q.anchor_partner() == -3);
}

TEST_CASE("every family member swaps its anchor pair") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<long long> dist(-1'000'000'000LL, 1'000'000'000LL);
    for (int i = 0; i < 2000; ++i) {
        const MapParam p{Int(dist(rng))};
        CHECK(f_step(p, p.anchor()) == p.anchor_partner());
        CHECK(f_step(p, p.anchor_partner()) == p.anchor());
    }
}

TEST_CASE("the conjugation shift is itself a fixed point") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> dist(-1'000'000LL, 1'000'000LL);
    for (int i = 0; i < 500; ++i) {
        const MapParam p{Int(dist(rng))};
        CHECK(f_step(p, p.shift()) == p.shift());
    }
}

TEST_CASE("one family step mirrors one shifted T step") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long long> nd(-1000, 1000);
    std::uniform_int_distribution<long long> vd(-100000, 100000);
    for (int i = 0; i < 2000; ++i) {
        const MapParam p{Int(nd(rng))};
        Int N(vd(rng));
        if (N == 0) N = 1;
        CHECK(f_step(p, N + p.shift()) == t_step(N) + p.shift());
    }
}

TEST_CASE("Map dispatches to the right step function") {
    const Map t = Map::collatz();
    const Map f = Map::family(3);
    CHECK(t.step(Int(27)) == 41);
    CHECK(f.step(Int(34)) == 48);
    CHECK(t.anchor() == 1);
    CHECK(f.anchor() == 8);
    CHECK(t.name() == "T");
    CHECK(f.name() == "F_3");
    CHECK(Map::family(-2).name() == "F_-2");
    CHECK_FALSE(t.is_family());
    CHECK(f.is_family());
    CHECK(f.param().n == 3);
    CHECK_THROWS_AS(t.param(), std::logic_error);
}

TEST_CASE("Map indicator marks odd terms for T and even terms for the family") {
    CHECK(Map::collatz().indicator(Int(3)));
    CHECK_FALSE(Map::collatz().indicator(Int(4)));
    CHECK(Map::family(0).indicator(Int(4)));
    CHECK_FALSE(Map::family(0).indicator(Int(3)));
    CHECK(Map::collatz().indicator(Int(-5)));
    CHECK(Map::family(2).indicator(Int(-4)));
}

TEST_CASE("start validation rejects 0 only for T") {
    CHECK_THROWS_AS(Map::collatz().validate_start(Int(0)), std::domain_error);
    CHECK_NOTHROW(Map::collatz().validate_start(Int(-1)));
    CHECK_NOTHROW(Map::family(0).validate_start(Int(0)));
}

TEST_CASE("Map equality distinguishes T from family members") {
    CHECK(Map::collatz() == Map::collatz());
    CHECK(Map::family(3) == Map::family(3));
    CHECK_FALSE(Map::collatz() == Map::family(0));
    CHECK_FALSE(Map::family(3) == Map::family(4));
}

TEST_CASE("conjecture domain starts at the anchor") {
    const Domain d = Domain::conjecture(3);
    CHECK(d.contains(Int(8)));
    CHECK(d.contains(Int(100)));
    CHECK_FALSE(d.contains(Int(7)));

    const Domain c = Domain::complement(3);
    CHECK(c.contains(Int(7)));
    CHECK_FALSE(c.contains(Int(8)));
}

TEST_CASE("conjecture domain and complement partition the integers") {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<long long> dist(-1'000'000LL, 1'000'000LL);
    for (int i = 0; i < 2000; ++i) {
        const Int n(dist(rng) / 1000);
        const Int p(dist(rng));
        const bool in_d = Domain::conjecture(n).contains(p);
        const bool in_c = Domain::complement(n).contains(p);
        CHECK(in_d != in_c);
    }
}

TEST_CASE("integer helpers") {
    CHECK(floor_mod(Int(7), Int(4)) == 3);
    CHECK(floor_mod(Int(-5), Int(4)) == 3);
    CHECK(floor_mod(Int(-8), Int(4)) == 0);
    CHECK_THROWS_AS(floor_mod(Int(1), Int(0)), std::invalid_argument);

    CHECK(make_rational(Int(3), Int(-6)) == Rat(-1) / 2);
    CHECK(rational_str(make_rational(Int(9), Int(4))) == "9/4");
    CHECK(rational_str(Rat(0)) == "0/1");
    CHECK(rational_str(make_rational(Int(-5), Int(4))) == "-5/4");
    CHECK_THROWS_AS(make_rational(Int(1), Int(0)), std::invalid_argument);

    CHECK(pow3_over_pow2(2, 2) == make_rational(Int(9), Int(4)));
    CHECK(pow3_over_pow2(0, 0) == 1);
    CHECK(pow3_over_pow2(1, 3) == make_rational(Int(3), Int(8)));

    CHECK(parse_int("-42") == -42);
    CHECK(parse_int("+7") == 7);
    CHECK(parse_int("123456789012345678901234567890") ==
          Int("123456789012345678901234567890"));
    CHECK_THROWS_AS(parse_int(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_int("12x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int("-"), std::invalid_argument);

    CHECK(parse_rational("9/4") == make_rational(Int(9), Int(4)));
    CHECK(parse_rational("-3/6") == make_rational(Int(-1), Int(2)));
    CHECK(parse_rational("5") == Rat(5));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}
