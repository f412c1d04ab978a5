// maps.hpp — the accelerated Collatz step T and the affine family F_n.
//
//   T(N)    = N/2            if N even        F_n(P) = (3P - 2n)/2   if P even
//           = (3N + 1)/2     if N odd                = (P + 2n+1)/2  if P odd
//
// Every F_n swaps the pair (2n+2, 2n+3) and is conjugate to T under the
// shift N -> N + (2n+1).
#pragma once

#include "collatz/integer.hpp"

#include <optional>
#include <string>

namespace collatz {

// Family index n with its characteristic points.
struct MapParam {
    Int n;

    Int shift() const { return 2 * n + 1; }           // conjugation offset A_n
    Int anchor() const { return 2 * n + 2; }          // first element of the stable pair
    Int anchor_partner() const { return 2 * n + 3; }  // second element of the stable pair

    bool operator==(const MapParam&) const = default;
};

// One step of T; N = 0 is outside the domain and throws std::domain_error.
Int t_step(const Int& value);

// One step of F_n; total on the integers.
Int f_step(const MapParam& p, const Int& value);

// A step map: either T or a family member F_n.
class Map {
public:
    static Map collatz() { return Map(std::nullopt); }
    static Map family(Int n) { return Map(MapParam{std::move(n)}); }

    bool is_family() const { return param_.has_value(); }
    const MapParam& param() const;  // throws std::logic_error for T

    // Fixed target of forward runs: 1 for T, 2n+2 for F_n.
    Int anchor() const;

    Int step(const Int& value) const;

    // Parity indicator recorded in parity vectors: odd terms for T, even for F_n.
    bool indicator(const Int& value) const;

    // Throws std::domain_error if `start` is outside the map's domain (0 for T).
    void validate_start(const Int& start) const;

    std::string name() const;  // "T", "F_3", "F_-2", ...

    bool operator==(const Map&) const = default;

private:
    explicit Map(std::optional<MapParam> p) : param_(std::move(p)) {}
    std::optional<MapParam> param_;
};

// Conjecture domain D(n) = {P : P >= 2n+2} and its complement.
class Domain {
public:
    static Domain conjecture(Int n) { return Domain(std::move(n), true); }
    static Domain complement(Int n) { return Domain(std::move(n), false); }

    const Int& n() const { return n_; }
    bool is_conjecture() const { return conjecture_; }
    bool contains(const Int& p) const;

    bool operator==(const Domain&) const = default;

private:
    Domain(Int n, bool c) : n_(std::move(n)), conjecture_(c) {}
    Int n_;
    bool conjecture_;
};

}  // namespace collatz
