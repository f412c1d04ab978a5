// matrix.hpp — orbit matrices over consecutive starts, symbolic in n.
//
// A matrix collects the first `columns` terms of the orbits started at every
// value from the anchor 2n+2 up to 2n+top_offset. Written as 2n+c, a cell is
// determined by its offset c alone: one symbolic matrix shadows the whole
// family, offsets evolving by c' = T(c-1) + 1. Substituting an integer n
// yields that member's concrete matrix; the half-integer substitution
// n = -1/2 (cell values c-1, starts 1..top_offset-1) yields the classical
// accelerated-Collatz matrix. Cells are colored by residue class mod 4 —
// of the value itself for classical matrices, of c-1 for affine ones — and
// corresponding cells share their color across the entire family.
#pragma once

#include "collatz/integer.hpp"
#include "collatz/verify.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace collatz {

enum class MatrixMode {
    Symbolic,  // cells store offsets c, representing 2n+c
    Concrete,  // cells store values 2n+c for a fixed integer n
    Collatz,   // cells store classical values c-1 (the n = -1/2 substitution)
};

std::string mode_name(MatrixMode mode);

// Symbolic cell 2n+offset.
struct AffineEntry {
    Int offset;

    std::string str() const;  // "2n+16", "2n", "2n-3"
    bool operator==(const AffineEntry&) const = default;
};

// Residue class mod 4 with the conventional color names.
struct ChromaClass {
    unsigned cls = 0;  // 0..3

    const char* color() const;  // green, blue, yellow, red
    bool operator==(const ChromaClass&) const = default;
};

ChromaClass chroma(const Int& collatz_value);  // value mod 4
ChromaClass chroma(const AffineEntry& cell);   // (offset - 1) mod 4

struct GenMatrix {
    MatrixMode mode = MatrixMode::Symbolic;
    Int n;           // meaningful for Concrete only
    Int top_offset;  // highest start offset (>= 2)
    std::uint32_t columns = 0;
    bool descending = true;  // row order of the start values
    std::vector<std::vector<Int>> cells;

    std::size_t rows() const { return cells.size(); }
    ChromaClass cell_chroma(std::size_t row, std::size_t col) const;
    // Rendered form of one cell ("2n+16" when symbolic, the value otherwise).
    std::string cell_str(std::size_t row, std::size_t col) const;

    bool operator==(const GenMatrix&) const = default;
};

// Builds the matrix with top_offset >= 2 and columns >= 1; `n` is consulted
// only in Concrete mode. Throws std::invalid_argument on bad dimensions.
GenMatrix build_matrix(MatrixMode mode, const Int& n, const Int& top_offset,
                       std::uint32_t columns, bool descending = true);

// Substitutes an integer n into a symbolic matrix (-> Concrete).
// Throws std::invalid_argument if the input is not symbolic.
GenMatrix substitute(const GenMatrix& symbolic, const Int& n_value);

// Substitutes n = -1/2 into a symbolic matrix (-> Collatz).
GenMatrix substitute_collatz_half(const GenMatrix& symbolic);

// Checks, cell by cell, that the symbolic matrix, its Collatz substitution,
// and its substitution at every n in `n_samples` (a) agree with matrices
// built directly from orbits and (b) carry identical colors.
VerificationReport verify_chromatic_equivalence(const Int& top_offset, std::uint32_t columns,
                                                const std::vector<Int>& n_samples);

}  // namespace collatz
