#include "collatz/matrix.hpp"

#include "collatz/maps.hpp"

#include <stdexcept>

namespace collatz {

std::string mode_name(MatrixMode mode) {
    switch (mode) {
        case MatrixMode::Symbolic: return "symbolic";
        case MatrixMode::Concrete: return "concrete";
        case MatrixMode::Collatz: return "collatz";
    }
    throw std::logic_error("mode_name: unknown mode");
}

std::string AffineEntry::str() const {
    if (offset == 0) return "2n";
    if (offset > 0) return "2n+" + offset.str();
    return "2n" + offset.str();  // negative offsets carry their own sign
}

const char* ChromaClass::color() const {
    switch (cls & 3u) {
        case 0: return "green";
        case 1: return "blue";
        case 2: return "yellow";
        default: return "red";
    }
}

ChromaClass chroma(const Int& collatz_value) {
    return ChromaClass{static_cast<unsigned>(floor_mod(collatz_value, 4))};
}

ChromaClass chroma(const AffineEntry& cell) {
    return ChromaClass{static_cast<unsigned>(floor_mod(cell.offset - 1, 4))};
}

ChromaClass GenMatrix::cell_chroma(std::size_t row, std::size_t col) const {
    const Int& v = cells.at(row).at(col);
    switch (mode) {
        case MatrixMode::Symbolic: return chroma(AffineEntry{v});
        case MatrixMode::Concrete: return chroma(AffineEntry{v - 2 * n});
        case MatrixMode::Collatz: return chroma(v);
    }
    throw std::logic_error("cell_chroma: unknown mode");
}

std::string GenMatrix::cell_str(std::size_t row, std::size_t col) const {
    const Int& v = cells.at(row).at(col);
    return mode == MatrixMode::Symbolic ? AffineEntry{v}.str() : v.str();
}

GenMatrix build_matrix(MatrixMode mode, const Int& n, const Int& top_offset,
                       std::uint32_t columns, bool descending) {
    if (top_offset < 2)
        throw std::invalid_argument("build_matrix: top_offset must be >= 2");
    if (columns < 1)
        throw std::invalid_argument("build_matrix: columns must be >= 1");
    GenMatrix m{mode, mode == MatrixMode::Concrete ? n : Int(0), top_offset,
                columns, descending, {}};
    const MapParam p{m.n};
    const auto n_rows = static_cast<std::size_t>(top_offset - 1);
    m.cells.reserve(n_rows);
    for (std::size_t r = 0; r < n_rows; ++r) {
        const Int c = descending ? Int(top_offset - static_cast<long>(r))
                                 : Int(2 + static_cast<long>(r));
        Int cur;
        switch (mode) {
            case MatrixMode::Symbolic: cur = c; break;
            case MatrixMode::Concrete: cur = 2 * m.n + c; break;
            case MatrixMode::Collatz: cur = c - 1; break;
        }
        std::vector<Int> row;
        row.reserve(columns);
        row.push_back(cur);
        for (std::uint32_t j = 1; j < columns; ++j) {
            switch (mode) {
                case MatrixMode::Symbolic: cur = t_step(cur - 1) + 1; break;
                case MatrixMode::Concrete: cur = f_step(p, cur); break;
                case MatrixMode::Collatz: cur = t_step(cur); break;
            }
            row.push_back(cur);
        }
        m.cells.push_back(std::move(row));
    }
    return m;
}

GenMatrix substitute(const GenMatrix& symbolic, const Int& n_value) {
    if (symbolic.mode != MatrixMode::Symbolic)
        throw std::invalid_argument("substitute: input must be symbolic");
    GenMatrix m = symbolic;
    m.mode = MatrixMode::Concrete;
    m.n = n_value;
    for (auto& row : m.cells)
        for (auto& cell : row) cell += 2 * n_value;
    return m;
}

GenMatrix substitute_collatz_half(const GenMatrix& symbolic) {
    if (symbolic.mode != MatrixMode::Symbolic)
        throw std::invalid_argument("substitute_collatz_half: input must be symbolic");
    GenMatrix m = symbolic;
    m.mode = MatrixMode::Collatz;
    m.n = 0;
    for (auto& row : m.cells)
        for (auto& cell : row) cell -= 1;
    return m;
}

VerificationReport verify_chromatic_equivalence(const Int& top_offset, std::uint32_t columns,
                                                const std::vector<Int>& n_samples) {
    std::string params = "top=" + top_offset.str() + " cols=" + std::to_string(columns) +
                         " samples=" + std::to_string(n_samples.size());
    detail::ReportSink sink;
    const GenMatrix sym = build_matrix(MatrixMode::Symbolic, 0, top_offset, columns);

    auto compare = [&](const GenMatrix& sub, const GenMatrix& direct,
                       const std::optional<Int>& sample) {
        sink.count();
        if (sub != direct) {
            sink.fail({{}, {}, sample, {}, {},
                       "substituted matrix differs from the directly built " +
                           mode_name(direct.mode) + " matrix"});
            return;
        }
        for (std::size_t r = 0; r < sym.rows(); ++r) {
            for (std::uint32_t c = 0; c < columns; ++c) {
                sink.count();
                if (sym.cell_chroma(r, c) != sub.cell_chroma(r, c)) {
                    sink.fail({{}, sub.cells[r][0], sample, {}, std::uint64_t{c},
                               "cell color differs from the symbolic color at row " +
                                   std::to_string(r) + ", column " + std::to_string(c)});
                }
            }
        }
    };

    compare(substitute_collatz_half(sym), build_matrix(MatrixMode::Collatz, 0, top_offset, columns),
            std::nullopt);
    for (const Int& n : n_samples)
        compare(substitute(sym, n), build_matrix(MatrixMode::Concrete, n, top_offset, columns),
                n);

    VerificationReport report{"chroma", std::move(params), sink.checked,
                              std::move(sink.failures), sink.truncated};
    return report;
}

}  // namespace collatz
