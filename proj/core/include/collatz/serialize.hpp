// serialize.hpp — text/CSV/JSON/HTML rendering and JSON round-trips.
//
// JSON encodes integers as numbers when they fit in 64 bits and as decimal
// strings otherwise; parsers accept both. Rationals travel as "p/q" strings.
#pragma once

#include "collatz/analysis.hpp"
#include "collatz/matrix.hpp"
#include "collatz/trajectory.hpp"
#include "collatz/verify.hpp"

#include <string>

namespace collatz {

std::string to_text(const Trajectory& tr);
std::string to_csv(const Trajectory& tr);
std::string to_json(const Trajectory& tr);
Trajectory trajectory_from_json(const std::string& text);

std::string to_text(const CoeffTable& table);
std::string to_csv(const CoeffTable& table);
std::string to_json(const CoeffTable& table);
CoeffTable coeff_table_from_json(const std::string& text);

std::string to_text(const VerificationReport& report);
std::string to_json(const VerificationReport& report);
VerificationReport report_from_json(const std::string& text);

std::string to_text(const GenMatrix& m);
std::string to_csv(const GenMatrix& m);
std::string to_json(const GenMatrix& m);
// Standalone page with one colored <td class="chroma-0..3"> per cell.
std::string to_html(const GenMatrix& m);
GenMatrix matrix_from_json(const std::string& text);

}  // namespace collatz
