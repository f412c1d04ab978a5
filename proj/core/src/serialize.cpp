#include "collatz/serialize.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace collatz {

namespace {

using nlohmann::json;

json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

Int int_from_json(const json& j) {
    if (j.is_string()) return parse_int(j.get<std::string>());
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    throw std::invalid_argument("expected an integer or a decimal string");
}

json map_to_json(const Map& map) {
    json j;
    if (map.is_family()) {
        j["kind"] = "F";
        j["n"] = int_to_json(map.param().n);
    } else {
        j["kind"] = "T";
    }
    return j;
}

Map map_from_json(const json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "T") return Map::collatz();
    if (kind == "F") return Map::family(int_from_json(j.at("n")));
    throw std::invalid_argument("unknown map kind \"" + kind + "\"");
}

json terms_to_json(const std::vector<Int>& terms) {
    json arr = json::array();
    for (const Int& t : terms) arr.push_back(int_to_json(t));
    return arr;
}

std::vector<Int> terms_from_json(const json& arr) {
    std::vector<Int> out;
    out.reserve(arr.size());
    for (const json& j : arr) out.push_back(int_from_json(j));
    return out;
}

json stop_to_json(const StopReason& stop) {
    json j;
    if (std::holds_alternative<ReachedAnchor>(stop)) {
        j["kind"] = "anchor";
    } else if (const auto* cyc = std::get_if<CycleDetected>(&stop)) {
        j["kind"] = "cycle";
        j["cycle"] = terms_to_json(cyc->cycle);
    } else {
        j["kind"] = "budget";
        j["max_steps"] = std::get<BudgetExhausted>(stop).max_steps;
    }
    return j;
}

StopReason stop_from_json(const json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "anchor") return ReachedAnchor{};
    if (kind == "cycle") return CycleDetected{terms_from_json(j.at("cycle"))};
    if (kind == "budget") return BudgetExhausted{j.at("max_steps").get<std::uint64_t>()};
    throw std::invalid_argument("unknown stop kind \"" + kind + "\"");
}

std::string stop_text(const StopReason& stop) {
    if (std::holds_alternative<ReachedAnchor>(stop)) return "reached anchor";
    if (const auto* cyc = std::get_if<CycleDetected>(&stop)) {
        std::string s = "cycle:";
        for (const Int& v : cyc->cycle) s += " " + v.str();
        return s;
    }
    return "budget exhausted (" +
           std::to_string(std::get<BudgetExhausted>(stop).max_steps) + " steps)";
}

std::string json_dump(const json& j) { return j.dump(2) + "\n"; }

std::string html_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string to_text(const Trajectory& tr) {
    std::ostringstream os;
    os << "map=" << tr.map.name() << " start=" << tr.start << " steps=" << tr.steps << "\n";
    os << "terms:";
    for (const Int& t : tr.terms) os << " " << t;
    os << "\nstop: " << stop_text(tr.stop) << "\n";
    return os.str();
}

std::string to_csv(const Trajectory& tr) {
    std::ostringstream os;
    os << "index,value\n";
    for (std::size_t i = 0; i < tr.terms.size(); ++i) os << i << "," << tr.terms[i] << "\n";
    return os.str();
}

std::string to_json(const Trajectory& tr) {
    json j;
    j["map"] = map_to_json(tr.map);
    j["start"] = int_to_json(tr.start);
    j["steps"] = tr.steps;
    j["terms"] = terms_to_json(tr.terms);
    j["stop"] = stop_to_json(tr.stop);
    return json_dump(j);
}

Trajectory trajectory_from_json(const std::string& text) {
    const json j = json::parse(text);
    Trajectory tr;
    tr.map = map_from_json(j.at("map"));
    tr.start = int_from_json(j.at("start"));
    tr.steps = j.at("steps").get<std::uint64_t>();
    tr.terms = terms_from_json(j.at("terms"));
    tr.stop = stop_from_json(j.at("stop"));
    return tr;
}

std::string to_text(const CoeffTable& table) {
    std::ostringstream os;
    os << "map=" << table.map.name() << " start=" << table.start << "\n";
    os << "k\tcount\tlead\tadjustment\tterm\n";
    for (const CoeffRow& r : table.rows)
        os << r.k << "\t" << r.count << "\t" << rational_str(r.lead_coeff) << "\t"
           << rational_str(r.adjustment) << "\t" << r.term << "\n";
    return os.str();
}

std::string to_csv(const CoeffTable& table) {
    std::ostringstream os;
    os << "k,count,lead,adjustment,term\n";
    for (const CoeffRow& r : table.rows)
        os << r.k << "," << r.count << "," << rational_str(r.lead_coeff) << ","
           << rational_str(r.adjustment) << "," << r.term << "\n";
    return os.str();
}

std::string to_json(const CoeffTable& table) {
    json rows = json::array();
    for (const CoeffRow& r : table.rows) {
        json row;
        row["k"] = r.k;
        row["count"] = r.count;
        row["lead"] = rational_str(r.lead_coeff);
        row["adjustment"] = rational_str(r.adjustment);
        row["term"] = int_to_json(r.term);
        rows.push_back(std::move(row));
    }
    json j;
    j["map"] = map_to_json(table.map);
    j["start"] = int_to_json(table.start);
    j["rows"] = std::move(rows);
    return json_dump(j);
}

CoeffTable coeff_table_from_json(const std::string& text) {
    const json j = json::parse(text);
    CoeffTable table{map_from_json(j.at("map")), int_from_json(j.at("start")), {}};
    for (const json& row : j.at("rows")) {
        CoeffRow r;
        r.k = row.at("k").get<std::uint64_t>();
        r.count = row.at("count").get<std::uint64_t>();
        r.lead_coeff = parse_rational(row.at("lead").get<std::string>());
        r.adjustment = parse_rational(row.at("adjustment").get<std::string>());
        r.term = int_from_json(row.at("term"));
        table.rows.push_back(std::move(r));
    }
    return table;
}

std::string to_text(const VerificationReport& report) {
    std::ostringstream os;
    os << "identity: " << report.identity << "\n";
    os << "params: " << report.params << "\n";
    os << "checked: " << report.checked << "\n";
    os << "result: " << (report.passed() ? "PASS" : "FAIL") << "\n";
    if (!report.failures.empty()) {
        os << "counterexamples (" << report.failures.size()
           << (report.truncated ? "+, truncated" : "") << "):\n";
        for (const Counterexample& ce : report.failures) {
            os << " ";
            if (ce.N) os << " N=" << *ce.N;
            if (ce.start) os << " start=" << *ce.start;
            if (ce.n) os << " n=" << *ce.n;
            if (ce.m) os << " m=" << *ce.m;
            if (ce.k) os << " k=" << *ce.k;
            os << ": " << ce.detail << "\n";
        }
    }
    return os.str();
}

std::string to_json(const VerificationReport& report) {
    json failures = json::array();
    for (const Counterexample& ce : report.failures) {
        json f;
        if (ce.N) f["N"] = int_to_json(*ce.N);
        if (ce.start) f["start"] = int_to_json(*ce.start);
        if (ce.n) f["n"] = int_to_json(*ce.n);
        if (ce.m) f["m"] = int_to_json(*ce.m);
        if (ce.k) f["k"] = *ce.k;
        f["detail"] = ce.detail;
        failures.push_back(std::move(f));
    }
    json j;
    j["identity"] = report.identity;
    j["params"] = report.params;
    j["checked"] = report.checked;
    j["passed"] = report.passed();
    j["truncated"] = report.truncated;
    j["failures"] = std::move(failures);
    return json_dump(j);
}

VerificationReport report_from_json(const std::string& text) {
    const json j = json::parse(text);
    VerificationReport report;
    report.identity = j.at("identity").get<std::string>();
    report.params = j.at("params").get<std::string>();
    report.checked = j.at("checked").get<std::uint64_t>();
    report.truncated = j.at("truncated").get<bool>();
    for (const json& f : j.at("failures")) {
        Counterexample ce;
        if (f.contains("N")) ce.N = int_from_json(f.at("N"));
        if (f.contains("start")) ce.start = int_from_json(f.at("start"));
        if (f.contains("n")) ce.n = int_from_json(f.at("n"));
        if (f.contains("m")) ce.m = int_from_json(f.at("m"));
        if (f.contains("k")) ce.k = f.at("k").get<std::uint64_t>();
        ce.detail = f.at("detail").get<std::string>();
        report.failures.push_back(std::move(ce));
    }
    return report;
}

std::string to_text(const GenMatrix& m) {
    std::vector<std::vector<std::string>> rendered(m.rows());
    std::size_t width = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        rendered[r].reserve(m.columns);
        for (std::uint32_t c = 0; c < m.columns; ++c) {
            rendered[r].push_back(m.cell_str(r, c));
            width = std::max(width, rendered[r].back().size());
        }
    }
    std::ostringstream os;
    for (const auto& row : rendered) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << "  ";
            os << std::string(width - row[c].size(), ' ') << row[c];
        }
        os << "\n";
    }
    return os.str();
}

std::string to_csv(const GenMatrix& m) {
    std::ostringstream os;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::uint32_t c = 0; c < m.columns; ++c) {
            if (c) os << ",";
            os << m.cell_str(r, c);
        }
        os << "\n";
    }
    return os.str();
}

std::string to_json(const GenMatrix& m) {
    json cells = json::array();
    for (const auto& row : m.cells) cells.push_back(terms_to_json(row));
    json j;
    j["mode"] = mode_name(m.mode);
    j["n"] = int_to_json(m.n);
    j["top_offset"] = int_to_json(m.top_offset);
    j["columns"] = m.columns;
    j["descending"] = m.descending;
    j["cells"] = std::move(cells);
    return json_dump(j);
}

GenMatrix matrix_from_json(const std::string& text) {
    const json j = json::parse(text);
    GenMatrix m;
    const auto mode = j.at("mode").get<std::string>();
    if (mode == "symbolic") m.mode = MatrixMode::Symbolic;
    else if (mode == "concrete") m.mode = MatrixMode::Concrete;
    else if (mode == "collatz") m.mode = MatrixMode::Collatz;
    else throw std::invalid_argument("unknown matrix mode \"" + mode + "\"");
    m.n = int_from_json(j.at("n"));
    m.top_offset = int_from_json(j.at("top_offset"));
    m.columns = j.at("columns").get<std::uint32_t>();
    m.descending = j.at("descending").get<bool>();
    for (const json& row : j.at("cells")) m.cells.push_back(terms_from_json(row));
    return m;
}

std::string to_html(const GenMatrix& m) {
    std::ostringstream os;
    os << "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n";
    os << "<title>" << mode_name(m.mode) << " matrix</title>\n";
    os << "<style>\n"
          "table { border-collapse: collapse; font-family: monospace; }\n"
          "td { border: 1px solid #555; padding: 2px 8px; text-align: right; }\n"
          ".chroma-0 { background: #9ed69e; }\n"
          ".chroma-1 { background: #9ec2ec; }\n"
          ".chroma-2 { background: #f0e292; }\n"
          ".chroma-3 { background: #ec9e9e; }\n"
          "</style>\n</head>\n<body>\n";
    os << "<h1>" << mode_name(m.mode) << " matrix";
    if (m.mode == MatrixMode::Concrete) os << " (n = " << m.n << ")";
    os << ", " << m.rows() << "&times;" << m.columns << "</h1>\n<table>\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << "<tr>";
        for (std::uint32_t c = 0; c < m.columns; ++c) {
            os << "<td class=\"chroma-" << m.cell_chroma(r, c).cls << "\">"
               << html_escape(m.cell_str(r, c)) << "</td>";
        }
        os << "</tr>\n";
    }
    os << "</table>\n<p>residue classes: 0 green, 1 blue, 2 yellow, 3 red</p>\n"
          "</body>\n</html>\n";
    return os.str();
}

}  // namespace collatz
