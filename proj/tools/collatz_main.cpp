// collatz_main.cpp — command-line front end for orbits, identity checks,
// orbit matrices, closed-form tables, and anchor-reach sweeps.
#include "collatz/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

namespace {

using namespace collatz;

struct CliConfig {
    // shared
    std::string map_kind = "T";
    std::string n = "0";
    std::string start = "1";
    std::string format = "text";
    std::string out_path;
    unsigned threads = 0;

    // traj
    std::uint64_t steps = 10;
    bool until = false;
    std::uint64_t budget = 10000;

    // verify
    std::string identity;
    std::string N_range = "1..100";
    std::string n_range = "0..10";
    std::string pairs;
    std::string offsets = "0..100";
    std::uint32_t k_max = 32;
    std::uint32_t n_max = 10;

    // matrix
    std::string mode = "symbolic";
    std::string top = "16";
    std::uint32_t cols = 6;
    bool ascending = false;
    std::string subst;
    bool check_chroma = false;
    std::string samples = "-2,-1,0,1,3";

    // reach
    std::string max_offset = "100";
};

IntRange parse_range(const std::string& text) {
    const auto sep = text.find("..", 1);  // skip a leading minus sign
    if (sep == std::string::npos) {
        Int v = parse_int(text);
        return IntRange{v, v};
    }
    return IntRange{parse_int(text.substr(0, sep)), parse_int(text.substr(sep + 2))};
}

std::vector<std::pair<Int, Int>> parse_pairs(const std::string& text) {
    std::vector<std::pair<Int, Int>> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        const auto colon = item.find(':', 1);
        if (colon == std::string::npos)
            throw std::invalid_argument("pair \"" + item + "\" is not of the form n:m");
        out.emplace_back(parse_int(item.substr(0, colon)), parse_int(item.substr(colon + 1)));
        pos = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("at least one n:m pair is required");
    return out;
}

std::vector<Int> parse_list(const std::string& text) {
    std::vector<Int> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(parse_int(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

Int single_value(const IntRange& r, const char* what) {
    if (r.lo != r.hi)
        throw std::invalid_argument(std::string(what) + " must be a single integer");
    return r.lo;
}

Map make_map(const CliConfig& cfg) {
    if (cfg.map_kind == "T") return Map::collatz();
    return Map::family(parse_int(cfg.n));
}

int emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot open \"" << out_path << "\" for writing\n";
        return 2;
    }
    out << content;
    return 0;
}

int cmd_traj(const CliConfig& cfg) {
    const Map map = make_map(cfg);
    const Int start = parse_int(cfg.start);
    const Trajectory tr =
        cfg.until ? run_until(map, start, cfg.budget) : iterate(map, start, cfg.steps);
    if (cfg.format == "csv") return emit(to_csv(tr), cfg.out_path);
    if (cfg.format == "json") return emit(to_json(tr), cfg.out_path);
    return emit(to_text(tr), cfg.out_path);
}

int report_result(const VerificationReport& report, const CliConfig& cfg) {
    const int rc = emit(cfg.format == "json" ? to_json(report) : to_text(report),
                        cfg.out_path);
    if (rc != 0) return rc;
    return report.passed() ? 0 : 1;
}

int cmd_verify(const CliConfig& cfg) {
    const IntRange N = parse_range(cfg.N_range);
    const IntRange n = parse_range(cfg.n_range);
    const std::string& id = cfg.identity;
    VerificationReport report;
    if (id == "thm2.1") {
        report = verify_conjugacy(N, n, cfg.k_max, cfg.threads);
    } else if (id == "prop2.2") {
        report = verify_average(N, n, cfg.k_max, cfg.threads);
    } else if (id == "thm2.2") {
        report = verify_partial_mean(N, cfg.n_max, cfg.k_max, cfg.threads);
    } else if (id == "cor2.1") {
        report = verify_offset_invariance(N, n, cfg.k_max, cfg.threads);
    } else if (id == "cor2.2") {
        report = verify_offset_constancy(N, parse_pairs(cfg.pairs), cfg.k_max, cfg.threads);
    } else if (id == "cor2.3") {
        report = verify_bound_transfer(N, parse_pairs(cfg.pairs), cfg.k_max, cfg.threads);
    } else if (id == "cor2.4") {
        report = verify_parity_opposition(N, n, cfg.k_max, cfg.threads);
    } else if (id == "cor2.5") {
        report = verify_parity_duality(N, n, cfg.k_max, cfg.threads);
    } else if (id == "cor2.6") {
        report = verify_coeff_pair_relation(N, parse_pairs(cfg.pairs), cfg.k_max, cfg.threads);
    } else if (id == "prop2.3") {
        report = verify_coeff_relation(N, n, cfg.k_max, cfg.threads);
    } else if (id == "cor2.8") {
        report = verify_lower_bound(parse_range(cfg.offsets), n, cfg.k_max, cfg.threads);
    } else if (id == "thm2.3") {
        const MapParam p{single_value(n, "--n for thm2.3")};
        report = verify_reach(p, parse_int(cfg.max_offset), cfg.budget, cfg.threads);
    } else {
        throw std::invalid_argument("unknown identity \"" + id + "\"");
    }
    return report_result(report, cfg);
}

int cmd_matrix(const CliConfig& cfg) {
    const Int top = parse_int(cfg.top);
    const bool descending = !cfg.ascending;
    if (cfg.check_chroma) {
        const VerificationReport report =
            verify_chromatic_equivalence(top, cfg.cols, parse_list(cfg.samples));
        return report_result(report, cfg);
    }
    GenMatrix m;
    if (!cfg.subst.empty()) {
        const GenMatrix sym =
            build_matrix(MatrixMode::Symbolic, 0, top, cfg.cols, descending);
        m = (cfg.subst == "-1/2") ? substitute_collatz_half(sym)
                                  : substitute(sym, parse_int(cfg.subst));
    } else {
        MatrixMode mode = MatrixMode::Symbolic;
        if (cfg.mode == "concrete") mode = MatrixMode::Concrete;
        else if (cfg.mode == "collatz") mode = MatrixMode::Collatz;
        m = build_matrix(mode, parse_int(cfg.n), top, cfg.cols, descending);
    }
    if (cfg.format == "csv") return emit(to_csv(m), cfg.out_path);
    if (cfg.format == "json") return emit(to_json(m), cfg.out_path);
    if (cfg.format == "html") return emit(to_html(m), cfg.out_path);
    return emit(to_text(m), cfg.out_path);
}

int cmd_coeffs(const CliConfig& cfg) {
    const Map map = make_map(cfg);
    const CoeffTable table = coefficient_table(map, parse_int(cfg.start), cfg.k_max);
    if (cfg.format == "csv") return emit(to_csv(table), cfg.out_path);
    if (cfg.format == "json") return emit(to_json(table), cfg.out_path);
    return emit(to_text(table), cfg.out_path);
}

int cmd_reach(const CliConfig& cfg) {
    const MapParam p{parse_int(cfg.n)};
    const VerificationReport report =
        verify_reach(p, parse_int(cfg.max_offset), cfg.budget, cfg.threads);
    return report_result(report, cfg);
}

}  // namespace

int main(int argc, char** argv) {
    CliConfig cfg;
    CLI::App app{"orbit toolkit for the accelerated Collatz map and its affine family"};
    app.require_subcommand(1);

    const std::vector<std::string> identities = {"thm2.1", "prop2.2", "thm2.2",
                                                 "cor2.1", "cor2.2",  "cor2.3",
                                                 "cor2.4", "cor2.5",  "cor2.6",
                                                 "prop2.3", "cor2.8", "thm2.3"};

    auto* traj = app.add_subcommand("traj", "iterate one orbit");
    traj->add_option("--map", cfg.map_kind, "map kind")
        ->check(CLI::IsMember({"T", "F"}))
        ->capture_default_str();
    traj->add_option("--n", cfg.n, "family index (map F only)")->capture_default_str();
    traj->add_option("--start", cfg.start, "start value")->required();
    traj->add_option("--steps", cfg.steps, "number of steps for a fixed-length run")
        ->capture_default_str();
    traj->add_flag("--until", cfg.until, "run until anchor, cycle, or budget");
    traj->add_option("--budget", cfg.budget, "step budget for --until")
        ->capture_default_str();
    traj->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    traj->add_option("--out", cfg.out_path, "write output to a file");

    auto* verify = app.add_subcommand("verify", "check an identity over a grid");
    verify->add_option("--identity", cfg.identity, "identity token")
        ->check(CLI::IsMember(identities))
        ->required();
    verify->add_option("--N", cfg.N_range, "start range lo..hi (T-coordinates)")
        ->capture_default_str();
    verify->add_option("--n", cfg.n_range, "family index range lo..hi")
        ->capture_default_str();
    verify->add_option("--pairs", cfg.pairs, "n:m pairs, comma-separated (cor2.2/2.3/2.6)");
    verify->add_option("--offsets", cfg.offsets, "offset range lo..hi (cor2.8)")
        ->capture_default_str();
    verify->add_option("--kmax", cfg.k_max, "largest iterate depth")->capture_default_str();
    verify->add_option("--nmax", cfg.n_max, "largest mirror-pair index (thm2.2)")
        ->capture_default_str();
    verify->add_option("--max-offset", cfg.max_offset, "largest start offset (thm2.3)")
        ->capture_default_str();
    verify->add_option("--budget", cfg.budget, "step budget (thm2.3)")->capture_default_str();
    verify->add_option("--threads", cfg.threads, "worker threads (0 = auto)")
        ->capture_default_str();
    verify->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    verify->add_option("--out", cfg.out_path, "write output to a file");

    auto* matrix = app.add_subcommand("matrix", "build an orbit matrix");
    matrix->add_option("--mode", cfg.mode, "matrix mode")
        ->check(CLI::IsMember({"symbolic", "concrete", "collatz"}))
        ->capture_default_str();
    matrix->add_option("--n", cfg.n, "family index (concrete mode)")->capture_default_str();
    matrix->add_option("--top", cfg.top, "highest start offset")->capture_default_str();
    matrix->add_option("--cols", cfg.cols, "number of columns")->capture_default_str();
    matrix->add_flag("--ascending", cfg.ascending, "list rows from the anchor upward");
    matrix->add_option("--subst", cfg.subst,
                       "substitute into the symbolic matrix: an integer n or -1/2");
    matrix->add_flag("--check-chroma", cfg.check_chroma,
                     "verify color equality across substitutions instead of printing");
    matrix->add_option("--samples", cfg.samples, "n samples for --check-chroma")
        ->capture_default_str();
    matrix->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json", "html"}))
        ->capture_default_str();
    matrix->add_option("--out", cfg.out_path, "write output to a file");

    auto* coeffs = app.add_subcommand("coeffs", "closed-form coefficient table of one orbit");
    coeffs->add_option("--map", cfg.map_kind, "map kind")
        ->check(CLI::IsMember({"T", "F"}))
        ->capture_default_str();
    coeffs->add_option("--n", cfg.n, "family index (map F only)")->capture_default_str();
    coeffs->add_option("--start", cfg.start, "start value")->required();
    coeffs->add_option("--kmax", cfg.k_max, "largest truncation depth")->capture_default_str();
    coeffs->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    coeffs->add_option("--out", cfg.out_path, "write output to a file");

    auto* reach = app.add_subcommand("reach", "sweep starts for anchor reachability");
    reach->add_option("--n", cfg.n, "family index")->required();
    reach->add_option("--max-offset", cfg.max_offset, "largest start offset above the anchor")
        ->capture_default_str();
    reach->add_option("--budget", cfg.budget, "step budget per start")->capture_default_str();
    reach->add_option("--threads", cfg.threads, "worker threads (0 = auto)")
        ->capture_default_str();
    reach->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    reach->add_option("--out", cfg.out_path, "write output to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (traj->parsed()) return cmd_traj(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (matrix->parsed()) return cmd_matrix(cfg);
        if (coeffs->parsed()) return cmd_coeffs(cfg);
        if (reach->parsed()) return cmd_reach(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
