#include "collatz/verify.hpp"

#include "collatz/trajectory.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace collatz {

namespace detail {

std::vector<Int> range_values(const IntRange& r) {
    std::vector<Int> out;
    for (Int v = r.lo; v <= r.hi; ++v) out.push_back(v);
    return out;
}

std::string range_str(const IntRange& r) {
    return r.lo.str() + ".." + r.hi.str();
}

VerificationReport run_grid(std::string identity, std::string params,
                            const std::vector<Int>& items,
                            const std::function<void(const Int&, ReportSink&)>& check,
                            unsigned threads) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    VerificationReport report{std::move(identity), std::move(params), 0, {}, false};
    const std::size_t n_items = items.size();
    if (n_items == 0) return report;

    const auto workers = static_cast<unsigned>(
        std::min<std::size_t>(threads, n_items));
    std::vector<ReportSink> sinks(workers);
    if (workers <= 1) {
        for (const Int& item : items) check(item, sinks[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t lo = n_items * w / workers;
            const std::size_t hi = n_items * (w + 1) / workers;
            pool.emplace_back([&items, &check, &sinks, lo, hi, w] {
                for (std::size_t i = lo; i < hi; ++i) check(items[i], sinks[w]);
            });
        }
        for (auto& t : pool) t.join();
    }

    for (ReportSink& s : sinks) {
        report.checked += s.checked;
        if (s.truncated) report.truncated = true;
        for (auto& ce : s.failures) {
            if (report.failures.size() < kMaxReportedFailures) {
                report.failures.push_back(std::move(ce));
            } else {
                report.truncated = true;
                break;
            }
        }
    }
    return report;
}

std::optional<std::uint64_t> steps_to_anchor(const Map& map, const Int& start,
                                             std::uint64_t budget) {
    map.validate_start(start);
    const Int anchor = map.anchor();
    Int cur = start;
    for (std::uint64_t s = 0;; ++s) {
        if (cur == anchor) return s;
        if (s == budget) return std::nullopt;
        cur = map.step(cur);
    }
}

}  // namespace detail

namespace {

std::string grid_params(const IntRange& N_range, const IntRange& n_range,
                        std::uint32_t k_max) {
    return "N=" + detail::range_str(N_range) + " n=" + detail::range_str(n_range) +
           " k<=" + std::to_string(k_max);
}

std::string pair_params(const IntRange& N_range,
                        const std::vector<std::pair<Int, Int>>& nm_pairs,
                        std::uint32_t k_max) {
    std::string s = "N=" + detail::range_str(N_range) + " pairs=";
    for (std::size_t i = 0; i < nm_pairs.size(); ++i) {
        if (i) s += ',';
        s += "(" + nm_pairs[i].first.str() + "," + nm_pairs[i].second.str() + ")";
    }
    return s + " k<=" + std::to_string(k_max);
}

}  // namespace

VerificationReport verify_conjugacy(const IntRange& N_range, const IntRange& n_range,
                                    std::uint32_t k_max, unsigned threads) {
    auto check = [ns = detail::range_values(n_range), k_max](const Int& N,
                                                             detail::ReportSink& sink) {
        if (N == 0) return;  // outside T's domain
        for (const Int& n : ns) {
            const MapParam p{n};
            const Int a = p.shift();
            Int t = N, f = N + a;
            for (std::uint32_t k = 0;; ++k) {
                sink.count();
                if (f - a != t) {
                    Int got = f - a;
                    sink.fail({N, {}, n, {}, k,
                               "shifted family iterate gives " + got.str() +
                                   ", direct iterate gives " + t.str()});
                }
                if (k == k_max) break;
                t = t_step(t);
                f = f_step(p, f);
            }
        }
    };
    return detail::run_grid("thm2.1", grid_params(N_range, n_range, k_max),
                            detail::range_values(N_range), check, threads);
}

VerificationReport verify_average(const IntRange& N_range, const IntRange& n_range,
                                  std::uint32_t k_max, unsigned threads) {
    auto check = [ns = detail::range_values(n_range), k_max](const Int& N,
                                                             detail::ReportSink& sink) {
        if (N == 0) return;
        for (const Int& n : ns) {
            const MapParam p1{n};
            const MapParam p2{-n - 1};
            Int t = N, f1 = N + p1.shift(), f2 = N + p2.shift();
            for (std::uint32_t k = 0;; ++k) {
                sink.count();
                if (f1 + f2 != 2 * t) {
                    Int got = f1 + f2;
                    Int want = 2 * t;
                    sink.fail({N, {}, n, Int(-n - 1), k,
                               "mirror sum is " + got.str() + ", expected " + want.str()});
                }
                if (k == k_max) break;
                t = t_step(t);
                f1 = f_step(p1, f1);
                f2 = f_step(p2, f2);
            }
        }
    };
    return detail::run_grid("prop2.2", grid_params(N_range, n_range, k_max),
                            detail::range_values(N_range), check, threads);
}

VerificationReport verify_partial_mean(const IntRange& N_range, std::uint32_t n_max,
                                       std::uint32_t k_max, unsigned threads) {
    std::string params = "N=" + detail::range_str(N_range) +
                         " n<=" + std::to_string(n_max) + " k<=" + std::to_string(k_max);
    auto check = [n_max, k_max](const Int& N, detail::ReportSink& sink) {
        if (N == 0) return;
        const std::vector<Int> t = iterate(Map::collatz(), N, k_max).terms;
        std::vector<Int> sums(t.size(), Int(0));
        for (std::uint32_t j = 0; j <= n_max; ++j) {
            const MapParam p1{Int(j)};
            const MapParam p2{Int(-static_cast<long long>(j) - 1)};
            Int f1 = N + p1.shift(), f2 = N + p2.shift();
            const Int scale = 2 * (Int(j) + 1);
            for (std::uint32_t k = 0;; ++k) {
                sums[k] += f1 + f2;
                sink.count();
                if (sums[k] != scale * t[k]) {
                    sink.fail({N, {}, Int(j), {}, k,
                               "partial sum over " + std::to_string(j + 1) +
                                   " mirror pairs is " + sums[k].str() + ", expected " +
                                   Int(scale * t[k]).str()});
                }
                if (k == k_max) break;
                f1 = f_step(p1, f1);
                f2 = f_step(p2, f2);
            }
        }
    };
    return detail::run_grid("thm2.2", std::move(params),
                            detail::range_values(N_range), check, threads);
}

VerificationReport verify_offset_invariance(const IntRange& N_range, const IntRange& n_range,
                                            std::uint32_t k_max, unsigned threads) {
    auto check = [ns = detail::range_values(n_range), k_max](const Int& N,
                                                             detail::ReportSink& sink) {
        if (ns.empty()) return;
        const MapParam ref{ns.front()};
        std::vector<Int> reference;
        reference.reserve(k_max + 1);
        {
            Int f = N + ref.shift();
            for (std::uint32_t k = 0;; ++k) {
                reference.push_back(f - ref.shift());
                if (k == k_max) break;
                f = f_step(ref, f);
            }
        }
        for (std::size_t i = 1; i < ns.size(); ++i) {
            const MapParam p{ns[i]};
            Int f = N + p.shift();
            for (std::uint32_t k = 0;; ++k) {
                sink.count();
                if (f - p.shift() != reference[k]) {
                    Int got = f - p.shift();
                    sink.fail({N, {}, ns[i], ref.n, k,
                               "shifted value is " + got.str() + " for n=" + ns[i].str() +
                                   " but " + reference[k].str() + " for n=" + ref.n.str()});
                }
                if (k == k_max) break;
                f = f_step(p, f);
            }
        }
    };
    return detail::run_grid("cor2.1", grid_params(N_range, n_range, k_max),
                            detail::range_values(N_range), check, threads);
}

VerificationReport verify_offset_constancy(const IntRange& N_range,
                                           const std::vector<std::pair<Int, Int>>& nm_pairs,
                                           std::uint32_t k_max, unsigned threads) {
    auto check = [nm_pairs, k_max](const Int& N, detail::ReportSink& sink) {
        for (const auto& [n, m] : nm_pairs) {
            const MapParam pn{n}, pm{m};
            const Int expected = 2 * (n - m);
            Int f = N + pn.shift(), g = N + pm.shift();
            for (std::uint32_t k = 0;; ++k) {
                sink.count();
                if (f - g != expected) {
                    Int got = f - g;
                    sink.fail({N, {}, n, m, k,
                               "orbit difference is " + got.str() + ", expected " +
                                   expected.str()});
                }
                if (k == k_max) break;
                f = f_step(pn, f);
                g = f_step(pm, g);
            }
        }
    };
    return detail::run_grid("cor2.2", pair_params(N_range, nm_pairs, k_max),
                            detail::range_values(N_range), check, threads);
}

VerificationReport verify_bound_transfer(const IntRange& N_range,
                                         const std::vector<std::pair<Int, Int>>& nm_pairs,
                                         std::uint32_t k_max, unsigned threads) {
    auto check = [nm_pairs, k_max](const Int& N, detail::ReportSink& sink) {
        for (const auto& [n, m] : nm_pairs) {
            const MapParam pn{n}, pm{m};
            const Int expected = 2 * (n - m);
            Int f = N + pn.shift(), g = N + pm.shift();
            Int max_f = f, min_f = f, max_g = g, min_g = g;
            for (std::uint32_t k = 0;; ++k) {
                max_f = std::max(max_f, f);
                min_f = std::min(min_f, f);
                max_g = std::max(max_g, g);
                min_g = std::min(min_g, g);
                sink.count();
                if (max_f - max_g != expected || min_f - min_g != expected) {
                    Int dmax = max_f - max_g, dmin = min_f - min_g;
                    sink.fail({N, {}, n, m, k,
                               "running max/min differences are " + dmax.str() + "/" +
                                   dmin.str() + ", expected " + expected.str()});
                }
                if (k == k_max) break;
                f = f_step(pn, f);
                g = f_step(pm, g);
            }
        }
    };
    return detail::run_grid("cor2.3", pair_params(N_range, nm_pairs, k_max),
                            detail::range_values(N_range), check, threads);
}

VerificationReport verify_parity_opposition(const IntRange& N_range, const IntRange& n_range,
                                            std::uint32_t k_max, unsigned threads) {
    auto check = [ns = detail::range_values(n_range), k_max](const Int& N,
                                                             detail::ReportSink& sink) {
        if (N == 0) return;
        for (const Int& n : ns) {
            const MapParam p{n};
            Int t = N, f = N + p.shift();
            for (std::uint32_t k = 0;; ++k) {
                sink.count();
                if (is_odd(t) == is_odd(f)) {
                    sink.fail({N, {}, n, {}, k,
                               "iterates " + t.str() + " and " + f.str() +
                                   " share parity"});
                }
                if (k == k_max) break;
                t = t_step(t);
                f = f_step(p, f);
            }
        }
    };
    return detail::run_grid("cor2.4", grid_params(N_range, n_range, k_max),
                            detail::range_values(N_range), check, threads);
}

VerificationReport verify_parity_duality(const IntRange& N_range, const IntRange& n_range,
                                         std::uint32_t k_max, unsigned threads) {
    auto check = [ns = detail::range_values(n_range), k_max](const Int& N,
                                                             detail::ReportSink& sink) {
        if (N == 0) return;
        const ParityVector tv = parity_vector(Map::collatz(), N, k_max);
        for (const Int& n : ns) {
            const MapParam p{n};
            const ParityVector fv =
                parity_vector(Map::family(n), N + p.shift(), k_max);
            for (std::uint32_t j = 0; j < k_max; ++j) {
                sink.count();
                if (tv.bits[j] != fv.bits[j]) {
                    sink.fail({N, {}, n, {}, std::uint64_t{j},
                               "indicator bits differ at position " + std::to_string(j)});
                }
            }
            sink.count();
            if (count_indicators(tv) != count_indicators(fv)) {
                sink.fail({N, {}, n, {}, std::uint64_t{k_max},
                           "indicator counts differ: " +
                               std::to_string(count_indicators(tv)) + " vs " +
                               std::to_string(count_indicators(fv))});
            }
        }
    };
    return detail::run_grid("cor2.5", grid_params(N_range, n_range, k_max),
                            detail::range_values(N_range), check, threads);
}

VerificationReport verify_coeff_pair_relation(const IntRange& N_range,
                                              const std::vector<std::pair<Int, Int>>& nm_pairs,
                                              std::uint32_t k_max, unsigned threads) {
    auto check = [nm_pairs, k_max](const Int& N, detail::ReportSink& sink) {
        for (const auto& [n, m] : nm_pairs) {
            const MapParam pn{n}, pm{m};
            const Int sn = N + pn.shift(), sm = N + pm.shift();
            const Rat offset = Rat(2 * (n - m));
            Int f = sn, g = sm;
            Int pow3_f = 1, pow3_g = 1;
            for (std::uint32_t k = 0;; ++k) {
                sink.count();
                if (pow3_f != pow3_g) {
                    sink.fail({N, {}, n, m, k, "lead coefficients differ"});
                } else {
                    const Rat lead = make_rational(pow3_f, Int(1) << k);
                    const Rat adj_n = Rat(f) - lead * sn;
                    const Rat adj_m = Rat(g) - lead * sm;
                    if (adj_n - adj_m != offset * (1 - lead)) {
                        sink.fail({N, {}, n, m, k,
                                   "adjustment difference is " + rational_str(adj_n - adj_m) +
                                       ", expected " + rational_str(offset * (1 - lead))});
                    }
                }
                if (k == k_max) break;
                if (is_even(f)) pow3_f *= 3;
                if (is_even(g)) pow3_g *= 3;
                f = f_step(pn, f);
                g = f_step(pm, g);
            }
        }
    };
    return detail::run_grid("cor2.6", pair_params(N_range, nm_pairs, k_max),
                            detail::range_values(N_range), check, threads);
}

VerificationReport verify_coeff_relation(const IntRange& N_range, const IntRange& n_range,
                                         std::uint32_t k_max, unsigned threads) {
    auto check = [ns = detail::range_values(n_range), k_max](const Int& N,
                                                             detail::ReportSink& sink) {
        if (N == 0) return;
        for (const Int& n : ns) {
            const MapParam p{n};
            const Int a = p.shift();
            const Int s = N + a;
            Int t = N, f = s;
            Int pow3_t = 1, pow3_f = 1;
            for (std::uint32_t k = 0;; ++k) {
                sink.count();
                if (pow3_t != pow3_f) {
                    sink.fail({N, {}, n, {}, k, "lead coefficients differ"});
                } else {
                    const Rat lead = make_rational(pow3_t, Int(1) << k);
                    const Rat adj_t = Rat(t) - lead * N;
                    const Rat adj_f = Rat(f) - lead * s;
                    const Rat expected = adj_f + Rat(a) * (lead - 1);
                    if (adj_t != expected) {
                        sink.fail({N, {}, n, {}, k,
                                   "direct adjustment is " + rational_str(adj_t) +
                                       ", transfer gives " + rational_str(expected)});
                    }
                }
                if (k == k_max) break;
                if (is_odd(t)) pow3_t *= 3;
                if (is_even(f)) pow3_f *= 3;
                t = t_step(t);
                f = f_step(p, f);
            }
        }
    };
    return detail::run_grid("prop2.3", grid_params(N_range, n_range, k_max),
                            detail::range_values(N_range), check, threads);
}

VerificationReport verify_lower_bound(const IntRange& offset_range, const IntRange& n_range,
                                      std::uint32_t k_max, unsigned threads) {
    if (!offset_range.empty() && offset_range.lo < 0)
        throw std::invalid_argument("verify_lower_bound: offsets must be non-negative");
    std::string params = "offset=" + detail::range_str(offset_range) +
                         " n=" + detail::range_str(n_range) + " k<=" + std::to_string(k_max);
    auto check = [ns = detail::range_values(n_range), k_max](const Int& offset,
                                                             detail::ReportSink& sink) {
        for (const Int& n : ns) {
            const MapParam p{n};
            const Int anchor = p.anchor();
            Int cur = anchor + offset;
            const Int start = cur;
            for (std::uint32_t k = 0;; ++k) {
                sink.count();
                if (cur < anchor) {
                    sink.fail({{}, start, n, {}, k,
                               "iterate " + cur.str() + " fell below the anchor " +
                                   anchor.str()});
                }
                if (k == k_max) break;
                cur = f_step(p, cur);
            }
        }
    };
    return detail::run_grid("cor2.8", std::move(params),
                            detail::range_values(offset_range), check, threads);
}

VerificationReport verify_reach(const MapParam& p, const Int& max_offset,
                                std::uint64_t budget, unsigned threads) {
    if (max_offset < 0)
        throw std::invalid_argument("verify_reach: max_offset must be non-negative");
    std::string params = "n=" + p.n.str() + " offset=0.." + max_offset.str() +
                         " budget=" + std::to_string(budget);
    const Map fam = Map::family(p.n);
    const Map t = Map::collatz();
    auto check = [fam, t, p, budget](const Int& offset, detail::ReportSink& sink) {
        const Int start = p.anchor() + offset;
        const Int N = offset + 1;
        const auto f_steps = detail::steps_to_anchor(fam, start, budget);
        const auto t_steps = detail::steps_to_anchor(t, N, budget);
        sink.count();
        if (!f_steps || !t_steps || *f_steps != *t_steps) {
            std::string detail_msg;
            if (!f_steps)
                detail_msg = "family orbit did not reach the anchor within budget";
            else if (!t_steps)
                detail_msg = "direct orbit did not reach 1 within budget";
            else
                detail_msg = "stopping times differ: family " + std::to_string(*f_steps) +
                             " vs direct " + std::to_string(*t_steps);
            sink.fail({N, start, p.n, {},
                       f_steps ? std::optional<std::uint64_t>(*f_steps) : std::nullopt,
                       std::move(detail_msg)});
        }
    };
    return detail::run_grid("thm2.3", std::move(params),
                            detail::range_values(IntRange{0, max_offset}), check, threads);
}

}  // namespace collatz
