#pragma once

// Batch runner: generates seeded instances, runs every algorithm, checks
// every bound and emits one row per (instance, crew count).

#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "restore/algos.hpp"
#include "restore/generator.hpp"
#include "restore/io.hpp"
#include "restore/oracle.hpp"

namespace restore {

struct BenchParams {
    GenParams gen;
    std::size_t count = 100;
    std::size_t threads = 0;  // 0: hardware concurrency
    std::size_t oracle_max_lines = kOracleMaxLines;
};

struct BenchRow {
    std::string instance;
    std::size_t lines = 0;
    std::size_t islands = 0;
    int crews = 1;
    double h_lp = 0.0;
    double h_lp_list = 0.0;
    double h_convert = 0.0;
    double h_single = 0.0;
    double h_infinite = 0.0;
    std::optional<double> h_oracle;
    double ms_lp_list = 0.0;
    double ms_convert = 0.0;
    double ms_oracle = 0.0;

    std::optional<double> ratio_lp_list() const {
        if (!h_oracle) return std::nullopt;
        return *h_oracle > 0.0 ? h_lp_list / *h_oracle : 1.0;
    }
    std::optional<double> ratio_convert() const {
        if (!h_oracle) return std::nullopt;
        return *h_oracle > 0.0 ? h_convert / *h_oracle : 1.0;
    }
};

/// An invariant failed; `instance` is the offending instance as JSON.
class BenchViolation : public InvariantViolation {
public:
    BenchViolation(const std::string& what, std::string instance)
        : InvariantViolation(what), instance_(std::move(instance)) {}

    const std::string& instance() const noexcept { return instance_; }

private:
    std::string instance_;
};

struct InstanceAudit {
    BenchRow row;
    std::vector<std::string> violations;
};

namespace detail {

inline double elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
        .count();
}

inline bool leq(double a, double b, double tol) { return a <= b + tol * (1.0 + std::abs(b)); }

}  // namespace detail

/// Runs both approximation algorithms (and the oracle when `with_oracle`)
/// on one instance and checks every proven inequality.
inline InstanceAudit audit_instance(const Problem& problem, int crews, bool with_oracle,
                                    std::string name = {}) {
    constexpr double kExact = 1e-9;
    constexpr double kLp = 1e-6;
    InstanceAudit audit;
    auto& row = audit.row;
    auto fail = [&](const std::string& msg) { audit.violations.push_back(msg); };

    row.instance = std::move(name);
    row.lines = problem.line_count();
    row.islands = problem.islands.size();
    row.crews = crews;
    const auto& p = problem.repair_times;
    const double m = crews;

    auto t0 = std::chrono::steady_clock::now();
    const AlgoResult alg1 = lp_list_schedule(problem, crews);
    row.ms_lp_list = detail::elapsed_ms(t0);
    t0 = std::chrono::steady_clock::now();
    const AlgoResult alg2 = convert_single_to_m(problem, crews);
    row.ms_convert = detail::elapsed_ms(t0);

    row.h_lp = alg1.lp->objective;
    row.h_lp_list = alg1.report.harm;
    row.h_convert = alg2.report.harm;
    row.h_single = *alg2.report.single_crew_optimum;
    row.h_infinite = *alg2.report.infinite_crew_optimum;

    // Start times against the list prefix, completions against the LP.
    const auto s1 = alg1.schedule.start_times(row.lines);
    const auto c1 = alg1.schedule.completion_times(row.lines);
    double prefix = 0.0;
    for (LineIndex j : alg1.priority) {
        if (!detail::leq(s1[j], prefix / m, kExact)) fail("lp-list start bound, line " + problem.instance.lines[j].id);
        if (!(c1[j] <= 2.0 * alg1.lp->completion[j] + kLp))
            fail("lp-list completion > 2 C^LP, line " + problem.instance.lines[j].id);
        prefix += p[j];
    }
    for (IslandIndex i = 0; i < row.islands; ++i)
        if (!(alg1.energization[i] <= 2.0 * alg1.lp->energization[i] + kLp))
            fail("lp-list energization > 2 E^LP, island " + IslandSet::name(i));
    if (!detail::leq(row.h_lp_list, 2.0 * row.h_lp, kLp)) fail("lp-list harm > 2 H^LP");

    const auto bound = conversion_bounds(problem, crews);
    for (IslandIndex i = 0; i < row.islands; ++i)
        if (!(alg2.energization[i] <= bound[i] + kExact))
            fail("convert energization bound, island " + IslandSet::name(i));

    if (with_oracle) {
        t0 = std::chrono::steady_clock::now();
        const auto oracle = brute_force_optimal(problem, crews);
        row.ms_oracle = detail::elapsed_ms(t0);
        const double opt = oracle.harm;
        row.h_oracle = opt;
        if (!detail::leq(row.h_lp_list, 2.0 * opt, kExact)) fail("lp-list harm > 2 H^{m,*}");
        if (!detail::leq(row.h_convert, (2.0 - 1.0 / m) * opt, kExact))
            fail("convert harm > (2 - 1/m) H^{m,*}");
        if (!detail::leq(row.h_single / m, opt, kExact)) fail("H^{m,*} < H^{1,*}/m");
        if (!detail::leq(row.h_infinite, opt, kExact)) fail("H^{m,*} < H^{inf,*}");
        if (!detail::leq(row.h_lp, opt, kLp)) fail("H^LP > H^{m,*}");
        if (!detail::leq(opt, row.h_lp_list, kExact) || !detail::leq(opt, row.h_convert, kExact))
            fail("oracle exceeds an algorithm's harm");
    }
    return audit;
}

/// Generates `count` instances and audits each for every crew count.
/// Rows come back in (instance, crew) order whatever the thread count.
/// Throws BenchViolation for the first offending instance in that order.
inline std::vector<BenchRow> run_bench(const BenchParams& params) {
    struct Slot {
        std::vector<BenchRow> rows;
        std::optional<BenchViolation> violation;
        std::exception_ptr error;
    };
    std::vector<Slot> slots(params.count);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t k = next++; k < params.count; k = next++) {
            Slot& slot = slots[k];
            try {
                GenParams gen = params.gen;
                gen.seed = instance_seed(params.gen.seed, k);
                const Problem problem(generate_random(gen));
                const bool oracle = problem.line_count() <= params.oracle_max_lines;
                const std::string name = detail::padded('i', k, 6);
                for (int m : params.gen.crews) {
                    auto audit = audit_instance(problem, m, oracle, name);
                    if (!audit.violations.empty()) {
                        std::ostringstream msg;
                        msg << "instance " << name << " m=" << m << ": " << audit.violations.front();
                        slot.violation.emplace(msg.str(), instance_to_json(problem.instance).dump(2));
                        break;
                    }
                    slot.rows.push_back(std::move(audit.row));
                }
            } catch (...) {
                slot.error = std::current_exception();
            }
        }
    };

    std::size_t threads = params.threads ? params.threads : std::thread::hardware_concurrency();
    threads = std::max<std::size_t>(1, std::min(threads, params.count));
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    std::vector<BenchRow> rows;
    for (auto& slot : slots) {
        if (slot.error) std::rethrow_exception(slot.error);
        if (slot.violation) throw *slot.violation;
        for (auto& r : slot.rows) rows.push_back(std::move(r));
    }
    return rows;
}

inline constexpr const char* kBenchCsvHeader =
    "instance,lines,islands,crews,h_lp,h_lp_list,h_convert,h_single,h_infinite,h_oracle,"
    "ratio_lp_list,ratio_convert,ms_lp_list,ms_convert,ms_oracle";

/// Number of trailing CSV columns holding wall times.
inline constexpr std::size_t kBenchTimingColumns = 3;

namespace detail {

inline std::string fmt_num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline std::string fmt_opt(const std::optional<double>& v) { return v ? fmt_num(*v) : ""; }

}  // namespace detail

inline void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    using detail::fmt_num;
    using detail::fmt_opt;
    out << kBenchCsvHeader << "\n";
    for (const auto& r : rows) {
        out << r.instance << ',' << r.lines << ',' << r.islands << ',' << r.crews << ','
            << fmt_num(r.h_lp) << ',' << fmt_num(r.h_lp_list) << ',' << fmt_num(r.h_convert) << ','
            << fmt_num(r.h_single) << ',' << fmt_num(r.h_infinite) << ',' << fmt_opt(r.h_oracle)
            << ',' << fmt_opt(r.ratio_lp_list()) << ',' << fmt_opt(r.ratio_convert()) << ','
            << fmt_num(r.ms_lp_list) << ',' << fmt_num(r.ms_convert) << ','
            << fmt_num(r.ms_oracle) << "\n";
    }
}

inline Json bench_to_json(const std::vector<BenchRow>& rows) {
    Json doc = Json::array();
    auto opt = [](const std::optional<double>& v) { return v ? Json(*v) : Json(); };
    for (const auto& r : rows) {
        doc.push_back({{"instance", r.instance},
                       {"lines", r.lines},
                       {"islands", r.islands},
                       {"crews", r.crews},
                       {"h_lp", r.h_lp},
                       {"h_lp_list", r.h_lp_list},
                       {"h_convert", r.h_convert},
                       {"h_single", r.h_single},
                       {"h_infinite", r.h_infinite},
                       {"h_oracle", opt(r.h_oracle)},
                       {"ratio_lp_list", opt(r.ratio_lp_list())},
                       {"ratio_convert", opt(r.ratio_convert())},
                       {"ms_lp_list", r.ms_lp_list},
                       {"ms_convert", r.ms_convert},
                       {"ms_oracle", r.ms_oracle}});
    }
    return doc;
}

}  // namespace restore
