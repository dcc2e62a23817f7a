// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "restore/restore.hpp"

namespace {

using Clock = std::chrono::steady_clock;

std::string fixture(const std::string& name) { return std::string(RESTORE_FIXTURES) + "/" + name; }

restore::Problem load(const std::string& name) { return restore::Problem(restore::load_instance(fixture(name))); }

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Collects failures but keeps counting, so the detail line shows totals.
struct Tally {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        if (failures++ == 0) first = what;
    }
    Outcome outcome(const std::string& summary) const {
        Outcome o;
        o.pass = failures == 0;
        o.detail = summary + ", " + std::to_string(checks) + " checks, " + std::to_string(failures) +
                   " violations" + (first.empty() ? "" : " (first: " + first + ")");
        return o;
    }
};

bool leq(double a, double b, double tol) { return a <= b + tol; }

// The 500-instance batch shared by criteria 3 to 7.
struct BatchCase {
    restore::Problem problem;
    int crews;
    restore::AlgoResult lp_list;
    restore::AlgoResult convert;
    double optimum;
    double single;
    double infinite;
};

std::vector<BatchCase> build_batch() {
    std::vector<BatchCase> out;
    restore::GenParams gen;
    gen.min_nodes = 2;
    gen.max_nodes = 9;  // at most 8 lines
    for (std::uint64_t k = 0; k < 500; ++k) {
        gen.seed = restore::instance_seed(2024, k);
        const restore::Problem pb(restore::generate_random(gen));
        for (int m : {2, 3}) {
            BatchCase c{pb, m, restore::lp_list_schedule(pb, m), restore::convert_single_to_m(pb, m),
                        restore::brute_force_optimal(pb, m).harm,
                        restore::optimal_single_crew_harm(pb).harm,
                        restore::infinite_crew_energization(pb).harm};
            out.push_back(std::move(c));
        }
    }
    return out;
}

std::string tag(std::size_t k, const BatchCase& c) {
    return "case " + std::to_string(k / 2) + " m=" + std::to_string(c.crews);
}

Outcome criterion1() {
    Tally t;
    const auto start = Clock::now();
    struct Expect {
        const char* file;
        double single, infinite, optimum, alg1, alg2;
    };
    for (const Expect& e : {Expect{"two_island.json", 32, 22, 22, 22, 22},
                            Expect{"fork.json", 31, 18, 21, 21, 21}}) {
        const auto pb = load(e.file);
        const std::string f = e.file;
        t.expect(restore::optimal_single_crew_harm(pb).harm == e.single, f + " H1");
        t.expect(restore::infinite_crew_energization(pb).harm == e.infinite, f + " Hinf");
        t.expect(restore::brute_force_optimal(pb, 2).harm == e.optimum, f + " Hm");
        t.expect(restore::lp_list_schedule(pb, 2).report.harm == e.alg1, f + " lp-list");
        t.expect(restore::convert_single_to_m(pb, 2).report.harm == e.alg2, f + " convert");
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    t.expect(secs < 1.0, "runtime");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f s", secs);
    return t.outcome(buf);
}

Outcome criterion2() {
    Tally t;
    const auto start = Clock::now();
    restore::GenParams gen;
    gen.max_nodes = 10;  // oracle limit is 9 lines
    gen.switch_probability = 0.5;
    std::size_t used = 0;
    for (std::uint64_t k = 0; used < 200; ++k) {
        gen.seed = restore::instance_seed(77, k);
        const restore::Problem pb(restore::generate_random(gen));
        if (pb.islands.size() > 7) continue;
        ++used;
        t.expect(restore::optimal_single_crew_harm(pb).harm == restore::brute_force_optimal(pb, 1).harm,
                 "instance " + std::to_string(k));
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    t.expect(secs < 60.0, "runtime");
    char buf[64];
    std::snprintf(buf, sizeof buf, "200 instances, %.2f s", secs);
    return t.outcome(buf);
}

Outcome criterion3(const std::vector<BatchCase>& batch, double secs) {
    Tally t;
    double worst1 = 0.0, worst2 = 0.0;
    for (std::size_t k = 0; k < batch.size(); ++k) {
        const auto& c = batch[k];
        const double m = c.crews;
        t.expect(leq(c.lp_list.report.harm, 2.0 * c.optimum, 1e-9), tag(k, c) + " lp-list");
        t.expect(leq(c.convert.report.harm, (2.0 - 1.0 / m) * c.optimum, 1e-9), tag(k, c) + " convert");
        if (c.optimum > 0) {
            worst1 = std::max(worst1, c.lp_list.report.harm / c.optimum);
            worst2 = std::max(worst2, c.convert.report.harm / c.optimum);
        }
    }
    t.expect(secs < 300.0, "runtime");
    char buf[128];
    std::snprintf(buf, sizeof buf, "worst ratios lp-list %.4f convert %.4f, batch %.2f s", worst1, worst2,
                  secs);
    return t.outcome(buf);
}

Outcome criterion4(const std::vector<BatchCase>& batch) {
    Tally t;
    for (std::size_t k = 0; k < batch.size(); ++k) {
        const auto& c = batch[k];
        const auto& pb = c.problem;
        const auto s = c.lp_list.schedule.start_times(pb.line_count());
        const auto done = c.lp_list.schedule.completion_times(pb.line_count());
        double prefix = 0.0;
        for (restore::LineIndex j : c.lp_list.priority) {
            t.expect(leq(s[j], prefix / c.crews, 1e-9), tag(k, c) + " start " + pb.instance.lines[j].id);
            t.expect(done[j] <= 2.0 * c.lp_list.lp->completion[j] + 1e-6,
                     tag(k, c) + " completion " + pb.instance.lines[j].id);
            prefix += pb.repair_times[j];
        }
    }
    return t.outcome("per-job start and completion bounds");
}

Outcome criterion5(const std::vector<BatchCase>& batch) {
    Tally t;
    for (std::size_t k = 0; k < batch.size(); ++k) {
        const auto& c = batch[k];
        const auto& pb = c.problem;
        // Independent evaluation of both reference schedules.
        const auto single = restore::optimal_single_crew_harm(pb);
        const auto inf = restore::infinite_crew_energization(pb);
        const double m = c.crews;
        for (restore::IslandIndex i = 0; i < pb.islands.size(); ++i) {
            const double bound = single.energization[i] / m + (m - 1.0) / m * inf.energization[i];
            t.expect(c.convert.energization[i] <= bound + 1e-9, tag(k, c) + " " + restore::IslandSet::name(i));
        }
    }
    return t.outcome("per-island conversion bound");
}

Outcome criterion6(const std::vector<BatchCase>& batch) {
    Tally t;
    for (std::size_t k = 0; k < batch.size(); ++k) {
        const auto& c = batch[k];
        t.expect(leq(c.single / c.crews, c.optimum, 1e-9), tag(k, c) + " single-crew bound");
        t.expect(leq(c.infinite, c.optimum, 1e-9), tag(k, c) + " infinite-crew bound");
    }
    return t.outcome("lower bounds on the m-crew optimum");
}

Outcome criterion7(const std::vector<BatchCase>& batch) {
    Tally t;
    for (std::size_t k = 0; k < batch.size(); ++k) {
        const auto& c = batch[k];
        t.expect(leq(c.lp_list.lp->objective, c.optimum, 1e-6), tag(k, c) + " H^LP");
    }
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> ndist(1, 12), mdist(1, 4), pdist(0, 9);
    std::uniform_real_distribution<double> cdist(0.0, 25.0);
    double worst_gap = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = ndist(rng), m = mdist(rng);
        std::vector<double> cvec(n), p(n);
        for (int j = 0; j < n; ++j) {
            p[j] = pdist(rng);
            cvec[j] = cdist(rng);
        }
        const auto exact = restore::exhaustive_separation(cvec, p, m);
        const auto prefix = restore::max_prefix_violation(cvec, p, m);
        const bool verdict = restore::separate(cvec, p, m).has_value();
        const double gap = std::abs(prefix.violation - exact.violation);
        worst_gap = std::max(worst_gap, gap);
        t.expect(gap <= 1e-9, "vector " + std::to_string(trial) + " value");
        t.expect(verdict == (exact.violation > restore::kCutTolerance), "vector " + std::to_string(trial) + " verdict");
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "LP bound plus 200 separation vectors, worst gap %.2e", worst_gap);
    return t.outcome(buf);
}

Outcome criterion8() {
    Tally t;
    const auto pb = load("graham_m3.json");
    const auto adversarial =
        restore::convert_single_to_m(pb, 3, restore::WithinIslandOrder::AdversarialLongestLast);
    const double opt = restore::brute_force_optimal(pb, 3).harm;
    double omega = 0.0;
    for (const auto& isl : pb.islands.islands) omega += isl.weight;
    t.expect(pb.islands.size() == 1, "single island");
    t.expect(opt == 3.0 * omega, "oracle optimum 3w");
    t.expect(adversarial.schedule.makespan() == 5.0, "makespan 5");
    // 5/3 compared exactly through integers.
    t.expect(3.0 * adversarial.report.harm == 5.0 * opt, "ratio 5/3");
    char buf[96];
    std::snprintf(buf, sizeof buf, "H = %g vs optimum %g, ratio %.6f", adversarial.report.harm, opt,
                  adversarial.report.harm / opt);
    return t.outcome(buf);
}

Outcome criterion9() {
    Tally t;
    const auto pb = load("feeder123.json");
    t.expect(pb.instance.nodes.size() == 123, "123 nodes");
    t.expect(pb.instance.switch_count() == 6, "6 switch lines");
    t.expect(pb.islands.size() == 7, "7 islands");
    t.expect(pb.precedence.topological_order.size() == 7, "7 vertices");
    t.expect(pb.precedence.edge_count() == 6, "6 precedence edges");
    std::size_t roots = 0;
    for (auto par : pb.precedence.parent) roots += par == restore::kNone;
    t.expect(roots == 1, "single root");
    return t.outcome(std::to_string(pb.islands.size()) + " islands, " +
                     std::to_string(pb.precedence.edge_count()) + " edges");
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<Outcome()>>> plan;
    plan.emplace_back("1 fixture exactness", criterion1);
    plan.emplace_back("2 single-crew optimum equals enumeration", criterion2);

    const auto batch_start = Clock::now();
    std::vector<BatchCase> batch;
    std::string batch_error;
    try {
        batch = build_batch();
    } catch (const std::exception& e) {
        batch_error = e.what();
    }
    const double batch_secs = std::chrono::duration<double>(Clock::now() - batch_start).count();
    auto on_batch = [&](std::function<Outcome(const std::vector<BatchCase>&)> f) {
        return [&, f] {
            if (!batch_error.empty()) return Outcome{false, "batch failed: " + batch_error};
            return f(batch);
        };
    };
    plan.emplace_back("3 approximation ratios", on_batch([&](const auto& b) { return criterion3(b, batch_secs); }));
    plan.emplace_back("4 per-job list bounds", on_batch(criterion4));
    plan.emplace_back("5 per-island conversion bound", on_batch(criterion5));
    plan.emplace_back("6 optimum lower bounds", on_batch(criterion6));
    plan.emplace_back("7 LP soundness and exact separation", on_batch(criterion7));
    plan.emplace_back("8 tightness witness", criterion8);
    plan.emplace_back("9 feeder partition", criterion9);

    int failed = 0;
    for (auto& [name, run] : plan) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("%s criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    }
    std::printf("%d of %zu criteria failed\n", failed, plan.size());
    return failed ? 1 : 0;
}
