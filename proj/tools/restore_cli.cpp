// Command-line front end for the repair-crew scheduler.
//
//   restore validate FILE
//   restore islands FILE
//   restore schedule FILE --alg {lp-list|convert|single-optimal} [--crews M]
//                   [--dump-lp FILE] [--within-island-order ORDER] [--out FILE]
//   restore oracle FILE --crews M
//   restore bench --seed S --count K --max-lines N --crews LIST --out FILE.csv
//
// Exit codes: 0 success, 2 invalid input, 3 invariant violation, 1 other.

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "restore/restore.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitViolation = 3;

void emit(const restore::Json& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << doc.dump(2) << "\n";
    }
}

int crews_or_default(int flag, const restore::NetworkInstance& instance) {
    if (flag == 0) return instance.crews;
    if (flag < 0) throw restore::ValidationError(restore::ValidationError::Kind::InvalidCrews,
                                                 std::to_string(flag));
    return flag;
}

int cmd_validate(const std::string& path) {
    const auto instance = restore::load_instance(path);
    std::cout << "OK: " << instance.nodes.size() << " nodes, " << instance.lines.size()
              << " lines, " << instance.switch_count() << " switches, crews "
              << instance.crews << "\n";
    return kExitOk;
}

int cmd_islands(const std::string& path, const std::string& out) {
    const restore::Problem problem(restore::load_instance(path));
    emit(restore::islands_to_json(problem), out);
    return kExitOk;
}

struct ScheduleArgs {
    std::string path;
    std::string alg;
    int crews = 0;
    std::string dump_lp;
    std::string within = "given";
    std::string out;
};

int cmd_schedule(const ScheduleArgs& args) {
    using namespace restore;
    const Problem problem(load_instance(args.path));
    const int m = crews_or_default(args.crews, problem.instance);

    static const std::map<std::string, WithinIslandOrder> orders = {
        {"given", WithinIslandOrder::Given},
        {"reversed", WithinIslandOrder::Reversed},
        {"adversarial-longest-last", WithinIslandOrder::AdversarialLongestLast}};
    const auto within = orders.at(args.within);

    AlgoResult result;
    if (args.alg == kAlgLpList) {
        result = lp_list_schedule(problem, m);
        if (!args.dump_lp.empty()) {
            std::ofstream dump(args.dump_lp);
            if (!dump) throw std::runtime_error("cannot write " + args.dump_lp);
            dump_lp(dump, *result.lp);
        }
    } else if (args.alg == kAlgConvert) {
        result = convert_single_to_m(problem, m, within);
    } else {
        result = single_optimal(problem);
    }
    if (!args.dump_lp.empty() && args.alg != kAlgLpList)
        std::cerr << "note: --dump-lp only applies to lp-list\n";

    // The report must be reproducible from the schedule alone.
    const auto e = energization_times(result.schedule, problem.islands, problem.precedence);
    if (harm(e, problem.island_weights()) != result.report.harm)
        throw InvariantViolation("harm report does not match the schedule");
    if (args.alg == kAlgConvert) {
        const auto bound = conversion_bounds(problem, m);
        for (IslandIndex i = 0; i < bound.size(); ++i)
            if (result.energization[i] > bound[i] + 1e-9)
                throw InvariantViolation("conversion bound violated on " + IslandSet::name(i));
    }
    emit(result_to_json(problem, result), args.out);
    return kExitOk;
}

int cmd_oracle(const std::string& path, int crews_flag, const std::string& out) {
    using namespace restore;
    const Problem problem(load_instance(path));
    const int m = crews_or_default(crews_flag, problem.instance);
    const auto best = brute_force_optimal(problem, m);
    const auto bounds = check_bounds(problem, m);

    Json doc;
    doc["crews"] = m;
    doc["harm"] = best.harm;
    doc["lists_enumerated"] = best.lists_enumerated;
    doc["list"] = Json::array();
    for (LineIndex j : best.best_list) doc["list"].push_back(problem.instance.lines[j].id);
    doc["single_crew_optimum"] = bounds.single_crew;
    doc["infinite_crew_optimum"] = bounds.infinite_crew;
    doc["single_crew_slack"] = bounds.single_slack;
    doc["infinite_crew_slack"] = bounds.infinite_slack;
    emit(doc, out);
    return kExitOk;
}

struct BenchArgs {
    std::uint64_t seed = 1;
    std::size_t count = 100;
    std::size_t max_lines = 8;
    std::vector<int> crews = {2, 3};
    std::string out;
    std::string json;
    std::size_t threads = 0;
    double switch_probability = 0.4;
};

int cmd_bench(const BenchArgs& args) {
    using namespace restore;
    BenchParams params;
    params.gen.seed = args.seed;
    params.gen.min_nodes = 2;
    params.gen.max_nodes = args.max_lines + 1;
    params.gen.switch_probability = args.switch_probability;
    params.gen.crews = args.crews;
    params.count = args.count;
    params.threads = args.threads;

    std::vector<BenchRow> rows;
    try {
        rows = run_bench(params);
    } catch (const BenchViolation& v) {
        const std::string replay = (args.out.empty() ? std::string("bench") : args.out) +
                                   ".violation.json";
        std::ofstream(replay) << v.instance() << "\n";
        std::cerr << "invariant violation: " << v.what() << "\n"
                  << "offending instance written to " << replay << "\n";
        return kExitViolation;
    }

    if (args.out.empty()) {
        write_bench_csv(std::cout, rows);
    } else {
        std::ofstream csv(args.out);
        if (!csv) throw std::runtime_error("cannot write " + args.out);
        write_bench_csv(csv, rows);
    }
    if (!args.json.empty()) emit(bench_to_json(rows), args.json);

    std::size_t with_oracle = 0;
    double worst1 = 0.0, worst2 = 0.0;
    for (const auto& r : rows) {
        if (!r.h_oracle) continue;
        ++with_oracle;
        worst1 = std::max(worst1, *r.ratio_lp_list());
        worst2 = std::max(worst2, *r.ratio_convert());
    }
    std::cerr << rows.size() << " rows, " << with_oracle << " with oracle; worst ratio lp-list "
              << worst1 << ", convert " << worst2 << "; zero violations\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Repair-crew scheduling for partially switched distribution networks"};
    app.require_subcommand(1);

    std::string path, out;
    auto* validate = app.add_subcommand("validate", "Check an instance file");
    validate->add_option("instance", path, "Instance JSON")->required();

    auto* islands = app.add_subcommand("islands", "Print the island partition and precedence tree");
    islands->add_option("instance", path, "Instance JSON")->required();
    islands->add_option("--out", out, "Write JSON here instead of stdout");

    ScheduleArgs sched;
    auto* schedule = app.add_subcommand("schedule", "Build a crew schedule");
    schedule->add_option("instance", sched.path, "Instance JSON")->required();
    schedule->add_option("--alg", sched.alg, "Algorithm")
        ->required()
        ->check(CLI::IsMember({"lp-list", "convert", "single-optimal"}));
    schedule->add_option("--crews", sched.crews, "Crew count (default: from instance)")
        ->check(CLI::PositiveNumber);
    schedule->add_option("--dump-lp", sched.dump_lp, "Write the final LP and cut pool here");
    schedule->add_option("--within-island-order", sched.within, "Line order inside islands")
        ->check(CLI::IsMember({"given", "reversed", "adversarial-longest-last"}));
    schedule->add_option("--out", sched.out, "Write JSON here instead of stdout");

    int oracle_crews = 0;
    auto* oracle = app.add_subcommand("oracle", "Exact optimum by enumeration (<= 9 lines)");
    oracle->add_option("instance", path, "Instance JSON")->required();
    oracle->add_option("--crews", oracle_crews, "Crew count (default: from instance)")
        ->check(CLI::PositiveNumber);
    oracle->add_option("--out", out, "Write JSON here instead of stdout");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Seeded random batch with bound checks");
    bench->add_option("--seed", bench_args.seed, "Base seed");
    bench->add_option("--count", bench_args.count, "Number of instances");
    bench->add_option("--max-lines", bench_args.max_lines, "Largest line count")
        ->check(CLI::Range(1, 1000));
    bench->add_option("--crews", bench_args.crews, "Crew counts, e.g. 2,3")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    bench->add_option("--out", bench_args.out, "CSV output (default: stdout)");
    bench->add_option("--json", bench_args.json, "Also write rows as JSON");
    bench->add_option("--threads", bench_args.threads, "Worker threads (0: all cores)");
    bench->add_option("--switch-prob", bench_args.switch_probability, "Switch probability per line")
        ->check(CLI::Range(0.0, 1.0));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (*validate) return cmd_validate(path);
        if (*islands) return cmd_islands(path, out);
        if (*schedule) return cmd_schedule(sched);
        if (*oracle) return cmd_oracle(path, oracle_crews, out);
        if (*bench) return cmd_bench(bench_args);
    } catch (const restore::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitInvalid;
    } catch (const restore::SchemaError& e) {
        std::cerr << e.what() << "\n";
        return kExitInvalid;
    } catch (const restore::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitInvalid;
    } catch (const restore::TooLarge& e) {
        std::cerr << e.what() << "\n";
        return kExitInvalid;
    } catch (const restore::InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitFailure;
}
