#include <gtest/gtest.h>

#include "restore/algos.hpp"
#include "restore/generator.hpp"
#include "restore/oracle.hpp"
#include "test_support.hpp"

namespace {

using restore::LineIndex;
using restore::testing::lines_by_id;

restore::Problem fork() { return restore::Problem(restore::validate(restore::testing::fork_raw())); }
restore::Problem two_island() {
    return restore::Problem(restore::validate(restore::testing::two_island_raw()));
}

TEST(LpList, TwoIsland) {
    const auto pb = two_island();
    const auto r = restore::lp_list_schedule(pb, 2);
    EXPECT_EQ(r.priority, lines_by_id(pb.instance, {"e2", "e1"}));
    EXPECT_EQ(r.report.harm, 22.0);
    EXPECT_EQ(r.algorithm, "lp-list");
}

TEST(LpList, Fork) {
    const auto pb = fork();
    const auto r = restore::lp_list_schedule(pb, 2);
    // The LP optimum is not unique, so only midpoint order is checked.
    EXPECT_EQ(r.report.harm, 21.0);
    for (std::size_t k = 1; k < r.priority.size(); ++k)
        EXPECT_LE(r.lp->midpoints[r.priority[k - 1]], r.lp->midpoints[r.priority[k]] + 1e-9);
}

TEST(LpList, SingleLine) {
    const auto pb = restore::testing::load_problem("single_line.json");
    const auto r = restore::lp_list_schedule(pb, 1);
    ASSERT_EQ(r.schedule.assignments[0].size(), 1u);
    EXPECT_EQ(r.schedule.assignments[0][0].start, 0.0);
    EXPECT_EQ(r.report.harm, 12.0);
}

TEST(LpList, MidpointTieBreakPrefersUpstreamIsland) {
    const auto pb = two_island();
    // Equal midpoints: the root-island line goes first despite its larger index.
    std::vector<double> mid{1.0, 1.0};
    EXPECT_EQ(restore::midpoint_priority(pb, mid), (std::vector<LineIndex>{0, 1}));
    restore::RawInstance raw = restore::testing::two_island_raw();
    raw.lines[0].id = "z";  // root-island line now sorts last by id
    const restore::Problem swapped(restore::validate(raw));
    const auto root_line = *swapped.instance.find_line("z");
    const auto list = restore::midpoint_priority(swapped, mid);
    EXPECT_EQ(list.front(), root_line);
}

TEST(Convert, Fork) {
    const auto pb = fork();
    const auto r = restore::convert_single_to_m(pb, 2);
    EXPECT_EQ(r.priority, lines_by_id(pb.instance, {"a", "b", "c"}));
    EXPECT_EQ(r.report.harm, 21.0);
    const auto bound = restore::conversion_bounds(pb, 2);
    EXPECT_EQ(bound[2], 4.5);
    EXPECT_EQ(r.energization[2], 4.0);
}

TEST(Convert, TwoIsland) {
    const auto pb = two_island();
    const auto r = restore::convert_single_to_m(pb, 2);
    EXPECT_EQ(r.report.harm, 22.0);
    EXPECT_EQ(restore::conversion_bounds(pb, 2)[1], 2.5);
    EXPECT_EQ(r.energization[1], 2.0);
}

TEST(Convert, OneCrewEqualsSingleCrewOptimum) {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        restore::GenParams gen;
        gen.seed = seed;
        gen.max_nodes = 20;
        const restore::Problem pb(restore::generate_random(gen));
        EXPECT_EQ(restore::convert_single_to_m(pb, 1).report.harm,
                  restore::optimal_single_crew_harm(pb).harm);
    }
}

TEST(Convert, GrahamWitness) {
    const auto pb = restore::testing::load_problem("graham_m3.json");
    const auto adversarial =
        restore::convert_single_to_m(pb, 3, restore::WithinIslandOrder::AdversarialLongestLast);
    EXPECT_EQ(adversarial.schedule.makespan(), 5.0);
    EXPECT_EQ(adversarial.report.harm, 35.0);
    const auto given = restore::convert_single_to_m(pb, 3);
    EXPECT_EQ(given.report.harm, 21.0);
}

TEST(SingleOptimal, UsesOneCrew) {
    const auto pb = fork();
    const auto r = restore::single_optimal(pb);
    EXPECT_EQ(r.schedule.crews, 1);
    EXPECT_EQ(r.report.harm, 31.0);
}

TEST(AlgoResult, ReportRecomputable) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        restore::GenParams gen;
        gen.seed = seed;
        gen.max_nodes = 12;
        const restore::Problem pb(restore::generate_random(gen));
        for (const auto& r : {restore::lp_list_schedule(pb, 2), restore::convert_single_to_m(pb, 3)}) {
            const auto e = restore::energization_times(r.schedule, pb.islands, pb.precedence);
            EXPECT_EQ(restore::harm(e, pb.island_weights()), r.report.harm);
            EXPECT_EQ(e, r.energization);
        }
    }
}

// Per-job and per-island guarantees on random instances (oracle-free, so
// larger trees are fine here).
TEST(AlgoProperty, ProvenBounds) {
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        restore::GenParams gen;
        gen.seed = seed;
        gen.max_nodes = 25;
        gen.repair_min = 0;
        gen.repair_max = 9;
        const restore::Problem pb(restore::generate_random(gen));
        const int m = 2 + static_cast<int>(seed % 3);
        SCOPED_TRACE(seed);

        const auto a1 = restore::lp_list_schedule(pb, m);
        const auto c = a1.schedule.completion_times(pb.line_count());
        for (LineIndex j = 0; j < pb.line_count(); ++j) EXPECT_LE(c[j], 2.0 * a1.lp->completion[j] + 1e-6);
        for (std::size_t i = 0; i < pb.islands.size(); ++i)
            EXPECT_LE(a1.energization[i], 2.0 * a1.lp->energization[i] + 1e-6);
        EXPECT_LE(a1.report.harm, 2.0 * a1.lp->objective + 1e-6);

        const auto a2 = restore::convert_single_to_m(pb, m);
        const auto bound = restore::conversion_bounds(pb, m);
        for (std::size_t i = 0; i < pb.islands.size(); ++i) EXPECT_LE(a2.energization[i], bound[i] + 1e-9);
    }
}

}  // namespace
