#include <random>

#include <gtest/gtest.h>

#include "restore/simplex.hpp"
#include "test_support.hpp"

namespace {

using restore::LinearProgram;
using restore::LpError;

TEST(Simplex, SingleLowerBound) {
    LinearProgram lp;
    lp.objective = {1.0};
    lp.rows = {{{{0, 1.0}}, 1.0, "x>=1"}};
    const auto r = restore::simplex_solve(lp);
    EXPECT_NEAR(r.x[0], 1.0, 1e-12);
    EXPECT_NEAR(r.objective, 1.0, 1e-12);
}

TEST(Simplex, EnergizationAboveCompletion) {
    // minimize E s.t. E >= C, C >= 2; variables (C, E).
    LinearProgram lp;
    lp.objective = {0.0, 1.0};
    lp.rows = {{{{1, 1.0}, {0, -1.0}}, 0.0, ""}, {{{0, 1.0}}, 2.0, ""}};
    const auto r = restore::simplex_solve(lp);
    EXPECT_NEAR(r.x[0], 2.0, 1e-12);
    EXPECT_NEAR(r.x[1], 2.0, 1e-12);
}

TEST(Simplex, NegativeCostsUsePhaseOne) {
    // minimize -x - y s.t. -x >= -3, -y >= -2, x + y >= 1.
    LinearProgram lp;
    lp.objective = {-1.0, -1.0};
    lp.rows = {{{{0, -1.0}}, -3.0, ""}, {{{1, -1.0}}, -2.0, ""}, {{{0, 1.0}, {1, 1.0}}, 1.0, ""}};
    const auto r = restore::simplex_solve(lp);
    EXPECT_NEAR(r.objective, -5.0, 1e-9);
    EXPECT_NEAR(r.x[0], 3.0, 1e-9);
    EXPECT_NEAR(r.x[1], 2.0, 1e-9);
}

TEST(Simplex, Infeasible) {
    LinearProgram lp;
    lp.objective = {1.0};
    lp.rows = {{{{0, -1.0}}, 1.0, "x <= -1"}};
    try {
        restore::simplex_solve(lp);
        FAIL();
    } catch (const LpError& e) {
        EXPECT_EQ(e.kind(), LpError::Kind::Infeasible);
    }
}

TEST(Simplex, Unbounded) {
    LinearProgram lp;
    lp.objective = {-1.0};
    lp.rows = {{{{0, 1.0}}, 1.0, ""}};
    try {
        restore::simplex_solve(lp);
        FAIL();
    } catch (const LpError& e) {
        EXPECT_EQ(e.kind(), LpError::Kind::Unbounded);
    }
}

TEST(Simplex, PivotLimit) {
    LinearProgram lp;
    lp.objective = {1.0, 1.0};
    lp.rows = {{{{0, 1.0}}, 1.0, ""}, {{{1, 1.0}}, 1.0, ""}};
    restore::SimplexOptions opt;
    opt.max_pivots = 1;
    try {
        restore::simplex_solve(lp, opt);
        FAIL();
    } catch (const LpError& e) {
        EXPECT_EQ(e.kind(), LpError::Kind::IterationLimit);
    }
}

TEST(Simplex, WarmStartAfterAddingRows) {
    LinearProgram lp;
    lp.objective = {1.0, 2.0};
    lp.rows = {{{{0, 1.0}, {1, 1.0}}, 2.0, ""}};
    restore::SimplexSolver solver(lp);
    auto r = solver.solve();
    EXPECT_NEAR(r.objective, 2.0, 1e-12);
    solver.add_row({{{0, -1.0}}, -0.5, "x <= 0.5"});
    r = solver.solve();
    EXPECT_NEAR(r.x[0], 0.5, 1e-12);
    EXPECT_NEAR(r.x[1], 1.5, 1e-12);
    EXPECT_NEAR(r.objective, 3.5, 1e-12);
}

// Random bounded LPs against vertex enumeration.
TEST(SimplexProperty, MatchesVertexEnumeration) {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coef(-4, 6), cost(-3, 8), rhs(-5, 9);
    std::size_t feasible = 0, infeasible = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const std::size_t m = 2 + trial % 5;
        restore::testing::DenseLp dense;
        LinearProgram lp;
        for (std::size_t k = 0; k < n; ++k) {
            const double c = trial % 4 == 0 ? cost(rng) : std::abs(cost(rng));
            dense.cost.push_back(c);
            lp.objective.push_back(c);
        }
        for (std::size_t r = 0; r < m; ++r) {
            std::vector<double> a(n);
            restore::LpRow row;
            for (std::size_t k = 0; k < n; ++k) {
                a[k] = coef(rng);
                if (a[k] != 0.0) row.terms.push_back({k, a[k]});
            }
            row.rhs = rhs(rng);
            dense.a.push_back(a);
            dense.b.push_back(row.rhs);
            lp.rows.push_back(row);
        }
        // Box so that every instance is bounded.
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<double> a(n, 0.0);
            a[k] = -1.0;
            dense.a.push_back(a);
            dense.b.push_back(-20.0);
            lp.rows.push_back({{{k, -1.0}}, -20.0, "box"});
        }
        SCOPED_TRACE(trial);
        const auto expected = restore::testing::vertex_enumeration_optimum(dense);
        if (!expected) {
            ++infeasible;
            EXPECT_THROW(restore::simplex_solve(lp), LpError);
            continue;
        }
        ++feasible;
        const auto r = restore::simplex_solve(lp);
        EXPECT_NEAR(r.objective, *expected, 1e-7 * (1.0 + std::abs(*expected)));
        EXPECT_LE(r.max_violation, 1e-9);
    }
    EXPECT_GT(feasible, 100u);
    EXPECT_GT(infeasible, 5u);
}

}  // namespace
