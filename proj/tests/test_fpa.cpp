#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include <flora/benchmarks.hpp>
#include <flora/fpa.hpp>

using namespace flora;

TEST(GlobalMove, UnitStepLandsOnBest)
{
    const std::vector<double> x{0.2, 0.9};
    const std::vector<double> g{0.5, 0.1};
    const std::vector<double> one{1.0, 1.0};
    const auto y = global_pollination(x, g, 1.0, one);
    EXPECT_DOUBLE_EQ(y[0], 0.5);
    EXPECT_DOUBLE_EQ(y[1], 0.1);
}

TEST(GlobalMove, HandComputedComponents)
{
    const std::vector<double> x{1.0, -2.0, 3.0};
    const std::vector<double> g{2.0, 2.0, 0.0};
    const std::vector<double> step{0.5, -1.0, 2.0};
    const auto y = global_pollination(x, g, 0.1, step);
    EXPECT_DOUBLE_EQ(y[0], 1.0 + 0.1 * 0.5 * 1.0);
    EXPECT_DOUBLE_EQ(y[1], -2.0 + 0.1 * -1.0 * 4.0);
    EXPECT_DOUBLE_EQ(y[2], 3.0 + 0.1 * 2.0 * -3.0);
}

TEST(GlobalMove, AtBestIsFixedPoint)
{
    const std::vector<double> g{0.3, 0.4, 0.5};
    rng r(1);
    const auto b = box_bounds::uniform(3, 0.0, 1.0);
    for (auto sign : {levy_sign::positive, levy_sign::symmetric}) {
        EXPECT_EQ(global_pollination(g, g, 1.0, levy_params{}, r, b, {}, sign), g);
    }
}

TEST(GlobalMove, PositiveStepsNeverMoveAwayFromBest)
{
    rng r(4);
    const auto b = box_bounds::uniform(5, -10.0, 10.0);
    const std::vector<double> x{1, -1, 2, -2, 0};
    const std::vector<double> g{0, 0, 0, 0, 0.5};
    for (int i = 0; i < 1000; ++i) {
        const auto y = global_pollination(x, g, 1.0, levy_params{}, r, b, {}, levy_sign::positive);
        for (std::size_t k = 0; k < x.size(); ++k) {
            // Each coordinate moves from x toward (and possibly past) g, never the other way.
            ASSERT_GE((y[k] - x[k]) * (g[k] - x[k]), 0.0);
        }
    }
}

TEST(GlobalMove, ResultIsClamped)
{
    rng r(9);
    const auto b = box_bounds::uniform(4, 0.0, 1.0);
    const std::vector<double> x{0.0, 1.0, 0.5, 0.9};
    const std::vector<double> g{1.0, 0.0, 0.6, 0.1};
    for (int i = 0; i < 2000; ++i) {
        ASSERT_TRUE(b.contains(global_pollination(x, g, 1.0, levy_params{}, r, b, {}, levy_sign::symmetric)));
    }
}

TEST(LocalMove, HandComputed)
{
    const std::vector<double> x{1.0, 1.0};
    const std::vector<double> a{3.0, 0.0};
    const std::vector<double> b{1.0, 2.0};
    const auto y = local_pollination(x, a, b, 0.25);
    EXPECT_DOUBLE_EQ(y[0], 1.5);
    EXPECT_DOUBLE_EQ(y[1], 0.5);
}

TEST(LocalMove, UsesOneScalarForAllComponents)
{
    // With x_j - x_k proportional to (1, 2, 3) the displacement must stay proportional.
    rng r(12);
    const auto bounds = box_bounds::uniform(3, -100.0, 100.0);
    const std::vector<double> x{0, 0, 0};
    const std::vector<double> a{1, 2, 3};
    const std::vector<double> b{0, 0, 0};
    for (int i = 0; i < 100; ++i) {
        const auto y = local_pollination(x, a, b, r, bounds);
        ASSERT_NEAR(y[1], 2.0 * y[0], 1e-15);
        ASSERT_NEAR(y[2], 3.0 * y[0], 1e-15);
        ASSERT_GE(y[0], 0.0);
        ASSERT_LE(y[0], 1.0);
    }
}

TEST(LocalMove, IdenticalPartnersLeavePointUnchanged)
{
    rng r(3);
    const auto bounds = box_bounds::uniform(2, 0.0, 1.0);
    const std::vector<double> x{0.1, 0.2};
    const std::vector<double> p{0.7, 0.7};
    EXPECT_EQ(local_pollination(x, p, p, r, bounds), x);
}

TEST(FpaParams, Validation)
{
    fpa_params p;
    EXPECT_NO_THROW(p.validate());
    p.switch_probability = 1.5;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = {};
    p.population = 0;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = {};
    p.gamma = 0.0;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = {};
    p.levy.lambda = 0.9;
    EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(Fpa, RejectsMultiObjectiveProblems)
{
    EXPECT_THROW(fpa_minimize(make_benchmark_problem(benchmark_id::zdt1, 5), {}), contract_error);
}

TEST(Fpa, TraceShapeAndMonotoneBest)
{
    fpa_params p;
    p.population = 10;
    p.max_iterations = 40;
    p.seed = 5;
    const auto trace = fpa_minimize(make_sphere_problem(4), p);
    ASSERT_EQ(trace.best_per_iteration.size(), 41U);
    for (std::size_t k = 1; k < trace.best_per_iteration.size(); ++k) {
        ASSERT_LE(trace.best_per_iteration[k], trace.best_per_iteration[k - 1]);
    }
    EXPECT_EQ(trace.evaluations, 10U + 10U * 40U);
    EXPECT_EQ(trace.global_moves + trace.local_moves, 400U);
    ASSERT_TRUE(trace.best.has_value());
    EXPECT_DOUBLE_EQ(trace.best->objectives()[0], trace.best_per_iteration.back());
}

TEST(Fpa, PopulationStaysInBounds)
{
    fpa_params p;
    p.population = 15;
    p.max_iterations = 100;
    p.steps = levy_sign::symmetric;
    const auto prob = make_sphere_problem(6, -1.0, 2.0);
    const auto trace = fpa_minimize(prob, p);
    ASSERT_EQ(trace.population.size(), 15U);
    for (const auto &f : trace.population) {
        ASSERT_TRUE(prob.bounds.contains(f.position()));
    }
}

TEST(Fpa, SwitchProbabilityExtremes)
{
    fpa_params p;
    p.population = 8;
    p.max_iterations = 20;
    p.switch_probability = 1.0;
    auto t = fpa_minimize(make_sphere_problem(3), p);
    EXPECT_EQ(t.local_moves, 0U);
    p.switch_probability = 0.0;
    t = fpa_minimize(make_sphere_problem(3), p);
    EXPECT_EQ(t.global_moves, 0U);
}

TEST(Fpa, SingleFlowerPopulationRuns)
{
    fpa_params p;
    p.population = 1;
    p.max_iterations = 50;
    p.switch_probability = 0.5;
    const auto t = fpa_minimize(make_sphere_problem(2), p);
    EXPECT_EQ(t.best_per_iteration.size(), 51U);
}

TEST(Fpa, SameSeedSameTrace)
{
    fpa_params p;
    p.population = 10;
    p.max_iterations = 50;
    p.seed = 77;
    const auto a = fpa_minimize(make_sphere_problem(5), p);
    const auto b = fpa_minimize(make_sphere_problem(5), p);
    EXPECT_EQ(a.best_per_iteration, b.best_per_iteration);
    p.seed = 78;
    const auto c = fpa_minimize(make_sphere_problem(5), p);
    EXPECT_NE(a.best_per_iteration, c.best_per_iteration);
}

TEST(Fpa, FeasibleSolutionPreferredOverInfeasible)
{
    // Minimize x subject to x >= 0.6 on [0, 1]; the optimum sits on the constraint.
    problem_definition prob{"ramp", 1, 1, box_bounds::uniform(1, 0.0, 1.0), {}, [](std::span<const double> x) {
                                return evaluation{{x[0]}, {std::max(0.6 - x[0], 0.0)}};
                            }};
    fpa_params p;
    p.population = 20;
    p.max_iterations = 200;
    const auto t = fpa_minimize(prob, p);
    ASSERT_TRUE(t.best->feasible());
    EXPECT_NEAR(t.best->objectives()[0], 0.6, 1e-3);
}

TEST(Fpa, IntegerMaskedVariablesStayIntegral)
{
    problem_definition prob{"int", 1, 0, box_bounds({-5.0, -5.0}, {5.0, 5.0}), {false, true},
                            [](std::span<const double> x) {
                                return evaluation{{(x[0] - 0.3) * (x[0] - 0.3) + (x[1] - 2.4) * (x[1] - 2.4)}, {}};
                            }};
    fpa_params p;
    p.population = 20;
    p.max_iterations = 200;
    const auto t = fpa_minimize(prob, p);
    for (const auto &f : t.population) {
        ASSERT_EQ(f.position()[1], std::round(f.position()[1]));
    }
    EXPECT_EQ(t.best->position()[1], 2.0);
    EXPECT_NEAR(t.best->position()[0], 0.3, 1e-3);
}

TEST(Fpa, SphereConverges)
{
    fpa_params p;
    p.population = 25;
    p.max_iterations = 1000;
    p.seed = 1;
    const auto t = fpa_minimize(make_sphere_problem(10), p);
    EXPECT_LE(t.best->objectives()[0], 1e-5);
}

TEST(GlobalMove, InjectedStepTowardOrigin)
{
    const std::vector<double> x{1.0, 1.0};
    const std::vector<double> g{0.0, 0.0};
    const std::vector<double> step{0.5, 0.5};
    const auto y = global_pollination(x, g, 0.1, step);
    EXPECT_DOUBLE_EQ(y[0], 0.95);
    EXPECT_DOUBLE_EQ(y[1], 0.95);
}

TEST(GlobalMove, ZeroScaleIsIdentity)
{
    const std::vector<double> x{0.3, -7.0};
    const std::vector<double> g{5.0, 5.0};
    const std::vector<double> step{1e6, -1e6};
    EXPECT_EQ(global_pollination(x, g, 0.0, step), x);
}

TEST(LocalMove, InjectedEpsilonBeforeClamping)
{
    const std::vector<double> x{0.0, 0.0};
    const std::vector<double> a{1.0, 0.0};
    const std::vector<double> b{0.0, 1.0};
    EXPECT_EQ(local_pollination(x, a, b, 1.0), (std::vector<double>{1.0, -1.0}));
    EXPECT_EQ(local_pollination(x, a, b, 0.0), x);
}

TEST(Fpa, OneFlowerOneIteration)
{
    fpa_params p;
    p.population = 1;
    p.max_iterations = 1;
    p.switch_probability = 0.0;
    const auto t = fpa_minimize(make_sphere_problem(3), p);
    ASSERT_EQ(t.best_per_iteration.size(), 2U);
    // Only local moves with x_j = x_k = x, so nothing can change.
    EXPECT_EQ(t.best_per_iteration[0], t.best_per_iteration[1]);
    EXPECT_EQ(t.local_moves, 1U);
}
