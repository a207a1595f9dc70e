#ifndef FLORA_FPA_HPP
#define FLORA_FPA_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <flora/core.hpp>
#include <flora/levy.hpp>

namespace flora
{

/// Sign of the Levy multipliers in the global move. `positive` uses |L|, so every
/// global move heads toward the current best; `symmetric` keeps the sampled sign.
enum class levy_sign { positive, symmetric };

struct fpa_params {
    std::size_t population = 50;
    std::size_t max_iterations = 1000;
    double switch_probability = 0.8;
    levy_params levy{};
    /// Scale on the global move. 1 is the unscaled update.
    double gamma = 1.0;
    levy_sign steps = levy_sign::positive;
    std::uint64_t seed = 0;

    void validate() const
    {
        if (population == 0) {
            throw std::invalid_argument("fpa_params: population must be positive");
        }
        if (max_iterations == 0) {
            throw std::invalid_argument("fpa_params: max_iterations must be positive");
        }
        if (!(switch_probability >= 0.0 && switch_probability <= 1.0)) {
            throw std::invalid_argument("fpa_params: switch probability must lie in [0, 1]");
        }
        if (!(gamma > 0.0)) {
            throw std::invalid_argument("fpa_params: gamma must be positive");
        }
        levy.validate();
    }
};

struct run_trace {
    /// Entry 0 is the initial population's best; entry k the best after iteration k.
    std::vector<double> best_per_iteration;
    std::optional<pollen> best;
    std::vector<pollen> population;
    std::size_t evaluations = 0;
    std::size_t global_moves = 0;
    std::size_t local_moves = 0;
};

/// Global move toward the best solution: x + gamma * L (.) (g_star - x). Not clamped.
inline std::vector<double> global_pollination(std::span<const double> x, std::span<const double> g_star, double gamma,
                                              std::span<const double> step)
{
    detail::require(x.size() == g_star.size() && x.size() == step.size(), "global_pollination: dimension mismatch");
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = x[i] + gamma * step[i] * (g_star[i] - x[i]);
    }
    return out;
}

/// Draws the Levy vector, applies the move and clamps the result into `bounds`.
inline std::vector<double> global_pollination(std::span<const double> x, std::span<const double> g_star, double gamma,
                                              const levy_params &levy, rng &r, const box_bounds &bounds,
                                              const std::vector<bool> &integer_mask = {},
                                              levy_sign sign = levy_sign::positive)
{
    detail::require(x.size() == g_star.size(), "global_pollination: dimension mismatch");
    auto step = sample_levy_vector(x.size(), levy, r);
    if (sign == levy_sign::positive) {
        for (auto &v : step) {
            v = std::abs(v);
        }
    }
    return clamp_to_bounds(global_pollination(x, g_star, gamma, step), bounds, integer_mask);
}

/// Local random walk: x + eps * (x_j - x_k), one scalar eps. Not clamped.
inline std::vector<double> local_pollination(std::span<const double> x, std::span<const double> x_j,
                                             std::span<const double> x_k, double eps)
{
    detail::require(x.size() == x_j.size() && x.size() == x_k.size(), "local_pollination: dimension mismatch");
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = x[i] + eps * (x_j[i] - x_k[i]);
    }
    return out;
}

inline std::vector<double> local_pollination(std::span<const double> x, std::span<const double> x_j,
                                             std::span<const double> x_k, rng &r, const box_bounds &bounds,
                                             const std::vector<bool> &integer_mask = {})
{
    const double eps = r.uniform01();
    return clamp_to_bounds(local_pollination(x, x_j, x_k, eps), bounds, integer_mask);
}

namespace detail
{
struct scored {
    double fitness;
    double violation;
};

inline bool better(scored a, scored b)
{
    return dominates(std::span<const double>(&a.fitness, 1), a.violation, std::span<const double>(&b.fitness, 1),
                     b.violation);
}

inline std::vector<double> random_position(const box_bounds &bounds, rng &r)
{
    std::vector<double> x(bounds.dimension());
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = r.uniform(bounds.lower()[i], bounds.upper()[i]);
    }
    return x;
}
} // namespace detail

/// The pollination loop shared by the single- and multi-objective drivers.
///
/// `score` maps a pollen to the scalar being minimized. `on_iteration(k)` runs before
/// the population is (re)scored for iteration k (k = 0 is the initial population);
/// returning true means the score function changed and fitness must be recomputed.
/// `on_evaluate` sees every pollen the loop evaluates, in evaluation order.
template <class Score, class OnIteration, class OnEvaluate>
run_trace pollinate(const problem_definition &prob, const fpa_params &params, rng &r, Score &&score,
                    OnIteration &&on_iteration, OnEvaluate &&on_evaluate)
{
    prob.validate();
    params.validate();

    const std::size_t n = params.population;
    const auto &bounds = prob.bounds;
    const auto &mask = prob.integer_mask;

    run_trace trace;
    trace.best_per_iteration.reserve(params.max_iterations + 1);

    auto evaluate = [&](std::span<const double> x) {
        auto p = make_pollen(prob, x);
        ++trace.evaluations;
        on_evaluate(static_cast<const pollen &>(p));
        return p;
    };

    std::vector<pollen> flowers;
    flowers.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        flowers.push_back(evaluate(detail::random_position(bounds, r)));
    }

    std::vector<detail::scored> fitness(n);
    auto rescore = [&] {
        for (std::size_t i = 0; i < n; ++i) {
            fitness[i] = {score(flowers[i]), flowers[i].total_violation()};
        }
    };
    auto best_index = [&] {
        std::size_t b = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (detail::better(fitness[i], fitness[b])) {
                b = i;
            }
        }
        return b;
    };

    on_iteration(std::size_t{0});
    rescore();
    std::size_t g = best_index();
    trace.best_per_iteration.push_back(fitness[g].fitness);

    for (std::size_t it = 1; it <= params.max_iterations; ++it) {
        if (on_iteration(it)) {
            rescore();
            g = best_index();
        }
        // g_star is frozen for the sweep and refreshed once all flowers have moved.
        const std::vector<double> g_star(flowers[g].position().begin(), flowers[g].position().end());

        for (std::size_t i = 0; i < n; ++i) {
            std::vector<double> proposal;
            if (r.uniform01() < params.switch_probability) {
                ++trace.global_moves;
                proposal = global_pollination(flowers[i].position(), g_star, params.gamma, params.levy, r, bounds, mask,
                                              params.steps);
            } else {
                ++trace.local_moves;
                std::size_t j = 0;
                std::size_t k = 0;
                if (n > 1) {
                    j = r.index(n);
                    k = r.index(n - 1);
                    if (k >= j) {
                        ++k;
                    }
                }
                proposal = local_pollination(flowers[i].position(), flowers[j].position(), flowers[k].position(), r,
                                             bounds, mask);
            }
            auto candidate = evaluate(proposal);
            const detail::scored cs{score(candidate), candidate.total_violation()};
            if (detail::better(cs, fitness[i])) {
                flowers[i] = std::move(candidate);
                fitness[i] = cs;
            }
        }

        g = best_index();
        trace.best_per_iteration.push_back(fitness[g].fitness);
    }

    trace.best = flowers[g];
    trace.population = std::move(flowers);
    return trace;
}

/// Single-objective flower pollination. Requires objective_count == 1.
inline run_trace fpa_minimize(const problem_definition &prob, const fpa_params &params)
{
    if (prob.objective_count != 1) {
        throw contract_error("fpa_minimize: problem has " + std::to_string(prob.objective_count)
                             + " objectives; use mofpa_run for multi-objective problems");
    }
    rng r(params.seed);
    return pollinate(
        prob, params, r, [](const pollen &p) { return p.objectives()[0]; }, [](std::size_t) { return false; },
        [](const pollen &) {});
}

} // namespace flora

#endif
