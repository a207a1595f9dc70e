#ifndef FLORA_DISCBRAKE_HPP
#define FLORA_DISCBRAKE_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include <flora/core.hpp>
#include <flora/mofpa.hpp>

namespace flora
{

/// Multiple-disc brake. Radii in mm, force in N, s counts friction surfaces.
struct disc_brake_design {
    double r = 0.0;
    double R = 0.0;
    double F = 0.0;
    double s = 0.0;
};

namespace discbrake
{
inline constexpr double r_min = 55.0, r_max = 80.0;
inline constexpr double R_min = 75.0, R_max = 110.0;
inline constexpr double F_min = 1000.0, F_max = 3000.0;
inline constexpr double s_min = 2.0, s_max = 20.0;
/// g2 = 2.5 (s + 1) - 30 <= 0 admits s up to 11.
inline constexpr int s_feasible_max = 11;

inline void require_geometry(const disc_brake_design &x)
{
    if (!(x.R > x.r)) {
        throw std::domain_error("disc brake: outer radius must exceed inner radius");
    }
}

inline std::array<double, 2> objectives_unchecked(const disc_brake_design &x)
{
    const double a = x.R * x.R - x.r * x.r;
    const double b = x.R * x.R * x.R - x.r * x.r * x.r;
    return {4.9e-5 * a * (x.s - 1.0), 9.82e6 * a / (x.F * x.s * b)};
}

inline std::array<double, 5> constraint_values_unchecked(const disc_brake_design &x)
{
    const double a = x.R * x.R - x.r * x.r;
    const double b = x.R * x.R * x.R - x.r * x.r * x.r;
    return {20.0 - (x.R - x.r),
            2.5 * (x.s + 1.0) - 30.0,
            x.F / (3.14 * a) - 0.4,
            2.22e-3 * x.F * b / (a * a) - 1.0,
            900.0 - 0.0266 * x.F * x.s * b / a};
}
} // namespace discbrake

/// (mass surrogate, braking-time surrogate).
inline std::array<double, 2> disc_brake_objectives(const disc_brake_design &x)
{
    discbrake::require_geometry(x);
    return discbrake::objectives_unchecked(x);
}

/// Raw g_1..g_5 (<= 0 means satisfied).
inline std::array<double, 5> disc_brake_constraint_values(const disc_brake_design &x)
{
    discbrake::require_geometry(x);
    return discbrake::constraint_values_unchecked(x);
}

/// max(g_k, 0) for k = 1..5.
inline std::array<double, 5> disc_brake_constraints(const disc_brake_design &x)
{
    auto g = disc_brake_constraint_values(x);
    for (auto &v : g) {
        v = std::max(v, 0.0);
    }
    return g;
}

namespace discbrake
{
/// Objective/violation evaluation used inside the solver, total over the whole box.
///
/// Designs with R <= r cannot be evaluated in closed form; they are reported as
/// violating g1 (always >= 20 there) with the mass term and a worst-case braking time.
inline evaluation evaluate(const disc_brake_design &x)
{
    if (!(x.R > x.r)) {
        const double a = x.R * x.R - x.r * x.r;
        return {{4.9e-5 * a * (x.s - 1.0), std::numeric_limits<double>::max()},
                {20.0 - (x.R - x.r), std::max(2.5 * (x.s + 1.0) - 30.0, 0.0), 0.0, 0.0, 0.0}};
    }
    const auto f = objectives_unchecked(x);
    auto g = constraint_values_unchecked(x);
    evaluation ev{{f[0], f[1]}, {}};
    ev.violations.reserve(5);
    for (double v : g) {
        ev.violations.push_back(std::max(v, 0.0));
    }
    return ev;
}
} // namespace discbrake

/// Four-variable problem (r, R, F, s) with s integer.
inline problem_definition make_disc_brake_problem()
{
    return {"discbrake",
            2,
            5,
            box_bounds({discbrake::r_min, discbrake::R_min, discbrake::F_min, discbrake::s_min},
                       {discbrake::r_max, discbrake::R_max, discbrake::F_max, discbrake::s_max}),
            {false, false, false, true},
            [](std::span<const double> x) { return discbrake::evaluate({x[0], x[1], x[2], x[3]}); }};
}

/// Three-variable problem (r, R, F) with the friction-surface count fixed.
inline problem_definition make_disc_brake_problem_fixed_s(int s)
{
    if (s < static_cast<int>(discbrake::s_min) || s > static_cast<int>(discbrake::s_max)) {
        throw std::invalid_argument("disc brake: s outside [2, 20]");
    }
    const auto sd = static_cast<double>(s);
    return {"discbrake_s" + std::to_string(s),
            2,
            5,
            box_bounds({discbrake::r_min, discbrake::R_min, discbrake::F_min},
                       {discbrake::r_max, discbrake::R_max, discbrake::F_max}),
            {},
            [sd](std::span<const double> x) { return discbrake::evaluate({x[0], x[1], x[2], sd}); }};
}

enum class integer_mode { round_on_evaluate, enumerate_s };

/// Pareto archive over decisions (r, R, F, s).
///
/// `enumerate_s` runs one multi-objective search per s in [2, 11] (each from its own
/// seed stream) and merges the archives: exhaustive branching on the only integer.
inline pareto_archive solve_disc_brake(const mofpa_params &params, integer_mode mode)
{
    params.validate();
    if (mode == integer_mode::round_on_evaluate) {
        return mofpa_run(make_disc_brake_problem(), params);
    }
    pareto_archive merged(params.archive_capacity);
    for (int s = static_cast<int>(discbrake::s_min); s <= discbrake::s_feasible_max; ++s) {
        auto sub = params;
        sub.fpa.seed = params.fpa.seed * 1000003ULL + static_cast<std::uint64_t>(s);
        const auto archive = mofpa_run(make_disc_brake_problem_fixed_s(s), sub);
        for (auto e : archive.entries()) {
            e.decision.push_back(static_cast<double>(s));
            merged.offer(std::move(e));
        }
    }
    return merged;
}

} // namespace flora

#endif
