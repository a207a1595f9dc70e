#ifndef FLORA_BENCHMARKS_HPP
#define FLORA_BENCHMARKS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <flora/core.hpp>
#include <flora/mofpa.hpp>

namespace flora
{

enum class benchmark_id { zdt1, zdt2, zdt3, lz };

inline std::string_view to_string(benchmark_id id)
{
    switch (id) {
    case benchmark_id::zdt1:
        return "zdt1";
    case benchmark_id::zdt2:
        return "zdt2";
    case benchmark_id::zdt3:
        return "zdt3";
    case benchmark_id::lz:
        return "lz";
    }
    return "?";
}

inline std::optional<benchmark_id> parse_benchmark(std::string_view name)
{
    for (auto id : {benchmark_id::zdt1, benchmark_id::zdt2, benchmark_id::zdt3, benchmark_id::lz}) {
        if (name == to_string(id)) {
            return id;
        }
    }
    return std::nullopt;
}

using objective_pair = std::array<double, 2>;

namespace detail
{
inline void require_unit_box(std::span<const double> x, const char *fn)
{
    if (x.size() < 2) {
        throw std::domain_error(std::string(fn) + ": need at least two variables");
    }
    for (double v : x) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw std::domain_error(std::string(fn) + ": variables must lie in [0, 1]");
        }
    }
}

inline double zdt_g(std::span<const double> x)
{
    double sum = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        sum += x[i];
    }
    return 1.0 + 9.0 * sum / static_cast<double>(x.size() - 1);
}
} // namespace detail

/// Convex front f2 = 1 - sqrt(f1) at g = 1.
inline objective_pair zdt1(std::span<const double> x)
{
    detail::require_unit_box(x, "zdt1");
    const double f1 = x[0];
    const double g = detail::zdt_g(x);
    return {f1, g * (1.0 - std::sqrt(f1 / g))};
}

/// Non-convex front f2 = 1 - f1^2 at g = 1.
inline objective_pair zdt2(std::span<const double> x)
{
    detail::require_unit_box(x, "zdt2");
    const double f1 = x[0];
    const double g = detail::zdt_g(x);
    const double q = f1 / g;
    return {f1, g * (1.0 - q * q)};
}

/// Disconnected front (five pieces) at g = 1.
inline objective_pair zdt3(std::span<const double> x)
{
    detail::require_unit_box(x, "zdt3");
    const double f1 = x[0];
    const double g = detail::zdt_g(x);
    const double q = f1 / g;
    return {f1, g * (1.0 - std::sqrt(q) - q * std::sin(10.0 * std::numbers::pi * f1))};
}

/// Li-Zhang problem. x1 in [0,1], the rest in [-1,1]. Pareto set x_j = sin(6 pi x1 + j pi / d).
inline objective_pair lz(std::span<const double> x)
{
    const std::size_t d = x.size();
    if (d < 3) {
        throw std::domain_error("lz: need at least three variables");
    }
    if (!(x[0] >= 0.0 && x[0] <= 1.0)) {
        throw std::domain_error("lz: x1 must lie in [0, 1]");
    }
    double odd = 0.0;
    double even = 0.0;
    std::size_t n_odd = 0;
    std::size_t n_even = 0;
    // j is 1-based as in the usual statement of the problem.
    for (std::size_t j = 2; j <= d; ++j) {
        const double xj = x[j - 1];
        if (!(xj >= -1.0 && xj <= 1.0)) {
            throw std::domain_error("lz: x_j must lie in [-1, 1] for j >= 2");
        }
        const double diff
            = xj - std::sin(6.0 * std::numbers::pi * x[0] + static_cast<double>(j) * std::numbers::pi / static_cast<double>(d));
        if (j % 2 == 1) {
            odd += diff * diff;
            ++n_odd;
        } else {
            even += diff * diff;
            ++n_even;
        }
    }
    return {x[0] + 2.0 / static_cast<double>(n_odd) * odd, 1.0 - std::sqrt(x[0]) + 2.0 / static_cast<double>(n_even) * even};
}

/// The LZ Pareto-set point for a given x1.
inline std::vector<double> lz_pareto_set_point(double x1, std::size_t d)
{
    std::vector<double> x(d);
    x[0] = x1;
    for (std::size_t j = 2; j <= d; ++j) {
        x[j - 1] = std::sin(6.0 * std::numbers::pi * x1 + static_cast<double>(j) * std::numbers::pi / static_cast<double>(d));
    }
    return x;
}

inline double sphere(std::span<const double> x)
{
    double s = 0.0;
    for (double v : x) {
        s += v * v;
    }
    return s;
}

inline problem_definition make_benchmark_problem(benchmark_id id, std::size_t d = 30)
{
    const auto f = [id]() -> objective_pair (*)(std::span<const double>) {
        switch (id) {
        case benchmark_id::zdt1:
            return &zdt1;
        case benchmark_id::zdt2:
            return &zdt2;
        case benchmark_id::zdt3:
            return &zdt3;
        case benchmark_id::lz:
            return &lz;
        }
        return nullptr;
    }();
    std::vector<double> lower(d, 0.0);
    std::vector<double> upper(d, 1.0);
    if (id == benchmark_id::lz) {
        std::fill(lower.begin() + 1, lower.end(), -1.0);
    }
    return {std::string(to_string(id)), 2, 0, box_bounds(std::move(lower), std::move(upper)), {},
            [f](std::span<const double> x) {
                const auto v = f(x);
                return evaluation{{v[0], v[1]}, {}};
            }};
}

inline problem_definition make_sphere_problem(std::size_t d = 10, double lo = -5.0, double hi = 5.0)
{
    return {"sphere", 1, 0, box_bounds::uniform(d, lo, hi), {},
            [](std::span<const double> x) { return evaluation{{sphere(x)}, {}}; }};
}

enum class front_source { analytic, sampled_and_filtered };

/// Reference or estimated front: mutually non-dominated points sorted by f1.
struct front_sample {
    std::vector<std::vector<double>> points;
    front_source source = front_source::analytic;

    [[nodiscard]] std::size_t size() const noexcept { return points.size(); }
    [[nodiscard]] bool empty() const noexcept { return points.empty(); }

    static front_sample from_archive(const pareto_archive &archive)
    {
        front_sample out{{}, front_source::sampled_and_filtered};
        for (const auto &e : archive.sorted()) {
            out.points.push_back(e.objectives);
        }
        return out;
    }
};

/// Non-dominated subset of bi-objective points, sorted by f1 (one sweep).
inline std::vector<std::vector<double>> nondominated_sorted(std::vector<std::vector<double>> pts)
{
    std::sort(pts.begin(), pts.end());
    std::vector<std::vector<double>> out;
    double best_f2 = std::numeric_limits<double>::infinity();
    for (auto &p : pts) {
        if (p[1] < best_f2) {
            best_f2 = p[1];
            out.push_back(std::move(p));
        }
    }
    return out;
}

namespace detail
{
inline constexpr std::size_t zdt3_grid_points = 100001;

inline std::vector<std::vector<double>> zdt3_dense_front()
{
    std::vector<std::vector<double>> pts;
    pts.reserve(zdt3_grid_points);
    for (std::size_t i = 0; i < zdt3_grid_points; ++i) {
        const double f1 = static_cast<double>(i) / static_cast<double>(zdt3_grid_points - 1);
        pts.push_back({f1, 1.0 - std::sqrt(f1) - f1 * std::sin(10.0 * std::numbers::pi * f1)});
    }
    return nondominated_sorted(std::move(pts));
}
} // namespace detail

/// f1 intervals of the disconnected ZDT3 front, recovered from the dense grid.
inline std::vector<std::array<double, 2>> zdt3_front_segments()
{
    const auto front = detail::zdt3_dense_front();
    const double spacing = 1.0 / static_cast<double>(detail::zdt3_grid_points - 1);
    std::vector<std::array<double, 2>> segs{{front.front()[0], front.front()[0]}};
    for (std::size_t i = 1; i < front.size(); ++i) {
        if (front[i][0] - front[i - 1][0] > 10.0 * spacing) {
            segs.push_back({front[i][0], front[i][0]});
        } else {
            segs.back()[1] = front[i][0];
        }
    }
    return segs;
}

/// Reference front with `n` points. ZDT1/LZ and ZDT2 are sampled at evenly spaced f1;
/// ZDT3 is filtered from a dense grid and subsampled evenly by index.
inline front_sample true_front(benchmark_id id, std::size_t n = 1000)
{
    if (n < 2) {
        throw std::invalid_argument("true_front: need at least two points");
    }
    front_sample out;
    if (id == benchmark_id::zdt3) {
        const auto dense = detail::zdt3_dense_front();
        out.source = front_source::sampled_and_filtered;
        const std::size_t count = std::min(n, dense.size());
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t idx = (i * (dense.size() - 1)) / (count - 1);
            out.points.push_back(dense[idx]);
        }
        return out;
    }
    out.source = front_source::analytic;
    for (std::size_t i = 0; i < n; ++i) {
        const double f1 = static_cast<double>(i) / static_cast<double>(n - 1);
        const double f2 = id == benchmark_id::zdt2 ? 1.0 - f1 * f1 : 1.0 - std::sqrt(f1);
        out.points.push_back({f1, f2});
    }
    return out;
}

namespace detail
{
inline std::vector<double> nearest_distances(const front_sample &estimated, const front_sample &reference)
{
    if (estimated.empty() || reference.empty()) {
        throw std::invalid_argument("front metric: fronts must be non-empty");
    }
    std::vector<double> out;
    out.reserve(estimated.size());
    for (const auto &p : estimated.points) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto &q : reference.points) {
            require(p.size() == q.size(), "front metric: points differ in dimension");
            double s = 0.0;
            for (std::size_t k = 0; k < p.size(); ++k) {
                const double diff = p[k] - q[k];
                s += diff * diff;
            }
            best = std::min(best, s);
        }
        out.push_back(std::sqrt(best));
    }
    return out;
}
} // namespace detail

/// Sum of squared nearest-reference distances over the estimated points.
inline double error_metric_ef(const front_sample &estimated, const front_sample &reference)
{
    double s = 0.0;
    for (double d : detail::nearest_distances(estimated, reference)) {
        s += d * d;
    }
    return s;
}

/// (1/N) sqrt(sum d_j^2), N the number of estimated points.
inline double generalized_distance(const front_sample &estimated, const front_sample &reference)
{
    return std::sqrt(error_metric_ef(estimated, reference)) / static_cast<double>(estimated.size());
}

} // namespace flora

#endif
