#ifndef FLORA_CORE_HPP
#define FLORA_CORE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flora
{

/// Raised when a caller breaks a precondition (mismatched lengths, wrong objective count).
class contract_error : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

namespace detail
{
inline void require(bool cond, const char *what)
{
    if (!cond) {
        throw contract_error(what);
    }
}
} // namespace detail

/// Axis-aligned search box. Immutable after construction.
class box_bounds
{
public:
    box_bounds(std::vector<double> lower, std::vector<double> upper) : m_lower(std::move(lower)), m_upper(std::move(upper))
    {
        if (m_lower.empty() || m_lower.size() != m_upper.size()) {
            throw std::invalid_argument("box_bounds: lower and upper must be non-empty and of equal length");
        }
        for (std::size_t i = 0; i < m_lower.size(); ++i) {
            if (!(m_lower[i] < m_upper[i])) {
                throw std::invalid_argument("box_bounds: lower[" + std::to_string(i) + "] must be < upper[" + std::to_string(i)
                                            + "]");
            }
        }
    }

    static box_bounds uniform(std::size_t dim, double lo, double hi)
    {
        return box_bounds(std::vector<double>(dim, lo), std::vector<double>(dim, hi));
    }

    [[nodiscard]] std::size_t dimension() const noexcept { return m_lower.size(); }
    [[nodiscard]] std::span<const double> lower() const noexcept { return m_lower; }
    [[nodiscard]] std::span<const double> upper() const noexcept { return m_upper; }

    [[nodiscard]] bool contains(std::span<const double> x) const noexcept
    {
        if (x.size() != m_lower.size()) {
            return false;
        }
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (!(x[i] >= m_lower[i] && x[i] <= m_upper[i])) {
                return false;
            }
        }
        return true;
    }

private:
    std::vector<double> m_lower;
    std::vector<double> m_upper;
};

/// Result of one problem evaluation. Violations are max(g_k(x), 0).
struct evaluation {
    std::vector<double> objectives;
    std::vector<double> violations;
};

inline double total_violation(std::span<const double> violations) noexcept
{
    return std::accumulate(violations.begin(), violations.end(), 0.0);
}

/// Everything a solver needs to know about the thing being optimized.
///
/// `evaluate` must be deterministic and free of side effects; solvers may call it
/// from several independent runs at once.
struct problem_definition {
    std::string name;
    std::size_t objective_count = 1;
    std::size_t constraint_count = 0;
    box_bounds bounds;
    std::vector<bool> integer_mask;
    std::function<evaluation(std::span<const double>)> evaluate;

    [[nodiscard]] std::size_t dimension() const noexcept { return bounds.dimension(); }

    void validate() const
    {
        if (objective_count == 0) {
            throw std::invalid_argument("problem_definition: objective_count must be positive");
        }
        if (!integer_mask.empty() && integer_mask.size() != dimension()) {
            throw std::invalid_argument("problem_definition: integer_mask length must equal the dimension");
        }
        if (!evaluate) {
            throw std::invalid_argument("problem_definition: evaluate is empty");
        }
    }
};

/// Project x into the box; masked components are rounded to the nearest integer inside it.
inline std::vector<double> clamp_to_bounds(std::span<const double> x, const box_bounds &bounds,
                                           const std::vector<bool> &integer_mask = {})
{
    detail::require(x.size() == bounds.dimension(), "clamp_to_bounds: dimension mismatch");
    detail::require(integer_mask.empty() || integer_mask.size() == x.size(), "clamp_to_bounds: integer_mask length mismatch");
    std::vector<double> out(x.begin(), x.end());
    const auto lo = bounds.lower();
    const auto hi = bounds.upper();
    for (std::size_t i = 0; i < out.size(); ++i) {
        double v = std::clamp(out[i], lo[i], hi[i]);
        if (!integer_mask.empty() && integer_mask[i]) {
            v = std::round(v);
            // The box may have fractional limits; stay on an integer inside it.
            if (v < lo[i]) {
                v = std::ceil(lo[i]);
            } else if (v > hi[i]) {
                v = std::floor(hi[i]);
            }
        }
        out[i] = v;
    }
    return out;
}

/// A candidate solution with its cached evaluation.
///
/// Only constructible through `make_pollen`, which clamps before evaluating, so the
/// cache can never go stale relative to the position.
class pollen
{
public:
    [[nodiscard]] std::span<const double> position() const noexcept { return m_position; }
    [[nodiscard]] std::span<const double> objectives() const noexcept { return m_eval.objectives; }
    [[nodiscard]] std::span<const double> violations() const noexcept { return m_eval.violations; }
    [[nodiscard]] double total_violation() const noexcept { return m_total_violation; }
    [[nodiscard]] bool feasible() const noexcept { return m_total_violation == 0.0; }

    friend pollen make_pollen(const problem_definition &prob, std::span<const double> x);

private:
    pollen(std::vector<double> pos, evaluation ev)
        : m_position(std::move(pos)), m_eval(std::move(ev)), m_total_violation(flora::total_violation(m_eval.violations))
    {
    }

    std::vector<double> m_position;
    evaluation m_eval;
    double m_total_violation;
};

inline pollen make_pollen(const problem_definition &prob, std::span<const double> x)
{
    auto pos = clamp_to_bounds(x, prob.bounds, prob.integer_mask);
    auto ev = prob.evaluate(pos);
    detail::require(ev.objectives.size() == prob.objective_count, "evaluate returned the wrong objective count");
    detail::require(ev.violations.size() == prob.constraint_count, "evaluate returned the wrong constraint count");
    return pollen(std::move(pos), std::move(ev));
}

/// Constraint domination (minimization).
///
/// Feasible beats infeasible; between infeasible points the smaller summed violation
/// wins; between feasible points ordinary Pareto dominance applies.
inline bool dominates(std::span<const double> a, double a_violation, std::span<const double> b, double b_violation)
{
    detail::require(a.size() == b.size(), "dominates: objective vectors differ in length");
    const bool a_feasible = a_violation <= 0.0;
    const bool b_feasible = b_violation <= 0.0;
    if (a_feasible != b_feasible) {
        return a_feasible;
    }
    if (!a_feasible) {
        return a_violation < b_violation;
    }
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
        if (a[i] < b[i]) {
            strict = true;
        }
    }
    return strict;
}

inline bool dominates(std::span<const double> a, std::span<const double> b)
{
    return dominates(a, 0.0, b, 0.0);
}

inline bool dominates(const pollen &a, const pollen &b)
{
    return dominates(a.objectives(), a.total_violation(), b.objectives(), b.total_violation());
}

/// Seeded random source. Equal (seed, stream) pairs give identical sequences.
///
/// Streams let one run hand independent generators to sub-runs without the
/// sub-runs' draws depending on each other.
class rng
{
public:
    using result_type = std::mt19937_64::result_type;

    explicit rng(std::uint64_t seed, std::uint64_t stream = 0) : m_seed(seed), m_engine(make_engine(seed, stream)) {}

    [[nodiscard]] std::uint64_t seed() const noexcept { return m_seed; }

    /// Independent generator derived from this one's seed (not its current state).
    [[nodiscard]] rng substream(std::uint64_t stream) const { return rng(m_seed, stream + 1); }

    static constexpr result_type min() { return std::mt19937_64::min(); }
    static constexpr result_type max() { return std::mt19937_64::max(); }
    result_type operator()() { return m_engine(); }

    /// Uniform on [0, 1).
    double uniform01() { return std::uniform_real_distribution<double>(0.0, 1.0)(m_engine); }
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(m_engine); }
    double normal() { return m_normal(m_engine); }
    double normal(double sigma) { return sigma * m_normal(m_engine); }

    /// Uniform integer in [0, n).
    std::size_t index(std::size_t n)
    {
        detail::require(n > 0, "rng::index: empty range");
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(m_engine);
    }

private:
    static std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream)
    {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                          static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32U)};
        return std::mt19937_64(seq);
    }

    std::uint64_t m_seed;
    std::mt19937_64 m_engine;
    std::normal_distribution<double> m_normal{0.0, 1.0};
};

} // namespace flora

#endif
