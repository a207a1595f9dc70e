#ifndef FLORA_MOFPA_HPP
#define FLORA_MOFPA_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <flora/core.hpp>
#include <flora/fpa.hpp>

namespace flora
{

/// Positive weights summing to one.
class weight_vector
{
public:
    explicit weight_vector(std::vector<double> w) : m_w(std::move(w))
    {
        if (m_w.empty()) {
            throw std::invalid_argument("weight_vector: empty");
        }
        double sum = 0.0;
        for (double v : m_w) {
            if (!(v > 0.0)) {
                throw std::invalid_argument("weight_vector: weights must be strictly positive");
            }
            sum += v;
        }
        if (std::abs(sum - 1.0) > 1e-12) {
            throw std::invalid_argument("weight_vector: weights must sum to one");
        }
    }

    [[nodiscard]] std::span<const double> values() const noexcept { return m_w; }
    [[nodiscard]] std::size_t size() const noexcept { return m_w.size(); }
    double operator[](std::size_t i) const { return m_w[i]; }

private:
    std::vector<double> m_w;
};

enum class weight_mode { uniform_random, low_discrepancy };
enum class weight_schedule { per_iteration, per_run_sweep };

/// Radical inverse of `index` in `base`.
inline double van_der_corput(std::uint64_t index, std::uint64_t base)
{
    double result = 0.0;
    double f = 1.0 / static_cast<double>(base);
    while (index > 0) {
        result += f * static_cast<double>(index % base);
        index /= base;
        f /= static_cast<double>(base);
    }
    return result;
}

namespace detail
{
inline std::uint64_t nth_prime(std::size_t n)
{
    std::uint64_t candidate = 1;
    std::size_t found = 0;
    while (found <= n) {
        ++candidate;
        bool prime = true;
        for (std::uint64_t d = 2; d * d <= candidate; ++d) {
            if (candidate % d == 0) {
                prime = false;
                break;
            }
        }
        if (prime) {
            ++found;
        }
    }
    return candidate;
}

inline weight_vector normalized(std::vector<double> raw)
{
    const double sum = std::accumulate(raw.begin(), raw.end(), 0.0);
    for (auto &v : raw) {
        v /= sum;
    }
    // Re-balance the last weight so the sum is one to within rounding.
    if (raw.size() > 1) {
        const double head = std::accumulate(raw.begin(), raw.end() - 1, 0.0);
        const double last = 1.0 - head;
        if (last > 0.0) {
            raw.back() = last;
        }
    }
    return weight_vector(std::move(raw));
}
} // namespace detail

/// Uniform mode normalizes m independent Uniform(0,1] draws. Low-discrepancy mode cuts
/// [0,1] at the m-1 coordinates of the `index`-th Halton point (van der Corput per prime
/// base) and uses the sorted spacings. Coordinates in different prime bases never
/// coincide, so every weight is positive. Index 0 is mapped to 1.
inline weight_vector draw_weights(std::size_t m, weight_mode mode, rng &r, std::uint64_t index = 1)
{
    if (m == 0) {
        throw std::invalid_argument("draw_weights: objective count must be positive");
    }
    if (m == 1) {
        return weight_vector({1.0});
    }
    std::vector<double> raw(m);
    if (mode == weight_mode::uniform_random) {
        for (auto &v : raw) {
            do {
                v = r.uniform01();
            } while (v == 0.0);
        }
    } else {
        const std::uint64_t k = std::max<std::uint64_t>(index, 1);
        std::vector<double> cuts(m - 1);
        for (std::size_t i = 0; i + 1 < m; ++i) {
            cuts[i] = van_der_corput(k, detail::nth_prime(i));
        }
        std::sort(cuts.begin(), cuts.end());
        double prev = 0.0;
        for (std::size_t i = 0; i + 1 < m; ++i) {
            raw[i] = cuts[i] - prev;
            prev = cuts[i];
        }
        raw[m - 1] = 1.0 - prev;
    }
    return detail::normalized(std::move(raw));
}

inline double scalarize(std::span<const double> f, const weight_vector &w)
{
    detail::require(f.size() == w.size(), "scalarize: objective and weight lengths differ");
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        s += w[i] * f[i];
    }
    return s;
}

struct archive_entry {
    std::vector<double> decision;
    std::vector<double> objectives;
    std::vector<double> violations;
    double total_violation = 0.0;

    [[nodiscard]] bool feasible() const noexcept { return total_violation <= 0.0; }

    static archive_entry from(const pollen &p)
    {
        return {{p.position().begin(), p.position().end()},
                {p.objectives().begin(), p.objectives().end()},
                {p.violations().begin(), p.violations().end()},
                p.total_violation()};
    }
};

/// Crowding distance of each point (objective-range normalized). Points at either
/// end of any objective's ordering get +infinity.
inline std::vector<double> crowding_distances(const std::vector<std::vector<double>> &points)
{
    const std::size_t k = points.size();
    std::vector<double> dist(k, 0.0);
    if (k == 0) {
        return dist;
    }
    const std::size_t m = points.front().size();
    std::vector<std::size_t> order(k);
    for (std::size_t obj = 0; obj < m; ++obj) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return points[a][obj] < points[b][obj]; });
        constexpr double inf = std::numeric_limits<double>::infinity();
        dist[order.front()] = inf;
        dist[order.back()] = inf;
        const double range = points[order.back()][obj] - points[order.front()][obj];
        if (!(range > 0.0)) {
            continue;
        }
        for (std::size_t i = 1; i + 1 < k; ++i) {
            dist[order[i]] += (points[order[i + 1]][obj] - points[order[i - 1]][obj]) / range;
        }
    }
    return dist;
}

/// Bounded store of mutually non-dominated solutions under constraint domination.
///
/// Entries keep insertion order. When an insertion overflows the capacity, the entry
/// with the smallest crowding distance is evicted (first one on ties).
class pareto_archive
{
public:
    explicit pareto_archive(std::size_t capacity = 100) : m_capacity(capacity)
    {
        if (capacity == 0) {
            throw std::invalid_argument("pareto_archive: capacity must be positive");
        }
    }

    [[nodiscard]] std::size_t capacity() const noexcept { return m_capacity; }
    [[nodiscard]] std::size_t size() const noexcept { return m_entries.size(); }
    [[nodiscard]] bool empty() const noexcept { return m_entries.empty(); }
    [[nodiscard]] const std::vector<archive_entry> &entries() const noexcept { return m_entries; }

    /// Returns true if the candidate was stored (it may still be evicted later).
    bool offer(archive_entry candidate)
    {
        for (const auto &e : m_entries) {
            if (dominates(e.objectives, e.total_violation, candidate.objectives, candidate.total_violation)) {
                return false;
            }
            // An exact objective-space duplicate adds nothing to the front.
            if (e.total_violation == candidate.total_violation && e.objectives == candidate.objectives) {
                return false;
            }
        }
        std::erase_if(m_entries, [&](const archive_entry &e) {
            return dominates(candidate.objectives, candidate.total_violation, e.objectives, e.total_violation);
        });
        m_entries.push_back(std::move(candidate));
        if (m_entries.size() > m_capacity) {
            evict_most_crowded();
        }
        return true;
    }

    bool offer(const pollen &p) { return offer(archive_entry::from(p)); }

    void merge(const pareto_archive &other)
    {
        for (const auto &e : other.entries()) {
            offer(e);
        }
    }

    /// Entries ordered by the first objective, ties by the remaining ones.
    [[nodiscard]] std::vector<archive_entry> sorted() const
    {
        auto out = m_entries;
        std::stable_sort(out.begin(), out.end(),
                         [](const archive_entry &a, const archive_entry &b) { return a.objectives < b.objectives; });
        return out;
    }

private:
    void evict_most_crowded()
    {
        std::vector<std::vector<double>> pts;
        pts.reserve(m_entries.size());
        for (const auto &e : m_entries) {
            pts.push_back(e.objectives);
        }
        const auto dist = crowding_distances(pts);
        const auto victim = std::min_element(dist.begin(), dist.end()) - dist.begin();
        m_entries.erase(m_entries.begin() + victim);
    }

    std::size_t m_capacity;
    std::vector<archive_entry> m_entries;
};

inline pareto_archive update_archive(pareto_archive archive, archive_entry candidate)
{
    archive.offer(std::move(candidate));
    return archive;
}

struct mofpa_params {
    fpa_params fpa{};
    std::size_t archive_capacity = 100;
    weight_mode weights = weight_mode::uniform_random;
    weight_schedule schedule = weight_schedule::per_iteration;
    /// Number of fixed-weight runs in the per-run-sweep schedule.
    std::size_t sweep_runs = 20;

    void validate() const
    {
        fpa.validate();
        if (archive_capacity == 0) {
            throw std::invalid_argument("mofpa_params: archive capacity must be positive");
        }
        if (schedule == weight_schedule::per_run_sweep && sweep_runs == 0) {
            throw std::invalid_argument("mofpa_params: sweep_runs must be positive");
        }
    }
};

namespace detail
{
inline void run_per_iteration(const problem_definition &prob, const mofpa_params &params, rng &r, pareto_archive &archive)
{
    // Weights come from their own stream so the pollination draws do not depend on the mode.
    rng weight_rng = r.substream(0);
    weight_vector w = draw_weights(prob.objective_count, params.weights, weight_rng, 1);
    pollinate(
        prob, params.fpa, r, [&](const pollen &p) { return scalarize(p.objectives(), w); },
        [&](std::size_t it) {
            w = draw_weights(prob.objective_count, params.weights, weight_rng, it + 1);
            return true;
        },
        [&](const pollen &p) { archive.offer(p); });
}

inline void run_sweep(const problem_definition &prob, const mofpa_params &params, rng &r, pareto_archive &archive)
{
    rng weight_rng = r.substream(0);
    for (std::size_t k = 0; k < params.sweep_runs; ++k) {
        const weight_vector w = draw_weights(prob.objective_count, params.weights, weight_rng, k + 1);
        rng run_rng = r.substream(k + 1);
        pareto_archive local(params.archive_capacity);
        auto trace = pollinate(
            prob, params.fpa, run_rng, [&](const pollen &p) { return scalarize(p.objectives(), w); },
            [](std::size_t) { return false; }, [&](const pollen &p) { local.offer(p); });
        local.offer(*trace.best);
        archive.merge(local);
    }
}
} // namespace detail

/// Multi-objective flower pollination by random-weight scalarization.
///
/// Every evaluated candidate is offered to the returned archive. See `weight_schedule`
/// for the two ways weights are assigned.
inline pareto_archive mofpa_run(const problem_definition &prob, const mofpa_params &params)
{
    if (prob.objective_count < 2) {
        throw contract_error("mofpa_run: problem has a single objective; use fpa_minimize");
    }
    params.validate();
    rng r(params.fpa.seed);
    pareto_archive archive(params.archive_capacity);
    if (params.schedule == weight_schedule::per_iteration) {
        detail::run_per_iteration(prob, params, r, archive);
    } else {
        detail::run_sweep(prob, params, r, archive);
    }
    return archive;
}

} // namespace flora

#endif
