// Test-only oracles. Nothing here calls into the library code it is used to check.

#ifndef FLORA_TESTS_SUPPORT_HPP
#define FLORA_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace flora::oracle
{

/// Plain Pareto dominance (minimization), written out independently of flora::dominates.
inline bool pareto_dominates(const std::vector<double> &a, const std::vector<double> &b)
{
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
        strict = strict || a[i] < b[i];
    }
    return strict;
}

/// O(n^2) non-dominated subset, duplicates collapsed, sorted lexicographically.
inline std::vector<std::vector<double>> brute_force_nondominated(const std::vector<std::vector<double>> &pts)
{
    std::vector<std::vector<double>> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < pts.size() && !dominated; ++j) {
            dominated = j != i && pareto_dominates(pts[j], pts[i]);
        }
        if (!dominated) {
            out.push_back(pts[i]);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline bool mutually_nondominated(const std::vector<std::vector<double>> &pts)
{
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i != j && pareto_dominates(pts[i], pts[j])) {
                return false;
            }
        }
    }
    return true;
}

/// Random point cloud in [0,1]^m. Mixes in points on the simplex-like surface
/// sum = 1 so that sets have sizeable non-dominated subsets.
inline std::vector<std::vector<double>> random_points(std::mt19937_64 &gen, std::size_t count, std::size_t m)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::vector<double>> pts(count, std::vector<double>(m));
    for (auto &p : pts) {
        double sum = 0.0;
        for (auto &v : p) {
            v = u(gen);
            sum += v;
        }
        if (u(gen) < 0.5) {
            const double lift = 1.0 + 0.05 * u(gen);
            for (auto &v : p) {
                v = v / sum * lift;
            }
        }
    }
    return pts;
}

/// Slope of log(empirical survival) against log|x| over the largest `fraction` of |x|.
/// Least-squares fit; the k-th largest magnitude has survival k / N.
inline double tail_slope(std::vector<double> samples, double fraction = 0.1)
{
    for (auto &v : samples) {
        v = std::abs(v);
    }
    std::sort(samples.begin(), samples.end(), std::greater<>());
    const auto n = static_cast<double>(samples.size());
    const auto top = static_cast<std::size_t>(fraction * n);
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t k = 0; k < top; ++k) {
        const double x = std::log(samples[k]);
        const double y = std::log(static_cast<double>(k + 1) / n);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const auto t = static_cast<double>(top);
    return (t * sxy - sx * sy) / (t * sxx - sx * sx);
}

inline double pearson(const std::vector<double> &a, const std::vector<double> &b)
{
    const auto n = static_cast<double>(a.size());
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= n;
    mb /= n;
    double cov = 0.0, va = 0.0, vb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        cov += (a[i] - ma) * (b[i] - mb);
        va += (a[i] - ma) * (a[i] - ma);
        vb += (b[i] - mb) * (b[i] - mb);
    }
    return cov / std::sqrt(va * vb);
}

inline std::string slurp(const std::filesystem::path &p)
{
    std::ifstream is(p, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

inline std::size_t count_occurrences(const std::string &hay, const std::string &needle)
{
    std::size_t n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + needle.size())) {
        ++n;
    }
    return n;
}

/// Fresh empty directory under the system temp dir, removed on destruction.
class temp_dir
{
public:
    explicit temp_dir(const std::string &tag)
    {
        std::random_device rd;
        m_path = std::filesystem::temp_directory_path() / ("flora_" + tag + "_" + std::to_string(rd()));
        std::filesystem::create_directories(m_path);
    }
    ~temp_dir()
    {
        std::error_code ec;
        std::filesystem::remove_all(m_path, ec);
    }
    temp_dir(const temp_dir &) = delete;
    temp_dir &operator=(const temp_dir &) = delete;

    [[nodiscard]] const std::filesystem::path &path() const noexcept { return m_path; }
    [[nodiscard]] std::string operator/(const std::string &name) const { return (m_path / name).string(); }

private:
    std::filesystem::path m_path;
};

} // namespace flora::oracle

#endif
