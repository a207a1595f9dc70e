#ifndef FLORA_CLI_HPP
#define FLORA_CLI_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include <flora/benchmarks.hpp>
#include <flora/discbrake.hpp>
#include <flora/fpa.hpp>
#include <flora/io.hpp>
#include <flora/mofpa.hpp>

namespace flora::cli
{

enum exit_code : int { success = 0, usage_error = 2, io_error = 3, numeric_failure = 4 };

/// Defaults: n=50, t=1000, p=0.8, lambda=1.5, unscaled positive Levy steps
/// (gamma=1), archive of 100.
struct run_config {
    std::string problem = "zdt1";
    /// 0 selects the problem's default (30 for the benchmarks, 10 for the sphere).
    std::size_t dimension = 0;
    mofpa_params params{};
    integer_mode mode = integer_mode::enumerate_s;
    std::size_t repetitions = 1;
    std::size_t reference_points = 1000;
    std::string front_out = "front.csv";
    std::string metrics_out = "metrics.json";
    /// Empty means no plot.
    std::string plot_out;
};

class usage : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class io_failure : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

inline std::string to_string(weight_mode m) { return m == weight_mode::uniform_random ? "random" : "lds"; }
inline std::string to_string(weight_schedule s) { return s == weight_schedule::per_iteration ? "per-iter" : "sweep"; }
inline std::string to_string(levy_sign s) { return s == levy_sign::positive ? "positive" : "signed"; }
inline std::string to_string(integer_mode m) { return m == integer_mode::round_on_evaluate ? "round" : "enumerate-s"; }

inline bool is_known_problem(const std::string &p)
{
    return parse_benchmark(p).has_value() || p == "discbrake" || p == "sphere";
}

/// Path of repetition `rep`'s front file: the configured path itself for a single
/// repetition, otherwise `<stem>_seed<seed><ext>` next to it.
inline std::string repetition_path(const std::string &base, std::size_t repetitions, std::uint64_t seed)
{
    if (repetitions == 1) {
        return base;
    }
    const std::filesystem::path p(base);
    auto name = p.stem().string() + "_seed" + std::to_string(seed) + p.extension().string();
    return (p.parent_path() / name).string();
}

inline void validate(const run_config &cfg)
{
    if (!is_known_problem(cfg.problem)) {
        throw usage("unknown problem '" + cfg.problem + "'");
    }
    if (cfg.repetitions == 0) {
        throw usage("--reps must be positive");
    }
    if (cfg.reference_points < 2) {
        throw usage("reference front needs at least two points");
    }
    if (cfg.problem == "lz" && cfg.dimension != 0 && cfg.dimension < 3) {
        throw usage("lz needs at least three variables");
    }
    if (parse_benchmark(cfg.problem) && cfg.dimension != 0 && cfg.dimension < 2) {
        throw usage("benchmark problems need at least two variables");
    }
    try {
        cfg.params.validate();
    } catch (const std::invalid_argument &e) {
        throw usage(e.what());
    }
}

namespace detail
{
inline void check_writable(const std::string &path)
{
    if (path.empty()) {
        return;
    }
    const auto dir = std::filesystem::path(path).parent_path();
    if (!dir.empty() && !std::filesystem::is_directory(dir)) {
        throw io_failure("output directory does not exist: " + dir.string());
    }
}

inline void write_file(const std::string &path, const std::string &content)
{
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) {
        throw io_failure("cannot open for writing: " + path);
    }
    os << content;
    if (!os.flush()) {
        throw io_failure("write failed: " + path);
    }
}

/// Linear-interpolated quantile of sorted data.
inline double quantile(const std::vector<double> &sorted, double q)
{
    if (sorted.empty()) {
        return std::nan("");
    }
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

struct repetition {
    std::uint64_t seed = 0;
    std::string csv;
    front_sample front;
    std::optional<double> d_g;
    std::optional<double> e_f;
    std::optional<double> best;
    std::size_t size = 0;
};

inline void require_finite(const front_sample &f)
{
    for (const auto &p : f.points) {
        for (double v : p) {
            if (!std::isfinite(v)) {
                throw std::domain_error("solver produced a non-finite objective");
            }
        }
    }
}

inline repetition run_one(const run_config &cfg, std::uint64_t seed, const front_sample *reference)
{
    repetition rep;
    rep.seed = seed;
    auto params = cfg.params;
    params.fpa.seed = seed;
    std::ostringstream csv;

    if (cfg.problem == "sphere") {
        const auto trace = fpa_minimize(make_sphere_problem(cfg.dimension == 0 ? 10 : cfg.dimension), params.fpa);
        const auto &best = *trace.best;
        for (std::size_t i = 0; i < best.position().size(); ++i) {
            csv << 'x' << i + 1 << ',';
        }
        csv << "f\n";
        for (double v : best.position()) {
            csv << format_number(v) << ',';
        }
        csv << format_number(best.objectives()[0]) << '\n';
        rep.best = best.objectives()[0];
        if (!std::isfinite(*rep.best)) {
            throw std::domain_error("solver produced a non-finite objective");
        }
        rep.size = 1;
    } else if (cfg.problem == "discbrake") {
        const auto archive = solve_disc_brake(params, cfg.mode);
        write_disc_brake_csv(csv, archive);
        rep.front = front_sample::from_archive(archive);
        require_finite(rep.front);
        rep.size = archive.size();
    } else {
        const auto id = *parse_benchmark(cfg.problem);
        const auto archive = mofpa_run(make_benchmark_problem(id, cfg.dimension == 0 ? 30 : cfg.dimension), params);
        rep.front = front_sample::from_archive(archive);
        require_finite(rep.front);
        write_front_csv(csv, rep.front);
        rep.size = archive.size();
        rep.e_f = error_metric_ef(rep.front, *reference);
        rep.d_g = generalized_distance(rep.front, *reference);
    }
    rep.csv = csv.str();
    return rep;
}

inline nlohmann::ordered_json params_json(const run_config &cfg)
{
    const auto &f = cfg.params.fpa;
    nlohmann::ordered_json j;
    j["pop"] = f.population;
    j["iters"] = f.max_iterations;
    j["p"] = f.switch_probability;
    j["lambda"] = f.levy.lambda;
    j["gamma"] = f.gamma;
    j["steps"] = to_string(f.steps);
    j["seed"] = f.seed;
    j["reps"] = cfg.repetitions;
    j["dim"] = cfg.dimension;
    if (cfg.problem != "sphere") {
        j["archive"] = cfg.params.archive_capacity;
        j["weights"] = to_string(cfg.params.weights);
        j["schedule"] = to_string(cfg.params.schedule);
        if (cfg.params.schedule == weight_schedule::per_run_sweep) {
            j["sweep_runs"] = cfg.params.sweep_runs;
        }
    }
    if (cfg.problem == "discbrake") {
        j["mode"] = to_string(cfg.mode);
    }
    if (parse_benchmark(cfg.problem)) {
        j["reference_points"] = cfg.reference_points;
    }
    return j;
}
} // namespace detail

/// Runs `repetitions` seeds (seed, seed+1, ...), then writes every artifact.
/// Nothing is written unless all repetitions succeed.
inline int run_command(const run_config &cfg, std::ostream &err = std::cerr)
{
    try {
        validate(cfg);
        detail::check_writable(cfg.front_out);
        detail::check_writable(cfg.metrics_out);
        detail::check_writable(cfg.plot_out);

        std::optional<front_sample> reference;
        if (const auto id = parse_benchmark(cfg.problem)) {
            reference = true_front(*id, cfg.reference_points);
        }

        std::vector<detail::repetition> reps;
        reps.reserve(cfg.repetitions);
        for (std::size_t k = 0; k < cfg.repetitions; ++k) {
            reps.push_back(detail::run_one(cfg, cfg.params.fpa.seed + k, reference ? &*reference : nullptr));
        }

        nlohmann::ordered_json metrics;
        metrics["problem"] = cfg.problem;
        metrics["params"] = detail::params_json(cfg);
        metrics["per_rep"] = nlohmann::ordered_json::array();
        std::vector<double> dgs;
        for (const auto &r : reps) {
            nlohmann::ordered_json row;
            row["seed"] = r.seed;
            row["points"] = r.size;
            if (r.d_g) {
                row["d_g"] = *r.d_g;
                row["e_f"] = *r.e_f;
                dgs.push_back(*r.d_g);
            }
            if (r.best) {
                row["best"] = *r.best;
            }
            metrics["per_rep"].push_back(row);
        }
        std::size_t plotted = 0;
        if (!dgs.empty()) {
            auto sorted = dgs;
            std::sort(sorted.begin(), sorted.end());
            const double median = detail::quantile(sorted, 0.5);
            metrics["median_d_g"] = median;
            metrics["iqr_d_g"] = detail::quantile(sorted, 0.75) - detail::quantile(sorted, 0.25);
            for (std::size_t k = 1; k < dgs.size(); ++k) {
                if (std::abs(dgs[k] - median) < std::abs(dgs[plotted] - median)) {
                    plotted = k;
                }
            }
        } else {
            metrics["median_d_g"] = nullptr;
            metrics["iqr_d_g"] = nullptr;
        }
        metrics["plotted_seed"] = reps[plotted].seed;

        for (const auto &r : reps) {
            detail::write_file(repetition_path(cfg.front_out, cfg.repetitions, r.seed), r.csv);
        }
        detail::write_file(cfg.metrics_out, metrics.dump(2) + "\n");
        if (!cfg.plot_out.empty() && cfg.problem != "sphere") {
            std::ostringstream svg;
            svg_options opt;
            opt.title = "Pareto front: " + cfg.problem + " (seed " + std::to_string(reps[plotted].seed) + ")";
            write_front_svg(svg, reps[plotted].front, reference ? &*reference : nullptr, opt);
            detail::write_file(cfg.plot_out, svg.str());
        }
        return success;
    } catch (const usage &e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const io_failure &e) {
        err << "error: " << e.what() << '\n';
        return io_error;
    } catch (const std::exception &e) {
        err << "error: numeric failure: " << e.what() << '\n';
        return numeric_failure;
    }
}

/// Recomputes E_f and D_g of a front CSV against the analytic reference and prints JSON.
inline int metrics_command(const std::string &csv_path, const std::string &problem, std::size_t reference_points,
                           std::ostream &out = std::cout, std::ostream &err = std::cerr)
{
    const auto id = parse_benchmark(problem);
    if (!id) {
        err << "error: metrics needs a benchmark problem (zdt1|zdt2|zdt3|lz), got '" << problem << "'\n";
        return usage_error;
    }
    if (reference_points < 2) {
        err << "error: reference front needs at least two points\n";
        return usage_error;
    }
    std::ifstream is(csv_path);
    if (!is) {
        err << "error: cannot open " << csv_path << '\n';
        return io_error;
    }
    front_sample front;
    try {
        front = read_front_csv(is);
    } catch (const csv_error &e) {
        err << "error: " << csv_path << ": " << e.what() << '\n';
        return io_error;
    }
    if (front.empty()) {
        err << "error: " << csv_path << ": no points\n";
        return io_error;
    }
    const auto reference = true_front(*id, reference_points);
    nlohmann::ordered_json j;
    j["problem"] = problem;
    j["points"] = front.size();
    j["reference_points"] = reference_points;
    j["e_f"] = error_metric_ef(front, reference);
    j["d_g"] = generalized_distance(front, reference);
    out << j.dump(2) << '\n';
    return success;
}

/// Writes the analytic reference front as CSV (to stdout when `out_path` is empty).
inline int front_command(const std::string &problem, std::size_t points, const std::string &out_path,
                         std::ostream &out = std::cout, std::ostream &err = std::cerr)
{
    const auto id = parse_benchmark(problem);
    if (!id) {
        err << "error: no analytic front for '" << problem << "'\n";
        return usage_error;
    }
    if (points < 2) {
        err << "error: --points must be at least 2\n";
        return usage_error;
    }
    std::ostringstream csv;
    write_front_csv(csv, true_front(*id, points));
    if (out_path.empty()) {
        out << csv.str();
        return success;
    }
    try {
        detail::check_writable(out_path);
        detail::write_file(out_path, csv.str());
    } catch (const io_failure &e) {
        err << "error: " << e.what() << '\n';
        return io_error;
    }
    return success;
}

} // namespace flora::cli

#endif
