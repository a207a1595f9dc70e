// Command-line driver: run experiments, score fronts, export reference fronts.

#include <cstddef>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include <flora/cli.hpp>

int main(int argc, char **argv)
{
    using namespace flora;

    CLI::App app{"flora: flower pollination optimization (single and multi-objective)"};
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML config file; command-line flags take precedence");

    cli::run_config cfg;
    auto &fpa = cfg.params.fpa;
    std::string weights = "random";
    std::string schedule = "per-iter";
    std::string mode = "enumerate-s";
    std::string steps = "positive";

    auto *run = app.add_subcommand("run", "run the solver and write fronts, metrics and a plot");
    run->add_option("--problem", cfg.problem, "zdt1|zdt2|zdt3|lz|discbrake|sphere")->capture_default_str();
    run->add_option("--dim", cfg.dimension, "decision-space dimension (0 = problem default)")->capture_default_str();
    run->add_option("--pop", fpa.population, "population size n")->capture_default_str();
    run->add_option("--iters", fpa.max_iterations, "iterations t")->capture_default_str();
    run->add_option("--p", fpa.switch_probability, "switch probability")->capture_default_str();
    run->add_option("--lambda", fpa.levy.lambda, "Levy exponent")->capture_default_str();
    run->add_option("--gamma", fpa.gamma, "global step scale")->capture_default_str();
    run->add_option("--steps", steps, "sign of Levy multipliers in the global move: positive|signed")
        ->check(CLI::IsMember({"positive", "signed"}))
        ->capture_default_str();
    run->add_option("--seed", fpa.seed, "first seed; repetition k uses seed + k")->capture_default_str();
    run->add_option("--reps", cfg.repetitions, "number of repetitions")->capture_default_str();
    run->add_option("--archive", cfg.params.archive_capacity, "Pareto archive capacity")->capture_default_str();
    run->add_option("--weights", weights, "random|lds")
        ->check(CLI::IsMember({"random", "lds"}))
        ->capture_default_str();
    run->add_option("--schedule", schedule, "per-iter|sweep")
        ->check(CLI::IsMember({"per-iter", "sweep"}))
        ->capture_default_str();
    run->add_option("--sweep-runs", cfg.params.sweep_runs, "fixed-weight runs in sweep schedule")->capture_default_str();
    run->add_option("--mode", mode, "disc brake integer handling: round|enumerate-s")
        ->check(CLI::IsMember({"round", "enumerate-s"}))
        ->capture_default_str();
    run->add_option("--ref-points", cfg.reference_points, "reference front size for metrics")->capture_default_str();
    run->add_option("--out", cfg.front_out, "front CSV (per repetition: <stem>_seed<k>.csv)")->capture_default_str();
    run->add_option("--metrics-out", cfg.metrics_out, "metrics JSON")->capture_default_str();
    run->add_option("--plot", cfg.plot_out, "SVG scatter of the median repetition");

    std::string metrics_front;
    std::string metrics_problem;
    std::size_t metrics_points = 1000;
    auto *metrics = app.add_subcommand("metrics", "recompute E_f and D_g of a front CSV");
    metrics->add_option("front_csv", metrics_front, "front CSV with f1,f2 columns")->required();
    metrics->add_option("--problem", metrics_problem, "zdt1|zdt2|zdt3|lz")->required();
    metrics->add_option("--ref-points", metrics_points, "reference front size")->capture_default_str();

    std::string front_problem;
    std::size_t front_points = 1000;
    std::string front_out;
    auto *front = app.add_subcommand("front", "export the analytic reference front as CSV");
    front->add_option("--problem", front_problem, "zdt1|zdt2|zdt3|lz")->required();
    front->add_option("--points", front_points, "number of points")->capture_default_str();
    front->add_option("--out", front_out, "output CSV (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::usage_error;
    }

    if (*run) {
        cfg.params.weights = weights == "lds" ? weight_mode::low_discrepancy : weight_mode::uniform_random;
        cfg.params.schedule = schedule == "sweep" ? weight_schedule::per_run_sweep : weight_schedule::per_iteration;
        fpa.steps = steps == "signed" ? levy_sign::symmetric : levy_sign::positive;
        cfg.mode = mode == "round" ? integer_mode::round_on_evaluate : integer_mode::enumerate_s;
        return cli::run_command(cfg);
    }
    if (*metrics) {
        return cli::metrics_command(metrics_front, metrics_problem, metrics_points);
    }
    return cli::front_command(front_problem, front_points, front_out);
}
