#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "primecurve/commands.hpp"
#include "primecurve/error.hpp"
#include "primecurve/io.hpp"
#include "primecurve/version.hpp"

namespace {

using namespace primecurve;

int exit_code_for(ErrorCategory category) {
    switch (category) {
        case ErrorCategory::Usage: return 2;
        case ErrorCategory::Config: return 3;
        case ErrorCategory::Io: return 4;
        case ErrorCategory::Compute: return 5;
    }
    return 1;
}

// Raw CLI values; enums are parsed after CLI11 is done so that error
// messages name the offending flag.
struct CliValues {
    std::int64_t n = 0;
    std::size_t samples = 8192;
    std::string model = "prime";
    std::uint64_t seed = 0;
    std::string normalization = "centroid-diameter";
    int max_attempts = 1000;
    std::string self_test;
    int m_lo = 1;
    int m_hi = 10;
    int fit_lo = 3;
    int fit_hi = 7;
    std::string mode = "points";
    std::string config_path;
    std::vector<std::string> axes = {"fit-range", "normalization",
                                     "ensemble-size", "density"};
    std::size_t large_realizations = 500;
    std::vector<std::size_t> densities;
    unsigned threads = 0;
    std::string out_dir = "out";
    bool has_n = false;
    bool has_samples = false;
    bool has_realizations = false;
    bool has_seed = false;
    bool has_normalization = false;
    std::size_t realizations = 200;
};

void add_model_flags(CLI::App* cmd, CliValues& v) {
    cmd->add_option("--n", v.n, "Series cutoff n")->check(CLI::PositiveNumber);
    cmd->add_option("--samples", v.samples, "Grid node count N");
    cmd->add_option("--model", v.model,
                    "Model kind: prime, random-frequency, cramer, shuffled");
    cmd->add_option("--seed", v.seed, "Base seed");
    cmd->add_option("--normalization", v.normalization,
                    "centroid-diameter, max-radius, bounding-box")
        ->each([&v](const std::string&) { v.has_normalization = true; });
    cmd->add_option("--max-attempts", v.max_attempts,
                    "Resampling cap for the cramer model");
    cmd->add_option("--out", v.out_dir, "Output directory");
}

void add_override_flags(CLI::App* cmd, CliValues& v) {
    cmd->add_option("--config", v.config_path, "Experiment config (JSON)")
        ->required();
    cmd->add_option("--n", v.n, "Override config n")
        ->each([&v](const std::string&) { v.has_n = true; });
    cmd->add_option("--samples", v.samples, "Override config sample_count")
        ->each([&v](const std::string&) { v.has_samples = true; });
    cmd->add_option("--realizations", v.realizations,
                    "Override config realizations")
        ->each([&v](const std::string&) { v.has_realizations = true; });
    cmd->add_option("--seed", v.seed, "Override config base_seed")
        ->each([&v](const std::string&) { v.has_seed = true; });
    cmd->add_option("--threads", v.threads, "Worker threads (0 = hardware)");
    cmd->add_option("--out", v.out_dir, "Output directory");
}

ConfigOverrides make_overrides(const CliValues& v) {
    ConfigOverrides overrides;
    if (v.has_n) overrides.n = v.n;
    if (v.has_samples) overrides.sample_count = v.samples;
    if (v.has_realizations) overrides.realizations = v.realizations;
    if (v.has_seed) overrides.base_seed = v.seed;
    return overrides;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Prime-frequency curve laboratory: builds spectral-model "
                 "curves, box-counting profiles, Monte Carlo ensembles, and "
                 "sensitivity reports."};
    app.set_version_flag("--version",
                         std::string(kToolName) + " " + kVersion);
    app.require_subcommand(1);

    CliValues curve_values;
    CLI::App* curve = app.add_subcommand(
        "curve", "Evaluate one model curve and write it as CSV");
    add_model_flags(curve, curve_values);
    curve->get_option("--n")->required();

    CliValues box_values;
    CLI::App* boxcount = app.add_subcommand(
        "boxcount", "Box-counting profile and scaling fit for one curve");
    add_model_flags(boxcount, box_values);
    boxcount->add_option("--self-test", box_values.self_test,
                         "Synthetic input: line, filled, point");
    boxcount->add_option("--m-lo", box_values.m_lo, "Smallest scale index");
    boxcount->add_option("--m-hi", box_values.m_hi, "Largest scale index");
    boxcount->add_option("--fit-lo", box_values.fit_lo, "Fit window start");
    boxcount->add_option("--fit-hi", box_values.fit_hi, "Fit window end");
    boxcount->add_option("--mode", box_values.mode,
                         "Counting mode: points or segments");

    CliValues ensemble_values;
    CLI::App* ensemble = app.add_subcommand(
        "ensemble", "Seeded Monte Carlo ensemble over the configured kinds");
    add_override_flags(ensemble, ensemble_values);

    CliValues robust_values;
    CLI::App* robustness = app.add_subcommand(
        "robustness", "Sensitivity sweeps over fit range, normalization, "
                      "ensemble size, and sampling density");
    add_override_flags(robustness, robust_values);
    robustness->add_option("--axes", robust_values.axes,
                           "Axes to run: fit-range, normalization, "
                           "ensemble-size, density");
    robustness->add_option("--large-realizations",
                           robust_values.large_realizations,
                           "Second ensemble size for the ensemble-size axis");
    robustness->add_option("--densities", robust_values.densities,
                           "Grid node counts for the density axis");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error category=usage: " << e.what() << '\n';
        return 2;
    }

    try {
        if (curve->parsed()) {
            CurveOptions options;
            options.n = curve_values.n;
            options.samples = curve_values.samples;
            options.kind = parse_model_kind(curve_values.model);
            options.seed = curve_values.seed;
            options.normalization =
                parse_norm_method(curve_values.normalization);
            options.cramer_max_attempts = curve_values.max_attempts;
            options.out_dir = curve_values.out_dir;
            RunManifest manifest = cmd_curve(options);
            std::cout << "curve: " << manifest.files.size()
                      << " data file(s) in " << curve_values.out_dir << '\n';
        } else if (boxcount->parsed()) {
            BoxcountOptions options;
            if (!box_values.self_test.empty()) {
                options.self_test =
                    parse_self_test_kind(box_values.self_test);
                // The filled lattice spans [0,1]^2 exactly; bounding-box
                // normalization keeps box counts at exact powers of four, so
                // it is the default for this input.
                if (*options.self_test == SelfTestKind::Filled &&
                    !box_values.has_normalization)
                    box_values.normalization = "bounding-box";
            }
            options.n = box_values.n;
            options.samples = box_values.samples;
            options.kind = parse_model_kind(box_values.model);
            options.seed = box_values.seed;
            options.normalization = parse_norm_method(box_values.normalization);
            options.cramer_max_attempts = box_values.max_attempts;
            options.m_lo = box_values.m_lo;
            options.m_hi = box_values.m_hi;
            options.fit_lo = box_values.fit_lo;
            options.fit_hi = box_values.fit_hi;
            options.mode = parse_counting_mode(box_values.mode);
            options.out_dir = box_values.out_dir;
            RunManifest manifest = cmd_boxcount(options);
            double slope = manifest.results["fit"]["slope"].get<double>();
            std::cout << "boxcount: slope " << format_double(slope) << " in "
                      << box_values.out_dir << '\n';
        } else if (ensemble->parsed()) {
            EnsembleOptions options;
            options.config_path = ensemble_values.config_path;
            options.overrides = make_overrides(ensemble_values);
            options.threads = ensemble_values.threads;
            options.out_dir = ensemble_values.out_dir;
            RunManifest manifest = cmd_ensemble(options);
            std::cout << "ensemble: " << manifest.files.size()
                      << " data file(s) in " << ensemble_values.out_dir
                      << '\n';
        } else if (robustness->parsed()) {
            RobustnessOptions options;
            options.config_path = robust_values.config_path;
            options.overrides = make_overrides(robust_values);
            options.axes.clear();
            for (const std::string& name : robust_values.axes)
                options.axes.push_back(parse_axis(name));
            options.large_realizations = robust_values.large_realizations;
            options.densities = robust_values.densities;
            options.threads = robust_values.threads;
            options.out_dir = robust_values.out_dir;
            RunManifest manifest = cmd_robustness(options);
            std::cout << "robustness: " << manifest.files.size()
                      << " data file(s) in " << robust_values.out_dir << '\n';
        }
        return 0;
    } catch (const Error& e) {
        std::cerr << "error category=" << to_string(e.category()) << ": "
                  << e.what() << '\n';
        return exit_code_for(e.category());
    } catch (const std::exception& e) {
        std::cerr << "error category=internal: " << e.what() << '\n';
        return 1;
    }
}
