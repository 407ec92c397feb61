#include "primecurve/commands.hpp"

#include <cmath>
#include <fstream>
#include <string>

#include "primecurve/error.hpp"
#include "primecurve/io.hpp"
#include "primecurve/version.hpp"

namespace primecurve {

namespace {

using nlohmann::json;

void ensure_directory(const std::filesystem::path& dir) {
    if (dir.empty())
        throw Error(ErrorCategory::Usage, "--out directory must not be empty");
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw Error(ErrorCategory::Io,
                    "cannot create output directory: " + dir.string());
}

RunManifest new_manifest(const std::string& command) {
    RunManifest manifest;
    manifest.tool = kToolName;
    manifest.version = kVersion;
    manifest.command = command;
    manifest.created = current_utc_timestamp();
    return manifest;
}

void write_json_file(const std::filesystem::path& path, const json& doc) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCategory::Io, "cannot open for writing: " + path.string());
    out << doc.dump(2) << '\n';
    out.flush();
    if (!out)
        throw Error(ErrorCategory::Io, "write failed: " + path.string());
}

json fit_to_json(const ScalingFit& fit) {
    return json{{"window", {{"lo", fit.m_lo}, {"hi", fit.m_hi}}},
                {"slope", fit.slope},
                {"intercept", fit.intercept},
                {"residual_rms", fit.residual_rms}};
}

json summary_to_json(const EnsembleSummary& summary) {
    json kinds = json::array();
    for (const KindSummary& s : summary.kinds)
        kinds.push_back({{"kind", to_string(s.kind)},
                         {"realizations", s.realizations},
                         {"mean_slope", s.mean_slope},
                         {"stddev_slope", s.stddev_slope},
                         {"min_slope", s.min_slope},
                         {"max_slope", s.max_slope}});
    return kinds;
}

json comparison_to_json(const ModelComparison& cmp) {
    json ranking = json::array();
    for (ModelKind kind : cmp.ranking) ranking.push_back(to_string(kind));
    json differences = json::array();
    for (const auto& [pair, diff] : cmp.differences)
        differences.push_back({{"first", pair.first},
                               {"second", pair.second},
                               {"difference", diff}});
    return json{{"ranking", ranking},
                {"has_ties", cmp.has_ties},
                {"differences", differences}};
}

json report_to_json(const SensitivityReport& report) {
    json kinds = json::array();
    for (ModelKind kind : report.kinds) kinds.push_back(to_string(kind));
    return json{{"axis", to_string(report.axis)},
                {"labels", report.labels},
                {"kinds", kinds},
                {"mean_slopes", report.mean_slopes},
                {"stddev_slopes", report.stddev_slopes},
                {"max_abs_deviation", report.max_abs_deviation},
                {"ordering_invariant", report.ordering_invariant}};
}

void write_report_csv(const std::filesystem::path& path,
                      const SensitivityReport& report) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCategory::Io, "cannot open for writing: " + path.string());
    out << "kind,configuration,mean_slope,stddev_slope\n";
    for (std::size_t k = 0; k < report.kinds.size(); ++k)
        for (std::size_t c = 0; c < report.labels.size(); ++c)
            out << to_string(report.kinds[k]) << ',' << report.labels[c] << ','
                << format_double(report.mean_slopes[k][c]) << ','
                << format_double(report.stddev_slopes[k][c]) << '\n';
    out.flush();
    if (!out)
        throw Error(ErrorCategory::Io, "write failed: " + path.string());
}

}  // namespace

RunManifest cmd_curve(const CurveOptions& options) {
    if (options.n < 2)
        throw Error(ErrorCategory::Usage, "curve: --n must be >= 2");
    if (options.kind == ModelKind::Cramer && options.n < 5)
        throw Error(ErrorCategory::Usage, "curve: --model cramer needs --n >= 5");
    if (options.samples < 2)
        throw Error(ErrorCategory::Usage, "curve: --samples must be >= 2");
    ensure_directory(options.out_dir);

    SamplingGrid grid = SamplingGrid::uniform(options.samples);
    SpectralModel model = build_model(options.kind, options.n, options.seed,
                                      options.cramer_max_attempts);
    CurveSample sample = evaluate(model, grid);
    NormalizedSample normalized =
        normalize(sample.points, options.normalization);
    write_curve_csv(options.out_dir / "curve.csv", grid, normalized.points);

    RunManifest manifest = new_manifest("curve");
    manifest.config = {{"n", options.n},
                       {"samples", options.samples},
                       {"model", to_string(options.kind)},
                       {"seed", options.seed},
                       {"normalization", to_string(options.normalization)},
                       {"cramer_max_attempts", options.cramer_max_attempts}};
    manifest.results = {
        {"terms", model.terms.size()},
        {"l2_norm_squared", l2_norm_squared(model)},
        {"centroid_before",
         {{"x", normalized.centroid_before.x},
          {"y", normalized.centroid_before.y}}},
        {"scale_factor", normalized.scale_factor}};
    attach_file(manifest, options.out_dir, "curve.csv");
    write_manifest(manifest, options.out_dir);
    return manifest;
}

RunManifest cmd_boxcount(const BoxcountOptions& options) {
    if (options.m_lo < 1 || options.m_lo > options.m_hi ||
        options.m_hi > kMaxBoxScale)
        throw Error(ErrorCategory::Usage, "boxcount: bad --m-lo/--m-hi range");
    if (options.fit_lo < options.m_lo || options.fit_lo >= options.fit_hi ||
        options.fit_hi > options.m_hi)
        throw Error(ErrorCategory::Usage,
                    "boxcount: fit window outside m range");
    ensure_directory(options.out_dir);

    std::vector<Point> points;
    json input;
    std::string normalization = "none";
    if (options.self_test) {
        points = self_test_points(*options.self_test, options.samples);
        input = {{"self_test", to_string(*options.self_test)},
                 {"samples", points.size()}};
        // The point self-test is degenerate by design and skips
        // normalization; the scaling pipeline handles it directly.
        if (*options.self_test != SelfTestKind::Point) {
            NormalizedSample normalized =
                normalize(points, options.normalization);
            points = std::move(normalized.points);
            normalization = to_string(options.normalization);
        }
    } else {
        if (options.n < 2)
            throw Error(ErrorCategory::Usage,
                        "boxcount: --n must be >= 2 (or use --self-test)");
        if (options.kind == ModelKind::Cramer && options.n < 5)
            throw Error(ErrorCategory::Usage,
                        "boxcount: --model cramer needs --n >= 5");
        if (options.samples < 2)
            throw Error(ErrorCategory::Usage, "boxcount: --samples must be >= 2");
        SamplingGrid grid = SamplingGrid::uniform(options.samples);
        SpectralModel model = build_model(options.kind, options.n, options.seed,
                                          options.cramer_max_attempts);
        CurveSample sample = evaluate(model, grid);
        NormalizedSample normalized =
            normalize(sample.points, options.normalization);
        points = std::move(normalized.points);
        normalization = to_string(options.normalization);
        input = {{"n", options.n},
                 {"samples", options.samples},
                 {"model", to_string(options.kind)},
                 {"seed", options.seed}};
    }

    BoxCountProfile prof =
        profile(points, options.m_lo, options.m_hi, options.mode);
    ScalingFit fit = fit_scaling(prof, options.fit_lo, options.fit_hi);
    write_boxcount_csv(options.out_dir / "boxcount.csv", prof);
    json fit_json = fit_to_json(fit);
    fit_json["mode"] = to_string(options.mode);
    write_json_file(options.out_dir / "fit.json", fit_json);

    RunManifest manifest = new_manifest("boxcount");
    manifest.config = {{"input", input},
                       {"normalization", normalization},
                       {"m_range", {{"lo", options.m_lo}, {"hi", options.m_hi}}},
                       {"fit_window",
                        {{"lo", options.fit_lo}, {"hi", options.fit_hi}}},
                       {"counting_mode", to_string(options.mode)}};
    manifest.results = {{"fit", fit_json}};
    attach_file(manifest, options.out_dir, "boxcount.csv");
    attach_file(manifest, options.out_dir, "fit.json");
    write_manifest(manifest, options.out_dir);
    return manifest;
}

RunManifest cmd_ensemble(const EnsembleOptions& options) {
    ExperimentConfig cfg = load_config(options.config_path, options.overrides);
    ensure_directory(options.out_dir);
    EnsembleRun run = run_ensemble(cfg, options.threads);

    write_realizations_csv(options.out_dir / "realizations.csv", run.results);
    write_summary_csv(options.out_dir / "summary.csv", run.summary);
    write_mean_exponents_csv(options.out_dir / "mean_exponents.csv", cfg,
                             run.summary);

    RunManifest manifest = new_manifest("ensemble");
    manifest.config = config_to_json(cfg);
    manifest.results = {{"summary", summary_to_json(run.summary)}};
    if (cfg.model_kinds.size() >= 2) {
        ModelComparison cmp = compare_models(run.summary);
        write_json_file(options.out_dir / "comparison.json",
                        comparison_to_json(cmp));
        manifest.results["comparison"] = comparison_to_json(cmp);
    }
    attach_file(manifest, options.out_dir, "realizations.csv");
    attach_file(manifest, options.out_dir, "summary.csv");
    attach_file(manifest, options.out_dir, "mean_exponents.csv");
    if (cfg.model_kinds.size() >= 2)
        attach_file(manifest, options.out_dir, "comparison.json");
    write_manifest(manifest, options.out_dir);
    return manifest;
}

namespace {

struct CheckRow {
    std::string axis;
    std::string kind;
    std::string statistic;
    double value = 0.0;
    std::string threshold;
    std::string status;
};

void append_threshold_checks(std::vector<CheckRow>& rows,
                             const SensitivityReport& report,
                             double threshold, const std::string& label) {
    for (std::size_t k = 0; k < report.kinds.size(); ++k) {
        CheckRow row;
        row.axis = to_string(report.axis);
        row.kind = to_string(report.kinds[k]);
        row.statistic = "max_abs_deviation";
        row.value = report.max_abs_deviation[k];
        row.threshold = label;
        row.status = report.max_abs_deviation[k] < threshold ? "pass" : "fail";
        rows.push_back(row);
    }
    rows.push_back({to_string(report.axis), "all", "ordering_invariant",
                    report.ordering_invariant ? 1.0 : 0.0, "1",
                    report.ordering_invariant ? "pass" : "fail"});
}

void append_ensemble_size_checks(std::vector<CheckRow>& rows,
                                 const SensitivityReport& report,
                                 std::size_t r_small, std::size_t r_large) {
    for (std::size_t k = 0; k < report.kinds.size(); ++k) {
        const std::string kind = to_string(report.kinds[k]);
        rows.push_back({to_string(report.axis), kind, "mean_shift",
                        std::abs(report.mean_slopes[k][1] -
                                 report.mean_slopes[k][0]),
                        "none", "info"});
        double se_small = report.stddev_slopes[k][0] /
                          std::sqrt(static_cast<double>(r_small));
        double se_large = report.stddev_slopes[k][1] /
                          std::sqrt(static_cast<double>(r_large));
        CheckRow se_row{to_string(report.axis), kind, "stderr_ratio", 0.0,
                        "1", "info"};
        if (se_small > 0.0) {
            se_row.value = se_large / se_small;
            se_row.status = se_row.value < 1.0 ? "pass" : "fail";
        }
        rows.push_back(se_row);
    }
    rows.push_back({to_string(report.axis), "all", "ordering_invariant",
                    report.ordering_invariant ? 1.0 : 0.0, "1",
                    report.ordering_invariant ? "pass" : "fail"});
}

void append_density_checks(std::vector<CheckRow>& rows,
                           const SensitivityReport& report) {
    for (std::size_t k = 0; k < report.kinds.size(); ++k)
        rows.push_back({to_string(report.axis), to_string(report.kinds[k]),
                        "max_consecutive_drift", report.max_abs_deviation[k],
                        "none", "info"});
    rows.push_back({to_string(report.axis), "all", "ordering_invariant",
                    report.ordering_invariant ? 1.0 : 0.0, "none", "info"});
}

void write_checks_csv(const std::filesystem::path& path,
                      const std::vector<CheckRow>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCategory::Io, "cannot open for writing: " + path.string());
    out << "axis,kind,statistic,value,threshold,status\n";
    for (const CheckRow& row : rows)
        out << row.axis << ',' << row.kind << ',' << row.statistic << ','
            << format_double(row.value) << ',' << row.threshold << ','
            << row.status << '\n';
    out.flush();
    if (!out)
        throw Error(ErrorCategory::Io, "write failed: " + path.string());
}

}  // namespace

RunManifest cmd_robustness(const RobustnessOptions& options) {
    ExperimentConfig cfg = load_config(options.config_path, options.overrides);
    if (options.axes.empty())
        throw Error(ErrorCategory::Usage, "robustness: no axes selected");
    ensure_directory(options.out_dir);
    std::vector<std::size_t> densities =
        options.densities.empty() ? default_density_sweep() : options.densities;

    RunManifest manifest = new_manifest("robustness");
    manifest.config = config_to_json(cfg);
    manifest.config["large_realizations"] = options.large_realizations;
    manifest.config["densities"] = densities;

    json axes_json = json::object();
    std::vector<CheckRow> checks;
    std::vector<std::string> files;
    for (SensitivityAxis axis : options.axes) {
        SensitivityReport report;
        switch (axis) {
            case SensitivityAxis::FitRange:
                report = fit_range_sensitivity(cfg, options.threads);
                append_threshold_checks(checks, report, 0.03, "0.03");
                break;
            case SensitivityAxis::Normalization:
                report = normalization_sensitivity(cfg, options.threads);
                append_threshold_checks(checks, report, 0.02, "0.02");
                break;
            case SensitivityAxis::EnsembleSize:
                report = ensemble_size_sensitivity(
                    cfg, options.large_realizations, options.threads);
                append_ensemble_size_checks(checks, report, cfg.realizations,
                                            options.large_realizations);
                break;
            case SensitivityAxis::SamplingDensity:
                report = density_sensitivity(cfg, densities, options.threads);
                append_density_checks(checks, report);
                break;
        }
        std::string name = std::string(to_string(axis)) + ".csv";
        write_report_csv(options.out_dir / name, report);
        files.push_back(name);
        axes_json[to_string(axis)] = report_to_json(report);
    }
    write_json_file(options.out_dir / "robustness.json",
                    json{{"axes", axes_json}});
    write_checks_csv(options.out_dir / "checks.csv", checks);
    files.push_back("robustness.json");
    files.push_back("checks.csv");

    manifest.results = {{"axes", axes_json}};
    for (const std::string& name : files)
        attach_file(manifest, options.out_dir, name);
    write_manifest(manifest, options.out_dir);
    return manifest;
}

}  // namespace primecurve
