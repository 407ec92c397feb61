#include "primecurve/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "primecurve/error.hpp"
#include "primecurve/parallel.hpp"

namespace primecurve {

const char* to_string(SensitivityAxis axis) {
    switch (axis) {
        case SensitivityAxis::FitRange: return "fit-range";
        case SensitivityAxis::Normalization: return "normalization";
        case SensitivityAxis::EnsembleSize: return "ensemble-size";
        case SensitivityAxis::SamplingDensity: return "density";
    }
    return "unknown";
}

SensitivityAxis parse_axis(const std::string& name) {
    if (name == "fit-range") return SensitivityAxis::FitRange;
    if (name == "normalization") return SensitivityAxis::Normalization;
    if (name == "ensemble-size") return SensitivityAxis::EnsembleSize;
    if (name == "density") return SensitivityAxis::SamplingDensity;
    throw Error(ErrorCategory::Config, "unknown sensitivity axis: " + name);
}

std::vector<std::size_t> default_density_sweep() {
    return {1u << 11, 1u << 12, 1u << 13, 1u << 14};
}

namespace {

struct MeanStd {
    double mean = 0.0;
    double stddev = 0.0;
};

MeanStd mean_std(const std::vector<double>& values) {
    MeanStd out;
    double lo = values.front(), hi = values.front();
    double sum = 0.0;
    for (double v : values) {
        sum += v;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    // Identical values average to themselves bit-exactly regardless of count.
    out.mean = lo == hi ? lo : sum / static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values) {
        double d = v - out.mean;
        ss += d * d;
    }
    out.stddev = std::sqrt(ss / static_cast<double>(values.size()));
    return out;
}

std::vector<ModelKind> ranking_of(const std::vector<ModelKind>& kinds,
                                  const std::vector<double>& means) {
    std::vector<std::size_t> idx(kinds.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (means[a] != means[b]) return means[a] > means[b];
        return std::string(to_string(kinds[a])) <
               std::string(to_string(kinds[b]));
    });
    std::vector<ModelKind> ranking;
    for (std::size_t i : idx) ranking.push_back(kinds[i]);
    return ranking;
}

// Fills the report's deviation and ordering fields from its slope matrix.
// Deviation is the largest pairwise gap, or the largest consecutive gap when
// `consecutive` is set (the drift statistic for the density axis).
void finish_report(SensitivityReport& report, bool consecutive) {
    std::size_t kinds = report.kinds.size();
    std::size_t configs = report.labels.size();
    report.max_abs_deviation.assign(kinds, 0.0);
    for (std::size_t k = 0; k < kinds; ++k) {
        double worst = 0.0;
        if (consecutive) {
            for (std::size_t c = 0; c + 1 < configs; ++c)
                worst = std::max(worst, std::abs(report.mean_slopes[k][c + 1] -
                                                 report.mean_slopes[k][c]));
        } else {
            for (std::size_t a = 0; a < configs; ++a)
                for (std::size_t b = a + 1; b < configs; ++b)
                    worst = std::max(worst, std::abs(report.mean_slopes[k][a] -
                                                     report.mean_slopes[k][b]));
        }
        report.max_abs_deviation[k] = worst;
    }
    report.ordering_invariant = true;
    std::vector<double> first(kinds);
    for (std::size_t k = 0; k < kinds; ++k) first[k] = report.mean_slopes[k][0];
    std::vector<ModelKind> reference = ranking_of(report.kinds, first);
    for (std::size_t c = 1; c < configs; ++c) {
        std::vector<double> means(kinds);
        for (std::size_t k = 0; k < kinds; ++k)
            means[k] = report.mean_slopes[k][c];
        if (ranking_of(report.kinds, means) != reference)
            report.ordering_invariant = false;
    }
}

// Per-(kind, realization) slope table for one axis configuration count,
// computed by a caller-provided evaluation of each realization.  Prime is
// deterministic, so it is computed once and replicated.
struct SlopeTable {
    // [kind][config][realization]
    std::vector<std::vector<std::vector<double>>> slopes;
};

template <typename PerRealization>
SlopeTable sweep_realizations(const ExperimentConfig& cfg, std::size_t configs,
                              unsigned threads, PerRealization per) {
    SlopeTable table;
    table.slopes.assign(
        cfg.model_kinds.size(),
        std::vector<std::vector<double>>(
            configs, std::vector<double>(cfg.realizations, 0.0)));

    struct Task {
        ModelKind kind;
        std::size_t kind_pos;
        std::size_t index;
    };
    std::vector<Task> tasks;
    for (std::size_t k = 0; k < cfg.model_kinds.size(); ++k) {
        ModelKind kind = cfg.model_kinds[k];
        std::size_t count = kind == ModelKind::Prime ? 1 : cfg.realizations;
        for (std::size_t i = 0; i < count; ++i) tasks.push_back({kind, k, i});
    }
    parallel_for_index(tasks.size(), threads, [&](std::size_t t) {
        const Task& task = tasks[t];
        std::vector<double> per_config = per(task.kind, task.index);
        for (std::size_t c = 0; c < configs; ++c)
            table.slopes[task.kind_pos][c][task.index] = per_config[c];
    });
    for (std::size_t k = 0; k < cfg.model_kinds.size(); ++k) {
        if (cfg.model_kinds[k] != ModelKind::Prime) continue;
        for (std::size_t c = 0; c < configs; ++c)
            for (std::size_t i = 1; i < cfg.realizations; ++i)
                table.slopes[k][c][i] = table.slopes[k][c][0];
    }
    return table;
}

void fill_from_table(SensitivityReport& report, const SlopeTable& table) {
    std::size_t kinds = report.kinds.size();
    std::size_t configs = report.labels.size();
    report.mean_slopes.assign(kinds, std::vector<double>(configs, 0.0));
    report.stddev_slopes.assign(kinds, std::vector<double>(configs, 0.0));
    for (std::size_t k = 0; k < kinds; ++k)
        for (std::size_t c = 0; c < configs; ++c) {
            MeanStd ms = mean_std(table.slopes[k][c]);
            report.mean_slopes[k][c] = ms.mean;
            report.stddev_slopes[k][c] = ms.stddev;
        }
}

}  // namespace

SensitivityReport fit_range_sensitivity(const ExperimentConfig& cfg,
                                        unsigned threads) {
    cfg.validate();
    if (cfg.m_lo > 2 || cfg.m_hi < 8)
        throw Error(ErrorCategory::Config,
                    "fit-range sensitivity needs m_range covering [2, 8]");
    const std::vector<std::pair<int, int>> windows = {{2, 8}, {3, 7}, {4, 8}};

    SensitivityReport report;
    report.axis = SensitivityAxis::FitRange;
    report.kinds = cfg.model_kinds;
    for (auto [lo, hi] : windows)
        report.labels.push_back("m[" + std::to_string(lo) + "," +
                                std::to_string(hi) + "]");

    // One simulation, three refits per realization.
    EnsembleRun run = run_ensemble(cfg, threads);
    SlopeTable table;
    table.slopes.assign(
        cfg.model_kinds.size(),
        std::vector<std::vector<double>>(
            windows.size(), std::vector<double>(cfg.realizations, 0.0)));
    for (std::size_t k = 0; k < cfg.model_kinds.size(); ++k)
        for (std::size_t i = 0; i < cfg.realizations; ++i) {
            const RealizationResult& r = run.results[k * cfg.realizations + i];
            for (std::size_t w = 0; w < windows.size(); ++w)
                table.slopes[k][w][i] =
                    fit_scaling(r.profile, windows[w].first, windows[w].second)
                        .slope;
        }
    fill_from_table(report, table);
    finish_report(report, false);
    return report;
}

SensitivityReport normalization_sensitivity(const ExperimentConfig& cfg,
                                            unsigned threads) {
    cfg.validate();
    const std::vector<NormMethod> methods = {NormMethod::CentroidDiameter,
                                             NormMethod::MaxRadius,
                                             NormMethod::BoundingBox};
    SensitivityReport report;
    report.axis = SensitivityAxis::Normalization;
    report.kinds = cfg.model_kinds;
    for (NormMethod m : methods) report.labels.push_back(to_string(m));

    SamplingGrid grid = SamplingGrid::uniform(cfg.sample_count);
    SlopeTable table = sweep_realizations(
        cfg, methods.size(), threads,
        [&](ModelKind kind, std::size_t index) {
            std::uint64_t seed = realization_seed(cfg, kind, index);
            SpectralModel model =
                build_model(kind, cfg.n, seed, cfg.cramer_max_attempts);
            CurveSample sample = evaluate(model, grid);
            std::vector<double> slopes;
            for (NormMethod method : methods) {
                NormalizedSample normalized = normalize(sample.points, method);
                BoxCountProfile prof = profile(normalized.points, cfg.m_lo,
                                               cfg.m_hi, cfg.counting_mode);
                slopes.push_back(
                    fit_scaling(prof, cfg.fit_lo, cfg.fit_hi).slope);
            }
            return slopes;
        });
    fill_from_table(report, table);
    finish_report(report, false);
    return report;
}

SensitivityReport ensemble_size_sensitivity(const ExperimentConfig& cfg,
                                            std::size_t large_realizations,
                                            unsigned threads) {
    cfg.validate();
    if (large_realizations <= cfg.realizations)
        throw Error(ErrorCategory::Config,
                    "ensemble-size sensitivity needs a larger second size");
    ExperimentConfig big = cfg;
    big.realizations = large_realizations;
    // One run; the smaller ensemble is its per-kind prefix (seeds depend on
    // index only), which is exactly the nested comparison.
    EnsembleRun run = run_ensemble(big, threads);
    EnsembleSummary small = summarize_prefix(run, cfg.realizations);

    SensitivityReport report;
    report.axis = SensitivityAxis::EnsembleSize;
    report.kinds = cfg.model_kinds;
    report.labels = {"R=" + std::to_string(cfg.realizations),
                     "R=" + std::to_string(large_realizations)};
    report.mean_slopes.assign(cfg.model_kinds.size(), {0.0, 0.0});
    report.stddev_slopes.assign(cfg.model_kinds.size(), {0.0, 0.0});
    for (std::size_t k = 0; k < cfg.model_kinds.size(); ++k) {
        const KindSummary& s = small.for_kind(cfg.model_kinds[k]);
        const KindSummary& l = run.summary.for_kind(cfg.model_kinds[k]);
        report.mean_slopes[k] = {s.mean_slope, l.mean_slope};
        report.stddev_slopes[k] = {s.stddev_slope, l.stddev_slope};
    }
    finish_report(report, false);
    return report;
}

SensitivityReport density_sensitivity(const ExperimentConfig& cfg,
                                      const std::vector<std::size_t>& densities,
                                      unsigned threads) {
    cfg.validate();
    if (densities.size() < 2)
        throw Error(ErrorCategory::Config,
                    "density sensitivity needs at least two densities");
    for (std::size_t i = 0; i < densities.size(); ++i) {
        if (densities[i] < 2)
            throw Error(ErrorCategory::Config, "density must be >= 2");
        if (i > 0 && densities[i] <= densities[i - 1])
            throw Error(ErrorCategory::Config, "densities must increase");
    }
    SensitivityReport report;
    report.axis = SensitivityAxis::SamplingDensity;
    report.kinds = cfg.model_kinds;
    for (std::size_t d : densities)
        report.labels.push_back("N=" + std::to_string(d));

    std::vector<SamplingGrid> grids;
    for (std::size_t d : densities) grids.push_back(SamplingGrid::uniform(d));

    SlopeTable table = sweep_realizations(
        cfg, densities.size(), threads,
        [&](ModelKind kind, std::size_t index) {
            std::uint64_t seed = realization_seed(cfg, kind, index);
            // Same model across densities: only the grid changes.
            SpectralModel model =
                build_model(kind, cfg.n, seed, cfg.cramer_max_attempts);
            std::vector<double> slopes;
            for (const SamplingGrid& grid : grids) {
                CurveSample sample = evaluate(model, grid);
                NormalizedSample normalized =
                    normalize(sample.points, cfg.normalization);
                BoxCountProfile prof = profile(normalized.points, cfg.m_lo,
                                               cfg.m_hi, cfg.counting_mode);
                slopes.push_back(
                    fit_scaling(prof, cfg.fit_lo, cfg.fit_hi).slope);
            }
            return slopes;
        });
    fill_from_table(report, table);
    finish_report(report, true);
    return report;
}

}  // namespace primecurve
