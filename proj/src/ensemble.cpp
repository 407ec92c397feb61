#include "primecurve/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "primecurve/error.hpp"
#include "primecurve/parallel.hpp"
#include "primecurve/rng.hpp"

namespace primecurve {

void ExperimentConfig::validate() const {
    if (n < 2)
        throw Error(ErrorCategory::Config, "config: n must be >= 2");
    if (sample_count < 2)
        throw Error(ErrorCategory::Config, "config: sample_count must be >= 2");
    if (realizations < 1)
        throw Error(ErrorCategory::Config, "config: realizations must be >= 1");
    if (model_kinds.empty())
        throw Error(ErrorCategory::Config, "config: model_kinds must be nonempty");
    std::set<ModelKind> seen(model_kinds.begin(), model_kinds.end());
    if (seen.size() != model_kinds.size())
        throw Error(ErrorCategory::Config, "config: duplicate model kinds");
    if (seen.count(ModelKind::Cramer) && n < 5)
        throw Error(ErrorCategory::Config, "config: cramer kind needs n >= 5");
    if (m_lo < 1 || m_lo > m_hi || m_hi > kMaxBoxScale)
        throw Error(ErrorCategory::Config, "config: bad m_range");
    if (fit_lo < m_lo || fit_lo >= fit_hi || fit_hi > m_hi)
        throw Error(ErrorCategory::Config,
                    "config: fit_window must lie inside m_range with length >= 2");
    if (cramer_max_attempts < 1)
        throw Error(ErrorCategory::Config, "config: cramer_max_attempts must be >= 1");
}

std::uint64_t kind_tag(ModelKind kind) {
    switch (kind) {
        case ModelKind::Prime: return 1;
        case ModelKind::RandomFrequency: return 2;
        case ModelKind::Cramer: return 3;
        case ModelKind::Shuffled: return 4;
    }
    throw Error(ErrorCategory::Compute, "kind_tag: unknown kind");
}

std::uint64_t realization_seed(const ExperimentConfig& cfg, ModelKind kind,
                               std::size_t index) {
    return derive_seed(cfg.base_seed, kind_tag(kind),
                       static_cast<std::uint64_t>(index));
}

namespace {

RealizationResult run_one(const ExperimentConfig& cfg, ModelKind kind,
                          std::size_t index, const SamplingGrid& grid) {
    RealizationResult result;
    result.kind = kind;
    result.index = index;
    result.seed = realization_seed(cfg, kind, index);
    SpectralModel model;
    try {
        model = build_model(kind, cfg.n, result.seed, cfg.cramer_max_attempts);
    } catch (const ResampleExhausted& e) {
        throw ResampleExhausted(std::string(e.what()) + " [kind=" +
                                to_string(kind) + " index=" +
                                std::to_string(index) + " seed=" +
                                std::to_string(result.seed) + "]");
    }
    CurveSample sample = evaluate(model, grid);
    NormalizedSample normalized = normalize(sample.points, cfg.normalization);
    result.profile = profile(normalized.points, cfg.m_lo, cfg.m_hi,
                             cfg.counting_mode);
    result.fit = fit_scaling(result.profile, cfg.fit_lo, cfg.fit_hi);
    return result;
}

KindSummary summarize_kind(ModelKind kind,
                           const std::vector<const RealizationResult*>& results) {
    KindSummary summary;
    summary.kind = kind;
    summary.realizations = results.size();
    double sum = 0.0;
    summary.min_slope = results.front()->fit.slope;
    summary.max_slope = results.front()->fit.slope;
    for (const RealizationResult* r : results) {
        sum += r->fit.slope;
        summary.min_slope = std::min(summary.min_slope, r->fit.slope);
        summary.max_slope = std::max(summary.max_slope, r->fit.slope);
    }
    // Identical values (the deterministic kind) must average to themselves
    // bit-exactly, independent of the realization count.
    double mean = summary.min_slope == summary.max_slope
                      ? summary.min_slope
                      : sum / static_cast<double>(results.size());
    summary.mean_slope = mean;
    double ss = 0.0;
    for (const RealizationResult* r : results) {
        double d = r->fit.slope - mean;
        ss += d * d;
    }
    // Population deviation: describes exactly this ensemble, and a single
    // realization yields zero rather than an undefined value.
    summary.stddev_slope = std::sqrt(ss / static_cast<double>(results.size()));

    std::size_t scales = results.front()->profile.exponents.size();
    summary.mean_exponents.assign(scales, 0.0);
    for (const RealizationResult* r : results)
        for (std::size_t i = 0; i < scales; ++i)
            summary.mean_exponents[i] += r->profile.exponents[i];
    for (double& e : summary.mean_exponents)
        e /= static_cast<double>(results.size());
    return summary;
}

EnsembleSummary summarize(const ExperimentConfig& cfg,
                          const std::vector<RealizationResult>& results,
                          std::size_t per_kind) {
    EnsembleSummary summary;
    for (std::size_t k = 0; k < cfg.model_kinds.size(); ++k) {
        std::vector<const RealizationResult*> slice;
        slice.reserve(per_kind);
        for (std::size_t i = 0; i < per_kind; ++i)
            slice.push_back(&results[k * cfg.realizations + i]);
        summary.kinds.push_back(summarize_kind(cfg.model_kinds[k], slice));
    }
    return summary;
}

}  // namespace

const KindSummary& EnsembleSummary::for_kind(ModelKind kind) const {
    for (const KindSummary& s : kinds)
        if (s.kind == kind) return s;
    throw Error(ErrorCategory::Compute,
                std::string("summary has no kind ") + to_string(kind));
}

RealizationResult run_realization(const ExperimentConfig& cfg, ModelKind kind,
                                  std::size_t index) {
    cfg.validate();
    if (index >= cfg.realizations)
        throw Error(ErrorCategory::Compute, "run_realization: index out of range");
    SamplingGrid grid = SamplingGrid::uniform(cfg.sample_count);
    return run_one(cfg, kind, index, grid);
}

EnsembleRun run_ensemble(const ExperimentConfig& cfg, unsigned threads) {
    cfg.validate();
    SamplingGrid grid = SamplingGrid::uniform(cfg.sample_count);

    EnsembleRun run;
    run.config = cfg;
    run.results.resize(cfg.model_kinds.size() * cfg.realizations);

    // Work items for randomized kinds; the deterministic Prime kind is
    // computed once and replicated (identical by the determinism contract),
    // with only the recorded per-index seed differing.
    struct Task {
        ModelKind kind;
        std::size_t kind_pos;
        std::size_t index;
    };
    std::vector<Task> tasks;
    for (std::size_t k = 0; k < cfg.model_kinds.size(); ++k) {
        ModelKind kind = cfg.model_kinds[k];
        if (kind == ModelKind::Prime) {
            RealizationResult base = run_one(cfg, kind, 0, grid);
            for (std::size_t i = 0; i < cfg.realizations; ++i) {
                RealizationResult copy = base;
                copy.index = i;
                copy.seed = realization_seed(cfg, kind, i);
                run.results[k * cfg.realizations + i] = std::move(copy);
            }
        } else {
            for (std::size_t i = 0; i < cfg.realizations; ++i)
                tasks.push_back({kind, k, i});
        }
    }
    parallel_for_index(tasks.size(), threads, [&](std::size_t t) {
        const Task& task = tasks[t];
        run.results[task.kind_pos * cfg.realizations + task.index] =
            run_one(cfg, task.kind, task.index, grid);
    });

    run.summary = summarize(cfg, run.results, cfg.realizations);
    return run;
}

EnsembleSummary summarize_prefix(const EnsembleRun& run, std::size_t count) {
    if (count < 1 || count > run.config.realizations)
        throw Error(ErrorCategory::Compute, "summarize_prefix: bad count");
    return summarize(run.config, run.results, count);
}

ModelComparison compare_models(const EnsembleSummary& summary) {
    if (summary.kinds.size() < 2)
        throw Error(ErrorCategory::Compute,
                    "compare_models: need at least two kinds");
    ModelComparison cmp;
    std::vector<const KindSummary*> order;
    for (const KindSummary& s : summary.kinds) order.push_back(&s);
    std::sort(order.begin(), order.end(),
              [](const KindSummary* a, const KindSummary* b) {
                  if (a->mean_slope != b->mean_slope)
                      return a->mean_slope > b->mean_slope;
                  return std::string(to_string(a->kind)) <
                         std::string(to_string(b->kind));
              });
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        if (order[i]->mean_slope == order[i + 1]->mean_slope)
            cmp.has_ties = true;
    for (const KindSummary* s : order) cmp.ranking.push_back(s->kind);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            cmp.differences[{to_string(order[i]->kind),
                             to_string(order[j]->kind)}] =
                order[i]->mean_slope - order[j]->mean_slope;
    return cmp;
}

}  // namespace primecurve
