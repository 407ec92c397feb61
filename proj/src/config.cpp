#include "primecurve/config.hpp"

#include <fstream>
#include <set>
#include <string>

#include "primecurve/error.hpp"

namespace primecurve {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& message) {
    throw Error(ErrorCategory::Config, "config: " + message);
}

std::int64_t require_int(const json& value, const std::string& key) {
    if (!value.is_number_integer())
        bad("field \"" + key + "\" must be an integer");
    return value.get<std::int64_t>();
}

std::int64_t positive_int(const json& value, const std::string& key) {
    std::int64_t v = require_int(value, key);
    if (v < 1) bad("field \"" + key + "\" must be positive");
    return v;
}

std::string require_string(const json& value, const std::string& key) {
    if (!value.is_string()) bad("field \"" + key + "\" must be a string");
    return value.get<std::string>();
}

std::pair<int, int> parse_range(const json& value, const std::string& key) {
    if (!value.is_object()) bad("field \"" + key + "\" must be an object");
    for (const auto& [k, v] : value.items()) {
        (void)v;
        if (k != "lo" && k != "hi")
            bad("unknown key \"" + k + "\" in \"" + key + "\"");
    }
    if (!value.contains("lo") || !value.contains("hi"))
        bad("field \"" + key + "\" needs \"lo\" and \"hi\"");
    return {static_cast<int>(require_int(value["lo"], key + ".lo")),
            static_cast<int>(require_int(value["hi"], key + ".hi"))};
}

}  // namespace

ExperimentConfig parse_config(const nlohmann::json& doc) {
    if (!doc.is_object()) bad("document must be an object");
    static const std::set<std::string> known = {
        "n",           "sample_count", "realizations", "base_seed",
        "model_kinds", "normalization", "m_range",     "fit_window",
        "counting_mode", "cramer_max_attempts"};
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (!known.count(key)) bad("unknown key \"" + key + "\"");
    }
    if (!doc.contains("n")) bad("missing required field \"n\"");

    ExperimentConfig cfg;
    cfg.n = positive_int(doc["n"], "n");
    if (doc.contains("sample_count"))
        cfg.sample_count = static_cast<std::size_t>(
            positive_int(doc["sample_count"], "sample_count"));
    if (doc.contains("realizations"))
        cfg.realizations = static_cast<std::size_t>(
            positive_int(doc["realizations"], "realizations"));
    if (doc.contains("base_seed")) {
        const json& value = doc["base_seed"];
        if (!value.is_number_unsigned() && !value.is_number_integer())
            bad("field \"base_seed\" must be an integer");
        cfg.base_seed = value.get<std::uint64_t>();
    }
    if (doc.contains("model_kinds")) {
        const json& kinds = doc["model_kinds"];
        if (!kinds.is_array()) bad("field \"model_kinds\" must be an array");
        cfg.model_kinds.clear();
        for (const json& entry : kinds)
            cfg.model_kinds.push_back(
                parse_model_kind(require_string(entry, "model_kinds")));
    }
    if (doc.contains("normalization"))
        cfg.normalization = parse_norm_method(
            require_string(doc["normalization"], "normalization"));
    if (doc.contains("m_range")) {
        auto [lo, hi] = parse_range(doc["m_range"], "m_range");
        cfg.m_lo = lo;
        cfg.m_hi = hi;
    }
    if (doc.contains("fit_window")) {
        auto [lo, hi] = parse_range(doc["fit_window"], "fit_window");
        cfg.fit_lo = lo;
        cfg.fit_hi = hi;
    }
    if (doc.contains("counting_mode"))
        cfg.counting_mode = parse_counting_mode(
            require_string(doc["counting_mode"], "counting_mode"));
    if (doc.contains("cramer_max_attempts"))
        cfg.cramer_max_attempts = static_cast<int>(
            positive_int(doc["cramer_max_attempts"], "cramer_max_attempts"));
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path,
                             const ConfigOverrides& overrides) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCategory::Io, "cannot open config: " + path.string());
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCategory::Config,
                    "config: " + path.string() + ": " + e.what());
    }
    ExperimentConfig cfg = parse_config(doc);
    if (overrides.n) cfg.n = *overrides.n;
    if (overrides.sample_count) cfg.sample_count = *overrides.sample_count;
    if (overrides.realizations) cfg.realizations = *overrides.realizations;
    if (overrides.base_seed) cfg.base_seed = *overrides.base_seed;
    cfg.validate();
    return cfg;
}

nlohmann::json config_to_json(const ExperimentConfig& cfg) {
    nlohmann::json kinds = nlohmann::json::array();
    for (ModelKind kind : cfg.model_kinds) kinds.push_back(to_string(kind));
    return nlohmann::json{
        {"n", cfg.n},
        {"sample_count", cfg.sample_count},
        {"realizations", cfg.realizations},
        {"base_seed", cfg.base_seed},
        {"model_kinds", kinds},
        {"normalization", to_string(cfg.normalization)},
        {"m_range", {{"lo", cfg.m_lo}, {"hi", cfg.m_hi}}},
        {"fit_window", {{"lo", cfg.fit_lo}, {"hi", cfg.fit_hi}}},
        {"counting_mode", to_string(cfg.counting_mode)},
        {"cramer_max_attempts", cfg.cramer_max_attempts}};
}

}  // namespace primecurve
