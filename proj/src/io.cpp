#include "primecurve/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "primecurve/error.hpp"

namespace primecurve {

std::string format_double(double value) {
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                   std::chars_format::general, 17);
    if (ec != std::errc())
        throw Error(ErrorCategory::Compute, "format_double failed");
    return std::string(buffer, ptr);
}

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCategory::Io, "cannot open for writing: " + path.string());
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out)
        throw Error(ErrorCategory::Io, "write failed: " + path.string());
}

}  // namespace

void write_curve_csv(const std::filesystem::path& path,
                     const SamplingGrid& grid,
                     const std::vector<Point>& points) {
    std::ofstream out = open_output(path);
    out << "j,t,x,y\n";
    for (std::size_t j = 0; j < points.size(); ++j)
        out << (j + 1) << ',' << format_double(grid.nodes[j]) << ','
            << format_double(points[j].x) << ',' << format_double(points[j].y)
            << '\n';
    finish(out, path);
}

void write_boxcount_csv(const std::filesystem::path& path,
                        const BoxCountProfile& prof) {
    std::ofstream out = open_output(path);
    out << "m,epsilon,count,exponent\n";
    for (std::size_t i = 0; i < prof.m_values.size(); ++i)
        out << prof.m_values[i] << ','
            << format_double(std::ldexp(1.0, -prof.m_values[i])) << ','
            << prof.counts[i] << ',' << format_double(prof.exponents[i])
            << '\n';
    finish(out, path);
}

void write_realizations_csv(const std::filesystem::path& path,
                            const std::vector<RealizationResult>& results) {
    std::ofstream out = open_output(path);
    out << "kind,index,seed,slope,residual\n";
    for (const RealizationResult& r : results)
        out << to_string(r.kind) << ',' << r.index << ',' << r.seed << ','
            << format_double(r.fit.slope) << ','
            << format_double(r.fit.residual_rms) << '\n';
    finish(out, path);
}

void write_summary_csv(const std::filesystem::path& path,
                       const EnsembleSummary& summary) {
    std::ofstream out = open_output(path);
    out << "kind,realizations,mean_slope,stddev_slope,min_slope,max_slope\n";
    for (const KindSummary& s : summary.kinds)
        out << to_string(s.kind) << ',' << s.realizations << ','
            << format_double(s.mean_slope) << ','
            << format_double(s.stddev_slope) << ','
            << format_double(s.min_slope) << ',' << format_double(s.max_slope)
            << '\n';
    finish(out, path);
}

void write_mean_exponents_csv(const std::filesystem::path& path,
                              const ExperimentConfig& cfg,
                              const EnsembleSummary& summary) {
    std::ofstream out = open_output(path);
    out << "kind,m,mean_exponent\n";
    for (const KindSummary& s : summary.kinds)
        for (std::size_t i = 0; i < s.mean_exponents.size(); ++i)
            out << to_string(s.kind) << ',' << (cfg.m_lo + static_cast<int>(i))
                << ',' << format_double(s.mean_exponents[i]) << '\n';
    finish(out, path);
}

}  // namespace primecurve
