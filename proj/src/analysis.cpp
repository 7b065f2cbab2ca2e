#include <ftqc/analysis.hpp>
#include <ftqc/errors.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace ftqc::analysis {

std::vector<ProtocolPoint> efficient_frontier(std::vector<ProtocolPoint> points) {
    // Sort by volume, then error, then descriptor, and sweep keeping strictly
    // improving error. Equal (p_out, volume) pairs keep the first descriptor.
    std::sort(points.begin(), points.end(), [](const ProtocolPoint& a, const ProtocolPoint& b) {
        if (a.volume != b.volume) return a.volume < b.volume;
        if (a.p_out != b.p_out) return a.p_out < b.p_out;
        return a.descriptor < b.descriptor;
    });
    std::vector<ProtocolPoint> keep;
    double best = std::numeric_limits<double>::infinity();
    for (auto& pt : points) {
        if (pt.p_out < best) {
            best = pt.p_out;
            keep.push_back(std::move(pt));
        }
    }
    return keep;  // descending p_out, strictly increasing volume
}

double frontier_volume_at(const std::vector<ProtocolPoint>& frontier, double target) {
    // List is sorted by descending p_out; the first point at or under the
    // target is the cheapest one that reaches it.
    for (const auto& pt : frontier)
        if (pt.p_out <= target) return pt.volume;
    return -1.0;
}

PowerLawFit power_law_fit(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3)
        throw invalid_argument_error("power_law_fit: need at least 3 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : points) {
        if (!(x > 0.0) || !(y > 0.0))
            throw invalid_argument_error("power_law_fit: points must be positive");
        const double lx = std::log(x), ly = std::log(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double n = static_cast<double>(points.size());
    const double den = n * sxx - sx * sx;
    if (std::abs(den) < 1e-12 * n * sxx + 1e-300)
        throw invalid_argument_error("power_law_fit: degenerate fit (all x equal)");
    const double b = (n * sxy - sx * sy) / den;
    const double a = std::exp((sy - b * sx) / n);
    return {a, b};
}

std::vector<std::pair<double, double>> staircase_fit_points(
    const std::vector<ProtocolPoint>& frontier, double lo, double hi) {
    std::vector<std::pair<double, double>> out;
    const int steps = static_cast<int>(std::lround((hi - lo) * fit_samples_per_decade));
    for (int k = 0; k <= steps; ++k) {
        const double x = lo + static_cast<double>(k) / fit_samples_per_decade;
        const double v = frontier_volume_at(frontier, std::pow(10.0, -x));
        if (v >= 0.0) out.emplace_back(x, v);
    }
    return out;
}

}  // namespace ftqc::analysis
