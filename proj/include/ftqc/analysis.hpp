#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ftqc::analysis {

// One protocol outcome: achieved output error, cost, and a short label naming
// the protocol (schedule distances, design variant, ...). The label also
// serves as the deterministic tiebreaker.
struct ProtocolPoint {
    double p_out = 0.0;
    double volume = 0.0;  // unit cells
    std::string descriptor;
};

// Maximal dominance-free subset, sorted by descending p_out (volume strictly
// increasing along the list). A point dominates another when it has both
// lower-or-equal error and volume with at least one strict. Ties: equal p_out
// keeps the smaller volume; equal on both keeps the first by descriptor order.
std::vector<ProtocolPoint> efficient_frontier(std::vector<ProtocolPoint> points);

// Cheapest frontier volume achieving p_out <= target, or a negative value if
// the frontier never reaches the target. The frontier must be sorted as
// produced by efficient_frontier.
double frontier_volume_at(const std::vector<ProtocolPoint>& frontier, double target);

struct PowerLawFit {
    double coefficient = 0.0;
    double exponent = 0.0;
};

// Least squares in (log x, log y) for y = a * x^b. Points must be positive;
// degenerate (all x equal) is rejected.
PowerLawFit power_law_fit(const std::vector<std::pair<double, double>>& points);

// Fit range shared by every published-exponent reproduction, expressed in
// x = log10(1/p_out). Exponents are range-sensitive, so the range is fixed
// here and reported alongside every fit.
inline constexpr double fit_range_lo = 4.0;
inline constexpr double fit_range_hi = 15.0;

// Frontier fits sample the cheapest volume at evenly spaced error targets,
// three per decade across the fit range. Sampling at corner points instead
// would overweight clusters of near-equal-error protocols (the same-distance
// searches stack many volumes at their one-round error floor).
inline constexpr int fit_samples_per_decade = 3;

// (x, cheapest volume) samples for power_law_fit, taken at targets
// x = lo, lo + 1/3, ..., hi. Targets the frontier cannot reach are skipped.
std::vector<std::pair<double, double>> staircase_fit_points(
    const std::vector<ProtocolPoint>& frontier, double lo = fit_range_lo, double hi = fit_range_hi);

}  // namespace ftqc::analysis
