#include <ftqc/surface.hpp>

#include <cmath>
#include <string>

namespace ftqc::surface {

void validate(const SurfaceParams& p) {
    if (!(p.p_g > 0.0) || !(p.p_g < 1.0))
        throw invalid_argument_error("p_g must be in (0,1), got " + std::to_string(p.p_g));
    if (p.d < 1)
        throw invalid_argument_error("code distance must be >= 1, got " + std::to_string(p.d));
}

double logical_error_per_piece(const SurfaceParams& p) {
    validate(p);
    // d * (100 p_g)^((d+1)/2). Above threshold (100 p_g >= 1) this no longer
    // decays with d; the value is still returned and callers check
    // suppressing() when it matters.
    return static_cast<double>(p.d) * std::pow(100.0 * p.p_g, 0.5 * (p.d + 1));
}

double logical_error_per_piece(double p_g, int d) {
    return logical_error_per_piece(SurfaceParams{p_g, d});
}

int piece_side(int d) {
    if (d < 1) throw invalid_argument_error("piece_side: d must be >= 1");
    return d + (d + 3) / 4;
}

double piece_volume(int d) {
    const double s = piece_side(d);
    return s * s * s;
}

double compressed_error_per_piece(double p_g, int d1, int d2) {
    validate(SurfaceParams{p_g, d1});
    if (d2 < 1) throw invalid_argument_error("compressed_error_per_piece: d2 must be >= 1");
    if (d2 > d1) throw invalid_argument_error("compressed_error_per_piece: requires d2 <= d1");
    return (d1 / 3.0) * std::pow(100.0 * p_g, 0.5 * (d2 + 1));
}

int min_distance_for(double p_g, double pieces, double budget) {
    if (!(100.0 * p_g < 1.0))
        throw invalid_argument_error("min_distance_for: requires 100*p_g < 1");
    if (!(pieces > 0.0)) throw invalid_argument_error("min_distance_for: pieces must be positive");
    if (!(budget > 0.0) || !(budget <= 1.0))
        throw invalid_argument_error("min_distance_for: budget must be in (0,1]");
    for (int d = d_min; d <= d_max; d += 2) {
        if (pieces * logical_error_per_piece(p_g, d) <= budget) return d;
    }
    throw infeasible_error("min_distance_for: no grid distance meets the budget");
}

}  // namespace ftqc::surface
