#pragma once

#include <ftqc/errors.hpp>

namespace ftqc::surface {

// Search grid for code distances. All reference protocols use odd distances;
// the grid deliberately extends past the largest distance any search selects.
inline constexpr int d_min = 3;
inline constexpr int d_max = 255;

struct SurfaceParams {
    double p_g = 0.0;  // error probability per physical gate
    int d = 0;         // code distance

    // The error formula only suppresses with distance while 100*p_g < 1.
    bool suppressing() const { return p_g > 0.0 && 100.0 * p_g < 1.0; }
};

void validate(const SurfaceParams& p);

// Logical error per plumbing piece: d * (100 p_g)^((d+1)/2).
// Returned as computed, which can exceed 1 in the non-suppressing regime;
// callers treat such values as "no protection".
double logical_error_per_piece(const SurfaceParams& p);
double logical_error_per_piece(double p_g, int d);

// Side length of the cubic region occupied by one plumbing piece, in unit cells.
int piece_side(int d);

// Unit-cell volume of one plumbing piece: piece_side(d)^3. Every module uses
// this conversion; no other piece-to-cell rule exists in the codebase.
double piece_volume(int d);

// Compressed (d2-spaced) variant used inside verified Toffoli blocks:
// (d1/3) * (100 p_g)^((d2+1)/2), exponent in the decaying convention.
double compressed_error_per_piece(double p_g, int d1, int d2);

// Smallest odd grid distance with pieces * P_L(p_g, d) <= budget.
int min_distance_for(double p_g, double pieces, double budget);

}  // namespace ftqc::surface
