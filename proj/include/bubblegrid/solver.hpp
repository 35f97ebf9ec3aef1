#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bubblegrid/lattice.hpp"

namespace bubblegrid {

struct SolveResult {
    /// Perimeter of the smallest optimal height, as an affine form.
    AffineInBeta min_perimeter;
    /// Its value at beta ("p/q" or a decimal in approximate mode).
    std::string min_value;
    /// Every h attaining the minimum, ascending.
    std::vector<std::int64_t> optimal_heights;
    /// sqrt(2N / (2 - beta)).
    double hbar = 0.0;
    std::int64_t window_lo = 0;
    std::int64_t window_hi = 0;
};

/// 4 ceil(N/h) + (4 - 2 beta) h as an affine form.
AffineInBeta height_perimeter(std::int64_t n, std::int64_t h);

/// Minimises height_perimeter over the integer hull of the window around
/// hbar, clamped to [1, N]. Throws DomainError for N < 1.
SolveResult min_perimeter(std::int64_t n, const Beta& beta);
/// The same minimum over every h in [1, N].
SolveResult min_perimeter_full_scan(std::int64_t n, const Beta& beta);

/// A: full columns x in [-l+1, 0] x [1, h] plus x = -l, y in [1, r]
/// with n_a = h l + r; B the mirror image on x >= 1 with n_b's split.
/// Throws DomainError unless 1 <= h <= min(n_a, n_b).
Configuration build_straight(std::int64_t n_a, std::int64_t n_b, std::int64_t h);
Configuration build_explicit(std::int64_t n, std::int64_t h);
/// build_explicit as column runs.
ColumnProfile build_explicit_columns(std::int64_t n, std::int64_t h);

/// r/s = 1 - beta/2 in lowest terms. Throws DomainError unless beta is
/// exact and at most 1/2.
std::pair<std::int64_t, std::int64_t> class4_ratio(const Beta& beta);
/// A = [-kr+1, 0] x [1, ks] u {(1, ks)}, B = [1, kr] x [0, ks-1] u {(0, 0)}.
Configuration build_class4_family(const Beta& beta, std::int64_t k);

struct Rect {
    double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
    double area() const { return (x1 - x0) * (y1 - y0); }
};

/// Unit-area rectangles meeting along x = 0, A on the left.
std::pair<Rect, Rect> wulff_rectangles(const Beta& beta);

/// 4 sqrt(4 - 2 beta). Throws DomainError for beta > 1/2.
double continuum_energy(const Beta& beta);

/// Worst per-phase fraction of points outside the matching Wulff rectangle
/// dilated by N^(-1/4), after scaling by N^(-1/2) and moving the centroid of
/// A u B to the centroid of the rectangle pair. Minimised over the point
/// group. Throws DomainError unless N_A = N_B >= 1.
double wulff_discrepancy(const Configuration& config, const Beta& beta);

}  // namespace bubblegrid
