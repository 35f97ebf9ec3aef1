#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "bubblegrid/lattice.hpp"

namespace bubblegrid {

bool is_connected(std::span<const LatticePoint> points);

/// Midpoint of a unit A-B edge in doubled coordinates; exactly one of x2, y2
/// is odd.
struct InterfacePoint {
    std::int64_t x2 = 0;
    std::int64_t y2 = 0;

    friend bool operator==(const InterfacePoint&, const InterfacePoint&) = default;
    friend auto operator<=>(const InterfacePoint&, const InterfacePoint&) = default;
};

/// Sorted, one entry per cross bond.
std::vector<InterfacePoint> interface(const Configuration& config);

/// True when the interface graph is connected and some point-group image of
/// it is weakly increasing (p.x2 > q.x2 implies p.y2 >= q.y2). Two interface
/// points are adjacent at original distance 1/sqrt2, or at distance 1 when
/// the segment between them avoids every lattice site.
bool interface_is_monotone_connected(const Configuration& config);

/// Adjacent interface pairs (p < q) under the rule above, sorted.
std::vector<std::pair<InterfacePoint, InterfacePoint>> interface_edges(const Configuration& config);

/// One of the eight linear maps preserving Z^2, stored as an integer matrix
/// acting on column vectors: (x, y) -> (a x + b y, c x + d y).
struct PointGroupElement {
    int a = 1, b = 0, c = 0, d = 1;

    friend bool operator==(const PointGroupElement&, const PointGroupElement&) = default;
};

/// Fixed order: identity, rotations by 90/180/270 degrees counterclockwise,
/// reflections x->-x, y->-y, (x,y)->(y,x), (x,y)->(-y,-x).
const std::array<PointGroupElement, 8>& point_group();

/// x -> g x + (dx, dy).
struct Isometry {
    PointGroupElement g;
    std::int64_t dx = 0;
    std::int64_t dy = 0;

    static Isometry identity() { return {}; }
    /// (lhs * rhs)(p) = lhs(rhs(p)).
    friend Isometry operator*(const Isometry& lhs, const Isometry& rhs);
    Isometry inverse() const;
    /// Throws std::overflow_error.
    LatticePoint apply(LatticePoint p) const;

    friend bool operator==(const Isometry&, const Isometry&) = default;
};

Configuration apply_isometry(const Configuration& config, const Isometry& iso);

/// Translate so the bounding-box minimum is (0, 0).
Configuration normalize_translation(const Configuration& config);

/// Lexicographically smallest normalized image over the point group, and over
/// the phase swap as well when identify_phase_swap holds and N_A = N_B.
Configuration canonical_form(const Configuration& config, bool identify_phase_swap);

/// min over isometries T of #(A1 xor T A2) + #(B1 xor T B2). Throws
/// DomainError if either configuration is empty. Large inputs go through an
/// FFT cross-correlation, small ones through direct counting.
std::int64_t min_symmetric_difference(const Configuration& c1, const Configuration& c2);
std::int64_t min_symmetric_difference_direct(const Configuration& c1, const Configuration& c2);
std::int64_t min_symmetric_difference_fft(const Configuration& c1, const Configuration& c2);

}  // namespace bubblegrid
