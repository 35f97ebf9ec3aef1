#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "bubblegrid/lattice.hpp"

namespace bubblegrid {

/// Calls visit once per fixed polyomino with n cells (connected cell sets up
/// to translation), in a fixed order. Every polyomino contains (0, 0) as its
/// lowest, then leftmost, cell. Throws DomainError unless 1 <= n <= 24.
void for_each_fixed_polyomino(int n, const std::function<void(std::span<const LatticePoint>)>& visit);

std::int64_t count_fixed_polyominoes(int n);

}  // namespace bubblegrid
