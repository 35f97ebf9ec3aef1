#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bubblegrid/lattice.hpp"

namespace bubblegrid {

/// Rows of a configuration, indexed k = 1..N_row from the topmost occupied
/// row down to the lowest one. Empty interior rows are counted.
struct RowProfile {
    struct Row {
        std::int64_t y = 0;
        std::int64_t n = 0;  // A-points
        std::int64_t m = 0;  // B-points
    };
    std::vector<Row> rows;
};

RowProfile row_profile(const Configuration& config);

/// Energy of the bonds inside row k. Throws std::out_of_range.
AffineInBeta row_energy(const Configuration& config, std::size_t k);
/// Energy of the bonds between rows k and k+1. Throws std::out_of_range.
AffineInBeta inter_row_energy(const Configuration& config, std::size_t k);

AffineInBeta row_energy_bound(std::int64_t n, std::int64_t m);
AffineInBeta inter_row_energy_bound(std::int64_t n_k, std::int64_t m_k, std::int64_t n_k1, std::int64_t m_k1);

/// Structural condition for equality in row_energy_bound: A_k, B_k and
/// their union are each an interval (or empty).
bool row_bound_attained_structurally(const Configuration& config, std::size_t k);
/// Structural condition for equality in inter_row_energy_bound: the A-A and
/// B-B vertical matches are maximal and every point of the shorter row has a
/// neighbour in the other.
bool inter_row_bound_attained_structurally(const Configuration& config, std::size_t k);

/// Closes empty interior rows and columns by rigid block shifts, each adding
/// at least one bond. Energy strictly decreases if any gap existed.
Configuration remove_empty_lines(const Configuration& config);

/// Rebuilds every row as a contiguous A-block followed by a B-block and
/// aligns consecutive rows so both row bounds are attained. Row
/// coordinates and per-row counts are preserved. Throws DomainError if an
/// interior row is empty.
Configuration regularize_rows(const Configuration& config);
/// regularize_rows conjugated by (x, y) -> (y, x).
Configuration regularize_columns(const Configuration& config);

struct AdmissibilityReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks connectivity of A, B and A u B, interval rows and columns, gapless
/// row and column ranges per phase, one-sidedness, and the interface.
AdmissibilityReport is_admissible(const Configuration& config);

}  // namespace bubblegrid
