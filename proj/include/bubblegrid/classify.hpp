#pragma once

#include <cstdint>
#include <string>

#include "bubblegrid/geometry.hpp"
#include "bubblegrid/lattice.hpp"

namespace bubblegrid {

enum class ClassLabel { I, II, III, IV, V, NotAdmissible };

std::string to_string(ClassLabel label);

/// Band widths (columns, left to right) and heights (rows, top to bottom) of
/// a classified configuration in normal orientation. For Class I, h is the
/// number of rows and h1 = h3 = 0, h2 = h. For Class II, l2 = 0 and h1, h2,
/// h3 count A-only, two-phase and B-only rows.
struct ClassParams {
    std::int64_t l1 = 0, l2 = 0, l3 = 0;
    std::int64_t h1 = 0, h2 = 0, h3 = 0;
    std::int64_t h = 0;

    friend bool operator==(const ClassParams&, const ClassParams&) = default;
};

struct Classification {
    ClassLabel label = ClassLabel::NotAdmissible;
    ClassParams params;
    /// Maps the input onto its normal orientation (A left of B in two-phase
    /// rows, A above B in two-phase columns).
    Isometry transform;
    bool phase_swapped = false;
};

/// Tries classes I..V in order; within a class the eight point-group
/// elements are tried in point_group() order, then again after a phase swap.
/// Throws DomainError if the configuration is not admissible or lacks a
/// phase.
Classification classify(const Configuration& config);

/// Energy of a configuration with the given class and band parameters.
/// Throws DomainError for NotAdmissible.
AffineInBeta class_energy(ClassLabel label, const ClassParams& params, std::int64_t n_a, std::int64_t n_b);

/// Class I configuration with the same phase counts and height whose
/// perimeter at beta is no larger and whose two-phase column count is at
/// most one. Ties prefer a straight interface, then the original height.
/// Throws DomainError if the input is not in Class I.
Configuration compactify_class1(const Configuration& config, const Beta& beta);

}  // namespace bubblegrid
