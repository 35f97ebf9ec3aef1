#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bubblegrid/lattice.hpp"

namespace bubblegrid {

inline constexpr int kDefaultBudget = 11;
inline constexpr int kDefaultVerifyBudget = 10;

/// A configuration whose union is disconnected can always be improved by
/// translating one component into contact, which adds a bond worth at least
/// beta > 0. Searching connected unions (fixed polyominoes) is therefore
/// globally exact.
inline constexpr const char* kConnectedUnionNote =
    "search restricted to connected unions; a disconnected union is strictly improved by translating a "
    "component into contact";

struct MinimiserReport {
    AffineInBeta min_energy;  // energy of one minimiser; all minimisers tie with it at beta
    std::string min_value;    // min_energy at beta
    std::vector<Configuration> minimisers_no_swap;    // canonical, sorted
    std::vector<Configuration> minimisers_with_swap;  // canonical with phase swap, sorted
    std::int64_t shapes_searched = 0;
    std::string note = kConnectedUnionNote;
};

struct OracleOptions {
    int budget = kDefaultBudget;
    /// 0 means hardware concurrency, further capped by BUBBLEGRID_THREADS.
    unsigned threads = 0;
};

/// Exhaustive minimum over all configurations with connected union. Throws
/// DomainError if N_A + N_B is 0, exceeds the budget, or a count is negative.
MinimiserReport enumerate_minimisers(std::int64_t n_a, std::int64_t n_b, const Beta& beta,
                                     const OracleOptions& options = {});

/// min_energy of enumerate_minimisers without collecting minimisers.
AffineInBeta min_energy_only(std::int64_t n_a, std::int64_t n_b, const Beta& beta,
                             const OracleOptions& options = {});

struct FormulaCheck {
    std::int64_t n = 0;
    std::string oracle_perimeter;   // 2 E_min + 8N at beta
    std::string formula_perimeter;  // height-formula minimum at beta
    bool ok = false;
};

/// For N = 1..n_max compares the oracle minimum for (N, N) with the
/// closed-form minimal perimeter. Throws DomainError unless beta is exact and
/// at most 1/2, or when 2 n_max exceeds the budget.
std::vector<FormulaCheck> verify_formula(std::int64_t n_max, const Beta& beta,
                                         const OracleOptions& options = {kDefaultVerifyBudget, 0});

}  // namespace bubblegrid
