#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bubblegrid/rational.hpp"

namespace bubblegrid {

struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Checked translation; throws std::overflow_error.
LatticePoint translated(LatticePoint p, std::int64_t dx, std::int64_t dy);

enum class Phase : std::uint8_t { A = 0, B = 1 };

inline Phase other(Phase p) { return p == Phase::A ? Phase::B : Phase::A; }
inline char phase_char(Phase p) { return p == Phase::A ? 'A' : 'B'; }

/// The interaction parameter beta in (0,1).
///
/// Exact mode carries a reduced fraction p/q with 0 < p < q and every
/// comparison made through it is integer arithmetic. Approximate mode
/// carries a double for irrational beta; comparisons closer than
/// kTieTolerance are reported as ties.
class Beta {
public:
    static constexpr double kTieTolerance = 1e-9;

    static Beta exact(std::int64_t num, std::int64_t den);
    static Beta exact(const Rational& value);
    static Beta approx(double value);
    /// "p/q" or "~decimal".
    static Beta parse(const std::string& text);

    bool is_exact() const { return exact_; }
    /// Only meaningful in exact mode.
    const Rational& rational() const { return value_; }
    double to_double() const { return exact_ ? value_.to_double() : approx_; }

    std::string to_string() const;

    friend bool operator==(const Beta&, const Beta&) = default;

private:
    Beta() = default;
    bool exact_ = true;
    Rational value_{1, 2};
    double approx_ = 0.5;
};

/// c0 + c1 * beta with integer coefficients. Every energy and perimeter of
/// the model has this form.
struct AffineInBeta {
    std::int64_t c0 = 0;
    std::int64_t c1 = 0;

    friend bool operator==(const AffineInBeta&, const AffineInBeta&) = default;
    friend AffineInBeta operator+(AffineInBeta a, AffineInBeta b) { return {a.c0 + b.c0, a.c1 + b.c1}; }
    friend AffineInBeta operator-(AffineInBeta a, AffineInBeta b) { return {a.c0 - b.c0, a.c1 - b.c1}; }
    friend AffineInBeta operator*(std::int64_t k, AffineInBeta a) { return {k * a.c0, k * a.c1}; }
    AffineInBeta operator-() const { return {-c0, -c1}; }

    Rational at(const Rational& beta) const;
    double at(double beta) const { return static_cast<double>(c0) + static_cast<double>(c1) * beta; }

    /// "c0+c1b" / "c0-c1b", always with the b term.
    std::string to_string() const;
};

/// Three-way comparison of two affine values at beta. Exact mode never
/// rounds; approximate mode returns equivalent for |a-b| < kTieTolerance.
std::weak_ordering compare_at(const AffineInBeta& a, const AffineInBeta& b, const Beta& beta);

/// Exact value of an affine quantity at beta, as a rational (exact mode) or
/// a decimal string (approximate mode).
std::string format_value(const AffineInBeta& v, const Beta& beta);

/// A finite two-phase point set. Points are kept sorted by (x, y); equality
/// is set equality of (point, phase) pairs.
class Configuration {
public:
    using Entry = std::pair<LatticePoint, Phase>;

    Configuration() = default;
    /// Throws DomainError on duplicate coordinates.
    explicit Configuration(std::vector<Entry> entries);
    static Configuration from_sets(std::span<const LatticePoint> a, std::span<const LatticePoint> b);

    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    std::int64_t count(Phase p) const;
    std::int64_t count_a() const { return count(Phase::A); }
    std::int64_t count_b() const { return count(Phase::B); }

    std::optional<Phase> phase_at(LatticePoint p) const;
    std::vector<LatticePoint> points(Phase p) const;
    std::vector<LatticePoint> all_points() const;

    /// Same points with A and B exchanged.
    Configuration swapped() const;

    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    std::vector<Entry> entries_;
};

struct BondCounts {
    std::int64_t intra_a = 0;
    std::int64_t intra_b = 0;
    std::int64_t cross = 0;
    std::int64_t boundary_a = 0;
    std::int64_t boundary_b = 0;

    friend bool operator==(const BondCounts&, const BondCounts&) = default;
};

BondCounts bond_counts(const Configuration& config);

/// Lattice perimeter, both expansions of the defining formula are evaluated
/// and required to agree.
AffineInBeta perimeter(const Configuration& config);
AffineInBeta perimeter(const BondCounts& counts);

/// Sticky-potential energy: -1 per same-phase bond, -beta per cross bond.
AffineInBeta energy(const Configuration& config);
AffineInBeta energy(const BondCounts& counts);

/// Ising form F(C,u) with u = +1 on A and -1 on B. Evaluated from the two
/// ordered-pair sums with weights -(1-beta)/4 and -(1+beta)/4. The weights
/// carry quarters, so the sums are accumulated at 4x scale and divided
/// exactly at the end.
AffineInBeta ising_energy(const Configuration& config, const Beta& beta);

/// Sorted occupied row coordinates, topmost (largest y) first.
std::vector<std::int64_t> occupied_rows(const Configuration& config);
/// Sorted occupied column coordinates, leftmost first.
std::vector<std::int64_t> occupied_columns(const Configuration& config);

std::vector<std::pair<std::int64_t, Phase>> row_slice(const Configuration& config, std::int64_t y);
std::vector<std::pair<std::int64_t, Phase>> col_slice(const Configuration& config, std::int64_t x);

/// Column-run representation for configurations built from whole column
/// segments. A block is a range of identical columns, so bond counting costs
/// O(#runs) instead of O(#points).
struct ColumnRun {
    std::int64_t y_lo = 0;
    std::int64_t y_hi = 0;  // inclusive
    Phase phase = Phase::A;
};

struct ColumnBlock {
    std::int64_t x_lo = 0;
    std::int64_t x_hi = 0;  // inclusive
    std::vector<ColumnRun> runs;  // sorted, non-overlapping
};

struct ColumnProfile {
    /// Blocks ordered by x and pairwise disjoint.
    std::vector<ColumnBlock> blocks;

    Configuration to_configuration() const;
};

BondCounts bond_counts(const ColumnProfile& profile);

}  // namespace bubblegrid
