#include "bubblegrid/regularize.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "bubblegrid/errors.hpp"
#include "bubblegrid/geometry.hpp"

namespace bubblegrid {

namespace {

const RowProfile::Row& row_at(const RowProfile& profile, std::size_t k) {
    if (k < 1 || k > profile.rows.size()) throw std::out_of_range("row index " + std::to_string(k));
    return profile.rows[k - 1];
}

Configuration transpose(const Configuration& config) {
    std::vector<Configuration::Entry> out;
    out.reserve(config.size());
    for (const auto& [p, ph] : config.entries()) out.emplace_back(LatticePoint{p.y, p.x}, ph);
    return Configuration(std::move(out));
}

bool is_interval(const std::vector<std::int64_t>& sorted) {
    return sorted.empty() || sorted.back() - sorted.front() + 1 == static_cast<std::int64_t>(sorted.size());
}

/// Coordinates of a slice, restricted to one phase or (nullopt) all.
std::vector<std::int64_t> coords(const std::vector<std::pair<std::int64_t, Phase>>& slice,
                                 std::optional<Phase> phase) {
    std::vector<std::int64_t> out;
    for (const auto& [c, ph] : slice) {
        if (!phase || ph == *phase) out.push_back(c);
    }
    return out;
}

/// Shift every point with coordinate (y when rows, x otherwise) <= cut by (dx, dy).
Configuration shift_block(const Configuration& config, bool rows, std::int64_t cut, std::int64_t dx, std::int64_t dy) {
    std::vector<Configuration::Entry> out;
    out.reserve(config.size());
    for (const auto& [p, ph] : config.entries()) {
        const auto key = rows ? p.y : p.x;
        out.emplace_back(key <= cut ? translated(p, dx, dy) : p, ph);
    }
    return Configuration(std::move(out));
}

/// Closes the first gap between occupied lines, if any. Lines are rows
/// (scanned in y) or columns (scanned in x).
std::optional<Configuration> close_one_gap(const Configuration& config, bool rows) {
    std::vector<std::int64_t> lines;
    for (const auto& [p, ph] : config.entries()) lines.push_back(rows ? p.y : p.x);
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
        const auto lo = lines[i];
        const auto hi = lines[i + 1];
        if (hi - lo <= 1) continue;
        // Move the low block up to meet the high block.
        const auto d = hi - lo - 1;
        auto moved = shift_block(config, rows, lo, rows ? 0 : d, rows ? d : 0);
        const auto new_lo = hi - 1;
        auto low_line = rows ? row_slice(moved, new_lo) : col_slice(moved, new_lo);
        auto high_line = rows ? row_slice(moved, hi) : col_slice(moved, hi);
        bool bonded = false;
        for (const auto& [c, ph] : low_line) {
            bonded = bonded || std::any_of(high_line.begin(), high_line.end(),
                                           [c](const auto& e) { return e.first == c; });
        }
        if (!bonded) {
            // Slide the low block along the line until its first point sits
            // next to the first point of the high line.
            const auto s = high_line.front().first - low_line.front().first;
            moved = shift_block(moved, rows, new_lo, rows ? s : 0, rows ? 0 : s);
        }
        return moved;
    }
    return std::nullopt;
}

}  // namespace

RowProfile row_profile(const Configuration& config) {
    RowProfile profile;
    if (config.empty()) return profile;
    const auto ys = occupied_rows(config);
    for (std::int64_t y = ys.front(); y >= ys.back(); --y) {
        RowProfile::Row row{y, 0, 0};
        for (const auto& [x, ph] : row_slice(config, y)) (ph == Phase::A ? row.n : row.m) += 1;
        profile.rows.push_back(row);
    }
    return profile;
}

AffineInBeta row_energy(const Configuration& config, std::size_t k) {
    const auto profile = row_profile(config);
    const auto& row = row_at(profile, k);
    const auto slice = row_slice(config, row.y);
    AffineInBeta e;
    for (std::size_t i = 0; i + 1 < slice.size(); ++i) {
        if (slice[i + 1].first != slice[i].first + 1) continue;
        e = e + (slice[i].second == slice[i + 1].second ? AffineInBeta{-1, 0} : AffineInBeta{0, -1});
    }
    return e;
}

AffineInBeta inter_row_energy(const Configuration& config, std::size_t k) {
    const auto profile = row_profile(config);
    const auto& upper = row_at(profile, k);
    row_at(profile, k + 1);
    AffineInBeta e;
    for (const auto& [x, ph] : row_slice(config, upper.y)) {
        const auto below = config.phase_at({x, upper.y - 1});
        if (!below) continue;
        e = e + (*below == ph ? AffineInBeta{-1, 0} : AffineInBeta{0, -1});
    }
    return e;
}

AffineInBeta row_energy_bound(std::int64_t n, std::int64_t m) {
    if (n > 0 && m > 0) return {-(n + m) + 2, -1};
    if (n + m > 0) return {-(n + m) + 1, 0};
    return {};
}

AffineInBeta inter_row_energy_bound(std::int64_t n_k, std::int64_t m_k, std::int64_t n_k1, std::int64_t m_k1) {
    const auto same = std::min(n_k, n_k1) + std::min(m_k, m_k1);
    const auto all = std::min(n_k + m_k, n_k1 + m_k1);
    // -(1 - beta) same - beta all
    return {-same, same - all};
}

bool row_bound_attained_structurally(const Configuration& config, std::size_t k) {
    const auto profile = row_profile(config);
    const auto& row = row_at(profile, k);
    const auto slice = row_slice(config, row.y);
    return is_interval(coords(slice, Phase::A)) && is_interval(coords(slice, Phase::B)) &&
           is_interval(coords(slice, std::nullopt));
}

bool inter_row_bound_attained_structurally(const Configuration& config, std::size_t k) {
    const auto profile = row_profile(config);
    const auto& upper = row_at(profile, k);
    const auto& lower = row_at(profile, k + 1);
    std::int64_t aa = 0;
    std::int64_t bb = 0;
    std::int64_t any = 0;
    for (const auto& [x, ph] : row_slice(config, upper.y)) {
        const auto below = config.phase_at({x, lower.y});
        if (!below) continue;
        ++any;
        if (*below == ph) (ph == Phase::A ? aa : bb) += 1;
    }
    return aa == std::min(upper.n, lower.n) && bb == std::min(upper.m, lower.m) &&
           any == std::min(upper.n + upper.m, lower.n + lower.m);
}

Configuration remove_empty_lines(const Configuration& config) {
    Configuration current = config;
    // Each closed gap adds at least one bond, so the loop terminates.
    for (;;) {
        if (auto next = close_one_gap(current, true)) {
            current = std::move(*next);
            continue;
        }
        if (auto next = close_one_gap(current, false)) {
            current = std::move(*next);
            continue;
        }
        return current;
    }
}

Configuration regularize_rows(const Configuration& config) {
    const auto profile = row_profile(config);
    for (const auto& row : profile.rows) {
        if (row.n + row.m == 0) throw DomainError("regularize_rows: empty interior row at y=" + std::to_string(row.y));
    }
    std::vector<Configuration::Entry> out;
    out.reserve(config.size());
    // Row k holds A on [s - n, s - 1] and B on [s, s + m - 1].
    std::int64_t s = 0;
    for (std::size_t k = 0; k < profile.rows.size(); ++k) {
        const auto& row = profile.rows[k];
        if (k == 0) {
            s = row.n;
        } else {
            const auto& prev = profile.rows[k - 1];
            const auto tot_prev = prev.n + prev.m;
            const auto tot = row.n + row.m;
            if (prev.n <= row.n && prev.m > row.m) {
                s = tot_prev >= tot ? s + row.n - prev.n : s + prev.m - row.m;
            } else if (prev.n > row.n && prev.m <= row.m) {
                s = tot_prev >= tot ? s - (row.m - prev.m) : s - prev.n + row.n;
            }
        }
        for (std::int64_t x = s - row.n; x < s; ++x) out.emplace_back(LatticePoint{x, row.y}, Phase::A);
        for (std::int64_t x = s; x < s + row.m; ++x) out.emplace_back(LatticePoint{x, row.y}, Phase::B);
    }
    return Configuration(std::move(out));
}

Configuration regularize_columns(const Configuration& config) {
    return transpose(regularize_rows(transpose(config)));
}

AdmissibilityReport is_admissible(const Configuration& config) {
    AdmissibilityReport report;
    auto fail = [&report](std::string what) { report.violations.push_back(std::move(what)); };

    const auto a = config.points(Phase::A);
    const auto b = config.points(Phase::B);
    const auto all = config.all_points();
    if (!is_connected(a)) fail("A is not connected");
    if (!is_connected(b)) fail("B is not connected");
    if (!is_connected(all)) fail("A u B is not connected");

    for (const bool rows : {true, false}) {
        const char* axis = rows ? "row" : "column";
        const auto lines = rows ? occupied_rows(config) : occupied_columns(config);
        std::vector<std::int64_t> lines_a;
        std::vector<std::int64_t> lines_b;
        int a_first = 0;  // +1 if some mixed line has A before B, -1 if B before A
        bool mixed_order_ok = true;
        for (const auto line : lines) {
            const auto slice = rows ? row_slice(config, line) : col_slice(config, line);
            const auto ca = coords(slice, Phase::A);
            const auto cb = coords(slice, Phase::B);
            if (!is_interval(ca) || !is_interval(cb) || !is_interval(coords(slice, std::nullopt))) {
                fail(std::string(axis) + " " + std::to_string(line) + " is not an interval");
            }
            if (!ca.empty()) lines_a.push_back(line);
            if (!cb.empty()) lines_b.push_back(line);
            if (!ca.empty() && !cb.empty()) {
                int order = 0;
                if (ca.back() < cb.front()) order = 1;
                if (cb.back() < ca.front()) order = -1;
                if (order == 0 || (a_first != 0 && order != a_first)) mixed_order_ok = false;
                if (a_first == 0) a_first = order;
            }
        }
        std::sort(lines_a.begin(), lines_a.end());
        std::sort(lines_b.begin(), lines_b.end());
        if (!is_interval(lines_a)) fail(std::string("A skips a ") + axis);
        if (!is_interval(lines_b)) fail(std::string("B skips a ") + axis);
        if (!mixed_order_ok) fail(std::string("A and B swap sides across ") + axis + "s");
    }
    if (!interface_is_monotone_connected(config)) fail("interface is not monotone-connected");
    return report;
}

}  // namespace bubblegrid
