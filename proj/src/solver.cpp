#include "bubblegrid/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bubblegrid/errors.hpp"
#include "bubblegrid/geometry.hpp"

namespace bubblegrid {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

SolveResult scan(std::int64_t n, const Beta& beta, std::int64_t lo, std::int64_t hi) {
    SolveResult res;
    const double b = beta.to_double();
    res.hbar = std::sqrt(2.0 * static_cast<double>(n) / (2.0 - b));
    res.window_lo = lo;
    res.window_hi = hi;
    // Exact mode compares q c0 + p c1 without building rationals.
    const std::int64_t bp = beta.is_exact() ? beta.rational().num() : 0;
    const std::int64_t bq = beta.is_exact() ? beta.rational().den() : 1;
    auto compare = [&](const AffineInBeta& x, const AffineInBeta& y) {
        if (!beta.is_exact()) {
            const auto c = compare_at(x, y, beta);
            return c < 0 ? -1 : (c > 0 ? 1 : 0);
        }
        const __int128 d = static_cast<__int128>(x.c0 - y.c0) * bq + static_cast<__int128>(x.c1 - y.c1) * bp;
        return (d > 0) - (d < 0);
    };
    for (std::int64_t h = lo; h <= hi; ++h) {
        const auto p = height_perimeter(n, h);
        if (res.optimal_heights.empty()) {
            res.min_perimeter = p;
            res.optimal_heights = {h};
            continue;
        }
        const auto cmp = compare(p, res.min_perimeter);
        if (cmp < 0) {
            res.min_perimeter = p;
            res.optimal_heights = {h};
        } else if (cmp == 0) {
            res.optimal_heights.push_back(h);
        }
    }
    res.min_value = format_value(res.min_perimeter, beta);
    return res;
}

void require_positive(std::int64_t n) {
    if (n < 1) throw DomainError("N must be at least 1");
}

/// A on x <= 0 and B on x >= 1 as column blocks, each side with the given split.
ColumnProfile straight_columns(std::int64_t n_a, std::int64_t n_b, std::int64_t h) {
    if (h < 1) throw DomainError("height must be at least 1");
    if (h > n_a || h > n_b) throw DomainError("height exceeds the phase size");
    ColumnProfile prof;
    const auto la = n_a / h, ra = n_a % h;
    const auto lb = n_b / h, rb = n_b % h;
    if (ra > 0) prof.blocks.push_back({-la, -la, {{1, ra, Phase::A}}});
    if (la > 0) prof.blocks.push_back({-la + 1, 0, {{1, h, Phase::A}}});
    if (lb > 0) prof.blocks.push_back({1, lb, {{1, h, Phase::B}}});
    if (rb > 0) prof.blocks.push_back({lb + 1, lb + 1, {{1, rb, Phase::B}}});
    return prof;
}

}  // namespace

AffineInBeta height_perimeter(std::int64_t n, std::int64_t h) { return {4 * ceil_div(n, h) + 4 * h, -2 * h}; }

SolveResult min_perimeter(std::int64_t n, const Beta& beta) {
    require_positive(n);
    const long double b = beta.to_double();
    const long double c = 2.0L / (2.0L - b);
    const long double mid = c + std::sqrt(2.0L * static_cast<long double>(n) / (2.0L - b));
    const long double half = c * std::sqrt(1.0L + std::sqrt(2.0L * static_cast<long double>(n) * (2.0L - b)));
    const auto lo = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(mid - half)));
    const auto hi = std::min<std::int64_t>(n, static_cast<std::int64_t>(std::ceil(mid + half)));
    return scan(n, beta, std::min(lo, hi), hi);
}

SolveResult min_perimeter_full_scan(std::int64_t n, const Beta& beta) {
    require_positive(n);
    return scan(n, beta, 1, n);
}

Configuration build_straight(std::int64_t n_a, std::int64_t n_b, std::int64_t h) {
    return straight_columns(n_a, n_b, h).to_configuration();
}

Configuration build_explicit(std::int64_t n, std::int64_t h) { return build_straight(n, n, h); }

ColumnProfile build_explicit_columns(std::int64_t n, std::int64_t h) { return straight_columns(n, n, h); }

std::pair<std::int64_t, std::int64_t> class4_ratio(const Beta& beta) {
    if (!beta.is_exact()) throw DomainError("the Class IV family needs an exact beta");
    if (beta.rational() > Rational(1, 2)) throw DomainError("the Class IV family needs beta <= 1/2");
    const Rational ratio = Rational(1) - beta.rational() / Rational(2);
    return {ratio.num(), ratio.den()};
}

Configuration build_class4_family(const Beta& beta, std::int64_t k) {
    if (k < 1) throw DomainError("k must be at least 1");
    const auto [r, s] = class4_ratio(beta);
    const auto kr = k * r;
    const auto ks = k * s;
    std::vector<Configuration::Entry> e;
    e.reserve(static_cast<std::size_t>(2 * (kr * ks + 1)));
    for (std::int64_t x = -kr + 1; x <= 0; ++x) {
        for (std::int64_t y = 1; y <= ks; ++y) e.emplace_back(LatticePoint{x, y}, Phase::A);
    }
    e.emplace_back(LatticePoint{1, ks}, Phase::A);
    for (std::int64_t x = 1; x <= kr; ++x) {
        for (std::int64_t y = 0; y <= ks - 1; ++y) e.emplace_back(LatticePoint{x, y}, Phase::B);
    }
    e.emplace_back(LatticePoint{0, 0}, Phase::B);
    return Configuration(std::move(e));
}

std::pair<Rect, Rect> wulff_rectangles(const Beta& beta) {
    const double b = beta.to_double();
    const double w = std::sqrt((2.0 - b) / 2.0);
    const double h = std::sqrt(2.0 / (2.0 - b));
    return {Rect{-w, 0.0, 0.0, h}, Rect{0.0, w, 0.0, h}};
}

double continuum_energy(const Beta& beta) {
    if (beta.to_double() > 0.5) throw DomainError("the continuum value is established for beta <= 1/2 only");
    return 4.0 * std::sqrt(4.0 - 2.0 * beta.to_double());
}

double wulff_discrepancy(const Configuration& config, const Beta& beta) {
    const auto n = config.count_a();
    if (n < 1 || n != config.count_b()) throw DomainError("wulff_discrepancy needs N_A = N_B >= 1");
    const auto [rect_a, rect_b] = wulff_rectangles(beta);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    const double margin = std::pow(static_cast<double>(n), -0.25);

    double best = 1.0;
    for (const auto& g : point_group()) {
        const auto img = apply_isometry(config, Isometry{g, 0, 0});
        double cx = 0.0, cy = 0.0;
        for (const auto& [p, ph] : img.entries()) {
            cx += static_cast<double>(p.x);
            cy += static_cast<double>(p.y);
        }
        cx /= static_cast<double>(img.size());
        cy /= static_cast<double>(img.size());
        const double tx = 0.0 - cx * scale;
        const double ty = rect_a.y1 / 2.0 - cy * scale;

        std::int64_t out_a = 0, out_b = 0;
        for (const auto& [p, ph] : img.entries()) {
            const double x = static_cast<double>(p.x) * scale + tx;
            const double y = static_cast<double>(p.y) * scale + ty;
            const Rect& r = ph == Phase::A ? rect_a : rect_b;
            const bool inside = x >= r.x0 - margin && x <= r.x1 + margin && y >= r.y0 - margin && y <= r.y1 + margin;
            if (!inside) (ph == Phase::A ? out_a : out_b) += 1;
        }
        const double worst = static_cast<double>(std::max(out_a, out_b)) / static_cast<double>(n);
        best = std::min(best, worst);
    }
    return best;
}

}  // namespace bubblegrid
