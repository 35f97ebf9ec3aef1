#include "bubblegrid/geometry.hpp"

#include <fftw3.h>

#include <algorithm>
#include <limits>
#include <optional>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "bubblegrid/errors.hpp"

namespace bubblegrid {

namespace {

std::int64_t checked_mul_add(int m0, std::int64_t x, int m1, std::int64_t y, std::int64_t t) {
    // Matrix entries are in {-1, 0, 1}; only negation of INT64_MIN and the sums can overflow.
    std::int64_t acc = t;
    for (const auto& [m, v] : {std::pair{m0, x}, std::pair{m1, y}}) {
        if (m == 0) continue;
        if (m < 0 && v == std::numeric_limits<std::int64_t>::min()) throw std::overflow_error("isometry overflow");
        if (__builtin_add_overflow(acc, m * v, &acc)) throw std::overflow_error("isometry overflow");
    }
    return acc;
}

struct Box {
    std::int64_t x0, y0, x1, y1;  // inclusive
    std::int64_t width() const { return x1 - x0 + 1; }
    std::int64_t height() const { return y1 - y0 + 1; }
};

Box bounding_box(const Configuration& c) {
    Box b{std::numeric_limits<std::int64_t>::max(), std::numeric_limits<std::int64_t>::max(),
          std::numeric_limits<std::int64_t>::min(), std::numeric_limits<std::int64_t>::min()};
    for (const auto& [p, ph] : c.entries()) {
        b.x0 = std::min(b.x0, p.x);
        b.y0 = std::min(b.y0, p.y);
        b.x1 = std::max(b.x1, p.x);
        b.y1 = std::max(b.y1, p.y);
    }
    return b;
}

Configuration map_points(const Configuration& config, const PointGroupElement& g) {
    return apply_isometry(config, Isometry{g, 0, 0});
}

}  // namespace

bool is_connected(std::span<const LatticePoint> points) {
    if (points.size() <= 1) return true;
    std::vector<LatticePoint> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<char> seen(sorted.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const auto p = sorted[stack.back()];
        stack.pop_back();
        for (const auto q : {LatticePoint{p.x + 1, p.y}, LatticePoint{p.x - 1, p.y}, LatticePoint{p.x, p.y + 1},
                             LatticePoint{p.x, p.y - 1}}) {
            auto it = std::lower_bound(sorted.begin(), sorted.end(), q);
            if (it == sorted.end() || *it != q) continue;
            const auto idx = static_cast<std::size_t>(it - sorted.begin());
            if (seen[idx]) continue;
            seen[idx] = 1;
            ++reached;
            stack.push_back(idx);
        }
    }
    return reached == sorted.size();
}

std::vector<InterfacePoint> interface(const Configuration& config) {
    std::vector<InterfacePoint> out;
    for (const auto& [p, ph] : config.entries()) {
        if (ph != Phase::A) continue;
        for (const auto& [dx, dy] : {std::pair{1, 0}, std::pair{-1, 0}, std::pair{0, 1}, std::pair{0, -1}}) {
            if (config.phase_at({p.x + dx, p.y + dy}) == Phase::B) out.push_back({2 * p.x + dx, 2 * p.y + dy});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool interface_is_monotone_connected(const Configuration& config) {
    const auto pts = interface(config);
    if (pts.empty()) return true;

    std::vector<char> seen(pts.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    static constexpr std::array<std::pair<int, int>, 8> kSteps{
        {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}, {2, 0}, {-2, 0}, {0, 2}, {0, -2}}};
    while (!stack.empty()) {
        const auto p = pts[stack.back()];
        stack.pop_back();
        for (const auto& [dx, dy] : kSteps) {
            const InterfacePoint q{p.x2 + dx, p.y2 + dy};
            if (dx * dx + dy * dy == 4) {
                // Segment midpoint, in doubled coordinates, must not be a lattice site.
                const auto mx = p.x2 + dx / 2;
                const auto my = p.y2 + dy / 2;
                if (mx % 2 == 0 && my % 2 == 0) continue;
            }
            auto it = std::lower_bound(pts.begin(), pts.end(), q);
            if (it == pts.end() || *it != q) continue;
            const auto idx = static_cast<std::size_t>(it - pts.begin());
            if (seen[idx]) continue;
            seen[idx] = 1;
            ++reached;
            stack.push_back(idx);
        }
    }
    if (reached != pts.size()) return false;

    for (const auto& g : point_group()) {
        std::vector<std::pair<std::int64_t, std::int64_t>> img;
        img.reserve(pts.size());
        for (const auto& p : pts) img.emplace_back(g.a * p.x2 + g.b * p.y2, g.c * p.x2 + g.d * p.y2);
        std::sort(img.begin(), img.end());
        // Sorted by x: monotone iff the minimum y over each x-group is at least
        // the maximum y over all strictly smaller x.
        bool ok = true;
        std::int64_t max_y_before = std::numeric_limits<std::int64_t>::min();
        for (std::size_t i = 0; i < img.size() && ok;) {
            std::size_t j = i;
            std::int64_t lo = img[i].second;
            std::int64_t hi = img[i].second;
            while (j < img.size() && img[j].first == img[i].first) {
                lo = std::min(lo, img[j].second);
                hi = std::max(hi, img[j].second);
                ++j;
            }
            if (lo < max_y_before) ok = false;
            max_y_before = std::max(max_y_before, hi);
            i = j;
        }
        if (ok) return true;
    }
    return false;
}

std::vector<std::pair<InterfacePoint, InterfacePoint>> interface_edges(const Configuration& config) {
    const auto pts = interface(config);
    std::vector<std::pair<InterfacePoint, InterfacePoint>> out;
    for (const auto& p : pts) {
        for (const auto& [dx, dy] : {std::pair{1, 1}, std::pair{1, -1}, std::pair{2, 0}, std::pair{0, 2}}) {
            if (dx * dx + dy * dy == 4 && (p.x2 + dx / 2) % 2 == 0 && (p.y2 + dy / 2) % 2 == 0) continue;
            const InterfacePoint q{p.x2 + dx, p.y2 + dy};
            if (std::binary_search(pts.begin(), pts.end(), q)) out.emplace_back(p, q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

const std::array<PointGroupElement, 8>& point_group() {
    static const std::array<PointGroupElement, 8> kGroup{{
        {1, 0, 0, 1},
        {0, -1, 1, 0},
        {-1, 0, 0, -1},
        {0, 1, -1, 0},
        {-1, 0, 0, 1},
        {1, 0, 0, -1},
        {0, 1, 1, 0},
        {0, -1, -1, 0},
    }};
    return kGroup;
}

Isometry operator*(const Isometry& lhs, const Isometry& rhs) {
    const auto& l = lhs.g;
    const auto& r = rhs.g;
    Isometry out;
    out.g = {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
    const auto t = lhs.apply({rhs.dx, rhs.dy});
    out.dx = t.x;
    out.dy = t.y;
    return out;
}

Isometry Isometry::inverse() const {
    // Orthogonal matrix: inverse is the transpose.
    Isometry inv;
    inv.g = {g.a, g.c, g.b, g.d};
    const auto t = Isometry{inv.g, 0, 0}.apply({dx, dy});
    if (t.x == std::numeric_limits<std::int64_t>::min() || t.y == std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("isometry overflow");
    }
    inv.dx = -t.x;
    inv.dy = -t.y;
    return inv;
}

LatticePoint Isometry::apply(LatticePoint p) const {
    return {checked_mul_add(g.a, p.x, g.b, p.y, dx), checked_mul_add(g.c, p.x, g.d, p.y, dy)};
}

Configuration apply_isometry(const Configuration& config, const Isometry& iso) {
    std::vector<Configuration::Entry> out;
    out.reserve(config.size());
    for (const auto& [p, ph] : config.entries()) out.emplace_back(iso.apply(p), ph);
    return Configuration(std::move(out));
}

Configuration normalize_translation(const Configuration& config) {
    if (config.empty()) return config;
    const auto box = bounding_box(config);
    return apply_isometry(config, Isometry{{}, -box.x0, -box.y0});
}

Configuration canonical_form(const Configuration& config, bool identify_phase_swap) {
    if (config.empty()) return config;
    std::vector<Configuration> sources{config};
    if (identify_phase_swap && config.count_a() == config.count_b()) sources.push_back(config.swapped());
    std::optional<Configuration> best;
    for (const auto& src : sources) {
        for (const auto& g : point_group()) {
            auto img = normalize_translation(map_points(src, g));
            if (!best || img.entries() < best->entries()) best = std::move(img);
        }
    }
    return *best;
}

// ------------------------------------------------- symmetric difference

namespace {

void require_nonempty(const Configuration& c1, const Configuration& c2) {
    if (c1.empty() || c2.empty()) throw DomainError("symmetric difference needs nonempty configurations");
}

std::int64_t total(const Configuration& c1, const Configuration& c2) {
    return static_cast<std::int64_t>(c1.size() + c2.size());
}

std::int64_t direct_work(const Configuration& c1, const Configuration& c2) {
    const auto b1 = bounding_box(c1);
    const auto b2 = bounding_box(c2);
    const auto side = std::max(b2.width(), b2.height());
    return 8 * (b1.width() + side) * (b1.height() + side) * static_cast<std::int64_t>(c2.size());
}

}  // namespace

std::int64_t min_symmetric_difference_direct(const Configuration& c1, const Configuration& c2) {
    require_nonempty(c1, c2);
    const auto n1 = normalize_translation(c1);
    const auto b1 = bounding_box(n1);
    // Dense phase grid of c1: 0 empty, 1 A, 2 B.
    std::vector<std::uint8_t> grid(static_cast<std::size_t>(b1.width() * b1.height()), 0);
    for (const auto& [p, ph] : n1.entries()) {
        grid[static_cast<std::size_t>(p.x * b1.height() + p.y)] = ph == Phase::A ? 1 : 2;
    }

    std::int64_t best_matches = 0;
    for (const auto& g : point_group()) {
        const auto img = normalize_translation(map_points(c2, g));
        const auto b2 = bounding_box(img);
        for (std::int64_t tx = -b2.x1; tx <= b1.x1; ++tx) {
            for (std::int64_t ty = -b2.y1; ty <= b1.y1; ++ty) {
                std::int64_t matches = 0;
                for (const auto& [p, ph] : img.entries()) {
                    const auto x = p.x + tx;
                    const auto y = p.y + ty;
                    if (x < 0 || y < 0 || x > b1.x1 || y > b1.y1) continue;
                    if (grid[static_cast<std::size_t>(x * b1.height() + y)] == (ph == Phase::A ? 1 : 2)) ++matches;
                }
                best_matches = std::max(best_matches, matches);
            }
        }
    }
    return total(c1, c2) - 2 * best_matches;
}

std::int64_t min_symmetric_difference_fft(const Configuration& c1, const Configuration& c2) {
    require_nonempty(c1, c2);
    static std::mutex planner_mutex;  // the FFTW planner is not reentrant

    const auto n1 = normalize_translation(c1);
    const auto b1 = bounding_box(n1);
    std::int64_t best_matches = 0;

    for (const auto& g : point_group()) {
        const auto img = normalize_translation(map_points(c2, g));
        const auto b2 = bounding_box(img);
        // Linear correlation needs no wrap-around overlap.
        const int nx = static_cast<int>(b1.width() + b2.width());
        const int ny = static_cast<int>(b1.height() + b2.height());
        const int nyc = ny / 2 + 1;
        const auto real_size = static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny);
        const auto cplx_size = static_cast<std::size_t>(nx) * static_cast<std::size_t>(nyc);

        double* f = fftw_alloc_real(real_size);
        double* h = fftw_alloc_real(real_size);
        fftw_complex* F = fftw_alloc_complex(cplx_size);
        fftw_complex* H = fftw_alloc_complex(cplx_size);
        fftw_complex* acc = fftw_alloc_complex(cplx_size);
        fftw_plan pf, ph, pinv;
        {
            std::lock_guard lock(planner_mutex);
            pf = fftw_plan_dft_r2c_2d(nx, ny, f, F, FFTW_ESTIMATE);
            ph = fftw_plan_dft_r2c_2d(nx, ny, h, H, FFTW_ESTIMATE);
            pinv = fftw_plan_dft_c2r_2d(nx, ny, acc, f, FFTW_ESTIMATE);
        }
        for (std::size_t i = 0; i < cplx_size; ++i) acc[i][0] = acc[i][1] = 0.0;

        for (const Phase phase : {Phase::A, Phase::B}) {
            std::fill(f, f + real_size, 0.0);
            std::fill(h, h + real_size, 0.0);
            for (const auto& [p, q] : n1.entries()) {
                if (q == phase) f[p.x * ny + p.y] = 1.0;
            }
            for (const auto& [p, q] : img.entries()) {
                if (q == phase) h[p.x * ny + p.y] = 1.0;
            }
            fftw_execute(pf);
            fftw_execute(ph);
            // corr(t) = sum_p f(p + t) h(p)  <=>  F * conj(H)
            for (std::size_t i = 0; i < cplx_size; ++i) {
                acc[i][0] += F[i][0] * H[i][0] + F[i][1] * H[i][1];
                acc[i][1] += F[i][1] * H[i][0] - F[i][0] * H[i][1];
            }
        }
        fftw_execute(pinv);
        const double scale = static_cast<double>(real_size);
        for (std::size_t i = 0; i < real_size; ++i) {
            best_matches = std::max(best_matches, static_cast<std::int64_t>(std::llround(f[i] / scale)));
        }
        {
            std::lock_guard lock(planner_mutex);
            fftw_destroy_plan(pf);
            fftw_destroy_plan(ph);
            fftw_destroy_plan(pinv);
        }
        fftw_free(f);
        fftw_free(h);
        fftw_free(F);
        fftw_free(H);
        fftw_free(acc);
    }
    return total(c1, c2) - 2 * best_matches;
}

std::int64_t min_symmetric_difference(const Configuration& c1, const Configuration& c2) {
    require_nonempty(c1, c2);
    constexpr std::int64_t kDirectBudget = 50'000'000;
    if (direct_work(c1, c2) <= kDirectBudget) return min_symmetric_difference_direct(c1, c2);
    return min_symmetric_difference_fft(c1, c2);
}

}  // namespace bubblegrid
