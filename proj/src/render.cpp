#include "bubblegrid/render.hpp"

#include <algorithm>
#include <sstream>

#include "bubblegrid/geometry.hpp"

namespace bubblegrid {

namespace {

constexpr std::int64_t kStep = 20;
constexpr std::int64_t kRadius = 6;
constexpr std::int64_t kMargin = 20;

struct Extent {
    std::int64_t x0 = 0, x1 = 0, y0 = 0, y1 = 0;
};

Extent extent(const Configuration& c) {
    Extent e{c.entries().front().first.x, c.entries().back().first.x, c.entries().front().first.y,
             c.entries().front().first.y};
    for (const auto& [p, ph] : c.entries()) {
        e.y0 = std::min(e.y0, p.y);
        e.y1 = std::max(e.y1, p.y);
    }
    return e;
}

}  // namespace

std::string render_ascii(const Configuration& config) {
    if (config.empty()) return "";
    const auto e = extent(config);
    std::string out;
    for (std::int64_t y = e.y1; y >= e.y0; --y) {
        for (std::int64_t x = e.x0; x <= e.x1; ++x) {
            const auto ph = config.phase_at({x, y});
            out += !ph ? '.' : (*ph == Phase::A ? 'o' : '#');
        }
        out += '\n';
    }
    return out;
}

std::string render_svg(const Configuration& config) {
    std::ostringstream os;
    const Extent e = config.empty() ? Extent{} : extent(config);
    const auto width = (e.x1 - e.x0) * kStep + 2 * kMargin;
    const auto height = (e.y1 - e.y0) * kStep + 2 * kMargin;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    if (!config.empty()) {
        // Doubled coordinates keep half-steps integral: 2 * svg = kStep * d + 2 * margin.
        auto sx2 = [&](std::int64_t x2) { return (x2 - 2 * e.x0) * kStep / 2 + kMargin; };
        auto sy2 = [&](std::int64_t y2) { return (2 * e.y1 - y2) * kStep / 2 + kMargin; };
        const auto edges = interface_edges(config);
        if (!edges.empty()) {
            os << "  <path d=\"";
            bool first = true;
            for (const auto& [p, q] : edges) {
                if (!first) os << ' ';
                first = false;
                os << 'M' << sx2(p.x2) << ' ' << sy2(p.y2) << " L" << sx2(q.x2) << ' ' << sy2(q.y2);
            }
            os << "\" fill=\"none\" stroke=\"red\" stroke-width=\"2\"/>\n";
        }
        for (const auto& [p, ph] : config.entries()) {
            os << "  <circle cx=\"" << sx2(2 * p.x) << "\" cy=\"" << sy2(2 * p.y) << "\" r=\"" << kRadius << "\" "
               << (ph == Phase::A ? "fill=\"white\" stroke=\"black\"" : "fill=\"black\" stroke=\"black\"")
               << "/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace bubblegrid
