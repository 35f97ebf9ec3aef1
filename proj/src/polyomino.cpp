#include "bubblegrid/polyomino.hpp"

#include "bubblegrid/errors.hpp"

namespace bubblegrid {

namespace {

// Redelmeier's method: grow from the origin, only ever adding cells above the
// origin's row or to its right, each cell tried at most once per branch.
class Redelmeier {
public:
    Redelmeier(int n, const std::function<void(std::span<const LatticePoint>)>& visit)
        : n_(n), width_(2 * n + 1), visit_(visit), seen_(static_cast<std::size_t>(width_ * (n + 1)), 0) {}

    void run() {
        const int origin = index(0, 0);
        seen_[static_cast<std::size_t>(origin)] = 1;
        std::vector<int> untried{origin};
        grow(untried);
    }

private:
    int index(int x, int y) const { return y * width_ + (x + n_); }
    bool allowed(int x, int y) const { return y > 0 || (y == 0 && x >= 0); }

    void grow(std::vector<int> untried) {
        while (!untried.empty()) {
            const int cell = untried.back();
            untried.pop_back();
            const int x = cell % width_ - n_;
            const int y = cell / width_;
            poly_.push_back({x, y});
            if (static_cast<int>(poly_.size()) == n_) {
                visit_(poly_);
            } else {
                std::vector<int> next = untried;
                std::vector<int> marked;
                for (const auto& [dx, dy] : {std::pair{1, 0}, std::pair{-1, 0}, std::pair{0, 1}, std::pair{0, -1}}) {
                    const int nx = x + dx;
                    const int ny = y + dy;
                    if (!allowed(nx, ny) || nx < -n_ || nx > n_ || ny > n_) continue;
                    const int id = index(nx, ny);
                    if (seen_[static_cast<std::size_t>(id)]) continue;
                    seen_[static_cast<std::size_t>(id)] = 1;
                    marked.push_back(id);
                    next.push_back(id);
                }
                grow(std::move(next));
                for (const int id : marked) seen_[static_cast<std::size_t>(id)] = 0;
            }
            poly_.pop_back();
        }
    }

    int n_;
    int width_;
    const std::function<void(std::span<const LatticePoint>)>& visit_;
    std::vector<char> seen_;
    std::vector<LatticePoint> poly_;
};

}  // namespace

void for_each_fixed_polyomino(int n, const std::function<void(std::span<const LatticePoint>)>& visit) {
    if (n < 1 || n > 24) throw DomainError("polyomino size must lie in [1, 24]");
    Redelmeier(n, visit).run();
}

std::int64_t count_fixed_polyominoes(int n) {
    std::int64_t count = 0;
    for_each_fixed_polyomino(n, [&count](std::span<const LatticePoint>) { ++count; });
    return count;
}

}  // namespace bubblegrid
