#include "bubblegrid/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "bubblegrid/errors.hpp"

namespace bubblegrid {

LatticePoint translated(LatticePoint p, std::int64_t dx, std::int64_t dy) {
    LatticePoint out;
    if (__builtin_add_overflow(p.x, dx, &out.x) || __builtin_add_overflow(p.y, dy, &out.y)) {
        throw std::overflow_error("lattice coordinate overflow");
    }
    return out;
}

// ---------------------------------------------------------------- Beta

Beta Beta::exact(std::int64_t num, std::int64_t den) { return exact(Rational(num, den)); }

Beta Beta::exact(const Rational& value) {
    if (value <= Rational(0) || value >= Rational(1)) {
        throw DomainError("beta must lie in (0,1), got " + value.to_string());
    }
    Beta b;
    b.exact_ = true;
    b.value_ = value;
    b.approx_ = value.to_double();
    return b;
}

Beta Beta::approx(double value) {
    if (!(value > 0.0 && value < 1.0)) {
        throw DomainError("beta must lie in (0,1), got " + std::to_string(value));
    }
    Beta b;
    b.exact_ = false;
    b.approx_ = value;
    return b;
}

Beta Beta::parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty beta");
    if (text.front() == '~') {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(text.substr(1), &used);
        } catch (const std::exception&) {
            throw ParseError("malformed beta '" + text + "'");
        }
        if (used != text.size() - 1) throw ParseError("malformed beta '" + text + "'");
        return approx(v);
    }
    if (text.find('/') == std::string::npos) {
        throw ParseError("beta must be written p/q or ~decimal, got '" + text + "'");
    }
    return exact(Rational::parse(text));
}

std::string Beta::to_string() const {
    if (exact_) return value_.to_string();
    std::ostringstream os;
    os.precision(17);
    os << '~' << approx_;
    return os.str();
}

// -------------------------------------------------------- AffineInBeta

Rational AffineInBeta::at(const Rational& beta) const { return Rational(c0) + Rational(c1) * beta; }

std::string AffineInBeta::to_string() const {
    std::string s = std::to_string(c0);
    s += c1 < 0 ? "-" : "+";
    s += std::to_string(c1 < 0 ? -c1 : c1);
    s += 'b';
    return s;
}

std::weak_ordering compare_at(const AffineInBeta& a, const AffineInBeta& b, const Beta& beta) {
    if (beta.is_exact()) {
        const auto cmp = a.at(beta.rational()) <=> b.at(beta.rational());
        if (cmp < 0) return std::weak_ordering::less;
        if (cmp > 0) return std::weak_ordering::greater;
        return std::weak_ordering::equivalent;
    }
    const double d = a.at(beta.to_double()) - b.at(beta.to_double());
    if (std::abs(d) < Beta::kTieTolerance) return std::weak_ordering::equivalent;
    return d < 0 ? std::weak_ordering::less : std::weak_ordering::greater;
}

std::string format_value(const AffineInBeta& v, const Beta& beta) {
    if (beta.is_exact()) return v.at(beta.rational()).to_string();
    std::ostringstream os;
    os.precision(15);
    os << v.at(beta.to_double());
    return os.str();
}

// ------------------------------------------------------- Configuration

Configuration::Configuration(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& l, const Entry& r) { return l.first < r.first; });
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i].first == entries_[i - 1].first) {
            throw DomainError("duplicate lattice point (" + std::to_string(entries_[i].first.x) + "," +
                              std::to_string(entries_[i].first.y) + ")");
        }
    }
}

Configuration Configuration::from_sets(std::span<const LatticePoint> a, std::span<const LatticePoint> b) {
    std::vector<Entry> e;
    e.reserve(a.size() + b.size());
    for (auto p : a) e.emplace_back(p, Phase::A);
    for (auto p : b) e.emplace_back(p, Phase::B);
    return Configuration(std::move(e));
}

std::int64_t Configuration::count(Phase p) const {
    return std::count_if(entries_.begin(), entries_.end(), [p](const Entry& e) { return e.second == p; });
}

std::optional<Phase> Configuration::phase_at(LatticePoint p) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                               [](const Entry& e, const LatticePoint& q) { return e.first < q; });
    if (it == entries_.end() || it->first != p) return std::nullopt;
    return it->second;
}

std::vector<LatticePoint> Configuration::points(Phase p) const {
    std::vector<LatticePoint> out;
    for (const auto& [pt, ph] : entries_) {
        if (ph == p) out.push_back(pt);
    }
    return out;
}

std::vector<LatticePoint> Configuration::all_points() const {
    std::vector<LatticePoint> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.first);
    return out;
}

Configuration Configuration::swapped() const {
    Configuration c;
    c.entries_ = entries_;
    for (auto& e : c.entries_) e.second = other(e.second);
    return c;
}

// ------------------------------------------------------------ energies

BondCounts bond_counts(const Configuration& config) {
    BondCounts bc;
    std::int64_t n_a = 0;
    std::int64_t n_b = 0;
    for (const auto& [p, ph] : config.entries()) {
        (ph == Phase::A ? n_a : n_b) += 1;
        // Each unordered bond is seen once, from its lower-left end.
        for (const auto q : {LatticePoint{p.x + 1, p.y}, LatticePoint{p.x, p.y + 1}}) {
            const auto other_phase = config.phase_at(q);
            if (!other_phase) continue;
            if (*other_phase != ph) {
                ++bc.cross;
            } else if (ph == Phase::A) {
                ++bc.intra_a;
            } else {
                ++bc.intra_b;
            }
        }
    }
    bc.boundary_a = 4 * n_a - 2 * bc.intra_a - bc.cross;
    bc.boundary_b = 4 * n_b - 2 * bc.intra_b - bc.cross;
    return bc;
}

AffineInBeta perimeter(const BondCounts& bc) {
    // Q(A,A^c) + Q(B,B^c) - 2 beta Q(A,B)
    const AffineInBeta first{(bc.boundary_a + bc.cross) + (bc.boundary_b + bc.cross), -2 * bc.cross};
    // Q(A,A^c\B) + Q(B,B^c\A) + (2 - 2 beta) Q(A,B)
    const AffineInBeta second = AffineInBeta{bc.boundary_a + bc.boundary_b, 0} + bc.cross * AffineInBeta{2, -2};
    if (first != second) throw std::logic_error("perimeter expansions disagree");
    return first;
}

AffineInBeta perimeter(const Configuration& config) { return perimeter(bond_counts(config)); }

AffineInBeta energy(const BondCounts& bc) { return AffineInBeta{-(bc.intra_a + bc.intra_b), -bc.cross}; }

AffineInBeta energy(const Configuration& config) { return energy(bond_counts(config)); }

AffineInBeta ising_energy(const Configuration& config, const Beta& /*beta*/) {
    // Ordered-pair sums over C = A u B.
    std::int64_t spin_sum = 0;  // sum u(x) u(y)
    std::int64_t abs_sum = 0;   // sum |u(x) u(y)|
    for (const auto& [p, ph] : config.entries()) {
        const int u = ph == Phase::A ? 1 : -1;
        for (const auto q : {LatticePoint{p.x + 1, p.y}, LatticePoint{p.x - 1, p.y}, LatticePoint{p.x, p.y + 1},
                             LatticePoint{p.x, p.y - 1}}) {
            const auto other_phase = config.phase_at(q);
            if (!other_phase) continue;
            const int v = *other_phase == Phase::A ? 1 : -1;
            spin_sum += u * v;
            abs_sum += 1;
        }
    }
    // 4F = -(1 - beta) spin_sum - (1 + beta) abs_sum
    const AffineInBeta four_f{-spin_sum - abs_sum, spin_sum - abs_sum};
    if (four_f.c0 % 4 != 0 || four_f.c1 % 4 != 0) throw std::logic_error("Ising sum not divisible by 4");
    return {four_f.c0 / 4, four_f.c1 / 4};
}

// ---------------------------------------------------------- row access

std::vector<std::int64_t> occupied_rows(const Configuration& config) {
    std::vector<std::int64_t> ys;
    for (const auto& e : config.entries()) ys.push_back(e.first.y);
    std::sort(ys.begin(), ys.end(), std::greater<>());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    return ys;
}

std::vector<std::int64_t> occupied_columns(const Configuration& config) {
    std::vector<std::int64_t> xs;
    for (const auto& e : config.entries()) xs.push_back(e.first.x);
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());  // entries are x-sorted
    return xs;
}

std::vector<std::pair<std::int64_t, Phase>> row_slice(const Configuration& config, std::int64_t y) {
    std::vector<std::pair<std::int64_t, Phase>> out;
    for (const auto& [p, ph] : config.entries()) {
        if (p.y == y) out.emplace_back(p.x, ph);
    }
    return out;  // already x-sorted
}

std::vector<std::pair<std::int64_t, Phase>> col_slice(const Configuration& config, std::int64_t x) {
    std::vector<std::pair<std::int64_t, Phase>> out;
    for (const auto& [p, ph] : config.entries()) {
        if (p.x == x) out.emplace_back(p.y, ph);
    }
    return out;
}

// ------------------------------------------------------- column runs

Configuration ColumnProfile::to_configuration() const {
    std::vector<Configuration::Entry> e;
    for (const auto& b : blocks) {
        for (std::int64_t x = b.x_lo; x <= b.x_hi; ++x) {
            for (const auto& r : b.runs) {
                for (std::int64_t y = r.y_lo; y <= r.y_hi; ++y) e.emplace_back(LatticePoint{x, y}, r.phase);
            }
        }
    }
    return Configuration(std::move(e));
}

BondCounts bond_counts(const ColumnProfile& profile) {
    BondCounts bc;
    std::int64_t n_a = 0;
    std::int64_t n_b = 0;
    auto add_bonds = [&bc](Phase p, Phase q, std::int64_t k) {
        if (k <= 0) return;
        if (p != q) {
            bc.cross += k;
        } else if (p == Phase::A) {
            bc.intra_a += k;
        } else {
            bc.intra_b += k;
        }
    };
    const auto& blocks = profile.blocks;
    for (std::size_t c = 0; c < blocks.size(); ++c) {
        const auto& runs = blocks[c].runs;
        const auto width = blocks[c].x_hi - blocks[c].x_lo + 1;
        for (std::size_t i = 0; i < runs.size(); ++i) {
            const auto len = runs[i].y_hi - runs[i].y_lo + 1;
            (runs[i].phase == Phase::A ? n_a : n_b) += width * len;
            add_bonds(runs[i].phase, runs[i].phase, width * (len - 1));
            add_bonds(runs[i].phase, runs[i].phase, (width - 1) * len);
            if (i + 1 < runs.size() && runs[i + 1].y_lo == runs[i].y_hi + 1) {
                add_bonds(runs[i].phase, runs[i + 1].phase, width);
            }
        }
        if (c + 1 < blocks.size() && blocks[c + 1].x_lo == blocks[c].x_hi + 1) {
            for (const auto& r : runs) {
                for (const auto& s : blocks[c + 1].runs) {
                    add_bonds(r.phase, s.phase, std::min(r.y_hi, s.y_hi) - std::max(r.y_lo, s.y_lo) + 1);
                }
            }
        }
    }
    bc.boundary_a = 4 * n_a - 2 * bc.intra_a - bc.cross;
    bc.boundary_b = 4 * n_b - 2 * bc.intra_b - bc.cross;
    return bc;
}

}  // namespace bubblegrid
