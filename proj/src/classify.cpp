#include "bubblegrid/classify.hpp"

#include <algorithm>
#include <optional>
#include <vector>

#include "bubblegrid/errors.hpp"
#include "bubblegrid/regularize.hpp"
#include "bubblegrid/solver.hpp"

namespace bubblegrid {

namespace {

enum class Band { A, Mixed, B };

struct Lines {
    std::vector<Band> cols;  // left to right
    std::vector<Band> rows;  // top to bottom
    bool normal = true;      // A left of B in mixed rows, A above B in mixed columns
};

Band band_of(const std::vector<std::pair<std::int64_t, Phase>>& slice, bool a_low, bool& normal) {
    std::int64_t a_lo = INT64_MAX, a_hi = INT64_MIN, b_lo = INT64_MAX, b_hi = INT64_MIN;
    for (const auto& [c, ph] : slice) {
        auto& lo = ph == Phase::A ? a_lo : b_lo;
        auto& hi = ph == Phase::A ? a_hi : b_hi;
        lo = std::min(lo, c);
        hi = std::max(hi, c);
    }
    const bool has_a = a_lo != INT64_MAX;
    const bool has_b = b_lo != INT64_MAX;
    if (has_a && has_b) {
        if (a_low ? !(a_hi < b_lo) : !(b_hi < a_lo)) normal = false;
        return Band::Mixed;
    }
    return has_a ? Band::A : Band::B;
}

Lines lines_of(const Configuration& c) {
    Lines out;
    for (const auto x : occupied_columns(c)) out.cols.push_back(band_of(col_slice(c, x), false, out.normal));
    for (const auto y : occupied_rows(c)) out.rows.push_back(band_of(row_slice(c, y), true, out.normal));
    return out;
}

/// Splits a band sequence into consecutive runs matching `pattern`; each
/// entry of `pattern` is a band with a minimum run length of 0 or 1.
std::optional<std::vector<std::int64_t>> match(const std::vector<Band>& seq,
                                               std::initializer_list<std::pair<Band, int>> pattern) {
    std::vector<std::int64_t> counts;
    std::size_t i = 0;
    for (const auto& [band, min_len] : pattern) {
        std::int64_t n = 0;
        while (i < seq.size() && seq[i] == band) {
            ++i;
            ++n;
        }
        if (n < min_len) return std::nullopt;
        counts.push_back(n);
    }
    if (i != seq.size()) return std::nullopt;
    return counts;
}

std::int64_t count_band(const std::vector<Band>& seq, Band b) { return std::count(seq.begin(), seq.end(), b); }

std::optional<ClassParams> try_class(ClassLabel label, const Lines& L) {
    if (!L.normal) return std::nullopt;
    using enum Band;
    ClassParams p;
    switch (label) {
        case ClassLabel::I: {
            if (count_band(L.rows, Mixed) != static_cast<std::int64_t>(L.rows.size())) return std::nullopt;
            const auto c = match(L.cols, {{A, 0}, {Mixed, 0}, {B, 0}});
            if (!c) return std::nullopt;
            p.l1 = (*c)[0];
            p.l2 = (*c)[1];
            p.l3 = (*c)[2];
            p.h = p.h2 = static_cast<std::int64_t>(L.rows.size());
            return p;
        }
        case ClassLabel::II: {
            const auto c = match(L.cols, {{A, 1}, {B, 1}});
            if (!c) return std::nullopt;
            const auto rows_a = static_cast<std::int64_t>(L.rows.size()) - count_band(L.rows, B);
            const auto rows_b = static_cast<std::int64_t>(L.rows.size()) - count_band(L.rows, A);
            if (rows_a < rows_b) return std::nullopt;
            p.l1 = (*c)[0];
            p.l3 = (*c)[1];
            p.h1 = count_band(L.rows, A);
            p.h2 = count_band(L.rows, Mixed);
            p.h3 = count_band(L.rows, B);
            return p;
        }
        case ClassLabel::III: {
            const auto c = match(L.cols, {{A, 0}, {Mixed, 1}, {A, 0}});
            const auto r = match(L.rows, {{A, 0}, {Mixed, 1}, {A, 0}});
            if (!c || !r) return std::nullopt;
            p.l1 = (*c)[0];
            p.l2 = (*c)[1];
            p.l3 = (*c)[2];
            p.h1 = (*r)[0];
            p.h2 = (*r)[1];
            p.h3 = (*r)[2];
            return p;
        }
        case ClassLabel::IV: {
            const auto c = match(L.cols, {{A, 1}, {Mixed, 1}, {B, 0}});
            const auto r = match(L.rows, {{A, 1}, {Mixed, 1}, {B, 0}});
            if (!c || !r || ((*c)[2] == 0 && (*r)[2] == 0)) return std::nullopt;
            p.l1 = (*c)[0];
            p.l2 = (*c)[1];
            p.l3 = (*c)[2];
            p.h1 = (*r)[0];
            p.h2 = (*r)[1];
            p.h3 = (*r)[2];
            return p;
        }
        case ClassLabel::V: {
            // l1 may be 0: mixed columns against the left edge, A-only columns to their right.
            auto c = match(L.cols, {{A, 0}, {Mixed, 1}, {A, 1}});
            auto r = match(L.rows, {{A, 1}, {Mixed, 1}, {B, 1}});
            if (!c || !r) {
                // The remaining admissible layout: B-only rows on top, A-only rows at the bottom.
                c = match(L.cols, {{A, 1}, {Mixed, 1}, {B, 1}});
                r = match(L.rows, {{B, 1}, {Mixed, 1}, {A, 1}});
            }
            if (!c || !r) return std::nullopt;
            p.l1 = (*c)[0];
            p.l2 = (*c)[1];
            p.l3 = (*c)[2];
            p.h1 = (*r)[0];
            p.h2 = (*r)[1];
            p.h3 = (*r)[2];
            return p;
        }
        case ClassLabel::NotAdmissible:
            break;
    }
    return std::nullopt;
}

std::int64_t two_phase_columns(const Configuration& c) {
    std::int64_t n = 0;
    for (const auto x : occupied_columns(c)) {
        const auto s = col_slice(c, x);
        const bool a = std::any_of(s.begin(), s.end(), [](const auto& e) { return e.second == Phase::A; });
        const bool b = std::any_of(s.begin(), s.end(), [](const auto& e) { return e.second == Phase::B; });
        n += a && b;
    }
    return n;
}

/// Column-major fill of height h: A first, then B, each column top to bottom.
Configuration sequential_fill(std::int64_t n_a, std::int64_t n_b, std::int64_t h) {
    std::vector<Configuration::Entry> e;
    for (std::int64_t i = 0; i < n_a + n_b; ++i) {
        e.emplace_back(LatticePoint{i / h, h - (i % h)}, i < n_a ? Phase::A : Phase::B);
    }
    return Configuration(std::move(e));
}

}  // namespace

std::string to_string(ClassLabel label) {
    switch (label) {
        case ClassLabel::I: return "I";
        case ClassLabel::II: return "II";
        case ClassLabel::III: return "III";
        case ClassLabel::IV: return "IV";
        case ClassLabel::V: return "V";
        case ClassLabel::NotAdmissible: break;
    }
    return "NotAdmissible";
}

Classification classify(const Configuration& config) {
    if (config.count_a() == 0 || config.count_b() == 0) {
        throw DomainError("classify needs both phases present");
    }
    if (const auto report = is_admissible(config); !report.ok()) {
        throw DomainError("configuration is not admissible: " + report.violations.front());
    }
    struct Candidate {
        Lines lines;
        Isometry iso;
        bool swapped;
    };
    std::vector<Candidate> candidates;
    for (const bool swapped : {false, true}) {
        const auto src = swapped ? config.swapped() : config;
        for (const auto& g : point_group()) {
            const Isometry iso{g, 0, 0};
            candidates.push_back({lines_of(apply_isometry(src, iso)), iso, swapped});
        }
    }
    for (const auto label : {ClassLabel::I, ClassLabel::II, ClassLabel::III, ClassLabel::IV, ClassLabel::V}) {
        for (const auto& cand : candidates) {
            if (auto p = try_class(label, cand.lines)) return {label, *p, cand.iso, cand.swapped};
        }
    }
    throw DomainError("admissible configuration matches no class");
}

AffineInBeta class_energy(ClassLabel label, const ClassParams& p, std::int64_t n_a, std::int64_t n_b) {
    const AffineInBeta bulk{-2 * (n_a + n_b), 0};
    const AffineInBeta one_minus_beta{1, -1};
    switch (label) {
        case ClassLabel::I:
            return bulk + AffineInBeta{p.l1 + p.l2 + p.l3 + p.h, 0} + (p.l2 + p.h) * one_minus_beta;
        case ClassLabel::II:
            return bulk + AffineInBeta{p.l1 + p.l3 + p.h1 + p.h2 + p.h3, 0} + p.h2 * one_minus_beta;
        case ClassLabel::III:
        case ClassLabel::IV:
        case ClassLabel::V:
            return bulk + AffineInBeta{p.l1 + p.l2 + p.l3 + p.h1 + p.h2 + p.h3, 0} + (p.l2 + p.h2) * one_minus_beta;
        case ClassLabel::NotAdmissible:
            break;
    }
    throw DomainError("no energy formula for a non-admissible configuration");
}

Configuration compactify_class1(const Configuration& config, const Beta& beta) {
    const auto cls = classify(config);
    if (cls.label != ClassLabel::I) throw DomainError("compactify_class1 needs a Class I configuration");
    const auto n_a = config.count_a();
    const auto n_b = config.count_b();
    const auto h = cls.params.h;

    struct Option {
        Configuration config;
        std::int64_t height;
    };
    std::vector<Option> options{{build_straight(n_a, n_b, h), h}, {sequential_fill(n_a, n_b, h), h}};
    if (n_a == n_b && h < n_a) options.push_back({build_straight(n_a, n_b, h + 1), h + 1});

    const Option* best = nullptr;
    AffineInBeta best_p;
    std::int64_t best_l2 = 0;
    for (const auto& opt : options) {
        const auto p = perimeter(opt.config);
        const auto l2 = two_phase_columns(opt.config);
        if (best != nullptr) {
            const auto cmp = compare_at(p, best_p, beta);
            if (cmp > 0) continue;
            if (cmp == 0) {
                if (l2 > best_l2) continue;
                if (l2 == best_l2 && opt.height >= best->height) continue;
            }
        }
        best = &opt;
        best_p = p;
        best_l2 = l2;
    }
    return best->config;
}

}  // namespace bubblegrid
