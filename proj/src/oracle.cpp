#include "bubblegrid/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <thread>

#include "bubblegrid/errors.hpp"
#include "bubblegrid/geometry.hpp"
#include "bubblegrid/polyomino.hpp"
#include "bubblegrid/solver.hpp"

namespace bubblegrid {

namespace {

/// Sign of a - b at beta; exact mode compares q c0 + p c1 in integers.
class Scorer {
public:
    explicit Scorer(const Beta& beta) : beta_(beta) {
        if (beta.is_exact()) {
            p_ = beta.rational().num();
            q_ = beta.rational().den();
        }
    }

    int compare(const AffineInBeta& a, const AffineInBeta& b) const {
        if (beta_.is_exact()) {
            const auto d = (a.c0 - b.c0) * q_ + (a.c1 - b.c1) * p_;
            return (d > 0) - (d < 0);
        }
        const auto c = compare_at(a, b, beta_);
        return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }

private:
    Beta beta_;
    std::int64_t p_ = 0;
    std::int64_t q_ = 1;
};

bool lex_less(const AffineInBeta& a, const AffineInBeta& b) { return std::pair{a.c0, a.c1} < std::pair{b.c0, b.c1}; }

/// Shapes of one size, flattened, grouped by the x-offsets occupied in their
/// bottom row.
struct ShapeBank {
    int n = 0;
    std::vector<LatticePoint> cells;  // n per shape
    std::vector<std::vector<std::size_t>> groups;
};

ShapeBank collect_shapes(int n) {
    ShapeBank bank;
    bank.n = n;
    std::map<std::uint64_t, std::vector<std::size_t>> by_signature;
    std::size_t id = 0;
    for_each_fixed_polyomino(n, [&](std::span<const LatticePoint> poly) {
        std::uint64_t sig = 0;
        for (const auto& c : poly) {
            if (c.y == 0) sig |= std::uint64_t{1} << c.x;
        }
        by_signature[sig].push_back(id++);
        bank.cells.insert(bank.cells.end(), poly.begin(), poly.end());
    });
    for (auto& [sig, ids] : by_signature) bank.groups.push_back(std::move(ids));
    return bank;
}

struct WorkerResult {
    std::optional<AffineInBeta> best;
    std::vector<Configuration> minimisers;
};

class Search {
public:
    Search(const ShapeBank& bank, std::int64_t n_a, const Beta& beta, bool collect)
        : bank_(bank), n_a_(static_cast<int>(n_a)), scorer_(beta), collect_(collect) {}

    void run_groups(std::atomic<std::size_t>& next, WorkerResult& out) const {
        const int n = bank_.n;
        std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n));
        for (std::size_t g; (g = next.fetch_add(1)) < bank_.groups.size();) {
            for (const auto id : bank_.groups[g]) {
                const LatticePoint* cells = bank_.cells.data() + id * static_cast<std::size_t>(n);
                std::int64_t degree_sum = 0;
                for (int u = 0; u < n; ++u) {
                    nbr[static_cast<std::size_t>(u)] = 0;
                    for (int v = 0; v < n; ++v) {
                        const auto dx = cells[u].x - cells[v].x;
                        const auto dy = cells[u].y - cells[v].y;
                        if (dx * dx + dy * dy == 1) nbr[static_cast<std::size_t>(u)] |= 1u << v;
                    }
                    degree_sum += std::popcount(nbr[static_cast<std::size_t>(u)]);
                }
                const std::int64_t bonds = degree_sum / 2;
                visit_masks(n, [&](std::uint32_t mask) {
                    std::int64_t cross = 0;
                    for (std::uint32_t m = mask; m != 0; m &= m - 1) {
                        cross += std::popcount(nbr[static_cast<std::size_t>(std::countr_zero(m))] & ~mask);
                    }
                    // E = -(bonds - cross) - beta cross
                    const AffineInBeta e{cross - bonds, -cross};
                    offer(e, cells, mask, out);
                });
            }
        }
    }

private:
    template <class F>
    void visit_masks(int n, F&& f) const {
        if (n_a_ == 0) {
            f(0u);
            return;
        }
        const std::uint32_t limit = n == 32 ? 0 : (1u << n);
        // Gosper's hack: successive masks with n_a_ bits set.
        for (std::uint32_t m = (1u << n_a_) - 1; m < limit;) {
            f(m);
            const std::uint32_t c = m & -m;
            const std::uint32_t r = m + c;
            if (r == 0) break;
            m = (((r ^ m) >> 2) / c) | r;
        }
    }

    void offer(const AffineInBeta& e, const LatticePoint* cells, std::uint32_t mask, WorkerResult& out) const {
        int cmp = out.best ? scorer_.compare(e, *out.best) : -1;
        if (cmp > 0) return;
        if (cmp < 0) {
            out.best = e;
            out.minimisers.clear();
        } else if (lex_less(e, *out.best)) {
            out.best = e;
        }
        if (!collect_) return;
        std::vector<Configuration::Entry> entries;
        entries.reserve(static_cast<std::size_t>(bank_.n));
        for (int u = 0; u < bank_.n; ++u) {
            entries.emplace_back(cells[u], (mask >> u) & 1u ? Phase::A : Phase::B);
        }
        out.minimisers.emplace_back(std::move(entries));
    }

    const ShapeBank& bank_;
    int n_a_;
    Scorer scorer_;
    bool collect_;
};

unsigned thread_count(const OracleOptions& options, std::size_t groups) {
    unsigned t = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("BUBBLEGRID_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) t = std::min<unsigned>(t, static_cast<unsigned>(cap));
    }
    return std::max<unsigned>(1, std::min<unsigned>(t, static_cast<unsigned>(std::max<std::size_t>(groups, 1))));
}

MinimiserReport search(std::int64_t n_a, std::int64_t n_b, const Beta& beta, const OracleOptions& options,
                       bool collect) {
    if (n_a < 0 || n_b < 0) throw DomainError("phase counts must be nonnegative");
    const auto total = n_a + n_b;
    if (total == 0) throw DomainError("N_A + N_B must be positive");
    if (total > options.budget) {
        throw DomainError("budget exceeded: " + std::to_string(total) + " points > " + std::to_string(options.budget));
    }
    if (options.budget > 12) {
        std::cerr << "warning: oracle budget " << options.budget << " above 12 points may take very long\n";
    }

    const auto bank = collect_shapes(static_cast<int>(total));
    const Scorer scorer(beta);
    const Search job(bank, n_a, beta, collect);
    const unsigned t = thread_count(options, bank.groups.size());
    std::vector<WorkerResult> results(t);
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> workers;
        for (unsigned i = 0; i < t; ++i) {
            workers.emplace_back([&, i] { job.run_groups(next, results[i]); });
        }
    }

    std::optional<AffineInBeta> best;
    for (const auto& r : results) {
        if (!r.best) continue;
        const int cmp = best ? scorer.compare(*r.best, *best) : -1;
        if (cmp < 0 || (cmp == 0 && lex_less(*r.best, *best))) best = r.best;
    }

    MinimiserReport report;
    report.min_energy = *best;
    report.min_value = format_value(*best, beta);
    report.shapes_searched = static_cast<std::int64_t>(bank.cells.size()) / total;
    if (collect) {
        std::set<std::vector<Configuration::Entry>> plain;
        std::set<std::vector<Configuration::Entry>> swapped;
        std::vector<Configuration> plain_list;
        std::vector<Configuration> swap_list;
        for (const auto& r : results) {
            if (!r.best || scorer.compare(*r.best, *best) != 0) continue;
            for (const auto& c : r.minimisers) {
                auto a = canonical_form(c, false);
                if (plain.insert(a.entries()).second) plain_list.push_back(std::move(a));
                auto b = canonical_form(c, true);
                if (swapped.insert(b.entries()).second) swap_list.push_back(std::move(b));
            }
        }
        auto by_entries = [](const Configuration& l, const Configuration& r) { return l.entries() < r.entries(); };
        std::sort(plain_list.begin(), plain_list.end(), by_entries);
        std::sort(swap_list.begin(), swap_list.end(), by_entries);
        report.minimisers_no_swap = std::move(plain_list);
        report.minimisers_with_swap = std::move(swap_list);
    }
    return report;
}

}  // namespace

MinimiserReport enumerate_minimisers(std::int64_t n_a, std::int64_t n_b, const Beta& beta,
                                     const OracleOptions& options) {
    return search(n_a, n_b, beta, options, true);
}

AffineInBeta min_energy_only(std::int64_t n_a, std::int64_t n_b, const Beta& beta, const OracleOptions& options) {
    return search(n_a, n_b, beta, options, false).min_energy;
}

std::vector<FormulaCheck> verify_formula(std::int64_t n_max, const Beta& beta, const OracleOptions& options) {
    if (!beta.is_exact() || beta.rational() > Rational(1, 2)) {
        throw DomainError("verify needs an exact beta <= 1/2");
    }
    if (n_max < 1) throw DomainError("N_max must be at least 1");
    if (2 * n_max > options.budget) {
        throw DomainError("budget exceeded: " + std::to_string(2 * n_max) + " points > " +
                          std::to_string(options.budget));
    }
    std::vector<FormulaCheck> out;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const auto e = min_energy_only(n, n, beta, options);
        const AffineInBeta from_oracle = 2 * e + AffineInBeta{8 * n, 0};
        const auto formula = min_perimeter(n, beta);
        FormulaCheck row;
        row.n = n;
        row.oracle_perimeter = format_value(from_oracle, beta);
        row.formula_perimeter = formula.min_value;
        row.ok = compare_at(from_oracle, formula.min_perimeter, beta) == 0;
        out.push_back(row);
    }
    return out;
}

}  // namespace bubblegrid
