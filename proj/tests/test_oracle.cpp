#include <doctest.h>

#include <algorithm>
#include <set>

#include "bubblegrid/classify.hpp"
#include "bubblegrid/errors.hpp"
#include "bubblegrid/geometry.hpp"
#include "bubblegrid/oracle.hpp"
#include "bubblegrid/polyomino.hpp"
#include "bubblegrid/regularize.hpp"
#include "test_support.hpp"

using namespace bubblegrid;

namespace {

struct BruteResult {
    Rational min;
    std::set<std::vector<Configuration::Entry>> canonical;  // without phase swap
};

/// Every placement of n_a + n_b points in a (total x total) box, connected
/// or not, with every phase split; energies from the pair scan.
BruteResult brute_force(int n_a, int n_b, const Rational& beta) {
    const int total = n_a + n_b;
    const int cells = total * total;
    BruteResult out;
    bool have = false;
    std::vector<Configuration> best;
    std::vector<int> pick(static_cast<std::size_t>(total));
    // Iterate subsets of box cells in lexicographic order.
    for (int i = 0; i < total; ++i) pick[static_cast<std::size_t>(i)] = i;
    for (;;) {
        std::vector<int> phase(static_cast<std::size_t>(total), 1);
        std::fill(phase.begin(), phase.begin() + n_a, 0);
        std::sort(phase.begin(), phase.end());
        do {
            std::vector<Configuration::Entry> e;
            for (int i = 0; i < total; ++i) {
                const int c = pick[static_cast<std::size_t>(i)];
                e.emplace_back(LatticePoint{c % total, c / total}, phase[static_cast<std::size_t>(i)] ? Phase::B : Phase::A);
            }
            Configuration cfg(std::move(e));
            const auto pc = testsupport::brute_pairs(cfg);
            const Rational en = Rational(-(pc.aa + pc.bb)) - Rational(pc.ab) * beta;
            if (!have || en < out.min) {
                have = true;
                out.min = en;
                best.clear();
            }
            if (en == out.min) best.push_back(std::move(cfg));
        } while (std::next_permutation(phase.begin(), phase.end()));

        int i = total - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == cells - total + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < total; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    for (const auto& c : best) out.canonical.insert(canonical_form(c, false).entries());
    return out;
}

}  // namespace

TEST_CASE("fixed polyomino counts") {
    const std::vector<std::int64_t> known{1, 2, 6, 19, 63, 216, 760, 2725, 9910, 36446};
    for (int n = 1; n <= 10; ++n) CHECK(count_fixed_polyominoes(n) == known[static_cast<std::size_t>(n - 1)]);
    CHECK_THROWS_AS(count_fixed_polyominoes(0), DomainError);
}

TEST_CASE("polyominoes are distinct connected shapes") {
    std::set<std::vector<LatticePoint>> seen;
    for_each_fixed_polyomino(6, [&](std::span<const LatticePoint> p) {
        std::vector<LatticePoint> v(p.begin(), p.end());
        CHECK(is_connected(v));
        std::sort(v.begin(), v.end());
        CHECK(seen.insert(v).second);
    });
    CHECK(seen.size() == 216);
}

TEST_CASE("oracle agrees with box brute force up to five points") {
    for (const auto& b : {Rational(1, 3), Rational(1, 2), Rational(2, 3)}) {
        const auto beta = Beta::exact(b);
        for (int total = 1; total <= 5; ++total) {
            for (int n_a = 0; n_a <= total; ++n_a) {
                const auto brute = brute_force(n_a, total - n_a, b);
                const auto rep = enumerate_minimisers(n_a, total - n_a, beta);
                CHECK(rep.min_energy.at(b) == brute.min);
                std::set<std::vector<Configuration::Entry>> got;
                for (const auto& c : rep.minimisers_no_swap) got.insert(c.entries());
                CHECK(got == brute.canonical);
            }
        }
    }
}

TEST_CASE("small catalog") {
    const auto half = Beta::exact(1, 2);
    auto rep = enumerate_minimisers(2, 1, Beta::exact(1, 3));
    CHECK(rep.minimisers_with_swap.size() == 2);
    for (const auto& c : testsupport::two_one_minimisers()) {
        const auto canon = canonical_form(c, true);
        CHECK(std::find(rep.minimisers_with_swap.begin(), rep.minimisers_with_swap.end(), canon) !=
              rep.minimisers_with_swap.end());
    }
    rep = enumerate_minimisers(4, 4, half);
    REQUIRE(rep.minimisers_with_swap.size() == 1);
    CHECK(rep.minimisers_with_swap[0] == canonical_form(testsupport::two_blocks_4(), true));
    rep = enumerate_minimisers(3, 4, Beta::exact(3, 4));
    CHECK(rep.minimisers_with_swap.size() == 3);
    for (const auto& c : testsupport::three_four_minimisers()) CHECK(rep.min_energy == energy(c));
}

TEST_CASE("minimal energies") {
    CHECK(format_value(min_energy_only(5, 5, Beta::exact(1, 2)), Beta::exact(1, 2)) == "-23/2");
    CHECK(min_energy_only(1, 1, Beta::exact(2, 7)) == AffineInBeta{0, -1});
    const auto half = Beta::exact(1, 2);
    const auto e33 = min_energy_only(3, 3, half);
    CHECK(compare_at(e33, energy(testsupport::three_three_straight()), half) == 0);
    CHECK(compare_at(e33, energy(testsupport::three_three_staircase()), half) == 0);
    CHECK(min_energy_only(3, 0, half) == AffineInBeta{-2, 0});
}

TEST_CASE("oracle errors and determinism") {
    const auto half = Beta::exact(1, 2);
    CHECK_THROWS_AS(enumerate_minimisers(0, 0, half), DomainError);
    CHECK_THROWS_AS(enumerate_minimisers(6, 6, half), DomainError);
    CHECK_THROWS_AS(enumerate_minimisers(-1, 2, half), DomainError);
    CHECK_THROWS_AS(verify_formula(3, Beta::exact(2, 3)), DomainError);
    CHECK_THROWS_AS(verify_formula(6, half), DomainError);
    const auto a = enumerate_minimisers(4, 3, half, {11, 1});
    const auto b = enumerate_minimisers(4, 3, half, {11, 3});
    CHECK(a.min_energy == b.min_energy);
    CHECK(a.minimisers_no_swap == b.minimisers_no_swap);
    CHECK(a.minimisers_with_swap == b.minimisers_with_swap);
    CHECK(a.shapes_searched == 760);
}

TEST_CASE("formula check") {
    for (const auto& beta : {Beta::exact(1, 2), Beta::exact(1, 4)}) {
        const auto rows = verify_formula(5, beta);
        REQUIRE(rows.size() == 5);
        for (const auto& r : rows) CHECK(r.ok);
        CHECK(rows[0].formula_perimeter == format_value({8, -2}, beta));
    }
}

TEST_CASE("oracle minimisers are admissible and already regular") {
    const auto beta = Beta::exact(1, 3);
    for (int n_a = 1; n_a <= 4; ++n_a) {
        for (int n_b = 1; n_b <= 4; ++n_b) {
            for (const auto& c : enumerate_minimisers(n_a, n_b, beta).minimisers_no_swap) {
                CHECK(is_admissible(c).ok());
                CHECK(energy(regularize_rows(c)) == energy(c));
                CHECK(energy(regularize_columns(c)) == energy(c));
                const auto cls = classify(c);
                CHECK(class_energy(cls.label, cls.params, n_a, n_b) == energy(c));
            }
        }
    }
}
