#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <set>
#include <vector>

#include "bubblegrid/lattice.hpp"

namespace testsupport {

using bubblegrid::Configuration;
using bubblegrid::LatticePoint;
using bubblegrid::Phase;

inline Configuration make(std::initializer_list<LatticePoint> a, std::initializer_list<LatticePoint> b) {
    std::vector<LatticePoint> va(a), vb(b);
    return Configuration::from_sets(va, vb);
}

/// Random points in a box with random phases; no structure assumed.
inline Configuration random_config(std::mt19937_64& rng, int max_points, int box) {
    std::uniform_int_distribution<int> count(0, max_points);
    std::uniform_int_distribution<int> coord(-box, box);
    std::bernoulli_distribution coin(0.5);
    std::set<LatticePoint> used;
    std::vector<Configuration::Entry> e;
    const int n = count(rng);
    while (static_cast<int>(e.size()) < n) {
        const LatticePoint p{coord(rng), coord(rng)};
        if (used.insert(p).second) e.emplace_back(p, coin(rng) ? Phase::A : Phase::B);
    }
    return Configuration(std::move(e));
}

/// Random connected union grown cell by cell, random phases.
inline Configuration random_connected(std::mt19937_64& rng, int n) {
    std::vector<LatticePoint> pts{{0, 0}};
    std::set<LatticePoint> used{{0, 0}};
    std::uniform_int_distribution<int> dir(0, 3);
    while (static_cast<int>(pts.size()) < n) {
        auto p = pts[std::uniform_int_distribution<std::size_t>(0, pts.size() - 1)(rng)];
        const int d = dir(rng);
        p = {p.x + (d == 0) - (d == 1), p.y + (d == 2) - (d == 3)};
        if (used.insert(p).second) pts.push_back(p);
    }
    std::bernoulli_distribution coin(0.5);
    std::vector<Configuration::Entry> e;
    for (const auto& p : pts) e.emplace_back(p, coin(rng) ? Phase::A : Phase::B);
    return Configuration(std::move(e));
}

/// Unit-distance pair counts by exhaustive pair scan: {AA, BB, AB}.
struct PairCounts {
    std::int64_t aa = 0, bb = 0, ab = 0;
};

inline PairCounts brute_pairs(const Configuration& c) {
    PairCounts out;
    const auto& e = c.entries();
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            const auto dx = e[i].first.x - e[j].first.x;
            const auto dy = e[i].first.y - e[j].first.y;
            if (dx * dx + dy * dy != 1) continue;
            if (e[i].second != e[j].second) {
                ++out.ab;
            } else if (e[i].second == Phase::A) {
                ++out.aa;
            } else {
                ++out.bb;
            }
        }
    }
    return out;
}

// Reference minimiser shapes; hollow = A, filled = B.

inline Configuration two_blocks_4() {
    return make({{-1, 0}, {0, 0}, {-1, 1}, {0, 1}}, {{1, 0}, {2, 0}, {1, 1}, {2, 1}});
}

inline Configuration three_three_straight() {
    return make({{0, 0}, {0, 1}, {0, 2}}, {{1, 0}, {1, 1}, {1, 2}});
}

inline Configuration three_three_staircase() {
    return make({{6, 0}, {6, 1}, {7, 1}}, {{7, 0}, {8, 1}, {8, 0}});
}

inline std::vector<Configuration> two_one_minimisers() {
    return {make({{0, 0}, {0, 1}}, {{1, 0}}), make({{5, 0}, {6, 0}}, {{7, 0}})};
}

inline std::vector<Configuration> three_four_minimisers() {
    return {
        make({{0, 0}, {0, 1}, {0, 2}}, {{1, 0}, {1, 1}, {2, 0}, {2, 1}}),
        make({{5, 0}, {6, 0}, {6, 1}}, {{7, 1}, {7, 0}, {8, 0}, {8, 1}}),
        make({{11, 1}, {11, 2}, {12, 2}}, {{12, 1}, {12, 0}, {13, 1}, {13, 0}}),
    };
}

inline std::vector<Configuration> five_five_minimisers() {
    return {
        make({{5, 7}, {5, 6}, {5, 5}, {4, 6}, {4, 5}}, {{6, 6}, {6, 5}, {7, 5}, {7, 6}, {6, 7}}),
        make({{10, 7}, {11, 7}, {12, 7}, {11, 6}, {10, 6}}, {{12, 6}, {12, 5}, {11, 5}, {13, 6}, {13, 5}}),
        make({{15, 3}, {17, 4}, {16, 3}, {15, 4}, {16, 4}}, {{19, 4}, {17, 3}, {18, 3}, {19, 3}, {18, 4}}),
        make({{11, 1}, {12, 2}, {10, 1}, {11, 2}, {10, 2}}, {{12, 0}, {13, 1}, {13, 2}, {13, 0}, {12, 1}}),
        make({{5, 2}, {5, 1}, {5, 0}, {4, 0}, {4, 1}}, {{6, 0}, {6, 1}, {6, 2}, {7, 2}, {7, 1}}),
    };
}

inline std::vector<Configuration> twelve_four_pair() {
    return {
        make({{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}, {3, 3}, {3, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 2}},
             {{3, 1}, {3, 0}, {2, 0}, {2, 1}}),
        make({{7, 0}, {7, 1}, {7, 2}, {7, 3}, {8, 0}, {8, 1}, {8, 2}, {8, 3}, {9, 0}, {9, 1}, {9, 2}, {9, 3}},
             {{10, 0}, {10, 1}, {10, 2}, {10, 3}}),
    };
}

inline std::vector<Configuration> twelve_four_triple() {
    return {
        make({{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 1}, {1, 2}, {1, 3}, {2, 0}, {2, 1}, {2, 2}, {2, 3}},
             {{3, 0}, {3, 1}, {4, 0}, {4, 1}}),
        make({{7, 0}, {7, 1}, {7, 2}, {7, 3}, {8, 0}, {8, 1}, {8, 2}, {8, 3}, {9, 0}, {9, 1}, {9, 2}, {9, 3}},
             {{10, 1}, {10, 2}, {11, 1}, {11, 2}}),
        make({{14, 0}, {14, 1}, {14, 2}, {15, 0}, {15, 1}, {15, 2}, {16, 0}, {16, 1}, {16, 2}, {17, 0}, {17, 1},
              {17, 2}},
             {{18, 0}, {18, 1}, {19, 0}, {19, 1}}),
    };
}

}  // namespace testsupport
