#pragma once

// Test-side reference implementations, kept deliberately naive and
// independent of the library's search/sweep code paths. Expected values in
// the test files were produced by these oracles and then frozen.

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <set>
#include <vector>

#include "sperner/boxes.hpp"
#include "sperner/colouring.hpp"
#include "sperner/grid.hpp"
#include "sperner/index.hpp"

namespace oracles {

using sperner::BoxCover;
using sperner::Colouring;
using sperner::ColourId;
using sperner::CoordSet;
using sperner::GridSet;
using sperner::Index;
using sperner::Rat;

/// Every point of [n]^N as a coordinate vector, lexicographic.
inline std::vector<std::vector<int>> enumerate_grid(int dim, int bound) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(dim), 0);
    for (;;) {
        out.push_back(cur);
        int i = dim - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == bound) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < dim; ++j) cur[static_cast<std::size_t>(j)] = 0;
    }
    return out;
}

inline int naive_sup_distance(const std::vector<int>& a, const std::vector<int>& b) {
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

/// Filter-the-grid implementation of the constrained ball: coordinates in
/// `fixed` frozen, others within k.
inline std::vector<std::vector<int>> naive_hat_ball(const std::vector<int>& sigma, int bound,
                                                    const std::vector<int>& fixed, int k) {
    std::vector<std::vector<int>> out;
    for (const std::vector<int>& tau : enumerate_grid(static_cast<int>(sigma.size()), bound)) {
        bool ok = true;
        for (std::size_t i = 0; i < sigma.size() && ok; ++i) {
            const bool is_fixed =
                std::find(fixed.begin(), fixed.end(), static_cast<int>(i)) != fixed.end();
            if (is_fixed) {
                ok = tau[i] == sigma[i];
            } else {
                ok = std::abs(tau[i] - sigma[i]) <= k;
            }
        }
        if (ok) out.push_back(tau);
    }
    return out;
}

/// Plain ball: coordinates in `moving` within k, others frozen.
inline std::vector<std::vector<int>> naive_ball(const std::vector<int>& sigma, int bound,
                                                const std::vector<int>& moving, int k) {
    std::vector<int> fixed;
    for (int i = 0; i < static_cast<int>(sigma.size()); ++i) {
        if (std::find(moving.begin(), moving.end(), i) == moving.end()) fixed.push_back(i);
    }
    return naive_hat_ball(sigma, bound, fixed, k);
}

inline bool naive_subset_of_member(const std::vector<std::vector<int>>& points, int bound,
                                   const GridSet& member) {
    for (const std::vector<int>& p : points) {
        if (!member.contains(Index(bound, p))) return false;
    }
    return true;
}

/// k = 0, 1, ..., n tried one by one against every member.
inline std::optional<int> naive_local_lebesgue(const std::vector<int>& sigma, int bound,
                                               const std::vector<int>& fixed,
                                               const std::vector<GridSet>& cover) {
    std::optional<int> best;
    for (int k = 0; k <= bound; ++k) {
        const std::vector<std::vector<int>> ball = naive_hat_ball(sigma, bound, fixed, k);
        bool fits = false;
        for (const GridSet& member : cover) {
            if (naive_subset_of_member(ball, bound, member)) {
                fits = true;
                break;
            }
        }
        if (fits) best = k;
    }
    return best;
}

/// Direct triple-quantifier evaluation of property M, no caps.
inline bool naive_property_m(const std::vector<int>& sigma, int bound,
                             const std::vector<int>& fixed, int k, const GridSet& g,
                             const std::vector<GridSet>& cover) {
    if (!naive_subset_of_member(naive_hat_ball(sigma, bound, fixed, k), bound, g)) return false;
    if (k + 1 > bound) return true;
    const int dim = static_cast<int>(sigma.size());
    for (const std::vector<int>& prime : naive_hat_ball(sigma, bound, fixed, k)) {
        if (std::count(prime.begin(), prime.end(), 0) < 1) continue;
        // Every strict superset of `fixed`.
        std::vector<int> free;
        for (int i = 0; i < dim; ++i) {
            if (std::find(fixed.begin(), fixed.end(), i) == fixed.end()) free.push_back(i);
        }
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << free.size()); ++mask) {
            std::vector<int> a_prime(fixed);
            for (std::size_t b = 0; b < free.size(); ++b) {
                if ((mask >> b) & 1u) a_prime.push_back(free[b]);
            }
            for (const GridSet& member : cover) {
                if (naive_subset_of_member(naive_hat_ball(prime, bound, a_prime, k + 1), bound,
                                           member)) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// All-pairs Sperner check; first violating pair in lexicographic order.
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> naive_sperner_violation(
    const Colouring& phi) {
    const auto grid = enumerate_grid(phi.dim(), phi.bound());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = i + 1; j < grid.size(); ++j) {
            if (naive_sup_distance(grid[i], grid[j]) != phi.bound()) continue;
            if (phi.colour_of(Index(phi.bound(), grid[i])) ==
                phi.colour_of(Index(phi.bound(), grid[j]))) {
                return std::make_pair(grid[i], grid[j]);
            }
        }
    }
    return std::nullopt;
}

/// Cube palette by direct enumeration of tau in {0,1}^N.
inline std::set<ColourId> naive_cube_palette(const Colouring& phi, const std::vector<int>& sigma) {
    std::set<ColourId> out;
    const int dim = static_cast<int>(sigma.size());
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << dim); ++bits) {
        std::vector<int> v(sigma);
        for (int i = 0; i < dim; ++i) {
            v[static_cast<std::size_t>(i)] =
                std::min(phi.bound(), v[static_cast<std::size_t>(i)] + static_cast<int>((bits >> i) & 1));
        }
        out.insert(phi.colour_of(Index(phi.bound(), v)));
    }
    return out;
}

/// Independent point-in-region test straight off the endpoint data.
inline bool naive_region_contains(const sperner::Region& region, const std::vector<Rat>& p) {
    for (const sperner::RationalBox& b : region.boxes()) {
        bool inside = true;
        for (int i = 0; i < b.dim() && inside; ++i) {
            const sperner::AxisInterval& a = b.axis(i);
            if (p[static_cast<std::size_t>(i)] < a.lo || p[static_cast<std::size_t>(i)] > a.hi) inside = false;
            if (p[static_cast<std::size_t>(i)] == a.lo && a.lo_open) inside = false;
            if (p[static_cast<std::size_t>(i)] == a.hi && a.hi_open) inside = false;
        }
        if (inside) return true;
    }
    return false;
}

struct NaiveWitness {
    std::vector<Rat> point;
    int multiplicity = 0;
};

/// Brute-force arrangement evaluation: every candidate product point gets a
/// full membership count; first maximiser in lexicographic order wins.
inline NaiveWitness naive_max_multiplicity(const BoxCover& cover) {
    const auto cands = sperner::arrangement_candidates(cover);
    std::vector<std::size_t> pick(static_cast<std::size_t>(cover.dim()), 0);
    NaiveWitness best;
    for (;;) {
        std::vector<Rat> point;
        for (int i = 0; i < cover.dim(); ++i) {
            point.push_back(cands[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]]);
        }
        int mult = 0;
        for (const sperner::CoverMember& m : cover.members()) {
            mult += naive_region_contains(m.region, point);
        }
        if (mult > best.multiplicity) {
            best.multiplicity = mult;
            best.point = point;
        }
        int i = cover.dim() - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] + 1 >= cands[static_cast<std::size_t>(i)].size()) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < cover.dim(); ++j) pick[static_cast<std::size_t>(j)] = 0;
    }
    return best;
}

}  // namespace oracles
