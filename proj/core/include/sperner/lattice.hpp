#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sperner/grid.hpp"
#include "sperner/index.hpp"

namespace sperner {

/// Coordinatewise sum clamped into [0, n]: (sigma + tau)(i) = min(n, sigma(i) + tau(i)).
Index truncated_add(const Index& sigma, const Index& tau);

/// The vertex set of the grid cube anchored at sigma: all truncated sums
/// sigma + tau over tau in {0,1}^N, deduplicated, in lexicographic order.
/// Cardinality is 2^(number of unclamped coordinates).
std::vector<Index> positive_cube(const Index& sigma);

/// max_i |sigma(i) - tau(i)|.
int sup_distance(const Index& sigma, const Index& tau);

/// All tau with |sigma(i) - tau(i)| <= k for i in A and tau(i) = sigma(i)
/// off A, values clipped to [0, n]. Lexicographic order.
std::vector<Index> ball(const Index& sigma, const CoordSet& a, int k);

/// The constrained ball: coordinates in A frozen at sigma, every other
/// coordinate free to move by at most k. Lexicographic order.
std::vector<Index> hat_ball(const Index& sigma, const CoordSet& a, int k);

/// True iff every point of hat_ball(sigma, a, k) lies in `member`.
/// Enumerates the ball lazily, no materialization.
bool hat_ball_inside(const Index& sigma, const CoordSet& a, int k, const GridSet& member);

/// Largest k in [0, n] such that hat_ball(sigma, a, k) fits inside a single
/// cover member; nullopt when even the degenerate k = 0 ball fits nowhere
/// (sigma is uncovered).
std::optional<int> local_lebesgue(const Index& sigma, const CoordSet& a,
                                  const std::vector<GridSet>& cover);

struct PropertyMOptions {
    /// Zero coordinates required of the extension candidates sigma'.
    int min_zeros = 1;
    /// Exhaustive superset enumeration while the free-coordinate count stays
    /// at or below this; beyond it a seeded sample of `sample_size` supersets
    /// is drawn and `capped` is reported.
    int exact_free_limit = 16;
    int sample_size = 4096;
    std::uint64_t sample_seed = 0;
};

struct PropertyMResult {
    bool holds = false;
    /// True when k + 1 > n made the second clause vacuous; surfaced so
    /// reports can flag ceiling cases explicitly.
    bool second_clause_vacuous = false;
    /// True when the superset family was sampled rather than enumerated.
    bool capped = false;
    std::uint64_t containment_checks = 0;
};

/// Property M(sigma, A, k, G, cover): hat_ball(sigma, A, k) fits in G, and no
/// strictly larger configuration fits anywhere - for every sigma' in the ball
/// with at least `min_zeros` zero coordinates and every strict superset A' of
/// A, no cover member contains hat_ball(sigma', A', k + 1).
PropertyMResult property_m(const Index& sigma, const CoordSet& a, int k, const GridSet& g,
                           const std::vector<GridSet>& cover,
                           const PropertyMOptions& options = {});

}  // namespace sperner
