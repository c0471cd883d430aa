#include "sperner/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <stdexcept>

namespace sperner {

namespace {

void require_same_shape(const Index& sigma, const Index& tau) {
    if (!sigma.same_shape(tau)) throw std::invalid_argument("index shape mismatch");
}

void require_dim(const Index& sigma, const CoordSet& a) {
    if (sigma.dim() != a.dim()) throw std::invalid_argument("coordinate set dim mismatch");
}

/// Enumerates, in lexicographic order, all points whose coordinate i ranges
/// over [lo[i], hi[i]], calling visit on each. visit returning false stops.
template <typename Visit>
void scan_box(const Index& base, const std::vector<int>& lo, const std::vector<int>& hi,
              Visit&& visit) {
    const int dim = base.dim();
    std::vector<int> cur(lo);
    for (;;) {
        if (!visit(Index(base.bound(), cur))) return;
        int i = dim - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] >= hi[static_cast<std::size_t>(i)]) --i;
        if (i < 0) return;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < dim; ++j) cur[static_cast<std::size_t>(j)] = lo[static_cast<std::size_t>(j)];
    }
}

void ball_ranges(const Index& sigma, const CoordSet& moving, int k, std::vector<int>& lo,
                 std::vector<int>& hi) {
    const int n = sigma.bound();
    lo.resize(static_cast<std::size_t>(sigma.dim()));
    hi.resize(static_cast<std::size_t>(sigma.dim()));
    for (int i = 0; i < sigma.dim(); ++i) {
        if (moving.contains(i)) {
            lo[static_cast<std::size_t>(i)] = std::max(0, sigma[i] - k);
            hi[static_cast<std::size_t>(i)] = std::min(n, sigma[i] + k);
        } else {
            lo[static_cast<std::size_t>(i)] = sigma[i];
            hi[static_cast<std::size_t>(i)] = sigma[i];
        }
    }
}

}  // namespace

Index truncated_add(const Index& sigma, const Index& tau) {
    require_same_shape(sigma, tau);
    std::vector<int> out(static_cast<std::size_t>(sigma.dim()));
    for (int i = 0; i < sigma.dim(); ++i) {
        out[static_cast<std::size_t>(i)] = std::min(sigma.bound(), sigma[i] + tau[i]);
    }
    return Index(sigma.bound(), std::move(out));
}

std::vector<Index> positive_cube(const Index& sigma) {
    const int n = sigma.bound();
    std::vector<int> lo(sigma.coords());
    std::vector<int> hi(static_cast<std::size_t>(sigma.dim()));
    for (int i = 0; i < sigma.dim(); ++i) {
        hi[static_cast<std::size_t>(i)] = std::min(n, sigma[i] + 1);
    }
    std::vector<Index> out;
    scan_box(sigma, lo, hi, [&](Index idx) {
        out.push_back(std::move(idx));
        return true;
    });
    return out;
}

int sup_distance(const Index& sigma, const Index& tau) {
    require_same_shape(sigma, tau);
    int d = 0;
    for (int i = 0; i < sigma.dim(); ++i) d = std::max(d, std::abs(sigma[i] - tau[i]));
    return d;
}

std::vector<Index> ball(const Index& sigma, const CoordSet& a, int k) {
    require_dim(sigma, a);
    if (k < 0 || k > sigma.bound()) throw std::invalid_argument("ball: k out of [0, n]");
    std::vector<int> lo, hi;
    ball_ranges(sigma, a, k, lo, hi);
    std::vector<Index> out;
    scan_box(sigma, lo, hi, [&](Index idx) {
        out.push_back(std::move(idx));
        return true;
    });
    return out;
}

std::vector<Index> hat_ball(const Index& sigma, const CoordSet& a, int k) {
    return ball(sigma, a.complement(), k);
}

bool hat_ball_inside(const Index& sigma, const CoordSet& a, int k, const GridSet& member) {
    require_dim(sigma, a);
    if (k < 0 || k > sigma.bound()) throw std::invalid_argument("hat_ball_inside: k out of [0, n]");
    std::vector<int> lo, hi;
    ball_ranges(sigma, a.complement(), k, lo, hi);
    bool inside = true;
    scan_box(sigma, lo, hi, [&](const Index& idx) {
        inside = member.contains(idx);
        return inside;
    });
    return inside;
}

std::optional<int> local_lebesgue(const Index& sigma, const CoordSet& a,
                                  const std::vector<GridSet>& cover) {
    if (cover.empty()) throw std::invalid_argument("local_lebesgue: empty cover");
    require_dim(sigma, a);
    // hat balls are nested in k, so per member the fitting radii form a
    // prefix [0, k_max]; take the best member.
    std::optional<int> best;
    for (const GridSet& member : cover) {
        if (!member.contains(sigma)) continue;
        int k = 0;
        while (k + 1 <= sigma.bound() && hat_ball_inside(sigma, a, k + 1, member)) ++k;
        if (!best || k > *best) best = k;
        if (best && *best == sigma.bound()) break;
    }
    return best;
}

PropertyMResult property_m(const Index& sigma, const CoordSet& a, int k, const GridSet& g,
                           const std::vector<GridSet>& cover, const PropertyMOptions& options) {
    require_dim(sigma, a);
    if (cover.empty()) throw std::invalid_argument("property_m: empty cover");
    PropertyMResult result;

    ++result.containment_checks;
    if (!hat_ball_inside(sigma, a, k, g)) return result;  // holds stays false

    if (k + 1 > sigma.bound()) {
        result.second_clause_vacuous = true;
        result.holds = true;
        return result;
    }

    // Candidate strict supersets A' of A.
    const CoordSet free = a.complement();
    const std::vector<int> free_members = free.members();
    std::vector<std::uint64_t> superset_masks;  // masks over free coordinates, nonzero
    if (static_cast<int>(free_members.size()) <= options.exact_free_limit) {
        const std::uint64_t limit = std::uint64_t{1} << free_members.size();
        for (std::uint64_t m = 1; m < limit; ++m) superset_masks.push_back(m);
    } else {
        result.capped = true;
        std::mt19937_64 rng(options.sample_seed);
        const std::uint64_t span =
            (free_members.size() >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << free_members.size()) - 1;
        std::uniform_int_distribution<std::uint64_t> dist(1, span);
        for (int i = 0; i < options.sample_size; ++i) superset_masks.push_back(dist(rng));
    }

    const std::vector<Index> candidates = hat_ball(sigma, a, k);
    for (const Index& prime : candidates) {
        if (prime.zero_count() < options.min_zeros) continue;
        for (std::uint64_t m : superset_masks) {
            CoordSet a_prime = a;
            for (std::size_t b = 0; b < free_members.size(); ++b) {
                if ((m >> b) & 1u) a_prime.add(free_members[b]);
            }
            for (const GridSet& member : cover) {
                ++result.containment_checks;
                if (hat_ball_inside(prime, a_prime, k + 1, member)) {
                    return result;  // a strictly larger ball fits: M fails
                }
            }
        }
    }
    result.holds = true;
    return result;
}

}  // namespace sperner
