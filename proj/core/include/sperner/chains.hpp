#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sperner/boxes.hpp"
#include "sperner/colouring.hpp"

namespace sperner {

/// A finitely supported index of [n]^(<omega): unlisted coordinates are 0.
/// Coordinates below the active window are addressable.
class SparseIndex {
public:
    SparseIndex(int bound, int window);
    SparseIndex(int bound, int window, std::map<int, int> support);

    int bound() const { return bound_; }
    int window() const { return window_; }
    const std::map<int, int>& support() const { return support_; }

    int at(int i) const;
    void set(int i, int value);

    /// Widens the active window; support is untouched.
    SparseIndex widened(int window) const;

    /// True iff this agrees with `base` on base's support.
    bool extends(const SparseIndex& base) const;

    /// Dense restriction to the active window.
    Index to_index() const;

    std::string to_string() const;

    bool operator==(const SparseIndex& other) const {
        return bound_ == other.bound_ && support_ == other.support_;
    }

private:
    int bound_;
    int window_;
    std::map<int, int> support_;  // coordinate -> nonzero value
};

/// Colouring oracle over finite-support indices. Must be consistent across
/// windows (the colour depends on the index alone) and Sperner-valid on
/// every finite window.
using SparseColouringOracle = std::function<ColourId(const SparseIndex&)>;

/// The boundary oracle: bit i set exactly when sigma(i) = n.
ColourId canonical_sparse_oracle(const SparseIndex& sigma);

/// A seeded oracle backed by a random Sperner colouring on the widest
/// window grid [n]^window_cap.
SparseColouringOracle random_sparse_oracle(int bound, int window_cap, std::uint64_t seed);

struct ChainLink {
    SparseIndex sigma;
    ColourId colour;
};

struct WindowSchedule {
    int start = 4;
    int step = 2;

    int window_at(int level) const { return start + level * step; }
};

struct ExtensionChainResult {
    std::vector<ChainLink> chain;
    bool budget_exhausted = false;
    std::uint64_t nodes_visited = 0;
};

/// Backtracking search for a chain sigma_1, sigma_2, ... where each
/// sigma_{k+1} extends sigma_k on its support and the cube palettes
/// accumulate k distinct colours: {tau_1, ..., tau_k} inside
/// phi(K_{sigma_k}) at every level. Deterministic lexicographic candidate
/// order; returns the longest chain found within the node budget.
ExtensionChainResult extension_chain_search(const SparseColouringOracle& phi, int bound,
                                            int depth, const WindowSchedule& schedule,
                                            std::uint64_t node_budget = 200000);

/// Independent re-check of the two chain clauses: support agreement between
/// consecutive links and accumulated-colour containment in each cube
/// palette. Returns a diagnostic on failure.
std::optional<std::string> verify_extension_chain(const SparseColouringOracle& phi,
                                                  const std::vector<ChainLink>& chain);

/// The inclusion-ordered family of finite intersecting subfamilies of a
/// cover. Elements are sets of member indices; the family is downward
/// closed because nonempty intersection is hereditary under subsets.
struct NervePoset {
    std::vector<std::string> ground_labels;
    std::vector<std::vector<int>> elements;  // sorted member-index sets, by size then lex
    bool truncated = false;                  // element budget hit, poset partial
    int max_size = 0;
};

/// All intersecting subfamilies of size <= max_size, built level by level
/// (a subfamily is tested only when all facets intersect). Intersections
/// of box unions are exact.
NervePoset build_nerve_poset(const BoxCover& cover, int max_size,
                             std::uint64_t element_budget = 1000000);

/// Longest inclusion chain; equals the largest element size for downward
/// closed families. Lower bound only when the poset is truncated.
int max_chain_length(const NervePoset& poset);

/// Labels of a size-`target` intersecting family, lexicographically least
/// in member order; nullopt if none exists within the poset budget.
std::optional<std::vector<std::string>> nested_cover_chain(const BoxCover& cover, int target);

}  // namespace sperner
