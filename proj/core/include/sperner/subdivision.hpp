#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sperner/boxes.hpp"

namespace sperner {

/// A closed dyadic cube: level L and integer corner in [0, 2^L - 1]^N,
/// extending over prod [corner_i / 2^L, (corner_i + 1) / 2^L]. Sup-metric
/// diameter is the side length 2^-L.
struct DyadicCube {
    int level = 0;
    std::vector<std::int64_t> corner;

    int dim() const { return static_cast<int>(corner.size()); }
    RationalBox extent() const;
    Rat volume() const;

    /// The 2^N children at level + 1.
    std::vector<DyadicCube> children() const;

    bool operator==(const DyadicCube& other) const = default;
};

enum class LeafStatus { kAccepted, kRefused };

struct SubdivisionLeaf {
    DyadicCube cube;
    LeafStatus status = LeafStatus::kAccepted;
    /// Label of the fitting member for accepted leaves.
    std::string fitted_label;
};

/// Result of the adaptive refinement: the leaves of the dyadic tree, in
/// canonical order (geometric lower corner, then level), plus depth data.
struct SubdivisionTree {
    int dim = 0;
    int max_level = 0;
    std::vector<SubdivisionLeaf> leaves;

    bool has_refused() const;
    std::vector<const SubdivisionLeaf*> accepted() const;
};

/// Refines [0, 1]^N against the cover: a cube is accepted as soon as it fits
/// inside a single member (exact, openness-aware), otherwise split into 2^N
/// children; cubes still unfitted at max_level become refused leaves.
/// Accepted cubes are frozen, so the final complex is non-uniform.
SubdivisionTree adaptive_subdivide(const BoxCover& cover, int max_level);

struct WellFoundedReport {
    bool is_finite = false;  // no refused leaves
    int max_depth = 0;       // longest root-to-leaf chain
};

WellFoundedReport well_founded_check(const SubdivisionTree& tree);

struct ComplexColourStats {
    /// Distinct colour count of each accepted leaf's corner vertices.
    std::vector<int> per_leaf_counts;
    int max_count = 0;
    std::map<int, int> histogram;  // colour count -> number of leaves
    std::uint64_t vertex_count = 0;
};

/// Colours every corner vertex of the accepted leaf complex by the least
/// containing member label and reports per-cube colour counts. Throws on an
/// uncovered vertex.
ComplexColourStats complex_colour_stats(const SubdivisionTree& tree, const BoxCover& cover);

}  // namespace sperner
