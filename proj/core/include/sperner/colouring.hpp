#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "sperner/grid.hpp"
#include "sperner/index.hpp"

namespace sperner {

using ColourId = std::uint64_t;

/// A total colouring of the grid [n]^N. Colour identifiers are arbitrary
/// non-negative integers; the canonical encoding packs a 0/1 vector of
/// length N into the low bits.
class Colouring {
public:
    explicit Colouring(GridShape shape, ColourId fill = 0);

    const GridShape& shape() const { return shape_; }
    int dim() const { return shape_.dim(); }
    int bound() const { return shape_.bound(); }

    ColourId colour_of(const Index& idx) const { return colours_[shape_.rank(idx)]; }
    ColourId colour_of_rank(std::uint64_t r) const { return colours_[r]; }
    void set_colour(const Index& idx, ColourId c) { colours_[shape_.rank(idx)] = c; }
    void set_colour_rank(std::uint64_t r, ColourId c) { colours_[r] = c; }

    std::set<ColourId> palette() const;

    bool operator==(const Colouring& other) const = default;

private:
    GridShape shape_;
    std::vector<ColourId> colours_;
};

struct SpernerViolation {
    Index first;
    Index second;
};

/// Checks the cubical Sperner condition: points at sup-distance exactly n
/// (some coordinate pair attains 0 and n) must get distinct colours.
/// Returns the lexicographically least violating pair, nullopt when valid.
std::optional<SpernerViolation> check_cubical_sperner(const Colouring& phi);

struct RichCube {
    Index anchor;
    int colour_count;
};

/// The cube whose vertex palette is largest; ties broken by lexicographic
/// anchor. Anchors range over the full grid, clamped degenerate cubes
/// included. For valid Sperner colourings the count is at least N + 1.
RichCube max_colours_per_cube(const Colouring& phi);

/// First anchor in lexicographic order whose cube shows at least `target`
/// colours; nullopt if none does.
std::optional<Index> find_rich_cube(const Colouring& phi, int target);

enum class PaletteMode {
    /// Colours stay inside the canonical 0/1-vector encodings [0, 2^N).
    /// The all-zero point keeps its base colour so the canonical anchor is
    /// stable across seeds.
    kCanonical,
    /// Perturbations may also mint fresh colour identifiers.
    kFree,
};

/// The boundary colouring phi0: bit i of the colour is 1 exactly when
/// sigma(i) = n. Always Sperner-valid.
Colouring canonical_colouring(const GridShape& shape);

/// Seeded generator: canonical base colouring plus random single-point
/// recolourings, each kept only if the Sperner condition survives.
/// Deterministic per (shape, seed, mode).
Colouring random_sperner_colouring(int dim, int bound, std::uint64_t seed,
                                   PaletteMode mode = PaletteMode::kFree);

/// Palette of a single cube, sorted ascending.
std::vector<ColourId> cube_palette(const Colouring& phi, const Index& anchor);

}  // namespace sperner
