#include "sperner/colouring.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "sperner/lattice.hpp"

namespace sperner {

Colouring::Colouring(GridShape shape, ColourId fill)
    : shape_(shape), colours_(shape.point_count(), fill) {}

std::set<ColourId> Colouring::palette() const {
    return std::set<ColourId>(colours_.begin(), colours_.end());
}

namespace {

/// True when the pair is "opposite": some coordinate attains 0 on one side
/// and n on the other, i.e. sup-distance is exactly n.
bool opposite_pair(const Index& a, const Index& b) {
    return sup_distance(a, b) == a.bound();
}

/// Checks a freshly recoloured point against every opposite partner.
bool point_is_valid(const Colouring& phi, const Index& p) {
    const GridShape& shape = phi.shape();
    const ColourId c = phi.colour_of(p);
    std::vector<int> coords(static_cast<std::size_t>(shape.dim()), 0);
    std::uint64_t r = 0;
    do {
        if (phi.colour_of_rank(r) == c) {
            Index q(shape.bound(), coords);
            if (opposite_pair(p, q) && phi.colour_of(q) == c) return false;
        }
        ++r;
    } while (shape.next(coords));
    return true;
}

}  // namespace

std::optional<SpernerViolation> check_cubical_sperner(const Colouring& phi) {
    const GridShape& shape = phi.shape();
    const std::uint64_t total = shape.point_count();
    for (std::uint64_t i = 0; i < total; ++i) {
        const ColourId ci = phi.colour_of_rank(i);
        Index a = shape.unrank(i);
        for (std::uint64_t j = i + 1; j < total; ++j) {
            if (phi.colour_of_rank(j) != ci) continue;
            Index b = shape.unrank(j);
            if (opposite_pair(a, b)) return SpernerViolation{a, b};
        }
    }
    return std::nullopt;
}

std::vector<ColourId> cube_palette(const Colouring& phi, const Index& anchor) {
    std::vector<ColourId> colours;
    for (const Index& v : positive_cube(anchor)) colours.push_back(phi.colour_of(v));
    std::sort(colours.begin(), colours.end());
    colours.erase(std::unique(colours.begin(), colours.end()), colours.end());
    return colours;
}

RichCube max_colours_per_cube(const Colouring& phi) {
    const GridShape& shape = phi.shape();
    std::vector<int> coords(static_cast<std::size_t>(shape.dim()), 0);
    Index best(shape.dim(), shape.bound());
    int best_count = 0;
    do {
        Index anchor(shape.bound(), coords);
        const int count = static_cast<int>(cube_palette(phi, anchor).size());
        if (count > best_count) {
            best_count = count;
            best = anchor;
        }
    } while (shape.next(coords));
    return RichCube{best, best_count};
}

std::optional<Index> find_rich_cube(const Colouring& phi, int target) {
    if (target < 1) throw std::invalid_argument("find_rich_cube: target must be >= 1");
    const GridShape& shape = phi.shape();
    std::vector<int> coords(static_cast<std::size_t>(shape.dim()), 0);
    do {
        Index anchor(shape.bound(), coords);
        // Accumulate the cube palette with early exit at the target.
        std::vector<ColourId> seen;
        for (const Index& v : positive_cube(anchor)) {
            const ColourId c = phi.colour_of(v);
            if (std::find(seen.begin(), seen.end(), c) == seen.end()) {
                seen.push_back(c);
                if (static_cast<int>(seen.size()) >= target) return anchor;
            }
        }
    } while (shape.next(coords));
    return std::nullopt;
}

Colouring canonical_colouring(const GridShape& shape) {
    if (shape.dim() > 63) throw std::invalid_argument("canonical colouring needs dim <= 63");
    Colouring phi(shape);
    std::vector<int> coords(static_cast<std::size_t>(shape.dim()), 0);
    std::uint64_t r = 0;
    do {
        ColourId c = 0;
        for (int i = 0; i < shape.dim(); ++i) {
            if (coords[static_cast<std::size_t>(i)] == shape.bound()) c |= (ColourId{1} << i);
        }
        phi.set_colour_rank(r, c);
        ++r;
    } while (shape.next(coords));
    return phi;
}

Colouring random_sperner_colouring(int dim, int bound, std::uint64_t seed, PaletteMode mode) {
    GridShape shape(dim, bound);
    Colouring phi = canonical_colouring(shape);
    const std::uint64_t total = shape.point_count();
    const ColourId canonical_limit = ColourId{1} << dim;
    const ColourId colour_limit =
        (mode == PaletteMode::kCanonical) ? canonical_limit : 2 * canonical_limit;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick_point(0, total - 1);
    std::uniform_int_distribution<ColourId> pick_colour(0, colour_limit - 1);

    const std::uint64_t attempts = 3 * total;
    for (std::uint64_t t = 0; t < attempts; ++t) {
        const std::uint64_t r = pick_point(rng);
        const ColourId fresh = pick_colour(rng);
        if (mode == PaletteMode::kCanonical && r == 0) continue;  // pinned base point
        const ColourId old = phi.colour_of_rank(r);
        if (fresh == old) continue;
        phi.set_colour_rank(r, fresh);
        if (!point_is_valid(phi, shape.unrank(r))) phi.set_colour_rank(r, old);
    }
    return phi;
}

}  // namespace sperner
