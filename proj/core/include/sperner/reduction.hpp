#pragma once

#include <set>
#include <string>
#include <vector>

#include "sperner/boxes.hpp"
#include "sperner/colouring.hpp"
#include "sperner/grid.hpp"

namespace sperner {

/// The open product box G_sigma: per axis, the interval
/// ]((sigma(k) - 2/3) / n, (sigma(k) + 2/3) / n[ in the interior,
/// [0, 1/n[ at sigma(k) = 0 and ]1 - 1/n, 1] at sigma(k) = n.
RationalBox grid_point_box(const Index& sigma);

/// Builds the cover {U_tau}: one member per used colour tau, the union of
/// all G_sigma with phi(sigma) = tau. Members are ordered by colour id and
/// labelled with its decimal form. Refuses invalid colourings, since the
/// diameter guarantee would fail. Every member diameter is verified < 1.
BoxCover colouring_to_cover(const Colouring& phi);

struct GridColouring {
    Colouring colouring;
    /// Member label behind each colour id used in `colouring`.
    std::vector<std::string> palette_labels;
};

/// Colours each grid point sigma by the member containing sigma / n,
/// choosing the least label among candidates. Throws if a grid point is
/// uncovered. With all member diameters < 1 the result is Sperner-valid.
GridColouring cover_to_colouring(const BoxCover& cover, int n);

struct MultiplicityWitness {
    std::vector<Rat> point;
    std::vector<std::string> labels;  // complete list for the point
    int multiplicity = 0;
};

/// Exact maximiser of cover order: evaluates multiplicity on the full
/// arrangement candidate grid (endpoints plus midpoints per axis) and
/// returns the lexicographically least maximiser.
MultiplicityWitness max_multiplicity_point(const BoxCover& cover);

/// Coordinatewise infimum of a set of indices at pairwise sup-distance at
/// most 1; every element of the set is a vertex of the returned cube.
Index infimum_cube_recovery(const std::vector<Index>& sigmas);

struct RichCubeWitness {
    Index anchor;
    std::set<ColourId> colours;
    MultiplicityWitness witness;
};

/// The end-to-end reduction: cover the cube with colouring_to_cover, find a
/// maximal-multiplicity point, collect one grid index per distinct colour
/// whose box contains the point (greedily by least index), and recover the
/// common cube by coordinatewise infimum.
RichCubeWitness rich_cube_via_cover(const Colouring& phi);

/// Grid image of a geometric cover: member U becomes
/// {sigma in [n]^N : sigma / n in U}. Empty images are kept (and flagged by
/// the caller); labels ride along.
struct GridCover {
    GridShape shape;
    std::vector<GridSet> members;
    std::vector<std::string> labels;
};

GridCover grid_image(const BoxCover& cover, int n);

}  // namespace sperner
