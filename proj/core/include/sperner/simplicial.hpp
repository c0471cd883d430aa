#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sperner/rational.hpp"

namespace sperner {

/// The edgewise (staircase) subdivision of a d-simplex at scale m.
/// Vertices are the barycentric lattice points (k_0, ..., k_d) with
/// sum k_i = m; cells are the m^d staircase simplices, each listing
/// d + 1 vertex ids. The metric is the maximum barycentric-coordinate
/// difference, so corner pairs sit at distance exactly 1.
class SimplicialComplexK {
public:
    SimplicialComplexK(int simplex_dim, int scale);

    int simplex_dim() const { return dim_; }
    int scale() const { return scale_; }

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int cell_count() const { return static_cast<int>(cells_.size()); }

    /// Barycentric tuple of a vertex (d + 1 integers summing to m).
    const std::vector<int>& vertex(int id) const { return vertices_[static_cast<std::size_t>(id)]; }
    /// Vertex ids of a cell, d + 1 of them.
    const std::vector<int>& cell(int id) const { return cells_[static_cast<std::size_t>(id)]; }

    int vertex_id(const std::vector<int>& barycentric) const;

    /// Corner vertex i: barycentric coordinate i equals m.
    int corner(int i) const { return corners_[static_cast<std::size_t>(i)]; }

    /// d(v, w) = max_i |k_i - k'_i| / m.
    Rat metric(int v, int w) const;

private:
    int dim_;
    int scale_;
    std::vector<std::vector<int>> vertices_;
    std::vector<std::vector<int>> cells_;
    std::vector<int> corners_;
};

/// A vertex labeling of a subdivided simplex with labels {0, ..., d}.
struct SimplicialColouring {
    const SimplicialComplexK* complex = nullptr;
    std::vector<int> label_of;  // indexed by vertex id

    int label(int vertex) const { return label_of[static_cast<std::size_t>(vertex)]; }
};

/// Checks the simplicial Sperner condition: corner labels are a bijection
/// onto {0, ..., d}, and every vertex on the face {k_i = 0} avoids the
/// label of the opposite corner. Returns a diagnostic on failure.
std::optional<std::string> check_simplicial_sperner(const SimplicialColouring& phi);

/// True iff every colour class has diameter < 1 in the barycentric max
/// metric. Implies the corner labels are pairwise distinct.
bool boundedness_check(const SimplicialColouring& phi);

/// A cell whose vertices carry all d + 1 labels; nullopt only when the
/// input fails the Sperner validity pre-check.
std::optional<int> find_fully_labeled_cell(const SimplicialColouring& phi);

/// Number of fully labeled cells (exhaustive scan).
int count_fully_labeled_cells(const SimplicialColouring& phi);

/// Seeded valid labeling: corners get a random bijection, every other
/// vertex a random label drawn from the corners of its carrier face.
SimplicialColouring random_simplicial_colouring(const SimplicialComplexK& complex,
                                                std::uint64_t seed);

}  // namespace sperner
