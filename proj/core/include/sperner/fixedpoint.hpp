#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sperner/colouring.hpp"
#include "sperner/index.hpp"
#include "sperner/rational.hpp"

namespace sperner {

using RatPoint = std::vector<Rat>;

/// A self-map of [0, 1]^N evaluated exactly at rational points. Evaluation
/// must be pure and reentrant; outputs are range-checked.
class GridMap {
public:
    GridMap(int dim, std::string name, std::function<RatPoint(const RatPoint&)> eval,
            std::optional<Rat> lipschitz = std::nullopt);

    int dim() const { return dim_; }
    const std::string& name() const { return name_; }
    const std::optional<Rat>& lipschitz() const { return lipschitz_; }

    /// Evaluates and verifies the output stays in [0, 1]^N.
    RatPoint operator()(const RatPoint& x) const;

private:
    int dim_;
    std::string name_;
    std::function<RatPoint(const RatPoint&)> eval_;
    std::optional<Rat> lipschitz_;
};

/// Built-in test maps.
GridMap identity_map(int dim);
GridMap constant_map(RatPoint value);
/// Per-axis x -> x^2.
GridMap square_map(int dim);
/// Rotation about (1/2, 1/2) by the rational rotation (cos, sin) =
/// ((t^2 - 1) / (t^2 + 1), 2t / (t^2 + 1)), clipped to the square. Larger
/// t means a smaller angle. Unique fixed point at the centre.
GridMap rotation_map(long t = 20);
/// Per-axis univariate polynomial with rational coefficients (ascending
/// powers), clipped to [0, 1].
GridMap polynomial_map(std::vector<std::vector<Rat>> coefficients);

/// Looks up a built-in map by name: identity, const, square, rotate.
GridMap builtin_map(const std::string& name, int dim);

/// The componentwise sign labeling at scale m: vertex v = sigma / m takes
/// the colour with bit i set iff f(v)[i] >= v[i], overridden to 1 on the
/// face sigma[i] = 0 and to 0 on sigma[i] = m. Always Sperner-valid.
Colouring sign_labeling(const GridMap& f, int m);

struct BrouwerResult {
    RatPoint point;
    Rat residual;        // max_i |f(x)[i] - x[i]|, re-evaluated at the point
    int scale = 0;       // the m at which the mixed cube was found
    int escalations = 0; // number of scale doublings performed
};

/// Sperner-based fixed-point approximation: finds the lexicographically
/// first full-dimensional grid cube whose vertex labels realize both bit
/// values on every axis, and returns its centre. If no such cube exists at
/// scale m the scale doubles, up to max_escalations; exhaustion throws.
BrouwerResult brouwer_approx(const GridMap& f, int m, int max_escalations = 6);

struct CoordinateFixedReport {
    RatPoint point;
    CoordSet near_fixed;  // coordinates with |f(x)[i] - x[i]| < eps
    int scale = 0;
};

/// Empirical probe: over the centres of all sign-mixed cubes at scale m
/// (cubes realizing both bits on every axis), the point maximizing the
/// number of eps-fixed coordinates; ties go to the lexicographically least
/// centre. Falls back to all cube centres when no mixed cube exists.
CoordinateFixedReport coordinate_fixed_experiment(const GridMap& f, const Rat& eps, int m);

}  // namespace sperner
