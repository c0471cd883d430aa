#include "sperner/fixedpoint.hpp"

#include <algorithm>
#include <stdexcept>

#include "sperner/lattice.hpp"

namespace sperner {

GridMap::GridMap(int dim, std::string name, std::function<RatPoint(const RatPoint&)> eval,
                 std::optional<Rat> lipschitz)
    : dim_(dim), name_(std::move(name)), eval_(std::move(eval)), lipschitz_(std::move(lipschitz)) {
    if (dim < 1) throw std::invalid_argument("GridMap: dim must be >= 1");
}

RatPoint GridMap::operator()(const RatPoint& x) const {
    if (static_cast<int>(x.size()) != dim_) throw std::invalid_argument("GridMap: point dim mismatch");
    RatPoint y = eval_(x);
    if (static_cast<int>(y.size()) != dim_) throw std::logic_error("GridMap: output dim mismatch");
    for (const Rat& c : y) {
        if (c < 0 || c > 1) throw std::logic_error("GridMap: output leaves [0, 1]^N");
    }
    return y;
}

GridMap identity_map(int dim) {
    return GridMap(dim, "identity", [](const RatPoint& x) { return x; }, rat(1));
}

GridMap constant_map(RatPoint value) {
    for (const Rat& c : value) {
        if (c < 0 || c > 1) throw std::invalid_argument("constant_map: value outside the cube");
    }
    const int dim = static_cast<int>(value.size());
    return GridMap(dim, "const", [value](const RatPoint&) { return value; }, rat(0));
}

GridMap square_map(int dim) {
    return GridMap(
        dim, "square",
        [](const RatPoint& x) {
            RatPoint y(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] * x[i];
            return y;
        },
        rat(2));
}

namespace {

Rat clip01(const Rat& x) { return x < 0 ? Rat(0) : (x > 1 ? Rat(1) : x); }

}  // namespace

GridMap rotation_map(long t) {
    if (t < 2) throw std::invalid_argument("rotation_map: t must be >= 2");
    const Rat c = rat(t * t - 1, t * t + 1);
    const Rat s = rat(2 * t, t * t + 1);
    const Rat half = rat(1, 2);
    return GridMap(
        2, "rotate",
        [c, s, half](const RatPoint& x) {
            const Rat dx = x[0] - half;
            const Rat dy = x[1] - half;
            RatPoint y(2);
            y[0] = clip01(Rat(half + c * dx - s * dy));
            y[1] = clip01(Rat(half + s * dx + c * dy));
            return y;
        },
        rat(1));
}

GridMap polynomial_map(std::vector<std::vector<Rat>> coefficients) {
    const int dim = static_cast<int>(coefficients.size());
    if (dim < 1) throw std::invalid_argument("polynomial_map: need at least one axis");
    return GridMap(dim, "poly", [coefficients](const RatPoint& x) {
        RatPoint y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            Rat acc = 0;
            for (auto it = coefficients[i].rbegin(); it != coefficients[i].rend(); ++it) {
                acc = acc * x[i] + *it;
            }
            y[i] = clip01(acc);
        }
        return y;
    });
}

GridMap builtin_map(const std::string& name, int dim) {
    if (name == "identity") return identity_map(dim);
    if (name == "square") return square_map(dim);
    if (name == "rotate") {
        if (dim != 2) throw std::invalid_argument("rotate is a planar map");
        return rotation_map();
    }
    if (name == "const") {
        RatPoint value;
        for (int i = 0; i < dim; ++i) value.push_back(rat(3 + 2 * i, 7 + 4 * i));
        return constant_map(std::move(value));
    }
    throw std::invalid_argument("unknown builtin map: " + name);
}

Colouring sign_labeling(const GridMap& f, int m) {
    if (m < 1) throw std::invalid_argument("sign_labeling: m must be >= 1");
    const int dim = f.dim();
    if (dim > 63) throw std::invalid_argument("sign_labeling: dim too large");
    GridShape shape(dim, m);
    Colouring phi(shape);
    std::vector<int> coords(static_cast<std::size_t>(dim), 0);
    RatPoint v(static_cast<std::size_t>(dim));
    std::uint64_t r = 0;
    do {
        for (int i = 0; i < dim; ++i) v[static_cast<std::size_t>(i)] = rat(coords[static_cast<std::size_t>(i)], m);
        const RatPoint fv = f(v);
        ColourId c = 0;
        for (int i = 0; i < dim; ++i) {
            bool bit;
            if (coords[static_cast<std::size_t>(i)] == 0) {
                bit = true;
            } else if (coords[static_cast<std::size_t>(i)] == m) {
                bit = false;
            } else {
                bit = fv[static_cast<std::size_t>(i)] >= v[static_cast<std::size_t>(i)];
            }
            if (bit) c |= (ColourId{1} << i);
        }
        phi.set_colour_rank(r, c);
        ++r;
    } while (shape.next(coords));
    return phi;
}

namespace {

/// Anchors of full-dimensional cubes (in [m-1]^N) whose vertex labels show
/// both bit values on every axis, in lexicographic order.
std::vector<Index> mixed_cubes(const Colouring& phi) {
    const GridShape& shape = phi.shape();
    const int dim = shape.dim();
    const int m = shape.bound();
    std::vector<Index> out;
    if (m < 1) return out;
    std::vector<int> coords(static_cast<std::size_t>(dim), 0);
    for (;;) {
        Index anchor(m, coords);
        ColourId ones = 0;
        ColourId zeros = 0;
        for (const Index& v : positive_cube(anchor)) {
            const ColourId c = phi.colour_of(v);
            ones |= c;
            zeros |= ~c;
        }
        const ColourId all = (ColourId{1} << dim) - 1;
        if ((ones & all) == all && (zeros & all) == all) out.push_back(anchor);
        // Next anchor within [m-1]^N.
        int i = dim - 1;
        while (i >= 0 && coords[static_cast<std::size_t>(i)] >= m - 1) --i;
        if (i < 0) break;
        ++coords[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < dim; ++j) coords[static_cast<std::size_t>(j)] = 0;
    }
    return out;
}

RatPoint cube_centre(const Index& anchor, int m) {
    RatPoint x(static_cast<std::size_t>(anchor.dim()));
    for (int i = 0; i < anchor.dim(); ++i) {
        x[static_cast<std::size_t>(i)] = rat(2 * anchor[i] + 1, 2 * m);
    }
    return x;
}

Rat residual_at(const GridMap& f, const RatPoint& x) {
    const RatPoint fx = f(x);
    Rat res = 0;
    for (std::size_t i = 0; i < x.size(); ++i) res = rat_max(res, rat_abs(Rat(fx[i] - x[i])));
    return res;
}

}  // namespace

BrouwerResult brouwer_approx(const GridMap& f, int m, int max_escalations) {
    if (m < 1) throw std::invalid_argument("brouwer_approx: m must be >= 1");
    int scale = m;
    for (int attempt = 0; attempt <= max_escalations; ++attempt) {
        const Colouring phi = sign_labeling(f, scale);
        const std::vector<Index> anchors = mixed_cubes(phi);
        if (!anchors.empty()) {
            BrouwerResult out;
            out.point = cube_centre(anchors.front(), scale);
            out.residual = residual_at(f, out.point);
            out.scale = scale;
            out.escalations = attempt;
            return out;
        }
        scale *= 2;
    }
    throw std::runtime_error("brouwer_approx: no sign-mixed cube up to scale " +
                             std::to_string(scale / 2));
}

CoordinateFixedReport coordinate_fixed_experiment(const GridMap& f, const Rat& eps, int m) {
    if (m < 1) throw std::invalid_argument("coordinate_fixed_experiment: m must be >= 1");
    const Colouring phi = sign_labeling(f, m);
    std::vector<Index> anchors = mixed_cubes(phi);
    if (anchors.empty()) {
        // Fall back to every full-dimensional cube centre.
        GridShape cubes(f.dim(), m);
        std::vector<int> coords(static_cast<std::size_t>(f.dim()), 0);
        for (;;) {
            bool in_range = true;
            for (int i = 0; i < f.dim(); ++i) in_range &= coords[static_cast<std::size_t>(i)] < m;
            if (in_range) anchors.push_back(Index(m, coords));
            int i = f.dim() - 1;
            while (i >= 0 && coords[static_cast<std::size_t>(i)] >= m - 1) --i;
            if (i < 0) break;
            ++coords[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < f.dim(); ++j) coords[static_cast<std::size_t>(j)] = 0;
        }
    }

    CoordinateFixedReport best{{}, CoordSet(f.dim()), m};
    int best_count = -1;
    for (const Index& anchor : anchors) {
        const RatPoint x = cube_centre(anchor, m);
        const RatPoint fx = f(x);
        CoordSet near(f.dim());
        for (int i = 0; i < f.dim(); ++i) {
            if (rat_abs(Rat(fx[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(i)])) < eps) {
                near.add(i);
            }
        }
        if (near.size() > best_count) {
            best_count = near.size();
            best.point = x;
            best.near_fixed = near;
        }
    }
    return best;
}

}  // namespace sperner
