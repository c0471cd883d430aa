#include "sperner/simplicial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace sperner {

namespace {

/// Staircase coordinates y (weakly decreasing, in [0, m]) to barycentric:
/// k_0 = m - y_0, k_j = y_{j-1} - y_j, k_d = y_{d-1}.
std::vector<int> staircase_to_barycentric(const std::vector<int>& y, int m) {
    const int d = static_cast<int>(y.size());
    std::vector<int> k(static_cast<std::size_t>(d) + 1);
    k[0] = m - y[0];
    for (int j = 1; j < d; ++j) k[static_cast<std::size_t>(j)] = y[static_cast<std::size_t>(j - 1)] - y[static_cast<std::size_t>(j)];
    k[static_cast<std::size_t>(d)] = y[static_cast<std::size_t>(d - 1)];
    return k;
}

bool weakly_decreasing(const std::vector<int>& y, int m) {
    int prev = m;
    for (int v : y) {
        if (v < 0 || v > prev) return false;
        prev = v;
    }
    return true;
}

}  // namespace

SimplicialComplexK::SimplicialComplexK(int simplex_dim, int scale)
    : dim_(simplex_dim), scale_(scale) {
    if (simplex_dim < 1) throw std::invalid_argument("SimplicialComplexK: dim must be >= 1");
    if (scale < 1) throw std::invalid_argument("SimplicialComplexK: scale must be >= 1");

    // Vertices: barycentric tuples in lexicographic order.
    std::map<std::vector<int>, int> ids;
    std::vector<int> tuple(static_cast<std::size_t>(dim_) + 1, 0);
    const auto emit = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == dim_) {
            tuple[static_cast<std::size_t>(dim_)] = remaining;
            int id = static_cast<int>(vertices_.size());
            vertices_.push_back(tuple);
            ids.emplace(tuple, id);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            tuple[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    emit(emit, 0, scale_);

    corners_.resize(static_cast<std::size_t>(dim_) + 1);
    for (int i = 0; i <= dim_; ++i) {
        std::vector<int> c(static_cast<std::size_t>(dim_) + 1, 0);
        c[static_cast<std::size_t>(i)] = scale_;
        corners_[static_cast<std::size_t>(i)] = ids.at(c);
    }

    // Cells: Kuhn-style staircase simplices restricted to the ordered
    // region m >= y_0 >= ... >= y_{d-1} >= 0. Exactly m^d of them survive.
    std::vector<int> base(static_cast<std::size_t>(dim_), 0);
    std::vector<int> perm(static_cast<std::size_t>(dim_));
    for (;;) {
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<int> y(base);
            std::vector<int> cell;
            bool ok = weakly_decreasing(y, scale_);
            if (ok) cell.push_back(ids.at(staircase_to_barycentric(y, scale_)));
            for (int step = 0; ok && step < dim_; ++step) {
                ++y[static_cast<std::size_t>(perm[static_cast<std::size_t>(step)])];
                ok = weakly_decreasing(y, scale_);
                if (ok) cell.push_back(ids.at(staircase_to_barycentric(y, scale_)));
            }
            if (ok) cells_.push_back(std::move(cell));
        } while (std::next_permutation(perm.begin(), perm.end()));

        int i = dim_ - 1;
        while (i >= 0 && base[static_cast<std::size_t>(i)] == scale_ - 1) --i;
        if (i < 0) break;
        ++base[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < dim_; ++j) base[static_cast<std::size_t>(j)] = 0;
    }
}

int SimplicialComplexK::vertex_id(const std::vector<int>& barycentric) const {
    const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), barycentric);
    if (it == vertices_.end() || *it != barycentric) {
        throw std::invalid_argument("SimplicialComplexK: unknown vertex");
    }
    return static_cast<int>(it - vertices_.begin());
}

Rat SimplicialComplexK::metric(int v, int w) const {
    const std::vector<int>& a = vertex(v);
    const std::vector<int>& b = vertex(w);
    int diff = 0;
    for (std::size_t i = 0; i < a.size(); ++i) diff = std::max(diff, std::abs(a[i] - b[i]));
    return rat(diff, scale_);
}

std::optional<std::string> check_simplicial_sperner(const SimplicialColouring& phi) {
    const SimplicialComplexK& k = *phi.complex;
    const int d = k.simplex_dim();
    if (static_cast<int>(phi.label_of.size()) != k.vertex_count()) {
        return "labeling is not total";
    }
    for (int label : phi.label_of) {
        if (label < 0 || label > d) return "label out of range";
    }
    std::vector<int> corner_label(static_cast<std::size_t>(d) + 1);
    std::vector<bool> used(static_cast<std::size_t>(d) + 1, false);
    for (int i = 0; i <= d; ++i) {
        corner_label[static_cast<std::size_t>(i)] = phi.label(k.corner(i));
        if (used[static_cast<std::size_t>(phi.label(k.corner(i)))]) {
            return "corner labels are not bijective";
        }
        used[static_cast<std::size_t>(phi.label(k.corner(i)))] = true;
    }
    for (int v = 0; v < k.vertex_count(); ++v) {
        const std::vector<int>& bary = k.vertex(v);
        for (int i = 0; i <= d; ++i) {
            if (bary[static_cast<std::size_t>(i)] == 0 &&
                phi.label(v) == corner_label[static_cast<std::size_t>(i)]) {
                std::ostringstream out;
                out << "vertex " << v << " on face {k_" << i
                    << " = 0} carries the opposite corner label";
                return out.str();
            }
        }
    }
    return std::nullopt;
}

bool boundedness_check(const SimplicialColouring& phi) {
    const SimplicialComplexK& k = *phi.complex;
    const int d = k.simplex_dim();
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(d) + 1);
    for (int v = 0; v < k.vertex_count(); ++v) {
        classes[static_cast<std::size_t>(phi.label(v))].push_back(v);
    }
    const Rat one = rat(1);
    for (const std::vector<int>& cls : classes) {
        for (std::size_t i = 0; i < cls.size(); ++i) {
            for (std::size_t j = i + 1; j < cls.size(); ++j) {
                if (k.metric(cls[i], cls[j]) >= one) return false;
            }
        }
    }
    return true;
}

namespace {

bool cell_fully_labeled(const SimplicialComplexK& k, const SimplicialColouring& phi, int cell) {
    const int d = k.simplex_dim();
    std::uint64_t seen = 0;
    for (int v : k.cell(cell)) seen |= (std::uint64_t{1} << phi.label(v));
    return seen == ((std::uint64_t{1} << (d + 1)) - 1);
}

}  // namespace

std::optional<int> find_fully_labeled_cell(const SimplicialColouring& phi) {
    if (check_simplicial_sperner(phi)) return std::nullopt;
    const SimplicialComplexK& k = *phi.complex;
    for (int c = 0; c < k.cell_count(); ++c) {
        if (cell_fully_labeled(k, phi, c)) return c;
    }
    return std::nullopt;  // unreachable for valid inputs; a defect signal
}

int count_fully_labeled_cells(const SimplicialColouring& phi) {
    const SimplicialComplexK& k = *phi.complex;
    int count = 0;
    for (int c = 0; c < k.cell_count(); ++c) count += cell_fully_labeled(k, phi, c);
    return count;
}

SimplicialColouring random_simplicial_colouring(const SimplicialComplexK& complex,
                                                std::uint64_t seed) {
    const int d = complex.simplex_dim();
    std::mt19937_64 rng(seed);
    std::vector<int> corner_label(static_cast<std::size_t>(d) + 1);
    std::iota(corner_label.begin(), corner_label.end(), 0);
    std::shuffle(corner_label.begin(), corner_label.end(), rng);

    SimplicialColouring phi;
    phi.complex = &complex;
    phi.label_of.assign(static_cast<std::size_t>(complex.vertex_count()), 0);
    for (int v = 0; v < complex.vertex_count(); ++v) {
        const std::vector<int>& bary = complex.vertex(v);
        // Allowed labels: corners of the carrier face (positive coordinates).
        std::vector<int> allowed;
        for (int i = 0; i <= d; ++i) {
            if (bary[static_cast<std::size_t>(i)] > 0) {
                allowed.push_back(corner_label[static_cast<std::size_t>(i)]);
            }
        }
        std::uniform_int_distribution<std::size_t> pick(0, allowed.size() - 1);
        phi.label_of[static_cast<std::size_t>(v)] = allowed[pick(rng)];
    }
    return phi;
}

}  // namespace sperner
