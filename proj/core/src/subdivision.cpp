#include "sperner/subdivision.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace sperner {

RationalBox DyadicCube::extent() const {
    std::vector<AxisInterval> axes;
    axes.reserve(corner.size());
    const long den = 1L << level;
    for (std::int64_t c : corner) {
        axes.push_back(AxisInterval{rat(static_cast<long>(c), den),
                                    rat(static_cast<long>(c) + 1, den), false, false});
    }
    return RationalBox(std::move(axes));
}

Rat DyadicCube::volume() const {
    Rat side = rat(1, 1L << level);
    Rat v = 1;
    for (int i = 0; i < dim(); ++i) v *= side;
    return v;
}

std::vector<DyadicCube> DyadicCube::children() const {
    std::vector<DyadicCube> out;
    const int n = dim();
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        DyadicCube child;
        child.level = level + 1;
        child.corner.resize(corner.size());
        for (int i = 0; i < n; ++i) {
            child.corner[static_cast<std::size_t>(i)] =
                2 * corner[static_cast<std::size_t>(i)] + ((bits >> i) & 1);
        }
        out.push_back(std::move(child));
    }
    return out;
}

bool SubdivisionTree::has_refused() const {
    return std::any_of(leaves.begin(), leaves.end(),
                       [](const SubdivisionLeaf& l) { return l.status == LeafStatus::kRefused; });
}

std::vector<const SubdivisionLeaf*> SubdivisionTree::accepted() const {
    std::vector<const SubdivisionLeaf*> out;
    for (const SubdivisionLeaf& l : leaves) {
        if (l.status == LeafStatus::kAccepted) out.push_back(&l);
    }
    return out;
}

namespace {

/// Scaled corner comparison: positions at the common finest level, then level.
bool leaf_before(const SubdivisionLeaf& a, const SubdivisionLeaf& b, int finest) {
    for (int i = 0; i < a.cube.dim(); ++i) {
        const std::int64_t pa = a.cube.corner[static_cast<std::size_t>(i)]
                                << (finest - a.cube.level);
        const std::int64_t pb = b.cube.corner[static_cast<std::size_t>(i)]
                                << (finest - b.cube.level);
        if (pa != pb) return pa < pb;
    }
    return a.cube.level < b.cube.level;
}

}  // namespace

SubdivisionTree adaptive_subdivide(const BoxCover& cover, int max_level) {
    if (max_level < 0 || max_level > 62) {
        throw std::invalid_argument("adaptive_subdivide: max_level out of [0, 62]");
    }
    SubdivisionTree tree;
    tree.dim = cover.dim();
    tree.max_level = max_level;

    std::deque<DyadicCube> queue;
    DyadicCube root;
    root.level = 0;
    root.corner.assign(static_cast<std::size_t>(cover.dim()), 0);
    queue.push_back(std::move(root));

    while (!queue.empty()) {
        DyadicCube cube = std::move(queue.front());
        queue.pop_front();
        const RationalBox extent = cube.extent();
        const std::string* fitted = nullptr;
        for (const CoverMember& m : cover.members()) {
            if (m.region.contains_box(extent)) {
                fitted = &m.label;
                break;
            }
        }
        if (fitted) {
            tree.leaves.push_back(SubdivisionLeaf{std::move(cube), LeafStatus::kAccepted, *fitted});
        } else if (cube.level >= max_level) {
            tree.leaves.push_back(SubdivisionLeaf{std::move(cube), LeafStatus::kRefused, {}});
        } else {
            for (DyadicCube& child : cube.children()) queue.push_back(std::move(child));
        }
    }

    int finest = 0;
    for (const SubdivisionLeaf& l : tree.leaves) finest = std::max(finest, l.cube.level);
    std::sort(tree.leaves.begin(), tree.leaves.end(),
              [finest](const SubdivisionLeaf& a, const SubdivisionLeaf& b) {
                  return leaf_before(a, b, finest);
              });
    return tree;
}

WellFoundedReport well_founded_check(const SubdivisionTree& tree) {
    WellFoundedReport report;
    report.is_finite = !tree.has_refused();
    for (const SubdivisionLeaf& l : tree.leaves) {
        report.max_depth = std::max(report.max_depth, l.cube.level);
    }
    return report;
}

ComplexColourStats complex_colour_stats(const SubdivisionTree& tree, const BoxCover& cover) {
    if (tree.has_refused()) {
        throw std::invalid_argument("complex_colour_stats: tree has refused leaves");
    }
    int finest = 0;
    for (const SubdivisionLeaf& l : tree.leaves) finest = std::max(finest, l.cube.level);

    // Vertices keyed by position scaled to the finest level.
    std::map<std::vector<std::int64_t>, int> vertex_colour;
    ComplexColourStats stats;
    const int dim = tree.dim;
    std::vector<Rat> point(static_cast<std::size_t>(dim));

    const auto colour_of_vertex = [&](const std::vector<std::int64_t>& scaled) {
        auto it = vertex_colour.find(scaled);
        if (it != vertex_colour.end()) return it->second;
        for (int i = 0; i < dim; ++i) {
            point[static_cast<std::size_t>(i)] =
                rat(static_cast<long>(scaled[static_cast<std::size_t>(i)]), 1L << finest);
        }
        int best = -1;
        for (int m = 0; m < cover.member_count(); ++m) {
            if (!cover.member(m).region.contains(point)) continue;
            if (best < 0 || cover.member(m).label < cover.member(best).label) best = m;
        }
        if (best < 0) {
            throw std::invalid_argument("complex_colour_stats: uncovered vertex");
        }
        vertex_colour.emplace(scaled, best);
        return best;
    };

    for (const SubdivisionLeaf& l : tree.leaves) {
        std::vector<int> colours;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << dim); ++bits) {
            std::vector<std::int64_t> scaled(static_cast<std::size_t>(dim));
            for (int i = 0; i < dim; ++i) {
                scaled[static_cast<std::size_t>(i)] =
                    (l.cube.corner[static_cast<std::size_t>(i)] + ((bits >> i) & 1))
                    << (finest - l.cube.level);
            }
            colours.push_back(colour_of_vertex(scaled));
        }
        std::sort(colours.begin(), colours.end());
        colours.erase(std::unique(colours.begin(), colours.end()), colours.end());
        stats.per_leaf_counts.push_back(static_cast<int>(colours.size()));
    }
    stats.vertex_count = vertex_colour.size();
    for (int c : stats.per_leaf_counts) {
        stats.max_count = std::max(stats.max_count, c);
        ++stats.histogram[c];
    }
    return stats;
}

}  // namespace sperner
