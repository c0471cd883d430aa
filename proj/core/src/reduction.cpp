#include "sperner/reduction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "sperner/lattice.hpp"

namespace sperner {

RationalBox grid_point_box(const Index& sigma) {
    const int n = sigma.bound();
    std::vector<AxisInterval> axes;
    axes.reserve(static_cast<std::size_t>(sigma.dim()));
    for (int i = 0; i < sigma.dim(); ++i) {
        const int v = sigma[i];
        AxisInterval a;
        if (v == 0) {
            a = {rat(0), rat(1, n), false, true};
        } else if (v == n) {
            a = {rat(n - 1, n), rat(1), true, false};
        } else {
            a = {Rat(rat(3 * v - 2, 1) / rat(3 * n, 1)), Rat(rat(3 * v + 2, 1) / rat(3 * n, 1)),
                 true, true};
        }
        axes.push_back(std::move(a));
    }
    return RationalBox(std::move(axes));
}

BoxCover colouring_to_cover(const Colouring& phi) {
    if (auto violation = check_cubical_sperner(phi)) {
        throw std::invalid_argument("colouring_to_cover: not a Sperner colouring (" +
                                    violation->first.to_string() + " / " +
                                    violation->second.to_string() + ")");
    }
    const GridShape& shape = phi.shape();
    std::map<ColourId, Region> by_colour;
    std::vector<int> coords(static_cast<std::size_t>(shape.dim()), 0);
    do {
        Index sigma(shape.bound(), coords);
        by_colour[phi.colour_of(sigma)].add(grid_point_box(sigma));
    } while (shape.next(coords));

    std::vector<CoverMember> members;
    members.reserve(by_colour.size());
    for (auto& [colour, region] : by_colour) {
        members.push_back(CoverMember{std::to_string(colour), std::move(region)});
    }
    BoxCover cover(shape.dim(), std::move(members));
    for (const CoverMember& m : cover.members()) {
        if (box_diameter(m.region) >= 1) {
            throw std::logic_error("colouring_to_cover: member " + m.label +
                                   " has diameter >= 1 despite a valid colouring");
        }
    }
    return cover;
}

GridColouring cover_to_colouring(const BoxCover& cover, int n) {
    if (n < 1) throw std::invalid_argument("cover_to_colouring: n must be >= 1");
    GridShape shape(cover.dim(), n);
    Colouring phi(shape);
    std::vector<std::string> labels;
    std::map<std::string, ColourId> ids;

    std::vector<int> coords(static_cast<std::size_t>(shape.dim()), 0);
    std::vector<Rat> point(static_cast<std::size_t>(shape.dim()));
    do {
        Index sigma(n, coords);
        for (int i = 0; i < shape.dim(); ++i) {
            point[static_cast<std::size_t>(i)] = rat(coords[static_cast<std::size_t>(i)], n);
        }
        const std::string* best = nullptr;
        for (const CoverMember& m : cover.members()) {
            if (!m.region.contains(point)) continue;
            if (!best || m.label < *best) best = &m.label;
        }
        if (!best) {
            throw std::invalid_argument("cover_to_colouring: uncovered grid point " +
                                        sigma.to_string());
        }
        auto [it, fresh] = ids.emplace(*best, static_cast<ColourId>(labels.size()));
        if (fresh) labels.push_back(*best);
        phi.set_colour(sigma, it->second);
    } while (shape.next(coords));

    return GridColouring{std::move(phi), std::move(labels)};
}

namespace {

/// Contiguous range [first, last] of candidate indices contained in the
/// axis interval; nullopt when no candidate falls inside.
std::optional<std::pair<std::size_t, std::size_t>> candidate_range(
    const std::vector<Rat>& cands, const AxisInterval& axis) {
    auto first = std::lower_bound(cands.begin(), cands.end(), axis.lo);
    if (first != cands.end() && *first == axis.lo && axis.lo_open) ++first;
    auto last = std::upper_bound(first, cands.end(), axis.hi);
    if (last != first && *(last - 1) == axis.hi && axis.hi_open) --last;
    if (first == last) return std::nullopt;
    return std::make_pair(static_cast<std::size_t>(first - cands.begin()),
                          static_cast<std::size_t>(last - cands.begin()) - 1);
}

}  // namespace

MultiplicityWitness max_multiplicity_point(const BoxCover& cover) {
    const std::vector<std::vector<Rat>> cands = arrangement_candidates(cover);
    const int dim = cover.dim();

    // Cell rank with axis 0 most significant, so rank order is the
    // lexicographic order of candidate points.
    std::vector<std::size_t> stride(static_cast<std::size_t>(dim), 1);
    std::size_t cell_count = 1;
    for (int i = dim - 1; i >= 0; --i) {
        stride[static_cast<std::size_t>(i)] = cell_count;
        cell_count *= cands[static_cast<std::size_t>(i)].size();
    }

    std::vector<int> counts(cell_count, 0);
    std::vector<std::size_t> member_cells;
    for (const CoverMember& m : cover.members()) {
        member_cells.clear();
        for (const RationalBox& box : m.region.boxes()) {
            std::vector<std::pair<std::size_t, std::size_t>> ranges;
            bool hit = true;
            for (int i = 0; i < dim && hit; ++i) {
                auto range = candidate_range(cands[static_cast<std::size_t>(i)], box.axis(i));
                if (!range) hit = false;
                else ranges.push_back(*range);
            }
            if (!hit) continue;
            std::vector<std::size_t> at(static_cast<std::size_t>(dim));
            for (int i = 0; i < dim; ++i) at[static_cast<std::size_t>(i)] = ranges[static_cast<std::size_t>(i)].first;
            for (;;) {
                std::size_t rank = 0;
                for (int i = 0; i < dim; ++i) {
                    rank += at[static_cast<std::size_t>(i)] * stride[static_cast<std::size_t>(i)];
                }
                member_cells.push_back(rank);
                int i = dim - 1;
                while (i >= 0 && at[static_cast<std::size_t>(i)] >= ranges[static_cast<std::size_t>(i)].second) --i;
                if (i < 0) break;
                ++at[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < dim; ++j) {
                    at[static_cast<std::size_t>(j)] = ranges[static_cast<std::size_t>(j)].first;
                }
            }
        }
        std::sort(member_cells.begin(), member_cells.end());
        member_cells.erase(std::unique(member_cells.begin(), member_cells.end()),
                           member_cells.end());
        for (std::size_t rank : member_cells) ++counts[rank];
    }

    const auto cell_point = [&](std::size_t rank) {
        std::vector<Rat> point(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) {
            const std::size_t at = rank / stride[static_cast<std::size_t>(i)] %
                                   cands[static_cast<std::size_t>(i)].size();
            point[static_cast<std::size_t>(i)] = cands[static_cast<std::size_t>(i)][at];
        }
        return point;
    };

    // The candidate grid meets every arrangement cell, so a zero count
    // certifies an uncovered point.
    std::size_t best = 0;
    for (std::size_t rank = 0; rank < cell_count; ++rank) {
        if (counts[rank] == 0) {
            std::string text;
            for (const Rat& c : cell_point(rank)) {
                text += (text.empty() ? "" : ",") + rat_to_string(c);
            }
            throw std::invalid_argument("max_multiplicity_point: not a cover, misses (" + text +
                                        ")");
        }
        if (counts[rank] > counts[best]) best = rank;
    }

    MultiplicityWitness out;
    out.point = cell_point(best);
    out.labels = cover.members_containing(out.point);
    out.multiplicity = counts[best];
    return out;
}

Index infimum_cube_recovery(const std::vector<Index>& sigmas) {
    if (sigmas.empty()) throw std::invalid_argument("infimum_cube_recovery: empty set");
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
        for (std::size_t j = i + 1; j < sigmas.size(); ++j) {
            if (sup_distance(sigmas[i], sigmas[j]) > 1) {
                throw std::invalid_argument(
                    "infimum_cube_recovery: pairwise sup-distance exceeds 1");
            }
        }
    }
    std::vector<int> inf(sigmas.front().coords());
    for (const Index& s : sigmas) {
        for (int i = 0; i < s.dim(); ++i) {
            inf[static_cast<std::size_t>(i)] = std::min(inf[static_cast<std::size_t>(i)], s[i]);
        }
    }
    return Index(sigmas.front().bound(), std::move(inf));
}

RichCubeWitness rich_cube_via_cover(const Colouring& phi) {
    const BoxCover cover = colouring_to_cover(phi);
    MultiplicityWitness witness = max_multiplicity_point(cover);

    // All grid indices whose box contains the witness point, in
    // lexicographic order; keep the first index of each distinct colour.
    const GridShape& shape = phi.shape();
    std::vector<Index> sigmas;
    std::set<ColourId> colours;
    std::vector<int> coords(static_cast<std::size_t>(shape.dim()), 0);
    do {
        Index sigma(shape.bound(), coords);
        if (grid_point_box(sigma).contains(witness.point)) {
            const ColourId c = phi.colour_of(sigma);
            if (colours.insert(c).second) sigmas.push_back(sigma);
        }
    } while (shape.next(coords));

    RichCubeWitness out{infimum_cube_recovery(sigmas), std::move(colours), std::move(witness)};
    return out;
}

GridCover grid_image(const BoxCover& cover, int n) {
    if (n < 1) throw std::invalid_argument("grid_image: n must be >= 1");
    const int dim = cover.dim();
    GridShape shape(dim, n);
    GridCover out{shape, {}, {}};
    for (const CoverMember& m : cover.members()) {
        GridSet image(shape);
        for (const RationalBox& box : m.region.boxes()) {
            // Grid values j/n inside an interval form a contiguous index range.
            std::vector<std::pair<int, int>> ranges;
            bool hit = true;
            for (int i = 0; i < dim && hit; ++i) {
                int lo = 0;
                while (lo <= n && !box.axis(i).contains(rat(lo, n))) ++lo;
                int hi = n;
                while (hi >= lo && !box.axis(i).contains(rat(hi, n))) --hi;
                if (lo > hi) hit = false;
                else ranges.push_back({lo, hi});
            }
            if (!hit) continue;
            std::vector<int> at(static_cast<std::size_t>(dim));
            for (int i = 0; i < dim; ++i) at[static_cast<std::size_t>(i)] = ranges[static_cast<std::size_t>(i)].first;
            for (;;) {
                image.insert(Index(n, at));
                int i = dim - 1;
                while (i >= 0 && at[static_cast<std::size_t>(i)] >= ranges[static_cast<std::size_t>(i)].second) --i;
                if (i < 0) break;
                ++at[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < dim; ++j) {
                    at[static_cast<std::size_t>(j)] = ranges[static_cast<std::size_t>(j)].first;
                }
            }
        }
        out.members.push_back(std::move(image));
        out.labels.push_back(m.label);
    }
    return out;
}

}  // namespace sperner
