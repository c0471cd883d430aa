#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sperner/rational.hpp"

namespace sperner {

/// One axis of a box: an interval inside [0, 1] with independent openness
/// flags at both ends. lo == hi with an open flag denotes emptiness.
struct AxisInterval {
    Rat lo;
    Rat hi;
    bool lo_open = false;
    bool hi_open = false;

    bool empty() const { return lo > hi || (lo == hi && (lo_open || hi_open)); }
    bool contains(const Rat& x) const {
        if (x < lo || x > hi) return false;
        if (x == lo && lo_open) return false;
        if (x == hi && hi_open) return false;
        return true;
    }
};

/// An axis-aligned box with exact rational endpoints.
class RationalBox {
public:
    explicit RationalBox(std::vector<AxisInterval> axes);
    static RationalBox closed_cube(int dim, const Rat& lo, const Rat& hi);

    int dim() const { return static_cast<int>(axes_.size()); }
    const AxisInterval& axis(int i) const { return axes_[static_cast<std::size_t>(i)]; }

    bool empty() const;
    bool contains(const std::vector<Rat>& point) const;

    /// Intersection; nullopt when empty.
    std::optional<RationalBox> intersect(const RationalBox& other) const;

    /// True iff the other box's point set is contained in this one.
    bool contains_box(const RationalBox& other) const;

private:
    std::vector<AxisInterval> axes_;
};

/// A finite union of boxes (all the same dimension, none empty).
class Region {
public:
    Region() = default;
    explicit Region(std::vector<RationalBox> boxes);

    int dim() const;
    bool empty() const { return boxes_.empty(); }
    const std::vector<RationalBox>& boxes() const { return boxes_; }
    void add(RationalBox box);

    bool contains(const std::vector<Rat>& point) const;

    /// Pairwise rational box intersection across the union terms; empty
    /// region when nothing survives.
    Region intersect(const Region& other) const;

    /// Exact containment of a box in the union: the box is cut along every
    /// member endpoint and each arrangement sample must land in some member.
    bool contains_box(const RationalBox& target) const;

private:
    std::vector<RationalBox> boxes_;
};

/// Sup-metric diameter of a region: the largest per-axis span of the union.
/// Openness does not shrink the supremum. Throws on empty regions.
Rat box_diameter(const Region& region);

struct CoverMember {
    std::string label;
    Region region;
};

/// A labelled family of regions over [0, 1]^N.
class BoxCover {
public:
    BoxCover(int dim, std::vector<CoverMember> members);

    int dim() const { return dim_; }
    int member_count() const { return static_cast<int>(members_.size()); }
    const CoverMember& member(int i) const { return members_[static_cast<std::size_t>(i)]; }
    const std::vector<CoverMember>& members() const { return members_; }

    /// Exact verification that the union contains [0, 1]^N, by arrangement
    /// sweep over endpoint/midpoint candidates. Returns an uncovered sample
    /// point if one exists.
    std::optional<std::vector<Rat>> find_uncovered_point() const;
    bool covers_unit_cube() const { return !find_uncovered_point().has_value(); }

    /// Labels of the members containing the point, in member order.
    std::vector<std::string> members_containing(const std::vector<Rat>& point) const;

private:
    int dim_;
    std::vector<CoverMember> members_;
};

/// Per-axis arrangement candidates for a family of boxes: 0, 1, every
/// endpoint, and the midpoints of consecutive distinct values. Multiplicity
/// is constant on arrangement cells, and this grid meets every cell.
std::vector<std::vector<Rat>> arrangement_candidates(const BoxCover& cover);

}  // namespace sperner
