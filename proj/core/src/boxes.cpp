#include "sperner/boxes.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sperner {

RationalBox::RationalBox(std::vector<AxisInterval> axes) : axes_(std::move(axes)) {
    if (axes_.empty()) throw std::invalid_argument("RationalBox: dim must be >= 1");
    for (const AxisInterval& a : axes_) {
        if (a.lo > a.hi) throw std::invalid_argument("RationalBox: lo > hi");
    }
}

RationalBox RationalBox::closed_cube(int dim, const Rat& lo, const Rat& hi) {
    std::vector<AxisInterval> axes(static_cast<std::size_t>(dim), AxisInterval{lo, hi, false, false});
    return RationalBox(std::move(axes));
}

bool RationalBox::empty() const {
    for (const AxisInterval& a : axes_) {
        if (a.empty()) return true;
    }
    return false;
}

bool RationalBox::contains(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != dim()) {
        throw std::invalid_argument("RationalBox: point dim mismatch");
    }
    for (int i = 0; i < dim(); ++i) {
        if (!axes_[static_cast<std::size_t>(i)].contains(point[static_cast<std::size_t>(i)])) return false;
    }
    return true;
}

std::optional<RationalBox> RationalBox::intersect(const RationalBox& other) const {
    if (dim() != other.dim()) throw std::invalid_argument("RationalBox: dim mismatch");
    std::vector<AxisInterval> axes;
    axes.reserve(static_cast<std::size_t>(dim()));
    for (int i = 0; i < dim(); ++i) {
        const AxisInterval& a = axis(i);
        const AxisInterval& b = other.axis(i);
        AxisInterval out;
        if (a.lo > b.lo || (a.lo == b.lo && a.lo_open)) {
            out.lo = a.lo;
            out.lo_open = a.lo_open || (a.lo == b.lo && b.lo_open);
        } else {
            out.lo = b.lo;
            out.lo_open = b.lo_open || (a.lo == b.lo && a.lo_open);
        }
        if (a.hi < b.hi || (a.hi == b.hi && a.hi_open)) {
            out.hi = a.hi;
            out.hi_open = a.hi_open || (a.hi == b.hi && b.hi_open);
        } else {
            out.hi = b.hi;
            out.hi_open = b.hi_open || (a.hi == b.hi && a.hi_open);
        }
        if (out.lo > out.hi || out.empty()) return std::nullopt;
        axes.push_back(std::move(out));
    }
    return RationalBox(std::move(axes));
}

bool RationalBox::contains_box(const RationalBox& other) const {
    if (dim() != other.dim()) throw std::invalid_argument("RationalBox: dim mismatch");
    if (other.empty()) return true;
    for (int i = 0; i < dim(); ++i) {
        const AxisInterval& outer = axis(i);
        const AxisInterval& inner = other.axis(i);
        if (inner.lo < outer.lo) return false;
        if (inner.lo == outer.lo && outer.lo_open && !inner.lo_open) return false;
        if (inner.hi > outer.hi) return false;
        if (inner.hi == outer.hi && outer.hi_open && !inner.hi_open) return false;
    }
    return true;
}

Region::Region(std::vector<RationalBox> boxes) {
    for (RationalBox& b : boxes) add(std::move(b));
}

int Region::dim() const {
    if (boxes_.empty()) throw std::logic_error("Region: dim of empty region");
    return boxes_.front().dim();
}

void Region::add(RationalBox box) {
    if (box.empty()) return;
    if (!boxes_.empty() && box.dim() != dim()) {
        throw std::invalid_argument("Region: dim mismatch");
    }
    boxes_.push_back(std::move(box));
}

bool Region::contains(const std::vector<Rat>& point) const {
    for (const RationalBox& b : boxes_) {
        if (b.contains(point)) return true;
    }
    return false;
}

Region Region::intersect(const Region& other) const {
    Region out;
    for (const RationalBox& a : boxes_) {
        for (const RationalBox& b : other.boxes_) {
            if (auto meet = a.intersect(b)) out.add(std::move(*meet));
        }
    }
    return out;
}

bool Region::contains_box(const RationalBox& target) const {
    if (target.empty()) return true;
    if (boxes_.empty()) return false;
    const int dim = target.dim();

    // Per-axis candidates: target endpoints (when closed, they belong to the
    // target), member endpoints inside the target, and midpoints between
    // consecutive values. Membership in every box is constant between
    // consecutive breakpoints, so this sample set decides containment.
    std::vector<std::vector<Rat>> cands(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        const AxisInterval& t = target.axis(i);
        std::set<Rat> pts;
        if (!t.lo_open) pts.insert(t.lo);
        if (!t.hi_open) pts.insert(t.hi);
        std::set<Rat> cuts{t.lo, t.hi};
        for (const RationalBox& b : boxes_) {
            const AxisInterval& a = b.axis(i);
            if (a.lo > t.lo && a.lo < t.hi) cuts.insert(a.lo);
            if (a.hi > t.lo && a.hi < t.hi) cuts.insert(a.hi);
        }
        const Rat* prev = nullptr;
        for (const Rat& c : cuts) {
            if (prev) pts.insert((*prev + c) / 2);
            if (c > t.lo && c < t.hi) pts.insert(c);
            prev = &c;
        }
        if (pts.empty()) pts.insert(t.lo);  // degenerate axis
        cands[static_cast<std::size_t>(i)].assign(pts.begin(), pts.end());
    }

    std::vector<std::size_t> pick(static_cast<std::size_t>(dim), 0);
    std::vector<Rat> point(static_cast<std::size_t>(dim));
    for (;;) {
        for (int i = 0; i < dim; ++i) {
            point[static_cast<std::size_t>(i)] = cands[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]];
        }
        if (!contains(point)) return false;
        int i = dim - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] + 1 >= cands[static_cast<std::size_t>(i)].size()) --i;
        if (i < 0) return true;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < dim; ++j) pick[static_cast<std::size_t>(j)] = 0;
    }
}

Rat box_diameter(const Region& region) {
    if (region.empty()) throw std::invalid_argument("box_diameter: empty region");
    const int dim = region.dim();
    Rat diam = 0;
    for (int i = 0; i < dim; ++i) {
        Rat lo = region.boxes().front().axis(i).lo;
        Rat hi = region.boxes().front().axis(i).hi;
        for (const RationalBox& b : region.boxes()) {
            lo = rat_min(lo, b.axis(i).lo);
            hi = rat_max(hi, b.axis(i).hi);
        }
        diam = rat_max(diam, Rat(hi - lo));
    }
    return diam;
}

BoxCover::BoxCover(int dim, std::vector<CoverMember> members)
    : dim_(dim), members_(std::move(members)) {
    if (dim < 1) throw std::invalid_argument("BoxCover: dim must be >= 1");
    std::set<std::string> labels;
    for (const CoverMember& m : members_) {
        if (m.region.empty()) throw std::invalid_argument("BoxCover: empty member " + m.label);
        if (m.region.dim() != dim) throw std::invalid_argument("BoxCover: member dim mismatch");
        if (!labels.insert(m.label).second) {
            throw std::invalid_argument("BoxCover: duplicate label " + m.label);
        }
    }
}

std::vector<std::vector<Rat>> arrangement_candidates(const BoxCover& cover) {
    std::vector<std::vector<Rat>> cands(static_cast<std::size_t>(cover.dim()));
    for (int i = 0; i < cover.dim(); ++i) {
        std::set<Rat> cuts{Rat(0), Rat(1)};
        for (const CoverMember& m : cover.members()) {
            for (const RationalBox& b : m.region.boxes()) {
                if (b.axis(i).lo >= 0 && b.axis(i).lo <= 1) cuts.insert(b.axis(i).lo);
                if (b.axis(i).hi >= 0 && b.axis(i).hi <= 1) cuts.insert(b.axis(i).hi);
            }
        }
        std::set<Rat> pts(cuts);
        const Rat* prev = nullptr;
        for (const Rat& c : cuts) {
            if (prev) pts.insert((*prev + c) / 2);
            prev = &c;
        }
        cands[static_cast<std::size_t>(i)].assign(pts.begin(), pts.end());
    }
    return cands;
}

std::optional<std::vector<Rat>> BoxCover::find_uncovered_point() const {
    const std::vector<std::vector<Rat>> cands = arrangement_candidates(*this);
    std::vector<std::size_t> pick(static_cast<std::size_t>(dim_), 0);
    std::vector<Rat> point(static_cast<std::size_t>(dim_));
    for (;;) {
        for (int i = 0; i < dim_; ++i) {
            point[static_cast<std::size_t>(i)] = cands[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]];
        }
        bool covered = false;
        for (const CoverMember& m : members_) {
            if (m.region.contains(point)) {
                covered = true;
                break;
            }
        }
        if (!covered) return point;
        int i = dim_ - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] + 1 >= cands[static_cast<std::size_t>(i)].size()) --i;
        if (i < 0) return std::nullopt;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < dim_; ++j) pick[static_cast<std::size_t>(j)] = 0;
    }
}

std::vector<std::string> BoxCover::members_containing(const std::vector<Rat>& point) const {
    std::vector<std::string> out;
    for (const CoverMember& m : members_) {
        if (m.region.contains(point)) out.push_back(m.label);
    }
    return out;
}

}  // namespace sperner
