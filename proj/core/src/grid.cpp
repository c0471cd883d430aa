#include "sperner/grid.hpp"

#include <bit>
#include <limits>
#include <stdexcept>

namespace sperner {

GridShape::GridShape(int dim, int bound) : dim_(dim), bound_(bound) {
    if (dim < 1) throw std::invalid_argument("GridShape: dim must be >= 1");
    if (bound < 1) throw std::invalid_argument("GridShape: bound must be >= 1");
    const std::uint64_t base = static_cast<std::uint64_t>(bound) + 1;
    count_ = 1;
    place_.assign(static_cast<std::size_t>(dim), 1);
    for (int i = dim - 1; i >= 0; --i) {
        place_[static_cast<std::size_t>(i)] = count_;
        if (count_ > (std::uint64_t{1} << 48) / base) {
            throw std::invalid_argument("GridShape: grid too large to enumerate");
        }
        count_ *= base;
    }
}

std::uint64_t GridShape::rank(const Index& idx) const {
    if (!matches(idx)) throw std::invalid_argument("GridShape: index shape mismatch");
    std::uint64_t r = 0;
    for (int i = 0; i < dim_; ++i) {
        r += static_cast<std::uint64_t>(idx[i]) * place_[static_cast<std::size_t>(i)];
    }
    return r;
}

Index GridShape::unrank(std::uint64_t r) const {
    if (r >= count_) throw std::out_of_range("GridShape: rank out of range");
    std::vector<int> coords(static_cast<std::size_t>(dim_));
    for (int i = 0; i < dim_; ++i) {
        coords[static_cast<std::size_t>(i)] = static_cast<int>(r / place_[static_cast<std::size_t>(i)]);
        r %= place_[static_cast<std::size_t>(i)];
    }
    return Index(bound_, std::move(coords));
}

bool GridShape::next(std::vector<int>& coords) const {
    for (int i = dim_ - 1; i >= 0; --i) {
        if (coords[static_cast<std::size_t>(i)] < bound_) {
            ++coords[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < dim_; ++j) coords[static_cast<std::size_t>(j)] = 0;
            return true;
        }
    }
    return false;
}

GridSet::GridSet(GridShape shape)
    : shape_(shape), bits_((shape.point_count() + 63) / 64, 0) {}

GridSet::GridSet(GridShape shape, const std::vector<Index>& points) : GridSet(shape) {
    for (const Index& p : points) insert(p);
}

GridSet::GridSet(GridShape shape, const std::function<bool(const Index&)>& predicate)
    : GridSet(shape) {
    std::vector<int> coords(static_cast<std::size_t>(shape.dim()), 0);
    std::uint64_t r = 0;
    do {
        if (predicate(Index(shape.bound(), coords))) insert_rank(r);
        ++r;
    } while (shape_.next(coords));
}

bool GridSet::contains(const Index& idx) const { return test(shape_.rank(idx)); }

void GridSet::insert(const Index& idx) { insert_rank(shape_.rank(idx)); }

void GridSet::insert_rank(std::uint64_t r) {
    if (r >= shape_.point_count()) throw std::out_of_range("GridSet: rank out of range");
    bits_[r >> 6] |= (std::uint64_t{1} << (r & 63));
}

std::uint64_t GridSet::size() const {
    std::uint64_t total = 0;
    for (std::uint64_t word : bits_) total += static_cast<std::uint64_t>(std::popcount(word));
    return total;
}

std::vector<Index> GridSet::points() const {
    std::vector<Index> out;
    for (std::uint64_t r = 0; r < shape_.point_count(); ++r) {
        if (test(r)) out.push_back(shape_.unrank(r));
    }
    return out;
}

int GridSet::sup_diameter() const {
    if (empty()) throw std::invalid_argument("GridSet: diameter of empty set");
    std::vector<int> lo(static_cast<std::size_t>(shape_.dim()), std::numeric_limits<int>::max());
    std::vector<int> hi(static_cast<std::size_t>(shape_.dim()), 0);
    for (std::uint64_t r = 0; r < shape_.point_count(); ++r) {
        if (!test(r)) continue;
        Index p = shape_.unrank(r);
        for (int i = 0; i < shape_.dim(); ++i) {
            lo[static_cast<std::size_t>(i)] = std::min(lo[static_cast<std::size_t>(i)], p[i]);
            hi[static_cast<std::size_t>(i)] = std::max(hi[static_cast<std::size_t>(i)], p[i]);
        }
    }
    int diam = 0;
    for (int i = 0; i < shape_.dim(); ++i) {
        diam = std::max(diam, hi[static_cast<std::size_t>(i)] - lo[static_cast<std::size_t>(i)]);
    }
    return diam;
}

}  // namespace sperner
