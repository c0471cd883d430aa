#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sperner/index.hpp"

namespace sperner {

/// Shape of a grid [n]^N plus lexicographic ranking. Rank 0 is (0,...,0),
/// coordinate 0 is the most significant digit, so rank order equals the
/// lexicographic order used everywhere for tie-breaking.
class GridShape {
public:
    GridShape(int dim, int bound);

    int dim() const { return dim_; }
    int bound() const { return bound_; }
    std::uint64_t point_count() const { return count_; }

    std::uint64_t rank(const Index& idx) const;
    Index unrank(std::uint64_t r) const;

    /// In-place lexicographic successor; returns false after the last point.
    bool next(std::vector<int>& coords) const;

    bool matches(const Index& idx) const {
        return idx.dim() == dim_ && idx.bound() == bound_;
    }

    bool operator==(const GridShape& other) const = default;

private:
    int dim_;
    int bound_;
    std::uint64_t count_;
    std::vector<std::uint64_t> place_;  // place_[i] = (n+1)^(N-1-i)
};

/// A decidable subset of [n]^N, stored as a dense bitset over
/// lexicographic ranks.
class GridSet {
public:
    explicit GridSet(GridShape shape);
    GridSet(GridShape shape, const std::vector<Index>& points);
    /// Materializes a predicate over the whole grid.
    GridSet(GridShape shape, const std::function<bool(const Index&)>& predicate);

    const GridShape& shape() const { return shape_; }
    bool contains(const Index& idx) const;
    bool contains_rank(std::uint64_t r) const { return test(r); }
    void insert(const Index& idx);
    void insert_rank(std::uint64_t r);

    std::uint64_t size() const;
    bool empty() const { return size() == 0; }

    /// Members in lexicographic order.
    std::vector<Index> points() const;

    /// Largest pairwise sup-distance between members (0 for singletons).
    /// Computed per axis from coordinate extremes. Throws on empty sets.
    int sup_diameter() const;

    bool operator==(const GridSet& other) const = default;

private:
    bool test(std::uint64_t r) const {
        return (bits_[r >> 6] >> (r & 63)) & 1u;
    }

    GridShape shape_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace sperner
