#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace sperner {

/// A point of the truncated grid [n]^N: N coordinates, each in [0, n].
/// Carries its own dimension and bound so mismatched operands are
/// rejected instead of silently recycled.
class Index {
public:
    Index(int dim, int bound);
    Index(int bound, std::vector<int> coords);

    int dim() const { return static_cast<int>(coords_.size()); }
    int bound() const { return bound_; }
    int operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& coords() const { return coords_; }

    void set(int i, int value);

    bool same_shape(const Index& other) const {
        return bound_ == other.bound_ && coords_.size() == other.coords_.size();
    }

    /// Number of coordinates equal to zero.
    int zero_count() const;

    bool operator==(const Index& other) const {
        return bound_ == other.bound_ && coords_ == other.coords_;
    }
    /// Lexicographic order on coordinates; shapes must match.
    std::strong_ordering operator<=>(const Index& other) const;

    /// Text form `n=<bound> N=<dim> : c0,c1,...`.
    std::string to_string() const;

private:
    int bound_;
    std::vector<int> coords_;
};

/// A subset of the coordinate axes {0, ..., N-1}. Dimension capped at 64.
class CoordSet {
public:
    explicit CoordSet(int dim);
    CoordSet(int dim, const std::vector<int>& members);

    static CoordSet full(int dim);
    static CoordSet empty(int dim) { return CoordSet(dim); }

    int dim() const { return dim_; }
    bool contains(int i) const { return (mask_ >> i) & 1u; }
    void add(int i);
    void remove(int i);
    int size() const;
    bool is_empty() const { return mask_ == 0; }
    bool is_full() const;
    std::uint64_t mask() const { return mask_; }

    CoordSet complement() const;
    bool subset_of(const CoordSet& other) const;
    CoordSet unite(const CoordSet& other) const;

    /// Members in increasing order.
    std::vector<int> members() const;

    bool operator==(const CoordSet& other) const = default;

private:
    int dim_;
    std::uint64_t mask_ = 0;
};

/// A function chi with |chi(i)| <= k, supported on a coordinate set.
/// Elements of the combinatorial ball B(sigma, A, k) are exactly the
/// points sigma + chi for such chi (values kept inside [0, n]).
class AKFunction {
public:
    AKFunction(int radius, std::vector<int> values, CoordSet support);

    int dim() const { return static_cast<int>(values_.size()); }
    int radius() const { return radius_; }
    int operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
    const CoordSet& support() const { return support_; }

    /// sigma + chi. Throws if any coordinate leaves [0, n].
    Index apply(const Index& sigma) const;

private:
    int radius_;
    std::vector<int> values_;
    CoordSet support_;
};

}  // namespace sperner
