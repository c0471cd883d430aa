#include "sperner/index.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace sperner {

Index::Index(int dim, int bound) : bound_(bound), coords_(static_cast<std::size_t>(dim), 0) {
    if (dim < 1) throw std::invalid_argument("Index: dim must be >= 1");
    if (bound < 1) throw std::invalid_argument("Index: bound must be >= 1");
}

Index::Index(int bound, std::vector<int> coords) : bound_(bound), coords_(std::move(coords)) {
    if (coords_.empty()) throw std::invalid_argument("Index: dim must be >= 1");
    if (bound < 1) throw std::invalid_argument("Index: bound must be >= 1");
    for (int c : coords_) {
        if (c < 0 || c > bound_) throw std::invalid_argument("Index: coordinate out of [0, n]");
    }
}

void Index::set(int i, int value) {
    if (value < 0 || value > bound_) throw std::invalid_argument("Index: coordinate out of [0, n]");
    coords_[static_cast<std::size_t>(i)] = value;
}

int Index::zero_count() const {
    int z = 0;
    for (int c : coords_) z += (c == 0);
    return z;
}

std::strong_ordering Index::operator<=>(const Index& other) const {
    if (!same_shape(other)) throw std::invalid_argument("Index: shape mismatch in comparison");
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] != other.coords_[i]) return coords_[i] <=> other.coords_[i];
    }
    return std::strong_ordering::equal;
}

std::string Index::to_string() const {
    std::ostringstream out;
    out << "n=" << bound_ << " N=" << dim() << " : ";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out << ',';
        out << coords_[i];
    }
    return out.str();
}

CoordSet::CoordSet(int dim) : dim_(dim) {
    if (dim < 1 || dim > 64) throw std::invalid_argument("CoordSet: dim must be in [1, 64]");
}

CoordSet::CoordSet(int dim, const std::vector<int>& members) : CoordSet(dim) {
    for (int i : members) add(i);
}

CoordSet CoordSet::full(int dim) {
    CoordSet s(dim);
    s.mask_ = (dim == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << dim) - 1);
    return s;
}

void CoordSet::add(int i) {
    if (i < 0 || i >= dim_) throw std::invalid_argument("CoordSet: member out of range");
    mask_ |= (std::uint64_t{1} << i);
}

void CoordSet::remove(int i) {
    if (i < 0 || i >= dim_) throw std::invalid_argument("CoordSet: member out of range");
    mask_ &= ~(std::uint64_t{1} << i);
}

int CoordSet::size() const { return std::popcount(mask_); }

bool CoordSet::is_full() const { return mask_ == full(dim_).mask_; }

CoordSet CoordSet::complement() const {
    CoordSet s(dim_);
    s.mask_ = full(dim_).mask_ & ~mask_;
    return s;
}

bool CoordSet::subset_of(const CoordSet& other) const {
    if (dim_ != other.dim_) throw std::invalid_argument("CoordSet: dim mismatch");
    return (mask_ & ~other.mask_) == 0;
}

CoordSet CoordSet::unite(const CoordSet& other) const {
    if (dim_ != other.dim_) throw std::invalid_argument("CoordSet: dim mismatch");
    CoordSet s(dim_);
    s.mask_ = mask_ | other.mask_;
    return s;
}

std::vector<int> CoordSet::members() const {
    std::vector<int> out;
    for (int i = 0; i < dim_; ++i) {
        if (contains(i)) out.push_back(i);
    }
    return out;
}

AKFunction::AKFunction(int radius, std::vector<int> values, CoordSet support)
    : radius_(radius), values_(std::move(values)), support_(support) {
    if (radius < 0) throw std::invalid_argument("AKFunction: radius must be >= 0");
    if (static_cast<int>(values_.size()) != support_.dim()) {
        throw std::invalid_argument("AKFunction: dim mismatch");
    }
    for (int i = 0; i < support_.dim(); ++i) {
        int v = values_[static_cast<std::size_t>(i)];
        if (v < -radius || v > radius) throw std::invalid_argument("AKFunction: value out of [-k, k]");
        if (v != 0 && !support_.contains(i)) {
            throw std::invalid_argument("AKFunction: nonzero value off support");
        }
    }
}

Index AKFunction::apply(const Index& sigma) const {
    if (sigma.dim() != dim()) throw std::invalid_argument("AKFunction: dim mismatch");
    std::vector<int> out(sigma.coords());
    for (int i = 0; i < dim(); ++i) {
        out[static_cast<std::size_t>(i)] += values_[static_cast<std::size_t>(i)];
        if (out[static_cast<std::size_t>(i)] < 0 || out[static_cast<std::size_t>(i)] > sigma.bound()) {
            throw std::out_of_range("AKFunction: sigma + chi leaves [0, n]");
        }
    }
    return Index(sigma.bound(), std::move(out));
}

}  // namespace sperner
