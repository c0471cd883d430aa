#include "sperner/chains.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "sperner/lattice.hpp"

namespace sperner {

SparseIndex::SparseIndex(int bound, int window) : bound_(bound), window_(window) {
    if (bound < 1) throw std::invalid_argument("SparseIndex: bound must be >= 1");
    if (window < 1) throw std::invalid_argument("SparseIndex: window must be >= 1");
}

SparseIndex::SparseIndex(int bound, int window, std::map<int, int> support)
    : SparseIndex(bound, window) {
    for (auto [k, v] : support) {
        if (k < 0 || k >= window) throw std::invalid_argument("SparseIndex: support key outside window");
        if (v < 1 || v > bound) throw std::invalid_argument("SparseIndex: support value out of [1, n]");
    }
    support_ = std::move(support);
}

int SparseIndex::at(int i) const {
    if (i < 0) throw std::invalid_argument("SparseIndex: negative coordinate");
    auto it = support_.find(i);
    return it == support_.end() ? 0 : it->second;
}

void SparseIndex::set(int i, int value) {
    if (i < 0 || i >= window_) throw std::invalid_argument("SparseIndex: coordinate outside window");
    if (value < 0 || value > bound_) throw std::invalid_argument("SparseIndex: value out of [0, n]");
    if (value == 0) {
        support_.erase(i);
    } else {
        support_[i] = value;
    }
}

SparseIndex SparseIndex::widened(int window) const {
    if (window < window_) throw std::invalid_argument("SparseIndex: window may only grow");
    SparseIndex out(bound_, window);
    out.support_ = support_;
    return out;
}

bool SparseIndex::extends(const SparseIndex& base) const {
    for (auto [k, v] : base.support_) {
        if (at(k) != v) return false;
    }
    return true;
}

Index SparseIndex::to_index() const {
    std::vector<int> coords(static_cast<std::size_t>(window_), 0);
    for (auto [k, v] : support_) coords[static_cast<std::size_t>(k)] = v;
    return Index(bound_, std::move(coords));
}

std::string SparseIndex::to_string() const {
    std::ostringstream out;
    out << "n=" << bound_ << " W=" << window_ << " {";
    bool first = true;
    for (auto [k, v] : support_) {
        if (!first) out << ", ";
        out << k << ":" << v;
        first = false;
    }
    out << "}";
    return out.str();
}

ColourId canonical_sparse_oracle(const SparseIndex& sigma) {
    ColourId c = 0;
    for (auto [k, v] : sigma.support()) {
        if (v == sigma.bound()) {
            if (k >= 63) throw std::invalid_argument("canonical_sparse_oracle: coordinate too large");
            c |= (ColourId{1} << k);
        }
    }
    return c;
}

SparseColouringOracle random_sparse_oracle(int bound, int window_cap, std::uint64_t seed) {
    auto backing = std::make_shared<Colouring>(
        random_sperner_colouring(window_cap, bound, seed, PaletteMode::kFree));
    return [backing, window_cap](const SparseIndex& sigma) {
        std::vector<int> coords(static_cast<std::size_t>(window_cap), 0);
        for (auto [k, v] : sigma.support()) {
            if (k >= window_cap) {
                throw std::invalid_argument("random_sparse_oracle: support outside window cap");
            }
            coords[static_cast<std::size_t>(k)] = v;
        }
        return backing->colour_of(Index(sigma.bound(), std::move(coords)));
    };
}

namespace {

/// Palette of the positive cube of sigma, evaluated through the oracle on
/// the given window.
std::vector<ColourId> sparse_cube_palette(const SparseColouringOracle& phi,
                                          const SparseIndex& sigma) {
    std::vector<ColourId> palette;
    const Index dense = sigma.to_index();
    for (const Index& v : positive_cube(dense)) {
        SparseIndex sv(sigma.bound(), sigma.window());
        for (int i = 0; i < v.dim(); ++i) {
            if (v[i] != 0) sv.set(i, v[i]);
        }
        palette.push_back(phi(sv));
    }
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    return palette;
}

struct ChainSearch {
    const SparseColouringOracle& phi;
    int bound;
    int depth;
    const WindowSchedule& schedule;
    std::uint64_t budget;
    std::uint64_t visited = 0;
    bool exhausted = false;
    std::vector<ChainLink> current;
    std::vector<ChainLink> best;

    /// Candidate extensions of `base` inside window w, lexicographic by the
    /// dense window restriction.
    void recurse(const SparseIndex& base, const std::vector<ColourId>& colours_so_far) {
        if (static_cast<int>(current.size()) > static_cast<int>(best.size())) best = current;
        if (static_cast<int>(current.size()) >= depth) return;
        if (visited >= budget) {
            exhausted = true;
            return;
        }
        const int w = schedule.window_at(static_cast<int>(current.size()));
        const SparseIndex wide = base.widened(std::max(w, base.window()));

        // Free coordinates: everything in the window off base's support.
        std::vector<int> free_coords;
        for (int i = 0; i < wide.window(); ++i) {
            if (base.support().find(i) == base.support().end()) free_coords.push_back(i);
        }
        std::vector<int> values(free_coords.size(), 0);
        for (;;) {
            if (visited >= budget) {
                exhausted = true;
                return;
            }
            ++visited;
            SparseIndex candidate = wide;
            for (std::size_t i = 0; i < free_coords.size(); ++i) {
                candidate.set(free_coords[i], values[i]);
            }
            const std::vector<ColourId> palette = sparse_cube_palette(phi, candidate);
            const bool carries_all = std::includes(palette.begin(), palette.end(),
                                                   colours_so_far.begin(), colours_so_far.end());
            if (carries_all) {
                // Least fresh colour in the palette.
                for (ColourId c : palette) {
                    if (std::binary_search(colours_so_far.begin(), colours_so_far.end(), c)) continue;
                    std::vector<ColourId> next_colours(colours_so_far);
                    next_colours.insert(
                        std::upper_bound(next_colours.begin(), next_colours.end(), c), c);
                    current.push_back(ChainLink{candidate, c});
                    recurse(candidate, next_colours);
                    current.pop_back();
                    if (static_cast<int>(best.size()) >= depth || exhausted) return;
                    break;  // deterministic: only the least fresh colour is tried
                }
            }
            // Odometer over free coordinate values.
            std::size_t i = free_coords.size();
            while (i > 0 && values[i - 1] == bound) --i;
            if (i == 0) return;
            ++values[i - 1];
            for (std::size_t j = i; j < free_coords.size(); ++j) values[j] = 0;
        }
    }
};

}  // namespace

ExtensionChainResult extension_chain_search(const SparseColouringOracle& phi, int bound,
                                            int depth, const WindowSchedule& schedule,
                                            std::uint64_t node_budget) {
    if (depth < 1) throw std::invalid_argument("extension_chain_search: depth must be >= 1");
    ChainSearch search{phi, bound, depth, schedule, node_budget, 0, false, {}, {}};
    SparseIndex origin(bound, schedule.window_at(0));
    search.recurse(origin, {});
    return ExtensionChainResult{std::move(search.best), search.exhausted, search.visited};
}

std::optional<std::string> verify_extension_chain(const SparseColouringOracle& phi,
                                                  const std::vector<ChainLink>& chain) {
    std::vector<ColourId> accumulated;
    for (std::size_t k = 0; k < chain.size(); ++k) {
        if (k > 0 && !chain[k].sigma.extends(chain[k - 1].sigma)) {
            return "link " + std::to_string(k) + " does not extend its predecessor";
        }
        if (std::find(accumulated.begin(), accumulated.end(), chain[k].colour) !=
            accumulated.end()) {
            return "colour of link " + std::to_string(k) + " repeats an earlier colour";
        }
        accumulated.push_back(chain[k].colour);
        const std::vector<ColourId> palette = sparse_cube_palette(phi, chain[k].sigma);
        for (ColourId c : accumulated) {
            if (!std::binary_search(palette.begin(), palette.end(), c)) {
                return "cube palette at link " + std::to_string(k) +
                       " misses an accumulated colour";
            }
        }
    }
    return std::nullopt;
}

NervePoset build_nerve_poset(const BoxCover& cover, int max_size, std::uint64_t element_budget) {
    if (max_size < 1) throw std::invalid_argument("build_nerve_poset: max_size must be >= 1");
    NervePoset poset;
    poset.max_size = max_size;
    for (const CoverMember& m : cover.members()) poset.ground_labels.push_back(m.label);

    // Level k: intersecting k-subsets with their realized intersections.
    std::vector<std::pair<std::vector<int>, Region>> level;
    for (int i = 0; i < cover.member_count(); ++i) {
        level.push_back({{i}, cover.member(i).region});
        poset.elements.push_back({i});
    }

    for (int size = 2; size <= max_size && !level.empty(); ++size) {
        std::vector<std::pair<std::vector<int>, Region>> next;
        for (const auto& [subset, region] : level) {
            // Extend by members past the last index; facet pruning is implied
            // because any sub-facet of an intersecting family intersects.
            for (int m = subset.back() + 1; m < cover.member_count(); ++m) {
                Region meet = region.intersect(cover.member(m).region);
                if (meet.empty()) continue;
                std::vector<int> extended(subset);
                extended.push_back(m);
                poset.elements.push_back(extended);
                if (poset.elements.size() > element_budget) {
                    poset.truncated = true;
                    poset.elements.pop_back();
                    return poset;
                }
                next.push_back({std::move(extended), std::move(meet)});
            }
        }
        level = std::move(next);
    }
    return poset;
}

int max_chain_length(const NervePoset& poset) {
    int best = 0;
    for (const std::vector<int>& element : poset.elements) {
        best = std::max(best, static_cast<int>(element.size()));
    }
    return best;
}

std::optional<std::vector<std::string>> nested_cover_chain(const BoxCover& cover, int target) {
    if (target < 1) throw std::invalid_argument("nested_cover_chain: target must be >= 1");
    if (target > cover.member_count()) return std::nullopt;
    const NervePoset poset = build_nerve_poset(cover, target);
    for (const std::vector<int>& element : poset.elements) {
        if (static_cast<int>(element.size()) == target) {
            std::vector<std::string> labels;
            for (int i : element) labels.push_back(cover.member(i).label);
            return labels;
        }
    }
    return std::nullopt;
}

}  // namespace sperner
