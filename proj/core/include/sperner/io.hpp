#pragma once

#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>

#include "sperner/boxes.hpp"
#include "sperner/chains.hpp"
#include "sperner/colouring.hpp"
#include "sperner/simplicial.hpp"
#include "sperner/subdivision.hpp"

namespace sperner {

/// Parse failure with the 1-based line it happened on.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Colouring file: header `cubical n=<n> N=<N>`, then one line per grid
/// point in lexicographic order: `c0,c1,...,cN-1 -> colourId`.
Colouring parse_colouring(std::istream& in);
Colouring parse_colouring_file(const std::string& path);
std::string write_colouring(const Colouring& phi);

/// Simplicial labeling file: header `simplicial d=<d> m=<m>`, then one line
/// per barycentric vertex in lexicographic order: `k0,...,kd -> label`.
struct OwnedSimplicialColouring {
    std::unique_ptr<SimplicialComplexK> complex;
    SimplicialColouring colouring;  // points into *complex
};
OwnedSimplicialColouring parse_simplicial_colouring(std::istream& in);
std::string write_simplicial_colouring(const SimplicialColouring& phi);

/// Cover file: header `cover N=<N>`, then per member a `member <label>`
/// line followed by boxes, each box being N lines
/// `axis_<i> lo <rational> <open|closed> hi <rational> <open|closed>`.
BoxCover parse_cover(std::istream& in);
BoxCover parse_cover_file(const std::string& path);
std::string write_cover(const BoxCover& cover);

/// Index text form `n=<n> N=<N> : c0,c1,...`.
Index parse_index(const std::string& text);

/// Subdivision tree export: JSON lines, one record per leaf with level,
/// corner, status and fitted member label.
std::string write_tree_jsonl(const SubdivisionTree& tree);

/// Nerve poset export: JSON adjacency, each element with its member labels
/// and the ids of its facets.
std::string write_poset_json(const NervePoset& poset);

}  // namespace sperner
