#include "sperner/io.hpp"

#include <map>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sperner {

namespace {

using nlohmann::json;

/// Reads the next nonempty line; returns false at end of stream.
bool next_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        if (start > 0) line = line.substr(start);
        return true;
    }
    return false;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int parse_int(const std::string& text, int lineno, const std::string& what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ParseError(lineno, "bad " + what + ": '" + text + "'");
    }
}

/// Parses `key=<int>` returning the int.
int parse_keyed_int(const std::string& token, const std::string& key, int lineno) {
    const std::string prefix = key + "=";
    if (token.rfind(prefix, 0) != 0) {
        throw ParseError(lineno, "expected " + key + "=<int>, got '" + token + "'");
    }
    return parse_int(token.substr(prefix.size()), lineno, key);
}

std::vector<int> parse_coords(const std::string& text, int lineno) {
    std::vector<int> coords;
    for (const std::string& part : split(text, ',')) {
        coords.push_back(parse_int(part, lineno, "coordinate"));
    }
    return coords;
}

}  // namespace

Colouring parse_colouring(std::istream& in) {
    int lineno = 0;
    std::string line;
    if (!next_line(in, line, lineno)) throw ParseError(1, "missing header");
    std::istringstream header(line);
    std::string kind, ntok, dtok;
    header >> kind >> ntok >> dtok;
    if (kind != "cubical") throw ParseError(lineno, "expected 'cubical' header");
    const int n = parse_keyed_int(ntok, "n", lineno);
    const int dim = parse_keyed_int(dtok, "N", lineno);
    GridShape shape(dim, n);
    Colouring phi(shape);

    std::vector<bool> seen(shape.point_count(), false);
    while (next_line(in, line, lineno)) {
        const std::size_t arrow = line.find("->");
        if (arrow == std::string::npos) throw ParseError(lineno, "missing '->'");
        std::string lhs = line.substr(0, arrow);
        std::string rhs = line.substr(arrow + 2);
        if (!lhs.empty() && lhs.back() == ' ') lhs.pop_back();
        std::size_t rstart = rhs.find_first_not_of(" \t");
        rhs = (rstart == std::string::npos) ? "" : rhs.substr(rstart);

        std::vector<int> coords = parse_coords(lhs, lineno);
        if (static_cast<int>(coords.size()) != dim) {
            throw ParseError(lineno, "expected " + std::to_string(dim) + " coordinates");
        }
        for (int c : coords) {
            if (c < 0 || c > n) throw ParseError(lineno, "coordinate out of [0, n]");
        }
        ColourId colour = 0;
        try {
            colour = std::stoull(rhs);
        } catch (const std::exception&) {
            throw ParseError(lineno, "bad colour id: '" + rhs + "'");
        }
        Index idx(n, coords);
        const std::uint64_t r = shape.rank(idx);
        if (seen[r]) throw ParseError(lineno, "duplicate grid point " + idx.to_string());
        seen[r] = true;
        phi.set_colour_rank(r, colour);
    }
    for (std::uint64_t r = 0; r < shape.point_count(); ++r) {
        if (!seen[r]) {
            throw ParseError(lineno + 1,
                             "colouring not total, missing " + shape.unrank(r).to_string());
        }
    }
    return phi;
}

Colouring parse_colouring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_colouring(in);
}

std::string write_colouring(const Colouring& phi) {
    std::ostringstream out;
    const GridShape& shape = phi.shape();
    out << "cubical n=" << shape.bound() << " N=" << shape.dim() << "\n";
    for (std::uint64_t r = 0; r < shape.point_count(); ++r) {
        const Index idx = shape.unrank(r);
        for (int i = 0; i < shape.dim(); ++i) {
            if (i) out << ',';
            out << idx[i];
        }
        out << " -> " << phi.colour_of_rank(r) << "\n";
    }
    return out.str();
}

OwnedSimplicialColouring parse_simplicial_colouring(std::istream& in) {
    int lineno = 0;
    std::string line;
    if (!next_line(in, line, lineno)) throw ParseError(1, "missing header");
    std::istringstream header(line);
    std::string kind, dtok, mtok;
    header >> kind >> dtok >> mtok;
    if (kind != "simplicial") throw ParseError(lineno, "expected 'simplicial' header");
    const int d = parse_keyed_int(dtok, "d", lineno);
    const int m = parse_keyed_int(mtok, "m", lineno);

    OwnedSimplicialColouring out;
    out.complex = std::make_unique<SimplicialComplexK>(d, m);
    out.colouring.complex = out.complex.get();
    out.colouring.label_of.assign(static_cast<std::size_t>(out.complex->vertex_count()), -1);

    while (next_line(in, line, lineno)) {
        const std::size_t arrow = line.find("->");
        if (arrow == std::string::npos) throw ParseError(lineno, "missing '->'");
        std::string lhs = line.substr(0, arrow);
        if (!lhs.empty() && lhs.back() == ' ') lhs.pop_back();
        std::vector<int> bary = parse_coords(lhs, lineno);
        if (static_cast<int>(bary.size()) != d + 1) {
            throw ParseError(lineno, "expected " + std::to_string(d + 1) + " barycentric entries");
        }
        int vid = 0;
        try {
            vid = out.complex->vertex_id(bary);
        } catch (const std::exception&) {
            throw ParseError(lineno, "not a scale-" + std::to_string(m) + " lattice vertex");
        }
        const int label = parse_int(line.substr(arrow + 2).erase(0, line.substr(arrow + 2).find_first_not_of(" \t")),
                                    lineno, "label");
        if (out.colouring.label_of[static_cast<std::size_t>(vid)] != -1) {
            throw ParseError(lineno, "duplicate vertex");
        }
        out.colouring.label_of[static_cast<std::size_t>(vid)] = label;
    }
    for (int v = 0; v < out.complex->vertex_count(); ++v) {
        if (out.colouring.label_of[static_cast<std::size_t>(v)] == -1) {
            throw ParseError(lineno + 1, "labeling not total, vertex " + std::to_string(v) + " missing");
        }
    }
    return out;
}

std::string write_simplicial_colouring(const SimplicialColouring& phi) {
    std::ostringstream out;
    const SimplicialComplexK& k = *phi.complex;
    out << "simplicial d=" << k.simplex_dim() << " m=" << k.scale() << "\n";
    for (int v = 0; v < k.vertex_count(); ++v) {
        const std::vector<int>& bary = k.vertex(v);
        for (std::size_t i = 0; i < bary.size(); ++i) {
            if (i) out << ',';
            out << bary[i];
        }
        out << " -> " << phi.label(v) << "\n";
    }
    return out.str();
}

BoxCover parse_cover(std::istream& in) {
    int lineno = 0;
    std::string line;
    if (!next_line(in, line, lineno)) throw ParseError(1, "missing header");
    std::istringstream header(line);
    std::string kind, dtok;
    header >> kind >> dtok;
    if (kind != "cover") throw ParseError(lineno, "expected 'cover' header");
    const int dim = parse_keyed_int(dtok, "N", lineno);

    std::vector<CoverMember> members;
    std::string label;
    Region region;
    std::vector<AxisInterval> axes;
    bool in_member = false;

    const auto flush_box = [&](int at_line) {
        if (axes.empty()) return;
        if (static_cast<int>(axes.size()) != dim) {
            throw ParseError(at_line, "box has " + std::to_string(axes.size()) + " axes, want " +
                                          std::to_string(dim));
        }
        region.add(RationalBox(axes));
        axes.clear();
    };
    const auto flush_member = [&](int at_line) {
        if (!in_member) return;
        flush_box(at_line);
        if (region.empty()) throw ParseError(at_line, "member '" + label + "' has no boxes");
        members.push_back(CoverMember{label, std::move(region)});
        region = Region();
    };

    while (next_line(in, line, lineno)) {
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head == "member") {
            flush_member(lineno);
            std::string name;
            ls >> name;
            if (name.empty()) throw ParseError(lineno, "member without label");
            label = name;
            in_member = true;
        } else if (head.rfind("axis_", 0) == 0) {
            if (!in_member) throw ParseError(lineno, "axis line before any member");
            const int axis = parse_int(head.substr(5), lineno, "axis number");
            if (axis != static_cast<int>(axes.size())) {
                if (axis == 0) {
                    flush_box(lineno);
                } else {
                    throw ParseError(lineno, "axes out of order: got axis_" + std::to_string(axis) +
                                                 ", expected axis_" +
                                                 std::to_string(axes.size()));
                }
            }
            std::string lo_kw, lo_val, lo_open, hi_kw, hi_val, hi_open;
            ls >> lo_kw >> lo_val >> lo_open >> hi_kw >> hi_val >> hi_open;
            if (lo_kw != "lo" || hi_kw != "hi") {
                throw ParseError(lineno, "expected 'axis_i lo <q> open|closed hi <q> open|closed'");
            }
            const auto openness = [&](const std::string& word) {
                if (word == "open") return true;
                if (word == "closed") return false;
                throw ParseError(lineno, "bad openness '" + word + "'");
            };
            AxisInterval a;
            try {
                a.lo = parse_rat(lo_val);
                a.hi = parse_rat(hi_val);
            } catch (const std::exception& e) {
                throw ParseError(lineno, e.what());
            }
            a.lo_open = openness(lo_open);
            a.hi_open = openness(hi_open);
            if (a.lo > a.hi) throw ParseError(lineno, "lo > hi");
            axes.push_back(std::move(a));
        } else {
            throw ParseError(lineno, "unrecognized line '" + line + "'");
        }
    }
    flush_member(lineno + 1);
    if (members.empty()) throw ParseError(lineno + 1, "cover has no members");
    try {
        return BoxCover(dim, std::move(members));
    } catch (const std::exception& e) {
        throw ParseError(lineno + 1, e.what());
    }
}

BoxCover parse_cover_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_cover(in);
}

std::string write_cover(const BoxCover& cover) {
    std::ostringstream out;
    out << "cover N=" << cover.dim() << "\n";
    for (const CoverMember& m : cover.members()) {
        out << "member " << m.label << "\n";
        for (const RationalBox& b : m.region.boxes()) {
            for (int i = 0; i < cover.dim(); ++i) {
                const AxisInterval& a = b.axis(i);
                out << "axis_" << i << " lo " << rat_to_string(a.lo) << ' '
                    << (a.lo_open ? "open" : "closed") << " hi " << rat_to_string(a.hi) << ' '
                    << (a.hi_open ? "open" : "closed") << "\n";
            }
        }
    }
    return out.str();
}

Index parse_index(const std::string& text) {
    std::istringstream in(text);
    std::string ntok, dtok, colon, coords;
    in >> ntok >> dtok >> colon >> coords;
    if (colon != ":") throw std::invalid_argument("bad index literal: " + text);
    const int n = parse_keyed_int(ntok, "n", 1);
    const int dim = parse_keyed_int(dtok, "N", 1);
    std::vector<int> values = parse_coords(coords, 1);
    if (static_cast<int>(values.size()) != dim) {
        throw std::invalid_argument("bad index literal: " + text);
    }
    return Index(n, std::move(values));
}

std::string write_tree_jsonl(const SubdivisionTree& tree) {
    std::ostringstream out;
    for (const SubdivisionLeaf& leaf : tree.leaves) {
        json record;
        record["level"] = leaf.cube.level;
        record["corner"] = leaf.cube.corner;
        record["status"] = leaf.status == LeafStatus::kAccepted ? "accepted" : "refused";
        if (leaf.status == LeafStatus::kAccepted) record["member"] = leaf.fitted_label;
        out << record.dump() << "\n";
    }
    return out.str();
}

std::string write_poset_json(const NervePoset& poset) {
    json out;
    out["ground"] = poset.ground_labels;
    out["truncated"] = poset.truncated;
    out["max_size"] = poset.max_size;
    json elements = json::array();
    std::map<std::vector<int>, int> ids;
    for (std::size_t i = 0; i < poset.elements.size(); ++i) {
        ids[poset.elements[i]] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < poset.elements.size(); ++i) {
        const std::vector<int>& element = poset.elements[i];
        json record;
        record["id"] = i;
        json labels = json::array();
        for (int m : element) labels.push_back(poset.ground_labels[static_cast<std::size_t>(m)]);
        record["members"] = labels;
        json facets = json::array();
        if (element.size() > 1) {
            for (std::size_t drop = 0; drop < element.size(); ++drop) {
                std::vector<int> facet;
                for (std::size_t j = 0; j < element.size(); ++j) {
                    if (j != drop) facet.push_back(element[j]);
                }
                auto it = ids.find(facet);
                if (it != ids.end()) facets.push_back(it->second);
            }
        }
        record["facets"] = facets;
        elements.push_back(std::move(record));
    }
    out["elements"] = std::move(elements);
    return out.dump(2);
}

}  // namespace sperner
