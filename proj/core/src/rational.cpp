#include "sperner/rational.hpp"

#include <cctype>

namespace sperner {

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    for (char c : text) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-')) {
            throw std::invalid_argument("bad rational literal: " + text);
        }
    }
    mpq_class r;
    if (r.set_str(text, 10) != 0) {
        throw std::invalid_argument("bad rational literal: " + text);
    }
    if (r.get_den() == 0) {
        throw std::invalid_argument("zero denominator: " + text);
    }
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

}  // namespace sperner
