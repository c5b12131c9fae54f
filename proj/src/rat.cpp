#include "qes/rat.hpp"

namespace qes {

Rat Rat::from_string(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw std::invalid_argument("Rat: cannot parse '" + s + "'");
    if (v.get_den() == 0)
        throw std::invalid_argument("Rat: zero denominator in '" + s + "'");
    v.canonicalize();
    return Rat(std::move(v));
}

std::string Rat::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_str();
}

}  // namespace qes
