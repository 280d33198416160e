#include "rigidmod/rational.hpp"

#include <numeric>

#include "rigidmod/errors.hpp"

namespace rigidmod {

std::string q_to_string(const Q& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Q q_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational");
    try {
        Q x(s);  // mpq_class accepts "a" and "a/b"
        x.canonicalize();
        return x;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational '" + s + "'");
    }
}

std::string exp24_to_string(long long e) {
    long long g = std::gcd(e < 0 ? -e : e, 24LL);
    if (g == 0) return "0";
    long long num = e / g, den = 24 / g;
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace rigidmod
