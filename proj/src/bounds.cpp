#include "pfw/bounds.hpp"

#include <stdexcept>

namespace pfw {

std::string power_bound::str() const {
    return plus ? alpha.str() + "+" : alpha.str();
}

bool violates(const power_bound& b, const rational& exponent) {
    return b.plus ? exponent > b.alpha : exponent >= b.alpha;
}

power_bound parse_power_bound(const std::string& text) {
    std::string s = text;
    power_bound b;
    if (!s.empty() && s.back() == '+') {
        b.plus = true;
        s.pop_back();
    }
    if (s.empty()) throw std::invalid_argument("parse_power_bound: empty exponent");

    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            std::size_t used = 0;
            std::int64_t n = std::stoll(s, &used);
            if (used != s.size()) throw std::invalid_argument("trailing characters");
            b.alpha = rational(n);
        } else {
            std::size_t used = 0;
            std::int64_t n = std::stoll(s.substr(0, slash), &used);
            if (used != slash) throw std::invalid_argument("bad numerator");
            std::string dpart = s.substr(slash + 1);
            std::int64_t d = std::stoll(dpart, &used);
            if (used != dpart.size()) throw std::invalid_argument("bad denominator");
            b.alpha = rational(n, d);
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_power_bound: cannot parse '" + text + "'");
    }
    if (b.alpha < rational(1)) throw std::invalid_argument("parse_power_bound: exponent below 1");
    return b;
}

bool in_upsilon(int k, const power_bound& b) {
    if (k < 3) return false;
    if (b.plus) return b.alpha >= rational(2);
    if (k == 3) return b.alpha > rational(2);
    return b.alpha >= rational(2);
}

bool covers(const power_bound& certified, const power_bound& query) {
    // Need: violates(query, e) implies violates(certified, e) for every e.
    if (query.plus) return query.alpha >= certified.alpha;
    if (certified.plus) return query.alpha > certified.alpha;
    return query.alpha >= certified.alpha;
}

}  // namespace pfw
