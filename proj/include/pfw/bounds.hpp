#pragma once

#include "pfw/rational.hpp"

#include <string>

namespace pfw {

/// An exponent threshold.  A plain bound "alpha" forbids factor exponents
/// >= alpha; a plus bound "alpha+" forbids exponents strictly above alpha.
struct power_bound {
    rational alpha{2};
    bool plus = false;

    /// Text form: "2", "7/4", "2+", "5/2+".
    [[nodiscard]] std::string str() const;

    friend bool operator==(const power_bound&, const power_bound&) = default;
};

/// True when a factor of the given exponent breaks the bound.
[[nodiscard]] bool violates(const power_bound& b, const rational& exponent);

/// Parses "N", "N/D", optionally followed by '+'.  Requires alpha >= 1.
[[nodiscard]] power_bound parse_power_bound(const std::string& text);

/// Admissible parameter region of the transition construction: plus bounds
/// need k >= 3 and alpha >= 2; plain bounds need alpha > 2 when k = 3 and
/// alpha >= 2 when k > 3.  Alphabets below three letters are never admissible.
[[nodiscard]] bool in_upsilon(int k, const power_bound& b);

/// True when satisfying the certified bound implies satisfying the queried
/// one, i.e. every exponent the query forbids is already forbidden.
[[nodiscard]] bool covers(const power_bound& certified, const power_bound& query);

}  // namespace pfw
