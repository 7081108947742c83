#pragma once

#include "pfw/bounds.hpp"
#include "pfw/rational.hpp"
#include "pfw/words.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace pfw {

/// Result of a maximal-exponent scan: the highest exponent attained by any
/// factor, together with the realizing period and span (half-open positions).
/// Ties are broken toward the earliest span start, then the smallest period.
struct exponent_report {
    rational max_exponent{1};
    std::size_t witness_period = 1;
    std::size_t span_begin = 0;
    std::size_t span_end = 1;
};

/// Exponent of the whole word: its length divided by its shortest period
/// (computed from the longest border).  Throws std::invalid_argument on the
/// empty word, whose exponent is undefined.
[[nodiscard]] rational word_exponent(const word& w);

/// Highest exponent over all factors of w, via a longest-common-extension
/// sweep per candidate period (quadratic time, linear memory).  Requires a
/// nonempty word.
[[nodiscard]] exponent_report max_factor_exponent(const word& w);

/// True when no factor's exponent breaks the bound.  The empty word always
/// passes.  Scans incrementally and stops at the first violation.
[[nodiscard]] bool is_power_free(const word& w, const power_bound& b);

/// Incremental power-freeness filter for backtracking searches.  push(c)
/// appends c only if every suffix of the extended word still respects the
/// bound; a rejected push leaves the content unchanged.  Only suffixes
/// through the new last letter need checking, so a word built entirely of
/// accepted pushes is power-free as a whole.
class power_free_builder {
public:
    explicit power_free_builder(power_bound b) : bound_(std::move(b)) {}

    /// Appends c if the result stays bound-respecting; returns whether it did.
    bool push(letter c);
    /// Removes the last letter.  Throws std::out_of_range when empty.
    void pop();

    [[nodiscard]] std::size_t size() const { return letters_.size(); }
    [[nodiscard]] bool empty() const { return letters_.empty(); }
    [[nodiscard]] letter operator[](std::size_t i) const { return letters_[i]; }
    [[nodiscard]] const std::vector<letter>& letters() const& { return letters_; }
    const std::vector<letter>& letters() && = delete;
    [[nodiscard]] word snapshot() const { return word(letters_); }
    [[nodiscard]] const power_bound& bound() const { return bound_; }

private:
    [[nodiscard]] bool last_letter_violates() const;

    power_bound bound_;
    std::vector<letter> letters_;
};

/// Reference implementations: direct scans over all factors and all periods,
/// written for obviousness rather than speed.  Used to cross-validate the
/// optimized routines.
[[nodiscard]] rational naive_word_exponent(const word& w);
[[nodiscard]] exponent_report naive_max_factor_exponent(const word& w);
[[nodiscard]] bool naive_is_power_free(const word& w, const power_bound& b);

/// A square rr that ends u·v_prefix and reaches strictly back into u
/// (|rr| > |v_prefix|).  Such squares are the only way a concatenation of two
/// power-free words can go wrong when the bound is at least 2.
struct pi_witness {
    word r;
    word v_prefix;
};

/// Smallest witness square across the join of u and v: v_prefix shortest
/// first, then r shortest.  nullopt when no such square exists, in which case
/// the concatenation of power-free u and v (bound at least 2) is power-free.
[[nodiscard]] std::optional<pi_witness> find_pi_witness(const word& u, const word& v);

/// True when u·v respects the bound: decided by the witness shortcut when no
/// witness square exists, by a direct full check otherwise.  Callers are
/// expected to pass power-free u and v.
[[nodiscard]] bool assert_concat_safe(const word& u, const word& v, const power_bound& b);

}  // namespace pfw
