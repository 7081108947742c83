#pragma once

#include "pfw/bounds.hpp"
#include "pfw/config.hpp"
#include "pfw/errors.hpp"
#include "pfw/words.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace pfw {

/// A letter-to-word substitution: images[c] is the image of letter c.
/// Letters at or beyond images.size() are outside the domain.
struct morphism {
    std::vector<word> images;

    /// Image of w under the substitution; throws std::invalid_argument when
    /// w uses a letter outside the domain.
    [[nodiscard]] word apply(const word& w) const;
};

/// 0 -> 01, 1 -> 10.
[[nodiscard]] morphism thue_morse_morphism();
/// 0 -> 012, 1 -> 02, 2 -> 1.
[[nodiscard]] morphism theta_morphism();

/// Lazily evaluated, memoizing right-infinite word.  Copies share the
/// producer, so the memo only ever grows and prefixes are stable across
/// calls.  Construction metadata rides along: a support superset, a uniform
/// recurrence flag, a bound certified by construction, and the uniformly
/// recurrent core that factor queries should target.  Not thread-safe.
class right_infinite_word {
public:
    [[nodiscard]] letter at(std::size_t i) const;
    [[nodiscard]] word prefix(std::size_t n) const;

    /// Superset of the letters the word can ever use; nullopt when unknown.
    /// For words built from morphisms and renamings the set is exact (every
    /// listed letter genuinely occurs).
    [[nodiscard]] const std::optional<std::vector<letter>>& support() const;
    /// Whether every factor recurs with bounded gaps (known by construction).
    [[nodiscard]] bool uniformly_recurrent() const;
    /// A bound no factor violates, guaranteed by construction; nullopt when
    /// no such certificate exists.
    [[nodiscard]] const std::optional<power_bound>& certified_bound() const;
    /// Stream whose factor set recurrent-factor queries target: the word
    /// itself when uniformly recurrent, the declared tail for head-plus-tail
    /// composites, nullopt otherwise.
    [[nodiscard]] std::optional<right_infinite_word> recurrent_core() const;
    /// Number of letters evaluated so far.
    [[nodiscard]] std::size_t memoized() const;

    /// Word equal to head followed by tail.
    [[nodiscard]] static right_infinite_word head_tail(const word& head,
                                                       const right_infinite_word& tail);

    /// Producer-backed word: grow(memo, need) must extend memo to at least
    /// need letters or throw.  Metadata is taken on trust from the caller.
    [[nodiscard]] static right_infinite_word from_generator(
        std::function<void(std::vector<letter>&, std::size_t)> grow,
        std::optional<std::vector<letter>> support, bool uniformly_recurrent,
        std::optional<power_bound> certified);

private:
    struct impl;
    right_infinite_word() = default;
    std::shared_ptr<impl> impl_;

    // The two named generators attach their construction certificates.
    friend right_infinite_word thue_morse();
    friend right_infinite_word theta_word();
};

/// Fixed point of a morphism prolongable at seed: the image of seed must
/// start with seed and be at least two letters long.  Uniform recurrence is
/// detected by a primitivity check on the letters reachable from seed.
[[nodiscard]] right_infinite_word fixed_point(const morphism& m, letter seed);

/// 0110100110010110...; certified to contain no factor of exponent above 2.
[[nodiscard]] right_infinite_word thue_morse();

/// 012021012102...; certified to contain no factor of exponent 2 or more.
[[nodiscard]] right_infinite_word theta_word();

/// Letter renaming of a stream.  The mapping must be injective, defined on
/// the stream's (known) support, and target letters below max_alphabet.
[[nodiscard]] right_infinite_word relabel(const right_infinite_word& t,
                                          const std::vector<std::pair<letter, letter>>& mapping);

/// A power-free stream over the k-letter alphabet minus the avoided letter:
/// the two- or three-letter base word renamed, order preserving, onto the
/// smallest remaining letters.  When must_contain is given and would be left
/// out, it replaces the largest image letter.  Throws unsupported_parameters
/// when (k, bound) lies outside the supported region.
[[nodiscard]] right_infinite_word base_word_avoiding(int k, const power_bound& b, letter avoid,
                                                     std::optional<letter> must_contain = std::nullopt);

/// Whether f occurs in t (queries target t's uniformly recurrent core).
/// Positives come from a direct occurrence.  Negatives carry a stability
/// certificate: the set of |f|-length factors of the scanned prefix stopped
/// growing across two consecutive window doublings.  When neither happens
/// within the window cap, throws undecided_error.
[[nodiscard]] bool factor_in(const right_infinite_word& t, const word& f,
                             const search_limits& lim = {});

/// A left-infinite word, stored and evaluated through its reversal.
class left_infinite_word {
public:
    explicit left_infinite_word(right_infinite_word reversed) : rev_(std::move(reversed)) {}

    /// Last n letters, leftmost first.
    [[nodiscard]] word suffix(std::size_t n) const;
    /// The reversed reading, a right-infinite word.
    [[nodiscard]] const right_infinite_word& right_view() const { return rev_; }

private:
    right_infinite_word rev_;
};

/// A left-infinite word all of whose factors are factors of t: letters are
/// chosen leftward, smallest candidate first, each extension validated with
/// factor_in against t's recurrent core.  Recurrence guarantees the greedy
/// choice never dead-ends; an exhausted candidate set therefore signals a
/// window shortfall and raises undecided_error.
[[nodiscard]] left_infinite_word left_limit(const right_infinite_word& t,
                                            const search_limits& lim = {});

}  // namespace pfw
