#pragma once

#include "pfw/bounds.hpp"
#include "pfw/config.hpp"
#include "pfw/errors.hpp"
#include "pfw/infinite.hpp"
#include "pfw/repetition.hpp"
#include "pfw/words.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace pfw {

enum class extend_status {
    extendable_to_depth,
    not_extendable,
    undecided,
};

/// Outcome of a bounded-depth extendability probe.  not_extendable is exact:
/// the whole search tree below the word was exhausted, so no extension of any
/// depth exists.  A witness, when present, is the full extended word.
struct extend_verdict {
    extend_status status = extend_status::undecided;
    std::size_t depth = 0;
    std::optional<word> witness;
};

/// All bound-respecting words of length n over k letters, in lexicographic
/// order, found by backtracking with incremental suffix filtering.  jobs > 1
/// splits the search by first letter across threads.  Lengths beyond
/// lim.enumerate_max_length raise resource_limit_error up front.
[[nodiscard]] std::vector<word> enumerate_power_free(int k, const power_bound& b, std::size_t n,
                                                     const search_limits& lim = {},
                                                     unsigned jobs = 1);

/// Searches for a bound-respecting extension of w by depth letters to the
/// right.  w itself must be power-free (std::invalid_argument otherwise).
[[nodiscard]] extend_verdict right_extendable(const word& w, int k, const power_bound& b,
                                              std::size_t depth, const search_limits& lim = {});

/// Mirror image of right_extendable: extensions grow to the left.
[[nodiscard]] extend_verdict left_extendable(const word& w, int k, const power_bound& b,
                                             std::size_t depth, const search_limits& lim = {});

/// Lazy power-free extension of u (the stream starts with u itself).
/// Letters are emitted smallest-first in depth-first order, each one only
/// once a verified continuation of lim.stream_slack further letters exists;
/// emitted letters are never revised, and a search forced to revise one
/// raises undecided_error instead.  Construction probes lim.probe_depth
/// letters ahead and raises not_extendable_error on dead inputs.
[[nodiscard]] right_infinite_word extension_stream(const word& u, int k, const power_bound& b,
                                                   const search_limits& lim = {});

/// A word of the shape head · pivot · tail whose recurrent factors are
/// exactly the factors of the uniformly recurrent tail: the pivot letter
/// never occurs in the tail, so every factor that touches the head or the
/// pivot occurs finitely often.  Factor membership is decided exactly, by a
/// bounded scan across the joint plus a tail factor query.
class structured_infinite_word {
public:
    /// Validates the shape: tail uniformly recurrent with known support, the
    /// pivot outside that support, all letters below k, and the joint region
    /// bound-respecting.
    structured_infinite_word(word head, letter pivot, right_infinite_word tail, int k,
                             const power_bound& b, const search_limits& lim = {});

    [[nodiscard]] const word& head() const { return head_; }
    [[nodiscard]] letter pivot() const { return pivot_; }
    [[nodiscard]] const right_infinite_word& tail() const { return tail_; }
    [[nodiscard]] const right_infinite_word& composite() const { return composite_; }
    /// Offset where the tail starts (head length plus one for the pivot).
    [[nodiscard]] std::size_t boundary() const { return head_.size() + 1; }

    /// Exact factor membership: every occurrence either starts before the
    /// tail (bounded region) or lies inside the tail.
    [[nodiscard]] bool is_factor(const word& f, const search_limits& lim = {}) const;
    /// Exact recurrent-factor membership (= factor of the tail).
    [[nodiscard]] bool is_recurrent(const word& f, const search_limits& lim = {}) const;

private:
    word head_;
    letter pivot_ = 0;
    right_infinite_word tail_;
    right_infinite_word composite_;
};

/// Rebases a right-extendable word u onto a stream where the wanted letter
/// provably recurs: picks as pivot the most frequent letter (other than the
/// wanted one) in a probe of extension_stream(u), takes as tail the base
/// word avoiding that pivot but containing the wanted letter, and joins the
/// two along a block cut from the probe so every prefix stays power-free.
/// The result keeps u as a prefix.  Raises undecided_error when no cut
/// validates within the stream window.
[[nodiscard]] structured_infinite_word force_recurrent_letter(const word& u, letter wanted, int k,
                                                              const power_bound& b,
                                                              const search_limits& lim = {});

}  // namespace pfw
