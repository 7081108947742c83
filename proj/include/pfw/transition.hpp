#pragma once

#include "pfw/bounds.hpp"
#include "pfw/config.hpp"
#include "pfw/gamma.hpp"
#include "pfw/infinite.hpp"
#include "pfw/words.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace pfw {

/// The two spliced sides of a transition: u extends rightward into x·t and v
/// extends leftward out of tbar·x, sharing the marker letter x.
struct side_assembly {
    word u_tilde;  ///< u_tilde · x · t is power-free and keeps u as a prefix
    word v_tilde;  ///< tbar · x · v_tilde is power-free and keeps v as a suffix
    letter x = 0;
    right_infinite_word t;  ///< marker-free power-free stream
    left_infinite_word tbar;
    gamma_witness right_witness;           ///< forward-domain witness for the u side
    gamma_witness left_witness_reversed;   ///< reversed-domain witness for the v side
};

/// Builds both sides, or throws: unsupported_parameters outside the
/// admissible region, std::invalid_argument for malformed or non-power-free
/// inputs, not_extendable_error when a probe proves a side cannot continue,
/// undecided_error / resource_limit_error when a budget runs out.
[[nodiscard]] side_assembly assemble_sides(const word& u, const word& v, int k,
                                           const power_bound& b, const search_limits& lim = {});

/// Shortest suffix of tbar strictly longer than every given length.
[[nodiscard]] word choose_p(const left_infinite_word& tbar, std::size_t len_ux,
                            std::size_t len_xv, std::size_t len_u, std::size_t len_v);

/// Shortest prefix h of t, longer than p, with h·p again a prefix of t
/// (i.e. h ends at an occurrence of p inside t).  p must be a recurrent
/// factor of t; the scan raises undecided_error past the occurrence cap.
[[nodiscard]] word choose_h(const right_infinite_word& t, const word& p,
                            const search_limits& lim = {});

/// Everything needed to recheck a built transition from scratch.  The w
/// field is the connecting word: full_word = u w v = u_tilde x h p x v_tilde.
struct transition_certificate {
    int k = 0;
    power_bound bound;
    word u;
    word v;
    word w;
    word full_word;
    letter x = 0;
    word u_tilde;
    word v_tilde;
    word h;
    word p;
    word g_right;  ///< g block of the u-side witness
    word g_left;   ///< g block of the v-side witness, forward reading
    bool full_word_power_free = false;
    bool u_is_prefix = false;
    bool v_is_suffix = false;
    bool p_long_enough = false;
    bool h_longer_than_p = false;
    bool hp_prefix_of_t = false;
    bool p_suffix_of_tbar = false;
    bool marker_twice = false;  ///< x occurs exactly twice in x h p x
    search_limits limits_used;

    [[nodiscard]] bool verified() const {
        return full_word_power_free && u_is_prefix && v_is_suffix && p_long_enough &&
               h_longer_than_p && hp_prefix_of_t && p_suffix_of_tbar && marker_twice;
    }

    /// Line-oriented "key: value" rendering; the last line is
    /// "verified: true" or "verified: false".
    [[nodiscard]] std::string render() const;
};

/// Runs the whole pipeline: assembles both sides, picks the separator blocks
/// p and h, splices full_word = u_tilde x h p x v_tilde, cuts out w, and
/// verifies every certificate field.  A verification failure on the built
/// word is a defect and raises std::logic_error; input and budget problems
/// raise the same exceptions as assemble_sides.
[[nodiscard]] transition_certificate build_transition(const word& u, const word& v, int k,
                                                      const power_bound& b,
                                                      const search_limits& lim = {});

/// Exhaustive shortest-then-lexicographic search for a connecting word w
/// with u w v power-free, up to length max_len (capped by
/// lim.enumerate_max_length).  Independent of the constructive pipeline.
[[nodiscard]] std::optional<word> minimal_transition_oracle(const word& u, const word& v, int k,
                                                            const power_bound& b,
                                                            std::size_t max_len,
                                                            const search_limits& lim = {});

}  // namespace pfw
