#pragma once

#include "pfw/bounds.hpp"
#include "pfw/config.hpp"
#include "pfw/extend.hpp"
#include "pfw/infinite.hpp"
#include "pfw/words.hpp"

#include <cstddef>

namespace pfw {

/// Verdicts for the eight defining properties of a splice witness, plus the
/// strict form of the marker balance that the builder maintains.
struct gamma_property_report {
    bool words_in_alphabet = false;   // 1: w1, w2, g lie over the k-letter alphabet
    bool marker_in_alphabet = false;  // 2: x is a letter of the alphabet
    bool head_power_free = false;     // 3: w1 w2 x g respects the bound
    bool tail_power_free = false;     // 4: t respects the bound (certificate or window)
    bool tail_avoids_marker = false;  // 5: x never occurs in t
    bool g_prefix_of_tail = false;    // 6: g is a prefix of t
    bool anchor_unique = false;       // 7: x g y occurs exactly once in w2 x g y
    bool marker_balance = false;      // 8: w2 carries at least as many x as w1
    bool marker_balance_strict = false;  // strictly more, as the builder arranges
    letter next_letter = 0;              // y: the letter following g in t

    /// All eight properties hold (the strict balance is informative only).
    [[nodiscard]] bool all() const {
        return words_in_alphabet && marker_in_alphabet && head_power_free && tail_power_free &&
               tail_avoids_marker && g_prefix_of_tail && anchor_unique && marker_balance;
    }
};

/// A five-part splice witness (w1, w2, x, g, t).  When all eight properties
/// hold, the infinite word w1 w2 x t respects the bound in every prefix.
struct gamma_witness {
    word w1;
    word w2;
    word g;
    letter x = 0;
    right_infinite_word t;
    gamma_property_report report;
};

/// Evaluates the eight properties.  Property 4 is settled by t's construction
/// certificate when one covers the bound, and otherwise verified on a finite
/// window; property 5 falls back from support metadata to a window scan and
/// raises undecided_error when the scan cannot refute an occurrence.
[[nodiscard]] gamma_property_report check_gamma(const gamma_witness& w, int k,
                                                const power_bound& b,
                                                const search_limits& lim = {});

/// Joins a witness into the infinite word w1 w2 x t after validating all
/// eight properties (std::invalid_argument when any fails).
[[nodiscard]] right_infinite_word splice(const gamma_witness& w, int k, const power_bound& b,
                                         const search_limits& lim = {});

/// Builds a witness whose blocks are cut from ubar = head · pivot · tail so
/// that target stays a prefix of w1 w2 x g.  The marker x must recur in ubar
/// (i.e. be a factor of its tail) and be avoided by t: w1 exhausts the
/// occurrences of the finitely-occurring prefixes of x·t, and w2 ends at an
/// occurrence of x·g chosen so the marker tally and the anchor-uniqueness
/// argument line up.  The returned witness has passed check_gamma (an
/// internal failure is a logic error, since the source queries are exact).
[[nodiscard]] gamma_witness build_gamma(const word& target, const structured_infinite_word& ubar,
                                        letter x, const right_infinite_word& t, int k,
                                        const power_bound& b, const search_limits& lim = {});

/// The same construction run in the reversed domain: target_suffix and the
/// structured word are already reversed, tbar supplies the reversed tail via
/// its right view, and the returned witness lives in the reversed domain
/// (callers re-reverse its blocks).
[[nodiscard]] gamma_witness build_gamma_reversed(const word& reversed_target,
                                                 const structured_infinite_word& vbar_reversed,
                                                 letter x, const left_infinite_word& tbar, int k,
                                                 const power_bound& b,
                                                 const search_limits& lim = {});

/// Cuts the witness straight from a raw stream in which the marker has been
/// observed to recur, skipping the head-pivot-tail rebase.  Factor queries
/// are answered from a finite window (retried once at the full stream
/// window); they only steer which cut is attempted — every candidate witness
/// is validated exactly before being returned, and a cut that cannot be
/// confirmed raises undecided_error rather than guessing.
[[nodiscard]] gamma_witness build_gamma(const word& target, const right_infinite_word& ubar,
                                        letter x, const right_infinite_word& t, int k,
                                        const power_bound& b, const search_limits& lim = {});

/// Reversed-domain counterpart of the raw-stream overload.
[[nodiscard]] gamma_witness build_gamma_reversed(const word& reversed_target,
                                                 const right_infinite_word& vbar_reversed,
                                                 letter x, const left_infinite_word& tbar, int k,
                                                 const power_bound& b,
                                                 const search_limits& lim = {});

}  // namespace pfw
