#pragma once

#include "pfw/config.hpp"
#include "pfw/gamma.hpp"
#include "pfw/words.hpp"

#include <cstddef>
#include <functional>
#include <optional>

namespace pfw::detail {

/// Read-only factor and occurrence queries over the word a construction cuts
/// its blocks from.  Two backings exist: an exact one over head-pivot-tail
/// words, and a windowed one over raw extension streams (whose negatives are
/// best effort; the final witness validation stays exact either way).
struct factor_view {
    std::function<word(std::size_t)> prefix;
    std::function<bool(const word&)> is_factor;
    std::function<bool(const word&)> is_recurrent;
    /// First occurrence of f starting in [from, upto), if any.
    std::function<std::optional<std::size_t>(const word& f, std::size_t from, std::size_t upto)>
        next_occurrence;
    /// Every occurrence of a non-recurrent factor ends by this position.
    std::size_t nonrecurrent_scan = 0;
    /// Occurrence scans never look past this start position.
    std::size_t occurrence_cap = 0;
};

struct gamma_parts {
    word w1;
    word w2;
    word g;
};

/// Cuts (w1, w2, g) out of the source so that target stays a prefix of
/// w1 w2 x g and the splice-witness properties hold (exactly when the view is
/// exact; up to window shortfalls otherwise).  x must occur in the source and
/// t is the marker-free stream g is drawn from.  Throws undecided_error when
/// a scan exhausts its window, std::invalid_argument when x does not occur.
gamma_parts build_gamma_parts(const factor_view& src, const word& target, letter x,
                              const std::function<word(std::size_t)>& t_prefix,
                              const search_limits& lim);

/// Factor queries answered from a finite window of a raw stream.  Negatives
/// are best effort; the construction's final validation remains exact.  The
/// scan horizon bounds how far non-recurrent occurrences are chased (keeping
/// the cut blocks short); it is clipped to the window.
factor_view windowed_view(const right_infinite_word& s, std::size_t window,
                          std::size_t scan_horizon);

/// Runs the block cut against growing windows of a raw stream (the probe
/// window first, the full stream window on retry), validating each candidate
/// witness exactly and rethrowing undecided_error only once the last window
/// fails to confirm one.
gamma_witness cut_blocks_windowed(const right_infinite_word& s, const word& target, letter x,
                                  const right_infinite_word& t, int k, const power_bound& b,
                                  const search_limits& lim);

/// First occurrence of f in w starting in [from, upto), found by scanning
/// doubling prefixes; nullopt once every start position below upto is ruled
/// out.  upto is additionally clipped to lim.occurrence_scan_cap.
std::optional<std::size_t> scan_occurrence(const right_infinite_word& w, const word& f,
                                           std::size_t from, std::size_t upto,
                                           const search_limits& lim);

}  // namespace pfw::detail
