#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

namespace pfw {

/// Window, depth, and budget knobs for every probing or searching routine.
/// Every limit is explicit: exceeding one raises undecided_error or
/// resource_limit_error, never a silent guess.
struct search_limits {
    /// Depth of the extendability probe run before trusting an input word.
    std::size_t probe_depth = 64;
    /// Letters inspected when picking the pivot letter of a normalization.
    std::size_t probe_window = 256;
    /// Verified lookahead kept ahead of every letter emitted by a stream.
    std::size_t stream_slack = 32;
    /// Largest prefix of a backing stream scanned during normalization.
    std::size_t stream_window = 4096;
    /// Node budget for depth-first searches (per operation).
    std::uint64_t search_nodes = 50'000'000;
    /// Longest word length enumerate_power_free accepts.
    std::size_t enumerate_max_length = 64;
    /// Cap on probed prefix lengths when testing factor-chain membership.
    std::size_t omega_cap = 1024;
    /// Extra letters appended to finite verification windows.
    std::size_t check_window = 512;
    /// Cap on occurrence scans inside lazily generated words.
    std::size_t occurrence_scan_cap = std::size_t{1} << 20;
    /// Starting window of factor searches (grows from max(this, 8 |f|)).
    std::size_t factor_window_start = 256;
    /// Hard cap on factor-search windows.
    std::size_t factor_window_cap = std::size_t{1} << 22;
    /// Override for the shared marker letter of the transition pipeline
    /// (defaults to the largest letter of the alphabet).
    std::optional<int> marker_letter;
};

}  // namespace pfw
