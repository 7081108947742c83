#include "pfw/gamma.hpp"

#include "pfw/repetition.hpp"

#include "gamma_core.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace pfw {

namespace detail {

namespace {

word chain_member(letter x, const std::function<word(std::size_t)>& t_prefix, std::size_t len) {
    word c;
    c.push_back(x);
    return c + t_prefix(len - 1);
}

std::size_t count_letter(const word& w, letter c) {
    return static_cast<std::size_t>(std::count(w.letters().begin(), w.letters().end(), c));
}

}  // namespace

gamma_parts build_gamma_parts(const factor_view& src, const word& target, letter x,
                              const std::function<word(std::size_t)>& t_prefix,
                              const search_limits& lim) {
    auto member = [&](std::size_t len) { return src.is_factor(chain_member(x, t_prefix, len)); };
    if (!member(1)) {
        throw std::invalid_argument("gamma construction: the marker letter never occurs in the source");
    }

    // The factors of the source that are prefixes of x·t form a chain, one
    // member per length; when it reaches past the target we can anchor on a
    // member of that full length.
    const std::size_t need = target.size() + 1;
    const std::size_t probe_cap = std::max<std::size_t>(1, std::min(need, lim.omega_cap));
    if (probe_cap == need && member(need)) {
        const word g = t_prefix(target.size());
        const word xg = chain_member(x, t_prefix, need);
        const auto q = src.next_occurrence(xg, 0, src.occurrence_cap);
        if (!q) {
            throw undecided_error("gamma construction: anchor occurrence not found within the scan cap");
        }
        // Cutting at the first occurrence makes the anchor unique on its own.
        return {word(), src.prefix(*q), g};
    }

    // Largest chain member length actually present (membership is monotone).
    std::size_t chain_max;
    if (member(probe_cap)) {
        chain_max = probe_cap;
    } else {
        std::size_t lo = 1;
        std::size_t hi = probe_cap;
        while (lo + 1 < hi) {
            const std::size_t mid = lo + (hi - lo) / 2;
            if (member(mid)) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        chain_max = lo;
    }

    // Largest recurrent chain member; the anchor x·g must recur so that w2
    // can end at a fresh occurrence past w1.
    auto recurrent = [&](std::size_t len) {
        return src.is_recurrent(chain_member(x, t_prefix, len));
    };
    if (!recurrent(1)) {
        throw undecided_error("gamma construction: the marker letter was not seen recurring");
    }
    std::size_t lo = 1;
    std::size_t hi = chain_max + 1;
    while (lo + 1 < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (recurrent(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const std::size_t rec_max = lo;
    const word g = t_prefix(rec_max - 1);
    const word xg = chain_member(x, t_prefix, rec_max);

    // w1 swallows every occurrence of the finitely-occurring chain members,
    // so none can resurface later and duplicate the anchor.
    std::size_t w1_len = 0;
    for (std::size_t len = rec_max + 1; len <= chain_max; ++len) {
        const word f = chain_member(x, t_prefix, len);
        std::size_t from = 0;
        for (;;) {
            const auto q = src.next_occurrence(f, from, src.nonrecurrent_scan);
            if (!q) break;
            w1_len = std::max(w1_len, *q + f.size());
            from = *q + 1;
        }
    }
    const word w1 = src.prefix(w1_len);
    const std::size_t marks_w1 = count_letter(w1, x);

    // w2 ends at the first anchor occurrence past w1 that carries strictly
    // more markers than w1 and reaches past the target.
    std::size_t from = w1_len;
    for (;;) {
        const auto q = src.next_occurrence(xg, from, src.occurrence_cap);
        if (!q) {
            throw undecided_error(
                "gamma construction: no anchor occurrence satisfied the tally and length "
                "conditions within the scan cap");
        }
        const word w2 = src.prefix(*q).sub(w1_len, *q - w1_len);
        if (count_letter(w2, x) > marks_w1 && *q + 1 + g.size() >= target.size()) {
            return {w1, w2, g};
        }
        from = *q + 1;
    }
}

factor_view windowed_view(const right_infinite_word& s, std::size_t window,
                          std::size_t scan_horizon) {
    auto buf = std::make_shared<const word>(s.prefix(window));
    const std::size_t horizon = std::min(scan_horizon, buf->size());
    factor_view v;
    v.prefix = [buf](std::size_t n) {
        if (n > buf->size()) {
            throw undecided_error("stream window exhausted while cutting blocks");
        }
        return buf->prefix(n);
    };
    auto find_from = [buf](const word& f, std::size_t from) -> std::optional<std::size_t> {
        if (f.empty() || f.size() > buf->size()) return std::nullopt;
        const auto& hay = buf->letters();
        const auto& pat = f.letters();
        if (from + f.size() > hay.size()) return std::nullopt;
        const auto it = std::search(hay.begin() + static_cast<std::ptrdiff_t>(from), hay.end(),
                                    pat.begin(), pat.end());
        if (it == hay.end()) return std::nullopt;
        return static_cast<std::size_t>(it - hay.begin());
    };
    // Chain classification reads only the horizon: occurrences must end
    // inside it.  A short horizon keeps the anchor short and the blocks
    // small; the exact validation downstream arbitrates.
    auto ends_within = [horizon](const std::optional<std::size_t>& pos, std::size_t len) {
        return pos.has_value() && *pos + len <= horizon;
    };
    v.is_factor = [find_from, ends_within](const word& f) {
        return f.empty() || ends_within(find_from(f, 0), f.size());
    };
    v.is_recurrent = [find_from, ends_within](const word& f) {
        if (f.empty()) return true;
        const auto first = find_from(f, 0);
        if (!ends_within(first, f.size())) return false;
        return ends_within(find_from(f, *first + 1), f.size());
    };
    v.next_occurrence = [find_from](const word& f, std::size_t from,
                                    std::size_t upto) -> std::optional<std::size_t> {
        const auto hit = find_from(f, from);
        if (hit && *hit < upto) return hit;
        return std::nullopt;
    };
    v.nonrecurrent_scan = horizon;
    v.occurrence_cap = buf->size();
    return v;
}

gamma_witness cut_blocks_windowed(const right_infinite_word& s, const word& target, letter x,
                                  const right_infinite_word& t, int k, const power_bound& b,
                                  const search_limits& lim) {
    auto t_prefix = [t](std::size_t n) { return t.prefix(n); };
    const std::size_t first = std::max(lim.probe_window, target.size() + 1);
    const std::size_t second = std::max(lim.stream_window, first);
    const int attempts = second > first ? 2 : 1;
    // The first attempt classifies the chain from a short horizon, which
    // keeps the anchor and the blocks small; the retry classifies across its
    // whole window.  Every candidate faces the same exact validation below.
    const std::size_t near = std::max(target.size() + 1, lim.probe_window / 4);
    for (int attempt = 0; attempt < attempts; ++attempt) {
        try {
            const factor_view view =
                windowed_view(s, attempt == 0 ? first : second, attempt == 0 ? near : second);
            const gamma_parts parts = build_gamma_parts(view, target, x, t_prefix, lim);
            gamma_witness wit{parts.w1, parts.w2, parts.g, x, t, {}};
            wit.report = check_gamma(wit, k, b, lim);
            word covered = wit.w1 + wit.w2;
            covered.push_back(x);
            covered = covered + wit.g;
            if (!wit.report.all() || !is_prefix(target, covered)) {
                throw undecided_error(
                    "block cut failed validation; the stream window may be too small");
            }
            return wit;
        } catch (const undecided_error&) {
            if (attempt + 1 == attempts) throw;
        } catch (const std::invalid_argument&) {
            // The restricted horizon can fail preconditions (e.g. hide every
            // marker occurrence) that the wider retry may still satisfy.
            if (attempt + 1 == attempts) throw;
        }
    }
    throw std::logic_error("cut_blocks_windowed: unreachable");
}

std::optional<std::size_t> scan_occurrence(const right_infinite_word& w, const word& f,
                                           std::size_t from, std::size_t upto,
                                           const search_limits& lim) {
    upto = std::min(upto, lim.occurrence_scan_cap);
    if (f.empty()) return from < upto ? std::optional<std::size_t>(from) : std::nullopt;
    if (from >= upto) return std::nullopt;
    const std::size_t full = upto + f.size() - 1;  // covers every candidate start
    std::size_t win = std::min(full, std::max<std::size_t>(256, from + f.size() + 64));
    for (;;) {
        const word pref = w.prefix(win);
        const auto& hay = pref.letters();
        const auto& pat = f.letters();
        const auto it = std::search(hay.begin() + static_cast<std::ptrdiff_t>(from), hay.end(),
                                    pat.begin(), pat.end());
        if (it != hay.end()) {
            const auto pos = static_cast<std::size_t>(it - hay.begin());
            if (pos < upto) return pos;
            return std::nullopt;
        }
        if (win >= full) return std::nullopt;
        win = std::min(full, win * 2);
    }
}

}  // namespace detail

namespace {

std::size_t count_letter(const word& w, letter c) {
    return static_cast<std::size_t>(std::count(w.letters().begin(), w.letters().end(), c));
}

/// Rejects a splice tail that cannot be certified marker-free: by support
/// metadata when present, by a hard occurrence otherwise, and by refusing to
/// guess when neither settles it.
void require_marker_out_of_tail(const right_infinite_word& t, letter x, const search_limits& lim,
                                const char* who) {
    const auto& sup = t.support();
    if (sup && !std::binary_search(sup->begin(), sup->end(), x)) return;
    word marker;
    marker.push_back(x);
    if (occur(t.prefix(lim.check_window), marker) > 0) {
        throw std::invalid_argument(std::string(who) + ": the marker occurs in the splice tail");
    }
    throw undecided_error(std::string(who) +
                          ": cannot certify that the marker stays out of the splice tail");
}

detail::factor_view structured_view(const structured_infinite_word& sw, const search_limits& lim) {
    detail::factor_view v;
    const right_infinite_word comp = sw.composite();
    v.prefix = [comp](std::size_t n) { return comp.prefix(n); };
    v.is_factor = [sw, lim](const word& f) { return sw.is_factor(f, lim); };
    v.is_recurrent = [sw, lim](const word& f) { return sw.is_recurrent(f, lim); };
    v.next_occurrence = [comp, lim](const word& f, std::size_t from,
                                    std::size_t upto) -> std::optional<std::size_t> {
        return detail::scan_occurrence(comp, f, from, upto, lim);
    };
    v.nonrecurrent_scan = sw.boundary();
    v.occurrence_cap = lim.occurrence_scan_cap;
    return v;
}

}  // namespace

gamma_property_report check_gamma(const gamma_witness& wit, int k, const power_bound& b,
                                  const search_limits& lim) {
    if (k < 1 || k > max_alphabet) {
        throw std::invalid_argument("check_gamma: alphabet size out of range: " + std::to_string(k));
    }
    gamma_property_report r;
    r.words_in_alphabet =
        letters_below(wit.w1, k) && letters_below(wit.w2, k) && letters_below(wit.g, k);
    r.marker_in_alphabet = static_cast<int>(wit.x) < k;

    word head = wit.w1 + wit.w2;
    head.push_back(wit.x);
    const word head_g = head + wit.g;
    r.head_power_free = is_power_free(head_g, b);

    const std::size_t win = head_g.size() + lim.check_window;
    if (wit.t.certified_bound() && covers(*wit.t.certified_bound(), b)) {
        r.tail_power_free = true;
    } else {
        r.tail_power_free = is_power_free(wit.t.prefix(win), b);
    }

    const auto& sup = wit.t.support();
    if (sup && !std::binary_search(sup->begin(), sup->end(), wit.x)) {
        r.tail_avoids_marker = true;
    } else {
        const word tp = wit.t.prefix(win);
        if (count_letter(tp, wit.x) > 0) {
            r.tail_avoids_marker = false;
        } else {
            throw undecided_error(
                "check_gamma: cannot certify that the marker stays out of the tail (no "
                "support metadata and none seen in the window)");
        }
    }

    r.g_prefix_of_tail = (wit.t.prefix(wit.g.size()) == wit.g);
    const letter y = wit.t.at(wit.g.size());
    r.next_letter = y;
    word anchor;
    anchor.push_back(wit.x);
    anchor = anchor + wit.g;
    anchor.push_back(y);
    r.anchor_unique = (occur(wit.w2 + anchor, anchor) == 1);

    const std::size_t marks_w1 = count_letter(wit.w1, wit.x);
    const std::size_t marks_w2 = count_letter(wit.w2, wit.x);
    r.marker_balance = marks_w2 >= marks_w1;
    r.marker_balance_strict = marks_w2 > marks_w1;
    return r;
}

right_infinite_word splice(const gamma_witness& wit, int k, const power_bound& b,
                           const search_limits& lim) {
    const gamma_property_report r = check_gamma(wit, k, b, lim);
    if (!r.all()) {
        throw std::invalid_argument("splice: witness does not satisfy the defining properties");
    }
    word head = wit.w1 + wit.w2;
    head.push_back(wit.x);
    return right_infinite_word::head_tail(head, wit.t);
}

gamma_witness build_gamma(const word& target, const structured_infinite_word& ubar, letter x,
                          const right_infinite_word& t, int k, const power_bound& b,
                          const search_limits& lim) {
    if (static_cast<int>(x) >= k) {
        throw std::invalid_argument("build_gamma: marker outside the alphabet");
    }
    if (ubar.composite().prefix(target.size()) != target) {
        throw std::invalid_argument("build_gamma: target is not a prefix of the source word");
    }
    word marker;
    marker.push_back(x);
    if (!factor_in(ubar.tail(), marker, lim)) {
        throw std::invalid_argument("build_gamma: the marker does not recur in the source");
    }
    require_marker_out_of_tail(t, x, lim, "build_gamma");

    const detail::factor_view view = structured_view(ubar, lim);
    auto t_prefix = [t](std::size_t n) { return t.prefix(n); };
    const detail::gamma_parts parts = detail::build_gamma_parts(view, target, x, t_prefix, lim);
    gamma_witness wit{parts.w1, parts.w2, parts.g, x, t, {}};
    wit.report = check_gamma(wit, k, b, lim);

    word covered = wit.w1 + wit.w2;
    covered.push_back(x);
    covered = covered + wit.g;
    // The source queries are exact here, so a failure is a defect, not an
    // unlucky window.
    if (!wit.report.all()) {
        throw std::logic_error("build_gamma: constructed witness failed validation");
    }
    if (!is_prefix(target, covered)) {
        throw std::logic_error("build_gamma: target escaped the constructed blocks");
    }
    return wit;
}

gamma_witness build_gamma_reversed(const word& reversed_target,
                                   const structured_infinite_word& vbar_reversed, letter x,
                                   const left_infinite_word& tbar, int k, const power_bound& b,
                                   const search_limits& lim) {
    return build_gamma(reversed_target, vbar_reversed, x, tbar.right_view(), k, b, lim);
}

gamma_witness build_gamma(const word& target, const right_infinite_word& ubar, letter x,
                          const right_infinite_word& t, int k, const power_bound& b,
                          const search_limits& lim) {
    if (static_cast<int>(x) >= k) {
        throw std::invalid_argument("build_gamma: marker outside the alphabet");
    }
    if (ubar.prefix(target.size()) != target) {
        throw std::invalid_argument("build_gamma: target is not a prefix of the source word");
    }
    require_marker_out_of_tail(t, x, lim, "build_gamma");
    return detail::cut_blocks_windowed(ubar, target, x, t, k, b, lim);
}

gamma_witness build_gamma_reversed(const word& reversed_target,
                                   const right_infinite_word& vbar_reversed, letter x,
                                   const left_infinite_word& tbar, int k, const power_bound& b,
                                   const search_limits& lim) {
    return build_gamma(reversed_target, vbar_reversed, x, tbar.right_view(), k, b, lim);
}

}  // namespace pfw
