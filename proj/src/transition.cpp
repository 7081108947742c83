#include "pfw/transition.hpp"

#include "pfw/extend.hpp"
#include "pfw/repetition.hpp"

#include "gamma_core.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace pfw {

namespace {

/// Probe occurrences past which a letter counts as visibly recurrent, letting
/// a side cut its blocks straight from its extension stream.
constexpr std::size_t marker_recurrence_threshold = 8;

}  // namespace

side_assembly assemble_sides(const word& u, const word& v, int k, const power_bound& b,
                             const search_limits& lim) {
    if (k < 1 || k > max_alphabet) {
        throw std::invalid_argument("assemble_sides: alphabet size out of range: " +
                                    std::to_string(k));
    }
    if (!in_upsilon(k, b)) {
        throw unsupported_parameters("assemble_sides: unsupported parameters: k=" +
                                     std::to_string(k) + ", bound=" + b.str());
    }
    if (!letters_below(u, k) || !letters_below(v, k)) {
        throw std::invalid_argument("assemble_sides: words use letters outside the alphabet");
    }
    if (!is_power_free(u, b)) {
        throw std::invalid_argument("assemble_sides: u is not power-free");
    }
    if (!is_power_free(v, b)) {
        throw std::invalid_argument("assemble_sides: v is not power-free");
    }
    const extend_verdict pr = right_extendable(u, k, b, lim.probe_depth, lim);
    if (pr.status == extend_status::not_extendable) {
        throw not_extendable_error("assemble_sides: u admits no rightward power-free extension");
    }
    if (pr.status == extend_status::undecided) {
        throw undecided_error("assemble_sides: rightward extendability probe ran out of budget");
    }
    const extend_verdict pl = left_extendable(v, k, b, lim.probe_depth, lim);
    if (pl.status == extend_status::not_extendable) {
        throw not_extendable_error("assemble_sides: v admits no leftward power-free extension");
    }
    if (pl.status == extend_status::undecided) {
        throw undecided_error("assemble_sides: leftward extendability probe ran out of budget");
    }

    const int marker = lim.marker_letter.value_or(k - 1);
    if (marker < 0 || marker >= k) {
        throw std::invalid_argument("assemble_sides: marker letter outside the alphabet");
    }
    const letter x = static_cast<letter>(marker);

    const right_infinite_word t = base_word_avoiding(k, b, x);
    left_infinite_word tbar = left_limit(t, lim);

    // Cut each side's splice blocks against the marker-free stream.  Two
    // validated candidates compete: one cut from a stream rebased onto a
    // marker-recurrent shape, and — when the marker is already seen recurring
    // in the side's own extension stream — one cut straight from that stream,
    // confined to the probe window.  The shorter cut wins, since every
    // downstream piece of the splice scales with it.
    auto cut_side = [&](const word& target, const right_infinite_word& tt) -> gamma_witness {
        const right_infinite_word s = extension_stream(target, k, b, lim);
        const word probe = s.prefix(std::max(lim.probe_window, target.size() + 1));
        const auto marks = std::count(probe.letters().begin(), probe.letters().end(), x);
        const bool direct = static_cast<std::size_t>(marks) >= marker_recurrence_threshold;

        std::optional<gamma_witness> best;
        auto consider = [&](gamma_witness wit) {
            const std::size_t cut = wit.w1.size() + wit.w2.size();
            if (!best || cut < best->w1.size() + best->w2.size()) best = std::move(wit);
        };
        std::exception_ptr rebase_error;
        try {
            const structured_infinite_word rebased = force_recurrent_letter(target, x, k, b, lim);
            consider(build_gamma(target, rebased, x, tt, k, b, lim));
        } catch (const undecided_error&) {
            rebase_error = std::current_exception();
        }
        if (direct) {
            search_limits narrow = lim;
            narrow.stream_window = 0;
            try {
                consider(build_gamma(target, s, x, tt, k, b, narrow));
            } catch (const undecided_error&) {
                // The probe window could not confirm a direct cut.
            } catch (const std::invalid_argument&) {
                // The classification horizon hid every marker occurrence.
            }
        }
        if (best) return *std::move(best);
        if (direct) {
            // Last resort: the direct cut over the full stream window.
            return build_gamma(target, s, x, tt, k, b, lim);
        }
        std::rethrow_exception(rebase_error);
    };
    gamma_witness right_wit = cut_side(u, t);
    gamma_witness left_wit = cut_side(reverse(v), tbar.right_view());

    const word u_tilde = right_wit.w1 + right_wit.w2;
    const word v_tilde = reverse(left_wit.w1 + left_wit.w2);
    return {u_tilde, v_tilde,  x, t, std::move(tbar), std::move(right_wit), std::move(left_wit)};
}

word choose_p(const left_infinite_word& tbar, std::size_t len_ux, std::size_t len_xv,
              std::size_t len_u, std::size_t len_v) {
    const std::size_t m = std::max(std::max(len_ux, len_xv), std::max(len_u, len_v)) + 1;
    return tbar.suffix(m);
}

word choose_h(const right_infinite_word& t, const word& p, const search_limits& lim) {
    if (p.empty()) throw std::invalid_argument("choose_h: p must be nonempty");
    const auto s = detail::scan_occurrence(t, p, p.size() + 1, lim.occurrence_scan_cap, lim);
    if (!s) {
        throw undecided_error("choose_h: no occurrence of p beyond the first |p|+1 positions "
                              "within the scan cap");
    }
    return t.prefix(*s);
}

std::string transition_certificate::render() const {
    std::ostringstream out;
    out << "k: " << k << "\n";
    out << "bound: " << bound.str() << "\n";
    out << "u: " << u.str() << "\n";
    out << "v: " << v.str() << "\n";
    out << "w: " << w.str() << "\n";
    out << "full_word: " << full_word.str() << "\n";
    out << "x: " << letter_to_char(x) << "\n";
    out << "u_tilde: " << u_tilde.str() << "\n";
    out << "v_tilde: " << v_tilde.str() << "\n";
    out << "h: " << h.str() << "\n";
    out << "p: " << p.str() << "\n";
    out << "g_right: " << g_right.str() << "\n";
    out << "g_left: " << g_left.str() << "\n";
    out << "limit_probe_depth: " << limits_used.probe_depth << "\n";
    out << "limit_probe_window: " << limits_used.probe_window << "\n";
    out << "limit_stream_slack: " << limits_used.stream_slack << "\n";
    out << "limit_stream_window: " << limits_used.stream_window << "\n";
    out << "limit_search_nodes: " << limits_used.search_nodes << "\n";
    out << "limit_occurrence_scan_cap: " << limits_used.occurrence_scan_cap << "\n";
    const auto flag = [&](const char* name, bool value) {
        out << name << ": " << (value ? "true" : "false") << "\n";
    };
    flag("full_word_power_free", full_word_power_free);
    flag("u_is_prefix", u_is_prefix);
    flag("v_is_suffix", v_is_suffix);
    flag("p_long_enough", p_long_enough);
    flag("h_longer_than_p", h_longer_than_p);
    flag("hp_prefix_of_t", hp_prefix_of_t);
    flag("p_suffix_of_tbar", p_suffix_of_tbar);
    flag("marker_twice", marker_twice);
    flag("verified", verified());
    return out.str();
}

transition_certificate build_transition(const word& u, const word& v, int k,
                                        const power_bound& b, const search_limits& lim) {
    const side_assembly sides = assemble_sides(u, v, k, b, lim);

    const word p = choose_p(sides.tbar, sides.u_tilde.size() + 1, sides.v_tilde.size() + 1,
                            u.size(), v.size());
    const word h = choose_h(sides.t, p, lim);

    word full = sides.u_tilde;
    full.push_back(sides.x);
    full = full + h + p;
    full.push_back(sides.x);
    full = full + sides.v_tilde;

    transition_certificate cert;
    cert.k = k;
    cert.bound = b;
    cert.u = u;
    cert.v = v;
    cert.full_word = full;
    cert.x = sides.x;
    cert.u_tilde = sides.u_tilde;
    cert.v_tilde = sides.v_tilde;
    cert.h = h;
    cert.p = p;
    cert.g_right = sides.right_witness.g;
    cert.g_left = reverse(sides.left_witness_reversed.g);
    cert.limits_used = lim;

    if (full.size() < u.size() + v.size()) {
        throw std::logic_error("build_transition: spliced word shorter than its endpoints");
    }
    cert.w = full.sub(u.size(), full.size() - u.size() - v.size());

    cert.full_word_power_free = is_power_free(full, b);
    cert.u_is_prefix = is_prefix(u, full);
    cert.v_is_suffix = is_suffix(v, full);
    cert.p_long_enough = p.size() > sides.u_tilde.size() + 1 &&
                         p.size() > sides.v_tilde.size() + 1 && p.size() > u.size() &&
                         p.size() > v.size();
    cert.h_longer_than_p = h.size() > p.size();
    cert.hp_prefix_of_t = (sides.t.prefix(h.size() + p.size()) == h + p);
    cert.p_suffix_of_tbar = (sides.tbar.suffix(p.size()) == p);
    word joint;
    joint.push_back(sides.x);
    joint = joint + h + p;
    joint.push_back(sides.x);
    cert.marker_twice =
        (std::count(joint.letters().begin(), joint.letters().end(), sides.x) == 2);

    if (!cert.verified()) {
        throw std::logic_error("build_transition: certificate failed verification:\n" +
                               cert.render());
    }
    return cert;
}

std::optional<word> minimal_transition_oracle(const word& u, const word& v, int k,
                                              const power_bound& b, std::size_t max_len,
                                              const search_limits& lim) {
    if (k < 1 || k > max_alphabet) {
        throw std::invalid_argument("minimal_transition_oracle: alphabet size out of range: " +
                                    std::to_string(k));
    }
    if (!letters_below(u, k) || !letters_below(v, k)) {
        throw std::invalid_argument(
            "minimal_transition_oracle: words use letters outside the alphabet");
    }
    if (!is_power_free(u, b) || !is_power_free(v, b)) {
        throw std::invalid_argument("minimal_transition_oracle: endpoints must be power-free");
    }
    if (max_len > lim.enumerate_max_length) {
        throw resource_limit_error("minimal_transition_oracle: max_len exceeds the configured "
                                   "maximum of " +
                                   std::to_string(lim.enumerate_max_length));
    }
    std::uint64_t nodes = 0;
    for (std::size_t len = 0; len <= max_len; ++len) {
        power_free_builder bld(b);
        for (letter c : u.letters()) bld.push(c);
        std::optional<word> found;
        // Lexicographic depth-first scan over candidate middles, pruning any
        // u·w prefix that already violates the bound.
        std::function<bool()> rec = [&]() -> bool {
            if (bld.size() == u.size() + len) {
                const word w = bld.snapshot().sub(u.size(), len);
                if (is_power_free(u + w + v, b)) {
                    found = w;
                    return true;
                }
                return false;
            }
            for (int c = 0; c < k; ++c) {
                if (++nodes > lim.search_nodes) {
                    throw resource_limit_error("minimal_transition_oracle: node budget exhausted");
                }
                if (bld.push(static_cast<letter>(c))) {
                    if (rec()) return true;
                    bld.pop();
                }
            }
            return false;
        };
        if (rec()) return found;
    }
    return std::nullopt;
}

}  // namespace pfw
