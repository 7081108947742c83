#include "pfw/repetition.hpp"

#include <algorithm>
#include <stdexcept>

namespace pfw {

namespace {

/// Shortest period of s[i, i+len): smallest p with s[j] == s[j+p] throughout.
std::size_t shortest_period_direct(const std::vector<letter>& s, std::size_t i, std::size_t len) {
    for (std::size_t p = 1; p < len; ++p) {
        bool ok = true;
        for (std::size_t j = i; j + p < i + len; ++j) {
            if (s[j] != s[j + p]) {
                ok = false;
                break;
            }
        }
        if (ok) return p;
    }
    return len;
}

/// Minimal length of a word that, having period p, already violates the
/// bound: ceil(alpha p) for plain bounds, floor(alpha p) + 1 for '+' bounds.
std::size_t min_violating_length(const power_bound& b, std::size_t p) {
    const auto num = static_cast<__int128>(b.alpha.num());
    const auto den = static_cast<__int128>(b.alpha.den());
    const __int128 t = num * static_cast<__int128>(p);
    __int128 len = b.plus ? t / den + 1 : (t + den - 1) / den;
    if (len < 1) len = 1;
    return static_cast<std::size_t>(len);
}

}  // namespace

rational word_exponent(const word& w) {
    if (w.empty()) throw std::invalid_argument("word_exponent: undefined for the empty word");
    const auto& s = w.letters();
    const std::size_t n = s.size();
    // Longest border via the standard prefix-function recurrence.
    std::vector<std::size_t> border(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t k = border[i - 1];
        while (k > 0 && s[i] != s[k]) k = border[k - 1];
        if (s[i] == s[k]) ++k;
        border[i] = k;
    }
    return {static_cast<std::int64_t>(n), static_cast<std::int64_t>(n - border[n - 1])};
}

exponent_report max_factor_exponent(const word& w) {
    if (w.empty()) throw std::invalid_argument("max_factor_exponent: undefined for the empty word");
    const auto& s = w.letters();
    const std::size_t n = s.size();
    exponent_report best;  // every single letter attains exponent 1
    std::vector<std::size_t> ext(n + 1, 0);
    for (std::size_t p = 1; p < n; ++p) {
        // ext[i] = longest common extension of positions i and i+p.
        ext[n - p] = 0;
        for (std::size_t i = n - p; i-- > 0;) {
            ext[i] = (s[i] == s[i + p]) ? ext[i + 1] + 1 : 0;
        }
        for (std::size_t i = 0; i + p < n; ++i) {
            if (ext[i] == 0) continue;
            const std::size_t len = p + ext[i];  // maximal p-periodic run at i
            const rational e(static_cast<std::int64_t>(len), static_cast<std::int64_t>(p));
            if (e > best.max_exponent ||
                (e == best.max_exponent &&
                 (i < best.span_begin || (i == best.span_begin && p < best.witness_period)))) {
                best = {e, p, i, i + len};
            }
        }
    }
    return best;
}

bool power_free_builder::push(letter c) {
    letters_.push_back(c);
    if (last_letter_violates()) {
        letters_.pop_back();
        return false;
    }
    return true;
}

void power_free_builder::pop() {
    if (letters_.empty()) throw std::out_of_range("power_free_builder: pop on empty");
    letters_.pop_back();
}

bool power_free_builder::last_letter_violates() const {
    const std::size_t n = letters_.size();
    for (std::size_t p = 1; p <= n; ++p) {
        const std::size_t len = min_violating_length(bound_, p);
        if (len > n) break;  // nondecreasing in p, so no later period fits either
        // Does the length-len suffix have period p?  If so, its exponent
        // (len over its shortest period) already breaks the bound.
        bool periodic = true;
        for (std::size_t j = n; j-- > n - len + p;) {
            if (letters_[j] != letters_[j - p]) {
                periodic = false;
                break;
            }
        }
        if (periodic) return true;
    }
    return false;
}

bool is_power_free(const word& w, const power_bound& b) {
    const auto& s = w.letters();
    const std::size_t n = s.size();
    if (n == 0) return true;
    // Exponent 1 is attained by every letter, so the plain bound 1 rejects
    // every nonempty word (and the run scan below only sees exponents > 1).
    if (!b.plus && b.alpha == rational(1)) return false;
    std::vector<std::size_t> ext(n + 1, 0);
    for (std::size_t p = 1; p < n; ++p) {
        const std::size_t len_min = min_violating_length(b, p);
        if (len_min > n) break;  // thresholds grow with p, so no later period fits
        ext[n - p] = 0;
        for (std::size_t i = n - p; i-- > 0;) {
            ext[i] = (s[i] == s[i + p]) ? ext[i + 1] + 1 : 0;
            // The maximal p-periodic run at i realizes exponent (p+ext)/p.
            if (p + ext[i] >= len_min) return false;
        }
    }
    return true;
}

rational naive_word_exponent(const word& w) {
    if (w.empty()) throw std::invalid_argument("naive_word_exponent: undefined for the empty word");
    const std::size_t p = shortest_period_direct(w.letters(), 0, w.size());
    return {static_cast<std::int64_t>(w.size()), static_cast<std::int64_t>(p)};
}

exponent_report naive_max_factor_exponent(const word& w) {
    if (w.empty()) {
        throw std::invalid_argument("naive_max_factor_exponent: undefined for the empty word");
    }
    const auto& s = w.letters();
    const std::size_t n = s.size();
    exponent_report best;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t len = 1; i + len <= n; ++len) {
            const std::size_t p = shortest_period_direct(s, i, len);
            const rational e(static_cast<std::int64_t>(len), static_cast<std::int64_t>(p));
            // Scanning starts ascending and lengths ascending, the first
            // factor attaining the final maximum realizes the tie-breaks.
            if (e > best.max_exponent) best = {e, p, i, i + len};
        }
    }
    return best;
}

bool naive_is_power_free(const word& w, const power_bound& b) {
    const auto& s = w.letters();
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t len = 1; i + len <= n; ++len) {
            const std::size_t p = shortest_period_direct(s, i, len);
            const rational e(static_cast<std::int64_t>(len), static_cast<std::int64_t>(p));
            if (violates(b, e)) return false;
        }
    }
    return true;
}

std::optional<pi_witness> find_pi_witness(const word& u, const word& v) {
    for (std::size_t lv = 1; lv <= v.size(); ++lv) {
        const word s = u + v.prefix(lv);
        const auto& a = s.letters();
        const std::size_t n = a.size();
        for (std::size_t lr = lv / 2 + 1; 2 * lr <= n; ++lr) {
            // Suffix of length 2 lr must read rr; it then leaves v's prefix
            // (2 lr > lv), reaching back into u.
            bool square = true;
            for (std::size_t j = 0; j < lr; ++j) {
                if (a[n - 2 * lr + j] != a[n - lr + j]) {
                    square = false;
                    break;
                }
            }
            if (square) return pi_witness{s.sub(n - 2 * lr, lr), v.prefix(lv)};
        }
    }
    return std::nullopt;
}

bool assert_concat_safe(const word& u, const word& v, const power_bound& b) {
    if (!find_pi_witness(u, v)) return true;
    return is_power_free(u + v, b);
}

}  // namespace pfw
