#include "pfw/infinite.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>
#include <unordered_set>

namespace pfw {

word morphism::apply(const word& w) const {
    word out;
    for (letter c : w.letters()) {
        if (c >= images.size()) {
            throw std::invalid_argument("morphism: letter outside the domain: " +
                                        std::string(1, letter_to_char(c)));
        }
        out = out + images[c];
    }
    return out;
}

morphism thue_morse_morphism() { return {{word{0, 1}, word{1, 0}}}; }

morphism theta_morphism() { return {{word{0, 1, 2}, word{0, 2}, word{1}}}; }

struct right_infinite_word::impl {
    std::function<void(std::vector<letter>&, std::size_t)> grow;
    std::vector<letter> memo;
    std::optional<std::vector<letter>> support;
    bool uniformly_recurrent = false;
    std::optional<power_bound> certified;
    /// Recurrent core when it is a different stream (head-plus-tail shapes);
    /// a uniformly recurrent word is its own core.
    std::shared_ptr<right_infinite_word> core;

    void ensure(std::size_t n) {
        if (memo.size() >= n) return;
        grow(memo, n);
        if (memo.size() < n) {
            throw std::logic_error("right_infinite_word: producer failed to extend the memo");
        }
    }
};

letter right_infinite_word::at(std::size_t i) const {
    impl_->ensure(i + 1);
    return impl_->memo[i];
}

word right_infinite_word::prefix(std::size_t n) const {
    impl_->ensure(n);
    return word(std::vector<letter>(impl_->memo.begin(),
                                    impl_->memo.begin() + static_cast<std::ptrdiff_t>(n)));
}

const std::optional<std::vector<letter>>& right_infinite_word::support() const {
    return impl_->support;
}

bool right_infinite_word::uniformly_recurrent() const { return impl_->uniformly_recurrent; }

const std::optional<power_bound>& right_infinite_word::certified_bound() const {
    return impl_->certified;
}

std::optional<right_infinite_word> right_infinite_word::recurrent_core() const {
    if (impl_->uniformly_recurrent) return *this;
    if (impl_->core) return *impl_->core;
    return std::nullopt;
}

std::size_t right_infinite_word::memoized() const { return impl_->memo.size(); }

right_infinite_word right_infinite_word::from_generator(
    std::function<void(std::vector<letter>&, std::size_t)> grow,
    std::optional<std::vector<letter>> support, bool uniformly_recurrent,
    std::optional<power_bound> certified) {
    right_infinite_word w;
    w.impl_ = std::make_shared<impl>();
    w.impl_->grow = std::move(grow);
    w.impl_->support = std::move(support);
    if (w.impl_->support) std::sort(w.impl_->support->begin(), w.impl_->support->end());
    w.impl_->uniformly_recurrent = uniformly_recurrent;
    w.impl_->certified = std::move(certified);
    return w;
}

right_infinite_word right_infinite_word::head_tail(const word& head,
                                                   const right_infinite_word& tail) {
    if (head.empty()) return tail;
    std::optional<std::vector<letter>> support;
    if (tail.support()) {
        std::vector<letter> s = *tail.support();
        s.insert(s.end(), head.letters().begin(), head.letters().end());
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        support = std::move(s);
    }
    auto grow = [head, tail](std::vector<letter>& memo, std::size_t need) {
        while (memo.size() < need) {
            if (memo.size() < head.size()) {
                memo.push_back(head[memo.size()]);
            } else {
                memo.push_back(tail.at(memo.size() - head.size()));
            }
        }
    };
    right_infinite_word w = from_generator(std::move(grow), std::move(support), false, std::nullopt);
    auto core = tail.recurrent_core();
    if (core) w.impl_->core = std::make_shared<right_infinite_word>(*core);
    return w;
}

namespace {

/// Letters reachable from seed by repeatedly taking image letters.  All of
/// them genuinely occur in the fixed point.
std::vector<letter> reachable_letters(const morphism& m, letter seed) {
    std::array<bool, max_alphabet> in{};
    std::vector<letter> queue{seed};
    in[seed] = true;
    for (std::size_t q = 0; q < queue.size(); ++q) {
        const letter a = queue[q];
        if (a >= m.images.size() || m.images[a].empty()) {
            throw std::invalid_argument("fixed_point: reachable letter lacks a nonempty image");
        }
        for (letter b : m.images[a].letters()) {
            if (b >= max_alphabet) throw std::invalid_argument("fixed_point: image letter too large");
            if (!in[b]) {
                in[b] = true;
                queue.push_back(b);
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

/// Primitivity of the substitution restricted to the reachable letters: some
/// power of the incidence matrix is everywhere positive.  The power need
/// never exceed (r-1)^2 + 1 for an r-letter primitive matrix, so reaching
/// that exponent without full positivity is a definite no.
bool primitive_on(const morphism& m, const std::vector<letter>& letters) {
    const std::size_t r = letters.size();
    std::array<int, max_alphabet> idx{};
    for (std::size_t i = 0; i < r; ++i) idx[letters[i]] = static_cast<int>(i);
    std::vector<std::vector<bool>> b(r, std::vector<bool>(r, false));
    for (std::size_t i = 0; i < r; ++i) {
        for (letter c : m.images[letters[i]].letters()) b[i][static_cast<std::size_t>(idx[c])] = true;
    }
    auto all_positive = [&](const std::vector<std::vector<bool>>& x) {
        for (const auto& row : x) {
            for (bool v : row) {
                if (!v) return false;
            }
        }
        return true;
    };
    std::vector<std::vector<bool>> p = b;
    const std::size_t limit = (r - 1) * (r - 1) + 1;
    for (std::size_t step = 1; step <= limit; ++step) {
        if (all_positive(p)) return true;
        // p = p * b (boolean)
        std::vector<std::vector<bool>> next(r, std::vector<bool>(r, false));
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) {
                if (!p[i][j]) continue;
                for (std::size_t l = 0; l < r; ++l) {
                    if (b[j][l]) next[i][l] = true;
                }
            }
        }
        p = std::move(next);
    }
    return false;
}

}  // namespace

right_infinite_word fixed_point(const morphism& m, letter seed) {
    if (seed >= m.images.size()) throw std::invalid_argument("fixed_point: seed outside the domain");
    const word& w0 = m.images[seed];
    if (w0.size() < 2 || w0[0] != seed) {
        throw std::invalid_argument(
            "fixed_point: morphism is not prolongable at the seed (image must start with the "
            "seed and have length at least 2)");
    }
    std::vector<letter> support = reachable_letters(m, seed);
    const bool recurrent = primitive_on(m, support);

    // Streaming expansion: memo stays phi(memo[0..expanded)), a prefix of the
    // fixed point; each step expands one more letter.
    struct state {
        morphism m;
        std::size_t expanded = 0;
    };
    auto st = std::make_shared<state>(state{m, 1});
    const word first = m.images[seed];
    auto grow = [st, first](std::vector<letter>& memo, std::size_t need) {
        if (memo.empty()) {
            memo.insert(memo.end(), first.letters().begin(), first.letters().end());
        }
        while (memo.size() < need) {
            const word& img = st->m.images[memo[st->expanded]];
            memo.insert(memo.end(), img.letters().begin(), img.letters().end());
            ++st->expanded;
        }
    };
    return right_infinite_word::from_generator(std::move(grow), std::move(support), recurrent,
                                               std::nullopt);
}

right_infinite_word thue_morse() {
    right_infinite_word w = fixed_point(thue_morse_morphism(), 0);
    w.impl_->certified = power_bound{rational(2), true};
    return w;
}

right_infinite_word theta_word() {
    right_infinite_word w = fixed_point(theta_morphism(), 0);
    w.impl_->certified = power_bound{rational(2), false};
    return w;
}

right_infinite_word relabel(const right_infinite_word& t,
                            const std::vector<std::pair<letter, letter>>& mapping) {
    if (!t.support()) {
        throw std::invalid_argument("relabel: stream lacks support metadata");
    }
    std::array<letter, max_alphabet> map{};
    map.fill(max_alphabet);
    std::array<bool, max_alphabet> hit{};
    for (const auto& [from, to] : mapping) {
        if (from >= max_alphabet || to >= max_alphabet) {
            throw std::invalid_argument("relabel: letter outside the canonical alphabet");
        }
        if (map[from] != max_alphabet) throw std::invalid_argument("relabel: duplicate source letter");
        if (hit[to]) throw std::invalid_argument("relabel: mapping is not injective");
        map[from] = to;
        hit[to] = true;
    }
    std::vector<letter> support;
    for (letter c : *t.support()) {
        if (map[c] == max_alphabet) {
            throw std::invalid_argument("relabel: mapping does not cover the stream's support");
        }
        support.push_back(map[c]);
    }
    auto grow = [t, map](std::vector<letter>& memo, std::size_t need) {
        while (memo.size() < need) memo.push_back(map[t.at(memo.size())]);
    };
    return right_infinite_word::from_generator(std::move(grow), std::move(support),
                                               t.uniformly_recurrent(), t.certified_bound());
}

right_infinite_word base_word_avoiding(int k, const power_bound& b, letter avoid,
                                       std::optional<letter> must_contain) {
    if (!in_upsilon(k, b)) {
        throw unsupported_parameters("base_word_avoiding: unsupported parameters: k=" +
                                     std::to_string(k) + ", bound=" + b.str());
    }
    if (k > max_alphabet) throw std::invalid_argument("base_word_avoiding: alphabet too large");
    if (static_cast<int>(avoid) >= k) {
        throw std::invalid_argument("base_word_avoiding: avoided letter outside the alphabet");
    }
    if (must_contain &&
        (static_cast<int>(*must_contain) >= k || *must_contain == avoid)) {
        throw std::invalid_argument("base_word_avoiding: required letter unavailable");
    }
    std::vector<letter> target;
    for (int c = 0; c < k; ++c) {
        if (static_cast<letter>(c) != avoid) target.push_back(static_cast<letter>(c));
    }
    const std::size_t base_size = (k == 3) ? 2 : 3;
    std::vector<letter> image(target.begin(), target.begin() + static_cast<std::ptrdiff_t>(base_size));
    if (must_contain && std::find(image.begin(), image.end(), *must_contain) == image.end()) {
        image.back() = *must_contain;  // required letter replaces the largest pick
        std::sort(image.begin(), image.end());
    }
    const right_infinite_word base = (k == 3) ? thue_morse() : theta_word();
    std::vector<std::pair<letter, letter>> mapping;
    for (std::size_t i = 0; i < image.size(); ++i) {
        mapping.emplace_back(static_cast<letter>(i), image[i]);
    }
    return relabel(base, mapping);
}

namespace {

/// Number of distinct length-len factors, counted through 64-bit rolling
/// hashes (collisions are astronomically unlikely at these sizes).
std::size_t distinct_factor_count(const std::vector<letter>& s, std::size_t len) {
    if (len == 0 || s.size() < len) return 0;
    constexpr std::uint64_t base = 0x100000001b3ULL;
    std::uint64_t top = 1;
    for (std::size_t i = 1; i < len; ++i) top *= base;
    std::uint64_t h = 0;
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(s.size() - len + 1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i >= len) h -= top * s[i - len];
        h = h * base + s[i];
        if (i + 1 >= len) seen.insert(h);
    }
    return seen.size();
}

}  // namespace

bool factor_in(const right_infinite_word& t, const word& f, const search_limits& lim) {
    const auto core = t.recurrent_core();
    if (!core) {
        throw std::invalid_argument("factor_in: stream has no uniformly recurrent core");
    }
    if (f.empty()) return true;
    if (core->support()) {
        const auto& sup = *core->support();
        for (letter c : f.letters()) {
            if (!std::binary_search(sup.begin(), sup.end(), c)) return false;
        }
    }
    std::size_t win = std::max(lim.factor_window_start, 8 * f.size());
    win = std::min(win, lim.factor_window_cap);
    std::optional<std::size_t> prev;
    int stable = 0;
    for (;;) {
        const word pref = core->prefix(win);
        const auto& hay = pref.letters();
        const auto& pat = f.letters();
        const auto hit = std::search(hay.begin(), hay.end(),
                                     std::boyer_moore_horspool_searcher(pat.begin(), pat.end()));
        if (hit != hay.end()) return true;
        // No occurrence: accept as final once the factor set of this length
        // stops growing across two consecutive window doublings.
        const std::size_t cnt = distinct_factor_count(hay, f.size());
        if (prev && cnt == *prev) {
            if (++stable >= 2) return false;
        } else {
            stable = 0;
        }
        prev = cnt;
        if (win >= lim.factor_window_cap) {
            throw undecided_error(
                "factor_in: no occurrence found and the factor set kept growing at the window "
                "cap");
        }
        win = std::min(win * 2, lim.factor_window_cap);
    }
}

word left_infinite_word::suffix(std::size_t n) const { return reverse(rev_.prefix(n)); }

left_infinite_word left_limit(const right_infinite_word& t, const search_limits& lim) {
    const auto core = t.recurrent_core();
    if (!core) {
        throw std::invalid_argument("left_limit: stream has no uniformly recurrent core");
    }
    std::vector<letter> cands;
    if (core->support()) {
        cands = *core->support();
    } else {
        for (int c = 0; c < max_alphabet; ++c) cands.push_back(static_cast<letter>(c));
    }
    const right_infinite_word src = *core;
    auto grow = [src, cands, lim](std::vector<letter>& memo, std::size_t need) {
        while (memo.size() < need) {
            // memo holds the reversed suffix; a candidate extension is read
            // forward as (new letter) + (current suffix).
            std::vector<letter> cand(memo.size() + 1, 0);
            for (std::size_t i = 0; i < memo.size(); ++i) cand[i + 1] = memo[memo.size() - 1 - i];
            bool placed = false;
            for (letter c : cands) {
                cand[0] = c;
                if (factor_in(src, word(cand), lim)) {
                    memo.push_back(c);
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                throw undecided_error(
                    "left_limit: no leftward extension validated; factor windows may be too "
                    "small");
            }
        }
    };
    // Factors of the reversed reading are reversals of factors of the source,
    // so a certified bound carries over (exponents survive reversal).
    return left_infinite_word(right_infinite_word::from_generator(
        std::move(grow), core->support(), false, core->certified_bound()));
}

}  // namespace pfw
