#include "pfw/extend.hpp"

#include "pfw/gamma.hpp"

#include "gamma_core.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <functional>
#include <memory>
#include <stdexcept>
#include <thread>

namespace pfw {

namespace {

void validate_alphabet_size(int k, const char* who) {
    if (k < 1 || k > max_alphabet) {
        throw std::invalid_argument(std::string(who) + ": alphabet size out of range: " +
                                    std::to_string(k));
    }
}

/// Depth-first collection of all bound-respecting words of length n that
/// start with the given letter, in lexicographic order.
void collect_from(int k, const power_bound& b, std::size_t n, letter first,
                  const search_limits& lim, std::atomic<std::uint64_t>& nodes,
                  std::vector<word>& out) {
    power_free_builder bld(b);
    if (!bld.push(first)) return;
    std::function<void()> rec = [&] {
        if (bld.size() == n) {
            out.push_back(bld.snapshot());
            return;
        }
        for (int c = 0; c < k; ++c) {
            if (nodes.fetch_add(1, std::memory_order_relaxed) >= lim.search_nodes) {
                throw resource_limit_error("enumerate_power_free: node budget exhausted");
            }
            if (bld.push(static_cast<letter>(c))) {
                rec();
                bld.pop();
            }
        }
    };
    rec();
}

}  // namespace

std::vector<word> enumerate_power_free(int k, const power_bound& b, std::size_t n,
                                       const search_limits& lim, unsigned jobs) {
    validate_alphabet_size(k, "enumerate_power_free");
    if (n > lim.enumerate_max_length) {
        throw resource_limit_error("enumerate_power_free: length " + std::to_string(n) +
                                   " exceeds the configured maximum of " +
                                   std::to_string(lim.enumerate_max_length));
    }
    if (n == 0) return {word()};

    std::atomic<std::uint64_t> nodes{0};
    std::vector<std::vector<word>> per_letter(static_cast<std::size_t>(k));
    if (jobs <= 1) {
        for (int c = 0; c < k; ++c) {
            collect_from(k, b, n, static_cast<letter>(c), lim, nodes,
                         per_letter[static_cast<std::size_t>(c)]);
        }
    } else {
        std::atomic<int> next{0};
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(k));
        auto worker = [&] {
            for (;;) {
                const int c = next.fetch_add(1);
                if (c >= k) return;
                try {
                    collect_from(k, b, n, static_cast<letter>(c), lim, nodes,
                                 per_letter[static_cast<std::size_t>(c)]);
                } catch (...) {
                    errors[static_cast<std::size_t>(c)] = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        const unsigned width = std::min<unsigned>(jobs, static_cast<unsigned>(k));
        pool.reserve(width);
        for (unsigned i = 0; i < width; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        for (const auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }
    std::vector<word> out;
    for (auto& chunk : per_letter) {
        out.insert(out.end(), chunk.begin(), chunk.end());
    }
    return out;
}

extend_verdict right_extendable(const word& w, int k, const power_bound& b, std::size_t depth,
                                const search_limits& lim) {
    validate_alphabet_size(k, "right_extendable");
    if (!letters_below(w, k)) {
        throw std::invalid_argument("right_extendable: word uses letters outside the alphabet");
    }
    power_free_builder bld(b);
    for (letter c : w.letters()) {
        if (!bld.push(c)) {
            throw std::invalid_argument("right_extendable: input word is not power-free");
        }
    }
    if (depth == 0) return {extend_status::extendable_to_depth, 0, w};

    const std::size_t base = w.size();
    const std::size_t target = base + depth;
    std::vector<letter> tries(depth, 0);
    std::uint64_t nodes = 0;
    for (;;) {
        const std::size_t pos = bld.size();
        if (pos == target) return {extend_status::extendable_to_depth, depth, bld.snapshot()};
        letter& next = tries[pos - base];
        bool advanced = false;
        while (static_cast<int>(next) < k) {
            if (++nodes > lim.search_nodes) return {extend_status::undecided, depth, std::nullopt};
            const letter c = next++;
            if (bld.push(c)) {
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            next = 0;
            if (pos == base) return {extend_status::not_extendable, depth, std::nullopt};
            bld.pop();
        }
    }
}

extend_verdict left_extendable(const word& w, int k, const power_bound& b, std::size_t depth,
                               const search_limits& lim) {
    validate_alphabet_size(k, "left_extendable");
    if (!letters_below(w, k)) {
        throw std::invalid_argument("left_extendable: word uses letters outside the alphabet");
    }
    if (!is_power_free(w, b)) {
        throw std::invalid_argument("left_extendable: input word is not power-free");
    }
    // Exponents survive reversal, so left extensions are right extensions of
    // the reversed word.
    extend_verdict v = right_extendable(reverse(w), k, b, depth, lim);
    if (v.witness) v.witness = reverse(*v.witness);
    return v;
}

namespace {

/// Depth-first state of a lazily emitted power-free extension.
struct stream_state {
    power_free_builder bld;
    std::vector<letter> tries;  // next candidate letter per absolute position
    std::size_t committed = 0;  // letters already exposed; never revised
    int k = 0;
    search_limits lim;
    std::uint64_t nodes = 0;
};

/// Grows the builder to at least target letters without disturbing the
/// committed prefix.
void stream_fill(stream_state& st, std::size_t target) {
    if (st.tries.size() < target) st.tries.resize(target, 0);
    while (st.bld.size() < target) {
        const std::size_t pos = st.bld.size();
        letter& next = st.tries[pos];
        bool advanced = false;
        while (static_cast<int>(next) < st.k) {
            if (++st.nodes > st.lim.search_nodes) {
                throw resource_limit_error("extension_stream: node budget exhausted");
            }
            const letter c = next++;
            if (st.bld.push(c)) {
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            next = 0;
            if (pos <= st.committed) {
                throw undecided_error(
                    "extension_stream: search would revise an emitted letter; a larger "
                    "stream_slack is needed");
            }
            st.bld.pop();
        }
    }
}

}  // namespace

right_infinite_word extension_stream(const word& u, int k, const power_bound& b,
                                     const search_limits& lim) {
    validate_alphabet_size(k, "extension_stream");
    if (!letters_below(u, k)) {
        throw std::invalid_argument("extension_stream: word uses letters outside the alphabet");
    }
    if (!is_power_free(u, b)) {
        throw std::invalid_argument("extension_stream: input word is not power-free");
    }
    const extend_verdict probe = right_extendable(u, k, b, lim.probe_depth, lim);
    if (probe.status == extend_status::not_extendable) {
        throw not_extendable_error("extension_stream: the word admits no power-free extension");
    }
    if (probe.status == extend_status::undecided) {
        throw undecided_error("extension_stream: extendability probe exhausted its budget");
    }

    auto st = std::make_shared<stream_state>(stream_state{power_free_builder(b), {}, u.size(), k, lim, 0});
    for (letter c : u.letters()) st->bld.push(c);
    auto grow = [st](std::vector<letter>& memo, std::size_t need) {
        while (memo.size() < need) {
            const std::size_t idx = memo.size();
            if (idx >= st->committed) {
                stream_fill(*st, idx + 1 + st->lim.stream_slack);
                st->committed = idx + 1;
            }
            memo.push_back(st->bld[idx]);
        }
    };
    std::vector<letter> support;
    for (int c = 0; c < k; ++c) support.push_back(static_cast<letter>(c));
    return right_infinite_word::from_generator(std::move(grow), std::move(support), false, b);
}

namespace {

right_infinite_word make_composite(const word& head, letter pivot,
                                   const right_infinite_word& tail) {
    word h = head;
    h.push_back(pivot);
    return right_infinite_word::head_tail(h, tail);
}

}  // namespace

structured_infinite_word::structured_infinite_word(word head, letter pivot,
                                                   right_infinite_word tail, int k,
                                                   const power_bound& b,
                                                   const search_limits& lim)
    : head_(std::move(head)),
      pivot_(pivot),
      tail_(std::move(tail)),
      composite_(make_composite(head_, pivot_, tail_)) {
    validate_alphabet_size(k, "structured_infinite_word");
    if (!letters_below(head_, k) || static_cast<int>(pivot_) >= k) {
        throw std::invalid_argument("structured_infinite_word: letters outside the alphabet");
    }
    if (!tail_.uniformly_recurrent()) {
        throw std::invalid_argument("structured_infinite_word: tail must be uniformly recurrent");
    }
    if (!tail_.support()) {
        throw std::invalid_argument("structured_infinite_word: tail lacks support metadata");
    }
    for (letter c : *tail_.support()) {
        if (static_cast<int>(c) >= k) {
            throw std::invalid_argument("structured_infinite_word: tail letters outside the alphabet");
        }
        if (c == pivot_) {
            throw std::invalid_argument("structured_infinite_word: the pivot occurs in the tail");
        }
    }
    // Shape sanity: the joint region must not already break the bound.  Full
    // power-freeness is the construction's concern, checked there exactly.
    if (!is_power_free(composite_.prefix(boundary() + 64), b)) {
        throw std::invalid_argument("structured_infinite_word: joint region violates the bound");
    }
    (void)lim;
}

bool structured_infinite_word::is_factor(const word& f, const search_limits& lim) const {
    if (f.empty()) return true;
    // Occurrences either start before the tail (and then end within the
    // bounded joint region) or lie entirely in the tail.
    const word region = composite_.prefix(boundary() + f.size() - 1);
    const auto& hay = region.letters();
    const auto& pat = f.letters();
    if (std::search(hay.begin(), hay.end(), pat.begin(), pat.end()) != hay.end()) return true;
    return factor_in(tail_, f, lim);
}

bool structured_infinite_word::is_recurrent(const word& f, const search_limits& lim) const {
    return factor_in(tail_, f, lim);
}

structured_infinite_word force_recurrent_letter(const word& u, letter wanted, int k,
                                                const power_bound& b,
                                                const search_limits& lim) {
    if (!in_upsilon(k, b)) {
        throw unsupported_parameters("force_recurrent_letter: unsupported parameters: k=" +
                                     std::to_string(k) + ", bound=" + b.str());
    }
    if (static_cast<int>(wanted) >= k) {
        throw std::invalid_argument("force_recurrent_letter: wanted letter outside the alphabet");
    }
    const right_infinite_word s = extension_stream(u, k, b, lim);
    const std::size_t probe_len = std::max(lim.probe_window, u.size() + 1);
    const word probe = s.prefix(probe_len);

    // Pivot: the most frequent probe letter other than the wanted one (ties
    // to the smallest letter); it visibly recurs in the stream.
    std::array<std::size_t, max_alphabet> freq{};
    for (letter c : probe.letters()) ++freq[c];
    int pivot = -1;
    for (int c = 0; c < k; ++c) {
        if (static_cast<letter>(c) == wanted) continue;
        if (pivot < 0 || freq[static_cast<std::size_t>(c)] > freq[static_cast<std::size_t>(pivot)]) {
            pivot = c;
        }
    }
    if (pivot < 0 || freq[static_cast<std::size_t>(pivot)] < 2) {
        throw undecided_error("force_recurrent_letter: no recurring pivot letter in the probe");
    }
    const letter x = static_cast<letter>(pivot);
    const right_infinite_word tail = base_word_avoiding(k, b, x, wanted);
    const gamma_witness wit = detail::cut_blocks_windowed(s, u, x, tail, k, b, lim);
    return {wit.w1 + wit.w2, x, tail, k, b, lim};
}

}  // namespace pfw
