#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pfw/bounds.hpp"
#include "pfw/repetition.hpp"
#include "pfw/words.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

using namespace pfw;

namespace {

word word_from_index(unsigned long long idx, int k, std::size_t n) {
    std::vector<letter> ls(n);
    for (std::size_t i = 0; i < n; ++i) {
        ls[n - 1 - i] = static_cast<letter>(idx % static_cast<unsigned>(k));
        idx /= static_cast<unsigned>(k);
    }
    return word(std::move(ls));
}

unsigned long long pow_ull(int k, std::size_t n) {
    unsigned long long r = 1;
    for (std::size_t i = 0; i < n; ++i) r *= static_cast<unsigned>(k);
    return r;
}

}  // namespace

TEST_CASE("whole-word exponent equals length over shortest period") {
    CHECK(word_exponent(parse_word("0")) == rational(1));
    CHECK(word_exponent(parse_word("00")) == rational(2));
    CHECK(word_exponent(parse_word("010")) == rational(3, 2));
    CHECK(word_exponent(parse_word("0110")) == rational(4, 3));
    CHECK(word_exponent(parse_word("1234123")) == rational(7, 4));
    CHECK(word_exponent(parse_word("123412341234")) == rational(3));
    CHECK(word_exponent(parse_word("012")) == rational(1));
    CHECK_THROWS_AS((void)word_exponent(word()), std::invalid_argument);
}

TEST_CASE("maximal factor exponent reports the realizing span") {
    const exponent_report quarter = max_factor_exponent(parse_word("1234123"));
    CHECK(quarter.max_exponent == rational(7, 4));
    CHECK(quarter.witness_period == 4);
    CHECK(quarter.span_begin == 0);
    CHECK(quarter.span_end == 7);

    const exponent_report pair = max_factor_exponent(parse_word("0110"));
    CHECK(pair.max_exponent == rational(2));
    CHECK(pair.witness_period == 1);
    CHECK(pair.span_begin == 1);
    CHECK(pair.span_end == 3);

    CHECK(max_factor_exponent(parse_word("123412341234")).max_exponent == rational(3));
    CHECK(max_factor_exponent(parse_word("0")).max_exponent == rational(1));
    CHECK(max_factor_exponent(parse_word("012021012102")).max_exponent < rational(2));
    CHECK_THROWS_AS((void)max_factor_exponent(word()), std::invalid_argument);
}

TEST_CASE("optimized and reference exponent scans agree on all short ternary words") {
    for (std::size_t n = 1; n <= 7; ++n) {
        const unsigned long long total = pow_ull(3, n);
        for (unsigned long long idx = 0; idx < total; ++idx) {
            const word w = word_from_index(idx, 3, n);
            const exponent_report fast = max_factor_exponent(w);
            const exponent_report slow = naive_max_factor_exponent(w);
            REQUIRE(fast.max_exponent == slow.max_exponent);
            REQUIRE(fast.witness_period == slow.witness_period);
            REQUIRE(fast.span_begin == slow.span_begin);
            REQUIRE(fast.span_end == slow.span_end);
        }
    }
}

TEST_CASE("power-freeness verdicts match the reference on all short binary words") {
    const power_bound bounds[] = {parse_power_bound("2"), parse_power_bound("2+"),
                                  parse_power_bound("7/4"), parse_power_bound("3")};
    for (std::size_t n = 0; n <= 10; ++n) {
        const unsigned long long total = pow_ull(2, n);
        for (unsigned long long idx = 0; idx < total; ++idx) {
            const word w = word_from_index(idx, 2, n);
            for (const power_bound& b : bounds) {
                REQUIRE(is_power_free(w, b) == naive_is_power_free(w, b));
            }
        }
    }
}

TEST_CASE("power-freeness fixed points") {
    CHECK(is_power_free(word(), parse_power_bound("2")));
    CHECK(is_power_free(parse_word("012021012102"), parse_power_bound("2")));
    CHECK_FALSE(is_power_free(parse_word("00"), parse_power_bound("2")));
    CHECK(is_power_free(parse_word("00"), parse_power_bound("2+")));
    CHECK_FALSE(is_power_free(parse_word("000"), parse_power_bound("2+")));
    CHECK_FALSE(is_power_free(parse_word("1234123"), parse_power_bound("7/4")));
    CHECK(is_power_free(parse_word("1234123"), parse_power_bound("2")));
    CHECK_FALSE(is_power_free(parse_word("0"), parse_power_bound("1")));
    CHECK(is_power_free(parse_word("01"), parse_power_bound("1+")));
    CHECK_FALSE(is_power_free(parse_word("010"), parse_power_bound("1+")));
}

TEST_CASE("incremental builder accepts exactly the power-free continuations") {
    power_free_builder bld(parse_power_bound("2"));
    CHECK(bld.push(0));
    CHECK_FALSE(bld.push(0));  // 00 is a square
    CHECK(bld.size() == 1);    // the rejected push left the content alone
    CHECK(bld.push(1));
    CHECK(bld.push(0));
    CHECK_FALSE(bld.push(1));  // 0101 is a square
    CHECK(bld.push(2));
    CHECK(bld.snapshot() == parse_word("0102"));
    bld.pop();
    CHECK(bld.snapshot() == parse_word("010"));

    power_free_builder strict(parse_power_bound("7/4"));
    const word seed = parse_word("123412");
    for (letter c : seed.letters()) CHECK(strict.push(c));
    CHECK_FALSE(strict.push(3));  // 1234123 attains exponent 7/4

    power_free_builder empty_pop(parse_power_bound("2"));
    CHECK_THROWS_AS(empty_pop.pop(), std::out_of_range);
}

TEST_CASE("builder acceptance coincides with the whole-word verdict") {
    const power_bound bounds[] = {parse_power_bound("2"), parse_power_bound("2+"),
                                  parse_power_bound("7/4")};
    for (const power_bound& b : bounds) {
        for (std::size_t n = 1; n <= 6; ++n) {
            const unsigned long long total = pow_ull(3, n);
            for (unsigned long long idx = 0; idx < total; ++idx) {
                const word w = word_from_index(idx, 3, n);
                power_free_builder bld(b);
                bool accepted = true;
                for (letter c : w.letters()) {
                    if (!bld.push(c)) {
                        accepted = false;
                        break;
                    }
                }
                REQUIRE(accepted == is_power_free(w, b));
            }
        }
    }
}

TEST_CASE("smallest straddling square under a concatenation") {
    const auto w1 = find_pi_witness(parse_word("0"), parse_word("0"));
    REQUIRE(w1.has_value());
    CHECK(w1->r == parse_word("0"));
    CHECK(w1->v_prefix == parse_word("0"));

    const auto w2 = find_pi_witness(parse_word("01"), parse_word("01"));
    REQUIRE(w2.has_value());
    CHECK(w2->r == parse_word("01"));
    CHECK(w2->v_prefix == parse_word("01"));

    const auto w3 = find_pi_witness(parse_word("012"), parse_word("210"));
    REQUIRE(w3.has_value());
    CHECK(w3->r == parse_word("2"));
    CHECK(w3->v_prefix == parse_word("2"));

    CHECK_FALSE(find_pi_witness(parse_word("01"), parse_word("20")).has_value());
    CHECK_FALSE(find_pi_witness(word(), parse_word("010")).has_value());
    CHECK_FALSE(find_pi_witness(parse_word("010"), word()).has_value());
}

TEST_CASE("witness squares reach strictly back into the left word") {
    // 00 sits entirely inside v = 100, so it is no witness; the join is clean.
    const auto w = find_pi_witness(parse_word("1"), parse_word("100"));
    if (w) {
        CHECK(2 * w->r.size() > w->v_prefix.size());
        CHECK(is_suffix(w->r + w->r, parse_word("1") + w->v_prefix));
    }
}

TEST_CASE("absence of a witness square certifies safe concatenation") {
    const power_bound square = parse_power_bound("2");
    std::vector<word> words;
    for (std::size_t n = 0; n <= 4; ++n) {
        const unsigned long long total = pow_ull(3, n);
        for (unsigned long long idx = 0; idx < total; ++idx) {
            const word w = word_from_index(idx, 3, n);
            if (is_power_free(w, square)) words.push_back(w);
        }
    }
    for (const word& u : words) {
        for (const word& v : words) {
            if (!find_pi_witness(u, v)) {
                REQUIRE(naive_is_power_free(u + v, square));
            }
            REQUIRE(assert_concat_safe(u, v, square) == is_power_free(u + v, square));
        }
    }
}
