#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pfw/bounds.hpp"
#include "pfw/extend.hpp"
#include "pfw/infinite.hpp"
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

TEST_CASE("enumeration counts ternary square-free words") {
    const power_bound square = parse_power_bound("2");
    const std::size_t expected[] = {1, 3, 6, 12, 18, 30, 42, 60};
    for (std::size_t n = 0; n <= 7; ++n) {
        CHECK(enumerate_power_free(3, square, n).size() == expected[n]);
    }
}

TEST_CASE("enumeration is sorted, complete, and correct") {
    const power_bound square = parse_power_bound("2");
    for (std::size_t n = 0; n <= 6; ++n) {
        const std::vector<word> got = enumerate_power_free(3, square, n);
        std::vector<word> expected;
        const unsigned long long total = pow_ull(3, n);
        for (unsigned long long idx = 0; idx < total; ++idx) {
            const word w = word_from_index(idx, 3, n);
            if (naive_is_power_free(w, square)) expected.push_back(w);
        }
        REQUIRE(got == expected);  // integer counting order is lexicographic
    }
    CHECK(enumerate_power_free(3, square, 2).front() == parse_word("01"));
}

TEST_CASE("enumeration handles degenerate alphabets and bounds") {
    CHECK(enumerate_power_free(1, parse_power_bound("2"), 1).size() == 1);
    CHECK(enumerate_power_free(1, parse_power_bound("2"), 2).empty());
    CHECK(enumerate_power_free(2, parse_power_bound("2"), 4).empty());
    CHECK(enumerate_power_free(2, parse_power_bound("2+"), 4).size() == 10);
    CHECK_THROWS_AS((void)enumerate_power_free(0, parse_power_bound("2"), 1),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)enumerate_power_free(3, parse_power_bound("2"), 200),
                    resource_limit_error);
}

TEST_CASE("parallel enumeration returns the sequential result") {
    const power_bound square = parse_power_bound("2");
    CHECK(enumerate_power_free(3, square, 7, {}, 4) == enumerate_power_free(3, square, 7));
    const power_bound overlap = parse_power_bound("2+");
    CHECK(enumerate_power_free(2, overlap, 10, {}, 3) == enumerate_power_free(2, overlap, 10));
}

TEST_CASE("a right-maximal square-free word is recognized as such") {
    const word w = parse_word("0102010");
    const power_bound square = parse_power_bound("2");
    const extend_verdict v = right_extendable(w, 3, square, 1);
    CHECK(v.status == extend_status::not_extendable);
    CHECK_FALSE(v.witness.has_value());
    for (int c = 0; c < 3; ++c) {
        word ext = w;
        ext.push_back(static_cast<letter>(c));
        CHECK_FALSE(is_power_free(ext, square));
    }
    // Dead verdicts persist at every larger depth: extensions nest.
    CHECK(right_extendable(w, 3, square, 5).status == extend_status::not_extendable);
}

TEST_CASE("extendability witnesses are verified extensions") {
    const power_bound square = parse_power_bound("2");
    const extend_verdict v = right_extendable(parse_word("010"), 3, square, 20);
    REQUIRE(v.status == extend_status::extendable_to_depth);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->size() == 23);
    CHECK(is_prefix(parse_word("010"), *v.witness));
    CHECK(is_power_free(*v.witness, square));

    const extend_verdict e = right_extendable(word(), 3, square, 10);
    REQUIRE(e.status == extend_status::extendable_to_depth);
    CHECK(e.witness->size() == 10);

    const extend_verdict zero = right_extendable(parse_word("010"), 3, square, 0);
    CHECK(zero.status == extend_status::extendable_to_depth);
    CHECK(*zero.witness == parse_word("010"));
}

TEST_CASE("left extendability mirrors the reversed search") {
    const power_bound square = parse_power_bound("2");
    const extend_verdict v = left_extendable(parse_word("010"), 3, square, 20);
    REQUIRE(v.status == extend_status::extendable_to_depth);
    REQUIRE(v.witness.has_value());
    CHECK(is_suffix(parse_word("010"), *v.witness));
    CHECK(is_power_free(*v.witness, square));

    // The input is a palindrome, so both sides give the same verdict.
    CHECK(left_extendable(parse_word("0102010"), 3, square, 1).status ==
          extend_status::not_extendable);
}

TEST_CASE("extendability rejects malformed inputs and respects budgets") {
    const power_bound square = parse_power_bound("2");
    CHECK_THROWS_AS((void)right_extendable(parse_word("00"), 3, square, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)left_extendable(parse_word("00"), 3, square, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)right_extendable(parse_word("3"), 3, square, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)right_extendable(parse_word("0"), 0, square, 1), std::invalid_argument);

    search_limits tiny;
    tiny.search_nodes = 2;
    CHECK(right_extendable(parse_word("0"), 3, square, 10, tiny).status ==
          extend_status::undecided);
}

TEST_CASE("extension streams emit verified power-free continuations") {
    const power_bound square = parse_power_bound("2");
    const right_infinite_word s = extension_stream(parse_word("0"), 3, square);
    const word p = s.prefix(50);
    CHECK(p[0] == 0);
    CHECK(is_power_free(p, square));

    const right_infinite_word e = extension_stream(word(), 3, square);
    CHECK(is_power_free(e.prefix(10), square));

    // Emitted letters are never revised.
    const word head = s.prefix(20);
    CHECK(s.prefix(60).prefix(20) == head);

    // Two independent streams of the same seed agree letter for letter.
    const right_infinite_word s2 = extension_stream(parse_word("0"), 3, square);
    CHECK(s2.prefix(50) == p);

    CHECK_THROWS_AS((void)extension_stream(parse_word("0102010"), 3, square),
                    not_extendable_error);
    CHECK_THROWS_AS((void)extension_stream(parse_word("00"), 3, square), std::invalid_argument);
}

TEST_CASE("structured words separate head, pivot, and recurrent tail") {
    const power_bound overlap = parse_power_bound("2+");
    const structured_infinite_word w(word(), 2, thue_morse(), 3, overlap);
    CHECK(w.boundary() == 1);
    CHECK(w.composite().prefix(5) == parse_word("20110"));
    CHECK(w.head().empty());
    CHECK(w.pivot() == 2);
    CHECK(w.tail().prefix(4) == parse_word("0110"));

    CHECK(w.is_factor(parse_word("2")));
    CHECK(w.is_factor(parse_word("2011")));
    CHECK(w.is_factor(parse_word("0110")));
    CHECK_FALSE(w.is_factor(parse_word("22")));
    CHECK_FALSE(w.is_factor(parse_word("0112")));
    CHECK_FALSE(w.is_factor(parse_word("111")));
    CHECK(w.is_factor(word()));

    CHECK(w.is_recurrent(parse_word("011")));
    CHECK_FALSE(w.is_recurrent(parse_word("2")));
    CHECK(w.is_recurrent(word()));
}

TEST_CASE("structured words with a nonempty head count crossing factors") {
    const power_bound overlap = parse_power_bound("2+");
    const structured_infinite_word w(parse_word("0"), 2, thue_morse(), 3, overlap);
    CHECK(w.boundary() == 2);
    CHECK(w.composite().prefix(6) == parse_word("020110"));
    CHECK(w.is_factor(parse_word("02")));
    CHECK(w.is_factor(parse_word("020")));
    CHECK_FALSE(w.is_recurrent(parse_word("020")));
    CHECK_FALSE(w.is_factor(parse_word("21")));
}

TEST_CASE("structured words validate their shape") {
    const power_bound overlap = parse_power_bound("2+");
    // The pivot may not occur in the tail.
    CHECK_THROWS_AS(structured_infinite_word(word(), 0, thue_morse(), 3, overlap),
                    std::invalid_argument);
    // The tail must be uniformly recurrent.
    CHECK_THROWS_AS(structured_infinite_word(
                        word(), 2, right_infinite_word::head_tail(parse_word("2"), thue_morse()),
                        3, overlap),
                    std::invalid_argument);
    // Letters must fit the alphabet.
    CHECK_THROWS_AS(structured_infinite_word(word(), 3, thue_morse(), 3, overlap),
                    std::invalid_argument);
    CHECK_THROWS_AS(structured_infinite_word(parse_word("3"), 2, thue_morse(), 3, overlap),
                    std::invalid_argument);
}

TEST_CASE("forcing a letter recurrent keeps the seed as a prefix") {
    const power_bound overlap = parse_power_bound("2+");
    const structured_infinite_word w = force_recurrent_letter(word(), 2, 3, overlap);
    const word p = w.composite().prefix(40);
    CHECK(is_power_free(p, overlap));
    CHECK(occur(p, parse_word("2")) >= 3);
    REQUIRE(w.tail().support().has_value());
    {
        bool has_wanted = false;
        for (letter c : *w.tail().support()) has_wanted = has_wanted || c == 2;
        CHECK(has_wanted);
    }

    const word u = parse_word("0");
    const structured_infinite_word f = force_recurrent_letter(u, 0, 4, parse_power_bound("2"));
    CHECK(is_prefix(u, f.composite().prefix(10)));
    REQUIRE(f.tail().support().has_value());
    bool tail_has_zero = false;
    for (letter c : *f.tail().support()) tail_has_zero = tail_has_zero || c == 0;
    CHECK(tail_has_zero);
    CHECK(is_power_free(f.composite().prefix(200), parse_power_bound("2")));
}

TEST_CASE("forced recurrence makes the wanted letter unbounded") {
    const power_bound b = parse_power_bound("5/2");
    const structured_infinite_word w = force_recurrent_letter(parse_word("01"), 1, 3, b);
    CHECK(is_prefix(parse_word("01"), w.composite().prefix(5)));
    std::size_t prev = 0;
    for (std::size_t n = 50; n <= 400; n *= 2) {
        const std::size_t cnt = occur(w.composite().prefix(n), parse_word("1"));
        CHECK(cnt > prev);
        prev = cnt;
    }
}

TEST_CASE("forcing rejects inadmissible parameters") {
    CHECK_THROWS_AS((void)force_recurrent_letter(word(), 0, 3, parse_power_bound("2")),
                    unsupported_parameters);
    CHECK_THROWS_AS((void)force_recurrent_letter(word(), 3, 3, parse_power_bound("2+")),
                    std::invalid_argument);
}
