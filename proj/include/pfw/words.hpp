#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace pfw {

using letter = std::uint8_t;

/// Largest alphabet representable in the canonical text encoding
/// (digits 0-9 followed by letters a-z).
inline constexpr int max_alphabet = 36;

/// The alphabet {0, 1, ..., size-1} of canonical letter indices.
struct alphabet {
    int size = 0;

    [[nodiscard]] bool contains(letter c) const { return static_cast<int>(c) < size; }
    friend bool operator==(const alphabet&, const alphabet&) = default;
};

[[nodiscard]] char letter_to_char(letter c);
[[nodiscard]] letter char_to_letter(char ch);

/// A finite word over canonical letters.  Ordering is lexicographic.
class word {
public:
    word() = default;
    explicit word(std::vector<letter> ls) : letters_(std::move(ls)) {}
    word(std::initializer_list<int> ls);

    [[nodiscard]] std::size_t size() const { return letters_.size(); }
    [[nodiscard]] bool empty() const { return letters_.empty(); }
    [[nodiscard]] letter operator[](std::size_t i) const { return letters_[i]; }
    [[nodiscard]] const std::vector<letter>& letters() const& { return letters_; }
    // Calling letters() on a temporary would hand out a dangling reference
    // (range-for does not extend the temporary's lifetime through a member
    // call), so reject it at compile time.
    const std::vector<letter>& letters() && = delete;

    void push_back(letter c) { letters_.push_back(c); }
    void pop_back() { letters_.pop_back(); }

    /// Copy of the length-len factor starting at pos; bounds-checked.
    [[nodiscard]] word sub(std::size_t pos, std::size_t len) const;
    [[nodiscard]] word prefix(std::size_t n) const { return sub(0, n); }
    [[nodiscard]] word suffix(std::size_t n) const { return sub(size() - n, n); }

    /// Canonical text form; empty string for the empty word.
    [[nodiscard]] std::string str() const;

    friend bool operator==(const word&, const word&) = default;
    friend auto operator<=>(const word& a, const word& b) { return a.letters_ <=> b.letters_; }
    friend word operator+(const word& a, const word& b);

private:
    std::vector<letter> letters_;
};

/// Parses the canonical encoding; rejects any character outside [0-9a-z].
[[nodiscard]] word parse_word(const std::string& text);

[[nodiscard]] word reverse(const word& w);

/// Smallest alphabet size containing every letter of w (0 for the empty word).
[[nodiscard]] int min_alphabet_size(const word& w);

/// True when every letter of w lies below k.
[[nodiscard]] bool letters_below(const word& w, int k);

/// Number of (possibly overlapping) occurrences of the nonempty factor f in w.
[[nodiscard]] std::size_t occur(const word& w, const word& f);

[[nodiscard]] bool is_prefix(const word& p, const word& w);
[[nodiscard]] bool is_suffix(const word& s, const word& w);

/// All prefixes of w in increasing length, starting with the empty word.
[[nodiscard]] std::vector<word> prefixes(const word& w);

/// All suffixes of w in increasing length, starting with the empty word.
[[nodiscard]] std::vector<word> suffixes(const word& w);

/// All distinct factors of w (including the empty word), sorted.
[[nodiscard]] std::vector<word> factors(const word& w);

}  // namespace pfw
