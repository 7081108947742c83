#include "pfw/words.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pfw {

char letter_to_char(letter c) {
    if (c < 10) return static_cast<char>('0' + c);
    if (c < max_alphabet) return static_cast<char>('a' + (c - 10));
    throw std::invalid_argument("letter_to_char: letter out of encodable range");
}

letter char_to_letter(char ch) {
    if (ch >= '0' && ch <= '9') return static_cast<letter>(ch - '0');
    if (ch >= 'a' && ch <= 'z') return static_cast<letter>(10 + (ch - 'a'));
    throw std::invalid_argument(std::string("char_to_letter: invalid character '") + ch + "'");
}

word::word(std::initializer_list<int> ls) {
    letters_.reserve(ls.size());
    for (int v : ls) {
        if (v < 0 || v >= max_alphabet) throw std::invalid_argument("word: letter out of range");
        letters_.push_back(static_cast<letter>(v));
    }
}

word word::sub(std::size_t pos, std::size_t len) const {
    if (pos > size() || len > size() - pos) throw std::out_of_range("word::sub: range out of bounds");
    return word(std::vector<letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

std::string word::str() const {
    std::string s;
    s.reserve(size());
    for (letter c : letters_) s.push_back(letter_to_char(c));
    return s;
}

word operator+(const word& a, const word& b) {
    std::vector<letter> ls;
    ls.reserve(a.size() + b.size());
    ls.insert(ls.end(), a.letters_.begin(), a.letters_.end());
    ls.insert(ls.end(), b.letters_.begin(), b.letters_.end());
    return word(std::move(ls));
}

word parse_word(const std::string& text) {
    std::vector<letter> ls;
    ls.reserve(text.size());
    for (char ch : text) ls.push_back(char_to_letter(ch));
    return word(std::move(ls));
}

word reverse(const word& w) {
    std::vector<letter> ls(w.letters().rbegin(), w.letters().rend());
    return word(std::move(ls));
}

int min_alphabet_size(const word& w) {
    int k = 0;
    for (letter c : w.letters()) k = std::max(k, static_cast<int>(c) + 1);
    return k;
}

bool letters_below(const word& w, int k) {
    for (letter c : w.letters())
        if (static_cast<int>(c) >= k) return false;
    return true;
}

std::size_t occur(const word& w, const word& f) {
    if (f.empty()) throw std::invalid_argument("occur: factor must be nonempty");
    if (f.size() > w.size()) return 0;
    std::size_t count = 0;
    const auto& ws = w.letters();
    const auto& fs = f.letters();
    for (std::size_t i = 0; i + fs.size() <= ws.size(); ++i) {
        if (std::equal(fs.begin(), fs.end(), ws.begin() + static_cast<std::ptrdiff_t>(i))) ++count;
    }
    return count;
}

bool is_prefix(const word& p, const word& w) {
    return p.size() <= w.size() &&
           std::equal(p.letters().begin(), p.letters().end(), w.letters().begin());
}

bool is_suffix(const word& s, const word& w) {
    return s.size() <= w.size() &&
           std::equal(s.letters().rbegin(), s.letters().rend(), w.letters().rbegin());
}

std::vector<word> prefixes(const word& w) {
    std::vector<word> out;
    out.reserve(w.size() + 1);
    for (std::size_t n = 0; n <= w.size(); ++n) out.push_back(w.prefix(n));
    return out;
}

std::vector<word> suffixes(const word& w) {
    std::vector<word> out;
    out.reserve(w.size() + 1);
    for (std::size_t n = 0; n <= w.size(); ++n) out.push_back(w.suffix(n));
    return out;
}

std::vector<word> factors(const word& w) {
    std::set<word> set;
    set.insert(word{});
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t len = 1; len + i <= w.size(); ++len) set.insert(w.sub(i, len));
    return std::vector<word>(set.begin(), set.end());
}

}  // namespace pfw
