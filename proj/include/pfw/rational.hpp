#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pfw {

/// Exact rational number, always normalized (gcd-reduced, positive
/// denominator).  Comparisons are integer cross-multiplications; no floating
/// point is involved anywhere.
class rational {
public:
    constexpr rational() = default;
    constexpr rational(std::int64_t n) : num_(n), den_(1) {}
    rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    [[nodiscard]] constexpr std::int64_t num() const { return num_; }
    [[nodiscard]] constexpr std::int64_t den() const { return den_; }

    friend bool operator==(const rational& a, const rational& b) = default;
    friend std::strong_ordering operator<=>(const rational& a, const rational& b) {
        // 128-bit cross products: safe for any pair of normalized rationals.
        const auto l = static_cast<__int128>(a.num_) * b.den_;
        const auto r = static_cast<__int128>(b.num_) * a.den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    [[nodiscard]] std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ == 0) throw std::invalid_argument("rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace pfw
