#pragma once

#include <compare>
#include <numeric>
#include <ostream>
#include <string>

#include "dcrt/checked.hpp"
#include "dcrt/errors.hpp"

namespace dcrt {

/// Exact fraction in lowest terms with a positive denominator.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(integer value) : num_(value) {}  // NOLINT(google-explicit-constructor)

    constexpr Rational(integer numerator, integer denominator) {
        if (denominator == 0) {
            throw invalid_input("rational with zero denominator");
        }
        if (denominator < 0) {
            numerator = checked_sub<integer>(0, numerator);
            denominator = checked_sub<integer>(0, denominator);
        }
        const integer g = std::gcd(numerator, denominator);
        num_ = numerator / g;
        den_ = denominator / g;
    }

    constexpr integer numerator() const noexcept { return num_; }
    constexpr integer denominator() const noexcept { return den_; }

    /// Largest integer not exceeding the value.
    constexpr integer floor() const noexcept { return floor_div(num_, den_); }

    friend constexpr bool operator==(const Rational&, const Rational&) = default;

    friend constexpr std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept {
        using wide = __int128;
        return static_cast<wide>(lhs.num_) * rhs.den_ <=> static_cast<wide>(rhs.num_) * lhs.den_;
    }

    friend constexpr Rational operator-(const Rational& lhs, const Rational& rhs) {
        const integer g = std::gcd(lhs.den_, rhs.den_);
        const integer den = checked_mul(lhs.den_ / g, rhs.den_);
        return {checked_sub(checked_mul(lhs.num_, rhs.den_ / g), checked_mul(rhs.num_, lhs.den_ / g)), den};
    }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    integer num_{0};
    integer den_{1};
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

/// Distance from x to the nearest integer, in [0, 1/2].
[[nodiscard]] constexpr Rational circle_distance(const Rational& x) {
    const Rational frac = x - Rational(x.floor());
    const Rational rest = Rational(1) - frac;
    return frac < rest ? frac : rest;
}

}  // namespace dcrt
