#pragma once

#include <concepts>
#include <string>

#include "dcrt/errors.hpp"

namespace dcrt {

template <std::integral T>
[[nodiscard]] constexpr T checked_add(T a, T b) {
    T out{};
    if (__builtin_add_overflow(a, b, &out)) {
        throw overflow_error("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
    }
    return out;
}

template <std::integral T>
[[nodiscard]] constexpr T checked_sub(T a, T b) {
    T out{};
    if (__builtin_sub_overflow(a, b, &out)) {
        throw overflow_error("integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
    }
    return out;
}

template <std::integral T>
[[nodiscard]] constexpr T checked_mul(T a, T b) {
    T out{};
    if (__builtin_mul_overflow(a, b, &out)) {
        throw overflow_error("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
    }
    return out;
}

/// Least non-negative residue of `value` modulo `modulus` (modulus > 0).
template <std::signed_integral T>
[[nodiscard]] constexpr T floor_mod(T value, T modulus) {
    T r = value % modulus;
    return r < 0 ? r + modulus : r;
}

/// Floor division for modulus > 0.
template <std::signed_integral T>
[[nodiscard]] constexpr T floor_div(T value, T modulus) {
    T q = value / modulus;
    return (value % modulus < 0) ? q - 1 : q;
}

}  // namespace dcrt
